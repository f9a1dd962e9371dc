import json

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from rsfans import examples as ex
from rsfans.poset import Poset
from rsfans.report import Report
from rsfans.ts import satisfies_condition_z


def divisor_poset(n):
    labels = tuple(str(i) for i in range(1, n + 1))
    leq = np.array([[j % i == 0 for j in range(1, n + 1)] for i in range(1, n + 1)])
    return Poset(labels, leq)


def test_hasse_against_transitive_reduction():
    P = divisor_poset(24)
    g = nx.DiGraph([(str(i), str(j)) for i in range(1, 25) for j in range(1, 25) if i != j and j % i == 0])
    assert set(P.hasse_names()) == set(nx.transitive_reduction(g).edges())


def test_poset_queries():
    P = divisor_poset(12)
    i = {lab: k for k, lab in enumerate(P.labels)}
    assert P.is_partial_order()
    assert P.glb(i["4"], i["6"]) == i["2"]
    assert P.lub(i["4"], i["6"]) == i["12"]
    assert P.lub(i["5"], i["7"]) is None
    assert P.minimal() == [i["1"]]
    assert not P.is_chain()
    assert P.width() == 6   # 7..12


def test_not_a_partial_order():
    leq = np.array([[True, True], [True, True]])
    assert not Poset(("a", "b"), leq).is_partial_order()


@settings(max_examples=30, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 7), st.integers(0, 7)), max_size=14))
def test_width_is_dilworth(pairs):
    g = nx.DiGraph()
    g.add_nodes_from(range(8))
    g.add_edges_from((a, b) for a, b in pairs if a < b)
    closure = nx.transitive_closure_dag(g)
    leq = np.eye(8, dtype=bool)
    for a, b in closure.edges():
        leq[a, b] = True
    P = Poset(tuple(map(str, range(8))), leq)
    comp = nx.complement(closure.to_undirected())
    assert P.width() == max(len(c) for c in nx.find_cliques(comp))


def test_report_json_schema():
    r = Report("demo")
    r.add("a", True)
    r.add("b", False, ["x", "y"], "note")
    data = r.to_json()
    assert data == json.loads(json.dumps(data))
    assert data["ok"] is False and data["results"]["b"]["witness"] == ["x", "y"]
    assert r.failures() == ["b"]
    assert "witness=(x, y)" in r.format()


def test_generated_corpus_is_deterministic():
    a = ex.generated_corpus(3, 10)
    b = ex.generated_corpus(3, 10)
    assert [G.names for G in a] == [G.names for G in b]
    assert len(a) == 10
    assert len({(G.presentation.generators, tuple(G.presentation.relation_strings())) for G in a}) == 10


@pytest.mark.parametrize("seed", [0, 1])
def test_cardinality_relation_on_generated_fans(seed):
    fans = [G for G in ex.generated_corpus(seed, 25) if satisfies_condition_z(G)[0]]
    assert fans
    for G in fans:
        assert ex.cardinality_relation(G)
    assert ex.cardinality_relation(ex.f2())


def test_golden_files_present():
    for kind, names in ex.GOLDEN.items():
        for name in names:
            nodes, edges = ex.golden(kind, name)
            assert nodes and edges
            assert all(a in nodes and b in nodes for a, b in edges)


def test_unknown_example():
    with pytest.raises(KeyError):
        ex.by_name("f9")
