import itertools
import re

import networkx as nx
import numpy as np
import pytest

from rsfans import examples as ex
from rsfans.characters import specialization_poset
from rsfans.fan import make_fan
from rsfans.order import (chain_length, chain_length_bound, fan_lattice, hasse_dot, lemma_checks,
                          oracle_leq_matrix, repr_leq, repr_leq_matrix, repr_order, repr_poset, subbasic_sets,
                          unit_incomparability)
from rsfans.represent import induce_D


def fan(name):
    return make_fan(ex.by_name(name))


@pytest.mark.parametrize("name", ex.NAMES)
def test_order_matches_character_oracle(name):
    F = fan(name)
    L = repr_leq_matrix(F)
    assert np.array_equal(L, oracle_leq_matrix(ex.characters_of(name)))
    n = F.ts.n
    assert all(L[a, b] == repr_leq(F, a, b) for a in range(n) for b in range(n))


@pytest.mark.parametrize("name", ex.NAMES)
def test_order_property_suite(name):
    P, rep = repr_poset(fan(name))
    assert rep.ok, rep.format()
    assert len(rep.results) >= 10


@pytest.mark.parametrize("kind,name", [(k, n) for k in ("spec", "order") for n in ex.GOLDEN[k]])
def test_golden_diagrams(kind, name):
    nodes, edges = ex.golden(kind, name)
    P = ex.spec_poset(name) if kind == "spec" else repr_order(fan(name))
    assert sorted(P.labels) == sorted(nodes)
    assert set(P.hasse_names()) == edges


def brute_glb(L, a, b):
    lows = [x for x in range(len(L)) if L[x, a] and L[x, b]]
    best = [x for x in lows if all(L[y, x] for y in lows)]
    return best[0] if best else None


@pytest.mark.parametrize("name", ex.NAMES)
def test_meet_join_brute_force(name):
    lat = fan_lattice(fan(name))
    L = lat.poset.leq
    Lt = L.T
    n = L.shape[0]
    for a, b in itertools.product(range(n), repeat=2):
        assert lat.meet[a, b] == brute_glb(L, a, b)
        assert lat.join[a, b] == brute_glb(Lt, a, b)
    for key in ("bounded lattice", "closed-form meet/join", "De Morgan", "Kleene"):
        assert lat.report[key].passed, key


def naive_modular(meet, join, L):
    n = len(L)
    return all(join[a, meet[b, c]] == meet[join[a, b], c]
               for a, b, c in itertools.product(range(n), repeat=3) if L[a, c])


def naive_distributive(meet, join):
    n = len(meet)
    return all(meet[a, join[b, c]] == join[meet[a, b], meet[a, c]] for a, b, c in itertools.product(range(n), repeat=3))


@pytest.mark.parametrize("name,modular,distributive", [
    ("three", True, True), ("f1", True, False), ("f1-idem", True, True), ("f3", False, False), ("f4", False, False),
])
def test_modularity(name, modular, distributive):
    lat = fan_lattice(fan(name))
    assert lat.modular == modular == naive_modular(lat.meet, lat.join, lat.poset.leq)
    assert lat.distributive == distributive == naive_distributive(lat.meet, lat.join)


def test_f2_pentagon():
    lat = fan_lattice(fan("f2"))
    assert not lat.modular
    G = ex.f2()
    o, a, b, c, i = (G.index(s) for s in ("z²", "x²", "-x²", "z", "-z²"))
    assert lat.poset.lt[o, a] and lat.poset.lt[a, b] and lat.poset.lt[b, i]
    assert lat.meet[a, c] == lat.meet[b, c] == o
    assert lat.join[a, c] == lat.join[b, c] == i


def test_f4_pentagon_top_is_minus_one():
    lat = fan_lattice(fan("f4"))
    G = ex.f4()
    o, a, b, c, i = (G.index(s) for s in ("1", "x²", "-x²", "z", "-1"))
    assert lat.meet[a, c] == lat.meet[b, c] == o
    assert lat.join[a, c] == lat.join[b, c] == i
    assert lat.pentagon_count > 0


def test_fan_lattice_requires_fan():
    G = ex.f1()
    with pytest.raises(ValueError):
        fan_lattice(induce_D(G, ex.characters_of("f1")))


@pytest.mark.parametrize("name", ex.NAMES)
def test_order_lemmas(name):
    F = fan(name)
    assert lemma_checks(F).ok
    assert unit_incomparability(F)


def brute_chain_length(X, n):
    sets = subbasic_sets(X, n)
    g = nx.DiGraph()
    g.add_nodes_from(range(len(sets)))
    g.add_edges_from((i, j) for i, j in itertools.permutations(range(len(sets)), 2) if sets[i] < sets[j])
    return nx.dag_longest_path_length(g) + 1


@pytest.mark.parametrize("name,length", [("three", 1), ("f1", 3), ("f1-idem", 2), ("f2", 4), ("f3", 5), ("f4", 4)])
def test_chain_lengths(name, length):
    G = ex.by_name(name)
    X = ex.characters_of(name)
    assert chain_length(G, X) == length == brute_chain_length(X, G.n)
    assert length <= chain_length_bound(G)


def test_f2_chain_bound():
    assert chain_length_bound(ex.f2()) == 6


def dot_edges(text):
    labels = dict(re.findall(r'(n\d+) \[label="([^"]*)"\]', text))
    return {(labels[a], labels[b]) for a, b in re.findall(r"(n\d+) -> (n\d+);", text)}


@pytest.mark.parametrize("name", ["f1", "f2", "f4"])
def test_dot_export_matches_golden(name):
    P = repr_order(fan(name))
    text = hasse_dot(P, name)
    assert text == hasse_dot(repr_order(fan(name)), name)
    assert dot_edges(text) == ex.golden("order", name)[1]
    assert "rankdir=BT" in text


def brute_width(P):
    best = 1
    for r in range(2, P.n + 1):
        for S in itertools.combinations(range(P.n), r):
            if not any(P.comparable(a, b) for a, b in itertools.combinations(S, 2)):
                best = r
                break
        else:
            break
    return best


@pytest.mark.parametrize("name,width", [("three", 1), ("f1", 2), ("f1-idem", 1), ("f2", 8), ("f3", 5), ("f4", 5)])
def test_specialization_width(name, width):
    P = specialization_poset(ex.characters_of(name))
    assert P.width() == width == brute_width(P)
