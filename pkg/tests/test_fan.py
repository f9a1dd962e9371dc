import itertools

import numpy as np
import pytest

from rsfans import examples as ex
from rsfans.characters import three_closed_subsets
from rsfans.fan import (FanPreconditionError, character_as_map, check_fan_ideals, check_hom_preservation,
                        check_interdefinability, closed_form_D, closed_form_Dt, fan_equivalence, is_saturated,
                        make_fan, sign_subsemigroups, units_rsg)
from rsfans.quotient import quotient_fan
from rsfans.represent import check_rs_axioms, induce_D, induce_Dt, three_rs
from rsfans.ts import free_ts


def names(G, xs):
    return sorted(G.names[int(i)] for i in xs)


def naive_closed_form_D(G):
    """x ∈ D(a,b) straight from the clause, one triple at a time."""
    n = G.n
    ids = set(G.idempotents)
    D = np.zeros((n, n, n), dtype=bool)
    for x, a, b in itertools.product(range(n), repeat=3):
        in_ideal = any(x == G.mul(a, e) or x == G.mul(b, e) for e in ids)
        D[x, a, b] = in_ideal or (G.mul(x, a) == G.neg[G.mul(x, b)] and x == G.mul(G.sq[a], x))
    return D


@pytest.mark.parametrize("name", ex.NAMES)
def test_closed_form_matches_naive_clause(name):
    G = ex.by_name(name)
    assert np.array_equal(closed_form_D(G), naive_closed_form_D(G))


@pytest.mark.parametrize("name", ex.NAMES)
def test_closed_form_equals_full_space_relation(name):
    G = ex.by_name(name)
    F = make_fan(G)
    full = ex.characters_of(name)
    assert np.array_equal(F.D, induce_D(G, full).D)
    assert np.array_equal(closed_form_Dt(G), induce_Dt(G, full))
    assert np.array_equal(F.Dt, closed_form_Dt(G))


@pytest.mark.parametrize("name", ex.NAMES)
def test_fans_are_real_semigroups(name):
    rep = check_rs_axioms(make_fan(ex.by_name(name)))
    assert rep.ok, rep.format()


@pytest.mark.parametrize("name", ["three", "f1", "f4", "f2"])
def test_interdefinability(name):
    assert check_interdefinability(ex.by_name(name)).ok


def test_transversal_examples():
    T = make_fan(ex.three())
    G = T.ts
    assert names(G, T.trep(G.index("1"), G.index("-1"))) == ["-1", "0", "1"]

    F1 = make_fan(ex.f1())
    G = F1.ts
    assert names(G, F1.trep(G.index("x"), G.index("-x"))) == sorted(["0", "x", "-x", "x²", "-x²"])

    F2 = make_fan(ex.f2())
    G = F2.ts
    # Z(z) is strictly inside Z(x), so the element with the smaller zero-set wins
    assert names(G, F2.trep(G.index("z"), G.index("x"))) == ["z"]
    assert names(G, F2.trep(G.index("x"), G.index("z"))) == ["z"]


def test_precondition_error_carries_witness():
    with pytest.raises(FanPreconditionError) as info:
        make_fan(free_ts(["x", "y"]))
    assert info.value.witness == ("x", "y")


def test_fan_equivalence_examples():
    G = ex.f1()
    X = ex.characters_of("f1")
    r = fan_equivalence(G, X)
    assert r.is_fan1 and r.is_fan2 and r.agree
    r = fan_equivalence(G, X[:2])
    assert not r.is_fan1 and not r.is_fan2
    r = fan_equivalence(ex.three(), ex.characters_of("three"))
    assert r.is_fan1 and r.is_fan2


@pytest.mark.parametrize("name", ["f1", "f1-idem", "f3", "f4"])
def test_fan_equivalence_on_all_three_closed_sets(name):
    G = ex.by_name(name)
    full = ex.characters_of(name)
    signs = sign_subsemigroups(G)
    for S in three_closed_subsets(full):
        r = fan_equivalence(G, S, full, signs)
        assert r.agree
        assert r.is_fan1 == (len(S) == len(full))


def test_sign_subsemigroups_are_character_positivity_sets():
    # every such S is {a : h(a) >= 0} for some character h
    for name in ex.NAMES:
        G = ex.by_name(name)
        pos = {frozenset(i for i, v in enumerate(h) if v >= 0) for h in ex.characters_of(name)}
        assert set(sign_subsemigroups(G)) == pos


@pytest.mark.parametrize("name,units", [
    ("f4", ["-1", "-z", "1", "z"]), ("f1", ["-1", "1"]), ("f2", ["-1", "1"]), ("three", ["-1", "1"]),
])
def test_unit_groups(name, units):
    F = make_fan(ex.by_name(name))
    u = units_rsg(F)
    assert names(F.ts, u.units) == units
    assert u.is_rsg_fan and u.dt_agrees


def test_characters_preserve_representation():
    F = make_fan(ex.f2())
    three = three_rs()
    for h in ex.characters_of("f2"):
        assert check_hom_preservation(F, three, character_as_map(h))


def test_identity_and_quotient_maps_preserve():
    F = make_fan(ex.f1())
    assert check_hom_preservation(F, F, list(range(F.ts.n)))
    F3 = make_fan(ex.f3())
    for S in three_closed_subsets(ex.characters_of("f3"))[::7]:
        q = quotient_fan(F3, S)
        assert check_hom_preservation(F3, q.model, q.pi)


def test_non_homomorphism_rejected():
    F = make_fan(ex.f1())
    with pytest.raises(ValueError):
        check_hom_preservation(F, three_rs(), [0] * F.ts.n)


def test_ideals_saturated_and_prime():
    F1 = make_fan(ex.f1())
    G = F1.ts
    I = {G.index(s) for s in ["0", "x", "-x", "x²", "-x²"]}
    assert is_saturated(F1, I)
    for name in ex.NAMES:
        F = make_fan(ex.by_name(name))
        assert is_saturated(F, {F.ts.zero})
    for name in ["f1", "f1-idem", "f3", "f4"]:
        assert check_fan_ideals(make_fan(ex.by_name(name))).ok


def test_unsaturated_submonoid():
    F = make_fan(ex.f1())
    G = F.ts
    assert not is_saturated(F, {G.one})   # D(1, 1) holds x²
