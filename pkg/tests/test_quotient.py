import itertools

import numpy as np
import pytest

from rsfans import examples as ex
from rsfans.characters import enumerate_characters, is_three_closed, three_closed_subsets, zero_set
from rsfans.fan import make_fan
from rsfans.quotient import (all_congruences, congruence_from_chars, ideal_quotient, lift, quotient_fan,
                             quotient_ts, witness_equivalent)
from rsfans.ts import all_ideals, principal_ideal


def chars(name, *labels):
    X = ex.characters_of(name)
    L = ex.character_labels(name)
    return tuple(X[L.index(lab)] for lab in labels)


def classes_by_name(C):
    G = C.domain
    return sorted(sorted(G.names[i] for i in cls) for cls in C.classes)


def naive_compatible(C):
    G = C.domain
    for a, b in itertools.product(range(G.n), repeat=2):
        if C.same(a, b):
            for c in range(G.n):
                if not C.same(G.mul(a, c), G.mul(b, c)):
                    return False
    return True


def test_full_space_gives_identity():
    for name in ex.NAMES:
        G = ex.by_name(name)
        C = congruence_from_chars(G, ex.characters_of(name))
        assert len(C.classes) == G.n


def test_f1_single_character():
    C = congruence_from_chars(ex.f1(), chars("f1", "h2"))
    assert classes_by_name(C) == [["-1", "-x", "-x²"], ["0"], ["1", "x", "x²"]]
    assert C.is_valid() and naive_compatible(C)


def test_empty_set_rejected():
    with pytest.raises(ValueError):
        congruence_from_chars(ex.f1(), [])


@pytest.mark.parametrize("name", ["f1", "f1-idem", "f3", "f4"])
def test_every_three_closed_quotient_is_a_fan(name):
    F = make_fan(ex.by_name(name))
    for S in three_closed_subsets(ex.characters_of(name)):
        q = quotient_fan(F, S)
        assert q.report.ok, q.report.format()
        assert naive_compatible(q.congruence)
        lifted = lift(tuple(S), q.pi, q.model.ts.n)
        assert set(lifted) == set(enumerate_characters(q.model.ts))


def test_f2_by_first_character_is_three():
    q = quotient_fan(make_fan(ex.f2()), chars("f2", "h1"))
    assert q.model.ts.n == 3 and q.report.ok


def test_quotient_by_everything_is_the_fan():
    F = make_fan(ex.f4())
    q = quotient_fan(F, ex.characters_of("f4"))
    assert q.model.ts.names == F.ts.names
    assert np.array_equal(q.model.D, F.D)


def test_not_three_closed_rejected():
    H = chars("f2", "h2", "h8")
    assert not is_three_closed(H)
    with pytest.raises(ValueError):
        quotient_fan(make_fan(ex.f2()), H)


def test_congruence_family_f1():
    fam = all_congruences(make_fan(ex.f1()))
    assert len(fam.subsets) == 7
    assert fam.injective and fam.inclusion_reversing


def test_f3_collapse():
    G = ex.f3()
    F = make_fan(G)
    q = ideal_quotient(F, {G.zero})
    assert q.pi[G.index("z")] == q.pi[G.one]
    assert q.report.ok
    H = tuple(h for h in ex.characters_of("f3") if zero_set(h) == {G.zero})
    Q, pi = quotient_ts(congruence_from_chars(G, H))
    assert pi[G.index("z")] == pi[G.one]


def test_f1_maximal_ideal_quotient():
    G = ex.f1()
    I = {G.index(s) for s in ["0", "x", "-x", "x²", "-x²"]}
    q = ideal_quotient(make_fan(G), I)
    assert q.quotient.n == 3
    assert sorted(q.quotient.names[u] for u in q.units) == ["-1", "1"]


def test_f2_larger_ideal_maps_onto():
    G = ex.f2()
    q = ideal_quotient(make_fan(G), {G.zero})
    J = principal_ideal(G, G.index("x"))
    assert q.report["larger ideals map onto the quotient"].passed
    assert {int(q.pi[j]) for j in J} == set(range(q.quotient.n))


@pytest.mark.parametrize("name", ex.NAMES)
def test_ideal_quotients_are_rsg_fans(name):
    G = ex.by_name(name)
    F = make_fan(G)
    full = ex.characters_of(name)
    for I in all_ideals(G):
        if G.one in I:
            continue
        q = ideal_quotient(F, I, full)
        assert q.report.ok, q.report.format()
        # both descriptions of the equivalence, pair by pair
        C = congruence_from_chars(G, q.chars)
        for a, b in itertools.product([x for x in range(G.n) if x not in I], repeat=2):
            assert C.same(a, b) == witness_equivalent(G, I, a, b)


def test_ideal_quotient_preconditions():
    G = ex.f1()
    F = make_fan(G)
    with pytest.raises(ValueError):
        ideal_quotient(F, {G.index("x")})
    with pytest.raises(ValueError):
        ideal_quotient(F, set(range(G.n)))
