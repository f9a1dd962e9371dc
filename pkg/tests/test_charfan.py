import pytest

from rsfans import examples as ex
from rsfans.characters import zero_set
from rsfans.charfan import (InterpolationError, check_characterization, cond_2ii_holds, interpolate_character,
                            is_fan_model, saturated_prime_ideals, totally_ordered_spec_implies_fan,
                            two_chains_implies_fan, zero_set_surjectivity)
from rsfans.fan import make_fan
from rsfans.represent import check_rs_axioms, induce_D, three_rs
from rsfans.ts import all_ideals


def by_label(name):
    return dict(zip(ex.character_labels(name), ex.characters_of(name)))


@pytest.mark.parametrize("name", ex.NAMES)
def test_example_fans_meet_all_conditions(name):
    r = check_characterization(make_fan(ex.by_name(name)), ex.characters_of(name))
    assert (r.is_fan, r.cond_2i, r.cond_2ii, r.cond_2iii) == (True, True, True, True)
    assert r.equivalence_holds


def test_three_is_a_fan():
    r = check_characterization(three_rs())
    assert r.is_fan and r.equivalence_holds


def test_proper_subspace_of_f4_is_not_a_fan():
    h = by_label("f4")
    G = ex.f4()
    M = induce_D(G, [h[k] for k in ("h2", "h3", "h4", "h5", "h6")])
    assert check_rs_axioms(M).ok
    r = check_characterization(M, ex.characters_of("f4"))
    assert not r.is_fan and not r.cond_2iii
    assert r.cond_2i and r.cond_2ii
    assert r.equivalence_holds


def test_cond_2ii_can_fail():
    h = by_label("f2")
    # Z(h4) sits inside Z(h3), yet h4 does not specialize to h3
    assert not cond_2ii_holds([h["h4"], h["h3"]])
    assert cond_2ii_holds([h["h4"], h["h2"]])
    assert cond_2ii_holds(list(h.values()))


def test_saturated_primes_are_all_proper_ideals_in_fans():
    for name in ex.NAMES:
        F = make_fan(ex.by_name(name))
        G = F.ts
        proper = {I for I in all_ideals(G) if G.one not in I}
        assert set(saturated_prime_ideals(F)) == proper


def test_interpolation_f2():
    h = by_label("f2")
    F = make_fan(ex.f2())
    assert interpolate_character(F, h["h4"], h["h1"], zero_set(h["h2"])) == h["h2"]
    assert interpolate_character(F, h["h4"], h["h1"], zero_set(h["h4"])) == h["h4"]
    assert interpolate_character(F, h["h4"], h["h1"], zero_set(h["h1"])) == h["h1"]


def test_interpolation_preconditions():
    h = by_label("f2")
    F = make_fan(ex.f2())
    G = F.ts
    with pytest.raises(InterpolationError, match="not an ideal"):
        interpolate_character(F, h["h4"], h["h1"], {G.index("x")})
    with pytest.raises(InterpolationError, match="does not specialize"):
        interpolate_character(F, h["h1"], h["h4"], zero_set(h["h1"]))
    with pytest.raises(InterpolationError, match="Z\\(g\\)"):
        interpolate_character(F, h["h2"], h["h1"], {G.zero})


@pytest.mark.parametrize("name", ex.NAMES)
def test_zero_set_surjectivity(name):
    assert zero_set_surjectivity(make_fan(ex.by_name(name)), ex.characters_of(name))


def test_f2_proper_ideals_realised():
    G = ex.f2()
    proper = [I for I in all_ideals(G) if G.one not in I]
    assert len(proper) == 3
    zs = {zero_set(h) for h in ex.characters_of("f2")}
    assert all(I in zs for I in proper)


def test_f1_maximal_ideal_realised_by_h1():
    G = ex.f1()
    assert zero_set(by_label("f1")["h1"]) == {G.index(s) for s in ["0", "x", "-x", "x²", "-x²"]}


@pytest.mark.parametrize("name,applicable", [("three", True), ("f1-idem", True), ("f1", False), ("f2", False)])
def test_totally_ordered_spectrum(name, applicable):
    v = totally_ordered_spec_implies_fan(make_fan(ex.by_name(name)), ex.characters_of(name))
    assert v.applicable == applicable
    assert v.holds and v.is_fan


@pytest.mark.parametrize("name,applicable", [
    ("three", True), ("f1", True), ("f1-idem", True), ("f2", False), ("f3", False), ("f4", False),
])
def test_two_chains(name, applicable):
    v = two_chains_implies_fan(make_fan(ex.by_name(name)), ex.characters_of(name))
    assert v.applicable == applicable
    assert v.holds


def test_two_chain_cover_of_f1():
    v = two_chains_implies_fan(make_fan(ex.f1()), ex.characters_of("f1"))
    assert sorted(v.chains) == [(1, 0), (2, 0)]


def test_is_fan_model():
    assert is_fan_model(make_fan(ex.f3()))
    h = by_label("f3")
    assert not is_fan_model(induce_D(ex.f3(), [h[k] for k in ("h1", "h2", "h3", "h4", "h5", "h6")]))
