"""Recognising fans among real semigroups, plus character interpolation."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .characters import (Character, enumerate_characters, specialization_poset, specializes,
                         zero_set)
from .fan import closed_form_D, is_saturated, rsg_fan_violation
from .quotient import congruence_from_chars, lift, quotient_ts
from .represent import RSModel, induce_D, rs_characters
from .ts import FiniteTS, all_ideals, is_ideal, is_prime_ideal, satisfies_condition_z


def saturated_prime_ideals(M: RSModel) -> list[frozenset[int]]:
    G = M.ts
    return [I for I in all_ideals(G) if is_prime_ideal(G, I) and is_saturated(M, I)]


def is_fan_model(M: RSModel) -> bool:
    """[Z] holds and D is the closed-form relation."""
    return satisfies_condition_z(M.ts)[0] and bool(np.array_equal(M.D, closed_form_D(M.ts)))


@dataclass(frozen=True)
class Characterization:
    is_fan: bool
    cond_2i: bool
    cond_2ii: bool
    cond_2iii: bool
    n_chars: int
    n_saturated_primes: int

    @property
    def equivalence_holds(self) -> bool:
        return self.is_fan == (self.cond_2i and self.cond_2ii and self.cond_2iii)

    def to_json(self) -> dict:
        return {"is_fan": self.is_fan, "cond_2i": self.cond_2i, "cond_2ii": self.cond_2ii,
                "cond_2iii": self.cond_2iii, "equivalence_holds": self.equivalence_holds,
                "characters": self.n_chars, "saturated_prime_ideals": self.n_saturated_primes}

    def format(self) -> str:
        rows = [("fan", self.is_fan), ("zero-sets comparable", self.cond_2i),
                ("specializations reach every zero-set", self.cond_2ii),
                ("ideal quotients minimal on units", self.cond_2iii),
                ("equivalence holds", self.equivalence_holds)]
        return "\n".join(f"  {k.ljust(38)} {'yes' if v else 'no'}" for k, v in rows)


def cond_2ii_holds(X: Sequence[Character]) -> bool:
    """Whenever Z(g) ⊆ Z(h), some h′ with Z(h′) = Z(h) specializes g."""
    zs = [zero_set(h) for h in X]
    for g, zg in zip(X, zs):
        for zh in set(zs):
            if zg <= zh and not any(zk == zh and specializes(g, k) for k, zk in zip(X, zs)):
                return False
    return True


def ideal_quotient_is_rsg(G: FiniteTS, X: Sequence[Character], I: frozenset[int]) -> bool:
    HI = tuple(h for h in X if zero_set(h) == I)
    if not HI:
        return False
    Q, pi = quotient_ts(congruence_from_chars(G, HI))
    units = [q for q in range(Q.n) if q != Q.zero]
    if Q.one == Q.minus_one or any(Q.sq[q] != Q.one for q in units):
        return False
    D = induce_D(Q, lift(HI, pi, Q.n)).D
    return rsg_fan_violation(D, Q.neg, units) is None


def check_characterization(M: RSModel, full: Sequence[Character] | None = None) -> Characterization:
    G = M.ts
    X = rs_characters(M, full if full is not None else enumerate_characters(G))
    primes = saturated_prime_ideals(M)
    c1 = satisfies_condition_z(G)[0]
    c2 = cond_2ii_holds(X)
    c3 = all(ideal_quotient_is_rsg(G, X, I) for I in primes)
    return Characterization(is_fan_model(M), c1, c2, c3, len(X), len(primes))


# ---------------------------------------------------------------- interpolation

class InterpolationError(ValueError):
    pass


def interpolate_character(F: RSModel, g: Character, h: Character, I: Iterable[int],
                          full: Sequence[Character] | None = None) -> Character:
    """The character equal to g off I and 0 on I; sits between g and h."""
    G = F.ts
    I = frozenset(int(i) for i in I)
    if not is_ideal(G, I):
        raise InterpolationError("I is not an ideal")
    if not specializes(g, h):
        raise InterpolationError("g does not specialize to h")
    if not zero_set(g) <= I:
        raise InterpolationError("Z(g) is not contained in I")
    if not I <= zero_set(h):
        raise InterpolationError("I is not contained in Z(h)")
    f = tuple(0 if i in I else int(v) for i, v in enumerate(g))
    from .characters import is_character

    assert is_character(G, f), "interpolated map is not a character"
    assert specializes(g, f) and specializes(f, h)
    full = full if full is not None else enumerate_characters(G)
    for k in full:
        if zero_set(k) == I:
            assert tuple(a * a * b for a, b in zip(k, g)) == f, "square-multiplier route disagrees"
    return f


def zero_set_surjectivity(F: RSModel, full: Sequence[Character] | None = None) -> bool:
    G = F.ts
    zs = {zero_set(h) for h in (full if full is not None else enumerate_characters(G))}
    return all(I in zs for I in all_ideals(G) if G.one not in I)


# ---------------------------------------------------------------- sufficient conditions

@dataclass(frozen=True)
class ChainVerdict:
    applicable: bool
    is_fan: bool
    detail: str
    chains: tuple[tuple[int, ...], ...] = ()

    @property
    def holds(self) -> bool:
        return (not self.applicable) or self.is_fan

    def to_json(self) -> dict:
        return {"applicable": self.applicable, "is_fan": self.is_fan, "holds": self.holds,
                "detail": self.detail, "chains": [list(c) for c in self.chains]}


def totally_ordered_spec_implies_fan(M: RSModel, full: Sequence[Character] | None = None) -> ChainVerdict:
    G = M.ts
    X = rs_characters(M, full if full is not None else enumerate_characters(G))
    P = specialization_poset(X)
    if not P.is_chain():
        return ChainVerdict(False, is_fan_model(M), "characters not totally ordered")
    zs = [zero_set(h) for h in X]
    unique = all(zs.count(I) == 1 for I in saturated_prime_ideals(M))
    fan = is_fan_model(M)
    return ChainVerdict(True, fan and unique, "chain of %d characters; unique zero-sets: %s" % (len(X), unique),
                        (tuple(range(len(X))),))


def maximal_chains(P) -> list[tuple[int, ...]]:
    out = []

    def walk(path):
        nxt = [j for i, j in P.hasse if i == path[-1]]
        if not nxt:
            out.append(tuple(path))
        for j in nxt:
            walk(path + [j])

    for m in P.minimal():
        walk([m])
    return out


def two_chains_implies_fan(M: RSModel, full: Sequence[Character] | None = None) -> ChainVerdict:
    G = M.ts
    X = rs_characters(M, full if full is not None else enumerate_characters(G))
    P = specialization_poset(X)
    width = P.width()
    if width > 2:
        return ChainVerdict(False, is_fan_model(M), f"width {width}: no cover by two chains")
    if not satisfies_condition_z(G)[0]:
        return ChainVerdict(False, False, "condition [Z] fails")
    zs = [zero_set(h) for h in X]
    primes = saturated_prime_ideals(M)
    chains = maximal_chains(P)
    for c0, c1 in itertools.combinations_with_replacement(chains, 2):
        if set(c0) | set(c1) != set(range(len(X))):
            continue
        if all(any(zs[i] == I for i in c) for c in (c0, c1) for I in primes):
            return ChainVerdict(True, is_fan_model(M), f"width {width}", (c0, c1))
    return ChainVerdict(False, is_fan_model(M), f"width {width}: no cover realising every ideal")
