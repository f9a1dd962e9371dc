"""Congruences induced by character sets, quotients, and ideal quotients."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .characters import (Character, as_array, canonical_sort, enumerate_characters,
                         is_three_closed, three_closed_subsets, zero_set)
from .fan import FanModel, make_fan, rsg_fan_violation
from .report import Report
from .represent import RSModel, check_rs_axioms, induce_D
from .ts import FiniteTS, is_ideal, satisfies_condition_z


@dataclass(frozen=True, eq=False)
class Congruence:
    """Partition stored as ``rep[i]``: the first element of i's class."""

    domain: FiniteTS
    rep: tuple[int, ...]
    inducing_chars: tuple[Character, ...] | None = field(default=None)

    @property
    def classes(self) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for i, r in enumerate(self.rep):
            out.setdefault(r, []).append(i)
        return list(out.values())

    def same(self, a: int, b: int) -> bool:
        return self.rep[a] == self.rep[b]

    def pairs(self) -> frozenset[tuple[int, int]]:
        return frozenset((a, b) for a in range(len(self.rep)) for b in range(len(self.rep))
                         if self.rep[a] == self.rep[b])

    def is_valid(self) -> bool:
        """Compatible with products, proper, and x ≡ -x only inside the class of 0."""
        G = self.domain
        r = np.asarray(self.rep)
        t = G.table
        rt = r[t]
        # a ≡ a' implies ab ≡ a'b
        if not np.array_equal(rt, rt[r][:, :]):
            return False
        if r[G.one] == r[G.zero]:
            return False
        return all(r[a] == r[G.zero] for a in range(G.n) if r[a] == r[G.neg[a]])


def congruence_from_chars(G: FiniteTS, H: Iterable[Character]) -> Congruence:
    H = tuple(tuple(h) for h in H)
    A = as_array(H)
    if A.size == 0:
        raise ValueError("character set must be nonempty")
    seen: dict[tuple, int] = {}
    rep = []
    for i in range(G.n):
        key = tuple(A[:, i])
        rep.append(seen.setdefault(key, i))
    return Congruence(G, tuple(rep), H)


def quotient_ts(C: Congruence, name: str | None = None) -> tuple[FiniteTS, np.ndarray]:
    """Quotient structure and the projection (as an index array)."""
    G = C.domain
    reps = sorted(set(C.rep))
    pos = {r: i for i, r in enumerate(reps)}
    pi = np.array([pos[C.rep[a]] for a in range(G.n)])
    m = len(reps)
    table = np.array([[pi[G.table[reps[i], reps[j]]] for j in range(m)] for i in range(m)])
    gens = None if G.generators is None else tuple(int(pi[g]) for g in G.generators)
    monos = None if G.monomials is None else tuple(G.monomials[r] for r in reps)
    Q = FiniteTS(tuple(G.names[r] for r in reps), table, int(pi[G.one]), int(pi[G.zero]),
                 int(pi[G.minus_one]), name=name or f"{G.name}/H", generators=gens,
                 generator_names=G.generator_names, monomials=monos)
    return Q, pi


def lift(H: Sequence[Character], pi: np.ndarray, m: int) -> tuple[Character, ...]:
    """Characters of the quotient obtained from members of H."""
    out = []
    for h in H:
        v = [0] * m
        for a, q in enumerate(pi):
            v[q] = h[a]
        out.append(tuple(v))
    return tuple(out)


@dataclass(frozen=True)
class QuotientFan:
    model: FanModel
    pi: np.ndarray
    congruence: Congruence
    report: Report


def quotient_fan(F: RSModel, H: Iterable[Character]) -> QuotientFan:
    """Quotient of a fan by a 3-closed character set, checked to be a fan."""
    G = F.ts
    H = tuple(dict.fromkeys(tuple(h) for h in H))
    if not H:
        raise ValueError("character set must be nonempty")
    if not is_three_closed(H):
        raise ValueError("character set is not closed under triple products")
    C = congruence_from_chars(G, H)
    Q, pi = quotient_ts(C)
    rep = Report(f"quotient of {G.name} by {len(H)} characters")
    rep.add("congruence valid", C.is_valid())
    z, w = satisfies_condition_z(Q)
    rep.add("quotient satisfies [Z]", z, None if w is None else Q.names_of(w))
    lifted = lift(H, pi, Q.n)
    rep.add("lifted set is the whole character space",
            set(lifted) == set(enumerate_characters(Q)))
    induced = induce_D(Q, lifted)
    fan = make_fan(Q) if z else None
    rep.add("induced relation equals closed form", fan is not None and np.array_equal(induced.D, fan.D))
    rep.add("real semigroup axioms", check_rs_axioms(induced).ok)
    model = fan if fan is not None else FanModel(Q, induced.D)
    return QuotientFan(model, pi, C, rep)


@dataclass(frozen=True)
class CongruenceFamily:
    subsets: tuple[frozenset[Character], ...]
    congruences: tuple[Congruence, ...]
    injective: bool
    inclusion_reversing: bool


def all_congruences(F: RSModel, full: Sequence[Character] | None = None) -> CongruenceFamily:
    G = F.ts
    full = tuple(full if full is not None else enumerate_characters(G))
    subs = tuple(three_closed_subsets(full))
    congs = tuple(congruence_from_chars(G, canonical_sort(G, S)) for S in subs)
    pairsets = [c.pairs() for c in congs]
    injective = len(set(pairsets)) == len(pairsets)
    reversing = all((not (S1 <= S2)) or (p2 <= p1)
                    for (S1, p1), (S2, p2) in itertools.permutations(zip(subs, pairsets), 2))
    return CongruenceFamily(subs, congs, injective, reversing)


# ---------------------------------------------------------------- ideal quotients

@dataclass(frozen=True)
class IdealQuotient:
    ideal: frozenset[int]
    chars: tuple[Character, ...]
    quotient: FiniteTS
    pi: np.ndarray
    units: tuple[int, ...]
    report: Report


def witness_equivalent(G: FiniteTS, I: frozenset[int], a: int, b: int) -> bool:
    """a ∼ b iff some z outside I has az = bz."""
    outside = [z for z in range(G.n) if z not in I]
    return any(G.table[a, z] == G.table[b, z] for z in outside)


def ideal_quotient(F: RSModel, I: Iterable[int], full: Sequence[Character] | None = None) -> IdealQuotient:
    G = F.ts
    I = frozenset(int(i) for i in I)
    if not is_ideal(G, I):
        raise ValueError("not an ideal")
    if G.one in I:
        raise ValueError("ideal must be proper")
    full = tuple(full if full is not None else enumerate_characters(G))
    HI = tuple(h for h in full if zero_set(h) == I)
    rep = Report(f"ideal quotient of {G.name} by {{{', '.join(G.names_of(sorted(I)))}}}")
    rep.add("ideal is a zero-set", bool(HI))
    if not HI:
        raise ValueError("no character has this zero-set")
    C = congruence_from_chars(G, HI)
    Q, pi = quotient_ts(C, name=f"{G.name}/I")

    w = None
    for a in range(G.n):
        for b in range(G.n):
            if a in I or b in I:
                continue
            if C.same(a, b) != witness_equivalent(G, I, a, b):
                w = G.names_of([a, b])
                break
        if w:
            break
    rep.add("witness form agrees with kernel", w is None, w)
    rep.add("ideal is one class", len({C.rep[i] for i in I}) == 1
            and all(C.rep[a] != C.rep[G.zero] for a in range(G.n) if a not in I))

    units = tuple(q for q in range(Q.n) if q != Q.zero)
    rep.add("exponent two", all(Q.sq[q] == Q.one for q in units))
    rep.add("1 != -1", Q.one != Q.minus_one)
    D = induce_D(Q, lift(HI, pi, Q.n)).D
    v = rsg_fan_violation(D, Q.neg, units)
    rep.add("minimal representation on units", v is None, None if v is None else Q.names_of(v))

    w = None
    for J in _ideals_above(G, I):
        if set(int(pi[j]) for j in J) != set(range(Q.n)):
            w = G.names_of(sorted(J))
            break
    rep.add("larger ideals map onto the quotient", w is None, w)
    return IdealQuotient(I, HI, Q, pi, units, rep)


def _ideals_above(G: FiniteTS, I: frozenset[int]):
    from .ts import all_ideals

    return [J for J in all_ideals(G) if I < J]
