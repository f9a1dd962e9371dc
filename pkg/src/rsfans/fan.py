"""Fans: the closed-form representation on semigroups whose zero-sets form a chain."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .characters import (Character, enumerate_characters, is_character, is_three_closed)
from .report import Report
from .represent import RSModel, check_rs_axioms, induce_D
from .ts import FiniteTS, all_ideals, divisibility_matrix, is_prime_ideal, satisfies_condition_z


class FanPreconditionError(ValueError):
    def __init__(self, message: str, witness=None):
        super().__init__(message if witness is None else f"{message}: witness {witness}")
        self.witness = witness


@dataclass(frozen=True, eq=False)
class FanModel(RSModel):
    """An RSModel whose D comes from the closed-form clause on a [Z] semigroup."""


def _require_z(G: FiniteTS) -> None:
    ok, w = satisfies_condition_z(G)
    if not ok:
        raise FanPreconditionError(f"{G.name} fails condition [Z]", tuple(G.names_of(w)))


def closed_form_D(G: FiniteTS) -> np.ndarray:
    """x ∈ D(a,b) iff x ∈ a·Id ∪ b·Id, or xa = -xb and x = a²x."""
    n = G.n
    t, neg, sq = G.table, G.neg, G.sq
    ar = np.arange(n)
    D = np.zeros((n, n, n), dtype=bool)
    ids = list(G.idempotents)
    for a in range(n):
        xs = t[a, ids]
        D[xs, a, :] = True
        D[xs, :, a] = True
    xa = t[:, :, None]                          # [x, a, _] = xa
    xb = t[:, None, :]                          # [x, _, b] = xb
    a2x = t[sq[None, :, None], ar[:, None, None]]   # [x, a, _] = a²x
    D |= (xa == neg[xb]) & (a2x == ar[:, None, None])
    return D


def closed_form_Dt(G: FiniteTS) -> np.ndarray:
    """Four cases: b = -a gives a·G; otherwise the element with the smaller
    zero-set, or both when the zero-sets coincide."""
    n = G.n
    div = divisibility_matrix(G)   # div[a, b]: Z(a) ⊆ Z(b)
    T = np.zeros((n, n, n), dtype=bool)
    for a in range(n):
        for b in range(n):
            if b == G.neg[a]:
                T[G.table[a], a, b] = True
            elif div[a, b] and not div[b, a]:
                T[a, a, b] = True
            elif div[b, a] and not div[a, b]:
                T[b, a, b] = True
            else:
                T[a, a, b] = T[b, a, b] = True
    return T


def make_fan(G: FiniteTS) -> FanModel:
    _require_z(G)
    return FanModel(G, closed_form_D(G), name=G.name)


def check_interdefinability(G: FiniteTS) -> Report:
    """Both routes between the two closed forms, by exhaustive comparison."""
    _require_z(G)
    D = closed_form_D(G)
    T = closed_form_Dt(G)
    rep = Report(f"interdefinability on {G.name}")
    forward = make_fan(G).Dt
    w = np.argwhere(forward != T)
    rep.add("D then t-rep gives Dt", len(w) == 0, None if len(w) == 0 else G.names_of(w[0]))
    n = G.n
    ar = np.arange(n)
    sb = G.table[G.sq[:, None], ar[None, :]]     # [a, b] -> a²b
    back = T[ar[:, None, None], sb[:, :, None], sb[:, None, :]]   # a ∈ Dt(a²b, a²c)
    w = np.argwhere(back != D)
    rep.add("Dt then squares gives D", len(w) == 0, None if len(w) == 0 else G.names_of(w[0]))
    return rep


# ---------------------------------------------------------------- fan1 / fan2

def sign_subsemigroups(G: FiniteTS) -> list[frozenset[int]]:
    """Submonoids S with S ∪ -S = G and S ∩ -S a proper prime ideal."""
    out = []
    neg = G.neg
    for I in all_ideals(G):
        if G.one in I or not is_prime_ideal(G, I):
            continue
        forced = set(I) | {int(x) for x in G.idempotents}
        if any(int(neg[f]) in forced and f not in I for f in forced):
            continue
        pairs = []
        seen = set(forced)
        for a in range(G.n):
            if a in seen or int(neg[a]) in seen:
                continue
            pairs.append(a)
            seen.add(a)
            seen.add(int(neg[a]))
        for choice in itertools.product((0, 1), repeat=len(pairs)):
            S = set(forced)
            for a, c in zip(pairs, choice):
                S.add(a if c == 0 else int(neg[a]))
            mask = np.zeros(G.n, dtype=bool)
            mask[list(S)] = True
            if mask[G.table[np.ix_(mask, mask)]].all():
                out.append(frozenset(S))
    return out


def nonneg_set(h: Character) -> frozenset[int]:
    return frozenset(i for i, v in enumerate(h) if v >= 0)


@dataclass(frozen=True)
class FanEquivalence:
    is_fan1: bool
    is_fan2: bool
    is_qfan: bool
    cond_2ii: bool
    rs_ok: bool
    three_closed: bool

    @property
    def agree(self) -> bool:
        return self.is_fan1 == self.is_fan2 == (self.is_qfan and self.cond_2ii)

    def to_json(self) -> dict:
        return {"is_fan1": self.is_fan1, "is_fan2": self.is_fan2, "is_qfan": self.is_qfan,
                "cond_2ii": self.cond_2ii, "rs_axioms": self.rs_ok,
                "three_closed": self.three_closed, "agree": self.agree}


def fan_equivalence(G: FiniteTS, X: Iterable[Character], full: Sequence[Character] | None = None,
                    sign_sets: Sequence[frozenset[int]] | None = None) -> FanEquivalence:
    from .characters import is_q_fan

    _require_z(G)
    X = tuple(dict.fromkeys(tuple(h) for h in X))
    full = tuple(full if full is not None else enumerate_characters(G))
    if not set(X) <= set(full):
        raise ValueError("X must consist of characters of G")
    is_fan1 = set(X) == set(full)
    closed = is_three_closed(X)
    rs_ok = bool(X) and check_rs_axioms(induce_D(G, X)).ok
    sets = sign_sets if sign_sets is not None else sign_subsemigroups(G)
    available = {nonneg_set(h) for h in X}
    cond = all(S in available for S in sets)
    return FanEquivalence(is_fan1, rs_ok and closed and cond, is_q_fan(X, G)[0], cond, rs_ok, closed)


# ---------------------------------------------------------------- units, homs, ideals

def rsg_fan_violation(D: np.ndarray, neg: Sequence[int], members: Sequence[int]):
    """First (a,b,c) among members breaking: a ∈ D(b,c) iff b = -c or a ∈ {b,c}."""
    for b in members:
        for c in members:
            for a in members:
                expected = neg[b] == c or a in (b, c)
                if bool(D[a, b, c]) != expected:
                    return (a, b, c)
    return None


@dataclass(frozen=True)
class UnitGroup:
    units: tuple[int, ...]
    D: np.ndarray
    is_rsg_fan: bool
    dt_agrees: bool
    witness: tuple[str, ...] | None


def units_rsg(F: RSModel) -> UnitGroup:
    G = F.ts
    U = list(G.units)
    sub = np.ix_(U, U, U)
    w = rsg_fan_violation(F.D, G.neg, U)
    dt_ok = bool(np.array_equal(F.D[sub], F.Dt[sub]))
    return UnitGroup(tuple(U), F.D[sub].copy(), w is None, dt_ok,
                     None if w is None else tuple(G.names_of(w)))


def is_ts_hom(G: FiniteTS, H: FiniteTS, f: Sequence[int]) -> bool:
    f = np.asarray(f)
    if f.shape != (G.n,):
        return False
    if (f[G.one], f[G.zero], f[G.minus_one]) != (H.one, H.zero, H.minus_one):
        return False
    return bool(np.array_equal(f[G.table], H.table[f[:, None], f[None, :]]))


def check_hom_preservation(F: RSModel, H: RSModel, f: Sequence[int]) -> bool:
    """a ∈ D_F(b,c) implies f(a) ∈ D_H(f(b), f(c))."""
    if not is_ts_hom(F.ts, H.ts, f):
        raise ValueError("map is not a ternary-semigroup homomorphism")
    f = np.asarray(f)
    image = H.D[f[:, None, None], f[None, :, None], f[None, None, :]]
    return not bool(np.any(F.D & ~image))


def character_as_map(h: Character) -> list[int]:
    """A character as an index map into the three-element structure (1, 0, -1)."""
    return [{1: 0, 0: 1, -1: 2}[v] for v in h]


def is_saturated(M: RSModel, S: Iterable[int]) -> bool:
    mask = np.zeros(M.ts.n, dtype=bool)
    mask[list(S)] = True
    reach = M.D[:, mask][:, :, mask].any(axis=(1, 2))
    return not bool(np.any(reach & ~mask))


def submonoids(G: FiniteTS, limit: int = 200000) -> list[frozenset[int]]:
    """Product-closed subsets containing 1, by upward closure from {1}."""

    def close(s: set[int]) -> frozenset[int]:
        s = set(s)
        while True:
            idx = sorted(s)
            new = set(G.table[np.ix_(idx, idx)].ravel().tolist()) - s
            if not new:
                return frozenset(s)
            s |= new

    start = close({G.one})
    found = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for S in frontier:
            for a in range(G.n):
                if a not in S:
                    T = close(S | {a})
                    if T not in found:
                        found.add(T)
                        nxt.append(T)
                        if len(found) > limit:
                            raise RuntimeError("too many submonoids")
        frontier = nxt
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def check_fan_ideals(F: RSModel, subsemigroups: Sequence[frozenset[int]] | None = None) -> Report:
    """Ideals are saturated and prime; a submonoid is saturated iff it holds
    every square and its symmetric part is an ideal."""
    from .ts import is_ideal

    G = F.ts
    rep = Report(f"ideals of {G.name}")
    bad = None
    for I in all_ideals(G):
        if G.one in I:
            continue
        if not (is_saturated(F, I) and is_prime_ideal(G, I)):
            bad = sorted(I)
            break
    rep.add("proper ideals saturated and prime", bad is None, None if bad is None else G.names_of(bad))
    subs = subsemigroups if subsemigroups is not None else submonoids(G)
    ids = set(G.idempotents)
    bad = None
    for S in subs:
        sym = {a for a in S if G.neg[a] in S}
        lhs = is_saturated(F, S)
        rhs = ids <= S and is_ideal(G, sym)
        if lhs != rhs:
            bad = sorted(S)
            break
    rep.add("saturated iff squares inside and symmetric part ideal", bad is None,
            None if bad is None else G.names_of(bad), f"{len(subs)} submonoids")
    return rep


def check_rsg_on_units(F: RSModel) -> bool:
    u = units_rsg(F)
    return u.is_rsg_fan and u.dt_agrees


__all__ = [
    "FanModel", "FanPreconditionError", "make_fan", "closed_form_D", "closed_form_Dt",
    "check_interdefinability", "fan_equivalence", "FanEquivalence", "sign_subsemigroups",
    "units_rsg", "check_hom_preservation", "check_fan_ideals", "is_saturated", "submonoids",
    "is_ts_hom", "character_as_map", "rsg_fan_violation", "is_character",
]
