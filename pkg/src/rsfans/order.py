"""The representation order and its lattice structure on fans."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .characters import Character, as_array, zero_set
from .poset import Poset
from .report import Report
from .represent import RSModel, rs_characters
from .ts import FiniteTS, satisfies_condition_z, spec

_RANK3 = {1: 0, 0: 1, -1: 2}   # 1 < 0 < -1


def repr_leq(M: RSModel, a: int, b: int) -> bool:
    """a ≤ b iff a ∈ D(1,b) and -b ∈ D(1,-a)."""
    G = M.ts
    return bool(M.D[a, G.one, b] and M.D[G.neg[b], G.one, G.neg[a]])


def repr_leq_matrix(M: RSModel) -> np.ndarray:
    G = M.ts
    neg = G.neg
    first = M.D[:, G.one, :]                       # [a, b] = a ∈ D(1, b)
    second = M.D[neg[None, :], G.one, neg[:, None]]  # [a, b] = -b ∈ D(1, -a)
    return first & second


def oracle_leq_matrix(X: Sequence[Character]) -> np.ndarray:
    """∀h: h(a) ≤ h(b) in the order 1 < 0 < -1."""
    R = np.vectorize(_RANK3.get)(as_array(X))
    return np.all(R[:, :, None] <= R[:, None, :], axis=0)


def repr_order(M: RSModel) -> Poset:
    return Poset(M.ts.names, repr_leq_matrix(M))


def repr_poset(M: RSModel, X: Sequence[Character] | None = None) -> tuple[Poset, Report]:
    """The order plus the ten-item property suite.

    ``X`` defaults to the characters of the semigroup that preserve D.
    """
    G = M.ts
    n, t, neg, sq = G.n, G.table, G.neg, G.sq
    one, zero, m1 = G.one, G.zero, G.minus_one
    L = repr_leq_matrix(M)
    P = Poset(G.names, L)
    X = tuple(X) if X is not None else rs_characters(M)
    rep = Report(f"representation order on {M.name}")
    nm = G.names_of

    def first(mask):
        w = np.argwhere(mask)
        return None if len(w) == 0 else nm(w[0])

    rep.add("1 partial order", P.is_partial_order())
    rep.add("1 negation antitone", *(lambda w: (w is None, w))(first(L != L[np.ix_(neg, neg)].T)))
    rep.add("2 bounds", *(lambda w: (w is None, w))(first(~(L[one] & L[:, m1]))))
    idem = sq == np.arange(n)
    neg_idem = neg[sq] == np.arange(n)
    rep.add("3 below zero iff square", *(lambda w: (w is None, w))(first(L[:, zero] != idem)))
    rep.add("3 above zero iff minus square", *(lambda w: (w is None, w))(first(L[zero, :] != neg_idem)))
    rep.add("4 character oracle", *(lambda w: (w is None, w))(first(L != oracle_leq_matrix(X))))

    sandwich = L[sq[:, None], np.arange(n)[None, :]] & L[np.arange(n)[None, :], neg[sq][:, None]]  # [a, b]
    A = as_array(X)
    zinc = np.all((A[:, :, None] != 0) | (A[:, None, :] == 0), axis=0)   # Z(a) ⊆ Z(b)
    absorb = t[sq[:, None], np.arange(n)[None, :]] == np.arange(n)[None, :]  # b = a²b
    w = first((sandwich != zinc) | (zinc != absorb))
    rep.add("5 zero-set sandwich", w is None, w)

    ab = t
    w = first(~(L[sq[:, None], ab] & L[ab, neg[sq][:, None]]))
    rep.add("6 a² ≤ ab ≤ -a²", w is None, w)

    units = sq == one
    w = first(sandwich & units[None, :] & ~units[:, None])
    rep.add("7 invertibility", w is None, w)

    w = None
    for a in range(n):
        ups = np.flatnonzero(L[a])
        prod = t[np.ix_(ups, ups)]
        bad = ~L[a, neg[prod]]
        if bad.any():
            i, j = np.argwhere(bad)[0]
            w = nm([a, ups[i], ups[j]])
            break
    rep.add("8 a ≤ x, y implies a ≤ -xy", w is None, w)

    w9 = w10 = None
    for a in range(n):
        m, j = P.glb(a, int(neg[a])), P.lub(a, int(neg[a]))
        if (m, j) != (int(sq[a]), int(neg[sq[a]])) and w9 is None:
            w9 = nm([a])
        if (m is None or j is None or not (L[m, zero] and L[zero, j])) and w10 is None:
            w10 = nm([a])
    rep.add("9 a ∧ -a = a², a ∨ -a = -a²", w9 is None, w9)
    rep.add("10 Kleene", w10 is None, w10)
    return P, rep


# ---------------------------------------------------------------- lattice

@dataclass(frozen=True)
class Lattice:
    poset: Poset
    meet: np.ndarray
    join: np.ndarray
    report: Report
    pentagon: tuple[str, ...] | None
    pentagon_count: int

    @property
    def bounded_lattice(self) -> bool:
        return self.report["bounded lattice"].passed

    @property
    def modular(self) -> bool:
        return self.report["modular"].passed

    @property
    def distributive(self) -> bool:
        return self.report["distributive"].passed


def _tables(P: Poset):
    n = P.n
    meet = np.full((n, n), -1, dtype=np.int64)
    join = np.full((n, n), -1, dtype=np.int64)
    for a in range(n):
        for b in range(a, n):
            m, j = P.glb(a, b), P.lub(a, b)
            meet[a, b] = meet[b, a] = -1 if m is None else m
            join[a, b] = join[b, a] = -1 if j is None else j
    return meet, join


def find_pentagons(P: Poset, meet: np.ndarray, join: np.ndarray) -> list[tuple[int, int, int, int, int]]:
    """N5 sublattices as (bottom, a, b, c, top) with a < b and c beside both."""
    out = []
    n = P.n
    for a in range(n):
        for b in np.flatnonzero(P.lt[a]):
            for c in range(n):
                if P.comparable(a, c) or P.comparable(int(b), c):
                    continue
                if meet[a, c] == meet[b, c] and join[a, c] == join[b, c]:
                    out.append((int(meet[a, c]), a, int(b), c, int(join[a, c])))
    return out


def fan_lattice(F: RSModel) -> Lattice:
    """Meet/join tables from the order, checked against the closed forms."""
    from .fan import FanModel

    G = F.ts
    if not isinstance(F, FanModel) or not satisfies_condition_z(G)[0]:
        raise ValueError("fan_lattice needs a fan")
    P = repr_order(F)
    L = P.leq
    n, neg, sq = G.n, G.neg, G.sq
    meet, join = _tables(P)
    rep = Report(f"lattice of {G.name}")
    bounded = (meet >= 0).all() and (join >= 0).all() and L[G.one].all() and L[:, G.minus_one].all()
    rep.add("bounded lattice", bool(bounded), note="bottom 1, top -1")

    def lo(p, q):
        return p if L[p, q] else (q if L[q, p] else -1)

    def hi(p, q):
        return q if L[p, q] else (p if L[q, p] else -1)

    w = None
    for a, b in itertools.combinations(range(n), 2):
        if P.comparable(a, b):
            continue
        if meet[a, b] != lo(sq[a], sq[b]) or join[a, b] != hi(neg[sq[a]], neg[sq[b]]):
            w = G.names_of([a, b])
            break
    rep.add("closed-form meet/join", w is None, w)

    w = None
    for a in range(n):
        for b in range(n):
            if neg[meet[a, b]] != join[neg[a], neg[b]] or neg[join[a, b]] != meet[neg[a], neg[b]]:
                w = G.names_of([a, b])
                break
        if w:
            break
    rep.add("De Morgan", w is None, w)

    k_low = meet[np.arange(n), neg]
    k_high = join[np.arange(n), neg]
    ok = bool(np.all(L[k_low, G.zero]) and np.all(L[G.zero, k_high]))
    rep.add("Kleene", ok)

    w = None
    for a in range(n):
        for c in np.flatnonzero(L[a]):
            lhs = join[a, meet[:, c]]
            rhs = meet[join[a, :], c]
            bad = np.flatnonzero(lhs != rhs)
            if len(bad):
                w = G.names_of([a, int(bad[0]), int(c)])
                break
        if w:
            break
    rep.add("modular", w is None, w)

    w = None
    for a in range(n):
        lhs = meet[a, join]                       # [b, c]
        rhs = join[meet[a][:, None], meet[a][None, :]]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            w = G.names_of([a, int(bad[0][0]), int(bad[0][1])])
            break
    rep.add("distributive", w is None, w)

    pents = find_pentagons(P, meet, join)
    pent = None if not pents else tuple(G.names_of(pents[0]))
    return Lattice(P, meet, join, rep, pent, len(pents))


def lemma_checks(F: RSModel) -> Report:
    """Order lemmas specific to fans: strict comparisons touch squares,
    nearest squares above and below, and units beside everything else."""
    G = F.ts
    L = repr_leq_matrix(F)
    n, neg, sq = G.n, G.neg, G.sq
    ids = set(int(i) for i in G.idempotents)
    neg_ids = {int(neg[i]) for i in ids}
    rep = Report(f"order lemmas on {G.name}")

    w = None
    for a in range(n):
        for b in range(n):
            if a != b and L[a, b] and a not in ids and b not in neg_ids:
                w = G.names_of([a, b])
                break
        if w:
            break
    rep.add("strict pairs touch squares", w is None, w)

    w = None
    for b in range(n):
        if b not in ids:
            above = [q for q in neg_ids if L[b, q]]
            if int(neg[sq[b]]) not in above or not all(L[neg[sq[b]], q] for q in above):
                w = G.names_of([b])
                break
        if b not in neg_ids:
            below = [q for q in ids if L[q, b]]
            if int(sq[b]) not in below or not all(L[q, sq[b]] for q in below):
                w = G.names_of([b])
                break
    rep.add("nearest squares", w is None, w)
    rep.add("units", unit_incomparability(F))
    return rep


def unit_incomparability(F: RSModel) -> bool:
    G = F.ts
    L = repr_leq_matrix(F)
    units = [u for u in G.units if u not in (G.one, G.minus_one)]
    nonunits = [x for x in range(G.n) if x not in G.units]
    for w in units:
        for x in nonunits:
            if L[x, w] or L[w, x]:
                return False
        for v in units:
            if v != w and (L[v, w] or L[w, v]):
                return False
        for x in range(G.n):
            if L[x, w] and x != w and x != G.one:
                return False
            if L[w, x] and x != w and x != G.minus_one:
                return False
    return True


# ---------------------------------------------------------------- chain length

def subbasic_sets(X: Sequence[Character], n: int) -> list[frozenset[int]]:
    """U(a) = {h : h(a) = 1}, nonempty ones, deduplicated."""
    A = as_array(X)
    sets = {frozenset(int(i) for i in np.flatnonzero(A[:, a] == 1)) for a in range(n)}
    return sorted((s for s in sets if s), key=lambda s: (len(s), sorted(s)))


def chain_length(G: FiniteTS, X: Sequence[Character]) -> int:
    """Number of sets in a longest strict inclusion chain of nonempty U(a)."""
    sets = subbasic_sets(X, G.n)
    best = [1] * len(sets)
    for j, s in enumerate(sets):          # sorted by size, so subsets come first
        for i in range(j):
            if sets[i] < s:
                best[j] = max(best[j], best[i] + 1)
    return max(best, default=0)


def chain_length_bound(G: FiniteTS) -> int:
    return 2 * len(spec(G))


# ---------------------------------------------------------------- DOT

def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def hasse_dot(P: Poset, name: str = "poset", labels: Sequence[str] | None = None) -> str:
    """Deterministic DOT text; nodes grouped in ranks by height."""
    labels = list(labels) if labels is not None else list(P.labels)
    h = P.height
    lines = [f"digraph {_q(name)} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    for i, lab in enumerate(labels):
        lines.append(f"  n{i} [label={_q(lab)}];")
    for r in sorted(set(int(x) for x in h)):
        members = " ".join(f"n{i};" for i in range(P.n) if h[i] == r)
        lines.append(f"  {{ rank=same; {members} }}")
    for i, j in P.hasse:
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def zero_sets_of(X: Sequence[Character]) -> list[frozenset[int]]:
    return [zero_set(h) for h in X]
