"""Characters into the three-element structure {-1, 0, 1}.

A character is stored as a tuple of values indexed by element.  Sets of
characters are tuples in a canonical order (see :func:`canonical_sort`).
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

import numpy as np

from .poset import Poset
from .ts import FiniteTS

Character = tuple[int, ...]
CharSet = tuple[Character, ...]

VALUE_ORDER = (0, 1, -1)
_RANK = {0: 0, 1: 1, -1: 2}


def as_array(X: Iterable[Character]) -> np.ndarray:
    X = list(X)
    if not X:
        return np.zeros((0, 0), dtype=np.int64)
    return np.array(X, dtype=np.int64)


def is_character(G: FiniteTS, values: Sequence[int]) -> bool:
    v = np.asarray(values, dtype=np.int64)
    if v.shape != (G.n,) or not np.isin(v, (-1, 0, 1)).all():
        return False
    if (v[G.one], v[G.zero], v[G.minus_one]) != (1, 0, -1):
        return False
    return bool(np.array_equal(v[G.table], v[:, None] * v[None, :]))


def generating_set(G: FiniteTS) -> tuple[int, ...]:
    """Generators when known, else a greedy generating set (with -1 free)."""
    if G.generators is not None:
        return G.generators
    reached = {G.one, G.minus_one}
    gens: list[int] = []

    def close(s):
        s = set(s)
        frontier = list(s)
        while frontier:
            new = []
            for a in frontier:
                for b in list(s):
                    c = G.mul(a, b)
                    if c not in s:
                        s.add(c)
                        new.append(c)
            frontier = new
        return s

    reached = close(reached)
    for a in range(G.n):
        if a not in reached:
            gens.append(a)
            reached = close(reached | {a})
    return tuple(gens)


def _enumerate_by_monomials(G: FiniteTS) -> list[Character]:
    k = len(G.generators)
    signs = np.array([m[0] if m is not None else 0 for m in G.monomials])
    exps = np.array([m[1] if m is not None else (0,) * k for m in G.monomials]).reshape(G.n, k)
    out = []
    for vals in itertools.product(VALUE_ORDER, repeat=k):
        gv = np.array(vals, dtype=np.int64)
        # value of g^e: e = 0 -> 1, e = 1 -> v, e = 2 -> v^2
        powers = np.where(exps == 0, 1, np.where(exps == 1, gv[None, :], (gv * gv)[None, :]))
        v = signs * powers.prod(axis=1)
        if is_character(G, v):
            out.append(tuple(int(t) for t in v))
    return out


def _enumerate_by_backtracking(G: FiniteTS) -> list[Character]:
    gens = generating_set(G)
    out = []

    def extend(assign: dict[int, int]) -> dict[int, int] | None:
        vals = dict(assign)
        frontier = list(vals)
        while frontier:
            new = []
            for a in frontier:
                for b in list(vals):
                    c = G.mul(a, b)
                    v = vals[a] * vals[b]
                    if c in vals:
                        if vals[c] != v:
                            return None
                    else:
                        vals[c] = v
                        new.append(c)
            frontier = new
        return vals

    base = {G.one: 1, G.minus_one: -1, G.zero: 0}

    def rec(i: int, assign: dict[int, int]):
        partial = extend(assign)
        if partial is None:
            return
        if i == len(gens):
            v = tuple(partial[a] for a in range(G.n))
            if is_character(G, v):
                out.append(v)
            return
        g = gens[i]
        for val in VALUE_ORDER:
            if g in partial and partial[g] != val:
                continue
            rec(i + 1, {**assign, g: val})

    rec(0, base)
    return out


def canonical_sort(G: FiniteTS, X: Iterable[Character]) -> CharSet:
    """Larger zero-sets first; ties broken by the values on the generating set
    read from the last generator to the first, with 0 < 1 < -1."""
    gens = generating_set(G)

    def key(h):
        return (-sum(1 for t in h if t == 0), tuple(_RANK[h[g]] for g in reversed(gens)), h)

    return tuple(sorted(set(X), key=key))


def enumerate_characters(G: FiniteTS) -> CharSet:
    """All characters of G in canonical order."""
    if G.generators is not None and G.monomials is not None:
        found = _enumerate_by_monomials(G)
    else:
        found = _enumerate_by_backtracking(G)
    return canonical_sort(G, found)


def enumerate_characters_brute_force(G: FiniteTS) -> CharSet:
    """Scan every map into {-1, 0, 1}; only sensible for very small G."""
    return canonical_sort(G, (v for v in itertools.product((-1, 0, 1), repeat=G.n) if is_character(G, v)))


def labels(X: Sequence[Character], start: int = 1) -> list[str]:
    return [f"h{i}" for i in range(start, start + len(X))]


# ---------------------------------------------------------------- specialization

def product(*hs: Character) -> Character:
    out = np.ones(len(hs[0]), dtype=np.int64)
    for h in hs:
        out = out * np.asarray(h)
    return tuple(int(t) for t in out)


def specializes(g: Character, h: Character) -> bool:
    """g ⇝ h, i.e. h = h²g."""
    return all(b == b * b * a for a, b in zip(g, h))


def specializes_by_ones(g: Character, h: Character) -> bool:
    """h⁻¹[1] ⊆ g⁻¹[1]."""
    return all(a == 1 for a, b in zip(g, h) if b == 1)


def specializes_by_zero_sets(g: Character, h: Character) -> bool:
    """Z(g) ⊆ Z(h) and g, h agree off Z(h)."""
    return all(b == 0 for a, b in zip(g, h) if a == 0) and all(a == b for a, b in zip(g, h) if b != 0)


def zero_set(h: Character) -> frozenset[int]:
    return frozenset(i for i, t in enumerate(h) if t == 0)


def compare_zero_sets(g: Character, h: Character) -> str:
    """Compare Z(g) with Z(h) using the algebraic tests g² = h² and h = hg²."""
    left_in_right = all(b == b * a * a for a, b in zip(g, h))
    right_in_left = all(a == a * b * b for a, b in zip(g, h))
    if left_in_right and right_in_left:
        assert all(a * a == b * b for a, b in zip(g, h))
        return "equal"
    if left_in_right:
        return "left-in-right"
    if right_in_left:
        return "right-in-left"
    return "incomparable"


def compare_zero_sets_by_sets(g: Character, h: Character) -> str:
    zg, zh = zero_set(g), zero_set(h)
    if zg == zh:
        return "equal"
    if zg <= zh:
        return "left-in-right"
    if zh <= zg:
        return "right-in-left"
    return "incomparable"


def specialization_poset(X: Sequence[Character], names: Sequence[str] | None = None) -> Poset:
    """Order with g below h when g ⇝ h (specializations sit higher)."""
    X = list(X)
    if not X:
        raise ValueError("empty character set")
    A = as_array(X)
    sq = A * A
    # leq[g, h] iff h == h² g
    leq = np.all(A[None, :, :] == sq[None, :, :] * A[:, None, :], axis=2)
    return Poset(tuple(names) if names is not None else tuple(labels(X)), leq)


def is_root_system(P: Poset) -> bool:
    """Every up-set is a chain."""
    for i in range(P.n):
        up = P.up_set(i)
        sub = P.leq[np.ix_(up, up)]
        if not np.all(sub | sub.T):
            return False
    return True


# ---------------------------------------------------------------- q-fans

def is_three_closed(X: Iterable[Character]) -> bool:
    S = set(X)
    return all(product(a, b, c) in S for a, b, c in itertools.combinations_with_replacement(S, 3))


def three_closure(X: Iterable[Character]) -> frozenset[Character]:
    S = set(X)
    while True:
        new = {product(a, b, c) for a, b, c in itertools.combinations_with_replacement(S, 3)} - S
        if not new:
            return frozenset(S)
        S |= new


def separation_witness(G: FiniteTS, X: Iterable[Character]) -> tuple[int, int] | None:
    """First pair of distinct elements that no member of X tells apart."""
    A = as_array(X)
    if A.size == 0:
        return (0, 1) if G.n > 1 else None
    cols = [tuple(A[:, i]) for i in range(G.n)]
    seen: dict[tuple, int] = {}
    for i, c in enumerate(cols):
        if c in seen:
            return (seen[c], i)
        seen[c] = i
    return None


def separates(G: FiniteTS, X: Iterable[Character]) -> bool:
    return separation_witness(G, X) is None


def is_q_fan(X: Iterable[Character], G: FiniteTS) -> tuple[bool, str]:
    X = list(X)
    if not X:
        return False, "empty character set"
    if not is_three_closed(X):
        return False, "not closed under triple products"
    w = separation_witness(G, X)
    if w is not None:
        return False, f"does not separate {G.names[w[0]]} from {G.names[w[1]]}"
    return True, "3-closed and separating"


def finite_density_check(G: FiniteTS, X: Iterable[Character], full: CharSet | None = None) -> bool:
    """For 3-closed X: being a q-fan coincides with X being the whole space."""
    X = frozenset(X)
    full = frozenset(full if full is not None else enumerate_characters(G))
    if not X <= full:
        raise ValueError("X is not a set of characters of G")
    if not is_three_closed(X):
        raise ValueError("X is not 3-closed")
    return is_q_fan(X, G)[0] == (X == full)


def three_closed_subsets(full: Sequence[Character]) -> list[frozenset[Character]]:
    """All nonempty 3-closed subsets, found by closing upward from singletons."""
    full = list(full)
    found: set[frozenset[Character]] = set()
    frontier = {three_closure([h]) for h in full}
    found |= frontier
    while frontier:
        nxt = set()
        for S in frontier:
            for h in full:
                if h not in S:
                    T = three_closure(S | {h})
                    if T not in found:
                        found.add(T)
                        nxt.add(T)
        frontier = nxt
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def search_proper_q_fans(G: FiniteTS, full: CharSet | None = None) -> tuple[list[frozenset[Character]], int]:
    """Proper 3-closed separating subsets of the character space.

    Returns the list found (expected empty) and the number of 3-closed subsets
    examined.
    """
    full = tuple(full if full is not None else enumerate_characters(G))
    candidates = three_closed_subsets(full)
    found = [S for S in candidates if len(S) < len(full) and separates(G, S)]
    return found, len(candidates)
