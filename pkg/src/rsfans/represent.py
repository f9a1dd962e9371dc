"""Representation relations and the real-semigroup axioms.

``D[a, b, c]`` (a boolean array) reads "a is represented by the form <b, c>".
The transversal relation ``Dt`` is always derived from ``D``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .characters import Character, as_array, enumerate_characters, separates
from .report import Report
from .ts import FiniteTS

# Tables on {-1, 0, 1}, indexed by value + 1:  TABLE[a+1, b+1, c+1] = a ∈ D(b, c).
_D3_SETS = {
    (0, 0): {0},
    (0, 1): {0, 1}, (1, 0): {0, 1}, (1, 1): {0, 1},
    (0, -1): {0, -1}, (-1, 0): {0, -1}, (-1, -1): {0, -1},
    (1, -1): {-1, 0, 1}, (-1, 1): {-1, 0, 1},
}
_DT3_SETS = {
    (0, 0): {0},
    (0, 1): {1}, (1, 0): {1}, (1, 1): {1},
    (0, -1): {-1}, (-1, 0): {-1}, (-1, -1): {-1},
    (1, -1): {-1, 0, 1}, (-1, 1): {-1, 0, 1},
}


def _to_array(sets) -> np.ndarray:
    t = np.zeros((3, 3, 3), dtype=bool)
    for (b, c), s in sets.items():
        for a in s:
            t[a + 1, b + 1, c + 1] = True
    t.setflags(write=False)
    return t


D3 = _to_array(_D3_SETS)
DT3 = _to_array(_DT3_SETS)


class EmptyCharacterSetError(ValueError):
    pass


def transversal_from(D: np.ndarray, neg: np.ndarray) -> np.ndarray:
    """a ∈ Dt(b,c) iff a ∈ D(b,c), -b ∈ D(-a,c) and -c ∈ D(b,-a)."""
    n = D.shape[0]
    ar = np.arange(n)
    E = D[np.ix_(neg, neg, ar)]   # E[i, j, c] = D[-i, -j, c]
    F = D[np.ix_(neg, ar, neg)]   # F[i, b, k] = D[-i, b, -k]
    return D & E.transpose(1, 0, 2) & F.transpose(2, 1, 0)


@dataclass(frozen=True, eq=False)
class RSModel:
    """A ternary semigroup together with a representation relation."""

    ts: FiniteTS
    D: np.ndarray
    name: str = ""
    chars: tuple[Character, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        d = np.array(self.D, dtype=bool)
        if d.shape != (self.ts.n,) * 3:
            raise ValueError("D must be an n x n x n boolean array")
        d.setflags(write=False)
        object.__setattr__(self, "D", d)
        if not self.name:
            object.__setattr__(self, "name", self.ts.name)

    @cached_property
    def Dt(self) -> np.ndarray:
        t = transversal_from(self.D, self.ts.neg)
        t.setflags(write=False)
        return t

    def rep(self, b: int, c: int) -> list[int]:
        """Elements of D(b, c)."""
        return [int(a) for a in np.flatnonzero(self.D[:, b, c])]

    def trep(self, b: int, c: int) -> list[int]:
        return [int(a) for a in np.flatnonzero(self.Dt[:, b, c])]

    def rep_names(self, b, c, transversal: bool = False) -> list[str]:
        G = self.ts
        xs = self.trep(G.index(b), G.index(c)) if transversal else self.rep(G.index(b), G.index(c))
        return G.names_of(xs)


def three_ts() -> FiniteTS:
    """{1, 0, -1} under ordinary multiplication."""
    vals = (1, 0, -1)
    table = [[vals.index(a * b) for b in vals] for a in vals]
    return FiniteTS(("1", "0", "-1"), np.array(table), 0, 1, 2, name="three",
                    generators=(), generator_names=(), monomials=((1, ()), None, (-1, ())))


def three_rs() -> RSModel:
    """The fixed real semigroup on {1, 0, -1}, from the hard-coded table."""
    G = three_ts()
    vals = np.array([1, 0, -1])
    D = D3[np.ix_(vals + 1, vals + 1, vals + 1)]
    return RSModel(G, D, name="three")


def value_matrix(G: FiniteTS, H: Iterable[Character]) -> np.ndarray:
    A = as_array(H)
    if A.size == 0:
        raise EmptyCharacterSetError("character set must be nonempty")
    if A.shape[1] != G.n:
        raise ValueError("characters do not match the structure")
    return A


def induce_D(G: FiniteTS, H: Iterable[Character]) -> RSModel:
    """a ∈ D(b,c) iff h(a) ∈ D3(h(b), h(c)) for every h in H."""
    H = tuple(tuple(int(t) for t in h) for h in H)
    V = value_matrix(G, H) + 1
    D = D3[V[:, :, None, None], V[:, None, :, None], V[:, None, None, :]].all(axis=0)
    return RSModel(G, D, chars=H)


def induce_Dt(G: FiniteTS, H: Iterable[Character]) -> np.ndarray:
    """Transversal relation straight from the characters: h(a) ∈ Dt3(h(b), h(c))."""
    V = value_matrix(G, H) + 1
    return DT3[V[:, :, None, None], V[:, None, :, None], V[:, None, None, :]].all(axis=0)


def induce_D_by_r_clause(G: FiniteTS, H: Iterable[Character]) -> np.ndarray:
    """Same relation via: h(a) = 0 or h(a) ∈ {h(b), h(c)}, for every h."""
    V = value_matrix(G, H)
    a, b, c = V[:, :, None, None], V[:, None, :, None], V[:, None, None, :]
    return ((a == 0) | (a == b) | (a == c)).all(axis=0)


def induce_Dt_by_tr_clause(G: FiniteTS, H: Iterable[Character]) -> np.ndarray:
    """Either h(a) = 0 and h(b) = -h(c), or h(a) ≠ 0 and h(a) ∈ {h(b), h(c)}."""
    V = value_matrix(G, H)
    a, b, c = V[:, :, None, None], V[:, None, :, None], V[:, None, None, :]
    return (((a == 0) & (b == -c)) | ((a != 0) & ((a == b) | (a == c)))).all(axis=0)


def rs_characters(M: RSModel, candidates: Sequence[Character] | None = None) -> tuple[Character, ...]:
    """Characters of the underlying semigroup that also preserve D."""
    G = M.ts
    cands = candidates if candidates is not None else enumerate_characters(G)
    out = []
    for h in cands:
        v = np.asarray(h) + 1
        allowed = D3[v[:, None, None], v[None, :, None], v[None, None, :]]
        if not np.any(M.D & ~allowed):
            out.append(tuple(h))
    return tuple(out)


# ---------------------------------------------------------------- axioms

def _first(mask: np.ndarray):
    idx = np.argwhere(mask)
    return None if len(idx) == 0 else tuple(int(i) for i in idx[0])


def _mm(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Boolean matrix product via float BLAS."""
    return (A.astype(np.float32) @ B.astype(np.float32)) > 0.5


def rs3_violation(M: RSModel):
    """First (a,b,c,d,e) in lexicographic order breaking strong associativity.

    Hypothesis a ∈ Dt(b,c), c ∈ Dt(d,e); conclusion: some x ∈ Dt(b,d) has
    a ∈ Dt(x,e).
    """
    T = M.Dt
    n = T.shape[0]
    # concl[a, b, d, e] = any_x T[x, b, d] & T[a, x, e]
    P = T.transpose(1, 2, 0).reshape(n * n, n)        # [(b,d), x]
    Q = T.transpose(1, 0, 2).reshape(n, n * n)        # [x, (a,e)]
    concl = _mm(P, Q).reshape(n, n, n, n).transpose(2, 0, 1, 3)   # [a, b, d, e]
    hyp = _mm(T.reshape(n * n, n), T.reshape(n, n * n)).reshape(n, n, n, n)
    bad = hyp & ~concl
    if not bad.any():
        return None
    ab = np.argwhere(bad.any(axis=(2, 3)))[0]
    a, b = int(ab[0]), int(ab[1])
    for c in np.flatnonzero(T[a, b]):
        de = np.argwhere(T[c] & bad[a, b])
        if len(de):
            return (a, b, int(c), int(de[0][0]), int(de[0][1]))
    raise AssertionError("inconsistent strong-associativity scan")


def rs3_prime_violation(M: RSModel):
    """First (a,b,c,d) with Dt(a,b) ∩ Dt(c,d) ≠ ∅ but Dt(a,-c) ∩ Dt(-b,d) = ∅."""
    T = M.Dt
    n = T.shape[0]
    neg = M.ts.neg
    Mx = T.transpose(1, 2, 0).reshape(n * n, n)      # [(a,b), x]
    N = _mm(Mx, Mx.T).reshape(n, n, n, n)            # [a, b, c, d]
    K = N[:, neg][:, :, neg]                         # K[a, i, j, d] = N[a, -i, -j, d]
    concl = K.transpose(0, 2, 1, 3)                  # [a, b, c, d] = N[a, -c, -b, d]
    return _first(N & ~concl)


def weak_rs3_prime_violation(M: RSModel):
    """RS3′ with D in place of Dt."""
    D = M.D
    n = D.shape[0]
    neg = M.ts.neg
    Mx = D.transpose(1, 2, 0).reshape(n * n, n)
    N = _mm(Mx, Mx.T).reshape(n, n, n, n)
    concl = N[:, neg][:, :, neg].transpose(0, 2, 1, 3)
    return _first(N & ~concl)


def check_rs_axioms(M: RSModel) -> Report:
    """Exhaustive check of RS0–RS8; each failure carries its first witness."""
    G = M.ts
    D, T = M.D, M.Dt
    n = G.n
    t = G.table
    neg, sq = G.neg, G.sq
    ar = np.arange(n)
    names = lambda w: None if w is None else G.names_of(w)  # noqa: E731
    rep = Report(f"real semigroup axioms on {M.name}")

    w = _first(D != D.transpose(0, 2, 1))
    rep.add("RS0", w is None, names(w))

    w = _first(~D[ar[:, None], ar[:, None], ar[None, :]])   # a ∈ D(a, b)
    rep.add("RS1", w is None, names(w))

    w = None
    for d in range(n):
        m = t[:, d]
        bad = D & ~D[np.ix_(m, m, m)]
        w1 = _first(bad)
        if w1 is not None and (w is None or w1 + (d,) < w):
            w = w1 + (d,)
    rs2 = w is None
    rep.add("RS2", rs2, names(w))

    direct = rs3_violation(M)
    prime = rs3_prime_violation(M)
    if rs2:
        assert (direct is None) == (prime is None), "RS3 and RS3' disagree although RS2 holds"
    rep.add("RS3", direct is None, names(direct),
            "" if (direct is None) == (prime is None) else "RS3' verdict differs (RS2 fails)")

    w = None
    ids = G.idempotents
    for p in ids:
        for q in ids:
            # e ∈ D(p·a, q·b) ⇒ e ∈ D(a, b)
            bad = D[np.ix_(ar, t[p], t[q])] & ~D
            w1 = _first(bad)
            if w1 is not None:
                e, a, b = w1
                c = next(x for x in range(n) if sq[x] == p)
                dd = next(x for x in range(n) if sq[x] == q)
                cand = (a, b, c, dd, e)
                if w is None or cand < w:
                    w = cand
    rep.add("RS4", w is None, names(w))

    w = None
    for a in range(n):
        for b in range(n):
            E = t[a] == t[b]
            if E.all():
                continue
            reach = D[:, E][:, :, E].any(axis=(1, 2))
            bad = reach & (t[a] != t[b])
            if bad.any():
                c = int(np.flatnonzero(bad)[0])
                de = np.argwhere(D[c][np.ix_(E, E)])[0]
                dd, e = np.flatnonzero(E)[de[0]], np.flatnonzero(E)[de[1]]
                w = (a, b, c, int(dd), int(e))
                break
        if w is not None:
            break
    rep.add("RS5", w is None, names(w))

    # c ∈ D(a,b) ⇒ c ∈ Dt(c²a, c²b); index order (c, a, b)
    sa = t[sq[:, None], ar[None, :]]      # [c, a] -> c²a
    hyp = D
    concl = T[ar[:, None, None], sa[:, :, None], sa[:, None, :]]
    w = _first(hyp & ~concl)
    rep.add("RS6", w is None, names(w))

    # Dt(a,-b) ∩ Dt(b,-a) ≠ ∅ ⇒ a = b
    A = T[:, ar[:, None], neg[None, :]]   # [x, a, b] = x ∈ Dt(a, -b)
    B = A.transpose(0, 2, 1)              # [x, a, b] = x ∈ Dt(b, -a)
    meet = (A & B).any(axis=0) & (ar[:, None] != ar[None, :])
    w = _first(meet)
    rep.add("RS7", w is None, names(w))

    w = _first(D & ~D[np.ix_(sq, sq, sq)])
    rep.add("RS8", w is None, names(w))
    return rep


def rs_all_but_rs3(rep: Report) -> bool:
    return all(v.passed for k, v in rep.results.items() if k != "RS3")


# ---------------------------------------------------------------- search

def separating_subsets(G: FiniteTS, full: Sequence[Character], max_size: int):
    for k in range(1, max_size + 1):
        for H in itertools.combinations(full, k):
            if separates(G, H):
                yield H


@dataclass(frozen=True)
class RS3Search:
    found: tuple[Character, ...] | None
    witness: tuple[str, ...] | None
    examined: int
    exhausted: bool


def find_rs3_counterexample(G: FiniteTS, max_subset_size: int, budget: int | None = None) -> RS3Search:
    """Search separating subsets of the character space, smallest first, for
    one whose induced relation breaks strong associativity."""
    full = enumerate_characters(G)
    examined = 0
    for H in separating_subsets(G, full, min(max_subset_size, len(full))):
        if budget is not None and examined >= budget:
            return RS3Search(None, None, examined, False)
        examined += 1
        v = rs3_violation(induce_D(G, H))
        if v is not None:
            return RS3Search(H, tuple(G.names_of(v)), examined, True)
    return RS3Search(None, None, examined, True)
