"""Finite ternary semigroups.

A ternary semigroup here is a finite commutative monoid with distinguished
elements ``1``, ``0`` and ``-1`` such that ``x**3 == x``, ``x*0 == 0``,
``(-1)**2 == 1 != -1`` and ``-x == x`` only for ``x == 0``.  Elements are
integer indices into a Cayley table; display names travel alongside.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .report import Report

# A signed monomial over k generators: (sign, exponent vector); None is zero.
Monomial = tuple[int, tuple[int, ...]]
Term = Monomial | None

SQUARE = "²"


class StructureError(ValueError):
    """The input is not even a well-formed table (shape, range, names)."""


class DegeneratePresentationError(ValueError):
    """The relations force 1 = -1 (or 1 = 0), so no ternary semigroup results."""


class TSAxiomError(ValueError):
    """A table was required to be a ternary semigroup but is not."""

    def __init__(self, report: Report):
        super().__init__(f"not a ternary semigroup: failing {', '.join(report.failures())}")
        self.report = report


# ---------------------------------------------------------------- monomials

def reduce_exponent(e: int) -> int:
    """Exponent normal form under x^3 = x."""
    if e <= 0:
        return 0
    return 1 if e % 2 else 2


def monomial_key(m: Monomial) -> tuple:
    """Sort key used for class representatives and element order.

    Lower total degree first, then smaller support, then earlier generators
    carry more weight; a positive sign wins ties.
    """
    sign, exps = m
    return (sum(exps), sum(1 for e in exps if e), tuple(-e for e in exps), sign < 0)


def monomial_mul(m1: Term, m2: Term) -> Term:
    if m1 is None or m2 is None:
        return None
    s1, e1 = m1
    s2, e2 = m2
    return (s1 * s2, tuple(reduce_exponent(a + b) for a, b in zip(e1, e2)))


def monomial_name(generators: Sequence[str], term: Term) -> str:
    if term is None:
        return "0"
    sign, exps = term
    joiner = "" if all(len(g) == 1 for g in generators) else "*"
    body = joiner.join(g + (SQUARE if e == 2 else "") for g, e in zip(generators, exps) if e)
    return ("-" if sign < 0 else "") + (body or "1")


_EXP_CHARS = {"¹": 1, "²": 2, "³": 3}


def normalize_name(text: str) -> str:
    """Canonical spelling of an element name: ASCII minus, superscript squares."""
    text = text.strip().replace("−", "-")
    return re.sub(r"\^2", SQUARE, text)


def parse_term(text: str, generators: Sequence[str]) -> Term:
    """Parse a signed monomial such as ``-x^2z``, ``x²·y`` or ``0``."""
    raw = text
    s = text.strip().replace("−", "-")
    if not s:
        raise ValueError(f"empty monomial in {raw!r}")
    sign = 1
    while s.startswith("-") or s.startswith("+"):
        if s[0] == "-":
            sign = -sign
        s = s[1:].lstrip()
    k = len(generators)
    exps = [0] * k
    index = {g: i for i, g in enumerate(generators)}
    pos = 0
    zero = False
    while pos < len(s):
        ch = s[pos]
        if ch in " *·.":
            pos += 1
            continue
        if ch.isdigit():
            m = re.match(r"\d+", s[pos:])
            num = int(m.group())
            pos += m.end()
            if num == 0:
                zero = True
            elif num != 1:
                raise ValueError(f"numeric factor {num} not allowed in {raw!r}")
            continue
        m = re.match(r"[A-Za-z_][A-Za-z0-9_]*", s[pos:])
        if not m:
            raise ValueError(f"unexpected character {ch!r} in {raw!r} at column {pos + 1}")
        ident = m.group()
        pos += m.end()
        if ident in index:
            names = [ident]
        elif all(c in index for c in ident):
            names = list(ident)
        else:
            raise ValueError(f"unknown generator in {ident!r} (monomial {raw!r})")
        power = 1
        if pos < len(s) and s[pos] == "^":
            m = re.match(r"\^(\d+)", s[pos:])
            if not m:
                raise ValueError(f"bad exponent in {raw!r}")
            power = int(m.group(1))
            pos += m.end()
        elif pos < len(s) and s[pos] in _EXP_CHARS:
            power = _EXP_CHARS[s[pos]]
            pos += 1
        # an exponent binds to the last letter only, as in "xy^2"
        for j, name in enumerate(names):
            exps[index[name]] += power if j == len(names) - 1 else 1
    if zero:
        return None
    return (sign, tuple(reduce_exponent(e) for e in exps))


@dataclass(frozen=True)
class Presentation:
    """Generators plus relations between signed monomials."""

    generators: tuple[str, ...]
    relations: tuple[tuple[Term, Term], ...] = ()

    @classmethod
    def parse(cls, generators: Iterable[str], relations: Iterable[str]) -> "Presentation":
        gens = tuple(generators)
        if len(set(gens)) != len(gens):
            raise ValueError("duplicate generator names")
        for g in gens:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", g):
                raise ValueError(f"bad generator name {g!r}")
        rels = []
        for line in relations:
            if line.count("=") != 1:
                raise ValueError(f"relation must have exactly one '=': {line!r}")
            lhs, rhs = line.split("=")
            rels.append((parse_term(lhs, gens), parse_term(rhs, gens)))
        return cls(gens, tuple(rels))

    def relation_strings(self) -> list[str]:
        return [f"{monomial_name(self.generators, l)} = {monomial_name(self.generators, r)}"
                for l, r in self.relations]


# ---------------------------------------------------------------- structure

@dataclass(frozen=True, eq=False)
class FiniteTS:
    """A finite ternary semigroup given by its Cayley table.

    ``generators`` (element indices) and ``monomials`` (one signed monomial per
    element) are present when the structure came from a presentation; they let
    character enumeration work on generator values only.
    """

    names: tuple[str, ...]
    table: np.ndarray
    one: int
    zero: int
    minus_one: int
    name: str = "G"
    generators: tuple[int, ...] | None = None
    generator_names: tuple[str, ...] | None = None
    monomials: tuple[Term, ...] | None = None
    presentation: Presentation | None = field(default=None, compare=False)

    def __post_init__(self):
        t = np.array(self.table, dtype=np.int64)
        t.setflags(write=False)
        object.__setattr__(self, "table", t)
        object.__setattr__(self, "names", tuple(self.names))

    # basic accessors
    @property
    def n(self) -> int:
        return len(self.names)

    def __len__(self) -> int:
        return len(self.names)

    def __repr__(self) -> str:
        return f"FiniteTS({self.name!r}, n={self.n})"

    @cached_property
    def _index(self) -> dict[str, int]:
        return {nm: i for i, nm in enumerate(self.names)}

    def index(self, name: str | int) -> int:
        if isinstance(name, (int, np.integer)):
            return int(name)
        key = normalize_name(name)
        if key in self._index:
            return self._index[key]
        if self.presentation is not None:
            try:
                term = parse_term(key, self.presentation.generators)
            except ValueError:
                term = None
            else:
                return self.element_of_term(term)
        raise KeyError(f"unknown element {name!r} in {self.name}")

    def element_of_term(self, term: Term) -> int:
        """Element denoted by a monomial (requires generator data)."""
        if term is None:
            return self.zero
        if self.generators is None:
            raise ValueError("structure has no generators")
        sign, exps = term
        x = self.one if sign > 0 else self.minus_one
        for g, e in zip(self.generators, exps):
            for _ in range(e):
                x = int(self.table[x, g])
        return x

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def prod(self, *xs: int) -> int:
        r = self.one
        for x in xs:
            r = int(self.table[r, x])
        return r

    @cached_property
    def neg(self) -> np.ndarray:
        """``neg[a]`` is the index of ``-a``."""
        return self.table[self.minus_one].copy()

    @cached_property
    def sq(self) -> np.ndarray:
        """``sq[a]`` is the index of ``a²``."""
        return self.table[np.arange(self.n), np.arange(self.n)].copy()

    @cached_property
    def idempotents(self) -> tuple[int, ...]:
        """Id(G) = {x² : x in G}, in element order."""
        return tuple(sorted(set(int(s) for s in self.sq)))

    @cached_property
    def units(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.n) if self.sq[i] == self.one)

    def names_of(self, xs: Iterable[int]) -> list[str]:
        return [self.names[int(x)] for x in xs]

    def same_structure(self, other: "FiniteTS") -> bool:
        return (self.names == other.names
                and np.array_equal(self.table, other.table)
                and (self.one, self.zero, self.minus_one) == (other.one, other.zero, other.minus_one))

    def validate(self) -> "FiniteTS":
        rep = check_ts_axioms(self.names, self.table, self.one, self.zero, self.minus_one)
        if not rep.ok:
            raise TSAxiomError(rep)
        return self


# ---------------------------------------------------------------- axioms

def _check_structure(names, table, one, zero, minus_one) -> np.ndarray:
    try:
        t = np.asarray(table)
    except Exception as exc:  # ragged input
        raise StructureError(f"table is not rectangular: {exc}") from None
    if t.dtype == object or t.ndim != 2 or t.shape[0] != t.shape[1]:
        raise StructureError(f"table must be square, got shape {getattr(t, 'shape', None)}")
    n = t.shape[0]
    if len(names) != n:
        raise StructureError(f"{len(names)} names for a {n}x{n} table")
    if len(set(names)) != n:
        raise StructureError("element names are not distinct")
    if not np.issubdtype(t.dtype, np.integer):
        raise StructureError("table entries must be element indices")
    if n == 0 or t.min() < 0 or t.max() >= n:
        raise StructureError("table entry out of range")
    for label, c in (("one", one), ("zero", zero), ("minus_one", minus_one)):
        if not 0 <= c < n:
            raise StructureError(f"constant {label} out of range")
    return t.astype(np.int64)


def _first(mask: np.ndarray):
    idx = np.argwhere(mask)
    return None if len(idx) == 0 else tuple(int(i) for i in idx[0])


def check_ts_axioms(names: Sequence[str], table, one: int, zero: int, minus_one: int) -> Report:
    """Check the five ternary-semigroup axioms; witnesses are element names.

    Raises :class:`StructureError` for malformed input, which is different from
    an axiom failure.
    """
    t = _check_structure(names, table, one, zero, minus_one)
    n = t.shape[0]
    ar = np.arange(n)
    nm = lambda xs: [names[i] for i in xs]  # noqa: E731
    rep = Report("ternary semigroup axioms")

    w = _first(t != t.T)
    if w is not None:
        rep.add("TS1", False, nm(w), "not commutative")
    else:
        left = t[t]  # (ab)c
        right = t[ar[:, None, None], t[None, :, :]]  # a(bc)
        w = _first(left != right)
        if w is not None:
            rep.add("TS1", False, nm(w), "not associative")
        else:
            w = _first(t[one] != ar)
            rep.add("TS1", w is None, None if w is None else nm(w), "" if w is None else "one is not a unit")

    cube = t[t[ar, ar], ar]
    w = _first(cube != ar)
    rep.add("TS2", w is None, None if w is None else nm(w))

    if minus_one == one:
        rep.add("TS3", False, nm([minus_one]), "-1 equals 1")
    else:
        ok = t[minus_one, minus_one] == one
        rep.add("TS3", bool(ok), None if ok else nm([minus_one, minus_one]), "" if ok else "(-1)(-1) != 1")

    w = _first(t[:, zero] != zero)
    rep.add("TS4", w is None, None if w is None else nm(w))

    w = _first((t[minus_one] == ar) & (ar != zero))
    rep.add("TS5", w is None, None if w is None else nm(w))
    return rep


# ---------------------------------------------------------------- presentations

def _free_terms(k: int) -> list[Term]:
    monos = sorted((e for e in itertools.product(range(3), repeat=k) if any(e)),
                   key=lambda e: monomial_key((1, e)))
    zero_exp = (0,) * k
    terms: list[Term] = [(1, zero_exp), None, (-1, zero_exp)]
    for e in monos:
        terms += [(1, e), (-1, e)]
    return terms


def _from_terms(terms: list[Term], generators: Sequence[str], name: str,
                presentation: Presentation | None) -> FiniteTS:
    pos = {t: i for i, t in enumerate(terms)}
    n = len(terms)
    table = np.empty((n, n), dtype=np.int64)
    for i, a in enumerate(terms):
        for j in range(i, n):
            table[i, j] = table[j, i] = pos[monomial_mul(a, terms[j])]
    k = len(generators)
    gens = tuple(pos[(1, tuple(int(i == g) for i in range(k)))] for g in range(k))
    return FiniteTS(tuple(monomial_name(generators, t) for t in terms), table, 0, 1, 2,
                    name=name, generators=gens, generator_names=tuple(generators),
                    monomials=tuple(terms), presentation=presentation)


def free_ts(generators: Sequence[str] | int, name: str | None = None) -> FiniteTS:
    """The free ternary semigroup on the given generators (2·3^k + 1 elements)."""
    if isinstance(generators, int):
        generators = "xyzuvw"[:generators] if generators <= 6 else [f"g{i}" for i in range(generators)]
    gens = tuple(generators)
    return _from_terms(_free_terms(len(gens)), gens, name or f"free{len(gens)}",
                       Presentation(gens, ()))


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[max(ra, rb)] = min(ra, rb)
        return True


def build_from_presentation(p: Presentation, name: str = "G") -> FiniteTS:
    """Quotient of the free structure by the smallest congruence that contains
    the relations and merges any ``x ≡ -x`` into the class of 0."""
    free = free_ts(p.generators)
    terms = list(free.monomials)
    pos = {t: i for i, t in enumerate(terms)}
    t = free.table
    n = free.n
    uf = _UnionFind(n)
    for lhs, rhs in p.relations:
        uf.union(pos[lhs], pos[rhs])
    multipliers = list(free.generators) + [free.minus_one]
    neg = free.neg
    changed = True
    while changed:
        changed = False
        for a in range(n):
            r = uf.find(a)
            if r == a:
                continue
            for g in multipliers:
                changed |= uf.union(int(t[a, g]), int(t[r, g]))
        for a in range(n):
            if uf.find(a) == uf.find(int(neg[a])) and uf.find(a) != uf.find(free.zero):
                uf.union(a, free.zero)
                changed = True
    if uf.find(free.one) in (uf.find(free.minus_one), uf.find(free.zero)):
        raise DegeneratePresentationError(
            "relations force 1 = -1; the quotient is not a ternary semigroup")

    classes: dict[int, list[int]] = {}
    for a in range(n):
        classes.setdefault(uf.find(a), []).append(a)

    def rep_term(root: int) -> Term:
        members = classes[root]
        if uf.find(free.zero) == root:
            return None
        return min((terms[m] for m in members), key=monomial_key)

    root_one, root_zero, root_m1 = uf.find(free.one), uf.find(free.zero), uf.find(free.minus_one)
    zero_exp = (0,) * len(p.generators)
    ordered: list[Term] = [(1, zero_exp), None, (-1, zero_exp)]
    root_of: dict[Term, int] = {ordered[0]: root_one, None: root_zero, ordered[2]: root_m1}
    positive = []
    for root in classes:
        if root in (root_one, root_zero, root_m1):
            continue
        rt = rep_term(root)
        if rt[0] > 0:
            positive.append((rt, root))
    positive.sort(key=lambda pr: monomial_key(pr[0]))
    for rt, root in positive:
        nrt = (-1, rt[1])
        ordered += [rt, nrt]
        root_of[rt] = root
        root_of[nrt] = uf.find(int(neg[classes[root][0]]))
    index_of_root = {root_of[tm]: i for i, tm in enumerate(ordered)}
    m = len(ordered)
    assert m == len(classes)
    qt = np.empty((m, m), dtype=np.int64)
    reps = [pos[tm] for tm in ordered]
    for i in range(m):
        for j in range(m):
            qt[i, j] = index_of_root[uf.find(int(t[reps[i], reps[j]]))]
    gens = tuple(index_of_root[uf.find(g)] for g in free.generators)
    return FiniteTS(tuple(monomial_name(p.generators, tm) for tm in ordered), qt, 0, 1, 2,
                    name=name, generators=gens, generator_names=p.generators,
                    monomials=tuple(ordered), presentation=p)


def from_presentation(generators: Iterable[str], relations: Iterable[str] = (), name: str = "G") -> FiniteTS:
    """Convenience wrapper: parse relation strings and build the structure."""
    return build_from_presentation(Presentation.parse(generators, relations), name=name)


# ---------------------------------------------------------------- divisibility, [Z]

def divides(G: FiniteTS, a: int, b: int) -> bool:
    """``a`` divides ``b`` iff a²b² = b²."""
    return G.mul(G.sq[a], G.sq[b]) == G.sq[b]


def divides_by_search(G: FiniteTS, a: int, b: int) -> bool:
    """Direct definition: some x has b = a·x."""
    return bool(np.any(G.table[a] == b))


def divisibility_matrix(G: FiniteTS) -> np.ndarray:
    """``M[a, b]`` is true iff a divides b."""
    s = G.sq
    return G.table[np.ix_(s, s)] == s[None, :]


def satisfies_condition_z(G: FiniteTS) -> tuple[bool, tuple[int, int] | None]:
    """Any two zero-sets comparable: a²b² equals a² or b² for every pair.

    Returns the verdict and, on failure, the first offending pair.
    """
    s = G.sq
    p = G.table[np.ix_(s, s)]
    bad = (p != s[:, None]) & (p != s[None, :])
    w = _first(bad)
    return (w is None, w)


# ---------------------------------------------------------------- ideals

def principal_ideal(G: FiniteTS, c: int) -> frozenset[int]:
    return frozenset(int(x) for x in G.table[c])


def is_ideal(G: FiniteTS, members: Iterable[int]) -> bool:
    s = sorted(set(members))
    if not s or G.zero not in s:
        return False
    return bool(np.isin(G.table[s], s).all())


def is_prime_ideal(G: FiniteTS, members: Iterable[int]) -> bool:
    """Proper ideal with ab ∈ I ⇒ a ∈ I or b ∈ I."""
    s = set(members)
    if not is_ideal(G, s) or G.one in s:
        return False
    inside = np.zeros(G.n, dtype=bool)
    inside[list(s)] = True
    prod_in = inside[G.table]
    return not np.any(prod_in & ~inside[:, None] & ~inside[None, :])


def _prime_witness(G: FiniteTS, members) -> tuple[int, int] | None:
    inside = np.zeros(G.n, dtype=bool)
    inside[list(members)] = True
    return _first(inside[G.table] & ~inside[:, None] & ~inside[None, :])


@dataclass(frozen=True)
class IdealInfo:
    members: frozenset[int]
    proper: bool
    prime: bool


@dataclass(frozen=True)
class IdealReport:
    ideals: tuple[IdealInfo, ...]
    is_chain: bool
    all_proper_prime: bool

    def proper(self) -> list[frozenset[int]]:
        return [i.members for i in self.ideals if i.proper]


def all_ideals(G: FiniteTS) -> list[frozenset[int]]:
    """Every ideal, sorted by size then members.

    Each ideal is the union of the principal ideals of its elements, so the
    family is the union-closure of the principal ideals.
    """
    principals = sorted({principal_ideal(G, c) for c in range(G.n)}, key=lambda s: (len(s), sorted(s)))
    found: set[frozenset[int]] = set(principals)
    frontier = list(principals)
    while frontier:
        nxt = []
        for I in frontier:
            for P in principals:
                U = I | P
                if U not in found:
                    found.add(U)
                    nxt.append(U)
        frontier = nxt
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def ideals(G: FiniteTS) -> IdealReport:
    """All ideals, each flagged proper/prime, with the chain flag."""
    ids = all_ideals(G)
    infos = tuple(IdealInfo(I, G.one not in I, is_prime_ideal(G, I)) for I in ids)
    chain = all(a <= b or b <= a for a, b in itertools.combinations(ids, 2))
    return IdealReport(infos, chain, all(i.prime for i in infos if i.proper))


def spec(G: FiniteTS) -> list[frozenset[int]]:
    """Prime ideals (all proper by definition)."""
    return [i.members for i in ideals(G).ideals if i.prime]


def condition_z_report(G: FiniteTS) -> Report:
    """The three equivalent forms of [Z], evaluated independently."""
    z, w = satisfies_condition_z(G)
    info = ideals(G)
    rep = Report(f"condition [Z] on {G.name}")
    rep.add("squares comparable", z, None if w is None else G.names_of(w))
    witness = None
    for i in info.ideals:
        if i.proper and not i.prime:
            pw = _prime_witness(G, i.members)
            witness = G.names_of(pw) if pw else None
            break
    rep.add("proper ideals prime", info.all_proper_prime, witness)
    rep.add("ideals form a chain", info.is_chain)
    return rep
