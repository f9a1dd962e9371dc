"""Preorders on ℚ[X]/(X²) and on the integers, checked on finite samples.

Every statement here quantifies over an infinite ring, so reports say either
"holds on sample" or "refuted by witness", never more.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence


@dataclass(frozen=True, order=True)
class DualNumber:
    """aX + b with X² = 0."""

    a: Fraction
    b: Fraction

    def __init__(self, a=0, b=0):
        object.__setattr__(self, "a", a if type(a) is Fraction else Fraction(a))
        object.__setattr__(self, "b", b if type(b) is Fraction else Fraction(b))

    def __add__(self, o: "DualNumber") -> "DualNumber":
        return DualNumber(self.a + o.a, self.b + o.b)

    def __neg__(self) -> "DualNumber":
        return DualNumber(-self.a, -self.b)

    def __sub__(self, o: "DualNumber") -> "DualNumber":
        return self + (-o)

    def __mul__(self, o: "DualNumber") -> "DualNumber":
        return DualNumber(self.a * o.b + o.a * self.b, self.b * o.b)

    def __str__(self) -> str:
        return f"{_fmt(self.a)}X{'+' if self.b >= 0 else '-'}{_fmt(abs(self.b))}"

    __repr__ = __str__


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


ZERO, ONE, X = DualNumber(0, 0), DualNumber(0, 1), DualNumber(1, 0)


@dataclass(frozen=True)
class PreorderSpec:
    """A named decidable membership rule."""

    name: str
    member: Callable[[object], bool]

    def __call__(self, v) -> bool:
        return self.member(v)


def lex_preorder_member(v: DualNumber) -> bool:
    """b > 0, or b = 0 and a ≥ 0."""
    return v.b > 0 or (v.b == 0 and v.a >= 0)


def _is_rational_square(q: Fraction) -> bool:
    if q < 0:
        return False
    from math import isqrt

    n, d = q.numerator, q.denominator
    return isqrt(n) ** 2 == n and isqrt(d) ** 2 == d


def squares_member(v: DualNumber) -> bool:
    """v = (cX + d)² = 2cdX + d² for some rationals c, d."""
    if v.b == 0:
        return v.a == 0
    return _is_rational_square(v.b)


LEX = PreorderSpec("lex", lex_preorder_member)
SQUARES = PreorderSpec("squares", squares_member)
SUMS_OF_SQUARES_Z = PreorderSpec("sums-of-squares", lambda n: n >= 0)  # Lagrange: every n ≥ 0
NONNEG_CONSTANT = PreorderSpec("b ≥ 0", lambda v: v.b >= 0)
POSITIVE_OR_ZERO = PreorderSpec("b > 0 or zero", lambda v: v.b > 0 or v == ZERO)

PREORDERS = {"lex": LEX, "squares": SQUARES}


def dual_sample(N: int) -> list[DualNumber]:
    """All aX + b with integers a, b in [-N, N]."""
    return [DualNumber(a, b) for b in range(-N, N + 1) for a in range(-N, N + 1)]


def int_sample(N: int) -> list[int]:
    return list(range(-N, N + 1))


@dataclass
class SampleReport:
    title: str
    results: dict[str, tuple[bool, str | None]]

    @property
    def ok(self) -> bool:
        return all(v[0] for v in self.results.values())

    def add(self, key: str, witness=None):
        self.results[key] = (witness is None, None if witness is None else _wstr(witness))

    def format(self) -> str:
        lines = [self.title]
        for k, (ok, w) in self.results.items():
            lines.append(f"  {k.ljust(28)} {'holds on sample' if ok else 'refuted by witness ' + str(w)}")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {"title": self.title, "ok": self.ok,
                "results": {k: {"holds_on_sample": ok, "witness": w} for k, (ok, w) in self.results.items()}}


def _wstr(w) -> str:
    if isinstance(w, tuple):
        return "(" + ", ".join(str(x) for x in w) + ")"
    return str(w)


def _unit(sample) -> tuple:
    if sample and isinstance(sample[0], DualNumber):
        return ZERO, ONE, -ONE
    return 0, 1, -1


def verify_total_preorder(T: PreorderSpec, sample: Sequence) -> SampleReport:
    sample = list(sample)
    zero, one, m1 = _unit(sample)
    rep = SampleReport(f"total preorder '{T.name}' on {len(sample)} elements", {})
    rep.add("squares inside", next((x for x in sample if not T(x * x)), None))
    inside = [x for x in sample if T(x)]
    rep.add("closed under products", next(((s, t) for s, t in itertools.product(inside, repeat=2)
                                           if not T(s * t)), None))
    rep.add("closed under sums", next(((s, t) for s, t in itertools.product(inside, repeat=2)
                                       if not T(s + t)), None))
    rep.add("-1 excluded", m1 if T(m1) else None)
    rep.add("T ∪ -T covers", next((x for x in sample if not (T(x) or T(-x))), None))
    return rep


@dataclass(frozen=True)
class SupportReport:
    support: tuple
    radical_witness: tuple | None
    convex_witness: tuple | None


def support(T: PreorderSpec, sample: Sequence, witnesses: Iterable[tuple] = ()) -> SupportReport:
    """T ∩ -T on the sample, with T-radical and T-convex witness scans.

    T-radical: a² + t in the support (t in T) forces a into it.
    T-convex: t₁ + t₂ in the support (tᵢ in T) forces t₁, t₂ into it.
    Extra (a, t) pairs in ``witnesses`` are tested first.
    """
    sample = list(sample)
    sup = [x for x in sample if T(x) and T(-x)]
    in_sup = lambda v: T(v) and T(-v)  # noqa: E731
    ts = [t for t in sample if T(t)]
    rad = None
    for a, t in itertools.chain(witnesses, itertools.product(sample, ts)):
        if T(t) and in_sup(a * a + t) and not in_sup(a):
            rad = (a, t)
            break
    conv = None
    for t1, t2 in itertools.product(ts, repeat=2):
        if in_sup(t1 + t2) and not (in_sup(t1) and in_sup(t2)):
            conv = (t1, t2)
            break
    return SupportReport(tuple(sup), rad, conv)


def ts_char_subset_conditions(S: PreorderSpec, T: PreorderSpec, sample: Sequence,
                              additive: bool = True) -> SampleReport:
    """Conditions (1)–(6) for S to come from a character, plus optional additivity."""
    sample = list(sample)
    zero, one, m1 = _unit(sample)
    rep = SampleReport(f"character conditions for '{S.name}' over '{T.name}'", {})
    sym = lambda v: S(v) and S(-v)  # noqa: E731
    rep.add("1 T inside S", next((x for x in sample if T(x) and not S(x)), None))
    ins = [x for x in sample if S(x)]
    rep.add("2 products", next(((s, t) for s, t in itertools.product(ins, repeat=2) if not S(s * t)), None))
    rep.add("3 -1 excluded", m1 if S(m1) else None)
    rep.add("4 S ∪ -S covers", next((x for x in sample if not (S(x) or S(-x))), None))
    rep.add("5 S ∩ -S prime", next(((a, b) for a, b in itertools.product(sample, repeat=2)
                                    if sym(a * b) and not sym(a) and not sym(b)), None))
    ts = [t for t in sample if T(t)]
    rep.add("6 S ∩ -S T-convex", next(((a, b) for a, b in itertools.product(ts, repeat=2)
                                       if sym(a + b) and not (sym(a) and sym(b))), None))
    if additive:
        rep.add("additively closed", next(((s, t) for s, t in itertools.product(ins, repeat=2)
                                           if not S(s + t)), None))
    return rep


def parse_dual(text: str) -> DualNumber:
    """Read 'aX+b' (either part optional)."""
    import re

    s = text.replace(" ", "")
    m = re.fullmatch(r"(?:([+-]?\d*(?:/\d+)?)X)?([+-]?\d+(?:/\d+)?)?", s)
    if not m or not s:
        raise ValueError(f"cannot read {text!r} as aX+b")
    a_txt, b_txt = m.group(1), m.group(2)
    if a_txt is None:
        a = 0
    elif a_txt in ("", "+"):
        a = 1
    elif a_txt == "-":
        a = -1
    else:
        a = Fraction(a_txt)
    return DualNumber(a, Fraction(b_txt) if b_txt else 0)
