"""Exact calculus of coefficient sets: I+, D(I), D_d(I).

The three derived sets are

    I+      = {0} u { sums of elements of I lying in [0,1] }
    D(I)    = { (m-1+f)/m <= 1 : m >= 1, f in I+ }
    D_d(I)  = { (m-1+f+k*d)/m <= 1 : m,k >= 1, f in I+ }

Sets are represented by finitely many nonnegative rational generators.
Enumerations are complete relative to explicit parameter bounds (term count,
m, k, value cap); the ``mem_*`` deciders are exact and never truncate.  All
arithmetic is in ``fractions.Fraction``.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Iterable, Optional

from .rationals import format_rational, parse_rational


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


@dataclass(frozen=True)
class CoeffSet:
    """A finite, sorted, duplicate-free set of nonnegative rationals."""

    elements: tuple[Fraction, ...]

    def __post_init__(self):
        for x in self.elements:
            if x < 0:
                raise DomainError(f"negative coefficient {format_rational(x)}")
        if list(self.elements) != sorted(set(self.elements)):
            object.__setattr__(self, "elements", tuple(sorted(set(self.elements))))

    @classmethod
    def of(cls, items: Iterable) -> "CoeffSet":
        return cls(tuple(sorted({Fraction(x) for x in items})))

    @classmethod
    def parse(cls, text: str) -> "CoeffSet":
        """Parse a comma- or whitespace-separated list of rationals."""
        items = text.replace(",", " ").split()
        return cls.of(parse_rational(s) for s in items)

    @property
    def min_positive(self) -> Optional[Fraction]:
        for x in self.elements:
            if x > 0:
                return x
        return None

    def positive(self) -> tuple[Fraction, ...]:
        return tuple(x for x in self.elements if x > 0)

    def __contains__(self, x) -> bool:
        return x in self.elements

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __str__(self):
        return "{" + ", ".join(format_rational(x) for x in self.elements) + "}"


@dataclass(frozen=True)
class EnumBounds:
    """Completeness parameters for the bounded enumerations.

    max_terms bounds the number of summands, max_index bounds the integer
    parameters m and k, max_value caps unbounded positive-combination sums,
    and max_denominator (when set) filters enumerated threshold values by
    their reduced denominator.
    """

    max_terms: int = 4
    max_index: int = 6
    max_value: Optional[Fraction] = None
    max_denominator: Optional[int] = None

    def __post_init__(self):
        if self.max_terms < 1 or self.max_index < 1:
            raise DomainError("bounds must be >= 1")
        if self.max_value is not None and self.max_value < 1:
            raise DomainError("max_value must be >= 1")
        if self.max_denominator is not None and self.max_denominator < 1:
            raise DomainError("max_denominator must be >= 1")


ONE = Fraction(1)
ZERO = Fraction(0)


def plus_closure(I: CoeffSet, b: EnumBounds) -> CoeffSet:
    """Bounded enumeration of I+: sums of at most b.max_terms elements of I
    (with repetition) that lie in [0,1], together with 0."""
    gens = I.positive()
    frontier = {ZERO}
    seen = {ZERO}
    for _ in range(b.max_terms):
        nxt = set()
        for s in frontier:
            for g in gens:
                t = s + g
                if t <= 1 and t not in seen:
                    seen.add(t)
                    nxt.add(t)
        if not nxt:
            break
        frontier = nxt
    return CoeffSet.of(seen)


def plus_closure_exact(I: CoeffSet) -> CoeffSet:
    """The full set I+ (exact: term count is self-bounded by 1/min(I>0))."""
    gens = I.positive()
    seen = {ZERO}
    frontier = {ZERO}
    while frontier:
        nxt = set()
        for s in frontier:
            for g in gens:
                t = s + g
                if t <= 1 and t not in seen:
                    seen.add(t)
                    nxt.add(t)
        frontier = nxt
    return CoeffSet.of(seen)


def mem_plus_closure(a: Fraction, I: CoeffSet) -> bool:
    """Exact membership a in I+.

    Scales a and the generators to a common denominator and runs an
    unbounded-repetition integer knapsack; termination is guaranteed because
    every positive generator is >= min_positive(I).
    """
    if a < 0 or a > 1:
        raise DomainError(f"argument {format_rational(a)} outside [0,1]")
    if a == 0:
        return True
    gens = I.positive()
    if not gens:
        return False
    denom = lcm(a.denominator, *(g.denominator for g in gens))
    target = a.numerator * (denom // a.denominator)
    weights = sorted({g.numerator * (denom // g.denominator) for g in gens})
    reachable = [False] * (target + 1)
    reachable[0] = True
    for x in range(1, target + 1):
        for w in weights:
            if w > x:
                break
            if reachable[x - w]:
                reachable[x] = True
                break
    return reachable[target]


def pos_combinations(J: CoeffSet, b: EnumBounds) -> CoeffSet:
    """All sums of 1..b.max_terms positive elements of J (with repetition)
    of total value <= b.max_value.  Not capped at 1."""
    gens = J.positive()
    if not gens:
        raise DomainError("need a positive element to form positive combinations")
    if b.max_value is None:
        raise DomainError("max_value is required: the set of positive combinations is infinite")
    seen = set()
    frontier = {ZERO}
    for _ in range(b.max_terms):
        nxt = set()
        for s in frontier:
            for g in gens:
                t = s + g
                if t <= b.max_value and t not in seen:
                    seen.add(t)
                    nxt.add(t)
        if not nxt:
            break
        frontier = nxt
    return CoeffSet.of(seen)


def pos_combinations_exact(J: CoeffSet, max_value: Fraction) -> CoeffSet:
    """All positive integral combinations of J with value <= max_value,
    with no term-count truncation (self-bounded by max_value/min(J>0))."""
    gens = J.positive()
    if not gens:
        raise DomainError("need a positive element to form positive combinations")
    seen = set()
    frontier = {ZERO}
    while frontier:
        nxt = set()
        for s in frontier:
            for g in gens:
                t = s + g
                if t <= max_value and t not in seen:
                    seen.add(t)
                    nxt.add(t)
        frontier = nxt
    return CoeffSet.of(seen)


def d_set(I: CoeffSet, b: EnumBounds) -> CoeffSet:
    """Bounded enumeration of D(I) = {(m-1+f)/m : f in I+}, m <= b.max_index."""
    fs = plus_closure(I, b)
    out = set()
    for m in range(1, b.max_index + 1):
        for f in fs:
            a = (m - 1 + f) / m
            if a <= 1:
                out.add(a)
    return CoeffSet.of(out)


def mem_d_set(a: Fraction, I: CoeffSet) -> bool:
    """Exact membership a in D(I).

    For a < 1, f >= 0 forces m <= 1/(1-a); each m determines f = m*a-m+1.
    For a = 1 the only shape is f = 1, so the test is 1 in I+.
    """
    if a < 0 or a > 1:
        raise DomainError(f"argument {format_rational(a)} outside [0,1]")
    if a == 1:
        return mem_plus_closure(ONE, I)
    max_m = int(1 / (1 - a))
    for m in range(1, max_m + 1):
        f = m * a - m + 1
        if 0 <= f <= 1 and mem_plus_closure(f, I):
            return True
    return False


def d_d_set(I: CoeffSet, d: Fraction, b: EnumBounds) -> CoeffSet:
    """Bounded enumeration of D_d(I) = {(m-1+f+k*d)/m : m,k >= 1, f in I+}."""
    if d < 0 or d > 1:
        raise DomainError("shift d must lie in [0,1]")
    fs = plus_closure(I, b)
    out = set()
    for m in range(1, b.max_index + 1):
        for k in range(1, b.max_index + 1):
            for f in fs:
                a = (m - 1 + f + k * d) / m
                if a <= 1:
                    out.add(a)
    return CoeffSet.of(out)


def mem_d_d_set(a: Fraction, I: CoeffSet, d: Fraction) -> bool:
    """Exact membership a in D_d(I).

    For a < 1: f + k*d = 1 - m*(1-a) > 0 forces m < 1/(1-a), and k*d <= that
    remainder bounds k.  For a = 1 the equation reduces to f + k*d = 1 for
    any m (m cancels), so it suffices to scan k <= 1/d at m = 1.
    """
    if d <= 0:
        raise DomainError("shift d must be positive")
    if a < 0 or a > 1:
        raise DomainError(f"argument {format_rational(a)} outside [0,1]")
    if a == 1:
        k = 1
        while k * d <= 1:
            if mem_plus_closure(1 - k * d, I):
                return True
            k += 1
        return False
    ms = []
    m = 1
    while m * (1 - a) < 1:
        ms.append(m)
        m += 1
    for m in ms:
        rest = 1 - m * (1 - a)  # = f + k*d, strictly positive here
        k = 1
        while k * d <= rest:
            if mem_plus_closure(rest - k * d, I):
                return True
            k += 1
    return False


def check_ddi_lemma(I: CoeffSet, b: EnumBounds) -> tuple[bool, list]:
    """Check D(D(I)) = D(I) u {1} on bounded enumerations with exact
    membership on the opposite side.  Returns (ok, counterexamples)."""
    di = d_set(I, b)
    ddi = d_set(di, b)
    bad = []
    for x in ddi:
        # must lie in D(I) u {1}
        if x != 1 and not mem_d_set(x, I):
            bad.append(("D(D(I)) element outside D(I)u{1}", x))
    for x in di:
        # x in D(I) gives x in D(D(I)) via m=1, f=x in (D(I))+
        if not mem_d_set(x, I):
            bad.append(("enumerated D(I) element fails exact membership", x))
    # 1 in D(D(I)) always: 1 = 1/2 + 1/2 with 1/2 in D(I) (m=2, f=0)
    return (not bad, bad)


def check_dd_monotone(I: CoeffSet, d: Fraction, b: EnumBounds) -> tuple[bool, list]:
    """Check that d1 in D_d(I) implies D_{d1}(I) subseteq D_d(I), on the
    bounded enumeration of the left side with exact membership on the right."""
    if not (0 < d <= 1):
        raise DomainError("shift d must lie in (0,1]")
    bad = []
    for d1 in d_d_set(I, d, b):
        if d1 <= 0:
            continue
        for a in d_d_set(I, d1, b):
            if not mem_d_d_set(a, I, d):
                bad.append((d1, a))
    return (not bad, bad)


@dataclass(frozen=True)
class TraceWitness:
    """One representation (m-1+k*i+f)/m = target for a traced generator i."""

    i: Fraction
    m: int
    k: int
    f: Fraction
    target: Fraction


def finite_trace(I: CoeffSet, Jfin: CoeffSet, b: EnumBounds) -> tuple[CoeffSet, list[TraceWitness]]:
    """Generators i of I with (m-1+k*i+f)/m in Jfin n [0,1] for some
    m, k <= b.max_index and f in I+; each hit carries its first witness."""
    fs = plus_closure(I, b)
    targets = {t for t in Jfin if t <= 1}
    hits: dict[Fraction, TraceWitness] = {}
    for i in I:
        found = None
        for m in range(1, b.max_index + 1):
            for k in range(1, b.max_index + 1):
                for f in fs:
                    t = (m - 1 + k * i + f) / m
                    if t in targets:
                        found = TraceWitness(i, m, k, f, t)
                        break
                if found:
                    break
            if found:
                break
        if found:
            hits[i] = found
    traced = CoeffSet.of(hits.keys())
    return traced, [hits[i] for i in traced]
