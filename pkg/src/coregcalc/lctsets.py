"""Threshold sets of coregularity zero and one.

Coregularity zero has the closed form

    LCT0(I,J) = { (1-i)/j >= 0 : i in I+ n [0,1], j a positive combination of J }.

Coregularity one is the union, over triples (p,q,r) of positive integers with
1/p + 1/q + 1/r > 1, of the weighted sets

    { (qr+pr+pq-pqr - i)/j : i, j weighted combinations qr*x1+pr*x2+pq*x3 (+ pqr-tail) }.

Both are cross-checked against an independent oracle that brute-forces the
degree equation sum_k (N_k-1+d_k)/N_k = 1 (resp. 2) on the projective line
with d_k = i_k + t*j_k and solves for t.  Every value carries a provenance
witness from which the defining formula can be replayed exactly.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .rationals import format_rational
from .setalg import (
    CoeffSet,
    DomainError,
    EnumBounds,
    mem_plus_closure,
    plus_closure,
    plus_closure_exact,
    pos_combinations,
    pos_combinations_exact,
)

ZERO = Fraction(0)
ONE = Fraction(1)


# ---------------------------------------------------------------------------
# witnesses


@dataclass(frozen=True)
class Coreg0Witness:
    i: Fraction
    j: Fraction

    def value(self) -> Fraction:
        return (1 - self.i) / self.j

    def __str__(self):
        return f"c0(i={format_rational(self.i)},j={format_rational(self.j)})"


@dataclass(frozen=True)
class Coreg1Witness:
    p: int
    q: int
    r: int
    i: Fraction
    j: Fraction

    def base(self) -> Fraction:
        p, q, r = self.p, self.q, self.r
        return Fraction(q * r + p * r + p * q - p * q * r)

    def value(self) -> Fraction:
        return (self.base() - self.i) / self.j

    def __str__(self):
        return (
            f"c1(p={self.p},q={self.q},r={self.r},"
            f"i={format_rational(self.i)},j={format_rational(self.j)})"
        )


@dataclass(frozen=True)
class OracleWitness:
    """A degree-equation configuration: per-term orbifold index N_k and
    coefficient d_k = i_k + t*j_k."""

    degree: int
    N: tuple[int, ...]
    iparts: tuple[Fraction, ...]
    jparts: tuple[Fraction, ...]

    def value(self) -> Fraction:
        const = sum((n - 1 + i) / Fraction(n) for n, i in zip(self.N, self.iparts))
        slope = sum(j / Fraction(n) for n, j in zip(self.N, self.jparts))
        return (self.degree - const) / slope

    def __str__(self):
        ds = []
        for i, j in zip(self.iparts, self.jparts):
            if j == 0:
                ds.append(format_rational(i))
            elif i == 0:
                ds.append("t" if j == 1 else f"{format_rational(j)}t")
            else:
                ds.append(f"{format_rational(i)}+{format_rational(j)}t")
        return f"p1(N=[{','.join(str(n) for n in self.N)}],d=[{','.join(ds)}])"


@dataclass(frozen=True)
class TSingularityWitness:
    """Complexity-one torus-symmetry family: 1/p+1/q+1/r-1, optionally
    rescaled by p."""

    p: int
    q: int
    r: int
    scaled: bool

    def value(self) -> Fraction:
        v = Fraction(1, self.p) + Fraction(1, self.q) + Fraction(1, self.r) - 1
        return self.p * v if self.scaled else v

    def __str__(self):
        tail = ",scaled" if self.scaled else ""
        return f"ts(p={self.p},q={self.q},r={self.r}{tail})"


Witness = Union[Coreg0Witness, Coreg1Witness, OracleWitness, TSingularityWitness]


@dataclass(frozen=True)
class LctValue:
    value: Fraction
    witness: Witness


@dataclass(frozen=True)
class LctSet:
    """Sorted deduplicated threshold values; first witness (in canonical
    order) is kept per value."""

    values: tuple[LctValue, ...]

    @classmethod
    def collect(cls, items) -> "LctSet":
        by_value: dict[Fraction, Witness] = {}
        for v, w in sorted(items, key=lambda vw: (vw[0], str(vw[1]))):
            if v not in by_value:
                by_value[v] = w
        return cls(tuple(LctValue(v, by_value[v]) for v in sorted(by_value)))

    def raw(self) -> tuple[Fraction, ...]:
        return tuple(lv.value for lv in self.values)

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)


# ---------------------------------------------------------------------------
# coregularity zero


def _denominator_filter(items, b: EnumBounds):
    if b.max_denominator is None:
        return items
    return [(v, w) for v, w in items if v.denominator <= b.max_denominator]


def lct0_enumerate(I: CoeffSet, J: CoeffSet, b: EnumBounds) -> LctSet:
    """Bounded enumeration of {(1-i)/j >= 0}; i runs over the bounded I+,
    j over positive combinations of J up to b.max_value."""
    js = pos_combinations(J, b)
    out = []
    for i in plus_closure(I, b):
        for j in js:
            t = (1 - i) / j
            if t >= 0:
                out.append((t, Coreg0Witness(i, j)))
    return LctSet.collect(_denominator_filter(out, b))


def mem_lct0(t: Fraction, I: CoeffSet, J: CoeffSet) -> tuple[bool, Optional[Coreg0Witness]]:
    """Exact membership in the full coregularity-zero set.

    For t > 0 every representation has j = (1-t*j... (1-i)/t <= 1/t, so the
    finitely many combinations j <= 1/t are scanned exactly.  For t = 0 the
    test is 1 in I+.
    """
    if t < 0:
        raise DomainError("thresholds are nonnegative")
    if J.min_positive is None:
        raise DomainError("J needs a positive element")
    if t == 0:
        if mem_plus_closure(ONE, I):
            return True, Coreg0Witness(ONE, J.min_positive)
        return False, None
    for j in pos_combinations_exact(J, 1 / t):
        i = 1 - t * j
        if 0 <= i <= 1 and mem_plus_closure(i, I):
            return True, Coreg0Witness(i, j)
    return False, None


# ---------------------------------------------------------------------------
# triples with 1/p + 1/q + 1/r > 1


@dataclass(frozen=True)
class PlatonicTriple:
    p: int
    q: int
    r: int

    def __post_init__(self):
        if not (1 <= self.p <= self.q <= self.r):
            raise DomainError("need 1 <= p <= q <= r")
        if Fraction(1, self.p) + Fraction(1, self.q) + Fraction(1, self.r) <= 1:
            raise DomainError(f"1/{self.p}+1/{self.q}+1/{self.r} is not > 1")

    @property
    def base(self) -> Fraction:
        p, q, r = self.p, self.q, self.r
        return Fraction(q * r + p * r + p * q - p * q * r)

    @property
    def tag(self) -> str:
        if self.p == 1:
            return "contains-one"
        if (self.p, self.q) == (2, 2):
            return "dihedral"
        return "exceptional"


def platonic_triples(bound: int) -> list[PlatonicTriple]:
    """All p <= q <= r <= bound with 1/p + 1/q + 1/r > 1 (exact check)."""
    if bound < 1:
        raise DomainError("bound must be >= 1")
    out = []
    for p in range(1, bound + 1):
        for q in range(p, bound + 1):
            for r in range(q, bound + 1):
                if Fraction(1, p) + Fraction(1, q) + Fraction(1, r) > 1:
                    out.append(PlatonicTriple(p, q, r))
    return out


def _bounded_sums(values, max_count: int, cap: Fraction):
    """Sums of at most max_count elements of `values` (with repetition),
    each sum <= cap; includes the empty sum 0."""
    seen = {ZERO}
    frontier = {ZERO}
    pos = [v for v in values if v > 0]
    for _ in range(max_count):
        nxt = set()
        for s in frontier:
            for v in pos:
                u = s + v
                if u <= cap and u not in seen:
                    seen.add(u)
                    nxt.add(u)
        if not nxt:
            break
        frontier = nxt
    return seen


def _exact_sums(values, cap: Fraction):
    """All sums of arbitrarily many elements of `values` up to cap,
    including 0 (terminates: positive elements are bounded below)."""
    pos = CoeffSet.of(v for v in values if v > 0)
    if not pos.positive():
        return {ZERO}
    return {ZERO} | set(pos_combinations_exact(pos, cap))


def _weighted_values(tr: PlatonicTriple, parts, extras, cap: Fraction):
    """{qr*x1 + pr*x2 + pq*x3 + pqr*e <= cap} over the given slot values."""
    p, q, r = tr.p, tr.q, tr.r
    weights = (q * r, p * r, p * q)
    out = set()
    for x1 in parts:
        w1 = weights[0] * x1
        if w1 > cap:
            continue
        for x2 in parts:
            w2 = w1 + weights[1] * x2
            if w2 > cap:
                continue
            for x3 in parts:
                w3 = w2 + weights[2] * x3
                if w3 > cap:
                    continue
                for e in extras:
                    w = w3 + p * q * r * e
                    if w <= cap:
                        out.add(w)
    return out


def lct1_weighted(
    tr: PlatonicTriple,
    I: CoeffSet,
    J: CoeffSet,
    b: EnumBounds,
    extra_terms: bool = True,
) -> LctSet:
    """Weighted thresholds (qr+pr+pq-pqr-i)/j >= 0 for one triple.

    With extra_terms (the default) the pqr-weighted tail is included in both
    the i- and j-combinations, which is what realizes the torus-symmetry
    family values; without it only the three displayed slots are used.
    """
    base = tr.base
    iplus = plus_closure(I, b)
    jplus = plus_closure(J, b)
    tail = b.max_terms - 3 if extra_terms else 0
    pqr = tr.p * tr.q * tr.r
    iextras = _bounded_sums(iplus, max(tail, 0), base / pqr) if tail > 0 else {ZERO}
    jextras = _bounded_sums(jplus, max(tail, 0), Fraction(max(tail, 0))) if tail > 0 else {ZERO}
    ivals = _weighted_values(tr, iplus, iextras, base)
    jcap = Fraction(tr.q * tr.r + tr.p * tr.r + tr.p * tr.q + pqr * max(tail, 0))
    jvals = _weighted_values(tr, jplus, jextras, jcap)
    jvals.discard(ZERO)
    if not jvals:
        raise DomainError("no positive j-combination exists")
    out = []
    for i in ivals:
        num = base - i
        if num < 0:
            continue
        for j in jvals:
            out.append((num / j, Coreg1Witness(tr.p, tr.q, tr.r, i, j)))
    return LctSet.collect(_denominator_filter(out, b))


def lct1_enumerate(I: CoeffSet, J: CoeffSet, b: EnumBounds, extra_terms: bool = True) -> LctSet:
    """Union of the weighted sets over all triples up to b.max_index."""
    out = []
    for tr in platonic_triples(b.max_index):
        try:
            part = lct1_weighted(tr, I, J, b, extra_terms=extra_terms)
        except DomainError:
            continue
        out.extend((lv.value, lv.witness) for lv in part)
    return LctSet.collect(out)


@dataclass(frozen=True)
class MemResult:
    """Tri-state membership verdict: found with witness, or not found within
    the triple bound (the (1,q,r) family is unbounded, so absence within the
    bound is not a proof of non-membership)."""

    found: bool
    witness: Optional[Witness]
    triple_bound: int

    @property
    def status(self) -> str:
        return "found" if self.found else "not-found-within-bound"


def mem_lct1(t: Fraction, I: CoeffSet, J: CoeffSet, triple_bound: int) -> MemResult:
    """Per-triple exact search: for t > 0 the j-combination is bounded by
    base/t, and the i-combination by base; both are enumerated completely
    (tail terms included, with no term-count truncation)."""
    if t < 0:
        raise DomainError("thresholds are nonnegative")
    iexact = plus_closure_exact(I)
    jexact = plus_closure_exact(J)
    for tr in platonic_triples(triple_bound):
        base = tr.base
        pqr = tr.p * tr.q * tr.r
        iextras = _exact_sums(iexact, base / pqr)
        ivals = _weighted_values(tr, iexact, iextras, base)
        if t == 0:
            if base in ivals:
                jmin = jexact.min_positive
                if jmin is not None:
                    jw = min(w * jmin for w in (tr.q * tr.r, tr.p * tr.r, tr.p * tr.q))
                    return MemResult(True, Coreg1Witness(tr.p, tr.q, tr.r, base, jw), triple_bound)
            continue
        jcap = base / t
        jextras = _exact_sums(jexact, jcap / pqr)
        jvals = _weighted_values(tr, jexact, jextras, jcap)
        jvals.discard(ZERO)
        for j in sorted(jvals):
            i = base - t * j
            if i >= 0 and i in ivals:
                return MemResult(True, Coreg1Witness(tr.p, tr.q, tr.r, i, j), triple_bound)
    return MemResult(False, None, triple_bound)


# ---------------------------------------------------------------------------
# the projective-line degree-equation oracle


def p1_oracle(
    I: CoeffSet,
    J: CoeffSet,
    degree_target: int,
    b: EnumBounds,
    cap_unit: bool = True,
) -> LctSet:
    """Brute-force the degree equation sum_k (N_k-1+d_k)/N_k = degree_target
    with d_k = i_k + t*j_k, i_k in I+, j_k in J+, and solve each
    configuration for t.

    Kept solutions have t >= 0, at least one j_k > 0, at least one d_k > 0
    (a vanishing coefficient is not a genuine component), and, under
    cap_unit, every d_k <= 1.  Independent of the closed-form enumerations.
    """
    if degree_target not in (1, 2):
        raise DomainError("degree target must be 1 or 2")
    iplus = plus_closure(I, b)
    jplus = plus_closure(J, b)
    # term options (N, i, j); (1, 0, 0) contributes nothing and is dropped
    options = []
    for n in range(1, b.max_index + 1):
        for i in iplus:
            for j in jplus:
                if n == 1 and i == 0 and j == 0:
                    continue
                const = (n - 1 + i) / Fraction(n)
                slope = j / Fraction(n)
                options.append((const, slope, n, i, j))
    options.sort()
    target = Fraction(degree_target)
    results = []

    def emit(terms):
        csum = sum(c for c, *_ in terms)
        ssum = sum(s for _, s, *_ in terms)
        if ssum == 0:
            return
        t = (target - csum) / ssum
        if t < 0:
            return
        ds = [i + t * j for _, _, _, i, j in terms]
        if all(d == 0 for d in ds):
            return
        if cap_unit and any(d > 1 for d in ds):
            return
        N = tuple(n for _, _, n, _, _ in terms)
        iparts = tuple(i for _, _, _, i, _ in terms)
        jparts = tuple(j for _, _, _, _, j in terms)
        results.append((t, OracleWitness(degree_target, N, iparts, jparts)))

    def dfs(start: int, terms: list, csum: Fraction):
        if terms:
            emit(terms)
        if len(terms) == b.max_terms:
            return
        for idx in range(start, len(options)):
            c = options[idx][0]
            if csum + c > target:
                break  # options are sorted by constant contribution
            terms.append(options[idx])
            dfs(idx, terms, csum + c)
            terms.pop()

    dfs(0, [], ZERO)
    return LctSet.collect(_denominator_filter(results, b))


# ---------------------------------------------------------------------------
# ACC witnesses and accumulation points


@dataclass(frozen=True)
class AccWitness:
    """All full-set elements >= t, with the bounds that make the claim
    exact (coregularity 0) or sound-up-to-cutoff (coregularity 1)."""

    elements: LctSet
    threshold: Fraction
    complete: bool
    detail: str


def verify_acc_above(
    I: CoeffSet,
    J: CoeffSet,
    c: int,
    t: Fraction,
    triple_cutoff: Optional[int] = None,
) -> AccWitness:
    """Constructively witness the ascending chain condition above t: return
    every element of the untruncated threshold set that is >= t.

    c = 0 is exact: (1-i)/j >= t forces j <= 1/t, and the full I+ is finite.
    c = 1 is exact per triple but the unbounded (1,q,r) and (2,2,r) families
    are cut off; the cutoff is recorded.
    """
    if t <= 0:
        raise DomainError("need t > 0: the full sets accumulate at 0")
    if c == 0:
        if J.min_positive is None:
            raise DomainError("J needs a positive element")
        js = pos_combinations_exact(J, 1 / t)
        out = []
        for i in plus_closure_exact(I):
            for j in js:
                v = (1 - i) / j
                if v >= t:
                    out.append((v, Coreg0Witness(i, j)))
        return AccWitness(
            LctSet.collect(out), t, True,
            f"exact: j <= {format_rational(1 / t)}, full I+ enumerated",
        )
    if c == 1:
        cutoff = triple_cutoff if triple_cutoff is not None else max(5, int(2 / t) + 1)
        iexact = plus_closure_exact(I)
        jexact = plus_closure_exact(J)
        out = []
        for tr in platonic_triples(cutoff):
            base = tr.base
            pqr = tr.p * tr.q * tr.r
            ivals = _weighted_values(tr, iexact, _exact_sums(iexact, base / pqr), base)
            jcap = base / t
            jvals = _weighted_values(tr, jexact, _exact_sums(jexact, jcap / pqr), jcap)
            jvals.discard(ZERO)
            for i in ivals:
                num = base - i
                if num < 0:
                    continue
                for j in jvals:
                    v = num / j
                    if v >= t:
                        out.append((v, Coreg1Witness(tr.p, tr.q, tr.r, i, j)))
        return AccWitness(
            LctSet.collect(out), t, False,
            f"exact per triple; triple family cut off at max index {cutoff}",
        )
    raise DomainError("coregularity must be 0 or 1")


@dataclass(frozen=True)
class AccumulationCandidate:
    value: Fraction
    family: str


def accumulation_candidates(
    I: CoeffSet, J: CoeffSet, c: int, b: EnumBounds
) -> tuple[list[AccumulationCandidate], list[str]]:
    """Symbolic accumulation-point candidates of the enumerated threshold
    set, each with the parametric family that produces it.

    Also reports violations of the containment hypotheses (1 in I
    and I closed under the sum operation); the detection itself runs on any
    input.  No numeric windowing: limits are taken on witness families.
    """
    violations = []
    if 1 not in I:
        violations.append("1 is not an element of I")
    closure = set(plus_closure_exact(I))
    if closure - (set(I.elements) | {ZERO}):
        violations.append("I is not closed under sums (I != I+)")
    candidates: list[AccumulationCandidate] = []
    if J.min_positive is None:
        return [], violations
    if c == 0:
        candidates.append(AccumulationCandidate(ZERO, "(1-i)/j, j -> infinity"))
    elif c == 1:
        candidates.append(
            AccumulationCandidate(ZERO, "fixed (p,q,r), j-combination -> infinity")
        )
        iplus = plus_closure(I, b)
        jplus = plus_closure(J, b)
        tail = max(b.max_terms - 3, 0)
        iextras = _bounded_sums(iplus, tail, Fraction(2))
        jextras = _bounded_sums(jplus, tail, Fraction(tail) if tail else ZERO)
        shapes = [(2, 2)] + [(1, q0) for q0 in range(1, b.max_index + 1)]
        for p, q in shapes:
            # r -> infinity: numerator slope (p+q-pq) - (q*i1 + p*i2 + pq*ei),
            # denominator slope q*j1 + p*j2 + pq*ej; the limit is their ratio
            for i1 in iplus:
                for i2 in iplus:
                    for ei in iextras:
                        a_num = Fraction(p + q - p * q) - (q * i1 + p * i2 + p * q * ei)
                        if a_num < 0:
                            continue
                        for j1 in jplus:
                            for j2 in jplus:
                                for ej in jextras:
                                    a_den = q * j1 + p * j2 + p * q * ej
                                    if a_den <= 0:
                                        continue
                                    candidates.append(
                                        AccumulationCandidate(
                                            a_num / a_den,
                                            f"({p},{q},r), r -> infinity, "
                                            f"i-slope={format_rational(q * i1 + p * i2 + p * q * ei)}, "
                                            f"j-slope={format_rational(a_den)}",
                                        )
                                    )
    else:
        raise DomainError("coregularity must be 0 or 1")
    by_value: dict[Fraction, AccumulationCandidate] = {}
    for cand in sorted(candidates, key=lambda x: (x.value, x.family)):
        if cand.value not in by_value:
            by_value[cand.value] = cand
    return [by_value[v] for v in sorted(by_value)], violations


# ---------------------------------------------------------------------------
# recorded example families


def coreg_unbounded_counterexample(n: int) -> tuple[Fraction, int]:
    """The cone-over-a-hypersurface family: threshold 1 - 1/(n+2) with
    coregularity n.  Strictly increasing thresholds with unbounded
    coregularity, so bounding the coregularity is necessary for the ACC."""
    if n < 1:
        raise DomainError("n must be >= 1")
    return ONE - Fraction(1, n + 2), n


def tsingularity_coreg1_set(bound: int) -> LctSet:
    """Thresholds of complexity-one torus singularities with reduced
    boundary: 1/p+1/q+1/r-1 and p*(1/p+1/q+1/r-1) over p,q,r <= bound,
    intersected with [0,1]."""
    if bound < 1:
        raise DomainError("bound must be >= 1")
    out = []
    for p in range(1, bound + 1):
        for q in range(1, bound + 1):
            for r in range(1, bound + 1):
                v = Fraction(1, p) + Fraction(1, q) + Fraction(1, r) - 1
                if 0 <= v <= 1:
                    out.append((v, TSingularityWitness(p, q, r, False)))
                pv = p * v
                if 0 <= pv <= 1:
                    out.append((pv, TSingularityWitness(p, q, r, True)))
    return LctSet.collect(out)
