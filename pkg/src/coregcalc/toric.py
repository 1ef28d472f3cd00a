"""Exact threshold computations for simplicial affine toric pairs.

A pair is a full-dimensional simplicial cone (n independent primitive rays)
with per-ray boundary coefficients b_i <= 1 and nonnegative per-ray
coefficients c_i for the divisor being scaled.  The two torus-invariant data
determine linear functionals on the lattice,

    psi_B(v_i) = 1 - b_i,        psi_C(v_i) = c_i,

and the threshold is min over rays with c_i > 0 of (1 - b_i)/c_i, which for
a simplicial cone equals the infimum of psi_B/psi_C over the whole cone.  A
lattice-point scan provides an independent oracle for that fact.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

from .dualcx import StratifiedBoundary
from .rationals import parse_rational
from .setalg import DomainError

INFINITY = None  # threshold of a pair with c identically zero


def _det(rows: list[list[Fraction]]) -> Fraction:
    """Exact determinant by fraction-free-ish Gaussian elimination."""
    n = len(rows)
    m = [list(map(Fraction, r)) for r in rows]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            factor = m[r][col] * inv
            if factor:
                for cc in range(col, n):
                    m[r][cc] -= factor * m[col][cc]
    return det


def _solve(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Solve the square system exactly (matrix assumed nonsingular)."""
    n = len(matrix)
    aug = [list(map(Fraction, matrix[r])) + [Fraction(rhs[r])] for r in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise DomainError("singular ray matrix (corrupt cone input)")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return [aug[r][n] for r in range(n)]


def _primitivize(vec: tuple[int, ...]) -> tuple[int, ...]:
    g = gcd(*[abs(x) for x in vec]) if any(vec) else 1
    return tuple(x // g for x in vec) if g > 1 else tuple(vec)


@dataclass(frozen=True)
class SimplicialCone:
    rays: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = self.dim
        rays = []
        for ray in self.rays:
            if len(ray) != n:
                raise DomainError("every ray must have one coordinate per dimension")
            if not any(ray):
                raise DomainError("zero vector is not a ray")
            rays.append(_primitivize(tuple(int(x) for x in ray)))
        object.__setattr__(self, "rays", tuple(rays))
        if _det([[Fraction(x) for x in r] for r in self.rays]) == 0:
            raise DomainError("rays are linearly dependent")

    @property
    def dim(self) -> int:
        return len(self.rays)

    def coordinates(self, v: tuple[int, ...]) -> list[Fraction]:
        """Coefficients of v in the ray basis (exact)."""
        cols = [[Fraction(self.rays[j][i]) for j in range(self.dim)] for i in range(self.dim)]
        return _solve(cols, [Fraction(x) for x in v])

    def contains(self, v: tuple[int, ...]) -> bool:
        return all(x >= 0 for x in self.coordinates(v))


@dataclass(frozen=True)
class ToricPair:
    cone: SimplicialCone
    b: tuple[Fraction, ...]
    c: tuple[Fraction, ...]

    def __post_init__(self):
        n = self.cone.dim
        if len(self.b) != n or len(self.c) != n:
            raise DomainError("need one b and one c coefficient per ray")
        if any(x > 1 for x in self.b):
            raise DomainError("boundary coefficients above 1 break log canonicity")
        if any(x < 0 for x in self.c):
            raise DomainError("scaled-divisor coefficients must be >= 0")


def discrepancy_functional(tp: ToricPair, which: str) -> tuple[Fraction, ...]:
    """The unique linear functional with value 1-b_i ("boundary") or c_i
    ("gamma") on each ray generator; exact n-by-n solve."""
    if which == "boundary":
        targets = [1 - bi for bi in tp.b]
    elif which == "gamma":
        targets = list(tp.c)
    else:
        raise DomainError(f"unknown functional {which!r}")
    rows = [[Fraction(x) for x in ray] for ray in tp.cone.rays]
    return tuple(_solve(rows, targets))


def toric_lct(tp: ToricPair) -> Optional[Fraction]:
    """min over rays with c_i > 0 of (1-b_i)/c_i; None (infinity) if c = 0."""
    vals = [(1 - bi) / ci for bi, ci in zip(tp.b, tp.c) if ci > 0]
    return min(vals) if vals else INFINITY


def toric_lct_oracle(tp: ToricPair, box_radius: int) -> Optional[Fraction]:
    """Independent check: minimize psi_B(v)/psi_C(v) over primitive lattice
    vectors of the cone with coordinates in [-box_radius, box_radius]."""
    max_coord = max(abs(x) for ray in tp.cone.rays for x in ray)
    if box_radius < max_coord:
        raise DomainError("box radius must cover the ray generators")
    if all(ci == 0 for ci in tp.c):
        return INFINITY
    psi_b = discrepancy_functional(tp, "boundary")
    psi_c = discrepancy_functional(tp, "gamma")
    n = tp.cone.dim
    best = None
    for v in itertools.product(range(-box_radius, box_radius + 1), repeat=n):
        if not any(v):
            continue
        if _primitivize(v) != v:
            continue
        if not tp.cone.contains(v):
            continue
        denom = sum(a * x for a, x in zip(psi_c, v))
        if denom <= 0:
            continue
        num = sum(a * x for a, x in zip(psi_b, v))
        ratio = num / denom
        if best is None or ratio < best:
            best = ratio
    return best


def toric_stratification(cone: SimplicialCone, reduced: tuple[int, ...]) -> StratifiedBoundary:
    """Torus-invariant stratification of the chosen reduced rays: every
    nonempty subset spans a face of the simplicial cone, with one component
    each.  The full ray set yields regularity n-1, coregularity 0."""
    reduced = tuple(sorted(set(reduced)))
    if not reduced:
        raise DomainError("choose at least one ray")
    if any(i < 0 or i >= cone.dim for i in reduced):
        raise DomainError("ray index out of range")
    strata = {}
    for size in range(1, len(reduced) + 1):
        for subset in itertools.combinations(range(len(reduced)), size):
            strata[frozenset(subset)] = 1
    names = [f"D{reduced[i] + 1}" for i in range(len(reduced))]
    return StratifiedBoundary.build(cone.dim, names, strata)


def parse_toric_pair(text: str) -> ToricPair:
    """Parse the line format: `dim n`, n ray lines of n integers,
    `b: ...`, `c: ...` with rationals as p/q."""
    lines = [
        ln.split("#", 1)[0].strip()
        for ln in text.splitlines()
        if ln.split("#", 1)[0].strip()
    ]
    if not lines or not lines[0].startswith("dim"):
        raise DomainError("cone file must start with `dim n`")
    n = int(lines[0].split()[1])
    if len(lines) < n + 3:
        raise DomainError("cone file is truncated")
    rays = []
    for k in range(1, n + 1):
        entries = [int(x) for x in lines[k].split()]
        rays.append(tuple(entries))
    b = c = None
    for ln in lines[n + 1:]:
        if ln.startswith("b:"):
            b = tuple(parse_rational(x) for x in ln[2:].split())
        elif ln.startswith("c:"):
            c = tuple(parse_rational(x) for x in ln[2:].split())
        else:
            raise DomainError(f"cannot parse cone file line {ln!r}")
    if b is None or c is None:
        raise DomainError("cone file needs `b:` and `c:` lines")
    return ToricPair(SimplicialCone(tuple(rays)), b, c)
