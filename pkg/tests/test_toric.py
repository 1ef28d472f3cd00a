import random
from fractions import Fraction as F

import pytest

from coregcalc.dualcx import regularity_coregularity
from coregcalc.setalg import DomainError
from coregcalc.toric import (
    SimplicialCone,
    ToricPair,
    discrepancy_functional,
    parse_toric_pair,
    toric_lct,
    toric_lct_oracle,
    toric_stratification,
)


def pair(rays, b, c):
    return ToricPair(
        SimplicialCone(tuple(tuple(r) for r in rays)),
        tuple(F(x) for x in b),
        tuple(F(x) for x in c),
    )


class TestCone:
    def test_rays_are_primitivized(self):
        cone = SimplicialCone(((2, 0), (0, 3)))
        assert cone.rays == ((1, 0), (0, 1))

    def test_dependent_rays_rejected(self):
        with pytest.raises(DomainError):
            SimplicialCone(((1, 2), (2, 4)))

    def test_zero_ray_rejected(self):
        with pytest.raises(DomainError):
            SimplicialCone(((0, 0), (0, 1)))

    def test_containment(self):
        cone = SimplicialCone(((1, 0), (1, 2)))
        assert cone.contains((1, 1))
        assert not cone.contains((0, 1))

    def test_coordinates_exact(self):
        cone = SimplicialCone(((1, 0), (1, 2)))
        assert cone.coordinates((2, 1)) == [F(3, 2), F(1, 2)]


class TestFunctionals:
    def test_orthant_values(self):
        tp = pair([(1, 0), (0, 1)], [F(1, 2), 0], [1, 1])
        assert discrepancy_functional(tp, "boundary") == (F(1, 2), F(1))
        assert discrepancy_functional(tp, "gamma") == (F(1), F(1))

    def test_skew_cone(self):
        tp = pair([(1, 0), (1, 2)], [0, 0], [1, 0])
        psi = discrepancy_functional(tp, "boundary")
        for ray in tp.cone.rays:
            assert sum(a * x for a, x in zip(psi, ray)) == 1


class TestThreshold:
    def test_smooth_orthant(self):
        tp = pair([(1, 0), (0, 1)], [F(1, 2), 0], [1, 1])
        assert toric_lct(tp) == F(1, 2)

    def test_zero_gamma_is_infinity(self):
        tp = pair([(1, 0), (0, 1)], [F(1, 2), F(1, 2)], [0, 0])
        assert toric_lct(tp) is None

    def test_only_positive_rays_contribute(self):
        tp = pair([(1, 0), (0, 1)], [1, 0], [0, 2])
        assert toric_lct(tp) == F(1, 2)

    def test_boundary_coefficient_above_one_rejected(self):
        with pytest.raises(DomainError):
            pair([(1, 0), (0, 1)], [F(3, 2), 0], [1, 1])

    def test_negative_gamma_rejected(self):
        with pytest.raises(DomainError):
            pair([(1, 0), (0, 1)], [0, 0], [-1, 1])

    def test_scaling_gamma_scales_threshold_inversely(self):
        base = pair([(1, 1), (1, -1)], [F(1, 3), F(1, 2)], [1, 2])
        scaled = pair([(1, 1), (1, -1)], [F(1, 3), F(1, 2)], [3, 6])
        assert toric_lct(scaled) == toric_lct(base) / 3


class TestOracle:
    def test_orthant_agreement(self):
        tp = pair([(1, 0), (0, 1)], [F(1, 2), 0], [1, 1])
        assert toric_lct_oracle(tp, 6) == toric_lct(tp)

    def test_singular_quadric_cone_agreement(self):
        tp = pair([(1, 0), (1, 2)], [0, F(1, 2)], [1, 1])
        assert toric_lct_oracle(tp, 8) == toric_lct(tp)

    def test_infinity_agreement(self):
        tp = pair([(1, 0), (0, 1)], [0, 0], [0, 0])
        assert toric_lct_oracle(tp, 4) is None

    def test_radius_must_cover_rays(self):
        tp = pair([(1, 0), (1, 5)], [0, 0], [1, 1])
        with pytest.raises(DomainError):
            toric_lct_oracle(tp, 3)

    def test_randomized_agreement(self):
        rng = random.Random(20260823)
        done = 0
        while done < 25:
            n = rng.choice([2, 3])
            rays = [
                tuple(rng.randint(-3, 3) for _ in range(n)) for _ in range(n)
            ]
            try:
                cone = SimplicialCone(tuple(rays))
            except DomainError:
                continue
            b = tuple(F(rng.randint(-2, 2), rng.randint(1, 3)) for _ in range(n))
            b = tuple(min(x, F(1)) for x in b)
            c = tuple(F(rng.randint(0, 3), rng.randint(1, 2)) for _ in range(n))
            tp = ToricPair(cone, b, c)
            assert toric_lct_oracle(tp, 8) == toric_lct(tp)
            done += 1


class TestStratification:
    def test_full_ray_set_has_coregularity_zero(self):
        cone = SimplicialCone(((1, 0, 0), (0, 1, 0), (1, 1, 2)))
        sb = toric_stratification(cone, (0, 1, 2))
        assert regularity_coregularity(sb) == (2, 0)

    def test_partial_ray_set(self):
        cone = SimplicialCone(((1, 0, 0), (0, 1, 0), (1, 1, 2)))
        sb = toric_stratification(cone, (0, 1))
        assert regularity_coregularity(sb) == (1, 1)

    def test_empty_choice_rejected(self):
        cone = SimplicialCone(((1, 0), (0, 1)))
        with pytest.raises(DomainError):
            toric_stratification(cone, ())


class TestParsing:
    TEXT = """\
dim 2
1 0
1 2
b: 0 1/2
c: 1 1
"""

    def test_round_trip(self):
        tp = parse_toric_pair(self.TEXT)
        assert tp.cone.rays == ((1, 0), (1, 2))
        assert tp.b == (F(0), F(1, 2))
        assert toric_lct(tp) == F(1, 2)

    def test_missing_coefficients_rejected(self):
        with pytest.raises(DomainError):
            parse_toric_pair("dim 2\n1 0\n0 1\nb: 0 0\n")

    def test_header_required(self):
        with pytest.raises(DomainError):
            parse_toric_pair("1 0\n0 1\n")
