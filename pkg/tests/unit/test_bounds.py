"""
Unit tests for the defect bounds and integral-mean enclosures
"""
import math

import pytest

from src.analysis import (
    ANALYTIC, SAMPLED, DerivativeRange, Enclosure, Interval, applicable_bounds, best_bound,
    bound_c1, bound_c2, bound_c2_coarse, bound_c3, bound_convex2, bound_corrected, c4_enclosure,
    check_sign, corrected_t_functional, hh_enclosure, hh_m2_enclosure, hh_M2_enclosure,
    hh_refined_enclosure, majorization_check, majorization_slacks, quartic_shift_enclosure,
    select_best, t_functional, thm4_t_enclosure,
)
from src.errors import ConvexityError, EmptyEnclosureError, MajorizationError, RangeOrderError
from src.expr import parse
from tests.fixtures.reference_values import simpson_defect

E = math.e


def _exact(I, order, m, M):
    return DerivativeRange.exact(I, order, m, M)


class TestSymmetricBounds:
    """Test the fixed-constant defect bounds"""

    def test_constants(self, unit_interval):
        I = Interval(0.0, 2.0)
        r = lambda n: _exact(I, n, -1.0, 1.0)
        assert bound_c1(I, r(1)).upper == pytest.approx(5.0 / 72.0 * 2.0 * 2.0)
        assert bound_c2(I, r(2)).upper == pytest.approx(2.0 * 4.0 / 162.0)
        assert bound_c2_coarse(I, r(2)).upper == pytest.approx(2.0 * 4.0 / 36.0)
        assert bound_c3(I, r(3)).upper == pytest.approx(2.0 * 8.0 / 1152.0)
        assert bound_corrected(I, r(4)).upper == pytest.approx(11.0 / 57600.0 * 2.0 * 16.0)

    def test_tags_and_symmetry(self, unit_interval):
        enclosure = bound_c2(unit_interval, _exact(unit_interval, 2, 1.0, E))
        assert enclosure.theorem == 'THM1'
        assert enclosure.lower == -enclosure.upper
        assert enclosure.confidence == ANALYTIC
        assert enclosure.upper == pytest.approx((E - 1.0) / 162.0, rel=1e-15)

    def test_eq7_is_four_and_a_half_times_wider(self, unit_interval):
        r = _exact(unit_interval, 2, 1.0, E)
        ratio = bound_c2_coarse(unit_interval, r).width / bound_c2(unit_interval, r).width
        assert ratio == pytest.approx(4.5, rel=1e-12)

    def test_inflation_applies_to_sampled_ranges(self, unit_interval):
        sampled = DerivativeRange(order=2, interval=unit_interval, m=1.0, M=2.0)
        enclosure = bound_c2(unit_interval, sampled, inflation=1.5)
        assert enclosure.upper == pytest.approx(1.5 / 162.0)
        assert enclosure.confidence == SAMPLED

    def test_wrong_order_rejected(self, unit_interval):
        with pytest.raises(RangeOrderError):
            bound_c3(unit_interval, _exact(unit_interval, 2, 0.0, 1.0))

    def test_c4_enclosure_one_sided(self, unit_interval):
        enclosure = c4_enclosure(unit_interval, _exact(unit_interval, 4, 24.0, 24.0))
        assert enclosure.lower == enclosure.upper == pytest.approx(1.0 / 120.0)
        assert enclosure.theorem == 'EQ4'

    def test_exp_defect_inside_every_bound(self, unit_interval):
        t = simpson_defect('exp(t)', 0.0, 1.0)
        for bound in (bound_c1, bound_c2, bound_c2_coarse, bound_c3):
            order = {bound_c1: 1, bound_c3: 3}.get(bound, 2)
            assert bound(unit_interval, _exact(unit_interval, order, 1.0, E)).contains(t)
        assert c4_enclosure(unit_interval, _exact(unit_interval, 4, 1.0, E)).contains(t)


class TestConvexBounds:
    """Test the convexity-based brackets"""

    def test_convex_second_derivative_of_cubic(self, unit_interval):
        enclosure = bound_convex2(parse('t^3'), unit_interval)
        assert (enclosure.lower, enclosure.upper, enclosure.theorem) == (0.0, 0.0, 'THM3')
        assert enclosure.confidence == SAMPLED

    def test_convex_second_derivative_contains_defect(self):
        I = Interval(-1.0, 1.0)
        enclosure = bound_convex2(parse('cos(t)'), I)
        assert enclosure.contains(t_functional(parse('cos(t)'), I), tol=1e-14)

    def test_concave_second_derivative_rejected(self):
        with pytest.raises(ConvexityError):
            bound_convex2(parse('-cos(t)'), Interval(-1.0, 1.0))

    def test_unchecked_bound_is_analytic(self, unit_interval):
        assert bound_convex2(parse('t^4'), unit_interval, check=False).confidence == ANALYTIC

    def test_check_sign(self, unit_interval):
        assert check_sign(parse('exp(t)'), unit_interval, 2)
        assert not check_sign(parse('abs(t)'), unit_interval, 2)
        with pytest.raises(ConvexityError):
            check_sign(parse('sin(t)'), Interval(-1.0, 1.0), 2)

    def test_corrected_bound_contains_corrected_defect(self, exp_expr, unit_interval):
        r4 = _exact(unit_interval, 4, 1.0, E)
        assert bound_corrected(unit_interval, r4).contains(corrected_t_functional(exp_expr, unit_interval))

    def test_recentred_corrected_bound_contains_defect(self, exp_expr, unit_interval):
        r4 = _exact(unit_interval, 4, 1.0, E)
        enclosure = thm4_t_enclosure(exp_expr, unit_interval, r4)
        assert enclosure.theorem == 'THM4'
        assert enclosure.contains(simpson_defect('exp(t)', 0.0, 1.0))

    def test_quartic_shift_enclosure(self, exp_expr, unit_interval):
        r4 = _exact(unit_interval, 4, 1.0, E)
        enclosure = quartic_shift_enclosure(exp_expr, unit_interval, r4)
        assert enclosure.theorem == 'EQ8-9'
        assert enclosure.contains(simpson_defect('exp(t)', 0.0, 1.0))
        assert enclosure.width <= c4_enclosure(unit_interval, r4).width


class TestHermiteHadamard:
    """Test the enclosures of the integral mean"""

    def test_convex(self, exp_expr, unit_interval):
        enclosure = hh_enclosure(exp_expr, unit_interval)
        assert enclosure.lower == pytest.approx(math.exp(0.5))
        assert enclosure.upper == pytest.approx((1.0 + E) / 2.0)
        assert enclosure.contains(E - 1.0)

    def test_concave(self):
        enclosure = hh_enclosure(parse('log(t)'), Interval(1.0, 2.0), 'concave')
        assert enclosure.contains(2.0 * math.log(2.0) - 1.0)

    def test_skipped_sign_check_is_sampled(self):
        enclosure = hh_enclosure(parse('abs(t)'), Interval(-1.0, 1.0))
        assert (enclosure.lower, enclosure.upper) == (0.0, 1.0)
        assert enclosure.confidence == SAMPLED
        assert hh_enclosure(parse('abs(t)'), Interval(-1.0, 1.0), check=False).confidence == ANALYTIC

    def test_wrong_convexity(self):
        with pytest.raises(ConvexityError):
            hh_enclosure(parse('log(t)'), Interval(1.0, 2.0), 'convex')
        with pytest.raises(ValueError):
            hh_enclosure(parse('log(t)'), Interval(1.0, 2.0), 'flat')

    def test_refinements(self, exp_expr, unit_interval):
        r2 = _exact(unit_interval, 2, 1.0, E)
        low_side = hh_m2_enclosure(exp_expr, unit_interval, r2)
        high_side = hh_M2_enclosure(exp_expr, unit_interval, r2)
        assert low_side.lower == pytest.approx(math.exp(0.5) + 1.0 / 24.0)
        assert low_side.upper == pytest.approx((1.0 + E) / 2.0 - 1.0 / 12.0)
        assert (low_side.theorem, high_side.theorem) == ('HH-m2', 'HH-M2')
        for enclosure in (low_side, high_side):
            assert enclosure.contains(E - 1.0)

    def test_refined_intersection_narrower(self, exp_expr, unit_interval):
        r2 = _exact(unit_interval, 2, 1.0, E)
        refined = hh_refined_enclosure(exp_expr, unit_interval, r2)
        plain = hh_enclosure(exp_expr, unit_interval)
        assert refined.contains(E - 1.0)
        assert refined.width / plain.width < 1.0
        assert refined.theorem in ('HH-m2', 'HH-M2')

    def test_empty_intersection(self, exp_expr, unit_interval):
        with pytest.raises(EmptyEnclosureError):
            hh_refined_enclosure(exp_expr, unit_interval, _exact(unit_interval, 2, 1.0, 1.0))


class TestMajorization:
    """Test the convex majorization inequalities"""

    def test_holds_for_convex(self, exp_expr, unit_interval):
        left, right = majorization_slacks(exp_expr, unit_interval, 0.2, 0.8)
        assert left > 0 and right > 0
        assert majorization_check(exp_expr, unit_interval, 0.8, 0.2)

    def test_fails_for_concave(self):
        assert not majorization_check(parse('log(t)'), Interval(1.0, 3.0), 1.5, 2.5)

    def test_requires_symmetric_points(self, exp_expr, unit_interval):
        with pytest.raises(MajorizationError):
            majorization_slacks(exp_expr, unit_interval, 0.2, 0.7)
        with pytest.raises(MajorizationError):
            majorization_slacks(exp_expr, unit_interval, -0.5, 1.5)


class TestBestBound:
    """Test candidate listing and winner selection"""

    @pytest.mark.parametrize('smoothness, tags', [
        ('c1', ['THM0']),
        ('c2', ['THM1', 'EQ7']),
        ('c3', ['THM2']),
        ('c4', ['EQ4']),
        ('c4-convex2', ['THM3', 'THM4']),
    ])
    def test_candidate_sets(self, exp_expr, unit_interval, smoothness, tags):
        candidates = applicable_bounds(exp_expr, unit_interval, smoothness)
        assert [c.theorem for c in candidates] == tags

    def test_corrected_bound_competes_on_request(self, exp_expr, unit_interval):
        candidates = applicable_bounds(exp_expr, unit_interval, 'C4', include_corrected=True)
        assert [c.theorem for c in candidates] == ['EQ4', 'THM4']

    def test_c2_winner(self, exp_expr, unit_interval):
        assert best_bound(exp_expr, unit_interval, 'C2').theorem == 'THM1'

    def test_tie_goes_to_later_tag(self):
        tied = [Enclosure(-1.0, 1.0, 'THM1'), Enclosure(-1.0, 1.0, 'EQ7')]
        assert select_best(tied).theorem == 'EQ7'
        assert select_best(list(reversed(tied))).theorem == 'EQ7'

    def test_affine_second_derivative_prefers_convex_bound(self, unit_interval):
        winner = best_bound(parse('t^3'), unit_interval, 'C4-convex2')
        assert (winner.theorem, winner.upper) == ('THM3', 0.0)

    def test_user_ranges_are_used(self, exp_expr, unit_interval):
        ranges = {3: _exact(unit_interval, 3, 0.0, 10.0)}
        winner = best_bound(exp_expr, unit_interval, 'C3', ranges=ranges)
        assert winner.upper == pytest.approx(10.0 / 1152.0)
        assert winner.confidence == ANALYTIC

    def test_no_candidates(self):
        with pytest.raises(ValueError):
            select_best([])
