"""
Integration tests for the verification service
"""
import math

import pytest

from src.analysis import ANALYTIC, SAMPLED, Interval
from src.constants import SMOOTH_CORPUS
from src.services import SUITES, PropertyResult, VerificationService


@pytest.fixture
def small_service():
    """One interval per corpus function and a short constant search"""
    return VerificationService(seed=42, threads=2, intervals=1, search_trials=20)


def _failures(results):
    return [(r.name, r.slack) for r in results if not r.passed]


class TestVerificationService:
    """Test each suite on a reduced workload"""

    def test_coth_suite(self, small_service):
        results = small_service.verify_coth()
        assert _failures(results) == []
        assert {r.name for r in results} >= {'eq11_pointwise', 'coth_mean_bracket', 'coth_mean_corrected'}

    def test_sharpness_suite(self, small_service):
        results = small_service.verify_sharpness()
        assert _failures(results) == []
        names = [r.name for r in results]
        assert 'search_C2_lower' in names and 'search_C1_lower' not in names

    def test_representations_suite(self, small_service):
        results = small_service.verify_representations()
        assert _failures(results) == []
        assert [r.name for r in results[:3]] == [f"representation_order_{k}" for k in (1, 2, 3)]

    def test_bounds_suite(self, small_service):
        results = small_service.verify_bounds()
        assert _failures(results) == []
        names = {r.name for r in results}
        for tag in ('THM0', 'THM1', 'EQ7', 'THM2', 'EQ4'):
            assert f"containment_{tag}" in names
        assert 'eq7_to_thm1_ratio' in names

    def test_corpus_ranges_exact_for_monotone_members(self, small_service):
        I = Interval(1.0, 2.0)
        exact = small_service.corpus_ranges(SMOOTH_CORPUS.index('exp(t)'), I)
        assert all(r.confidence == ANALYTIC for r in exact.values())
        assert exact[4].m == pytest.approx(math.e, rel=1e-15)
        assert exact[4].M == pytest.approx(math.exp(2.0), rel=1e-15)

        sampled = small_service.corpus_ranges(SMOOTH_CORPUS.index('sin(t)'), I)
        assert all(r.confidence == SAMPLED for r in sampled.values())
        assert sampled[2].M == pytest.approx(-math.sin(1.0), rel=1e-12)

    def test_run_order_and_determinism(self):
        first = VerificationService(seed=5, threads=1, intervals=1, search_trials=5).run('coth')
        second = VerificationService(seed=5, threads=4, intervals=1, search_trials=5).run('coth')
        assert first == second

    def test_unknown_suite(self, small_service):
        with pytest.raises(ValueError):
            small_service.run('everything')

    def test_suite_names(self):
        assert SUITES == ['representations', 'bounds', 'sharpness', 'coth']


class TestPropertyResult:
    """Test property result construction"""

    def test_from_slack(self):
        assert PropertyResult.from_slack('a', 0.0).passed
        assert not PropertyResult.from_slack('b', -1e-3).passed

    def test_to_dict(self):
        assert PropertyResult.from_slack('a', 1.5).to_dict() == {'name': 'a', 'pass': True, 'slack': 1.5}
