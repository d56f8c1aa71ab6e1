import pytest

from padicmult import ExactInt, TeichProduct
from padicmult.errors import DomainError
from padicmult.verify import Bounds, PropertyResult, SUITES, run_suites

SMALL = Bounds(
    max_p=5,
    max_level=3,
    max_len=3,
    window=4,
    endo_samples=36,
    covariance_samples=12,
    symbol_samples=8,
)


@pytest.mark.parametrize("name", sorted(SUITES))
def test_each_suite_is_clean_at_small_bounds(name):
    results = run_suites([name], SMALL)
    assert results, "suite produced no properties"
    for result in results:
        assert result.failed == 0, (result.name, result.failures)


def test_run_suites_rejects_unknown_names():
    with pytest.raises(DomainError):
        run_suites(["orders", "nope"], SMALL)


def test_parallel_matches_sequential():
    names = ["teich", "ktheory"]
    sequential = run_suites(names, SMALL)
    parallel = run_suites(names, SMALL, parallel=True)
    assert [(r.suite, r.name, r.passed, r.failed) for r in sequential] == [
        (r.suite, r.name, r.passed, r.failed) for r in parallel
    ]


def test_property_result_collects_failures():
    result = PropertyResult("s", "n")
    for i in range(8):
        result.check(False, f"detail {i}")
    result.check(True)
    assert result.passed == 1 and result.failed == 8
    assert len(result.failures) == 5


def test_digits_suite_pinning():
    pinned = Bounds(max_len=3, p=3, r=ExactInt(6))
    results = run_suites(["digits"], pinned)
    assert all(r.failed == 0 for r in results)
    with pytest.raises(DomainError):
        run_suites(["digits"], Bounds(p=3))
    with pytest.raises(DomainError):
        run_suites(["digits"], Bounds(p=5, r=TeichProduct(2)))


def test_seed_changes_samples_but_not_health():
    a = run_suites(["endos"], Bounds(seed=1, endo_samples=20))
    b = run_suites(["endos"], Bounds(seed=2, endo_samples=20))
    assert all(r.failed == 0 for r in a + b)
