from math import factorial

import pytest

from wilf.counting import d_count, s_count, sh_count
from wilf.exceptions import LimitExceeded, OutOfRange
from wilf.oracle import (
    CheckResult,
    bruteforce_D,
    bruteforce_shift_partition,
    bruteforce_ss_partition,
    cross_check,
    next_permutation,
    orbit_mismatch,
    pack,
    unpack,
    unrank,
)
from wilf.perm import Permutation
from wilf.shift import orbit as shift_orbit
from wilf.trapezoid import prefixes_D
from wilf.types import Settings


def test_pack_keeps_lexicographic_order():
    assert pack([1, 2, 3]) == 0x012
    assert unpack(0x012, 3) == (1, 2, 3)
    assert pack([1, 3, 2]) < pack([2, 1, 3])
    assert unpack(pack(range(16, 0, -1)), 16) == tuple(range(16, 0, -1))


def test_unrank_and_successor():
    """Test that unrank and next_permutation walk the same order"""
    assert unrank(3, 0) == [1, 2, 3]
    assert unrank(3, 5) == [3, 2, 1]
    letters = unrank(5, 0)
    for rank in range(1, factorial(5)):
        assert next_permutation(letters)
        assert letters == unrank(5, rank)
    assert not next_permutation(letters)
    with pytest.raises(OutOfRange):
        unrank(3, 6)


def test_partition_of_s3(settings):
    report = bruteforce_ss_partition(3, settings)
    assert report.class_count == 2
    assert [summary.size for summary in report.classes] == [4, 2]
    assert [summary.representative for summary in report.classes] == [(1, 2, 3), (2, 1, 3)]
    assert report.size_histogram == {1: 1, 2: 1}
    assert report.to_json()['histogram'] == {'1': 1, '2': 1}


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7])
def test_partition_counts(settings, n):
    report = bruteforce_ss_partition(n, settings)
    assert report.class_count == s_count(n)
    assert sum(summary.size for summary in report.classes) == factorial(n)


@pytest.mark.slow
def test_partition_histogram_s9(settings):
    report = bruteforce_ss_partition(9, settings)
    assert report.class_count == 144812
    assert report.size_histogram == {1: 119744, 2: 21216, 3: 3204, 4: 546, 5: 82, 6: 18, 7: 1, 8: 1}


def test_partition_with_workers():
    """Test that splitting into blocks over processes changes nothing"""
    serial = bruteforce_ss_partition(6, Settings(block_size=100))
    parallel = bruteforce_ss_partition(6, Settings(workers=2, block_size=100))
    assert parallel.classes == serial.classes
    assert parallel.size_histogram == serial.size_histogram


PREFIX_CELLS = [(i, n) for n in range(3, 9) for i in range(1, n - 1)] + [
    pytest.param(i, 9, marks=pytest.mark.slow) for i in range(1, 8)
]


@pytest.mark.parametrize("i, n", PREFIX_CELLS)
def test_bruteforce_prefixes(settings, i, n):
    brute = bruteforce_D(i, n, settings)
    assert len(brute) == d_count(i, n)
    assert set(brute) == set(prefixes_D(i, n))


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7])
def test_shift_partition_counts(settings, n):
    """Test rigid shift orbits against s_n, and with reversals against sh_n"""
    assert bruteforce_shift_partition(n, False, settings).class_count == s_count(n)
    assert bruteforce_shift_partition(n, True, settings).class_count == sh_count(n)


def test_shift_partitions(settings):
    """Test strong shift orbits and shift orbits of S_5"""
    strong = bruteforce_shift_partition(5, False, settings)
    shift = bruteforce_shift_partition(5, True, settings)
    assert strong.class_count == 40
    assert shift.class_count == 21
    assert shift.relation == 'shift'
    assert bruteforce_shift_partition(2, True, settings).class_count == sh_count(2)


@pytest.mark.parametrize("call", [
    lambda s: bruteforce_ss_partition(10, s),
    lambda s: bruteforce_shift_partition(8, True, s),
    lambda s: bruteforce_D(2, 10, s),
    lambda s: bruteforce_ss_partition(17, Settings(ss_limit=20)),
    lambda s: cross_check('ss', 10, s),
    lambda s: cross_check('all', 8, s),
    lambda s: cross_check('all', 12, Settings(ss_limit=4, shift_limit=4, prefix_limit=4)),
    lambda s: cross_check('shift', 8, Settings(ss_limit=7, shift_limit=9)),
])
def test_limits(settings, call):
    with pytest.raises(LimitExceeded):
        call(settings)


def test_bad_arguments(settings):
    with pytest.raises(OutOfRange):
        bruteforce_ss_partition(1, settings)
    with pytest.raises(OutOfRange):
        bruteforce_D(3, 4, settings)
    with pytest.raises(OutOfRange):
        cross_check('nope', 5, settings)


def test_cross_check_passes(settings):
    """Test every oracle check up to n = 6"""
    results = cross_check('all', 6, settings)
    assert results
    assert all(result.passed for result in results), [r.to_json() for r in results if not r.passed]
    assert {result.check for result in results} >= {'ss-count', 'prefixes-d2', 'shift-count', 'reversal-invariant'}


def test_check_result_failure():
    result = CheckResult('ss-count', 5, 40, 39)
    assert not result.passed
    assert result.to_json()['passed'] is False
    assert not CheckResult('bijections-d2', 5, [], [], ['phi/psi roundtrip fails on 2,4']).passed


def test_limits_are_checked_before_any_sweep(settings, monkeypatch):
    """Test that 'all' refuses an oversized n before running the smaller checks"""
    calls = []
    monkeypatch.setattr('wilf.oracle.bruteforce_ss_partition', lambda *args: calls.append(args))
    with pytest.raises(LimitExceeded):
        cross_check('all', 8, settings)
    assert calls == []


def test_orbit_mismatch(settings):
    """Test that every orbit member must share one super-strong class"""
    ss_by_key = {summary.key: summary.size for summary in bruteforce_ss_partition(3, settings).classes}
    u = Permutation((1, 2, 3))
    assert orbit_mismatch(u, shift_orbit(u), ss_by_key) is None
    assert "spans 2" in orbit_mismatch(u, [u, Permutation((2, 1, 3))], ss_by_key)
    assert "has 1 members" in orbit_mismatch(u, [u], ss_by_key)


def test_orbit_mismatch_with_right_size_wrong_members(settings):
    """Test a set of the class's size that mixes in a foreign member"""
    ss_by_key = {summary.key: summary.size for summary in bruteforce_ss_partition(4, settings).classes}
    u = Permutation((1, 2, 3, 4))
    orbit = sorted(shift_orbit(u))
    assert orbit_mismatch(u, orbit, ss_by_key) is None
    foreign = next(v for v in shift_orbit(Permutation((2, 1, 3, 4))) if v not in orbit)
    assert orbit_mismatch(u, orbit[:-1] + [foreign], ss_by_key) is not None
