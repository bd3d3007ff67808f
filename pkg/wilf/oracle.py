# oracle.py
"""
Brute-force ground truth.

Every permutation of S_n is visited in lexicographic order, in contiguous
rank blocks that can be spread over worker processes. Permutations are packed
into integers (one nibble per letter, most significant first) so numeric and
lexicographic order agree.
"""
import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations
from math import factorial
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from .counting import d_count, s_count, s_j_count, sh_count
from .exceptions import LimitExceeded, OutOfRange
from .perm import Permutation
from .pyramid import canonical_member, pyramid_key_of, pyramidal_sequence
from .representatives import representatives_C
from .shift import orbit as shift_orbit, reversal_invariant
from .trapezoid import B_set, PrefixWord, is_in_D, phi, prefixes_D, psi, rho, theta
from .types import ClassPartitionReport, ClassSummary, Settings

logger = logging.getLogger(__name__)

MAX_PACKED = 16


def pack(letters) -> int:
    code = 0
    for letter in letters:
        code = (code << 4) | (letter - 1)
    return code


def unpack(code: int, n: int) -> Tuple[int, ...]:
    letters = []
    for _ in range(n):
        letters.append((code & 0xF) + 1)
        code >>= 4
    return tuple(reversed(letters))


def unrank(n: int, rank: int) -> List[int]:
    """The permutation of rank `rank` (0-based) in lexicographic order"""
    if not 0 <= rank < factorial(n):
        raise OutOfRange(f"Rank {rank} outside [0, {n}!)")
    available = list(range(1, n + 1))
    letters = []
    for position in range(n, 0, -1):
        index, rank = divmod(rank, factorial(position - 1))
        letters.append(available.pop(index))
    return letters


def next_permutation(letters: List[int]) -> bool:
    """Advance letters to the lexicographic successor in place; False after the last one"""
    i = len(letters) - 2
    while i >= 0 and letters[i] >= letters[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = len(letters) - 1
    while letters[j] <= letters[i]:
        j -= 1
    letters[i], letters[j] = letters[j], letters[i]
    letters[i + 1:] = reversed(letters[i + 1:])
    return True


def _partition_block(n: int, start: int, count: int) -> Dict[bytes, List[int]]:
    """key -> [class size, smallest packed member] over one rank block"""
    partial: Dict[bytes, List[int]] = {}
    letters = unrank(n, start)
    # codes increase along the block, so the first code seen for a key is its minimum
    for _ in range(count):
        key = pyramid_key_of(letters)
        entry = partial.get(key)
        if entry is None:
            partial[key] = [1, pack(letters)]
        else:
            entry[0] += 1
        if not next_permutation(letters):
            break
    return partial


def _blocks(n: int, block_size: int) -> List[Tuple[int, int, int]]:
    total = factorial(n)
    return [(n, start, min(block_size, total - start)) for start in range(0, total, block_size)]


def _check_limit(n: int, limit: int, what: str):
    if n > limit:
        raise LimitExceeded(f"{what} is limited to n <= {limit}, got n = {n}")
    if n > MAX_PACKED:
        raise LimitExceeded(f"Packed codes hold at most {MAX_PACKED} letters, got n = {n}")


def _exponent(size: int) -> int:
    return size.bit_length() - 1


def _report(n: int, merged: Dict[bytes, List[int]], relation: str) -> ClassPartitionReport:
    classes = [
        ClassSummary(key, size, unpack(code, n))
        for key, (size, code) in sorted(merged.items(), key=lambda item: item[1][1])
    ]
    histogram = Counter(_exponent(summary.size) for summary in classes)
    report = ClassPartitionReport(n, len(classes), dict(sorted(histogram.items())), classes, relation)
    report.check(factorial(n))
    return report


def bruteforce_ss_partition(n: int, settings: Optional[Settings] = None) -> ClassPartitionReport:
    """Group S_n by pyramid key"""
    settings = settings or Settings()
    if n < 2:
        raise OutOfRange(f"Partitions need n >= 2, got n = {n}")
    _check_limit(n, settings.ss_limit, "The super-strong partition")

    blocks = _blocks(n, settings.block_size)
    if settings.workers > 1 and len(blocks) > 1:
        logger.info(f"Partitioning S_{n} in {len(blocks)} blocks on {settings.workers} workers")
        with ProcessPoolExecutor(max_workers=settings.workers) as executor:
            partials = list(executor.map(_partition_block, *zip(*blocks)))
    else:
        partials = [_partition_block(*block) for block in blocks]

    merged: Dict[bytes, List[int]] = {}
    for partial in partials:
        for key, (size, code) in partial.items():
            entry = merged.get(key)
            if entry is None:
                merged[key] = [size, code]
            else:
                entry[0] += size
                entry[1] = min(entry[1], code)
    report = _report(n, merged, 'ss')
    logger.info(f"S_{n} splits into {report.class_count} super-strong classes")
    return report


def bruteforce_D(i: int, n: int, settings: Optional[Settings] = None) -> Tuple[PrefixWord, ...]:
    """D_{i,n} by testing every word of i distinct letters"""
    settings = settings or Settings()
    if n < 3 or not 1 <= i <= n - 2:
        raise OutOfRange(f"D_(i,n) needs n >= 3 and 1 <= i <= n-2, got i={i}, n={n}")
    _check_limit(n, settings.prefix_limit, "Brute-force prefix sets")
    return tuple(
        PrefixWord(letters, n)
        for letters in permutations(range(1, n + 1), i)
        if is_in_D(letters, n)
    )


def bruteforce_shift_partition(
    n: int, with_reversals: bool = False, settings: Optional[Settings] = None
) -> ClassPartitionReport:
    """Orbits of S_n under rigid shifts, and reversals when asked"""
    settings = settings or Settings()
    if n < 2:
        raise OutOfRange(f"Partitions need n >= 2, got n = {n}")
    _check_limit(n, settings.shift_limit, "The shift orbit partition")

    visited = set()
    merged: Dict[bytes, List[int]] = {}
    for letters in permutations(range(1, n + 1)):
        seed = Permutation(letters)
        if seed in visited:
            continue
        orbit = shift_orbit(seed, with_reversals)
        visited |= orbit
        # seeds come in lexicographic order, so the seed is the smallest member
        merged[pack(seed.letters).to_bytes(8, 'big')] = [len(orbit), pack(seed.letters)]
    relation = 'shift' if with_reversals else 'strong-shift'
    report = _report(n, merged, relation)
    logger.info(f"S_{n} splits into {report.class_count} {relation} orbits")
    return report


@dataclass
class CheckResult:
    check: str
    n: int
    expected: object
    actual: object
    details: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.expected == self.actual and not self.details

    def to_json(self) -> dict:
        return {
            'check': self.check,
            'n': self.n,
            'passed': self.passed,
            'expected': self.expected,
            'actual': self.actual,
            'details': self.details,
        }


def _check_ss(n: int, settings: Settings) -> List[CheckResult]:
    report = bruteforce_ss_partition(n, settings)
    results = [CheckResult('ss-count', n, s_count(n), report.class_count)]
    row = {j: s_j_count(j, n) for j in range(1, n) if s_j_count(j, n)}
    results.append(CheckResult('ss-histogram', n, row, report.size_histogram))

    keys = {summary.key for summary in report.classes}
    details = []
    for summary in report.classes:
        member = canonical_member(pyramidal_sequence(Permutation(summary.representative)))
        if pyramid_key_of(member.letters) != summary.key:
            details.append(f"canonical member {member} left the class of {Permutation(summary.representative)}")
    representative_keys = {pyramid_key_of(u.letters) for u in representatives_C(n).members}
    if representative_keys != keys:
        details.append(f"C_{n} hits {len(representative_keys & keys)} of {len(keys)} classes")
    results.append(CheckResult('ss-representatives', n, len(keys), len(representative_keys), details))
    return results


def _check_prefixes(n: int, settings: Settings) -> List[CheckResult]:
    results = []
    for i in range(1, n - 1):
        recursive = prefixes_D(i, n)
        brute = bruteforce_D(i, n, settings)
        details = [] if set(recursive) == set(brute) else [f"D_({i},{n}) differs from the direct filter"]
        results.append(CheckResult(f'prefixes-d{i}', n, d_count(i, n), len(brute), details))

        roundtrip = []
        if i >= 2:
            for u in recursive:
                trapezoid = phi(u)
                if psi(trapezoid) != u or phi(psi(trapezoid)) != trapezoid:
                    roundtrip.append(f"phi/psi roundtrip fails on {u}")
        if i < n // 2:
            images = {rho(u) for u in recursive}
            if images != set(B_set(i + 1)):
                roundtrip.append(f"rho(D_({i},{n})) is not B_{i + 1}")
            for u in recursive:
                if theta(rho(u), n) != u:
                    roundtrip.append(f"theta does not undo rho on {u}")
            for b in images:
                if rho(theta(b, n)) != b:
                    roundtrip.append(f"rho does not undo theta on {b}")
        results.append(CheckResult(f'bijections-d{i}', n, [], roundtrip))
    return results


def orbit_mismatch(u: Permutation, orbit: Iterable[Permutation], ss_by_key: Dict[bytes, int]) -> Optional[str]:
    """Why the strong shift orbit of u is not one super-strong class, or None"""
    orbit = list(orbit)
    keys = {pyramid_key_of(member.letters) for member in orbit}
    if len(keys) > 1:
        return f"orbit of {u} spans {len(keys)} super-strong classes"
    key = keys.pop()
    if ss_by_key.get(key) != len(orbit):
        return f"orbit of {u} has {len(orbit)} members, its super-strong class has {ss_by_key.get(key)}"
    return None


def _check_shift(n: int, settings: Settings) -> List[CheckResult]:
    strong = bruteforce_shift_partition(n, False, settings)
    ss = bruteforce_ss_partition(n, settings)
    results = [CheckResult('strong-shift-count', n, ss.class_count, strong.class_count)]

    strong_sizes = sorted(summary.size for summary in strong.classes)
    ss_sizes = sorted(summary.size for summary in ss.classes)
    ss_by_key = {summary.key: summary.size for summary in ss.classes}
    details = []
    for summary in strong.classes:
        u = Permutation(summary.representative)
        mismatch = orbit_mismatch(u, shift_orbit(u), ss_by_key)
        if mismatch:
            details.append(mismatch)
    results.append(CheckResult('strong-shift-classes', n, ss_sizes, strong_sizes, details))

    shift = bruteforce_shift_partition(n, True, settings)
    results.append(CheckResult('shift-count', n, sh_count(n), shift.class_count))

    if n >= 3:
        invariant = sum(
            1 for summary in ss.classes if reversal_invariant(Permutation(summary.representative))
        )
        results.append(CheckResult('reversal-invariant', n, 2, invariant))
    return results


CHECKS: Dict[str, Callable[[int, Settings], List[CheckResult]]] = {
    'ss': _check_ss,
    'prefixes': _check_prefixes,
    'shift': _check_shift,
}

_FIRST_N = {'ss': 2, 'prefixes': 3, 'shift': 2}


def cross_check(check: str, n_max: int, settings: Optional[Settings] = None) -> List[CheckResult]:
    """Run brute force against the recurrences and bijections for n up to n_max"""
    settings = settings or Settings()
    names = list(CHECKS) if check == 'all' else [check]
    for name in names:
        if name not in CHECKS:
            raise OutOfRange(f"Unknown check {name!r}; expected one of {sorted(CHECKS)} or 'all'")

    limits = {'ss': settings.ss_limit, 'prefixes': settings.prefix_limit, 'shift': settings.shift_limit}
    for name in names:
        _check_limit(n_max, limits[name], f"The {name} check")
        # the shift check also sweeps the super-strong partition
        if name == 'shift':
            _check_limit(n_max, settings.ss_limit, "The shift check")

    results = []
    for name in names:
        for n in range(_FIRST_N[name], n_max + 1):
            results.extend(CHECKS[name](n, settings))
    failed = [result for result in results if not result.passed]
    for result in failed:
        logger.warning(f"Check {result.check} failed at n={result.n}: expected {result.expected}, got {result.actual}")
    logger.info(f"{len(results) - len(failed)} of {len(results)} checks passed")
    return results
