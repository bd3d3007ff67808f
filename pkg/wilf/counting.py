# counting.py
"""
Exact recurrences for the class counts: periodic-suffix prefixes p_{i,n},
minimal prefixes d_{i,n}, non-interval permutations a_n, super-strong classes
s_n and s_{j,n}, and shift classes sh_n.
"""
import logging
from math import factorial, inf
from threading import RLock
from typing import Dict

from cachetools import Cache, cachedmethod

from .exceptions import InvariantViolation, NegativeResult, OutOfRange, ParityViolation

logger = logging.getLogger(__name__)


class CountTable:
    """Memoized recurrence values, one append-only cache per family"""

    def __init__(self):
        self._lock = RLock()
        self._initialize_caches()

    def _initialize_caches(self):
        self._caches = {
            'x': Cache(maxsize=inf),
            'p': Cache(maxsize=inf),
            'd': Cache(maxsize=inf),
            'a': Cache(maxsize=inf),
            's': Cache(maxsize=inf),
            's_j': Cache(maxsize=inf),
        }
        # highest row whose values are all cached; rows 1..3 are base cases
        self._filled = {'s': 3, 's_j': 3}
        logger.debug("Initialized count caches")

    def clear(self):
        with self._lock:
            for cache in self._caches.values():
                cache.clear()
            self._filled = {'s': 3, 's_j': 3}

    def cache_sizes(self) -> Dict[str, int]:
        return {family: len(cache) for family, cache in self._caches.items()}

    def _fill(self, family: str, n: int):
        """Cache rows below n in ascending order so a row only reads cached rows"""
        with self._lock:
            for k in range(self._filled[family] + 1, n):
                for i in range(1, k - 1):
                    self.d(i, k)
                if family == 's':
                    self.s(k)
                else:
                    for j in range(1, k):
                        self.s_j(j, k)
                self._filled[family] = k

    @cachedmethod(lambda self: self._caches['x'], lock=lambda self: self._lock)
    def x(self, i: int, n: int) -> int:
        """Ordered periodic suffix sets of size n-i inside [n]"""
        if n < 2 or not 0 <= i <= n - 2:
            raise OutOfRange(f"x_(i,n) needs 0 <= i <= n-2, got i={i}, n={n}")
        m = n - i - 1
        return sum(n - d * m for d in range(1, n // m + 1))

    @cachedmethod(lambda self: self._caches['p'], lock=lambda self: self._lock)
    def p(self, i: int, n: int) -> int:
        if i == 0 and n >= 2:
            return 1
        if n < 3 or not 0 <= i <= n - 2:
            raise OutOfRange(f"p_(i,n) needs n >= 3 and 0 <= i <= n-2, got i={i}, n={n}")
        return self.x(i, n) * factorial(i)

    @cachedmethod(lambda self: self._caches['d'], lock=lambda self: self._lock)
    def d(self, i: int, n: int) -> int:
        if n < 3 or not 1 <= i <= n - 2:
            raise OutOfRange(f"d_(i,n) needs n >= 3 and 1 <= i <= n-2, got i={i}, n={n}")
        value = self.p(i, n) - sum(self.p(i - k, n - k) * self.d(k, n) for k in range(1, i))
        if value < 0:
            raise NegativeResult(f"d_({i},{n}) came out negative: {value}")
        return value

    @cachedmethod(lambda self: self._caches['a'], lock=lambda self: self._lock)
    def a(self, n: int) -> int:
        """Non-interval permutations of size n"""
        if n < 2:
            raise OutOfRange(f"a_n needs n >= 2, got n={n}")
        i = n - 1
        value = factorial(i + 1) - sum(self.a(k + 1) * factorial(i - k + 1) for k in range(1, i))
        if value < 0:
            raise NegativeResult(f"a_{n} came out negative: {value}")
        return value

    @cachedmethod(lambda self: self._caches['s'], lock=lambda self: self._lock)
    def s(self, n: int) -> int:
        if n < 1:
            raise OutOfRange(f"s_n needs n >= 1, got n={n}")
        if n <= 2:
            return 1
        if n == 3:
            return 2
        self._fill('s', n)
        return self.s(n - 1) + sum(self.d(i, n) * self.s(n - i) for i in range(2, n - 1))

    @cachedmethod(lambda self: self._caches['s_j'], lock=lambda self: self._lock)
    def s_j(self, j: int, n: int) -> int:
        if n < 2 or j < 0:
            raise OutOfRange(f"s_(j,n) needs n >= 2 and j >= 0, got j={j}, n={n}")
        if j == 0 or j > n - 1:
            return 0
        if n <= 3:
            return 1
        self._fill('s_j', n)
        rest = sum(self.d(k, n) * self.s_j(j, n - k) for k in range(2, n - j))
        return self.s_j(j - 1, n - 1) + rest

    def sh(self, n: int) -> int:
        if n < 1:
            raise OutOfRange(f"sh_n needs n >= 1, got n={n}")
        if n <= 2:
            return 1
        total = self.s(n)
        if total % 2:
            raise ParityViolation(f"s_{n} = {total} is odd")
        return 1 + total // 2

    def verify_row(self, n: int) -> bool:
        """Class sizes 2^j over all classes give n!, and the s_{j,n} add up to s_n"""
        if n < 2:
            raise OutOfRange(f"Rows start at n = 2, got n={n}")
        row = [self.s_j(j, n) for j in range(1, n)]
        covered = sum(count * 2 ** j for j, count in enumerate(row, start=1))
        if covered != factorial(n):
            raise InvariantViolation(f"Row {n} covers {covered} permutations, expected {factorial(n)}")
        if sum(row) != self.s(n):
            raise InvariantViolation(f"Row {n} sums to {sum(row)}, expected s_{n} = {self.s(n)}")
        logger.debug(f"Row {n} verified: {sum(row)} classes")
        return True


default_table = CountTable()


def x_count(i: int, n: int) -> int:
    return default_table.x(i, n)


def p_count(i: int, n: int) -> int:
    return default_table.p(i, n)


def d_count(i: int, n: int) -> int:
    return default_table.d(i, n)


def a_noninterval(n: int) -> int:
    return default_table.a(n)


def s_count(n: int) -> int:
    return default_table.s(n)


def s_j_count(j: int, n: int) -> int:
    return default_table.s_j(j, n)


def sh_count(n: int) -> int:
    return default_table.sh(n)
