# trapezoid.py
"""
Minimal prefixes with a periodic complement (the sets D_{i,n}), their
trapezoidal sequences, and the correspondence with non-interval permutations.
"""
import logging
from dataclasses import dataclass
from itertools import permutations
from math import inf
from threading import RLock
from typing import FrozenSet, List, Sequence, Tuple

from cachetools import Cache, cached

from .exceptions import (
    InvalidTrapezoid,
    NotAPrefix,
    NotInB,
    OutOfRange,
    RangeViolation,
    SizeTooSmall,
    TooSmall,
)
from .perm import Permutation, Word, reduced_form, reversal
from .pyramid import DiffVector, delta_of_set, is_periodic_vector, offset_set, validate_transition

logger = logging.getLogger(__name__)

_prefix_cache = Cache(maxsize=inf)
_prefix_lock = RLock()


@dataclass(frozen=True, order=True)
class PrefixWord(Word):
    """A word u_1 ... u_i of distinct letters taken from [n]"""
    n: int

    def __post_init__(self):
        super().__post_init__()
        i = len(self.letters)
        if not 1 <= i <= self.n - 2:
            raise OutOfRange(f"A prefix over [{self.n}] has length 1..{self.n - 2}, got {i}")
        if len(set(self.letters)) != i:
            raise NotAPrefix(f"Letters of {self.letters} are not distinct")
        if any(letter > self.n for letter in self.letters):
            raise NotAPrefix(f"{self.letters} has letters outside [{self.n}]")

    @property
    def complement(self) -> FrozenSet[int]:
        return frozenset(range(1, self.n + 1)) - frozenset(self.letters)


@dataclass(frozen=True)
class TrapezoidalSequence:
    """Levels (Δ_1, ..., Δ_{i+1}) of height i over [n]"""
    levels: Tuple[DiffVector, ...]
    n: int

    def __post_init__(self):
        levels = tuple(tuple(int(entry) for entry in level) for level in self.levels)
        object.__setattr__(self, 'levels', levels)
        n = self.n
        if len(levels) < 2 or len(levels) > n - 1:
            raise InvalidTrapezoid(f"A trapezoid over [{n}] has 2..{n - 1} levels, got {len(levels)}")
        for index, level in enumerate(levels, start=1):
            if len(level) != n - index:
                raise InvalidTrapezoid(f"Level {index} has length {len(level)}, expected {n - index}")
            if any(entry < 1 for entry in level):
                raise InvalidTrapezoid(f"Level {index} has a non-positive entry: {level}")
        if any(entry != 1 for entry in levels[0]):
            raise InvalidTrapezoid(f"The bottom level must be all ones, got {levels[0]}")
        for lower, upper in zip(levels, levels[1:]):
            if not validate_transition(lower, upper):
                raise InvalidTrapezoid(f"No pyramid move leads from {lower} to {upper}")
        if not is_periodic_vector(levels[-1]):
            raise InvalidTrapezoid(f"Top level {levels[-1]} is not periodic")
        # Δ_2 .. Δ_i
        for level in levels[1:-1]:
            if is_periodic_vector(level):
                raise InvalidTrapezoid(f"Interior level {level} is periodic")

    @property
    def height(self) -> int:
        return len(self.levels) - 1

    def to_json(self) -> List[List[int]]:
        return [list(level) for level in self.levels]


def is_periodic_set(values) -> bool:
    values = set(values)
    if len(values) < 2:
        raise TooSmall(f"Periodicity needs at least two elements, got {sorted(values)}")
    return is_periodic_vector(delta_of_set(values))


def _has_periodic_complement(letters: Sequence[int], n: int) -> bool:
    rest = set(range(1, n + 1)).difference(letters)
    return len(rest) >= 2 and is_periodic_vector(delta_of_set(rest))


def is_in_D(letters: Sequence[int], n: int) -> bool:
    """Membership in D_{i,n}: periodic complement, and no shorter prefix has one"""
    letters = tuple(letters)
    i = len(letters)
    if not 1 <= i <= n - 2 or len(set(letters)) != i or any(not 1 <= x <= n for x in letters):
        return False
    if not _has_periodic_complement(letters, n):
        return False
    return not any(_has_periodic_complement(letters[:j], n) for j in range(1, i))


def complement_progression(u: PrefixWord) -> Tuple[int, int]:
    """(c, d) with [n] minus alph(u) equal to {c, c+d, c+2d, ...}"""
    rest = sorted(u.complement)
    if len(rest) < 2 or not is_periodic_vector(delta_of_set(rest)):
        raise NotAPrefix(f"{u} does not leave a periodic complement in [{u.n}]")
    return rest[0], rest[1] - rest[0]


def _progressions(size: int, n: int):
    """Arithmetic progressions of the given size inside [n]"""
    for d in range(1, n):
        last_start = n - (size - 1) * d
        if last_start < 1:
            break
        for c in range(1, last_start + 1):
            yield frozenset(range(c, c + size * d, d))


@cached(cache=_prefix_cache, lock=_prefix_lock)
def _prefix_tuples(i: int, n: int) -> Tuple[Tuple[int, ...], ...]:
    if n == 3 and i == 1:
        return ((1,), (2,), (3,))
    if i == 1:
        return ((1,), (n,))

    shorter = [frozenset(_prefix_tuples(j, n)) for j in range(1, i)]
    found = []
    for progression in _progressions(n - i, n):
        remaining = sorted(set(range(1, n + 1)) - progression)
        for ordering in permutations(remaining):
            if any(ordering[:j] in shorter[j - 1] for j in range(1, i)):
                continue
            found.append(ordering)
    found.sort()
    logger.debug(f"Built D_({i},{n}) with {len(found)} prefixes")
    return tuple(found)


def prefixes_D(i: int, n: int) -> Tuple[PrefixWord, ...]:
    """D_{i,n} in lexicographic order"""
    if n < 3 or not 1 <= i <= n - 2:
        raise OutOfRange(f"D_(i,n) needs n >= 3 and 1 <= i <= n-2, got i={i}, n={n}")
    return tuple(PrefixWord(letters, n) for letters in _prefix_tuples(i, n))


def phi(u: PrefixWord) -> TrapezoidalSequence:
    if not is_in_D(u.letters, u.n):
        raise NotAPrefix(f"{u} is not a minimal prefix with periodic complement over [{u.n}]")
    remaining = set(range(1, u.n + 1))
    levels = [delta_of_set(remaining)]
    for letter in u.letters:
        remaining.discard(letter)
        levels.append(delta_of_set(remaining))
    return TrapezoidalSequence(levels, u.n)


def psi(p: TrapezoidalSequence) -> PrefixWord:
    """Invert phi by peeling one letter per level.

    The anchor of Y_{j+1} moves right by the first gap of Δ_j exactly when
    Δ_{j+1} is Δ_j without its first entry. On height one both 1 and n map to
    the same trapezoid and the smaller one comes back.
    """
    if not isinstance(p, TrapezoidalSequence):
        raise InvalidTrapezoid(f"Expected a TrapezoidalSequence, got {type(p).__name__}")
    current = frozenset(range(1, p.n + 1))
    letters = []
    for j in range(p.height):
        lower, upper = p.levels[j], p.levels[j + 1]
        anchor = min(current)
        if upper == lower[1:]:
            anchor += lower[0]
        following = offset_set(anchor, upper)
        removed = current - following
        if len(removed) != 1 or not following <= current:
            raise InvalidTrapezoid(f"Level {j + 2} is not reachable from {sorted(current)}")
        letters.append(next(iter(removed)))
        current = following
    return PrefixWord(letters, p.n)


def is_non_interval(b: Permutation) -> bool:
    """No prefix of length 2..n-1 has an interval alphabet"""
    if b.n < 2:
        raise SizeTooSmall(f"Non-interval test needs n >= 2, got n = {b.n}")
    low = high = b[0]
    for length in range(2, b.n):
        letter = b[length - 1]
        low, high = min(low, letter), max(high, letter)
        if high - low + 1 == length:
            return False
    return True


def _is_in_B(b: Permutation) -> bool:
    return is_non_interval(reversal(b))


def B_set(size: int) -> Tuple[Permutation, ...]:
    """Permutations of the given size with no interval suffix of length 2..size-1"""
    if size < 2:
        raise SizeTooSmall(f"B needs size >= 2, got {size}")
    found = tuple(
        Permutation(letters)
        for letters in permutations(range(1, size + 1))
        if _is_in_B(Permutation(letters))
    )
    logger.debug(f"B_{size} has {len(found)} members")
    return found


def _check_range(k: int, n: int):
    if not 1 <= k < n // 2:
        raise RangeViolation(f"Need 1 <= k < floor(n/2), got k={k}, n={n}")


def rho(u: PrefixWord, as_noninterval: bool = False) -> Permutation:
    """red(u·a) with a the smallest letter missing from u"""
    k = len(u)
    _check_range(k, u.n)
    if not is_in_D(u.letters, u.n):
        raise NotAPrefix(f"{u} is not in D_({k},{u.n})")
    a = min(u.complement)
    image = reduced_form(u.letters + (a,))
    return reversal(image) if as_noninterval else image


def theta(b: Permutation, n: int) -> PrefixWord:
    k = b.n - 1
    _check_range(k, n)
    if not _is_in_B(b):
        raise NotInB(f"{b} has an interval suffix")
    pivot = b[k]
    lift = n - k - 1
    return PrefixWord([letter if letter < pivot else letter + lift for letter in b.letters[:k]], n)
