# representatives.py
"""
One permutation per super-strong class, built recursively from minimal
prefixes: R_n collects the words u·v with u in E_{i,n} and red(v) in R_{n-i},
and C_n holds their inverses.
"""
import logging
from dataclasses import dataclass
from math import inf
from threading import RLock
from typing import FrozenSet, Iterable, List, Tuple

from cachetools import Cache, cached

from .exceptions import OutOfRange, SizeMismatch
from .perm import Permutation, Word, identity, inverse
from .trapezoid import prefixes_D

logger = logging.getLogger(__name__)

_reps_cache = Cache(maxsize=inf)
_reps_lock = RLock()


@dataclass(frozen=True)
class RepresentativeEntry:
    """member = prefix · un_reduce(rest, tau) with prefix in E_{i,n}"""
    member: Permutation
    i: int
    prefix: Tuple[int, ...]
    tau: Permutation

    def to_json(self) -> dict:
        return {
            'member': self.member.to_json(),
            'i': self.i,
            'prefix': list(self.prefix),
            'tau': self.tau.to_json(),
        }


@dataclass(frozen=True)
class RepresentativeSet:
    n: int
    entries: Tuple[RepresentativeEntry, ...]

    @property
    def members(self) -> Tuple[Permutation, ...]:
        return tuple(entry.member for entry in self.entries)

    def as_set(self) -> FrozenSet[Permutation]:
        return frozenset(self.members)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, u) -> bool:
        return u in self.as_set()


def un_reduce(alphabet: Iterable[int], tau: Permutation) -> Word:
    """The word over alphabet whose reduced form is tau"""
    ordered = sorted(set(alphabet))
    if len(ordered) != len(tau):
        raise SizeMismatch(f"Alphabet of size {len(ordered)} cannot carry a pattern of size {len(tau)}")
    return Word(tuple(ordered[letter - 1] for letter in tau.letters))


def e_prefixes(i: int, n: int) -> List[Tuple[int, ...]]:
    """E_{i,n}: D_{i,n} for i >= 2, and only the letter 1 for i = 1"""
    if i == 1:
        return [(1,)]
    return [u.letters for u in prefixes_D(i, n)]


def _base_entries(n: int) -> Tuple[RepresentativeEntry, ...]:
    if n == 1:
        return (RepresentativeEntry(identity(1), 0, (), identity(1)),)
    if n == 2:
        return (RepresentativeEntry(identity(2), 0, (), identity(2)),)
    # n == 3: 2·13 stands for the second height-one trapezoid
    return (
        RepresentativeEntry(Permutation((1, 2, 3)), 1, (1,), identity(2)),
        RepresentativeEntry(Permutation((2, 1, 3)), 1, (2,), identity(2)),
    )


@cached(cache=_reps_cache, lock=_reps_lock)
def _entries(n: int) -> Tuple[RepresentativeEntry, ...]:
    if n <= 3:
        return _base_entries(n)
    entries = []
    full = set(range(1, n + 1))
    for i in range(1, n - 1):
        smaller = _entries(n - i)
        for prefix in e_prefixes(i, n):
            rest = full.difference(prefix)
            for sub in smaller:
                suffix = un_reduce(rest, sub.member)
                member = Permutation(prefix + suffix.letters)
                entries.append(RepresentativeEntry(member, i, prefix, sub.member))
    logger.debug(f"Built R_{n} with {len(entries)} members")
    return tuple(entries)


def representatives_R(n: int) -> RepresentativeSet:
    if n < 1:
        raise OutOfRange(f"R_n needs n >= 1, got n={n}")
    return RepresentativeSet(n, _entries(n))


def representatives_C(n: int) -> RepresentativeSet:
    """Inverses of R_n, one per super-strong class of S_n"""
    if n < 1:
        raise OutOfRange(f"C_n needs n >= 1, got n={n}")
    entries = tuple(
        RepresentativeEntry(inverse(entry.member), entry.i, entry.prefix, entry.tau)
        for entry in _entries(n)
    )
    return RepresentativeSet(n, entries)
