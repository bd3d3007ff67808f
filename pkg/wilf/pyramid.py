# pyramid.py
"""
Pyramidal sequences of consecutive differences.

Two permutations u, v are super-strongly Wilf equivalent exactly when the
pyramids of u^{-1} and v^{-1} coincide, so the pyramid is the class invariant
used throughout the package.
"""
import logging
from bisect import insort
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from .exceptions import (
    InvalidPyramid,
    LengthMismatch,
    SizeMismatch,
    SizeTooSmall,
    TooSmall,
)
from .perm import Permutation, inverse

logger = logging.getLogger(__name__)

DiffVector = Tuple[int, ...]

LEVEL_SEPARATOR = 0


def delta_of_set(values: Iterable[int]) -> DiffVector:
    ordered = sorted(set(values))
    if len(ordered) < 2:
        raise TooSmall(f"Consecutive differences need at least two elements, got {ordered}")
    return tuple(b - a for a, b in zip(ordered, ordered[1:]))


def offset_set(c: int, delta: Sequence[int]) -> FrozenSet[int]:
    """The set {c, c + d_1, c + d_1 + d_2, ...}"""
    elements = [c]
    for entry in delta:
        elements.append(elements[-1] + entry)
    return frozenset(elements)


def validate_transition(a: Sequence[int], b: Sequence[int]) -> bool:
    """True when one pyramid move (merge two neighbours, drop the left end, drop the right end) turns a into b"""
    a, b = tuple(a), tuple(b)
    if len(a) < 2 or len(b) != len(a) - 1:
        raise LengthMismatch(f"Cannot step from a vector of length {len(a)} to one of length {len(b)}")
    if b == a[1:] or b == a[:-1]:
        return True
    return _merge_index(a, b) is not None


def _merge_index(a: DiffVector, b: DiffVector):
    """0-based k with b = a[:k] + (a[k] + a[k+1],) + a[k+2:], or None"""
    k = 0
    while k < len(b) and a[k] == b[k]:
        k += 1
    if k == len(b):
        return None
    if b[k] == a[k] + a[k + 1] and b[k + 1:] == a[k + 2:]:
        return k
    return None


def _check_levels(levels: Tuple[DiffVector, ...]):
    n = len(levels) + 1
    for index, level in enumerate(levels, start=1):
        if len(level) != n - index:
            raise InvalidPyramid(f"Level {index} has length {len(level)}, expected {n - index}")
        if any(entry < 1 for entry in level):
            raise InvalidPyramid(f"Level {index} has a non-positive entry: {level}")
    if levels and any(entry != 1 for entry in levels[0]):
        raise InvalidPyramid(f"The bottom level must be all ones, got {levels[0]}")
    for index in range(len(levels) - 1):
        if not validate_transition(levels[index], levels[index + 1]):
            raise InvalidPyramid(
                f"No pyramid move leads from {levels[index]} to {levels[index + 1]} (level {index + 1})"
            )


@dataclass(frozen=True)
class PyramidalSequence:
    """Levels (Δ_1, ..., Δ_{n-1}), index 0 holding the longest level"""
    levels: Tuple[DiffVector, ...]

    def __post_init__(self):
        levels = tuple(tuple(int(entry) for entry in level) for level in self.levels)
        object.__setattr__(self, 'levels', levels)
        _check_levels(levels)

    @property
    def n(self) -> int:
        return len(self.levels) + 1

    def level(self, i: int) -> DiffVector:
        """Δ_i with the 1-based index used in the literature"""
        return self.levels[i - 1]

    def top_down(self) -> List[Tuple[int, DiffVector]]:
        return [(i, self.levels[i - 1]) for i in range(len(self.levels), 0, -1)]

    def to_json(self) -> List[List[int]]:
        return [list(level) for level in self.levels]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[int]]) -> "PyramidalSequence":
        return cls(tuple(tuple(level) for level in data))


def pyramidal_sequence(u: Permutation) -> PyramidalSequence:
    """Δ_i lists the gaps between positions of letters >= i, left to right"""
    if u.n < 2:
        raise SizeTooSmall(f"Pyramids need n >= 2, got n = {u.n}")
    levels = []
    for i in range(1, u.n):
        positions = [index for index, letter in enumerate(u.letters, start=1) if letter >= i]
        levels.append(delta_of_set(positions))
    return PyramidalSequence(tuple(levels))


def pyramidal_sequence_from_inverse(u: Permutation) -> PyramidalSequence:
    """Same pyramid, computed from the suffix alphabets of s = u^{-1}"""
    if u.n < 2:
        raise SizeTooSmall(f"Pyramids need n >= 2, got n = {u.n}")
    s = inverse(u).letters
    levels = []
    for i in range(1, u.n):
        suffix_alphabet = sorted(s[i - 1:])
        levels.append(tuple(b - a for a, b in zip(suffix_alphabet, suffix_alphabet[1:])))
    return PyramidalSequence(tuple(levels))


def is_ss_equivalent(u: Permutation, v: Permutation) -> bool:
    if u.n != v.n:
        raise SizeMismatch(f"Cannot compare permutations of sizes {u.n} and {v.n}")
    if u.n == 1:
        return True
    return pyramid_key_of(u.letters) == pyramid_key_of(v.letters)


def is_periodic_vector(vector: Sequence[int]) -> bool:
    """All entries equal and at least one entry. Shared with the trapezoid checks"""
    return len(set(vector)) == 1


def class_size_exponent(p: PyramidalSequence) -> int:
    """j such that the class of p has 2^j members"""
    exponent = 1
    for lower, upper in zip(p.levels, p.levels[1:]):
        if is_periodic_vector(lower) and is_periodic_vector(upper) and lower[0] == upper[0]:
            exponent += 1
    return exponent


def _placement_options(lower: DiffVector, upper: DiffVector) -> List[Tuple[str, int]]:
    """Ways letter i can sit relative to the larger letters, in preference order"""
    options = []
    k = _merge_index(lower, upper)
    if k is not None:
        options.append(('inside', sum(lower[:k + 1])))
    if upper == lower[1:]:
        options.append(('left', lower[0]))
    if upper == lower[:-1]:
        options.append(('right', lower[-1]))
    return options


def _placements(p: PyramidalSequence, every_choice: bool) -> List[Dict[int, int]]:
    n = p.n
    top = p.levels[-1][0]
    states = [{n - 1: 0, n: top}]
    if every_choice:
        states.append({n: 0, n - 1: top})

    for i in range(n - 2, 0, -1):
        options = _placement_options(p.level(i), p.level(i + 1))
        if not options:
            raise InvalidPyramid(f"No placement for letter {i}")
        if not every_choice:
            options = options[:1]
        next_states = []
        for state in states:
            leftmost, rightmost = min(state.values()), max(state.values())
            for kind, distance in options:
                placed = dict(state)
                if kind == 'inside':
                    placed[i] = leftmost + distance
                elif kind == 'left':
                    placed[i] = leftmost - distance
                else:
                    placed[i] = rightmost + distance
                next_states.append(placed)
        states = next_states
    return states


def _word_from_placement(placement: Dict[int, int]) -> Permutation:
    shift = min(placement.values())
    word = [0] * len(placement)
    for letter, position in placement.items():
        word[position - shift] = letter
    return Permutation(tuple(word))


def canonical_member(p: PyramidalSequence) -> Permutation:
    """Rebuild a permutation with pyramid p, largest letters first.

    n-1 goes to the left of n, and whenever a letter could go on either end
    of a periodic configuration it goes on the left.
    """
    if not p.levels:
        return Permutation((1,))
    return _word_from_placement(_placements(p, every_choice=False)[0])


def class_members(p: PyramidalSequence) -> FrozenSet[Permutation]:
    """Every permutation whose pyramid is p"""
    if not p.levels:
        return frozenset({Permutation((1,))})
    members = frozenset(_word_from_placement(state) for state in _placements(p, every_choice=True))
    logger.debug(f"Class of pyramid with n={p.n} has {len(members)} members")
    return members


def _append_varint(value: int, out: bytearray):
    while value >= 0x80:
        out.append((value & 0x7F) | 0x80)
        value >>= 7
    out.append(value)


def canonical_key(p: PyramidalSequence) -> bytes:
    """Levels from Δ_{n-1} down to Δ_1, entries as LEB128 varints, each level closed by a zero byte.

    Entries are positive, so no varint byte is zero and the separator is unambiguous.
    """
    out = bytearray()
    for level in reversed(p.levels):
        for entry in level:
            _append_varint(entry, out)
        out.append(LEVEL_SEPARATOR)
    return bytes(out)


def pyramid_key_of(letters: Sequence[int]) -> bytes:
    """canonical_key(pyramidal_sequence(u)) straight from the letters of u"""
    n = len(letters)
    if n < 2:
        return b''
    position = [0] * (n + 1)
    for index, letter in enumerate(letters):
        position[letter] = index
    out = bytearray()
    row = [position[n]]
    for i in range(n - 1, 0, -1):
        insort(row, position[i])
        previous = row[0]
        for current in row[1:]:
            gap = current - previous
            if gap < 0x80:
                out.append(gap)
            else:
                _append_varint(gap, out)
            previous = current
        out.append(LEVEL_SEPARATOR)
    return bytes(out)

