# shift.py
"""
Rigid shifts of skyline diagrams.

A rigid shift cuts the skyline of u at height h and slides every block above
the cut by the same offset, so that each block lands on a column whose height
is at least h. The strong shift class of u (rigid shifts only) is its
super-strong class; adding reversals gives the shift class.
"""
import logging
from collections import deque
from dataclasses import dataclass
from itertools import permutations
from typing import Dict, FrozenSet, List, Optional, Tuple

from .exceptions import InvalidMove, SizeMismatch
from .perm import Permutation, identity, reversal
from .pyramid import class_members, pyramid_key_of, pyramidal_sequence

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class RigidShiftMove:
    h: int
    delta: int

    def __post_init__(self):
        if self.delta == 0:
            raise InvalidMove("A rigid shift needs a non-zero offset")
        if self.h < 1:
            raise InvalidMove(f"Cut height must be positive, got {self.h}")

    def to_json(self) -> dict:
        return {'h': self.h, 'delta': self.delta}


@dataclass(frozen=True)
class ShiftStep:
    """One edge of a witness path: a rigid shift, or a reversal when move is None"""
    move: Optional[RigidShiftMove]
    result: Permutation

    @property
    def is_reversal(self) -> bool:
        return self.move is None

    def to_json(self) -> dict:
        return {
            'move': 'reversal' if self.move is None else self.move.to_json(),
            'result': self.result.to_json(),
        }


def _shifted(letters: Tuple[int, ...], h: int, delta: int) -> Optional[Tuple[int, ...]]:
    n = len(letters)
    moved = [index for index, letter in enumerate(letters) if letter > h]
    if not moved:
        return None
    result = list(letters)
    landing = set()
    for index in moved:
        target = index + delta
        if not 0 <= target < n or letters[target] < h:
            return None
        result[target] = letters[index]
        landing.add(target)
    # exactly one column of height >= h is left without a block
    for index, letter in enumerate(letters):
        if letter >= h and index not in landing:
            result[index] = h
    return tuple(result)


def apply_rigid_shift(u: Permutation, move: RigidShiftMove) -> Permutation:
    if move.h > u.n:
        raise InvalidMove(f"Cut height {move.h} exceeds n = {u.n}")
    result = _shifted(u.letters, move.h, move.delta)
    if result is None:
        raise InvalidMove(f"Shift by {move.delta} at height {move.h} does not land on {u}")
    return Permutation(result)


def enumerate_rigid_shifts(u: Permutation) -> List[Tuple[RigidShiftMove, Permutation]]:
    """All valid moves with a non-empty moved set, ordered by (h, delta)"""
    found = []
    for h in range(1, u.n):
        for delta in range(1 - u.n, u.n):
            if delta == 0:
                continue
            result = _shifted(u.letters, h, delta)
            if result is not None:
                found.append((RigidShiftMove(h, delta), Permutation(result)))
    return found


def _neighbours(u: Permutation, with_reversals: bool) -> List[Tuple[Optional[RigidShiftMove], Permutation]]:
    steps: List[Tuple[Optional[RigidShiftMove], Permutation]] = list(enumerate_rigid_shifts(u))
    if with_reversals:
        steps.append((None, reversal(u)))
    return steps


def orbit(u: Permutation, with_reversals: bool = False) -> FrozenSet[Permutation]:
    """Breadth-first closure of {u} under rigid shifts and optionally reversal"""
    seen = {u}
    queue = deque([u])
    while queue:
        current = queue.popleft()
        for _, following in _neighbours(current, with_reversals):
            if following not in seen:
                seen.add(following)
                queue.append(following)
    logger.debug(f"Orbit of {u} (reversals={with_reversals}) has {len(seen)} members")
    return frozenset(seen)


def strong_shift_class(u: Permutation) -> FrozenSet[Permutation]:
    return orbit(u, with_reversals=False)


def _swap_pattern(n: int) -> Permutation:
    """1 2 ... (n-3) (n-1) (n-2) n"""
    return Permutation(tuple(range(1, n - 2)) + (n - 1, n - 2, n))


def ss_class(u: Permutation) -> FrozenSet[Permutation]:
    if u.n == 1:
        return frozenset({u})
    return class_members(pyramidal_sequence(u))


def reversal_invariant(u: Permutation) -> bool:
    """True when u and its reversal share a super-strong class"""
    if u.n == 1:
        return True
    return pyramid_key_of(u.letters) == pyramid_key_of(reversal(u).letters)


def shift_class(u: Permutation) -> FrozenSet[Permutation]:
    """[u]_ss alone for the two reversal-invariant classes, [u]_ss with [ũ]_ss otherwise"""
    if u.n <= 2:
        return frozenset(Permutation(letters) for letters in permutations(range(1, u.n + 1)))
    key = pyramid_key_of(u.letters)
    if key in (pyramid_key_of(identity(u.n).letters), pyramid_key_of(_swap_pattern(u.n).letters)):
        return ss_class(u)
    return ss_class(u) | ss_class(reversal(u))


def is_shift_equivalent(u: Permutation, v: Permutation) -> bool:
    if u.n != v.n:
        raise SizeMismatch(f"Cannot compare permutations of sizes {u.n} and {v.n}")
    return v in shift_class(u)


def is_strong_shift_equivalent(u: Permutation, v: Permutation) -> bool:
    if u.n != v.n:
        raise SizeMismatch(f"Cannot compare permutations of sizes {u.n} and {v.n}")
    return v in strong_shift_class(u)


def find_shift_path(u: Permutation, v: Permutation, with_reversals: bool = False) -> Optional[List[ShiftStep]]:
    """Shortest sequence of moves taking u to v, or None when v is out of reach"""
    if u.n != v.n:
        raise SizeMismatch(f"Cannot compare permutations of sizes {u.n} and {v.n}")
    parents: Dict[Permutation, Optional[Tuple[Permutation, Optional[RigidShiftMove]]]] = {u: None}
    queue = deque([u])
    while queue:
        current = queue.popleft()
        if current == v:
            break
        for move, following in _neighbours(current, with_reversals):
            if following not in parents:
                parents[following] = (current, move)
                queue.append(following)
    if v not in parents:
        return None

    path = []
    node = v
    while parents[node] is not None:
        previous, move = parents[node]
        path.append(ShiftStep(move, node))
        node = previous
    path.reverse()
    return path

