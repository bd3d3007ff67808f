import pytest
from hypothesis import given, settings as hypothesis_settings

from wilf.counting import s_count, sh_count
from wilf.exceptions import InvalidMove, SizeMismatch
from wilf.perm import identity, parse_permutation, reversal
from wilf.pyramid import canonical_key, class_members, is_ss_equivalent, pyramidal_sequence
from wilf.shift import (
    RigidShiftMove,
    apply_rigid_shift,
    enumerate_rigid_shifts,
    find_shift_path,
    is_shift_equivalent,
    is_strong_shift_equivalent,
    orbit,
    reversal_invariant,
    shift_class,
    strong_shift_class,
)

from .conftest import all_permutations, permutation_strategy


def test_rigid_shift_example():
    """Test cutting 32415 at height 3 and sliding two columns left"""
    u = parse_permutation("32415")
    assert apply_rigid_shift(u, RigidShiftMove(3, -2)) == parse_permutation("42513")
    assert apply_rigid_shift(identity(3), RigidShiftMove(1, -1)) == parse_permutation("231")


@pytest.mark.parametrize("u, move", [
    ("12345", RigidShiftMove(4, 1)),
    ("12345", RigidShiftMove(5, -1)),
    ("123", RigidShiftMove(1, 1)),
    ("123", RigidShiftMove(4, -1)),
])
def test_invalid_shifts(u, move):
    with pytest.raises(InvalidMove):
        apply_rigid_shift(parse_permutation(u), move)


def test_invalid_moves():
    with pytest.raises(InvalidMove):
        RigidShiftMove(2, 0)
    with pytest.raises(InvalidMove):
        RigidShiftMove(0, 1)


def test_enumerate_rigid_shifts_order():
    moves = [move for move, _ in enumerate_rigid_shifts(parse_permutation("32415"))]
    assert moves == sorted(moves)
    assert RigidShiftMove(3, -2) in moves
    assert enumerate_rigid_shifts(identity(1)) == []


@hypothesis_settings(max_examples=50)
@given(permutation_strategy(min_n=2, max_n=9))
def test_rigid_shifts_preserve_class(u):
    """Test that every rigid shift stays inside the super-strong class"""
    for move, result in enumerate_rigid_shifts(u):
        assert apply_rigid_shift(u, move) == result
        assert is_ss_equivalent(u, result)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7, pytest.param(8, marks=pytest.mark.slow)])
def test_strong_shift_classes_are_ss_classes(n):
    """Test that rigid shifts reach every member of each super-strong class"""
    seen = set()
    for u in all_permutations(n):
        if u in seen:
            continue
        members = class_members(pyramidal_sequence(u))
        assert strong_shift_class(u) == members
        seen |= members
    assert len(seen) == len(all_permutations(n))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 7, pytest.param(8, marks=pytest.mark.slow)])
def test_shift_class_counts(n):
    classes = set()
    seen = set()
    for u in all_permutations(n):
        if u not in seen:
            members = shift_class(u)
            classes.add(members)
            seen |= members
    assert len(classes) == sh_count(n)
    assert sum(len(members) for members in classes) == len(all_permutations(n))


def test_shift_classes_of_s5():
    classes = {shift_class(u) for u in all_permutations(5)}
    assert len(classes) == 21
    assert max(len(members) for members in classes) == 16


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7, pytest.param(8, marks=pytest.mark.slow)])
def test_exactly_two_reversal_invariant_classes(n):
    invariant = {
        canonical_key(pyramidal_sequence(u))
        for u in all_permutations(n)
        if reversal_invariant(u)
    }
    assert len(invariant) == 2
    assert s_count(n) == 2 * (sh_count(n) - 1)


def test_shift_equivalence_needs_reversal():
    """Test a pair joined only through a reversal"""
    u, v = parse_permutation("32415"), parse_permutation("31524")
    assert is_shift_equivalent(u, v)
    assert not is_strong_shift_equivalent(u, v)
    assert is_strong_shift_equivalent(reversal(u), v)
    assert orbit(u, with_reversals=True) == shift_class(u)


def test_equivalence_size_mismatch():
    with pytest.raises(SizeMismatch):
        is_shift_equivalent(identity(3), identity(4))
    with pytest.raises(SizeMismatch):
        is_strong_shift_equivalent(identity(3), identity(4))
    with pytest.raises(SizeMismatch):
        find_shift_path(identity(3), identity(4))


def test_find_shift_path():
    u = parse_permutation("32415")
    path = find_shift_path(u, parse_permutation("42513"))
    assert len(path) == 1
    assert path[0].result == parse_permutation("42513")
    assert find_shift_path(u, u) == []
    assert find_shift_path(u, parse_permutation("31524")) is None


def test_find_shift_path_with_reversal():
    """Test that a witness path replays from its start"""
    u, v = parse_permutation("32415"), parse_permutation("31524")
    path = find_shift_path(u, v, with_reversals=True)
    assert path[-1].result == v
    assert any(step.is_reversal for step in path)
    current = u
    for step in path:
        current = reversal(current) if step.is_reversal else apply_rigid_shift(current, step.move)
        assert current == step.result
    assert path[0].to_json()['result'] == path[0].result.to_json()
