import itertools

import pytest
from hypothesis import strategies as st

from wilf.perm import Permutation, parse_permutation
from wilf.types import Settings


def all_permutations(n):
    return [Permutation(letters) for letters in itertools.permutations(range(1, n + 1))]


def permutation_strategy(min_n=1, max_n=30):
    """Random permutations of [n] for n in the given range"""
    return st.integers(min_value=min_n, max_value=max_n).flatmap(
        lambda n: st.permutations(list(range(1, n + 1))).map(lambda letters: Permutation(tuple(letters)))
    )


words = st.lists(st.integers(min_value=1, max_value=12), max_size=30)


@pytest.fixture
def example_permutation():
    """The running example 592738164"""
    return parse_permutation("592738164")


@pytest.fixture
def example_levels():
    """Its pyramid, Δ_1 first"""
    return (
        (1, 1, 1, 1, 1, 1, 1, 1),
        (1, 1, 1, 1, 1, 2, 1),
        (1, 2, 1, 1, 2, 1),
        (1, 2, 2, 2, 1),
        (1, 2, 2, 2),
        (2, 2, 2),
        (2, 2),
        (4,),
    )


@pytest.fixture
def settings():
    """Defaults without touching hydra or the environment"""
    return Settings(ss_limit=9, shift_limit=7, prefix_limit=9, workers=1)
