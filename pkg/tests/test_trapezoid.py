import pytest

from wilf.counting import a_noninterval, d_count
from wilf.exceptions import (
    InvalidTrapezoid,
    NotAPrefix,
    NotInB,
    OutOfRange,
    RangeViolation,
    SizeTooSmall,
    TooSmall,
)
from wilf.perm import Permutation, identity, parse_permutation, reversal
from wilf.trapezoid import (
    B_set,
    PrefixWord,
    TrapezoidalSequence,
    complement_progression,
    is_in_D,
    is_non_interval,
    is_periodic_set,
    is_periodic_vector,
    phi,
    prefixes_D,
    psi,
    rho,
    theta,
)

from .conftest import all_permutations

RUNNING_PREFIX = PrefixWord((7, 3, 5, 9, 1), 9)
RUNNING_TRAPEZOID = (
    (1, 1, 1, 1, 1, 1, 1, 1),
    (1, 1, 1, 1, 1, 2, 1),
    (1, 2, 1, 1, 2, 1),
    (1, 2, 2, 2, 1),
    (1, 2, 2, 2),
    (2, 2, 2),
)


def letters_of(prefixes):
    return [u.letters for u in prefixes]


def test_periodic_vectors_and_sets():
    assert is_periodic_vector((2, 2, 2))
    assert not is_periodic_vector((1, 2, 2, 2))
    assert is_periodic_vector((7,))
    assert not is_periodic_vector(())
    assert is_periodic_set({2, 4, 6, 8})
    assert not is_periodic_set(set(range(1, 10)) - {7, 3, 5, 9})
    assert is_periodic_set({3, 11})
    with pytest.raises(TooSmall):
        is_periodic_set({1})


def test_small_prefix_sets():
    """Test D_{1,3}, D_{1,n} and D_{2,5}"""
    assert letters_of(prefixes_D(1, 3)) == [(1,), (2,), (3,)]
    assert letters_of(prefixes_D(1, 5)) == [(1,), (5,)]
    assert letters_of(prefixes_D(2, 5)) == [(2, 1), (2, 4), (4, 2), (4, 5)]
    assert letters_of(prefixes_D(2, 4)) == [(2, 1), (2, 3), (2, 4), (3, 1), (3, 2), (3, 4)]


def test_prefix_set_sizes():
    assert len(prefixes_D(5, 10)) == 488
    assert len(prefixes_D(3, 7)) == 14
    assert len(prefixes_D(3, 8)) == 8


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7, 8])
def test_prefix_sets_match_counts(n):
    """Test |D_{i,n}| = d_{i,n} and the lexicographic order"""
    for i in range(1, n - 1):
        prefixes = prefixes_D(i, n)
        assert len(prefixes) == d_count(i, n)
        assert letters_of(prefixes) == sorted(letters_of(prefixes))
        assert all(is_in_D(u.letters, n) for u in prefixes)


def test_prefix_sets_out_of_range():
    with pytest.raises(OutOfRange):
        prefixes_D(0, 5)
    with pytest.raises(OutOfRange):
        prefixes_D(4, 5)
    with pytest.raises(OutOfRange):
        prefixes_D(1, 2)


def test_prefix_word_validation():
    with pytest.raises(OutOfRange):
        PrefixWord((1, 2, 3), 4)
    with pytest.raises(NotAPrefix):
        PrefixWord((2, 2), 5)
    with pytest.raises(NotAPrefix):
        PrefixWord((6,), 5)


def test_complement_progression():
    """Test that every complement is one arithmetic progression"""
    assert complement_progression(RUNNING_PREFIX) == (2, 2)
    for i in range(1, 6):
        for u in prefixes_D(i, 7):
            c, d = complement_progression(u)
            assert u.complement == set(range(c, c + d * len(u.complement), d))


def test_phi_of_running_example():
    p = phi(RUNNING_PREFIX)
    assert p.levels == RUNNING_TRAPEZOID
    assert p.height == 5
    assert psi(p) == RUNNING_PREFIX


def test_phi_of_single_letters():
    """Test the height-one trapezoids, where 1 and n collide"""
    assert phi(PrefixWord((1,), 5)).levels == ((1, 1, 1, 1), (1, 1, 1))
    assert phi(PrefixWord((5,), 5)) == phi(PrefixWord((1,), 5))
    assert psi(phi(PrefixWord((5,), 5))) == PrefixWord((1,), 5)
    assert psi(phi(PrefixWord((2,), 3))) == PrefixWord((2,), 3)


def test_phi_rejects_non_members():
    with pytest.raises(NotAPrefix):
        phi(PrefixWord((2,), 5))
    with pytest.raises(NotAPrefix):
        phi(PrefixWord((2, 1, 3), 6))


def test_trapezoid_validation():
    with pytest.raises(InvalidTrapezoid):
        TrapezoidalSequence(((1, 1, 1), (1, 2)), 4)
    with pytest.raises(InvalidTrapezoid):
        TrapezoidalSequence(((1, 1, 1, 1), (1, 1, 1), (2, 1)), 5)
    with pytest.raises(InvalidTrapezoid):
        TrapezoidalSequence(((1, 1, 1, 1), (1, 1, 1), (1, 1)), 5)


@pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
def test_phi_psi_roundtrip(n):
    """Test psi(phi(u)) = u and phi(psi(p)) = p from height two on"""
    for i in range(2, n - 1):
        images = set()
        for u in prefixes_D(i, n):
            p = phi(u)
            assert p.height == i
            assert psi(p) == u
            assert phi(psi(p)) == p
            images.add(p)
        assert len(images) == d_count(i, n)


@pytest.mark.slow
def test_phi_psi_roundtrip_n9():
    for i in range(2, 8):
        for u in prefixes_D(i, 9):
            assert psi(phi(u)) == u


def test_non_interval():
    assert is_non_interval(parse_permutation("2413"))
    assert not is_non_interval(identity(5))
    assert is_non_interval(parse_permutation("21"))
    assert sum(is_non_interval(u) for u in all_permutations(4)) == 8
    with pytest.raises(SizeTooSmall):
        is_non_interval(identity(1))


@pytest.mark.parametrize("size", [2, 3, 4, 5, 6, 7])
def test_non_interval_counts(size):
    """Test a_n against B_n and its reversal image"""
    assert len(B_set(size)) == a_noninterval(size)
    assert sum(is_non_interval(reversal(b)) for b in B_set(size)) == a_noninterval(size)


def test_rho_examples():
    assert rho(PrefixWord((2, 1), 6)) == parse_permutation("213")
    assert rho(PrefixWord((5, 6), 6)) == parse_permutation("231")
    assert rho(PrefixWord((5, 6), 6), as_noninterval=True) == parse_permutation("132")


def test_theta_examples():
    assert theta(parse_permutation("231"), 6) == PrefixWord((5, 6), 6)
    assert theta(parse_permutation("213"), 6) == PrefixWord((2, 1), 6)


def test_rho_theta_errors():
    """Test the range check k < floor(n/2) and membership errors"""
    with pytest.raises(RangeViolation):
        rho(PrefixWord((2, 1), 5))
    with pytest.raises(RangeViolation):
        theta(parse_permutation("231"), 5)
    with pytest.raises(NotAPrefix):
        rho(PrefixWord((1, 2), 6))
    with pytest.raises(NotInB):
        theta(parse_permutation("123"), 6)


@pytest.mark.parametrize("n", [4, 5, 6, 7, 8, 9])
def test_rho_theta_roundtrip(n):
    for k in range(1, n // 2):
        images = set()
        for u in prefixes_D(k, n):
            b = rho(u)
            assert theta(b, n) == u
            images.add(b)
        assert images == set(B_set(k + 1))
        for b in B_set(k + 1):
            assert rho(theta(b, n)) == b


def test_small_d_rows_are_non_interval_counts():
    """Test d_{k,10} = a_{k+1} for k < 5 through the prefix sets"""
    assert [len(prefixes_D(k, 10)) for k in range(1, 5)] == [2, 2, 8, 44]


def test_is_in_D_rejects_malformed_words():
    assert not is_in_D((1, 1), 5)
    assert not is_in_D((), 5)
    assert not is_in_D((7,), 5)
    assert is_in_D((4, 5), 5)
    assert Permutation((2, 1)) == rho(PrefixWord((6,), 6))
