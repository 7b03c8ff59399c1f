from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclads.core import (
    DisplacementVector,
    Permutation,
    base_dv,
    c_min,
    crossing_number,
    inversion_number,
    is_optimal_dv,
    is_valid_dv,
    optimal_dv,
    wrap_position,
)


def test_wrap_position():
    assert wrap_position(5, 8) == 5
    assert wrap_position(0, 8) == 8
    assert wrap_position(10, 8) == 2
    with pytest.raises(ValueError):
        wrap_position(1, 0)


def test_permutation_validation():
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))
    with pytest.raises(ValueError):
        Permutation(())
    p = Permutation((3, 1, 2))
    assert p.position_of(3) == 1 and p.position_of(2) == 3
    assert Permutation.from_json(p.to_json()) == p


def test_vector_validation():
    with pytest.raises(ValueError):
        DisplacementVector((1, 0))
    v = DisplacementVector((2, -1, -1))
    assert DisplacementVector.from_json(v.to_json()) == v


def test_is_valid_dv():
    pi = Permutation((4, 7, 5, 3, 1, 2, 6, 8))
    assert is_valid_dv(pi, DisplacementVector((-4, 4, 1, -3, -2, 1, 3, 0)))
    n = 5
    assert is_valid_dv(Permutation.identity(n), DisplacementVector.zero(n))
    assert is_valid_dv(
        Permutation((4, 2, 6, 1, 5, 3)), DisplacementVector((-3, 0, 3, -3, 0, 3))
    )
    with pytest.raises(ValueError):
        is_valid_dv(Permutation.identity(3), DisplacementVector.zero(4))


def test_crossing_number_examples():
    x = DisplacementVector((1, -1))
    assert crossing_number(x, 1, 2) == 1
    assert crossing_number(x, 2, 1) == -1
    assert crossing_number(DisplacementVector((-1, 0, 1)), 1, 3) == -1
    with pytest.raises(ValueError):
        crossing_number(x, 1, 1)
    with pytest.raises(ValueError):
        crossing_number(x, 0, 2)


@settings(max_examples=60, derandomize=True)
@given(st.integers(2, 7), st.data())
def test_crossing_antisymmetry(n, data):
    shifts = data.draw(st.lists(st.integers(-6, 6), min_size=n, max_size=n))
    total = sum(shifts)
    shifts[0] -= total
    x = DisplacementVector(tuple(shifts))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                assert crossing_number(x, i, j) == -crossing_number(x, j, i)


def test_inversion_number_examples():
    assert inversion_number(DisplacementVector.zero(6)) == 0
    ten_line = DisplacementVector((-1, -3, 5, 3, 1, -1, -3, -5, 3, 1))
    assert inversion_number(ten_line) == 21
    assert inversion_number(DisplacementVector((2, 0, -2, 0))) == 3


def test_c_min_examples():
    assert c_min(DisplacementVector((3, 3, 3, 3, -4, -4, -4))) == 3
    assert c_min(DisplacementVector((4, 4, 4, -3, -3, -3, -3))) == 3
    assert c_min(DisplacementVector((4, 4, 4, 4, -4, -4, -4, -4))) == 4
    assert c_min(DisplacementVector.zero(4)) == 0


def test_c_min_bound():
    # n * c_min(x) <= 2 * inv(x)
    for entries in [(3, 3, 3, 3, -4, -4, -4), (-1, -3, 5, 3, 1, -1, -3, -5, 3, 1)]:
        x = DisplacementVector(entries)
        assert x.n * c_min(x) <= 2 * inversion_number(x)


def test_base_dv_examples():
    assert base_dv(Permutation.identity(5)) == DisplacementVector.zero(5)
    assert base_dv(Permutation((2, 1))) == DisplacementVector((-1, 1))
    assert base_dv(Permutation((3, 2, 1, 4))) == DisplacementVector((-2, 0, 2, 0))


def test_base_dv_valid_everywhere():
    for n in range(1, 6):
        for entries in permutations(range(1, n + 1)):
            pi = Permutation(entries)
            assert is_valid_dv(pi, base_dv(pi))


def test_optimal_dv_examples():
    assert optimal_dv(Permutation.identity(4)) == DisplacementVector.zero(4)
    pi = Permutation((4, 7, 5, 3, 1, 2, 6, 8))
    example_vector = DisplacementVector((-4, 4, 1, -3, -2, 1, 3, 0))
    assert inversion_number(optimal_dv(pi)) == inversion_number(example_vector)
    rot = Permutation((5, 6, 7, 8, 1, 2, 3, 4))
    assert inversion_number(optimal_dv(rot)) == 16


def test_optimal_dv_deterministic_and_bounded():
    for entries in permutations(range(1, 6)):
        pi = Permutation(entries)
        x = optimal_dv(pi)
        assert x == optimal_dv(pi)
        assert is_valid_dv(pi, x)
        assert max(x.entries) - min(x.entries) <= pi.n


def test_is_optimal_dv():
    pi = Permutation((4, 2, 6, 1, 5, 3))
    assert is_optimal_dv(pi, DisplacementVector((-3, 0, -3, 3, 0, 3)))
    assert is_optimal_dv(Permutation.identity(3), DisplacementVector.zero(3))
    assert not is_optimal_dv(Permutation.identity(2), DisplacementVector((2, -2)))
    with pytest.raises(ValueError):
        is_optimal_dv(Permutation((2, 1)), DisplacementVector((2, -2)))


@settings(max_examples=40, derandomize=True)
@given(st.integers(2, 6), st.data())
def test_shift_preserves_validity(n, data):
    entries = data.draw(st.permutations(list(range(1, n + 1))))
    pi = Permutation(tuple(entries))
    x = list(base_dv(pi).entries)
    i = data.draw(st.integers(0, n - 1))
    j = data.draw(st.integers(0, n - 1))
    x[i] += n
    x[j] -= n
    assert is_valid_dv(pi, DisplacementVector(tuple(x)))


def test_optimal_vectors_have_spread_at_most_n():
    import random

    from cyclads.oracle import brute_optimal_dvs

    for n in range(1, 6):
        for entries in permutations(range(1, n + 1)):
            for x in brute_optimal_dvs(Permutation(entries)):
                assert max(x.entries) - min(x.entries) <= n
    rng = random.Random(11)
    pool = list(permutations(range(1, 7)))
    for entries in rng.sample(pool, 60):
        for x in brute_optimal_dvs(Permutation(entries)):
            assert max(x.entries) - min(x.entries) <= 6


def test_inv_zero_only_for_identity_zero_vector():
    for n in range(1, 5):
        zero = DisplacementVector.zero(n)
        assert inversion_number(zero) == 0
        assert is_valid_dv(Permutation.identity(n), zero)
    # any nonzero valid vector has crossings
    assert inversion_number(DisplacementVector((1, -1))) == 1
