import cmath
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from realchar.cyclotomic import Cyclotomic, is_zero_batch, reduce_batch

CONDUCTORS = [1, 2, 3, 4, 5, 6, 8, 9, 12, 15, 20, 24, 30, 36, 60, 84]


def _mobius(n):
    out, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            out = -out
        p += 1
    return -out if m > 1 else out


@pytest.mark.parametrize("e", CONDUCTORS)
def test_sum_of_primitive_roots_is_mobius(e):
    c = np.zeros(e, dtype=np.int64)
    c[[m for m in range(e) if math.gcd(m, e) == 1]] = 1
    assert Cyclotomic(e, c).to_int() == _mobius(e)


@pytest.mark.parametrize("e", [n for n in CONDUCTORS if n > 1])
def test_all_roots_sum_to_zero(e):
    assert Cyclotomic(e, np.ones(e, dtype=np.int64)).is_zero()


@given(st.sampled_from(CONDUCTORS), st.data())
def test_zero_test_agrees_with_complex_evaluation(e, data):
    c = np.array(data.draw(st.lists(st.integers(-3, 3), min_size=e, max_size=e)), dtype=np.int64)
    x = Cyclotomic(e, c)
    assert x.is_zero() == (abs(x.to_complex()) < 1e-9)


@given(st.sampled_from(CONDUCTORS), st.data())
def test_ring_operations_match_complex(e, data):
    draw = lambda: np.array(data.draw(st.lists(st.integers(-4, 4), min_size=e, max_size=e)))
    x, y = Cyclotomic(e, draw()), Cyclotomic(e, draw())
    assert cmath.isclose((x * y).to_complex(), x.to_complex() * y.to_complex(), abs_tol=1e-7)
    assert cmath.isclose((x - y).to_complex(), x.to_complex() - y.to_complex(), abs_tol=1e-7)
    assert cmath.isclose(x.conj().to_complex(), x.to_complex().conjugate(), abs_tol=1e-7)
    assert (x * y) == (y * x)
    assert hash(x + y) == hash(y + x)


@given(st.sampled_from([n for n in CONDUCTORS if n > 2]), st.data())
def test_galois_action_is_a_ring_map(e, data):
    units = [j for j in range(1, e) if math.gcd(j, e) == 1]
    j = data.draw(st.sampled_from(units))
    draw = lambda: np.array(data.draw(st.lists(st.integers(-2, 2), min_size=e, max_size=e)))
    x, y = Cyclotomic(e, draw()), Cyclotomic(e, draw())
    assert (x * y).galois(j) == x.galois(j) * y.galois(j)
    assert (x + y).galois(j) == x.galois(j) + y.galois(j)


def test_reality_and_rationality():
    z5 = Cyclotomic.root(5)
    golden = z5 + z5.conj()
    assert golden.is_real() and not golden.is_rational()
    assert not z5.is_real()
    assert (golden * golden + golden).to_int() == 1      # x^2 + x - 1 = 0
    assert Cyclotomic.integer(12, -7).to_int() == -7
    assert str(Cyclotomic.integer(12, 3)) == "3"


def test_batch_reduction_is_linear_and_canonical():
    rng = np.random.default_rng(0)
    A = rng.integers(-5, 5, size=(20, 60))
    B = rng.integers(-5, 5, size=(20, 60))
    assert np.array_equal(reduce_batch(A + B, 60), reduce_batch(A, 60) + reduce_batch(B, 60))
    # adding a vanishing sum does not change the canonical form
    van = np.zeros(60, dtype=np.int64)
    van[::20] = 1                  # 1 + zeta_3 + zeta_3^2
    assert np.array_equal(reduce_batch(A + van, 60), reduce_batch(A, 60))
    assert is_zero_batch(np.stack([van, 2 * van]), 60).all()


def test_conductor_mismatch():
    with pytest.raises(ValueError):
        Cyclotomic.root(5) + Cyclotomic.root(7)
