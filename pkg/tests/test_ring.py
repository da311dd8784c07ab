from itertools import product

import pytest
from hypothesis import given, strategies as st

from zgray.ring import (BitPlanes, BitVector, RingVector, carry_identity_holds, compose, decompose,
                        odot, oplus, schur)


def planes_bits(v):
    return [p.bits() for p in decompose(v).planes]


def test_decompose_example_vector():
    v = RingVector(3, (0, 2, 4, 6, 0, 2, 4, 6))
    assert planes_bits(v) == [(0,) * 8, (0, 1, 0, 1, 0, 1, 0, 1), (0, 0, 1, 1, 0, 0, 1, 1)]


def test_decompose_zero_and_small():
    assert planes_bits(RingVector(2, (0, 0))) == [(0, 0), (0, 0)]
    assert planes_bits(RingVector(2, (1, 3))) == [(1, 1), (0, 1)]


def test_compose_examples():
    assert compose([BitVector.from_bits((1, 1)), BitVector.from_bits((0, 1))]).entries == (1, 3)
    zero = [BitVector.zeros(5)] * 4
    assert compose(zero).entries == (0,) * 5
    planes = [BitVector.from_bits(b) for b in
              ((0, 1, 0, 1, 0, 1, 0, 1), (0, 0, 1, 1, 0, 0, 1, 1), (0, 0, 0, 0, 1, 1, 1, 1))]
    assert compose(planes).entries == tuple(range(8))


def test_xor_and_example():
    a, b = RingVector(2, (1,)), RingVector(2, (3,))
    assert oplus(a, b).entries == (2,)
    assert planes_bits(oplus(a, b)) == [(0,), (1,)]


def test_carry_identity_hand_case():
    v = RingVector(2, (3,))
    assert (v + v).entries == (2,)
    assert carry_identity_holds(v, v)


@pytest.mark.parametrize("L", [2, 3, 4])
def test_carry_identity_exhaustive_pairs(L):
    q = 1 << L
    for a, b in product(range(q), repeat=2):
        assert carry_identity_holds(RingVector(L, (a,)), RingVector(L, (b,)))


def test_schur_example():
    x = BitVector.from_bits((0, 1, 0, 1, 0, 1, 0, 1))
    y = BitVector.from_bits((0, 0, 1, 1, 0, 0, 1, 1))
    assert schur(x, y).bits() == (0, 0, 0, 1, 0, 0, 0, 1)


def test_length_mismatch_rejected():
    with pytest.raises(ValueError):
        RingVector(2, (1, 2)) + RingVector(2, (1,))
    with pytest.raises(ValueError):
        BitVector(3, 1) ^ BitVector(4, 1)
    with pytest.raises(ValueError):
        BitPlanes(2, (BitVector(3, 0), BitVector(2, 0)))


ring_vectors = st.integers(1, 5).flatmap(
    lambda L: st.lists(st.integers(0, (1 << L) - 1), min_size=1, max_size=6).map(lambda e: RingVector(L, e)))


@given(ring_vectors)
def test_roundtrip(v):
    assert compose(decompose(v)) == v


@given(ring_vectors)
def test_self_ops(v):
    assert odot(v, v) == v
    assert oplus(v, v).is_zero()


@given(st.integers(1, 5).flatmap(lambda L: st.integers(1, 5).flatmap(lambda n: st.tuples(
    st.just(L),
    st.lists(st.integers(0, (1 << L) - 1), min_size=n, max_size=n),
    st.lists(st.integers(0, (1 << L) - 1), min_size=n, max_size=n)))))
def test_carry_identity_property(args):
    L, a, b = args
    assert carry_identity_holds(RingVector(L, a), RingVector(L, b))


@given(st.integers(0, 64), st.data())
def test_schur_identities(n, data):
    x = BitVector(n, data.draw(st.integers(0, (1 << n) - 1)))
    assert schur(x, BitVector.ones(n)) == x
    assert schur(x, x) == x
