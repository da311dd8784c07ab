from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings

from conftest import bits_to_int, naive_span, naive_xor_closed, naive_gray_word, small_codes
from zgray.additive import AdditiveCode, decomposition_view, schur_closed_chain
from zgray.binary import BinaryLinearCode
from zgray.ring import BitVector, RingVector
from zgray.tables import octacode, octacode_generator


def words_of(code):
    return {tuple(w) for w in code.codeword_array().tolist()}


def test_enumerate_small():
    assert words_of(AdditiveCode(2, [(1, 3)])) == {(0, 0), (1, 3), (2, 2), (3, 1)}


def test_zero_code():
    z = AdditiveCode(3, [], length=4)
    assert words_of(z) == {(0,) * 4}
    assert (0, 0, 0, 0) in z


def test_octacode_size():
    assert len(octacode()) == 256
    assert octacode().type_counts[0] == 4


def test_membership_examples():
    assert (2, 2) in AdditiveCode(2, [(1, 3)])
    assert (0, 0, 0, 0, 0, 0, 2, 2) not in octacode()
    assert (0,) * 8 in octacode()


def test_standard_form_examples():
    code = AdditiveCode(2, [(1, 2), (0, 2)])
    rows, _ = code.standard_form()
    # the echelon form is fully reduced, so the 2 above the order-2 pivot is cleared
    assert rows.tolist() == [[1, 0], [0, 2]] and code.type_counts == (1, 1) and len(code) == 8
    assert words_of(code) == naive_span(2, [(1, 2), (0, 2)])

    code = AdditiveCode(2, [(2, 2), (1, 3)])
    rows, _ = code.standard_form()
    assert rows.tolist() == [[1, 3]] and code.type_counts == (1, 0)
    assert words_of(code) == naive_span(2, [(2, 2), (1, 3)])

    rows, _ = octacode().standard_form()
    assert rows.shape == (4, 8) and octacode().type_counts == (4, 0)
    assert words_of(octacode()) == naive_span(2, octacode_generator())


def test_decomposition_small():
    view = decomposition_view(AdditiveCode(2, [(1, 3)]))
    expect = {(0, 0, 0, 0), (1, 1, 0, 1), (0, 0, 1, 1), (1, 1, 1, 0)}
    assert {w.bits() for w in view.B_words()} == expect


def test_associated_sets_example():
    view = decomposition_view(AdditiveCode(3, [tuple(range(8))]))
    c1 = {(0,) * 8, (0, 1, 0, 1, 0, 1, 0, 1)}
    c2 = c1 | {(0, 0, 1, 1, 0, 0, 1, 1), (0, 1, 1, 0, 0, 1, 1, 0)}
    c3 = c2 | {(0, 0, 0, 0, 1, 1, 1, 1), (0, 0, 1, 0, 1, 1, 0, 1),
               (0, 1, 0, 1, 1, 0, 1, 0), (0, 1, 1, 1, 1, 0, 0, 0)}
    got = [{w.bits() for w in view.associated_words(i)} for i in (1, 2, 3)]
    assert got == [c1, c2, c3]
    assert view.is_nested()
    # the third plane set is not closed under XOR
    assert view.associated_linear() == [True, True, False]


def test_zero_code_decomposition():
    view = decomposition_view(AdditiveCode(2, [], length=3))
    assert view.B == {0} and all(s == {0} for s in view.associated_sets)


def test_schur_chain_examples():
    ok, wit = schur_closed_chain(decomposition_view(AdditiveCode(3, [tuple(range(8))])))
    assert not ok
    i, u, v = wit
    assert i == 2
    assert (u & v).bits() == (0, 0, 0, 1, 0, 0, 0, 1)
    assert schur_closed_chain(decomposition_view(octacode()))[0]
    assert schur_closed_chain(decomposition_view(AdditiveCode(2, [(2, 0, 2)])))[0]


def test_schur_chain_on_linear_codes():
    rep = BinaryLinearCode(4, [0b1111])
    par = BinaryLinearCode(4, [0b0011, 0b0110, 0b1100])
    assert schur_closed_chain([rep, par])[0]
    ok, wit = schur_closed_chain([par, rep])
    assert not ok and wit[0] == 1


def test_exhaustive_membership_z4():
    for gens in ([(1, 2, 3)], [(2, 0, 2, 2), (1, 1, 0, 3)], [(0, 2), (2, 0)], [(1, 1, 1, 1)]):
        code = AdditiveCode(2, gens)
        span = naive_span(2, gens)
        n = len(gens[0])
        allv = list(product(range(4), repeat=n))
        got = code.contains_array(np.array(allv))
        assert {v for v, ok in zip(allv, got) if ok} == span


@settings(max_examples=150, deadline=None)
@given(small_codes())
def test_cardinality_and_enumeration(args):
    L, gens = args
    code = AdditiveCode(L, gens)
    span = naive_span(L, gens)
    assert len(code) == len(span)
    assert words_of(code) == span
    assert len(code) == 2 ** sum((L - e) for e in code.pivot_exponents)


@settings(max_examples=150, deadline=None)
@given(small_codes())
def test_decomposition_invariants(args):
    L, gens = args
    code = AdditiveCode(L, gens)
    view = decomposition_view(code)
    span = naive_span(L, gens)
    n = code.length
    assert len(view.B) == len(span)
    # first plane is C mod 2, always a linear code
    mod2 = {bits_to_int([x & 1 for x in w]) for w in span}
    assert view.associated_sets[0] == mod2
    assert view.associated_linear()[0]
    # every plane set is linear whenever the image is
    if naive_xor_closed({naive_gray_word(w, L) for w in span}) and L >= 2:
        assert all(view.associated_linear())
    for i in range(L):
        assert view.associated_sets[i] == {bits_to_int([(x >> i) & 1 for x in w]) for w in span}
    assert all(len(BitVector(n, b).bits()) == n for b in view.associated_sets[0])


def test_cyclic_check():
    assert AdditiveCode(3, [(1, 1, 1)]).is_cyclic()
    assert not AdditiveCode(3, [(1, 0, 0)]).is_cyclic()
    assert AdditiveCode.full(2, 3).is_cyclic()
