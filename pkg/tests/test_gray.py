import random
from itertools import permutations, product

import pytest
from hypothesis import given, settings

from conftest import naive_gray_symbol, naive_gray_word, naive_span, small_codes
from zgray.additive import AdditiveCode
from zgray.cyclic import CyclicContext, cyclic_nested
from zgray.gray import (GrayTable, TrivialCodeError, build_gray_table, delta_profile, distance_preserved,
                        gray, gray_image, lee_weight, min_hamming_distance, min_hamming_distance_pairwise,
                        min_lee_distance, quasi_cyclic_index_check, weight_formulas)
from zgray.ring import RingVector
from zgray.tables import octacode


def sym(L, v):
    return build_gray_table(L)(v).bits()


def test_table_z4():
    assert [sym(2, v) for v in range(4)] == [(0, 0), (0, 1), (1, 1), (1, 0)]


def test_table_z8_examples():
    assert sym(3, 1) == (0, 0, 1, 1)
    assert sym(3, 5) == (1, 1, 0, 0)


@pytest.mark.parametrize("L", [2, 3, 4, 5])
def test_table_matches_boolean_form(L):
    for v in range(1 << L):
        assert sym(L, v) == naive_gray_symbol(v, L)
    assert sym(L, 0) == (0,) * (1 << (L - 1))


def test_gray_vectors():
    assert gray(RingVector(2, (1, 3))).bits() == (0, 1, 1, 0)
    assert gray(RingVector(3, (0, 0))).weight() == 0
    assert gray(RingVector(3, (1, 0, 7, 0))).weight() == 4


def test_images():
    nr = gray_image(octacode())
    assert len(nr) == 256 and nr.length == 16
    assert len(gray_image(AdditiveCode(3, [(3, 5, 7)]))) == 8
    assert gray_image(AdditiveCode(3, [(3, 5, 7)])).length == 12
    z = gray_image(AdditiveCode(2, [], length=3))
    assert z.words == {0}


def test_lee_weights():
    assert lee_weight(RingVector(3, (1, 0, 7, 0))) == 2
    assert lee_weight(RingVector(3, (0, 0, 2))) == 2
    assert lee_weight(RingVector(4, (0, 0))) == 0


def test_weight_formulas_example():
    v = RingVector(3, (1, 0, 7, 0))
    d = delta_profile(v)
    assert d[0] == 2 and d[4] == 0
    assert weight_formulas(v) == (2, 4)
    assert weight_formulas(RingVector(3, (0, 0, 0))) == (0, 0)


@pytest.mark.parametrize("L,n", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (4, 1)])
def test_weight_formulas_exhaustive(L, n):
    for e in product(range(1 << L), repeat=n):
        v = RingVector(L, e)
        lee = sum(min(x, (1 << L) - x) for x in e)
        ham = sum(naive_gray_word(e, L))
        assert weight_formulas(v) == (lee, ham)
        assert distance_preserved(v) == (lee == ham)


def test_distance_preserved_examples():
    for e in product(range(4), repeat=3):
        assert distance_preserved(RingVector(2, e))
    # delta_1 + delta_7 == delta_3 + delta_5
    assert distance_preserved(RingVector(3, (1, 3, 0, 4)))
    assert distance_preserved(RingVector(3, (7, 5, 2)))
    assert not distance_preserved(RingVector(3, (1, 0, 0)))


def test_min_distances():
    assert (min_lee_distance(octacode()), min_hamming_distance(octacode())) == (6, 6)
    c = AdditiveCode(3, [(3, 5, 7)])
    assert (min_lee_distance(c), min_hamming_distance(c)) == (5, 6)
    c = AdditiveCode(3, [tuple(range(8)), (1,) * 8])
    assert (min_lee_distance(c), min_hamming_distance(c)) == (8, 16)
    with pytest.raises(TrivialCodeError):
        min_lee_distance(AdditiveCode(3, [], length=2))


@settings(max_examples=60, deadline=None)
@given(small_codes(max_n=3))
def test_hamming_distance_vs_pairwise(args):
    L, gens = args
    code = AdditiveCode(L, gens)
    if len(code) < 2:
        return
    image = gray_image(code)
    assert min_hamming_distance(code) == min_hamming_distance_pairwise(image)
    naive = {naive_gray_word(w, L) for w in naive_span(L, gens)}
    assert {w.bits() for w in image.sorted_words()} == naive


@pytest.mark.parametrize("L", [2, 3])
def test_isometry_at_z4_and_column_order(L):
    rng = random.Random(7)
    w = 1 << (L - 1)
    for cols in list(permutations(range(w)))[:6]:
        t = GrayTable(L, cols)
        for v in range(1 << L):
            # a column reordering permutes the image coordinates
            assert sorted(t(v).bits()) == sorted(build_gray_table(L)(v).bits())
        code = AdditiveCode(L, [[rng.randrange(1 << L) for _ in range(3)] for _ in range(2)])
        assert min_hamming_distance(code, t) == min_hamming_distance(code)
    if L == 2:
        for v in range(4):
            assert build_gray_table(2)(v).weight() == min(v, 4 - v)


def test_bad_columns():
    with pytest.raises(ValueError):
        GrayTable(3, (0, 0, 1, 2))
    with pytest.raises(ValueError):
        GrayTable(1)


def test_quasi_cyclic():
    ctx = CyclicContext(7)
    code = cyclic_nested({1, 2, 4}, 3, ctx)
    assert quasi_cyclic_index_check(gray_image(code))
    assert quasi_cyclic_index_check(gray_image(AdditiveCode(2, [], length=4)))
    # <(0,1,...,7)> is not shift-closed: every codeword starts with 0
    assert not quasi_cyclic_index_check(gray_image(AdditiveCode(3, [tuple(range(8))])))
