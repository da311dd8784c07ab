"""Shared oracles and strategies.

The oracles here are deliberately naive pure-Python implementations that
share no code with the package (no numpy, no echelon forms).
"""

from itertools import product

import pytest
from hypothesis import strategies as st


def naive_span(L, gens, n=None):
    """Closure of {0} under adding generators, as a set of tuples."""
    q = 1 << L
    gens = [tuple(x % q for x in g) for g in gens]
    if n is None:
        n = len(gens[0])
    zero = (0,) * n
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                s = tuple((a + b) % q for a, b in zip(w, g))
                if s not in seen:
                    seen.add(s)
                    nxt.append(s)
        frontier = nxt
    return seen


def naive_gray_symbol(v, L):
    """Gray image of one symbol straight from the Boolean-function form:
    coordinate y in Z_2^(L-1) (big-endian) gets u_L + sum_i u_i * y_i."""
    bits = [(v >> i) & 1 for i in range(L)]
    out = []
    for y in product((0, 1), repeat=L - 1):
        b = bits[L - 1]
        for i in range(L - 1):
            b ^= bits[i] & y[i]
        out.append(b)
    return tuple(out)


def naive_gray_word(word, L):
    out = ()
    for v in word:
        out += naive_gray_symbol(v, L)
    return out


def naive_xor_closed(words):
    s = set(words)
    n = len(next(iter(s)))
    if (0,) * n not in s:
        return False
    return all(tuple(a ^ b for a, b in zip(x, y)) in s for x in s for y in s)


def bits_to_int(bits):
    return sum(b << j for j, b in enumerate(bits))


@st.composite
def small_codes(draw, levels=(2, 3, 4), max_n=4, max_gens=2):
    L = draw(st.sampled_from(levels))
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(1, max_gens))
    q = 1 << L
    gens = draw(st.lists(st.tuples(*[st.integers(0, q - 1)] * n), min_size=k, max_size=k))
    return L, gens


@pytest.fixture(scope="session")
def octacode_words():
    from zgray.tables import octacode_generator
    return naive_span(2, octacode_generator())
