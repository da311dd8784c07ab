"""Carlet's generalized Gray map and Lee/Hamming weights."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .additive import AdditiveCode, pack_rows
from .binary import is_xor_closed
from .ring import BitVector, RingVector


class TrivialCodeError(ValueError):
    """Distances are undefined for the zero code."""


class GrayTable:
    """Symbol images of the Gray map Z_{2^L} -> Z_2^{2^(L-1)}.

    Column ``j`` of Y is the big-endian (L-1)-bit encoding of
    ``columns[j]`` with row 1 holding the most significant bit; the default
    ``columns = range(2^(L-1))`` gives 1 -> 0011, 5 -> 1100 for L = 3.
    Any other column order yields a coordinate permutation of the images.
    """

    def __init__(self, level: int, columns: Sequence[int] | None = None):
        if level < 2:
            raise ValueError("the generalized Gray map needs L >= 2")
        self.level = level
        self.width = w = 1 << (level - 1)
        if columns is None:
            columns = range(w)
        columns = tuple(int(c) for c in columns)
        if sorted(columns) != list(range(w)):
            raise ValueError("columns of Y must enumerate Z_2^(L-1) exactly once")
        self.columns = columns
        r = level - 1
        # Y[row][j], row 0 is the most significant bit
        self.Y = tuple(tuple((c >> (r - 1 - row)) & 1 for c in columns) for row in range(r))
        images = []
        for v in range(1 << level):
            top = (v >> (level - 1)) & 1
            bits = []
            for j in range(w):
                b = top
                for row in range(r):
                    b ^= ((v >> row) & 1) & self.Y[row][j]
                bits.append(b)
            images.append(bits)
        self.bits = np.array(images, dtype=np.uint8)
        self.images = tuple(BitVector.from_bits(b) for b in images)
        self.symbol_weights = np.array([img.weight() for img in self.images], dtype=np.int64)

    def __call__(self, v: int) -> BitVector:
        return self.images[v]


_tables: dict[int, GrayTable] = {}


def build_gray_table(level: int) -> GrayTable:
    if level not in _tables:
        _tables[level] = GrayTable(level)
    return _tables[level]


def _table_for(level: int, table: GrayTable | None) -> GrayTable:
    if table is None:
        return build_gray_table(level)
    if table.level != level:
        raise ValueError("Gray table level does not match the vector level")
    return table


def gray(v: RingVector, table: GrayTable | None = None) -> BitVector:
    t = _table_for(v.level, table)
    w = t.width
    value = 0
    for k, e in enumerate(v.entries):
        value |= t.images[e].value << (k * w)
    return BitVector(len(v) * w, value)


def gray_words(words: np.ndarray, table: GrayTable) -> list[int]:
    """Packed Gray images of each row of an integer array."""
    words = np.asarray(words, dtype=np.int64)
    bits = table.bits[words]  # (m, n, w)
    return pack_rows(bits.reshape(words.shape[0], -1))


@dataclass
class GrayImage:
    source: AdditiveCode
    table: GrayTable
    length: int
    words: set[int] = field(repr=False)

    def __len__(self):
        return len(self.words)

    def sorted_words(self) -> list[BitVector]:
        return sorted((BitVector(self.length, x) for x in self.words), key=lambda b: b.bits())


def gray_image(code: AdditiveCode, table: GrayTable | None = None) -> GrayImage:
    t = _table_for(code.level, table)
    words = code.codeword_array()
    image = set(gray_words(words, t))
    if len(image) != len(code):
        raise AssertionError("Gray map is not injective on this code")
    return GrayImage(code, t, code.length * t.width, image)


# weights --------------------------------------------------------------------

def lee_weight(v: RingVector) -> int:
    q = v.modulus
    return sum(min(e, q - e) for e in v.entries)


def hamming_weight(x: BitVector) -> int:
    return x.weight()


def delta_profile(v: RingVector) -> tuple[int, ...]:
    counts = [0] * v.modulus
    for e in v.entries:
        counts[e] += 1
    return tuple(counts)


def lee_weight_from_profile(delta: Sequence[int], level: int) -> int:
    n = sum(delta)
    half = 1 << (level - 1)
    q = 1 << level
    tail = sum((i - 1) * (delta[i] + delta[q - i]) for i in range(1, half))
    return n + (half - 1) * delta[half] - delta[0] + tail


def gray_weight_from_profile(delta: Sequence[int], level: int) -> int:
    n = sum(delta)
    half = 1 << (level - 1)
    return (1 << (level - 2)) * (n + delta[half] - delta[0])


def weight_formulas(v: RingVector) -> tuple[int, int]:
    """(Lee weight, Hamming weight of the Gray image) from symbol counts."""
    if v.level < 2:
        raise ValueError("weight formulas need L >= 2")
    d = delta_profile(v)
    return lee_weight_from_profile(d, v.level), gray_weight_from_profile(d, v.level)


def distance_preserved(v: RingVector) -> bool:
    """Symbol-count criterion for ``w_H(gray(v)) == w_Lee(v)``."""
    if v.level < 2:
        raise ValueError("needs L >= 2")
    L = v.level
    d = delta_profile(v)
    n, half, q = len(v), 1 << (L - 1), 1 << L
    lhs = sum((i - 1) * (d[i] + d[q - i]) for i in range(1, half))
    rhs = ((1 << (L - 2)) - 1) * (n - d[half] - d[0])
    return lhs == rhs


def _lee_weights(words: np.ndarray, q: int) -> np.ndarray:
    return np.minimum(words, q - words).sum(axis=1)


def min_lee_distance(code: AdditiveCode) -> int:
    words = code.codeword_array()
    if len(words) < 2:
        raise TrivialCodeError("trivial code {0} has no minimum distance")
    w = _lee_weights(words, code.modulus)
    return int(w[w > 0].min())


def min_hamming_distance(code: AdditiveCode, table: GrayTable | None = None) -> int:
    """d_H of the Gray image, as the least w_H(gray(c)) over c != 0.

    Exact even for a nonlinear image, because d_H(gray(c), gray(d)) equals
    w_H(gray(c - d)) inside an additive code.
    """
    t = _table_for(code.level, table)
    words = code.codeword_array()
    if len(words) < 2:
        raise TrivialCodeError("trivial code {0} has no minimum distance")
    w = t.symbol_weights[words].sum(axis=1)
    nonzero = words.any(axis=1)
    return int(w[nonzero].min())


def min_hamming_distance_pairwise(image: GrayImage) -> int:
    """Brute-force minimum distance over all pairs of image words."""
    words = sorted(image.words)
    if len(words) < 2:
        raise TrivialCodeError("trivial code {0} has no minimum distance")
    best = image.length + 1
    for i, a in enumerate(words):
        for b in words[i + 1:]:
            d = bin(a ^ b).count("1")
            if d < best:
                best = d
    return best


def quasi_cyclic_index_check(image: GrayImage) -> bool:
    """Is the word set invariant under a shift by 2^(L-1) coordinates?"""
    N, s = image.length, image.table.width
    mask = (1 << N) - 1
    shifted = {((x << s) | (x >> (N - s))) & mask for x in image.words}
    return shifted == image.words


def image_is_linear(image: GrayImage) -> bool:
    return is_xor_closed(image.words)
