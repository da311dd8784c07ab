"""Nested construction C_1 + 2 C_2 + ... + 2^(L-1) C_L and Reed-Muller chains."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Sequence

from .additive import AdditiveCode
from .additive import schur_closed_chain
from .binary import BinaryLinearCode


class ChainNotClosed(ValueError):
    """The layer codes are not closed under Schur product."""


@dataclass(frozen=True)
class NestedSpec:
    layers: tuple[BinaryLinearCode, ...]

    def __post_init__(self):
        layers = tuple(self.layers)
        object.__setattr__(self, "layers", layers)
        if not layers:
            raise ValueError("need at least one layer")
        if len({c.length for c in layers}) != 1:
            raise ValueError("layers have different lengths")
        ok, wit = schur_closed_chain(layers)
        if not ok:
            i, u, v = wit
            raise ChainNotClosed(f"layer {i} product {u} o {v} not in layer {i + 1}")

    @property
    def level(self) -> int:
        return len(self.layers)

    @property
    def length(self) -> int:
        return self.layers[0].length


def nested_code(spec: NestedSpec, **kw) -> AdditiveCode:
    """Generators ``2^(i-1) g`` for every basis vector g of layer i."""
    n = spec.length
    gens = []
    for i, layer in enumerate(spec.layers):
        for b in layer.basis_ints:
            gens.append(tuple(((b >> j) & 1) << i for j in range(n)))
    return AdditiveCode(spec.level, gens, length=n, **kw)


# Reed-Muller -------------------------------------------------------------------

def _check_rm(r: int, m: int):
    if m < 0 or not 0 <= r <= m:
        raise ValueError(f"need 0 <= r <= m, got r={r}, m={m}")


def monomial_word(variables: Sequence[int], m: int) -> int:
    """Evaluation of prod x_i (1-based i) at all points of Z_2^m.

    Point p is read big-endian: x_1 is the most significant bit of p.
    """
    mask = 0
    for i in variables:
        mask |= 1 << (m - i)
    word = 0
    for p in range(1 << m):
        if p & mask == mask:
            word |= 1 << p
    return word


def reed_muller(r: int, m: int) -> BinaryLinearCode:
    """R(r, m) spanned by the evaluations of all monomials of degree <= r."""
    _check_rm(r, m)
    gens = [monomial_word(s, m) for d in range(r + 1) for s in combinations(range(1, m + 1), d)]
    return BinaryLinearCode(1 << m, gens)


def reed_muller_recursive(r: int, m: int) -> BinaryLinearCode:
    """R(r, m) from the (u, u + v) construction."""
    _check_rm(r, m)
    n = 1 << m
    if r == 0:
        return BinaryLinearCode(n, [(1 << n) - 1])
    if r == m:
        return BinaryLinearCode.full(n)
    half = n >> 1
    left = reed_muller_recursive(r, m - 1)
    right = reed_muller_recursive(r - 1, m - 1)
    gens = [u | (u << half) for u in left.basis_ints] + [v << half for v in right.basis_ints]
    return BinaryLinearCode(n, gens)


def rm_dimension(r: int, m: int) -> int:
    return sum(comb(m, i) for i in range(r + 1))


def rm_chain(kind: str, param: int) -> NestedSpec:
    """Layer chains of Reed-Muller codes.

    ``low-order``: R(0,m), R(1,m), R(2,m) with m = param >= 2.
    ``even``: R(0,2l), R(2,2l), ..., R(2l-2,2l) with l = param in [1, 3].
    ``odd``: R(1,2l), R(3,2l), ..., R(2l-1,2l), same range of l.
    Raises ChainNotClosed if the chain fails the Schur condition.
    """
    if kind == "low-order":
        if param < 2:
            raise ValueError("low-order chain needs m >= 2")
        return NestedSpec(tuple(reed_muller(r, param) for r in range(3)))
    if kind in ("even", "odd"):
        if not 1 <= param < 4:
            raise ValueError("even/odd chains are only supported for 1 <= l < 4")
        m = 2 * param
        start = 0 if kind == "even" else 1
        return NestedSpec(tuple(reed_muller(r, m) for r in range(start, m, 2)))
    raise ValueError(f"unknown chain kind {kind!r}")
