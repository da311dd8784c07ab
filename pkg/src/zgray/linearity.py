"""Deciding linearity of Gray images of Z_{2^L}-additive codes."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

import numpy as np

from .additive import AdditiveCode, DecompositionView, decomposition_view, pack_rows, schur_closed_chain
from .binary import BinaryLinearCode, is_xor_closed
from .gray import GrayImage, gray, gray_image
from .ring import BitPlanes, BitVector, RingVector


@dataclass
class LinearityVerdict:
    linear: bool
    method: str
    witness: Any = None
    checks: dict = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        return "linear" if self.linear else "nonlinear"


# independent oracle -----------------------------------------------------------

def brute_force_linear(image: GrayImage | Iterable[int]) -> bool:
    """XOR-closure of the image word set (contains 0 and closed)."""
    words = image.words if isinstance(image, GrayImage) else set(image)
    return is_xor_closed(words)


def xor_closed_pairwise(words: Iterable[int]) -> bool:
    """Literal pairwise closure test; quadratic, for small sets."""
    s = set(words)
    if 0 not in s:
        return False
    ws = sorted(s)
    return all((a ^ b) in s for i, a in enumerate(ws) for b in ws[i + 1:])


# criteria ---------------------------------------------------------------------

def replay_witness(code: AdditiveCode, c: Sequence[int], d: Sequence[int]) -> bool:
    """True iff ``2 (c (.) d)`` is NOT in the code (the pair breaks linearity)."""
    if c not in code or d not in code:
        raise ValueError("witness vectors must be codewords")
    prod = [(2 * (a & b)) % code.modulus for a, b in zip(c, d)]
    return prod not in code


def linear_by_decomposition(code: AdditiveCode) -> LinearityVerdict:
    """For every pair c, d test ``2 (c (.) d)`` in C by canonical membership.

    2 (c (.) d) only depends on c and d modulo 2^(L-1), so each pair of
    residues is tested once; the witness is still the lexicographically
    first failing pair of the sorted codeword list.
    """
    words = code.codeword_array()
    q = code.modulus
    low = words & ((q >> 1) - 1)
    uniq, first = np.unique(low, axis=0, return_index=True)
    order = np.argsort(first)
    uniq, first = uniq[order], first[order]
    for a in range(len(uniq)):
        prods = (2 * (uniq[a][None, :] & uniq[a:])) % q
        ok = code.contains_array(prods)
        if not ok.all():
            b = a + int(np.argmin(ok))
            c = RingVector(code.level, words[first[a]])
            d = RingVector(code.level, words[first[b]])
            return LinearityVerdict(False, "decomposition", (c, d), {"R_in_B": False})
    return LinearityVerdict(True, "decomposition", None, {"R_in_B": True})


def r_set(code: AdditiveCode, view: DecompositionView | None = None) -> set[int]:
    """All vectors ``(0, u_1 o v_1, ..., u_{L-1} o v_{L-1})`` over codeword pairs,
    packed plane by plane like the members of B."""
    if view is None:
        view = decomposition_view(code)
    L, n = code.level, code.length
    lows = sorted(set(zip(*view.planes[:L - 1]))) if L > 1 else [()]
    out = set()
    for a, u in enumerate(lows):
        for v in lows[a:]:
            out.add(sum((u[i] & v[i]) << ((i + 1) * n) for i in range(L - 1)))
    return out


def linear_by_schur_sum(code: AdditiveCode, view: DecompositionView | None = None) -> LinearityVerdict:
    """Same criterion phrased on bit planes: every vector
    ``(0, u_1 o v_1, ..., u_{L-1} o v_{L-1})`` must lie in the set B."""
    if view is None:
        view = decomposition_view(code)
    L, n = code.level, code.length
    lows = sorted(set(zip(*view.planes[:L - 1]))) if L > 1 else [()]
    for a, u in enumerate(lows):
        for v in lows[a:]:
            r = 0
            for i in range(L - 1):
                r |= (u[i] & v[i]) << ((i + 1) * n)
            if r not in view.B:
                wit = tuple(BitVector(n, u[i] & v[i]) for i in range(L - 1))
                return LinearityVerdict(False, "schur_sum", wit, {"R_in_B": False})
    return LinearityVerdict(True, "schur_sum", None, {"R_in_B": True})


def nonlinear_by_schur_witness(code: AdditiveCode, view: DecompositionView | None = None):
    """A failing ``(i, u, v)`` with ``u o v`` outside C_{i+1}, or None.

    A witness proves nonlinearity; None is inconclusive.
    """
    if view is None:
        view = decomposition_view(code)
    closed, wit = schur_closed_chain(view)
    return None if closed else wit


def decide(code: AdditiveCode) -> LinearityVerdict:
    """Schur-chain shortcut first, full pair check as fallback."""
    view = decomposition_view(code)
    wit = nonlinear_by_schur_witness(code, view)
    if wit is not None:
        return LinearityVerdict(False, "schur_chain", wit, {"schur_chain": False})
    v = linear_by_decomposition(code)
    v.checks["schur_chain"] = True
    return v


# Z_4 specific -------------------------------------------------------------------

def _z4_matrix(code: AdditiveCode, matrix) -> np.ndarray:
    if code.level != 2:
        raise ValueError("this test is specific to Z_4 (L = 2)")
    if matrix is None:
        return code.echelon_matrix()
    m = np.asarray(matrix, dtype=np.int64) % 4
    return m.reshape(-1, code.length)


def z4_column_condition(code: AdditiveCode, matrix=None) -> bool:
    """No column of the generator matrix has more than one odd entry.

    Sufficient for a linear image; depends on the matrix chosen (the
    echelon form by default).
    """
    m = _z4_matrix(code, matrix)
    return bool(((m % 2).sum(axis=0) <= 1).all()) if m.size else True


def z4_expand_generator(code: AdditiveCode, matrix=None) -> list[BitVector]:
    """Binary generator rows for the Gray image of a code passing the
    column condition: gray(r) and gray(3r) for rows with an odd entry,
    gray(r) otherwise."""
    m = _z4_matrix(code, matrix)
    if not z4_column_condition(code, m):
        raise ValueError("matrix does not satisfy the single-odd-entry column condition")
    out = []
    for row in m.tolist():
        if not any(row):
            continue
        r = RingVector(2, row)
        out.append(gray(r))
        if any(x % 2 for x in row):
            out.append(gray(r.scale(3)))
    return out


def z4_decomposition_basis(code: AdditiveCode) -> list[BitVector]:
    """Basis {(u_1, u_2), (0, u_1)} of a linear decomposition code over Z_4."""
    if code.level != 2:
        raise ValueError("needs L = 2")
    view = decomposition_view(code)
    if not view.B_is_linear():
        raise ValueError("decomposition code is not linear")
    n = code.length
    gamma = []
    for p in code.pivots:
        u1 = sum((x & 1) << j for j, x in enumerate(p.row))
        u2 = sum(((x >> 1) & 1) << j for j, x in enumerate(p.row))
        gamma.append(u1 | (u2 << n))
        if u1:
            gamma.append(u1 << n)
    span = BinaryLinearCode(2 * n, gamma)
    if span.dimension != len(gamma) or len(span) != len(view.B) or not all(b in span for b in view.B):
        raise AssertionError("gamma does not form a basis of B")
    return [BitVector(2 * n, g) for g in gamma]


# s-vectors and L in {2, 3} --------------------------------------------------------

def s_vectors(u: BitPlanes, v: BitPlanes) -> list[BitVector]:
    """Carry vectors s_1..s_{L-1} of the plane-wise sum of u and v.

    s_1 = u_1 o v_1 and s_i = (u_i o v_i) + (u_i + v_i) o s_{i-1}; so
    planes(c + d) = planes(c (+) d) + (0, s_1, ..., s_{L-1}).
    """
    if u.level != v.level or u.length != v.length:
        raise ValueError("shape mismatch")
    if u.level < 2:
        raise ValueError("needs L >= 2")
    n = u.length
    s = []
    prev = 0
    for i in range(u.level - 1):
        a, b = u.planes[i].value, v.planes[i].value
        cur = (a & b) ^ ((a ^ b) & prev)
        s.append(BitVector(n, cur))
        prev = cur
    return s


def s_set_in_B(words: np.ndarray, level: int) -> bool:
    """Is every (0, s_1, ..., s_{L-1}) vector, over all pairs of ``words``, in B?"""
    words = np.asarray(words, dtype=np.int64)
    n = words.shape[1]
    planes = [pack_rows((words >> i) & 1) for i in range(level)]
    B = {sum(planes[i][k] << (i * n) for i in range(level)) for k in range(len(words))}
    rows = list(zip(*planes))
    for a, u in enumerate(rows):
        for v in rows[a:]:
            prev, r = 0, 0
            for i in range(level - 1):
                prev = (u[i] & v[i]) ^ ((u[i] ^ v[i]) & prev)
                r |= prev << ((i + 1) * n)
            if r not in B:
                return False
    return True


def decomposition_linear_iff_gray_linear(code: AdditiveCode) -> tuple[bool, bool]:
    """(B linear, gray image linear); equal for L in {2, 3}."""
    if code.level not in (2, 3):
        raise ValueError("the equivalence is only established for L in {2, 3}")
    b_lin = decomposition_view(code).B_is_linear()
    g_lin = brute_force_linear(gray_image(code))
    if b_lin != g_lin:
        raise AssertionError(f"counterexample to the L={code.level} equivalence: {code.generators}")
    return b_lin, g_lin
