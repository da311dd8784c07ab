"""Z_{2^L}-additive codes: canonical form, enumeration, membership and
the binary codes induced by bit-plane decomposition."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .binary import DEFAULT_BUDGET, BinaryLinearCode, BudgetExceeded, is_xor_closed
from .ring import BitPlanes, BitVector, RingVector


def _valuation(e: int) -> int:
    return (e & -e).bit_length() - 1


def pack_rows(bits: np.ndarray) -> list[int]:
    """Pack each row of a 0/1 matrix into an int, column j -> bit j."""
    bits = np.asarray(bits, dtype=np.uint8)
    if bits.ndim != 2:
        raise ValueError("expected a 2-d array")
    if bits.shape[1] == 0:
        return [0] * bits.shape[0]
    packed = np.packbits(bits, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def unpack_int(value: int, length: int) -> np.ndarray:
    return np.array([(value >> j) & 1 for j in range(length)], dtype=np.int64)


@dataclass(frozen=True)
class PivotRow:
    column: int
    exponent: int
    row: tuple[int, ...]


class AdditiveCode:
    """Additive subgroup of Z_{2^L}^n spanned by generator rows.

    The canonical form is an echelon basis for the chain ring Z_{2^L}:
    each kept row has a pivot ``2**e`` and every codeword is uniquely
    ``sum(a_i * row_i)`` with ``0 <= a_i < 2**(L - e_i)``.
    """

    def __init__(self, level: int, generators: Iterable = (), length: int | None = None,
                 budget: int = DEFAULT_BUDGET):
        if level < 1:
            raise ValueError("level must be >= 1")
        self.level = level
        self.modulus = 1 << level
        self.budget = budget
        gens = []
        for g in generators:
            if isinstance(g, RingVector):
                if g.level != level:
                    raise ValueError("generator level mismatch")
                g = g.entries
            gens.append(tuple(int(x) % self.modulus for x in g))
        if length is None:
            if not gens:
                raise ValueError("length is required when there are no generators")
            length = len(gens[0])
        if any(len(g) != length for g in gens):
            raise ValueError("generators have different lengths")
        if length < 1:
            raise ValueError("length must be >= 1")
        self.length = length
        self.generators = tuple(gens)
        self._pivots = self._echelon()
        self._words: np.ndarray | None = None

    @classmethod
    def from_matrix(cls, level: int, matrix, **kw) -> "AdditiveCode":
        m = np.asarray(matrix, dtype=np.int64)
        if m.ndim == 1:
            m = m[None, :]
        return cls(level, [tuple(r) for r in m.tolist()], length=m.shape[1], **kw)

    @classmethod
    def full(cls, level: int, length: int) -> "AdditiveCode":
        eye = [tuple(int(i == j) for j in range(length)) for i in range(length)]
        return cls(level, eye, length=length)

    def _echelon(self) -> tuple[PivotRow, ...]:
        q, n = self.modulus, self.length
        work = [list(g) for g in self.generators if any(g)]
        done: list[list] = []
        used: set[int] = set()
        while work:
            best = None
            for c in range(n):
                if c in used:
                    continue
                for ri, row in enumerate(work):
                    if row[c]:
                        key = (_valuation(row[c]), c, ri)
                        if best is None or key < best:
                            best = key
            if best is None:
                break
            e, c, ri = best
            row = work.pop(ri)
            inv = pow(row[c] >> e, -1, q)
            row = [(x * inv) % q for x in row]
            for other in work:
                if other[c]:
                    t = other[c] >> e
                    for j in range(n):
                        other[j] = (other[j] - t * row[j]) % q
            work = [r for r in work if any(r)]
            used.add(c)
            done.append([c, e, row])
        # back-substitution: reduce entries above each pivot modulo 2**e
        for i, (c, e, row) in enumerate(done):
            for j in range(i):
                upper = done[j][2]
                t = upper[c] >> e
                if t:
                    for k in range(n):
                        upper[k] = (upper[k] - t * row[k]) % q
        return tuple(PivotRow(c, e, tuple(row)) for c, e, row in done)

    # canonical form ---------------------------------------------------

    @property
    def pivots(self) -> tuple[PivotRow, ...]:
        return self._pivots

    @property
    def pivot_exponents(self) -> tuple[int, ...]:
        return tuple(p.exponent for p in self._pivots)

    @property
    def type_counts(self) -> tuple[int, ...]:
        """Number of pivots of each exponent 0..L-1 (k_1, k_2, ... for Z_4)."""
        counts = [0] * self.level
        for e in self.pivot_exponents:
            counts[e] += 1
        return tuple(counts)

    @property
    def log_cardinality(self) -> int:
        return sum(self.level - e for e in self.pivot_exponents)

    def __len__(self):
        return 1 << self.log_cardinality

    @property
    def cardinality(self) -> int:
        return len(self)

    def standard_form(self) -> tuple[np.ndarray, tuple[int, ...]]:
        """Echelon rows with columns permuted so pivots come first.

        Returns ``(rows, perm)`` where column ``j`` of ``rows`` is column
        ``perm[j]`` of the original code.
        """
        piv = [p.column for p in self._pivots]
        perm = tuple(piv + [c for c in range(self.length) if c not in piv])
        rows = np.array([p.row for p in self._pivots], dtype=np.int64).reshape(-1, self.length)
        return rows[:, list(perm)], perm

    def echelon_matrix(self) -> np.ndarray:
        return np.array([p.row for p in self._pivots], dtype=np.int64).reshape(-1, self.length)

    # membership ---------------------------------------------------------

    def contains_array(self, vectors) -> np.ndarray:
        """Vectorised membership test against the canonical form."""
        x = np.array(vectors, dtype=np.int64, copy=True) % self.modulus
        if x.ndim == 1:
            x = x[None, :]
        if x.shape[1] != self.length:
            raise ValueError("vector length mismatch")
        ok = np.ones(x.shape[0], dtype=bool)
        for p in self._pivots:
            col = x[:, p.column]
            ok &= (col & ((1 << p.exponent) - 1)) == 0
            t = col >> p.exponent
            x = (x - t[:, None] * np.array(p.row, dtype=np.int64)[None, :]) % self.modulus
        ok &= ~x.any(axis=1)
        return ok

    def __contains__(self, v) -> bool:
        if isinstance(v, RingVector):
            if v.level != self.level:
                raise ValueError("level mismatch")
            v = v.entries
        if len(v) != self.length:
            raise ValueError("vector length mismatch")
        return bool(self.contains_array([list(v)])[0])

    def contains(self, v) -> bool:
        return v in self

    # enumeration --------------------------------------------------------

    def codeword_array(self) -> np.ndarray:
        """All codewords as a (|C|, n) array in lexicographic order."""
        if self._words is None:
            if len(self) > self.budget:
                raise BudgetExceeded(f"|C| = {len(self)} exceeds budget {self.budget}")
            q = self.modulus
            words = np.zeros((1, self.length), dtype=np.int64)
            for p in self._pivots:
                mult = np.arange(1 << (self.level - p.exponent), dtype=np.int64)
                row = np.array(p.row, dtype=np.int64)
                words = (words[:, None, :] + mult[None, :, None] * row[None, None, :]) % q
                words = words.reshape(-1, self.length)
            order = np.lexsort(words.T[::-1])
            words = words[order]
            words.setflags(write=False)
            self._words = words
        return self._words

    def enumerate(self) -> list[RingVector]:
        return [RingVector(self.level, w) for w in self.codeword_array().tolist()]

    def same_code(self, other: "AdditiveCode") -> bool:
        if (self.level, self.length, len(self)) != (other.level, other.length, len(other)):
            return False
        return all(p.row in other for p in self._pivots)

    def is_cyclic(self) -> bool:
        """Closed under the cyclic shift (checked on the echelon rows)."""
        return all(p.row[-1:] + p.row[:-1] in self for p in self._pivots)

    def __repr__(self):
        return f"AdditiveCode[L={self.level}, n={self.length}, |C|=2^{self.log_cardinality}]"


# decomposition -------------------------------------------------------------

def planes_of(words: np.ndarray, level: int) -> list[list[int]]:
    """For each level i, the packed plane u_i of every word."""
    return [pack_rows((words >> i) & 1) for i in range(level)]


@dataclass
class DecompositionView:
    """Decomposition code B and associated codes C_1..C_L of a code.

    ``associated_sets`` are the raw plane sets; ``associated`` are their
    linear spans.  C_1 (reduction mod 2) is always linear, higher planes
    need not be; every set is linear whenever the Gray image is.
    """

    source: AdditiveCode
    planes: list[list[int]]
    B: set[int]
    associated_sets: list[set[int]]
    associated: list[BinaryLinearCode]

    @property
    def level(self) -> int:
        return self.source.level

    @property
    def length(self) -> int:
        return self.source.length

    def b_vector(self, planes: Sequence[int]) -> int:
        n = self.length
        return sum(p << (i * n) for i, p in enumerate(planes))

    def B_words(self) -> list[BitVector]:
        nl = self.length * self.level
        return [BitVector(nl, b) for b in sorted(self.B)]

    def associated_words(self, i: int) -> list[BitVector]:
        """Sorted members of C_i (1-based level)."""
        return [BitVector(self.length, v) for v in sorted(self.associated_sets[i - 1])]

    def associated_linear(self) -> list[bool]:
        return [len(s) == len(c) for s, c in zip(self.associated_sets, self.associated)]

    def is_nested(self) -> bool:
        return all(a <= b for a, b in zip(self.associated_sets, self.associated_sets[1:]))

    def B_is_linear(self) -> bool:
        return is_xor_closed(self.B)


def decomposition_view(code: AdditiveCode) -> DecompositionView:
    words = code.codeword_array()
    planes = planes_of(words, code.level)
    n = code.length
    B = set()
    for k in range(words.shape[0]):
        B.add(sum(planes[i][k] << (i * n) for i in range(code.level)))
    if len(B) != len(code):
        raise AssertionError("decomposition is not injective")
    sets = [set(p) for p in planes]
    codes = [BinaryLinearCode(n, s) for s in sets]
    if len(codes[0]) != len(sets[0]):
        raise AssertionError("C_1 = C mod 2 must be linear")
    return DecompositionView(code, planes, B, sets, codes)


def _first_failing_pair(words: Sequence[int], target) -> tuple[int, int] | None:
    for a in range(len(words)):
        for b in range(a, len(words)):
            if (words[a] & words[b]) not in target:
                return words[a], words[b]
    return None


def schur_level_witness(view: "DecompositionView", i: int) -> tuple[int, int] | None:
    """First pair (u, v) of C_i with u o v outside C_{i+1} (1-based i), or None.

    Basis pairs are tried first when C_i is linear; if C_i or C_{i+1} is
    not XOR-closed all pairs of the raw set C_i are scanned.
    """
    lin = view.associated_linear()
    nxt = view.associated_sets[i]
    wit = None
    if lin[i - 1]:
        wit = _first_failing_pair(view.associated[i - 1].basis_ints, nxt)
    if wit is None and not (lin[i - 1] and lin[i]):
        wit = _first_failing_pair(sorted(view.associated_sets[i - 1]), nxt)
    return wit


def schur_chain_levels(view: "DecompositionView") -> list[bool]:
    """Closure flag of C_i o C_i in C_{i+1} for i = 1..L-1."""
    return [schur_level_witness(view, i) is None for i in range(1, view.level)]


def schur_closed_chain(view_or_codes) -> tuple[bool, tuple[int, BitVector, BitVector] | None]:
    """Check ``C_i o C_i subset C_{i+1}`` for every level.

    For linear codes only basis pairs are tested, which suffices by
    bilinearity of the Schur product.  A DecompositionView is checked on
    its raw plane sets (see schur_level_witness).  The witness is
    ``(i, u, v)`` for the first failing level and pair.
    """
    if isinstance(view_or_codes, DecompositionView):
        n = view_or_codes.length
        for i in range(1, view_or_codes.level):
            wit = schur_level_witness(view_or_codes, i)
            if wit is not None:
                return False, (i, BitVector(n, wit[0]), BitVector(n, wit[1]))
        return True, None
    codes = list(view_or_codes)
    for i in range(len(codes) - 1):
        wit = _first_failing_pair(codes[i].basis_ints, codes[i + 1])
        if wit is not None:
            n = codes[i].length
            return False, (i + 1, BitVector(n, wit[0]), BitVector(n, wit[1]))
    return True, None
