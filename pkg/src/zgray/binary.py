"""Binary linear codes over packed ints."""

from __future__ import annotations

from typing import Iterable, Iterator

from .ring import BitVector

DEFAULT_BUDGET = 1 << 24


class BudgetExceeded(RuntimeError):
    """Raised when an enumeration would exceed the configured budget."""


def _as_int(v) -> int:
    if isinstance(v, BitVector):
        return v.value
    if isinstance(v, int):
        return v
    return BitVector.from_bits(v).value


def echelon(vectors: Iterable[int]) -> dict[int, int]:
    """Reduced row echelon form keyed by pivot bit.

    The pivot of a row is its lowest set bit; every pivot bit is cleared
    from all other rows.
    """
    rows: dict[int, int] = {}
    for v in vectors:
        for p, r in rows.items():
            if (v >> p) & 1:
                v ^= r
        if not v:
            continue
        p = (v & -v).bit_length() - 1
        for q in list(rows):
            if (rows[q] >> p) & 1:
                rows[q] ^= v
        rows[p] = v
    return rows


def rank(vectors: Iterable[int]) -> int:
    return len(echelon(_as_int(v) for v in vectors))


def span_ints(basis: list[int]) -> Iterator[int]:
    """All 2^k combinations of ``basis``, in Gray-code order."""
    v = 0
    yield v
    for i in range(1, 1 << len(basis)):
        # flip the basis vector indexed by the lowest set bit of i
        v ^= basis[(i & -i).bit_length() - 1]
        yield v


class BinaryLinearCode:
    """A subspace of GF(2)^n kept as a reduced echelon basis."""

    def __init__(self, length: int, generators: Iterable = ()):
        self.length = length
        mask = (1 << length) - 1
        gens = []
        for g in generators:
            g = _as_int(g)
            if g & ~mask:
                raise ValueError("generator longer than the code length")
            gens.append(g)
        self._rows = echelon(gens)
        self._basis = tuple(self._rows[p] for p in sorted(self._rows))

    @classmethod
    def full(cls, length: int) -> "BinaryLinearCode":
        return cls(length, (1 << j for j in range(length)))

    @classmethod
    def zero(cls, length: int) -> "BinaryLinearCode":
        return cls(length)

    @property
    def dimension(self) -> int:
        return len(self._basis)

    @property
    def basis_ints(self) -> tuple[int, ...]:
        return self._basis

    @property
    def basis(self) -> tuple[BitVector, ...]:
        return tuple(BitVector(self.length, b) for b in self._basis)

    def __len__(self):
        return 1 << self.dimension

    def reduce(self, x) -> int:
        x = _as_int(x)
        for p, r in self._rows.items():
            if (x >> p) & 1:
                x ^= r
        return x

    def __contains__(self, x) -> bool:
        return self.reduce(x) == 0

    def issubset(self, other: "BinaryLinearCode") -> bool:
        return all(b in other for b in self._basis)

    def __le__(self, other):
        return self.issubset(other)

    def __eq__(self, other):
        if not isinstance(other, BinaryLinearCode):
            return NotImplemented
        return self.length == other.length and self._basis == other._basis

    def __hash__(self):
        return hash((self.length, self._basis))

    def codeword_ints(self, budget: int = DEFAULT_BUDGET) -> Iterator[int]:
        if len(self) > budget:
            raise BudgetExceeded(f"{len(self)} codewords exceed budget {budget}")
        return span_ints(list(self._basis))

    def codewords(self, budget: int = DEFAULT_BUDGET) -> list[BitVector]:
        return [BitVector(self.length, v) for v in sorted(self.codeword_ints(budget))]

    def square(self) -> "BinaryLinearCode":
        """Span of all pairwise Schur products of basis vectors."""
        b = self._basis
        prods = (b[i] & b[j] for i in range(len(b)) for j in range(i, len(b)))
        return BinaryLinearCode(self.length, prods)

    def __repr__(self):
        return f"BinaryLinearCode[n={self.length}, k={self.dimension}]"


def is_xor_closed(words: Iterable[int]) -> bool:
    """True iff the set contains 0 and is closed under XOR.

    A set S containing 0 is closed exactly when |S| = 2^rank(S), since S
    always sits inside its own span.
    """
    s = set(words)
    if 0 not in s:
        return False
    size = len(s)
    if size & (size - 1):
        return False
    return 1 << rank(s) == size
