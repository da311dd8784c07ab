"""Arithmetic over Z_{2^L} and GF(2) vectors.

Bit plane convention: plane 1 is the least significant bit, so a ring
vector is ``sum(2**(i-1) * u_i)`` over its planes ``u_1 .. u_L``.  Binary
vectors are packed into a Python int with coordinate ``j`` (0-indexed)
stored at bit ``j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class BitVector:
    """Binary vector of fixed length, packed into an int."""

    length: int
    value: int = 0

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("length must be non-negative")
        if self.value < 0 or self.value >> self.length:
            raise ValueError("value has bits outside the vector length")

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "BitVector":
        bits = list(bits)
        value = 0
        for j, b in enumerate(bits):
            if b not in (0, 1):
                raise ValueError(f"entry {b!r} is not a bit")
            value |= b << j
        return cls(len(bits), value)

    @classmethod
    def zeros(cls, length: int) -> "BitVector":
        return cls(length, 0)

    @classmethod
    def ones(cls, length: int) -> "BitVector":
        return cls(length, (1 << length) - 1)

    def bits(self) -> tuple[int, ...]:
        return tuple((self.value >> j) & 1 for j in range(self.length))

    def weight(self) -> int:
        return bin(self.value).count("1")

    def _check(self, other: "BitVector"):
        if self.length != other.length:
            raise ValueError(f"length mismatch: {self.length} vs {other.length}")

    def __xor__(self, other: "BitVector") -> "BitVector":
        self._check(other)
        return BitVector(self.length, self.value ^ other.value)

    def __and__(self, other: "BitVector") -> "BitVector":
        self._check(other)
        return BitVector(self.length, self.value & other.value)

    def __len__(self):
        return self.length

    def __iter__(self):
        return iter(self.bits())

    def __repr__(self):
        return "BitVector(" + "".join(map(str, self.bits())) + ")"


@dataclass(frozen=True)
class RingVector:
    """Vector over Z_{2^level}."""

    level: int
    entries: tuple[int, ...]

    def __init__(self, level: int, entries: Iterable[int]):
        entries = tuple(int(e) for e in entries)
        if level < 1:
            raise ValueError("level must be >= 1")
        if not entries:
            raise ValueError("a ring vector needs at least one coordinate")
        q = 1 << level
        for e in entries:
            if not 0 <= e < q:
                raise ValueError(f"entry {e} outside Z_{q}")
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "entries", entries)

    @property
    def modulus(self) -> int:
        return 1 << self.level

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def _check(self, other: "RingVector"):
        if self.level != other.level or len(self) != len(other):
            raise ValueError("ring vectors differ in level or length")

    def __add__(self, other: "RingVector") -> "RingVector":
        self._check(other)
        q = self.modulus
        return RingVector(self.level, ((a + b) % q for a, b in zip(self, other)))

    def __sub__(self, other: "RingVector") -> "RingVector":
        self._check(other)
        q = self.modulus
        return RingVector(self.level, ((a - b) % q for a, b in zip(self, other)))

    def __neg__(self) -> "RingVector":
        q = self.modulus
        return RingVector(self.level, ((-a) % q for a in self))

    def scale(self, a: int) -> "RingVector":
        q = self.modulus
        return RingVector(self.level, ((a * e) % q for e in self))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __repr__(self):
        return f"RingVector(L={self.level}, {self.entries})"


@dataclass(frozen=True)
class BitPlanes:
    """Binary decomposition ``(u_1, ..., u_L)`` of a ring vector."""

    level: int
    planes: tuple[BitVector, ...]

    def __post_init__(self):
        if len(self.planes) != self.level:
            raise ValueError(f"expected {self.level} planes, got {len(self.planes)}")
        lengths = {p.length for p in self.planes}
        if len(lengths) > 1:
            raise ValueError("bit planes have different lengths")

    @property
    def length(self) -> int:
        return self.planes[0].length

    def __getitem__(self, i):
        return self.planes[i]

    def concat(self) -> BitVector:
        """The vector ``(u_1, u_2, ..., u_L)`` of length ``n*L``."""
        n = self.length
        value = 0
        for i, p in enumerate(self.planes):
            value |= p.value << (i * n)
        return BitVector(n * self.level, value)


def ring_vector(level: int, entries: Iterable[int]) -> RingVector:
    return RingVector(level, entries)


def decompose(v: RingVector) -> BitPlanes:
    planes = []
    for i in range(v.level):
        value = 0
        for j, e in enumerate(v.entries):
            value |= ((e >> i) & 1) << j
        planes.append(BitVector(len(v), value))
    return BitPlanes(v.level, tuple(planes))


def compose(p: BitPlanes | Sequence[BitVector]) -> RingVector:
    if not isinstance(p, BitPlanes):
        p = BitPlanes(len(p), tuple(p))
    n = p.length
    entries = [0] * n
    for i, plane in enumerate(p.planes):
        for j in range(n):
            entries[j] |= ((plane.value >> j) & 1) << i
    return RingVector(p.level, entries)


def oplus(v: RingVector, w: RingVector) -> RingVector:
    """Plane-wise XOR; on integers this is bitwise xor."""
    v._check(w)
    return RingVector(v.level, (a ^ b for a, b in zip(v, w)))


def odot(v: RingVector, w: RingVector) -> RingVector:
    """Plane-wise AND; on integers this is bitwise and."""
    v._check(w)
    return RingVector(v.level, (a & b for a, b in zip(v, w)))


def carry_identity_holds(v: RingVector, w: RingVector) -> bool:
    """Check ``v + w == (v (+) w) + 2 (v (.) w)`` in Z_{2^L}^n."""
    v._check(w)
    lhs = v + w
    rhs = oplus(v, w) + odot(v, w).scale(2)
    return lhs == rhs


def schur(x: BitVector, y: BitVector) -> BitVector:
    """Coordinatewise product of two binary vectors."""
    return x & y
