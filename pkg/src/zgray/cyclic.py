"""Binary cyclic codes through 2-cyclotomic cosets and GF(2^m).

Binary polynomials are Python ints, bit i holding the coefficient of x^i.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from sympy import factorint, isprime, totient

from .additive import AdditiveCode, decomposition_view
from .binary import BinaryLinearCode
from .nested import NestedSpec, nested_code

# fields of degree above this are only built when the large profile is requested
LARGE_DEGREE = 32


# GF(2)[x] arithmetic -------------------------------------------------------------

def pdeg(a: int) -> int:
    return a.bit_length() - 1


def pmul(a: int, b: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def pdivmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("polynomial division by zero")
    q = 0
    db = pdeg(b)
    while a and pdeg(a) >= db:
        s = pdeg(a) - db
        q ^= 1 << s
        a ^= b << s
    return q, a


def pmod(a: int, b: int) -> int:
    return pdivmod(a, b)[1]


def pgcd(a: int, b: int) -> int:
    while b:
        a, b = b, pmod(a, b)
    return a


def pmulmod(a: int, b: int, f: int) -> int:
    m = pdeg(f)
    out = 0
    while b:
        if b & 1:
            out ^= a
        b >>= 1
        a <<= 1
        if (a >> m) & 1:
            a ^= f
    return out


def is_irreducible(f: int) -> bool:
    """Rabin's test: x^(2^m) = x mod f and gcd(x^(2^(m/p)) - x, f) = 1."""
    m = pdeg(f)
    if m < 1:
        return False
    if m == 1:
        return True
    powers = [2 % f]  # x^(2^k) mod f for k = 0..m
    for _ in range(m):
        powers.append(pmulmod(powers[-1], powers[-1], f))
    if powers[m] != powers[0]:
        return False
    return all(pgcd(f, powers[m // p] ^ 2) == 1 for p in factorint(m))


def lowest_irreducible(m: int) -> int:
    """Smallest (as an integer) irreducible polynomial of degree m with constant term 1."""
    f = (1 << m) | 1
    while not is_irreducible(f):
        f += 2
    return f


def poly_str(p: int) -> str:
    if p == 0:
        return "0"
    terms = []
    for i in range(pdeg(p), -1, -1):
        if (p >> i) & 1:
            terms.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
    return "+".join(terms)


def poly_coeffs(p: int) -> str:
    """Ascending-degree coefficient string, e.g. x^4+x^2+x+1 -> '11101'."""
    return "".join(str((p >> i) & 1) for i in range(max(pdeg(p), 0) + 1))


def poly_from_coeffs(s: str) -> int:
    return sum(int(c) << i for i, c in enumerate(s))


# GF(2^m) -----------------------------------------------------------------------------

class GF2mField:
    """GF(2^m) as GF(2)[x] / (modulus), with a verified multiplicative generator."""

    def __init__(self, m: int, modulus: int | None = None):
        if m < 1:
            raise ValueError("m must be >= 1")
        self.m = m
        self.modulus = lowest_irreducible(m) if modulus is None else modulus
        if pdeg(self.modulus) != m or not is_irreducible(self.modulus):
            raise ValueError("modulus must be irreducible of degree m")
        self.order = (1 << m) - 1
        self.order_primes = tuple(sorted(factorint(self.order))) if self.order > 1 else ()
        self.generator = self._find_generator()

    def mul(self, a: int, b: int) -> int:
        return pmulmod(a, b, self.modulus)

    def pow(self, a: int, e: int) -> int:
        out = 1
        while e:
            if e & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            e >>= 1
        return out

    def is_generator(self, g: int) -> bool:
        if g == 0 or self.pow(g, self.order) != 1:
            return False
        return all(self.pow(g, self.order // p) != 1 for p in self.order_primes)

    def _find_generator(self) -> int:
        for g in range(1, 1 << self.m):
            if self.is_generator(g):
                return g
        raise AssertionError("no generator found; modulus is not irreducible")

    def __repr__(self):
        return f"GF2mField(m={self.m}, modulus={poly_str(self.modulus)})"


def multiplicative_order(a: int, n: int) -> int:
    if n == 1:
        return 1
    k, x = 1, a % n
    while x != 1:
        x = (x * a) % n
        k += 1
        if k > n:
            raise ValueError(f"{a} is not invertible mod {n}")
    return k


def build_field_for(n: int, large: bool = False) -> tuple[GF2mField, int]:
    """The splitting field of x^n - 1 and a root of unity of exact order n."""
    if n < 1 or n % 2 == 0:
        raise ValueError("n must be odd and positive")
    m = multiplicative_order(2, n)
    if m > LARGE_DEGREE and not large:
        raise ValueError(f"GF(2^{m}) needs the large profile (large=True)")
    f = GF2mField(m)
    beta = f.pow(f.generator, f.order // n)
    if f.pow(beta, n) != 1 or any(f.pow(beta, n // p) == 1 for p in factorint(n)):
        raise AssertionError("beta does not have exact order n")
    return f, beta


# cyclotomic cosets ------------------------------------------------------------------

@dataclass(frozen=True)
class CosetStructure:
    n: int
    cosets: dict  # minimal representative -> sorted tuple of members

    @cached_property
    def representative(self) -> tuple[int, ...]:
        rep = [0] * self.n
        for r, members in self.cosets.items():
            for x in members:
                rep[x] = r
        return tuple(rep)

    @property
    def representatives(self) -> tuple[int, ...]:
        return tuple(sorted(self.cosets))

    def coset(self, a: int) -> tuple[int, ...]:
        return self.cosets[self.representative[a % self.n]]

    def is_union(self, I: Iterable[int]) -> bool:
        s = set(I)
        return all(set(self.coset(a)) <= s for a in s)

    def union(self, reps: Iterable[int]) -> frozenset:
        return frozenset(x for r in reps for x in self.coset(r))

    def reps_in(self, I: Iterable[int]) -> tuple[int, ...]:
        return tuple(sorted({self.representative[a] for a in I}))

    def all_unions(self) -> list[frozenset]:
        reps = self.representatives
        return [self.union(r for k, r in enumerate(reps) if (mask >> k) & 1) for mask in range(1 << len(reps))]


def cyclotomic_cosets(n: int) -> CosetStructure:
    if n < 1 or n % 2 == 0:
        raise ValueError("n must be odd and positive")
    seen = set()
    cosets = {}
    for a in range(n):
        if a in seen:
            continue
        orbit, x = [], a
        while x not in orbit:
            orbit.append(x)
            x = (2 * x) % n
        seen.update(orbit)
        cosets[a] = tuple(sorted(orbit))
    return CosetStructure(n, cosets)


def minimal_polynomial(a: int, structure: CosetStructure, field_: GF2mField, beta: int) -> int:
    """prod over i in the coset of a of (x - beta^i), as a binary polynomial."""
    coeffs = [1]  # ascending, over GF(2^m)
    for i in structure.coset(a):
        r = field_.pow(beta, i)
        new = [0] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            new[k + 1] ^= c
            new[k] ^= field_.mul(r, c)
        coeffs = new
    if any(c not in (0, 1) for c in coeffs):
        raise AssertionError(f"minimal polynomial of coset {a} has coefficients outside GF(2)")
    return sum(c << k for k, c in enumerate(coeffs))


# cyclic codes -----------------------------------------------------------------------

def cyclic_shift_word(x: int, n: int, s: int = 1) -> int:
    """Coordinate j moves to j + s (mod n)."""
    s %= n
    mask = (1 << n) - 1
    return ((x << s) | (x >> (n - s))) & mask


@dataclass(frozen=True)
class CyclicCodeSpec:
    n: int
    I: frozenset
    generator: int

    @property
    def defining_set(self) -> frozenset:
        return frozenset(range(self.n)) - self.I

    @property
    def degree(self) -> int:
        return pdeg(self.generator)

    @property
    def dimension(self) -> int:
        return self.n - self.degree

    def to_binary_code(self) -> BinaryLinearCode:
        return BinaryLinearCode(self.n, (self.generator << i for i in range(self.dimension)))

    def pretty(self) -> str:
        return poly_str(self.generator)


class CyclicContext:
    """Cosets, field, root of unity and cached minimal polynomials for one length."""

    def __init__(self, n: int, large: bool = False):
        self.n = n
        self.structure = cyclotomic_cosets(n)
        self.field, self.beta = build_field_for(n, large=large)
        self._minpoly: dict[int, int] = {}

    def minimal_polynomial(self, a: int) -> int:
        r = self.structure.representative[a % self.n]
        if r not in self._minpoly:
            self._minpoly[r] = minimal_polynomial(r, self.structure, self.field, self.beta)
        return self._minpoly[r]

    def code_from_I(self, I: Iterable[int]) -> CyclicCodeSpec:
        return code_from_I(I, self)

    def chain(self, I_1: Iterable[int], L: int) -> list[CyclicCodeSpec]:
        specs = [self.code_from_I(I_1)]
        for _ in range(L - 1):
            specs.append(square_cyclic(specs[-1], self))
        return specs


def code_from_I(I: Iterable[int], ctx: CyclicContext) -> CyclicCodeSpec:
    """g = product of the minimal polynomials of the cosets outside I."""
    I = frozenset(a % ctx.n for a in I)
    st = ctx.structure
    if not st.is_union(I):
        raise ValueError("I is not a union of cyclotomic cosets")
    g = 1
    for r in st.representatives:
        if r not in I:
            g = pmul(g, ctx.minimal_polynomial(r))
    if pdeg(g) != ctx.n - len(I):
        raise AssertionError("generator degree does not match n - |I|")
    return CyclicCodeSpec(ctx.n, I, g)


def square_defining(I: Iterable[int], n: int) -> frozenset:
    I = list(set(I))
    return frozenset((a + b) % n for a in I for b in I)


def square_cyclic(spec: CyclicCodeSpec, ctx: CyclicContext) -> CyclicCodeSpec:
    return code_from_I(square_defining(spec.I, spec.n), ctx)


def doubling_chain(I_1: Iterable[int], n: int, steps: int) -> list[frozenset]:
    chain = [frozenset(a % n for a in I_1)]
    for _ in range(steps):
        chain.append(square_defining(chain[-1], n))
    return chain


def stabilization_level(I_1: Iterable[int], n: int, max_level: int | None = None) -> int:
    """Smallest k >= 1 with I_k + I_k = I_k, where I_{k+1} = I_k + I_k.

    Doubling never shrinks a nonempty set, so the chain is eventually
    constant; ``max_level`` caps the search.
    """
    cur = frozenset(a % n for a in I_1)
    limit = max_level if max_level is not None else n + 1
    for k in range(1, limit + 1):
        nxt = square_defining(cur, n)
        if nxt == cur:
            return k
        cur = nxt
    raise ValueError(f"chain did not stabilize within {limit} levels")


def _prime_power(n: int) -> tuple[int, int]:
    f = factorint(n)
    if len(f) != 1:
        raise ValueError(f"{n} is not a prime power")
    (p, m), = f.items()
    return p, m


def primitive_root_2_check(p: int, m: int | None = None) -> bool:
    """Is 2 a primitive root mod p and mod p^2 (hence mod every p^a)?"""
    if p % 2 == 0 or not isprime(p):
        raise ValueError("p must be an odd prime")
    ok = multiplicative_order(2, p) == p - 1 and multiplicative_order(2, p * p) == p * (p - 1)
    if ok and m is not None and m >= 1:
        n = p ** m
        if multiplicative_order(2, n) != totient(n):
            raise AssertionError(f"2 certified primitive mod {p}^2 but not mod {n}")
    return ok


def coset_sum_laws(n: int) -> dict[str, bool]:
    """Explicit set-arithmetic check of the coset sum laws for n = p^m with 2 primitive.

    ``doubling``: C_{p^i} + C_{p^i} = {0} u C_{p^i} u ... u C_{p^(m-1)}
    ``absorb``:   C_{p^i} + C_{p^j} = C_{p^i} for i < j
    ``union``:    (C_{p^i} u C_{p^j}) doubled, and (C_0 u C_{p^i}) doubled, both
                  equal C_{p^i} + C_{p^i}
    """
    p, m = _prime_power(n)
    if p == 2 or multiplicative_order(2, n) != totient(n):
        raise ValueError("2 must be a primitive root modulo n = p^m, p odd")
    st = cyclotomic_cosets(n)
    C = [frozenset(st.coset(p ** i)) for i in range(m)]

    def plus(A, B):
        return frozenset((a + b) % n for a in A for b in B)

    def tail(i):
        return frozenset({0}).union(*C[i:])

    report = {
        "sizes": all(len(C[i]) == totient(p ** (m - i)) for i in range(m)),
        "doubling": all(plus(C[i], C[i]) == tail(i) for i in range(m)),
        "absorb": all(plus(C[i], C[j]) == C[i] for i in range(m) for j in range(i + 1, m)),
    }
    union_ok = True
    for i in range(m):
        two = plus(C[i], C[i])
        u0 = C[i] | {0}
        union_ok &= square_defining(u0, n) == two
        for j in range(i + 1, m):
            u = C[i] | C[j]
            union_ok &= square_defining(u, n) == two
    report["union"] = union_ok
    return report


# nested cyclic construction ------------------------------------------------------------

def cyclic_nested(I_1: Iterable[int], L: int, ctx: CyclicContext, **kw) -> AdditiveCode:
    """C_1 + 2 C_2 + ... with C_k = C_{k-1}^2, via doubling of defining sets."""
    specs = ctx.chain(I_1, L)
    layers = NestedSpec(tuple(s.to_binary_code() for s in specs))
    return nested_code(layers, **kw)


def associated_codes_cyclic_check(code: AdditiveCode) -> bool:
    """Are all associated codes of a cyclic additive code shift-closed?"""
    if not code.is_cyclic():
        raise ValueError("code is not cyclic")
    n = code.length
    view = decomposition_view(code)
    return all({cyclic_shift_word(x, n) for x in s} == s for s in view.associated_sets)
