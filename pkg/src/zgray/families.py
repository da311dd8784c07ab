"""Hadamard, simplex and MacDonald codes over Z_{2^L}."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

import numpy as np

from .additive import AdditiveCode
from .binary import BudgetExceeded, DEFAULT_BUDGET
from .linearity import decide

FAMILIES = ("hadamard", "simplex_alpha", "simplex_beta", "macdonald_alpha", "macdonald_beta")


def _check_level(L: int):
    if L < 2:
        raise ValueError("families are defined for L >= 2")


def _block_row(values: Sequence[int], width: int) -> np.ndarray:
    return np.repeat(np.asarray(values, dtype=np.int64), width)


def hadamard_matrix(ts: Sequence[int]) -> np.ndarray:
    """Generator A^{t_1..t_L} grown from (1) by prepending rows.

    Step i prepends the row (0, 1, ..., 2^(L-i+1) - 1) * 2^(i-1), each value
    over a copy of the current matrix; step 1 runs t_1 - 1 times, then
    steps 2..L run t_i times each.
    """
    ts = [int(t) for t in ts]
    L = len(ts)
    _check_level(L)
    if ts[0] < 1 or any(t < 0 for t in ts):
        raise ValueError("need t_1 >= 1 and t_i >= 0")
    A = np.ones((1, 1), dtype=np.int64)
    for i in range(1, L + 1):
        for _ in range(ts[0] - 1 if i == 1 else ts[i - 1]):
            vals = [j << (i - 1) for j in range(1 << (L - i + 1))]
            top = _block_row(vals, A.shape[1])
            A = np.vstack([top, np.tile(A, len(vals))])
    return A


def simplex_alpha_matrix(k: int, L: int) -> np.ndarray:
    _check_level(L)
    if k < 1:
        raise ValueError("k must be >= 1")
    q = 1 << L
    G = np.arange(q, dtype=np.int64)[None, :]
    for _ in range(k - 1):
        G = np.vstack([_block_row(range(q), G.shape[1]), np.tile(G, q)])
    return G


def simplex_beta_matrix(k: int, L: int) -> np.ndarray:
    _check_level(L)
    if k < 1:
        raise ValueError("k must be >= 1")
    q = 1 << L
    if k == 1:
        return np.ones((1, 1), dtype=np.int64)
    alpha = simplex_alpha_matrix(k - 1, L)
    beta = simplex_beta_matrix(k - 1, L)
    return _beta_step(alpha, [beta] * (q // 2), q)


def _beta_step(alpha: np.ndarray, betas: list[np.ndarray], q: int) -> np.ndarray:
    # top values 1, 0, 2, 4, ..., q-2 over G^alpha, then the beta blocks
    vals = [1] + list(range(0, q - 1, 2))
    blocks = [alpha] + betas
    top = np.concatenate([np.full(b.shape[1], v, dtype=np.int64) for v, b in zip(vals, blocks)])
    return np.vstack([top, np.hstack(blocks)])


def _check_macdonald(k: int, u: int):
    if k < 2 or not 1 <= u <= k - 1:
        raise ValueError("MacDonald codes need k >= 2 and 1 <= u <= k - 1")


def macdonald_alpha_matrix(k: int, u: int, L: int) -> np.ndarray:
    """G_k^alpha without the leading block (0; G_u^alpha), i.e. its first q^u columns."""
    _check_level(L)
    _check_macdonald(k, u)
    q = 1 << L
    G = simplex_alpha_matrix(k, L)
    w = q ** u
    head = G[:, :w]
    if head[: k - u].any() or not np.array_equal(head[k - u:], simplex_alpha_matrix(u, L)):
        raise AssertionError("deleted block is not (0; G_u^alpha)")
    return G[:, w:]


def macdonald_beta_matrix(k: int, u: int, L: int) -> np.ndarray:
    """Recursive deletion of the (0; G_u^beta) block inside G_k^beta.

    G_{u+1,u} drops the zero-topped G_u^beta block; G_{k,u} for k > u + 1
    replaces the zero-topped G_{k-1}^beta block by G_{k-1,u}.
    """
    _check_level(L)
    _check_macdonald(k, u)
    q = 1 << L
    if k == u + 1:
        inner = np.zeros((u, 0), dtype=np.int64)
    else:
        inner = macdonald_beta_matrix(k - 1, u, L)
    alpha = simplex_alpha_matrix(k - 1, L)
    beta = simplex_beta_matrix(k - 1, L)
    return _beta_step(alpha, [inner] + [beta] * (q // 2 - 1), q)


def hadamard_top_block(k: int, L: int) -> np.ndarray:
    """A^{k,0,...,0} with its last row moved to the top."""
    A = hadamard_matrix([k] + [0] * (L - 1))
    return np.vstack([A[-1:], A[:-1]])


def macdonald_block_check(kind: str, k: int, u: int, L: int) -> bool:
    """Does the MacDonald matrix contain the reordered Hadamard block where expected?"""
    q = 1 << L
    A = hadamard_top_block(k, L)
    w = q ** (k - 1)
    if kind == "alpha":
        G = macdonald_alpha_matrix(k, u, L)
        start = w - q ** u
    elif kind == "beta":
        G = macdonald_beta_matrix(k, u, L)
        start = 0
    else:
        raise ValueError("kind must be 'alpha' or 'beta'")
    return A.shape == (k, w) and np.array_equal(G[:, start:start + w], A)


def _code(matrix: np.ndarray, L: int, budget: int) -> AdditiveCode:
    return AdditiveCode.from_matrix(L, matrix, budget=budget)


def hadamard(ts: Sequence[int], budget: int = DEFAULT_BUDGET) -> AdditiveCode:
    return _code(hadamard_matrix(ts), len(ts), budget)


def simplex_alpha(k: int, L: int, budget: int = DEFAULT_BUDGET) -> AdditiveCode:
    return _code(simplex_alpha_matrix(k, L), L, budget)


def simplex_beta(k: int, L: int, budget: int = DEFAULT_BUDGET) -> AdditiveCode:
    return _code(simplex_beta_matrix(k, L), L, budget)


def macdonald(kind: str, k: int, u: int, L: int, budget: int = DEFAULT_BUDGET) -> AdditiveCode:
    if kind == "alpha":
        return _code(macdonald_alpha_matrix(k, u, L), L, budget)
    if kind == "beta":
        return _code(macdonald_beta_matrix(k, u, L), L, budget)
    raise ValueError("kind must be 'alpha' or 'beta'")


def build_family(family: str, params: Sequence[int], budget: int = DEFAULT_BUDGET) -> AdditiveCode:
    """Dispatch by name; params are (t_1..t_L) for hadamard, (k, L) for
    simplex and (k, u, L) for MacDonald."""
    p = [int(x) for x in params]
    if family == "hadamard":
        return hadamard(p, budget)
    if family == "simplex_alpha":
        return simplex_alpha(*p, budget=budget)
    if family == "simplex_beta":
        return simplex_beta(*p, budget=budget)
    if family == "macdonald_alpha":
        return macdonald("alpha", *p, budget=budget)
    if family == "macdonald_beta":
        return macdonald("beta", *p, budget=budget)
    raise ValueError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")


# theorem verification ----------------------------------------------------------

DEFAULT_GRID = {2: 3, 3: 2, 4: 2}


@dataclass
class FamilyResult:
    family: str
    params: tuple
    expected_linear: bool
    linear: bool | None
    method: str
    witness: Any = None

    @property
    def ok(self) -> bool:
        return self.linear == self.expected_linear


def theorem_instances(grid: dict[int, int] | None = None):
    """(family, params, expected linearity) for the theorem statements on a k-grid."""
    grid = DEFAULT_GRID if grid is None else grid
    out = []
    for L, kmax in sorted(grid.items()):
        z = [0] * (L - 1)
        out.append(("hadamard", tuple([1] + z), True))
        for k in range(2, kmax + 1):
            if L >= 3:
                out.append(("hadamard", tuple([k] + z), False))
        for k in range(1, kmax + 1):
            out.append(("simplex_alpha", (k, L), L == 2 and k == 1))
        for k in range(2, kmax + 1):
            out.append(("simplex_beta", (k, L), False))
        for k in range(2, kmax + 1):
            for u in range(1, k):
                out.append(("macdonald_alpha", (k, u, L), False))
                out.append(("macdonald_beta", (k, u, L), False))
    out.append(("hadamard", (1, 0, 1), True))
    return out


def verify_family_theorems(grid: dict[int, int] | None = None, budget: int = DEFAULT_BUDGET) -> list[FamilyResult]:
    """Schur-chain witness first, full pair criterion as fallback.

    Instances above the enumeration budget are reported with ``linear=None``
    unless a chain witness settles them.
    """
    results = []
    for family, params, expected in theorem_instances(grid):
        code = build_family(family, params, budget)
        try:
            v = decide(code)
            results.append(FamilyResult(family, params, expected, v.linear, v.method, v.witness))
        except BudgetExceeded:
            results.append(FamilyResult(family, params, expected, None, "budget"))
    return results
