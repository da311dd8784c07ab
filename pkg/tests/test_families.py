import numpy as np
import pytest

from zgray.additive import AdditiveCode, decomposition_view
from zgray.families import (FAMILIES, build_family, hadamard, hadamard_matrix, hadamard_top_block,
                            macdonald, macdonald_alpha_matrix, macdonald_beta_matrix, macdonald_block_check,
                            simplex_alpha, simplex_alpha_matrix, simplex_beta, simplex_beta_matrix,
                            verify_family_theorems)
from zgray.gray import gray_image
from zgray.linearity import brute_force_linear, nonlinear_by_schur_witness


def test_hadamard_matrices():
    assert hadamard_matrix([1, 0, 1]).tolist() == [[0, 4], [1, 1]]
    assert hadamard_matrix([2, 0, 0]).tolist() == [list(range(8)), [1] * 8]
    assert hadamard_matrix([1, 1, 1]).tolist() == [[0, 0, 0, 0, 4, 4, 4, 4], [0, 2, 4, 6, 0, 2, 4, 6], [1] * 8]
    with pytest.raises(ValueError):
        hadamard_matrix([0, 1])
    with pytest.raises(ValueError):
        hadamard_matrix([1])


def test_simplex_matrices():
    assert simplex_alpha_matrix(1, 3).tolist() == [list(range(8))]
    g = simplex_alpha_matrix(2, 2)
    assert g.tolist() == [[0] * 4 + [1] * 4 + [2] * 4 + [3] * 4, list(range(4)) * 4]
    assert simplex_beta_matrix(2, 2).tolist() == [[1, 1, 1, 1, 0, 2], [0, 1, 2, 3, 1, 1]]
    # |columns of G_k^beta| = 2^((L-1)(k-1)) (2^k - 1)
    for k, L in [(2, 3), (3, 2), (3, 3)]:
        assert simplex_beta_matrix(k, L).shape == (k, 2 ** ((L - 1) * (k - 1)) * (2 ** k - 1))


def test_macdonald_last_u():
    for k, L in [(2, 2), (3, 2), (2, 3)]:
        q = 1 << L
        prev_a = simplex_alpha_matrix(k - 1, L)
        prev_b = simplex_beta_matrix(k - 1, L)
        expect_a = np.hstack([np.vstack([np.full((1, prev_a.shape[1]), v), prev_a]) for v in range(1, q)])
        assert np.array_equal(macdonald_alpha_matrix(k, k - 1, L), expect_a)
        blocks = [np.vstack([np.ones((1, prev_a.shape[1]), dtype=int), prev_a])]
        blocks += [np.vstack([np.full((1, prev_b.shape[1]), v), prev_b]) for v in range(2, q - 1, 2)]
        assert np.array_equal(macdonald_beta_matrix(k, k - 1, L), np.hstack(blocks))


def test_macdonald_small_by_deletion():
    assert np.array_equal(macdonald_alpha_matrix(2, 1, 2), simplex_alpha_matrix(2, 2)[:, 4:])
    # beta: drop the zero-topped G_1^beta column
    assert macdonald_beta_matrix(2, 1, 2).tolist() == [[1, 1, 1, 1, 2], [0, 1, 2, 3, 1]]
    with pytest.raises(ValueError):
        macdonald_alpha_matrix(2, 2, 2)


@pytest.mark.parametrize("kind", ["alpha", "beta"])
@pytest.mark.parametrize("k,u,L", [(2, 1, 2), (3, 1, 2), (3, 2, 2), (2, 1, 3)])
def test_macdonald_hadamard_block(kind, k, u, L):
    assert macdonald_block_check(kind, k, u, L)


def test_hadamard_top_block():
    assert hadamard_top_block(2, 3).tolist() == [[1] * 8, list(range(8))]


def test_witnesses_from_proofs():
    assert brute_force_linear(gray_image(simplex_alpha(1, 2)))

    code = hadamard([2, 0, 0])
    u = (0, 0, 1, 1, 0, 0, 1, 1)
    v = (0, 1, 0, 1, 0, 1, 0, 1)
    assert tuple(4 * (a & b) for a, b in zip(u, v)) not in code
    assert not brute_force_linear(gray_image(code))

    code = simplex_beta(2, 2)
    i, a, b = nonlinear_by_schur_witness(code)
    assert i == 1 and {a.bits(), b.bits()} == {(0, 1, 0, 1, 1, 1), (1, 0, 1, 0, 1, 1)}
    prod = a & b
    assert prod.bits() == (0, 0, 0, 0, 1, 1)
    assert prod.value not in decomposition_view(code).associated_sets[1]


def test_build_family_dispatch():
    assert len(build_family("hadamard", [1, 0, 1])) == len(hadamard([1, 0, 1]))
    assert build_family("macdonald_beta", [2, 1, 2]).same_code(macdonald("beta", 2, 1, 2))
    assert set(FAMILIES) >= {"simplex_alpha", "simplex_beta"}
    with pytest.raises(ValueError):
        build_family("golay", [1])


def test_theorem_grid_small():
    res = verify_family_theorems({2: 2, 3: 2})
    assert res and all(r.ok for r in res)
