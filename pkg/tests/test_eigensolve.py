import numpy as np
import pytest

import matpencil as mp
from matpencil.errors import SpectrumError

from helpers import rand_mat


def test_standard_diagonal_pencil():
    rep = mp.generalized_eigen(mp.Pencil(np.eye(3), np.diag([1.0, 2.0, 3.0])), rng=0)
    assert rep.infinite_count == 0
    np.testing.assert_allclose(np.sort(rep.finite.real), [1, 2, 3], atol=1e-12)
    assert rep.total == 3


def test_singular_d_gives_infinite_eigenvalue():
    rep = mp.generalized_eigen(mp.Pencil(np.diag([1.0, 0.0]), np.diag([2.0, 1.0])), rng=0)
    assert rep.infinite_count == 1
    np.testing.assert_allclose(rep.finite, [2.0], atol=1e-12)


def test_mandelbrot_level4_roots_match_scalar_solver():
    m = mp.mandelbrot_matrix(4)
    pencil = mp.Pencil(np.eye(7), m.entries.astype(float))
    rep = mp.generalized_eigen(pencil, rng=1)
    refs = mp.scalar_roots([float(c) for c in mp.mandelbrot_poly_coeffs(4)])
    assert len(rep.finite) == 7
    assert mp.match_roots(rep.finite, refs).max_error <= 1e-8


def test_residual_examples():
    p = mp.MatPoly.monomial_poly([1.0, 1.0])
    assert mp.residuals(p, [-1.0])[0] <= 1e-14

    const = mp.MatPoly.monomial_poly(np.eye(3).reshape(1, 3, 3))
    np.testing.assert_allclose(mp.residuals(const, [0.3, -2.0, 1.0j]), 1.0)


def test_residuals_in_unit_interval():
    rng = np.random.default_rng(2)
    p = mp.MatPoly.monomial_poly(np.stack([rand_mat(rng, 3) for _ in range(3)]))
    res = mp.residuals(p, rng.uniform(-1, 1, 6) + 1j * rng.uniform(-1, 1, 6))
    assert np.all(res >= 0) and np.all(res <= 1)


def test_match_roots_examples():
    vals = np.array([1.0, 2.0, 3.0 + 1.0j])
    assert mp.match_roots(vals, vals).max_error == 0
    assert mp.match_roots(vals, vals[::-1]).max_error == 0
    perturbed = vals.copy()
    perturbed[1] += 1e-6
    assert mp.match_roots(vals, perturbed).max_error == pytest.approx(1e-6)


def test_match_roots_unequal_lengths():
    rep = mp.match_roots([1.0, 2.0], [1.0, 2.0, 9.0])
    assert len(rep.pairs) == 2 and rep.unmatched_refs == [2]


def test_count_conservation_across_random_pencils():
    rng = np.random.default_rng(3)
    for _ in range(10):
        n = int(rng.integers(2, 12))
        pencil = mp.Pencil(rand_mat(rng, n), rand_mat(rng, n))
        rep = mp.generalized_eigen(pencil, rng=rng)
        assert rep.total == n


def test_shift_invariance():
    rng = np.random.default_rng(4)
    for _ in range(5):
        n = int(rng.integers(4, 24))
        pencil = mp.Pencil(rand_mat(rng, n), rand_mat(rng, n))
        a = mp.generalized_eigen(pencil, rng=np.random.default_rng(100))
        b = mp.generalized_eigen(pencil, rng=np.random.default_rng(200))
        assert a.shift_used != b.shift_used
        assert mp.match_roots(a.finite, b.finite).max_error <= 1e-8


def test_qz_backend_agrees_with_shift_invert():
    rng = np.random.default_rng(5)
    pencil = mp.Pencil(rand_mat(rng, 8), rand_mat(rng, 8))
    si = mp.generalized_eigen(pencil, rng=0)
    qz = mp.generalized_eigen(pencil, backend="qz")
    assert qz.backend != si.backend
    assert si.total == qz.total == 8
    assert mp.match_roots(si.finite, qz.finite).max_error <= 1e-8


def test_singular_pencil_raises():
    zero = np.zeros((3, 3))
    with pytest.raises(SpectrumError):
        mp.generalized_eigen(mp.Pencil(zero, zero), rng=0, max_draws=10)


def test_colleague_roots_match_cosine_formula():
    for n in range(1, 9):
        coeffs = np.zeros(n + 1)
        coeffs[n] = 1.0
        t = mp.chebyshev_triple(mp.MatPoly.chebyshev_poly(coeffs))
        rep = mp.generalized_eigen(t.pencil, rng=7)
        want = np.cos((2 * np.arange(1, n + 1) - 1) * np.pi / (2 * n))
        assert mp.match_roots(rep.finite, want).max_error <= 1e-10


def test_residual_consistency_on_verified_pencils():
    from matpencil import experiments, fixtures
    for rep in experiments.run_family(5, rng=np.random.default_rng(0)):
        for z, res in zip(rep.eigen.finite, rep.eigen.residuals):
            assert res <= 1e-6, f"eigenvalue {z} has residual {res:.3e}"
    mixed = experiments.run_mixed_basis(rng=np.random.default_rng(0))
    for z, res in zip(mixed.eigen.finite, mixed.eigen.residuals):
        assert res <= 1e-6, f"eigenvalue {z} has residual {res:.3e}"


def test_residuals_of_family_level5_expanded():
    from matpencil import experiments, fixtures
    from matpencil._compose import composite_coeffs
    h = np.stack([fixtures.family_constant(0).astype(complex), np.eye(4, dtype=complex)])
    for j in range(1, 5):
        h = composite_coeffs(h, np.eye(4), h, fixtures.family_constant(j))
    p5 = mp.MatPoly.monomial_poly(h)
    eig = experiments.run_family(5, rng=np.random.default_rng(0))[-1].eigen
    assert len(eig.finite) == 124
    assert mp.residuals(p5, eig.finite).max() <= 1e-10
