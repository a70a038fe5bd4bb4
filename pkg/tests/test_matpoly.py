import numpy as np
import pytest

import matpencil as mp
from matpencil import fixtures
from matpencil.errors import StructuralError

from helpers import chebyshev_to_monomial, rand_mono


def test_eval_monomial_scalar():
    p = mp.MatPoly.monomial_poly([1.0, 1.0])  # z + 1
    assert p.eval(2.0) == pytest.approx(np.array([[3.0]]))


def test_eval_lagrange_at_node_returns_stored_sample():
    a = fixtures.mixed_lagrange_poly()
    got = a.eval(-1.0)
    assert np.array_equal(got, fixtures.MIXED_SAMPLES[0].astype(complex))
    assert got[0].tolist() == [-2, -1, -1]


def test_eval_chebyshev_scalar():
    p = mp.MatPoly.chebyshev_poly([1.0, 0.0, 1.0])  # T_0 + T_2
    # T_2(0.5) = 2*0.25 - 1 = -0.5
    assert p.eval(0.5)[0, 0] == pytest.approx(0.5)


def test_barycentric_eval_matches_samples_at_all_nodes():
    a = fixtures.mixed_lagrange_poly()
    for node, sample in zip(a.basis.nodes, a.data):
        assert np.array_equal(a.eval(node), sample.astype(complex))


def test_barycentric_eval_between_nodes_interpolates():
    # degree-1 scalar data: samples of 2z + 1 at nodes 0, 1
    p = mp.MatPoly.lagrange_poly([0.0, 1.0], mp.barycentric_weights([0.0, 1.0]),
                                 [[[1.0]], [[3.0]]])
    for z in (0.25, -1.5, 2.0 + 1.0j):
        assert p.eval(z)[0, 0] == pytest.approx(2 * z + 1, rel=1e-14)


def test_partial_fraction_identity_for_weights():
    rng = np.random.default_rng(11)
    nodes = fixtures.MIXED_NODES
    weights = fixtures.MIXED_WEIGHTS
    assert np.allclose(weights, mp.barycentric_weights(nodes))
    for _ in range(10):
        z = rng.uniform(-3, 3) + 1j * rng.uniform(0.2, 3)
        assert mp.partial_fraction_residual(nodes, weights, z) < 1e-12


def test_det_poly_trivial():
    p = mp.MatPoly.monomial_poly([1.0, 1.0])
    np.testing.assert_allclose(mp.det_poly(p).real, [1.0, 1.0], atol=1e-14)


def test_det_poly_mandelbrot_cubic():
    p = mp.MatPoly.monomial_poly([float(c) for c in mp.mandelbrot_poly_coeffs(3)])
    np.testing.assert_allclose(mp.det_poly(p).real, [1, 1, 2, 1], atol=1e-12)
    assert mp.det_poly_exact(mp.MatPoly.monomial_poly(np.array([[[1]], [[1]], [[2]], [[1]]]))) \
        == [1, 1, 2, 1]


def test_det_poly_matches_pointwise_determinant():
    rng = np.random.default_rng(5)
    p = rand_mono(rng, 2, 2)
    coeffs = mp.det_poly(p)
    val = sum(c * 0.7 ** k for k, c in enumerate(coeffs))
    want = np.linalg.det(p.eval(0.7))
    assert abs(val - want) / abs(want) < 1e-10
    for _ in range(20):
        z = rng.uniform(-1, 1) + 1j * rng.uniform(-1, 1)
        val = sum(c * z ** k for k, c in enumerate(coeffs))
        want = np.linalg.det(p.eval(z))
        assert abs(val - want) <= 1e-8 * max(1.0, abs(want))


def test_det_poly_exact_random_integer_matrix():
    rng = np.random.default_rng(7)
    data = rng.integers(-4, 5, (3, 2, 2))
    p = mp.MatPoly.monomial_poly(data)
    exact = mp.det_poly_exact(p)
    approx = mp.det_poly(mp.MatPoly.monomial_poly(data.astype(float)))
    np.testing.assert_allclose(approx.real, exact, atol=1e-10)


def test_chebyshev_agrees_with_converted_monomial():
    rng = np.random.default_rng(3)
    for deg in range(6):
        cheb = rng.uniform(-1, 1, deg + 1)
        mono = chebyshev_to_monomial(cheb)
        pc = mp.MatPoly.chebyshev_poly(cheb)
        pm = mp.MatPoly.monomial_poly(mono)
        for z in rng.uniform(-1, 1, 4):
            assert pc.eval(z)[0, 0] == pytest.approx(pm.eval(z)[0, 0], abs=1e-12)


def test_height_report_examples():
    m3 = mp.mandelbrot_matrix(3).entries
    rep = mp.height_report(m3)
    assert rep.height == 1 and rep.is_bohemian_01 and rep.is_height1_integer

    rep = mp.height_report(np.array([[1.0, 10.0], [10.0, 1.0]]))
    assert rep.height == 10 and rep.t_metric == pytest.approx(0.1)

    rep = mp.height_report(np.eye(3))
    assert rep.height == 1 and rep.t_metric == 1 and not rep.is_bohemian_01

    rep = mp.height_report(np.zeros((2, 2)))
    assert rep.height == 0 and rep.t_metric is None


def test_structural_errors():
    with pytest.raises(StructuralError):
        mp.MatPoly(mp.BasisSpec.monomial(), 2, 1, np.zeros((2, 2, 2, 2)))
    with pytest.raises(StructuralError):
        mp.MatPoly(mp.BasisSpec.monomial(), 2, 2, np.zeros((2, 2, 2)))  # missing a coefficient
    with pytest.raises(StructuralError):
        mp.BasisSpec.lagrange([0.0, 0.0], [1.0, 1.0])  # duplicate nodes
    with pytest.raises(StructuralError):
        mp.MatPoly.lagrange_poly([0.0, 1.0, 2.0], mp.barycentric_weights([0.0, 1.0, 2.0]),
                                 np.zeros((2, 1, 1)))  # node count vs sample count
