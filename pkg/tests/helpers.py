"""Shared random-instance generators for the test suite."""

import numpy as np

import matpencil as mp
from matpencil._compose import (composite_coeffs, mono_add, mono_mul,
                                shift_left_coeffs, shift_right_coeffs)

__all__ = ["rand_mat", "rand_mono", "rand_lagrange", "rand_chebyshev",
           "composite_coeffs", "mono_add", "mono_mul", "shift_left_coeffs",
           "shift_right_coeffs", "chebyshev_to_monomial"]


def rand_mat(rng, r):
    return rng.uniform(-1, 1, (r, r)) + 1j * rng.uniform(-1, 1, (r, r))


def rand_mono(rng, r, s, monic=False):
    data = np.stack([rand_mat(rng, r) for _ in range(s + 1)])
    if monic:
        data[-1] = np.eye(r)
    return mp.MatPoly.monomial_poly(data)


def rand_chebyshev(rng, r, s):
    return mp.MatPoly.chebyshev_poly(np.stack([rand_mat(rng, r) for _ in range(s + 1)]))


def rand_lagrange(rng, r, s, min_sep=0.3):
    while True:
        nodes = rng.uniform(-1, 1, s + 1) + 1j * rng.uniform(-1, 1, s + 1)
        sep = min(abs(a - b) for i, a in enumerate(nodes) for b in nodes[i + 1:]) if s else 1.0
        if sep >= min_sep:
            break
    weights = mp.barycentric_weights(nodes)
    samples = np.stack([rand_mat(rng, r) for _ in range(s + 1)])
    return mp.MatPoly.lagrange_poly(nodes, weights, samples)


def chebyshev_to_monomial(cheb_coeffs):
    """Scalar Chebyshev coefficients -> monomial coefficients (test oracle)."""
    t_prev, t_cur = [1.0], [0.0, 1.0]
    out = [0.0] * len(cheb_coeffs)
    for k, c in enumerate(cheb_coeffs):
        t_k = t_prev if k == 0 else (t_cur if k == 1 else None)
        if t_k is None:
            t_k = [0.0] + [2.0 * v for v in t_cur]
            for i, v in enumerate(t_prev):
                t_k[i] -= v
            t_prev, t_cur = t_cur, t_k
        for i, v in enumerate(t_k):
            out[i] += c * v
    return out
