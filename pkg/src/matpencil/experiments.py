"""Desk-scale experiment drivers: the recursive 4x4 family, the quintic-style
linearization comparison, and the mixed Lagrange/Chebyshev build.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass

import numpy as np

from . import fixtures
from ._compose import composite_coeffs
from .constructions import composite, frobenius_triple, chebyshev_triple, lagrange_triple
from .eigensolve import EigenReport, generalized_eigen, match_roots
from .errors import ContractError
from .matpoly import MatPoly, height_report
from .oracle import interp_charpoly, scalar_roots
from .pencil import StandardTriple, as_rng

FAMILY_DESK_CAP = 8


@dataclass
class FamilyLevelReport:
    k: int
    dim: int
    n_finite: int
    n_infinite: int
    max_residual: float
    pencil_height: float
    pencil_t_metric: float | None
    solve_seconds: float
    eigen: EigenReport


def family_triple(k_max: int, constants: list | None = None) -> list[StandardTriple]:
    """Triples for h_1 .. h_{k_max}: start from the companion of z I + c_0 and
    square through the composite rule with d0 = I."""
    if not 1 <= k_max <= 64:
        raise ContractError("k_max out of range")
    cs = fixtures.FAMILY_CONSTANTS if constants is None else constants
    c0 = np.asarray(cs[0 % len(cs)], dtype=float)
    h1 = MatPoly.monomial_poly(np.stack([c0, np.eye(4)]))
    out = [frobenius_triple(h1)]
    for k in range(1, k_max):
        t = out[-1]
        ck = np.asarray(cs[k % len(cs)], dtype=float)
        out.append(composite(t, t, np.eye(4), ck))
    return out


def sigma_ratio(mat: np.ndarray) -> float:
    s = np.linalg.svd(np.asarray(mat, dtype=complex), compute_uv=False)
    return 0.0 if s[0] == 0.0 else float(s[-1] / s[0])


# Extended precision for residual evaluation where coefficient magnitudes
# (~1e5) would otherwise put the double-precision evaluation floor above the
# differences being measured.  Falls back to double where unsupported.
_WIDE = np.complex256 if hasattr(np, "complex256") else np.complex128


def _horner_wide(coeffs: np.ndarray, z: complex) -> np.ndarray:
    acc = np.zeros(coeffs.shape[1:], dtype=_WIDE)
    zw = _WIDE(z)
    for c in np.asarray(coeffs, dtype=_WIDE)[::-1]:
        acc = acc * zw + c
    return acc


def run_family(k_max: int = 6, rng=None, constants: list | None = None,
               desk_cap: int = FAMILY_DESK_CAP) -> list[FamilyLevelReport]:
    """Solve the recursive family for k = 1..k_max and report residuals.

    Residuals evaluate h_k at each eigenvalue through the defining recurrence
    (never through expanded coefficients) and take sigma_min / sigma_max.
    """
    if not 1 <= k_max <= desk_cap:
        raise ContractError(f"k_max must be within 1..{desk_cap}")
    if constants is not None:
        for i, c in enumerate(constants):
            if abs(np.linalg.det(np.asarray(c, dtype=complex))) < 1e-12:
                print(f"warning: constant #{i} is singular; expect high-multiplicity "
                      "zero eigenvalues and numerical artifacts", file=sys.stderr)
    rng = as_rng(rng)
    reports = []
    evaluate = fixtures.family_eval if constants is None else _custom_family_eval(constants)
    for k, triple in enumerate(family_triple(k_max, constants), start=1):
        t0 = time.perf_counter()
        eig = generalized_eigen(triple.pencil, rng=rng)
        elapsed = time.perf_counter() - t0
        res = np.array([sigma_ratio(evaluate(k, z)) for z in eig.finite])
        eig.residuals = res
        hr = height_report(triple.pencil.A)
        reports.append(FamilyLevelReport(
            k, triple.N, len(eig.finite), eig.infinite_count,
            float(res.max()) if res.size else 0.0,
            hr.height, hr.t_metric, elapsed, eig))
    return reports


def _custom_family_eval(constants):
    def evaluate(k, z):
        h = z * np.eye(4, dtype=complex) + np.asarray(constants[0 % len(constants)], dtype=complex)
        for j in range(1, k):
            h = z * (h @ h) + np.asarray(constants[j % len(constants)], dtype=complex)
        return h
    return evaluate


@dataclass
class QuinticComparison:
    algebraic_max_residual: float
    frobenius_max_residual: float
    ratio: float
    algebraic_counts: tuple
    frobenius_counts: tuple
    algebraic_eigen: EigenReport
    frobenius_eigen: EigenReport


def run_random_quintic(rng=None) -> QuinticComparison:
    """Compare the glued linearization of z a(z) b(z) + I against the plain
    second companion of the numerically expanded degree-7 polynomial.

    Both eigenvalue sets are scored with the same residual: evaluate
    z a(z) b(z) + I from the cubic factors directly and take the singular
    value ratio.
    """
    rng = as_rng(rng)
    r = 5
    c0 = np.eye(r)
    a = MatPoly.monomial_poly(np.stack(fixtures.QUINTIC_A))
    b = MatPoly.monomial_poly(np.stack(fixtures.quintic_b_coeffs()))

    glued = composite(frobenius_triple(a), frobenius_triple(b), np.eye(r), c0)
    expanded = composite_coeffs(a.data, np.eye(r), b.data, c0)
    direct = frobenius_triple(MatPoly.monomial_poly(expanded))

    def h_at(z):
        hz = _WIDE(z) * (_horner_wide(a.data, z) @ _horner_wide(b.data, z)) + c0.astype(_WIDE)
        return hz.astype(complex)

    # Both sides go through the same plain QZ solve: the comparison is about
    # the two constructions, and the shift-invert reduction would quietly
    # rebalance the badly scaled expanded companion.
    eig_glued = generalized_eigen(glued.pencil, rng=rng, backend="qz")
    eig_direct = generalized_eigen(direct.pencil, rng=rng, backend="qz")
    res_glued = np.array([sigma_ratio(h_at(z)) for z in eig_glued.finite])
    res_direct = np.array([sigma_ratio(h_at(z)) for z in eig_direct.finite])
    eig_glued.residuals = res_glued
    eig_direct.residuals = res_direct
    worst_glued = float(res_glued.max())
    worst_direct = float(res_direct.max())
    return QuinticComparison(
        worst_glued, worst_direct,
        worst_direct / worst_glued if worst_glued else np.inf,
        (len(eig_glued.finite), eig_glued.infinite_count),
        (len(eig_direct.finite), eig_direct.infinite_count),
        eig_glued, eig_direct)


@dataclass
class MixedBasisReport:
    dim: int
    blocks: list
    n_finite: int
    n_infinite: int
    max_forward_error: float
    oracle_degree: int
    eigen: EigenReport
    c0_note: str = "constant term c0 = I (not pinned by the source data)"


def run_mixed_basis(rng=None) -> MixedBasisReport:
    """Glue a barycentric-Lagrange cubic with a Chebyshev cubic and check the
    eigenvalues against roots of the interpolated characteristic polynomial."""
    rng = as_rng(rng)
    a = fixtures.mixed_lagrange_poly()
    b = fixtures.mixed_chebyshev_poly()
    r = a.dim
    t = composite(lagrange_triple(a), chebyshev_triple(b), np.eye(r), np.eye(r))
    eig = generalized_eigen(t.pencil, rng=rng)
    coeffs = interp_charpoly(t.pencil)
    refs = scalar_roots(coeffs)
    match = match_roots(eig.finite, refs)
    res = np.array([sigma_ratio(z * (a.eval(z) @ b.eval(z)) + np.eye(r)) for z in eig.finite])
    eig.residuals = res
    return MixedBasisReport(
        t.N, t.pencil.block_meta["blocks"], len(eig.finite), eig.infinite_count,
        match.max_error, len(refs), eig)
