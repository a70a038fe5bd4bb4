"""Generalized eigenvalues of a pencil via shift-and-invert, plus residuals
and eigenvalue/reference matching.

The reduction forms W = (sigma*D - A)^-1 D at a well-conditioned random shift
sigma and reads generalized eigenvalues off the standard spectrum of W by
z = sigma - 1/mu; mu near zero marks an infinite eigenvalue.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import ContractError, SpectrumError
from .matpoly import eval_at
from .pencil import Pencil, as_rng, pivot_condition

BACKEND = "shift-invert + numpy eigvals"
BACKEND_QZ = "lapack qz"


@dataclass(eq=False)
class EigenReport:
    """Solved spectrum of one pencil; finite count + infinite count = N."""

    finite: np.ndarray
    infinite_count: int
    residuals: np.ndarray | None
    shift_used: complex
    backend: str = BACKEND

    @property
    def total(self) -> int:
        return len(self.finite) + self.infinite_count


def generalized_eigen(p: Pencil, rng=None, inf_tol: float = 1e-12,
                      shift_candidates: int = 5, max_draws: int = 50,
                      cond_cap: float = 1e12, backend: str = "shift-invert") -> EigenReport:
    """All eigenvalues of det(zD - A) = 0, split into finite and infinite.

    The default reduction picks the best-conditioned of `shift_candidates`
    random shift draws on |z| = 2 (continuing up to `max_draws` until one is
    admissible), forms W = (sigma D - A)^-1 D, and maps W's spectrum back by
    z = sigma - 1/mu.  `inf_tol` is relative to the max row sum of W.
    backend="qz" instead calls the LAPACK QZ solver on (A, D) directly,
    classifying |beta| below inf_tol * |(alpha, beta)| as infinite.
    """
    if backend == "qz":
        return _qz_eigen(p, inf_tol)
    if backend != "shift-invert":
        raise ContractError(f"unknown backend {backend!r}")
    rng = as_rng(rng)
    D = p.D.astype(complex)
    A = p.A.astype(complex)
    best = None
    for draw in range(max_draws):
        sigma = 2.0 * np.exp(2j * np.pi * rng.random())
        cond = pivot_condition(sigma * D - A)
        if best is None or cond < best[1]:
            best = (sigma, cond)
        if draw + 1 >= shift_candidates and best[1] <= cond_cap:
            break
    if best[1] > cond_cap:
        raise SpectrumError(
            f"no admissible shift in {max_draws} draws; the pencil looks singular"
        )
    sigma = best[0]
    w = np.linalg.solve(sigma * D - A, D)
    mu = np.linalg.eigvals(w)
    scale = float(np.abs(w).sum(axis=1).max())
    cutoff = inf_tol * max(scale, 1e-300)
    infinite = np.abs(mu) < cutoff
    finite = sigma - 1.0 / mu[~infinite]
    return EigenReport(finite, int(infinite.sum()), None, sigma)


def _qz_eigen(p: Pencil, inf_tol: float) -> EigenReport:
    alpha, beta = scipy.linalg.eig(p.A.astype(complex), p.D.astype(complex),
                                   right=False, homogeneous_eigvals=True)
    infinite = np.abs(beta) <= inf_tol * (np.abs(alpha) + np.abs(beta))
    finite = alpha[~infinite] / beta[~infinite]
    return EigenReport(finite, int(infinite.sum()), None, 0j, backend=BACKEND_QZ)


def residuals(p, eigs) -> np.ndarray:
    """sigma_min / sigma_max of p evaluated at each candidate eigenvalue."""
    out = np.zeros(len(eigs))
    for i, z in enumerate(eigs):
        s = np.linalg.svd(eval_at(p, z), compute_uv=False)
        out[i] = 0.0 if s[0] == 0.0 else float(s[-1] / s[0])
    return out


@dataclass(eq=False)
class MatchReport:
    """Greedy globally-closest pairing between computed and reference values."""

    pairs: list
    forward_errors: np.ndarray
    max_error: float
    unmatched_eigs: list
    unmatched_refs: list


def match_roots(eigs, refs) -> MatchReport:
    """Pair each eigenvalue with a distinct reference, globally closest first.

    For well separated data this agrees with minimum-weight matching; extras
    on the longer list are reported unmatched.
    """
    eigs = np.asarray(eigs, dtype=complex)
    refs = np.asarray(refs, dtype=complex)
    if eigs.size == 0 or refs.size == 0:
        return MatchReport([], np.zeros(0), 0.0, list(range(eigs.size)), list(range(refs.size)))
    dist = np.abs(eigs[:, None] - refs[None, :])
    order = np.argsort(dist, axis=None, kind="stable")
    used_e = np.zeros(eigs.size, dtype=bool)
    used_r = np.zeros(refs.size, dtype=bool)
    pairs = []
    errors = []
    want = min(eigs.size, refs.size)
    for flat in order:
        i, j = divmod(int(flat), refs.size)
        if used_e[i] or used_r[j]:
            continue
        used_e[i] = used_r[j] = True
        pairs.append((i, j))
        errors.append(dist[i, j])
        if len(pairs) == want:
            break
    errors = np.array(errors)
    return MatchReport(pairs, errors, float(errors.max()) if errors.size else 0.0,
                       [i for i in range(eigs.size) if not used_e[i]],
                       [j for j in range(refs.size) if not used_r[j]])
