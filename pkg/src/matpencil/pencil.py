"""Pencils z*D - A and standard triples X (zD - A)^-1 [D] Y.

The determinant primitive and the resolvent primitive here are what every
construction in this package is verified against.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import scipy.linalg

from ._exact import exact_det
from .errors import DegenerateInputError, SpectrumError, StructuralError
from .matpoly import eval_at

#: pivot-ratio threshold above which zD - A counts as numerically singular
COND_CAP = 1e12


@dataclass(eq=False)
class Pencil:
    """The matrix pencil z*D - A (two equal-size square matrices)."""

    D: np.ndarray
    A: np.ndarray
    block_meta: dict | None = None

    def __post_init__(self):
        self.D = np.asarray(self.D)
        self.A = np.asarray(self.A)
        if self.D.ndim != 2 or self.D.shape[0] != self.D.shape[1]:
            raise StructuralError("D must be square")
        if self.A.shape != self.D.shape:
            raise StructuralError("A and D must have the same square shape")

    @property
    def N(self) -> int:
        return self.D.shape[0]

    def at(self, z: complex) -> np.ndarray:
        return z * self.D.astype(complex) - self.A.astype(complex)


@dataclass(eq=False)
class StandardTriple:
    """(X, zD - A, Y) with X (zD-A)^-1 Y = a^-1(z); weighted inserts D before Y.

    `grade` records the degree of the polynomial the pencil linearizes, which
    composition rules need for bookkeeping.
    """

    X: np.ndarray
    pencil: Pencil
    Y: np.ndarray
    weighted: bool = False
    grade: int | None = None

    def __post_init__(self):
        self.X = np.asarray(self.X)
        self.Y = np.asarray(self.Y)
        n = self.pencil.N
        if self.X.ndim != 2 or self.X.shape[1] != n:
            raise StructuralError(f"X must have {n} columns")
        if self.Y.ndim != 2 or self.Y.shape[0] != n:
            raise StructuralError(f"Y must have {n} rows")
        if self.X.shape[0] != self.Y.shape[1]:
            raise StructuralError("X and Y disagree on the polynomial dimension r")

    @property
    def r(self) -> int:
        return self.X.shape[0]

    @property
    def N(self) -> int:
        return self.pencil.N


def _is_exact(arr: np.ndarray) -> bool:
    return arr.dtype.kind in "iu" or arr.dtype == object


def pencil_det_at(p: Pencil, z: complex):
    """det(z*D - A); exact when the pencil and z are integers/rationals."""
    if _is_exact(p.D) and _is_exact(p.A) and isinstance(z, (int, Fraction)):
        d = p.D.tolist()
        a = p.A.tolist()
        rows = [[z * d[i][j] - a[i][j] for j in range(p.N)] for i in range(p.N)]
        return exact_det(rows)
    sign, logdet = np.linalg.slogdet(p.at(z))
    return sign * np.exp(logdet)


def pivot_condition(mat: np.ndarray) -> float:
    """Cheap condition estimate: ratio of largest to smallest LU pivot magnitude."""
    if mat.shape[0] == 0:
        return 1.0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        lu, _ = scipy.linalg.lu_factor(mat, check_finite=False)
    piv = np.abs(np.diag(lu))
    if piv.min() == 0.0 or not np.isfinite(piv.max()):
        return np.inf
    return float(piv.max() / piv.min())


def resolvent_eval(t: StandardTriple, z: complex, cond_cap: float = COND_CAP) -> np.ndarray:
    """X (zD - A)^-1 Y, with the extra D factor before Y when t is weighted."""
    m = t.pencil.at(z)
    if pivot_condition(m) > cond_cap:
        raise SpectrumError(f"z = {z} is too close to the pencil spectrum")
    rhs = t.pencil.D.astype(complex) @ t.Y.astype(complex) if t.weighted else t.Y.astype(complex)
    return t.X.astype(complex) @ np.linalg.solve(m, rhs)


def is_regular(p: Pencil, rng=None, tol: float = 1e-10) -> bool:
    """Sampled regularity test: det(zD - A) above tolerance at some point."""
    rng = as_rng(rng)
    scale = max(1.0, float(np.abs(p.A).max()), float(np.abs(p.D).max()))
    for _ in range(p.N + 1):
        z = 2.0 * np.exp(2j * np.pi * rng.random())
        sign, logdet = np.linalg.slogdet(p.at(z))
        if sign != 0 and logdet > np.log(tol * scale):
            return True
    return False


def as_rng(rng) -> np.random.Generator:
    if isinstance(rng, np.random.Generator):
        return rng
    return np.random.default_rng(rng)


def _rel_det_dev(det_pencil: tuple, det_poly: tuple) -> float:
    """|dp - dq| / max(1, |dq|) from (sign, log|.|) pairs, overflow-safe."""
    sp, lp = det_pencil
    sq, lq = det_poly
    if sp == 0 and sq == 0:
        return 0.0
    top = max(lp, lq)
    num = abs(sp * np.exp(lp - top) - sq * np.exp(lq - top))
    log_scale = top - max(0.0, lq)
    if log_scale > 700.0:
        return np.inf
    return float(num * np.exp(log_scale))


@dataclass
class VerifyReport:
    """Outcome of checking a triple against its polynomial."""

    det_deviation: float
    resolvent_deviation: float | None
    tol: float
    points: list
    passed: bool

    def __str__(self):
        status = "pass" if self.passed else "FAIL"
        return (
            f"verify[{status}] det dev {self.det_deviation:.3e}, "
            f"resolvent dev {self.resolvent_deviation if self.resolvent_deviation is None else format(self.resolvent_deviation, '.3e')} "
            f"at tol {self.tol:.1e} over {len(self.points)} points"
        )


def verify_triple(t: StandardTriple, p, n_points: int | None = None,
                  tol: float = 1e-8, rng=None) -> VerifyReport:
    """Check det(zD - A) = det a(z) and resolvent = a^-1(z) at sampled points.

    Points are drawn uniformly on |z| = 2 and rejected while the shifted
    pencil's condition estimate exceeds 1/tol, so the resolvent stays
    computable.  Deviations are relative; the determinant one is normalized by
    max(1, |det a|) so huge determinants do not drown the comparison.
    """
    if t.r != p.dim:
        raise StructuralError(f"triple has r = {t.r} but polynomial has dim {p.dim}")
    if n_points is None:
        n_points = max(t.N, p.dim * p.grade) + 1
    rng = as_rng(rng)
    cond_cap = 1.0 / tol
    points = []
    attempts = 0
    while len(points) < n_points:
        attempts += 1
        if attempts > 100 * n_points:
            raise DegenerateInputError(
                f"could not find {n_points} admissible sample points in {attempts} draws"
            )
        z = 2.0 * np.exp(2j * np.pi * rng.random())
        if pivot_condition(t.pencil.at(z)) <= cond_cap:
            points.append(z)

    det_dev = 0.0
    res_dev = None
    for z in points:
        az = eval_at(p, z)
        dev = _rel_det_dev(np.linalg.slogdet(t.pencil.at(z)), np.linalg.slogdet(az))
        det_dev = max(det_dev, dev)
        if pivot_condition(az) <= cond_cap:
            inv = np.linalg.inv(az)
            got = resolvent_eval(t, z, cond_cap=cond_cap)
            dev = float(np.linalg.norm(got - inv) / np.linalg.norm(inv))
            res_dev = dev if res_dev is None else max(res_dev, dev)

    passed = det_dev <= tol and res_dev is not None and res_dev <= tol
    return VerifyReport(det_dev, res_dev, tol, points, passed)


def is_block_upper_hessenberg(mat: np.ndarray, r: int) -> bool:
    """True when every entry below the first r x r block subdiagonal is zero."""
    mat = np.asarray(mat)
    n = mat.shape[0]
    for i in range(n):
        for j in range(n):
            if i // r > j // r + 1 and mat[i, j] != 0:
                return False
    return True
