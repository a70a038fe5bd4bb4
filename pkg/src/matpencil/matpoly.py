"""Square matrix polynomials in monomial, barycentric Lagrange, or Chebyshev form.

A MatPoly is the object whose eigenvalues (roots of det a(z)) everything else
chases.  Operations here are pure: evaluation, determinant-polynomial
extraction by interpolation, and entry-height metrics.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._exact import exact_det, interp_int
from .errors import StructuralError

MONOMIAL = "monomial"
LAGRANGE = "lagrange"
CHEBYSHEV = "chebyshev"


@dataclass(eq=False)
class BasisSpec:
    """Which basis a MatPoly's data lives in.

    For the Lagrange kind, `nodes` are the distinct interpolation nodes tau_k
    and `weights` the barycentric weights beta_k of the partial fraction
    1/w(z) = sum beta_k / (z - tau_k), w(z) = prod (z - tau_k).
    """

    kind: str
    nodes: np.ndarray | None = None
    weights: np.ndarray | None = None

    def __post_init__(self):
        if self.kind not in (MONOMIAL, LAGRANGE, CHEBYSHEV):
            raise StructuralError(f"unknown basis kind {self.kind!r}")
        if self.kind == LAGRANGE:
            if self.nodes is None or self.weights is None:
                raise StructuralError("lagrange basis needs nodes and weights")
            self.nodes = np.asarray(self.nodes, dtype=complex).ravel()
            self.weights = np.asarray(self.weights, dtype=complex).ravel()
            if self.nodes.size != self.weights.size:
                raise StructuralError("node/weight count mismatch")
            if len(set(self.nodes.tolist())) != self.nodes.size:
                raise StructuralError("lagrange nodes must be pairwise distinct")
        elif self.nodes is not None or self.weights is not None:
            raise StructuralError(f"{self.kind} basis takes no nodes/weights")

    @classmethod
    def monomial(cls) -> "BasisSpec":
        return cls(MONOMIAL)

    @classmethod
    def chebyshev(cls) -> "BasisSpec":
        return cls(CHEBYSHEV)

    @classmethod
    def lagrange(cls, nodes, weights) -> "BasisSpec":
        return cls(LAGRANGE, nodes=nodes, weights=weights)


def barycentric_weights(nodes) -> np.ndarray:
    """Weights beta_k = 1 / prod_{j != k} (tau_k - tau_j) for given nodes."""
    nodes = np.asarray(nodes, dtype=complex).ravel()
    n = nodes.size
    w = np.ones(n, dtype=complex)
    for k in range(n):
        diff = nodes[k] - np.delete(nodes, k)
        w[k] = 1.0 / np.prod(diff)
    return w


def partial_fraction_residual(nodes, weights, z) -> float:
    """|1/w(z) - sum beta_k/(z - tau_k)| at a non-node test point z."""
    nodes = np.asarray(nodes, dtype=complex).ravel()
    weights = np.asarray(weights, dtype=complex).ravel()
    w = np.prod(z - nodes)
    return abs(1.0 / w - np.sum(weights / (z - nodes)))


@dataclass(eq=False)
class MatPoly:
    """An r x r matrix polynomial of grade s.

    data holds s+1 matrices: coefficients (monomial alpha_k / Chebyshev b_k,
    k = 0..s) or node samples a(tau_k) in the Lagrange case.
    """

    basis: BasisSpec
    dim: int
    grade: int
    data: np.ndarray

    def __post_init__(self):
        self.data = np.asarray(self.data)
        if self.data.ndim != 3 or self.data.shape[1:] != (self.dim, self.dim):
            raise StructuralError(
                f"data must be a stack of {self.dim}x{self.dim} matrices, got {self.data.shape}"
            )
        if self.data.shape[0] != self.grade + 1:
            raise StructuralError(
                f"grade {self.grade} needs {self.grade + 1} matrices, got {self.data.shape[0]}"
            )
        if self.basis.kind == LAGRANGE and self.basis.nodes.size != self.grade + 1:
            raise StructuralError("lagrange node count must be grade + 1")

    def eval(self, z: complex) -> np.ndarray:
        return eval_at(self, z)

    @classmethod
    def monomial_poly(cls, coeffs) -> "MatPoly":
        coeffs = _as_stack(coeffs)
        return cls(BasisSpec.monomial(), coeffs.shape[1], coeffs.shape[0] - 1, coeffs)

    @classmethod
    def chebyshev_poly(cls, coeffs) -> "MatPoly":
        coeffs = _as_stack(coeffs)
        return cls(BasisSpec.chebyshev(), coeffs.shape[1], coeffs.shape[0] - 1, coeffs)

    @classmethod
    def lagrange_poly(cls, nodes, weights, samples) -> "MatPoly":
        samples = _as_stack(samples)
        basis = BasisSpec.lagrange(nodes, weights)
        return cls(basis, samples.shape[1], samples.shape[0] - 1, samples)


@dataclass(eq=False)
class CallablePoly:
    """Duck-typed stand-in for MatPoly: an evaluation rule plus dim/grade.

    Used where a polynomial exists only as a composition (e.g. a product of
    polynomials in different bases) and coefficient data is not wanted.
    """

    dim: int
    grade: int
    fn: object

    def eval(self, z: complex) -> np.ndarray:
        return np.asarray(self.fn(z))


def _as_stack(mats) -> np.ndarray:
    arr = np.asarray(mats)
    if arr.ndim == 1:  # scalar polynomial given as a flat coefficient list
        arr = arr.reshape(-1, 1, 1)
    if arr.ndim != 3 or arr.shape[1] != arr.shape[2]:
        raise StructuralError(f"expected a stack of square matrices, got shape {arr.shape}")
    return arr


def eval_at(p, z: complex) -> np.ndarray:
    """Evaluate a (duck-typed) matrix polynomial at the scalar z."""
    if not isinstance(p, MatPoly):
        return p.eval(z)
    kind = p.basis.kind
    if kind == MONOMIAL:
        acc = np.zeros((p.dim, p.dim), dtype=complex)
        for coeff in p.data[::-1]:
            acc = acc * z + coeff
        return acc
    if kind == CHEBYSHEV:
        # three-term recurrence T_{k+1} = 2 z T_k - T_{k-1}
        acc = np.array(p.data[0], dtype=complex)
        if p.grade >= 1:
            t_prev, t_cur = 1.0, z
            acc = acc + t_cur * p.data[1]
            for k in range(2, p.grade + 1):
                t_prev, t_cur = t_cur, 2 * z * t_cur - t_prev
                acc = acc + t_cur * p.data[k]
        return acc
    # barycentric Lagrange: a(z) = w(z) * sum beta_k a_k / (z - tau_k)
    nodes = p.basis.nodes
    hits = np.nonzero(z == nodes)[0]
    if hits.size:
        return np.array(p.data[hits[0]], dtype=complex)
    diffs = z - nodes
    w = np.prod(diffs)
    acc = np.zeros((p.dim, p.dim), dtype=complex)
    for beta, d, sample in zip(p.basis.weights, diffs, p.data):
        acc += (beta / d) * sample
    return w * acc


def det_poly(p: MatPoly) -> np.ndarray:
    """Coefficients (low-to-high) of det a(z), by sampling and inverse DFT.

    Samples det(a(z)) at the (r*s+1)-th roots of unity; the Vandermonde system
    is then unitary up to scaling, so the interpolation is well conditioned.
    """
    m = p.dim * p.grade
    # negative angles so the sample vector is the DFT of the coefficient vector
    pts = np.exp(-2j * np.pi * np.arange(m + 1) / (m + 1))
    vals = np.array([np.linalg.det(eval_at(p, z)) for z in pts])
    return np.fft.ifft(vals)


def det_poly_exact(p: MatPoly) -> list:
    """Exact big-integer coefficients of det a(z) for integer monomial input.

    Evaluates at the integer points 0..r*s and interpolates exactly.
    """
    if p.basis.kind != MONOMIAL:
        raise StructuralError("exact determinant path needs a monomial polynomial")
    coeffs = _int_stack(p.data)
    m = p.dim * p.grade
    xs = list(range(m + 1))
    ys = []
    for x in xs:
        mat = [[0] * p.dim for _ in range(p.dim)]
        for k in range(p.grade, -1, -1):
            for i in range(p.dim):
                row = mat[i]
                crow = coeffs[k][i]
                for j in range(p.dim):
                    row[j] = row[j] * x + crow[j]
        ys.append(exact_det(mat))
    return interp_int(xs, ys)


def _int_stack(data) -> list:
    out = []
    for mat in data:
        rows = []
        for row in np.asarray(mat).tolist():
            ints = []
            for x in row:
                if isinstance(x, complex):
                    if x.imag != 0 or x.real != int(x.real):
                        raise StructuralError("entries are not exact integers")
                    x = x.real
                if isinstance(x, float):
                    if x != int(x):
                        raise StructuralError("entries are not exact integers")
                ints.append(int(x))
            rows.append(ints)
        out.append(rows)
    return out


@dataclass
class HeightReport:
    """Entry-magnitude profile of a matrix.

    t_metric is min |nonzero entry| / height, a sensitivity proxy; it is None
    (undefined) for the zero matrix.
    """

    height: float
    t_metric: float | None
    is_bohemian_01: bool
    is_height1_integer: bool


def height_report(mat) -> HeightReport:
    arr = np.asarray(mat)
    mags = np.abs(arr).astype(float)
    height = float(mags.max()) if arr.size else 0.0
    nz = mags[mags > 0]
    t_metric = float(nz.min() / height) if nz.size else None
    flat = arr.ravel()
    is_01 = bool(all(x == 0 or x == -1 for x in flat))
    is_h1 = bool(all(x == 0 or x == -1 or x == 1 for x in flat))
    return HeightReport(height, t_metric, is_01, is_h1)
