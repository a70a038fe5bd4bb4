"""Composable linearizations: build big pencils with standard triples from small ones.

Five composition rules (left/right scalar shift, two product layouts, the
lower-degree addition, and the composite z*a*d0*b + c0) plus three elementary
triples (second companion, barycentric Lagrange, Chebyshev colleague).  Every
constructor's output satisfies det(zD - A) = det of the composed polynomial
and carries X, Y realizing its inverse as a resolvent; the elementary
constructors pin their sign conventions against a one-point oracle check at
build time.
"""

from __future__ import annotations

import numpy as np

from .errors import ContractError, StructuralError, VerificationError
from .matpoly import LAGRANGE, CHEBYSHEV, MONOMIAL, MatPoly, eval_at
from .pencil import Pencil, StandardTriple, pivot_condition, resolvent_eval, verify_triple

_ORACLE_POINTS = (1.875 + 0.734j, -1.625 + 1.191j, 0.4375 - 1.953j, 2.0625 + 0.2188j)


def _square(mat, r: int, name: str) -> np.ndarray:
    arr = np.asarray(mat, dtype=complex)
    if arr.shape != (r, r):
        raise StructuralError(f"{name} must be {r}x{r}, got {arr.shape}")
    return arr


def as_unweighted(t: StandardTriple) -> StandardTriple:
    """Fold the weight D into Y: X (zD-A)^-1 D Y = X (zD-A)^-1 (DY)."""
    if not t.weighted:
        return t
    return StandardTriple(t.X.copy(), Pencil(t.pencil.D.copy(), t.pencil.A.copy(),
                                             t.pencil.block_meta),
                          t.pencil.D.astype(complex) @ t.Y.astype(complex),
                          weighted=False, grade=t.grade)


def scalar_shift_left(ta: StandardTriple, d0, c0) -> StandardTriple:
    """Triple for e1(z) = z * d0 * a(z) + c0."""
    ta = as_unweighted(ta)
    r, n = ta.r, ta.N
    d0 = _square(d0, r, "d0")
    c0 = _square(c0, r, "c0")
    A = ta.pencil.A.astype(complex)
    E1 = np.block([[np.zeros((r, r)), c0 @ ta.X],
                   [-ta.Y.astype(complex), A]])
    D1 = _blockdiag(d0, ta.pencil.D.astype(complex))
    X = np.hstack([np.zeros((r, r)), -ta.X])
    Y = np.vstack([np.eye(r), np.zeros((n, r))]).astype(complex)
    meta = {"blocks": [r, n]}
    grade = None if ta.grade is None else ta.grade + 1
    return StandardTriple(X, Pencil(D1, E1, meta), Y, weighted=False, grade=grade)


def scalar_shift_right(ta: StandardTriple, d0, c0) -> StandardTriple:
    """Triple for e2(z) = z * a(z) * d0 + c0."""
    ta = as_unweighted(ta)
    r, n = ta.r, ta.N
    d0 = _square(d0, r, "d0")
    c0 = _square(c0, r, "c0")
    A = ta.pencil.A.astype(complex)
    E2 = np.block([[A, ta.Y.astype(complex) @ c0],
                   [-ta.X.astype(complex), np.zeros((r, r))]])
    D2 = _blockdiag(ta.pencil.D.astype(complex), d0)
    X = np.hstack([np.zeros((r, n)), np.eye(r)]).astype(complex)
    Y = np.vstack([-ta.Y.astype(complex), np.zeros((r, r))])
    meta = {"blocks": [n, r]}
    grade = None if ta.grade is None else ta.grade + 1
    return StandardTriple(X, Pencil(D2, E2, meta), Y, weighted=False, grade=grade)


def product(ta: StandardTriple, tb: StandardTriple, variant: str = "F2") -> StandardTriple:
    """Triple for a(z) * b(z); resolvent is b^-1(z) a^-1(z).

    F1 stacks the a-pencil first with the coupling block below the diagonal;
    F2 stacks the b-pencil first with the coupling block above, which is the
    layout that stays block upper Hessenberg under recursion.
    """
    ta = as_unweighted(ta)
    tb = as_unweighted(tb)
    if ta.r != tb.r:
        raise StructuralError("factors must share the polynomial dimension r")
    na, nb, r = ta.N, tb.N, ta.r
    A = ta.pencil.A.astype(complex)
    B = tb.pencil.A.astype(complex)
    couple = tb.Y.astype(complex) @ ta.X.astype(complex)
    if variant == "F1":
        F = np.block([[A, np.zeros((na, nb))], [couple, B]])
        D = _blockdiag(ta.pencil.D.astype(complex), tb.pencil.D.astype(complex))
        X = np.hstack([np.zeros((r, na)), tb.X])
        Y = np.vstack([ta.Y.astype(complex), np.zeros((nb, r))])
        meta = {"blocks": [na, nb]}
    elif variant == "F2":
        F = np.block([[B, couple], [np.zeros((na, nb)), A]])
        D = _blockdiag(tb.pencil.D.astype(complex), ta.pencil.D.astype(complex))
        X = np.hstack([tb.X, np.zeros((r, na))])
        Y = np.vstack([np.zeros((nb, r)), ta.Y.astype(complex)])
        meta = {"blocks": [nb, na]}
    else:
        raise ContractError(f"variant must be 'F1' or 'F2', got {variant!r}")
    grade = None if None in (ta.grade, tb.grade) else ta.grade + tb.grade
    return StandardTriple(X, Pencil(D, F, meta), Y, weighted=False, grade=grade)


def add_lower_degree(ta: StandardTriple, c: MatPoly,
                     a_poly: MatPoly | None = None, tol: float = 1e-8) -> StandardTriple:
    """Triple for a(z) + c(z), deg c < deg a, by correcting A in place.

    G = A - sum_k A^k Y c_k X keeps the pencil size and the (X, Y, weighted)
    data of the input.  When `a_poly` is supplied, the output is verified
    against a + c and a failure raises instead of returning a bad triple.
    """
    if c.basis.kind != MONOMIAL:
        raise ContractError("the added polynomial must be in the monomial basis")
    if ta.grade is None:
        raise ContractError("input triple does not know its grade")
    if ta.grade < 1:
        raise ContractError("cannot add to a grade-0 triple")
    if c.dim != ta.r:
        raise StructuralError("dimension mismatch between triple and added polynomial")
    if c.grade >= ta.grade:
        raise ContractError(f"deg c = {c.grade} must be below deg a = {ta.grade}")
    A = ta.pencil.A.astype(complex)
    X = ta.X.astype(complex)
    Y = ta.Y.astype(complex)
    G = A.copy()
    power = Y.copy()  # A^k Y, starting at k = 0
    for k in range(c.grade + 1):
        ck = np.asarray(c.data[k], dtype=complex)
        if np.any(ck != 0):
            G -= power @ ck @ X
        if k < c.grade:
            power = A @ power
    out = StandardTriple(X, Pencil(ta.pencil.D.astype(complex).copy(), G,
                                   ta.pencil.block_meta),
                         Y, weighted=ta.weighted, grade=ta.grade)
    if a_poly is not None:
        summed = _padded_sum(a_poly, c)
        report = verify_triple(out, summed, tol=tol, rng=np.random.default_rng(0))
        if not report.passed:
            raise VerificationError(f"lower-degree addition failed its check: {report}")
    return out


def _padded_sum(a: MatPoly, c: MatPoly) -> MatPoly:
    if a.basis.kind != MONOMIAL:
        raise ContractError("verification of an addition needs monomial a")
    data = np.array(a.data, dtype=complex)
    data[: c.grade + 1] += np.asarray(c.data, dtype=complex)
    return MatPoly.monomial_poly(data)


def composite(ta: StandardTriple, tb: StandardTriple, d0, c0) -> StandardTriple:
    """Triple for h(z) = z * a(z) * d0 * b(z) + c0, the glued three-block pencil."""
    ta = as_unweighted(ta)
    tb = as_unweighted(tb)
    if ta.r != tb.r:
        raise StructuralError("components must share the polynomial dimension r")
    r, na, nb = ta.r, ta.N, tb.N
    d0 = _square(d0, r, "d0")
    c0 = _square(c0, r, "c0")
    A = ta.pencil.A.astype(complex)
    B = tb.pencil.A.astype(complex)
    Xa, Ya = ta.X.astype(complex), ta.Y.astype(complex)
    Xb, Yb = tb.X.astype(complex), tb.Y.astype(complex)
    H = np.block([
        [A, np.zeros((na, r)), -Ya @ c0 @ Xb],
        [-Xa, np.zeros((r, r)), np.zeros((r, nb))],
        [np.zeros((nb, na)), -Yb, B],
    ])
    D = _blockdiag(ta.pencil.D.astype(complex), d0, tb.pencil.D.astype(complex))
    X = np.hstack([np.zeros((r, na + r)), Xb])
    Y = np.vstack([Ya, np.zeros((r + nb, r))])
    meta = {"blocks": [na, r, nb], "zero_middle_A_block": True}
    grade = None if None in (ta.grade, tb.grade) else ta.grade + tb.grade + 1
    return StandardTriple(X, Pencil(D, H, meta), Y, weighted=False, grade=grade)


def _blockdiag(*mats) -> np.ndarray:
    n = sum(m.shape[0] for m in mats)
    out = np.zeros((n, n), dtype=complex)
    at = 0
    for m in mats:
        k = m.shape[0]
        out[at:at + k, at:at + k] = m
        at += k
    return out


def _pin_signs(t: StandardTriple, p, where: str) -> StandardTriple:
    """Flip the sign of Y once if the resolvent comes out negated; else error.

    Sign conventions of companion layouts differ between sources; a single
    oracle point settles ours at construction time.
    """
    for z in _ORACLE_POINTS:
        az = eval_at(p, z)
        if pivot_condition(t.pencil.at(z)) > 1e10 or pivot_condition(az) > 1e10:
            continue
        want = np.linalg.inv(az)
        scale = np.linalg.norm(want)
        got = resolvent_eval(t, z)
        if np.linalg.norm(got - want) <= 1e-6 * scale:
            return t
        flipped = StandardTriple(t.X, t.pencil, -t.Y, weighted=t.weighted, grade=t.grade)
        got = resolvent_eval(flipped, z)
        if np.linalg.norm(got - want) <= 1e-6 * scale:
            return flipped
        raise VerificationError(f"{where}: resolvent mismatch is not a sign flip")
    raise VerificationError(f"{where}: no oracle point avoided the spectrum")


def frobenius_triple(p: MatPoly) -> StandardTriple:
    """Second companion triple of a monomial polynomial (grade >= 1).

    Coefficient blocks sit in the last block column, identities on the block
    subdiagonal; D = blockdiag(I, ..., I, alpha_s).  A singular or non-identity
    leading coefficient yields the weighted flavour (for grade >= 2 the first
    diagonal block of D is I, so both resolvent forms agree).
    """
    if p.basis.kind != MONOMIAL:
        raise ContractError("second companion form needs monomial coefficients")
    s, r = p.grade, p.dim
    if s < 1:
        raise ContractError("grade must be at least 1")
    coeffs = np.asarray(p.data, dtype=complex)
    n = s * r
    A = np.zeros((n, n), dtype=complex)
    for i in range(1, s):
        A[i * r:(i + 1) * r, (i - 1) * r:i * r] = np.eye(r)
    for i in range(s):
        A[i * r:(i + 1) * r, (s - 1) * r:] = -coeffs[i]
    D = np.eye(n, dtype=complex)
    D[(s - 1) * r:, (s - 1) * r:] = coeffs[s]
    X = np.zeros((r, n), dtype=complex)
    X[:, (s - 1) * r:] = np.eye(r)
    Y = np.zeros((n, r), dtype=complex)
    Y[:r, :] = np.eye(r)
    monic = bool(np.array_equal(coeffs[s], np.eye(r)))
    weighted = (not monic) and s >= 2  # for s = 1, D Y = alpha_s Y: only the plain form holds
    meta = {"blocks": [r] * s, "hessenberg": True}
    t = StandardTriple(X, Pencil(D, A, meta), Y, weighted=weighted, grade=s)
    return _pin_signs(t, p, "second companion")


def lagrange_triple(p: MatPoly) -> StandardTriple:
    """Barycentric Lagrange triple: node blocks on the diagonal, samples in the
    last block column, weights in the last block row.

    The pencil is (D, A) = (-A1, -A0) so that zD - A = A0 - z*A1 and the
    determinant equals det a(z) directly.
    """
    if p.basis.kind != LAGRANGE:
        raise ContractError("lagrange triple needs a lagrange-basis polynomial")
    nodes = p.basis.nodes
    weights = p.basis.weights
    if nodes.size < 2:
        raise ContractError("need at least two nodes")
    r = p.dim
    m = nodes.size  # = grade + 1
    n = (m + 1) * r
    A0 = np.zeros((n, n), dtype=complex)
    for k in range(m):
        A0[k * r:(k + 1) * r, k * r:(k + 1) * r] = -nodes[k] * np.eye(r)
        A0[k * r:(k + 1) * r, m * r:] = np.asarray(p.data[k], dtype=complex)
        A0[m * r:, k * r:(k + 1) * r] = -weights[k] * np.eye(r)
    A1 = np.zeros((n, n), dtype=complex)
    A1[: m * r, : m * r] = -np.eye(m * r)
    X = np.zeros((r, n), dtype=complex)
    X[:, m * r:] = np.eye(r)
    Y = np.zeros((n, r), dtype=complex)
    for k in range(m):
        Y[k * r:(k + 1) * r, :] = np.eye(r)
    meta = {"blocks": [r] * (m + 1), "zero_D_block": True}
    t = StandardTriple(X, Pencil(-A1, -A0, meta), Y, weighted=False, grade=p.grade)
    return _pin_signs(t, p, "lagrange pencil")


def chebyshev_triple(p: MatPoly) -> StandardTriple:
    """Colleague triple for a Chebyshev-basis polynomial of grade n >= 1.

    Superdiagonal halves carry the three-term recurrence; the leading
    coefficient enters through the last diagonal block of D and a correction
    in the next-to-last entry of the coefficient column.  Block rows 3..n of
    the textbook layout are doubled so the pencil determinant equals det b(z)
    exactly (the plain layout is off by 2^((2-n)r)); Y lives in the first
    block, so the resolvent is unchanged by that row scaling.
    """
    if p.basis.kind != CHEBYSHEV:
        raise ContractError("colleague triple needs chebyshev coefficients")
    n, r = p.grade, p.dim
    if n < 1:
        raise ContractError("grade must be at least 1")
    b = np.asarray(p.data, dtype=complex)
    if n == 1:
        t = StandardTriple(np.eye(r, dtype=complex),
                           Pencil(b[1].copy(), -b[0], {"blocks": [r]}),
                           np.eye(r, dtype=complex), weighted=False, grade=1)
        return _pin_signs(t, p, "colleague pencil")
    N = n * r
    B0 = np.zeros((N, N), dtype=complex)
    B1 = np.eye(N, dtype=complex)
    B1[(n - 1) * r:, (n - 1) * r:] = 2.0 * b[n]
    half = 0.5 * np.eye(r)
    for i in range(n - 1):  # superdiagonal, skipping the slot the last column owns
        if i != n - 2:
            B0[i * r:(i + 1) * r, (i + 1) * r:(i + 2) * r] = half
    B0[r:2 * r, :r] = np.eye(r)
    for i in range(2, n):
        B0[i * r:(i + 1) * r, (i - 1) * r:i * r] = half
    for i in range(n):
        B0[i * r:(i + 1) * r, (n - 1) * r:] += -b[i]
    B0[(n - 2) * r:(n - 1) * r, (n - 1) * r:] += b[n]
    if n >= 3:
        B0[2 * r:, :] *= 2.0
        B1[2 * r:, :] *= 2.0
    X = np.zeros((r, N), dtype=complex)
    X[:, (n - 1) * r:] = np.eye(r)
    Y = np.zeros((N, r), dtype=complex)
    Y[:r, :] = np.eye(r)
    weighted = pivot_condition(b[n]) > 1e12  # singular leading block
    meta = {"blocks": [r] * n, "hessenberg": True}
    t = StandardTriple(X, Pencil(B1, B0, meta), Y, weighted=weighted, grade=n)
    return _pin_signs(t, p, "colleague pencil")
