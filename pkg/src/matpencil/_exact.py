"""Exact integer and rational linear algebra used by the big-integer code paths.

Everything here works on plain Python ints / Fractions (arbitrary precision);
no floating point enters these routines.
"""

from fractions import Fraction


def is_upper_hessenberg(rows):
    n = len(rows)
    return all(rows[i][j] == 0 for i in range(n) for j in range(n) if i > j + 1)


def hessenberg_det(rows):
    """Determinant of an upper Hessenberg matrix via the leading-minor recurrence.

    O(n^2) exact multiplications instead of O(n^3) elimination.  Expanding the
    k-th leading minor along its last column, the cofactor of entry (i, k) is
    the (i-1)-th minor times the product of the subdiagonal entries between
    rows i and k.
    """
    n = len(rows)
    if n == 0:
        return 1
    minors = [1, rows[0][0]]
    for k in range(2, n + 1):
        total = rows[k - 1][k - 1] * minors[k - 1]
        prod = 1
        sign = -1
        for i in range(k - 1, 0, -1):
            prod = prod * rows[i][i - 1]
            total = total + sign * rows[i - 1][k - 1] * minors[i - 1] * prod
            sign = -sign
        minors.append(total)
    return minors[n]


def bareiss_det(rows):
    """Fraction-free determinant (Bareiss elimination) of an integer matrix."""
    m = [list(row) for row in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def exact_det(rows):
    """Exact determinant; picks the Hessenberg recurrence when it applies."""
    if is_upper_hessenberg(rows):
        return hessenberg_det(rows)
    return bareiss_det(rows)


def newton_interp(xs, ys):
    """Interpolating polynomial through (xs[i], ys[i]), exact rational arithmetic.

    Returns coefficients low-to-high as Fractions.  O(n^2).
    """
    n = len(xs)
    dd = [Fraction(y) for y in ys]
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level])
    # Horner assembly of the Newton form
    coeffs = [Fraction(0)] * n
    coeffs[0] = dd[n - 1]
    deg = 0
    for k in range(n - 2, -1, -1):
        # multiply by (x - xs[k]), then add dd[k]
        for i in range(deg, -1, -1):
            coeffs[i + 1] += coeffs[i]
            coeffs[i] = -coeffs[i] * xs[k]
        deg += 1
        coeffs[0] += dd[k]
    return coeffs


def interp_int(xs, ys):
    """Like newton_interp but asserts the result is an integer polynomial."""
    coeffs = newton_interp(xs, ys)
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise ArithmeticError("interpolation of integer data produced a non-integer")
        out.append(int(c))
    return out


def fraction_inverse(rows):
    """Gauss-Jordan inverse over Fractions; raises on singular input."""
    n = len(rows)
    a = [[Fraction(x) for x in row] for row in rows]
    inv = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        inv[col] = [x / p for x in inv[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    return inv
