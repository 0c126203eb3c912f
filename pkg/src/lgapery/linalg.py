"""Exact integer / rational linear algebra helpers.

Everything works on plain Python ints and ``fractions.Fraction``. Matrices are
lists of rows. Problem sizes are tiny (a few dozen rows), so the code favors
exactness and determinism over asymptotics.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd: (g, s, t) with g = s*a + t*b and g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def vector_gcd(v) -> int:
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    return g


def primitive_vector(v) -> tuple[int, ...]:
    """Divide out the gcd of the entries (sign preserved, zero stays zero)."""
    g = vector_gcd(v)
    if g == 0:
        return tuple(v)
    return tuple(x // g for x in v)


def dot(u, v) -> int:
    return sum(a * b for a, b in zip(u, v))


def cross3(u, v) -> tuple[int, int, int]:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def det_int(rows) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    n = len(rows)
    m = [list(r) for r in rows]
    if any(len(r) != n for r in m):
        raise ValueError("matrix is not square")
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
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def rank_int(rows) -> int:
    """Rank of an integer matrix (exact, via Fraction elimination)."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def invert_fraction_matrix(rows) -> list[list[Fraction]]:
    """Inverse of a square matrix over the rationals (Gauss-Jordan)."""
    n = len(rows)
    aug = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)]
           for i, r in enumerate(rows)]
    for c in range(n):
        piv = None
        for i in range(c, n):
            if aug[i][c] != 0:
                piv = i
                break
        if piv is None:
            raise ValueError("matrix is singular")
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [row[n:] for row in aug]


def solve_row_combination(basis_rows, target) -> tuple[Fraction, ...]:
    """Coefficients c with sum_i c[i] * basis_rows[i] == target (rows of full rank).

    Raises ValueError if the system has no solution.
    """
    n = len(basis_rows)
    d = len(target)
    # Solve B^T c = target by elimination on the transposed system.
    aug = [[Fraction(basis_rows[i][j]) for i in range(n)] + [Fraction(target[j])]
           for j in range(d)]
    piv_cols: list[int] = []
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, d):
            if aug[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(d):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        piv_cols.append(c)
        r += 1
    sol = [Fraction(0)] * n
    for i, c in enumerate(piv_cols):
        sol[c] = aug[i][n]
    for i in range(r, d):
        if aug[i][n] != 0:
            raise ValueError("target is not in the row span")
    return tuple(sol)


def kernel_basis_of_functional(u) -> list[tuple[int, ...]]:
    """Basis of the integer lattice {v : <u, v> = 0} for a nonzero vector u.

    Returned as len(u)-1 rows in Hermite normal form (canonical).
    """
    d = len(u)
    if all(x == 0 for x in u):
        raise ValueError("zero functional")
    # Column operations bringing u to (g, 0, ..., 0); the transformed columns
    # 1..d-1 then span the kernel lattice (saturated since g = gcd).
    cols = [[int(i == j) for i in range(d)] for j in range(d)]
    v = list(u)
    for i in range(1, d):
        a, b = v[0], v[i]
        if b == 0:
            continue
        g, s, t = xgcd(a, b)
        c0 = [s * cols[0][k] + t * cols[i][k] for k in range(d)]
        ci = [(-b // g) * cols[0][k] + (a // g) * cols[i][k] for k in range(d)]
        cols[0], cols[i] = c0, ci
        v[0], v[i] = g, 0
    basis = [tuple(col) for col in cols[1:]]
    return hnf_rows(basis)


def hnf_rows(rows) -> list[tuple[int, ...]]:
    """Row Hermite normal form: positive pivots, entries above a pivot reduced
    into [0, pivot). Zero rows are dropped. The result is the canonical basis
    of the row lattice."""
    m = [list(r) for r in rows]
    if not m:
        return []
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        # Gather the column gcd into row r by repeated remainder steps.
        while True:
            nz = [i for i in range(r, len(m)) if m[i][c] != 0]
            if not nz:
                break
            i_min = min(nz, key=lambda i: (abs(m[i][c]), i))
            m[r], m[i_min] = m[i_min], m[r]
            done = True
            for i in range(r + 1, len(m)):
                if m[i][c] != 0:
                    q = m[i][c] // m[r][c]
                    m[i] = [x - q * y for x, y in zip(m[i], m[r])]
                    if m[i][c] != 0:
                        done = False
            if done:
                break
        if r < len(m) and m[r][c] != 0:
            if m[r][c] < 0:
                m[r] = [-x for x in m[r]]
            for i in range(r):
                q = m[i][c] // m[r][c]
                if q:
                    m[i] = [x - q * y for x, y in zip(m[i], m[r])]
            r += 1
            if r == len(m):
                break
    return [tuple(row) for row in m[:r] if any(row)]


def solve_functional_equals_one(u) -> tuple[int, ...]:
    """Integer vector w with <u, w> = 1 for a primitive vector u.

    Built by folding the extended Euclidean algorithm over the entries, so the
    result is deterministic and small.
    """
    g = 0
    coeffs: list[int] = []
    for x in u:
        g2, s, t = xgcd(g, x)
        coeffs = [c * s for c in coeffs]
        coeffs.append(t)
        g = g2
    if g != 1:
        raise ValueError("functional is not primitive")
    return tuple(coeffs)


def _clear_denominators(row) -> list[int]:
    lcm = 1
    for x in row:
        if isinstance(x, Fraction):
            d = x.denominator
            lcm = lcm * d // gcd(lcm, d)
    return [int(x * lcm) for x in row]


def _bareiss_echelon(rows):
    """Fraction-free row echelon form of an integer matrix.

    Returns (echelon_rows, pivot_columns). Divisions are exact by the Bareiss
    minor identity; a runtime check guards the assumption.
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    prev = 1
    piv_cols: list[int] = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, nrows):
            x = m[i][c]
            row_r = m[r]
            row_i = m[i]
            pv = row_r[c]
            for j in range(c + 1, ncols):
                num = pv * row_i[j] - x * row_r[j]
                q, rem = divmod(num, prev)
                if rem:
                    raise ArithmeticError("inexact division in Bareiss step")
                row_i[j] = q
            row_i[c] = 0
        prev = m[r][c]
        piv_cols.append(c)
        r += 1
        if r == nrows:
            break
    return m[:r], piv_cols


def nullspace(rows, ncols: int) -> list[tuple[Fraction, ...]]:
    """Right nullspace basis of a rational matrix, via fraction-free
    elimination on the denominator-cleared integer matrix.

    Returns one vector per free column, each normalized to integer entries
    with content 1 and first nonzero entry positive, in free-column order.
    """
    int_rows = [_clear_denominators(r) for r in rows if any(r)]
    if not int_rows:
        ech: list[list[int]] = []
        piv_cols: list[int] = []
    else:
        try:
            ech, piv_cols = _bareiss_echelon(int_rows)
        except ArithmeticError:
            return _nullspace_fraction(rows, ncols)
    return _back_substitute(ech, piv_cols, ncols)


def _back_substitute(ech, piv_cols, ncols) -> list[tuple[Fraction, ...]]:
    piv_set = set(piv_cols)
    free_cols = [c for c in range(ncols) if c not in piv_set]
    basis = []
    for f in free_cols:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for i in range(len(piv_cols) - 1, -1, -1):
            c = piv_cols[i]
            s = Fraction(0)
            for j in range(c + 1, ncols):
                if ech[i][j] and x[j]:
                    s += ech[i][j] * x[j]
            x[c] = -s / ech[i][c]
        basis.append(_normalize_vector(x))
    return basis


def _nullspace_fraction(rows, ncols: int) -> list[tuple[Fraction, ...]]:
    """Plain rational Gaussian elimination nullspace (reference path)."""
    m = [[Fraction(x) for x in r] for r in rows if any(r)]
    piv_cols: list[int] = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        piv_cols.append(c)
        r += 1
        if r == len(m):
            break
    return _back_substitute([m[i] for i in range(r)], piv_cols, ncols)


def nullspace_reference(rows, ncols: int) -> list[tuple[Fraction, ...]]:
    """Independent nullspace (no fraction-free tricks), for cross-checking."""
    return _nullspace_fraction(rows, ncols)


def _normalize_vector(x) -> tuple[Fraction, ...]:
    """Scale a rational vector to integer entries, content 1, first nonzero
    entry positive."""
    lcm = 1
    for v in x:
        d = v.denominator
        lcm = lcm * d // gcd(lcm, d)
    ints = [int(v * lcm) for v in x]
    g = vector_gcd(ints)
    if g:
        ints = [v // g for v in ints]
    for v in ints:
        if v != 0:
            if v < 0:
                ints = [-w for w in ints]
            break
    return tuple(Fraction(v) for v in ints)
