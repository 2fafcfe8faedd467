"""Exact linear algebra over the rationals and the integers.

Everything here works on tuples of :class:`fractions.Fraction` (vectors) and
tuples of such tuples (row-major matrices).  No floating point is used
anywhere; parity questions about huge integers are the whole point of the
package, so all arithmetic is exact.
"""

from fractions import Fraction
from math import gcd, lcm

Vec = tuple  # tuple of Fraction (or int)
Mat = tuple  # tuple of Vec, row-major


def vec(values):
    return tuple(Fraction(x) for x in values)


def add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def neg(u):
    return tuple(-a for a in u)


def scale(c, u):
    c = Fraction(c)
    return tuple(c * a for a in u)


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def is_zero(u):
    return all(a == 0 for a in u)


def zero(n):
    return (Fraction(0),) * n


def unit(n, i):
    return tuple(Fraction(1 if j == i else 0) for j in range(n))


def mat_vec(m, v):
    return tuple(dot(row, v) for row in m)


def identity(n):
    return tuple(unit(n, i) for i in range(n))


def mat_mul(a, b):
    bt = list(zip(*b))
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def transpose(m):
    return tuple(zip(*m))


def solve(a_rows, b):
    """Solve ``A x = b`` exactly; return the solution vector or None.

    ``a_rows`` need not be square.  When the system is underdetermined one
    particular solution is returned (free variables set to 0); when it is
    inconsistent, None.
    """
    nrows = len(a_rows)
    ncols = len(a_rows[0]) if nrows else 0
    m = [list(map(Fraction, row)) + [Fraction(bi)] for row, bi in zip(a_rows, b)]
    piv_cols = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        piv_cols.append(c)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if m[i][ncols] != 0:
            return None
    sol = [Fraction(0)] * ncols
    for i, c in enumerate(piv_cols):
        sol[c] = m[i][ncols]
    return tuple(sol)


def mat_inv(m):
    """Exact inverse of a square rational matrix (raises on singular input)."""
    n = len(m)
    aug = [list(map(Fraction, m[i])) + list(unit(n, i)) for i in range(n)]
    for c in range(n):
        piv = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return tuple(tuple(row[n:]) for row in aug)


def rank(m):
    if not m:
        return 0
    rows = [list(map(Fraction, r)) for r in m]
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(r + 1, len(rows)):
            if rows[i][c] != 0:
                f = rows[i][c] / rows[r][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
    return r


def lattice_coords(basis_rows, v):
    """Coordinates of ``v`` in the row span of ``basis_rows``, or None.

    The basis rows must be linearly independent.  Returns the (rational)
    coefficient vector x with ``x . basis = v``.
    """
    if not basis_rows:
        return () if is_zero(v) else None
    at = transpose(basis_rows)  # columns are basis vectors
    return solve(at, v)


def in_lattice(basis_rows, v):
    """True iff ``v`` is an integer combination of the basis rows."""
    x = lattice_coords(basis_rows, v)
    return x is not None and all(c.denominator == 1 for c in x)


def frac_gcd(values):
    """gcd of rationals: gcd(a/c, b/c) = gcd(a, b)/c after clearing denominators."""
    values = [Fraction(v) for v in values]
    den = lcm(*(v.denominator for v in values)) if values else 1
    num = 0
    for v in values:
        num = gcd(num, int(v * den))
    return Fraction(num, den)


def row_lattice_basis(rows):
    """A basis (independent rows) of the lattice generated by rational rows.

    Scales to an integer matrix, uses the Smith decomposition u m v = d to
    read off the row lattice as {d_ii * row_i(v^-1)}, and scales back.
    """
    rows = [vec(r) for r in rows if not is_zero(r)]
    if not rows:
        return ()
    den = lcm(*(x.denominator for row in rows for x in row))
    a = [[int(x * den) for x in row] for row in rows]
    d, _, v = smith_normal_form(a)
    v_inv = mat_inv(v)
    basis = []
    for i in range(min(len(d), len(d[0]))):
        if d[i][i] != 0:
            basis.append(tuple(Fraction(d[i][i] * x, den) for x in v_inv[i]))
    return tuple(basis)


def smith_normal_form(m):
    """Smith normal form of an integer matrix.

    Returns ``(d, u, v)`` with ``u m v = d``, ``u`` and ``v`` unimodular and
    ``d`` diagonal with d[i][i] | d[i+1][i+1].  Rows/entries are plain ints.
    """
    a = [[int(x) for x in row] for row in m]
    nr = len(a)
    nc = len(a[0]) if nr else 0
    u = [[int(i == j) for j in range(nr)] for i in range(nr)]
    v = [[int(i == j) for j in range(nc)] for i in range(nc)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, f):
        a[dst] = [x + f * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + f * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, f):
        for row in a:
            row[dst] += f * row[src]
        for row in v:
            row[dst] += f * row[src]

    t = 0
    while t < min(nr, nc):
        # find a nonzero pivot in the remaining block
        piv = None
        for i in range(t, nr):
            for j in range(t, nc):
                if a[i][j] != 0:
                    if piv is None or abs(a[i][j]) < abs(a[piv[0]][piv[1]]):
                        piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            # clear column t
            done = True
            for i in range(t + 1, nr):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    add_row(t, i, -q)
                    if a[i][t] != 0:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, nc):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    add_col(t, j, -q)
                    if a[t][j] != 0:
                        swap_cols(t, j)
                        done = False
            if done:
                break
        # make pivot divide the rest of the block
        redo = False
        for i in range(t + 1, nr):
            for j in range(t + 1, nc):
                if a[i][j] % a[t][t] != 0:
                    add_row(i, t, 1)
                    redo = True
                    break
            if redo:
                break
        if redo:
            continue
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1

    d = [[a[i][j] if i == j else 0 for j in range(nc)] for i in range(nr)]
    return (tuple(map(tuple, d)), tuple(map(tuple, u)), tuple(map(tuple, v)))
