"""Exact integer and rational linear algebra.

Everything here works on Python ints and :class:`fractions.Fraction`, so
no value is ever rounded.  Vectors are plain tuples of ints; matrices are
sequences of rows.
"""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

from .errors import DimensionError, InvalidBasis, NotInLattice, NotInSpan

LatticeVector = tuple[int, ...]
IntegerMatrix = Sequence[Sequence[int]]

__all__ = [
    "LatticeVector",
    "IntegerMatrix",
    "unit",
    "vadd",
    "vscale",
    "dot",
    "det",
    "rank",
    "express_in_basis",
    "solve_rational",
    "find_feasible_point",
]


def unit(n: int, i: int) -> LatticeVector:
    """The standard basis vector e_i of Z^n (1-based index)."""
    if not 1 <= i <= n:
        raise DimensionError(f"index {i} outside 1..{n}")
    return tuple(1 if j == i - 1 else 0 for j in range(n))


def vadd(*vs: Sequence[int]) -> LatticeVector:
    if not vs:
        raise DimensionError("vadd needs at least one vector")
    n = len(vs[0])
    if any(len(v) != n for v in vs):
        raise DimensionError("vectors of different lengths")
    return tuple(sum(c) for c in zip(*vs))


def vscale(c: int, v: Sequence[int]) -> LatticeVector:
    return tuple(c * x for x in v)


def dot(u: Sequence, v: Sequence):
    if len(u) != len(v):
        raise DimensionError(f"length mismatch {len(u)} != {len(v)}")
    return sum(a * b for a, b in zip(u, v))


def det(m: IntegerMatrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination.

    >>> det([[3, -2], [0, 4]])
    12
    """
    k = len(m)
    if any(len(row) != k for row in m):
        raise DimensionError("det requires a square matrix")
    if k == 0:
        return 1
    a = [list(map(int, row)) for row in m]
    sign = 1
    prev = 1
    for p in range(k - 1):
        if a[p][p] == 0:
            for r in range(p + 1, k):
                if a[r][p] != 0:
                    a[p], a[r] = a[r], a[p]
                    sign = -sign
                    break
            else:
                return 0
        piv = a[p][p]
        for i in range(p + 1, k):
            ai = a[i]
            aip = ai[p]
            ap = a[p]
            for j in range(p + 1, k):
                # exact division is guaranteed by Sylvester's identity
                ai[j] = (ai[j] * piv - aip * ap[j]) // prev
            ai[p] = 0
        prev = piv
    return sign * a[k - 1][k - 1]


def rank(vectors: Sequence[Sequence[int]]) -> int:
    """Rank over Q of a list of integer vectors (fraction-free)."""
    if len(vectors) == 0:
        return 0
    n = len(vectors[0])
    if any(len(v) != n for v in vectors):
        raise DimensionError("vectors must share ambient dimension")
    a = [list(map(int, v)) for v in vectors]
    rows = len(a)
    r = 0
    prev = 1
    for c in range(n):
        if r == rows:
            break
        piv_row = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv_row is None:
            continue
        a[r], a[piv_row] = a[piv_row], a[r]
        piv = a[r][c]
        for i in range(r + 1, rows):
            aic = a[i][c]
            for j in range(c + 1, n):
                a[i][j] = (a[i][j] * piv - aic * a[r][j]) // prev
            a[i][c] = 0
        # rows above r in the skipped columns are untouched, Bareiss stays exact
        prev = piv
        r += 1
    return r


def _row_reduce(aug: list[list[Fraction]], ncols: int) -> list[int]:
    """Gauss-Jordan in place on the first ``ncols`` columns; return pivot columns."""
    rows = len(aug)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, rows) if aug[i][c] != 0), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return pivots


def solve_rational(
    v: Sequence[int | Fraction], basis: Sequence[Sequence[int | Fraction]]
) -> tuple[Fraction, ...]:
    """Rational coefficients c with sum(c_i * basis_i) == v.

    Raises InvalidBasis for dependent basis vectors and NotInSpan when v
    is outside their rational span.
    """
    k = len(basis)
    n = len(v)
    if any(len(b) != n for b in basis):
        raise DimensionError("basis vectors must match the length of v")
    # columns are basis vectors, last column is v
    aug = [[Fraction(basis[j][i]) for j in range(k)] + [Fraction(v[i])] for i in range(n)]
    pivots = _row_reduce(aug, k)
    if len(pivots) < k:
        raise InvalidBasis(f"basis of {k} vectors has rank {len(pivots)}")
    for i in range(k, n):
        if aug[i][k] != 0:
            raise NotInSpan(f"{tuple(v)} is not in the rational span of the basis")
    return tuple(aug[i][k] for i in range(k))


def express_in_basis(v: Sequence[int], basis: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Integer coordinates of v in a lattice basis.

    >>> express_in_basis((1, 0, 2), [(1, 2, 0), (1, 1, 1)])
    (-1, 2)

    Raises NotInLattice if v lies in the rational span but not in the
    lattice spanned by ``basis``.
    """
    coeffs = solve_rational(v, basis)
    if any(c.denominator != 1 for c in coeffs):
        raise NotInLattice(f"{tuple(v)} has non-integral coordinates {coeffs}")
    return tuple(int(c) for c in coeffs)


def find_feasible_point(
    eq_rows: Sequence[Sequence] = (),
    eq_rhs: Sequence = (),
    ge_rows: Sequence[Sequence] = (),
    ge_rhs: Sequence = (),
    *,
    nvars: int | None = None,
    free: bool = False,
) -> tuple[Fraction, ...] | None:
    """Exact feasibility of a linear system over Q.

    Looks for x with ``eq_rows @ x == eq_rhs`` and ``ge_rows @ x >= ge_rhs``,
    where x >= 0 unless ``free`` is set.  Returns a feasible point or None.
    Phase-one simplex with Bland's rule, so it always terminates.
    """
    rows_all = list(eq_rows) + list(ge_rows)
    if nvars is None:
        if not rows_all:
            raise DimensionError("cannot infer the number of variables")
        nvars = len(rows_all[0])
    if len(eq_rows) != len(eq_rhs) or len(ge_rows) != len(ge_rhs):
        raise DimensionError("row/rhs count mismatch")
    if any(len(r) != nvars for r in rows_all):
        raise DimensionError("constraint rows must have nvars entries")

    # column layout: [x (or x+, x-)] [surplus per ge row] [artificials]
    nx = 2 * nvars if free else nvars
    n_ge = len(ge_rows)
    ncols = nx + n_ge

    def expand(row):
        row = [Fraction(x) for x in row]
        return row + [-x for x in row] if free else row

    table: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    basis: list[int | None] = []
    for row, b in zip(eq_rows, eq_rhs):
        r = expand(row) + [Fraction(0)] * n_ge
        b = Fraction(b)
        if b < 0:
            r, b = [-x for x in r], -b
        table.append(r)
        rhs.append(b)
        basis.append(None)
    for t, (row, b) in enumerate(zip(ge_rows, ge_rhs)):
        r = expand(row) + [Fraction(0)] * n_ge
        b = Fraction(b)
        if b <= 0:
            # -a.x + s = -b >= 0: the surplus s starts basic, no artificial needed
            r = [-x for x in r]
            r[nx + t] = Fraction(1)
            table.append(r)
            rhs.append(-b)
            basis.append(nx + t)
        else:
            r[nx + t] = Fraction(-1)
            table.append(r)
            rhs.append(b)
            basis.append(None)
    m = len(table)
    needs_art = [i for i in range(m) if basis[i] is None]
    n_art = len(needs_art)
    total = ncols + n_art
    tab = []
    for i in range(m):
        art = [Fraction(0)] * n_art
        if basis[i] is None:
            a = needs_art.index(i)
            art[a] = Fraction(1)
            basis[i] = ncols + a
        tab.append(table[i] + art + [rhs[i]])
    # phase-one objective: minimize the sum of artificials (reduced costs)
    cost = [Fraction(0)] * (total + 1)
    for i in needs_art:
        row = tab[i]
        for j in range(total + 1):
            if row[j]:
                cost[j] -= row[j]
    for a in range(n_art):
        cost[ncols + a] += 1

    while True:
        enter = next((j for j in range(total) if cost[j] < 0), None)
        if enter is None:
            break
        best = None
        leave = None
        for i in range(m):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            # unbounded direction in phase one cannot happen (objective >= 0)
            break
        piv = tab[leave][enter]
        prow = [x / piv for x in tab[leave]]
        nz = [j for j, x in enumerate(prow) if x]
        tab[leave] = prow
        for i in range(m):
            f = tab[i][enter]
            if i != leave and f:
                row = tab[i]
                for j in nz:
                    row[j] -= f * prow[j]
        f = cost[enter]
        for j in nz:
            cost[j] -= f * prow[j]
        basis[leave] = enter

    if -cost[-1] != 0:
        return None
    sol = [Fraction(0)] * total
    for i, b in enumerate(basis):
        sol[b] = tab[i][-1]
    if free:
        return tuple(sol[j] - sol[nvars + j] for j in range(nvars))
    return tuple(sol[:nvars])
