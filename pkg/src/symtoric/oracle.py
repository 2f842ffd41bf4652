"""Brute-force re-derivations used by tests and ``symtoric verify``.

Nothing here imports the semigroup, cone, volume or euler modules.  The
generators are rebuilt from the rank-one parametrization
x_ij = t * s_i * s_j (s_1 = 1) of symmetric matrices, faces are found by
exact linear programming, face lattices by integer row reduction, and
coordinates by back-substitution in echelon form.  Only ``lattice.det``
and the exact LP solver are shared with the main path.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import prod

from .lattice import det, find_feasible_point

Vec = tuple[int, ...]


def rank_one_exponents(n: int) -> dict[tuple[int, int], Vec]:
    """Exponent vector in (t, s_2, ..., s_n) of each entry x_ij, i <= j."""
    out = {}
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            v = [0] * n
            v[0] = 1
            for idx in (i, j):
                if idx >= 2:
                    v[idx - 1] += 1
            out[(i, j)] = tuple(v)
    return out


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


@lru_cache(maxsize=None)
def extreme_generators(n: int) -> tuple[Vec, ...]:
    """Generators that are not non-negative combinations of the others."""
    gens = list(rank_one_exponents(n).values())
    extreme = []
    for a in gens:
        others = [b for b in gens if b != a]
        rows = [[b[c] for b in others] for c in range(n)]
        if find_feasible_point(rows, list(a), nvars=len(others)) is None:
            extreme.append(a)
    return tuple(extreme)


def diagonal_rays(n: int) -> dict[int, Vec]:
    """Ray i is the exponent of the diagonal entry x_ii."""
    exps = rank_one_exponents(n)
    return {i: exps[(i, i)] for i in range(1, n + 1)}


@lru_cache(maxsize=None)
def separating_form(n: int, subset: frozenset[int]) -> tuple | None:
    """A rational form zero on the subset's rays, >= 0 on all generators, >= 1 on other rays."""
    gens = list(rank_one_exponents(n).values())
    rays = diagonal_rays(n)
    eq_rows = [list(rays[i]) for i in sorted(subset)]
    ge_rows = [list(g) for g in gens]
    ge_rhs = [0] * len(gens)
    for j in range(1, n + 1):
        if j not in subset:
            ge_rows.append(list(rays[j]))
            ge_rhs.append(1)
    return find_feasible_point(eq_rows, [0] * len(eq_rows), ge_rows, ge_rhs, nvars=n, free=True)


def brute_force_face_check(n: int, subset) -> bool:
    subset = frozenset(getattr(subset, "ray_indices", subset))
    if not subset or not subset <= set(range(1, n + 1)):
        raise ValueError(f"subset must be a non-empty subset of 1..{n}")
    return separating_form(n, subset) is not None


def hermite_rows(vectors) -> list[Vec]:
    """Row-style echelon basis of the integer row span (Euclid on each column)."""
    rows = [list(v) for v in vectors if any(v)]
    if not rows:
        return []
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        while True:
            nz = [i for i in range(r, len(rows)) if rows[i][c] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(rows[i][c]))
            rows[r], rows[p] = rows[p], rows[r]
            done = True
            for i in range(r + 1, len(rows)):
                if rows[i][c]:
                    q = rows[i][c] // rows[r][c]
                    rows[i] = [a - q * b for a, b in zip(rows[i], rows[r])]
                    if rows[i][c]:
                        done = False
            if done:
                break
        if any(rows[i][c] for i in range(r, len(rows))):
            if rows[r][c] < 0:
                rows[r] = [-a for a in rows[r]]
            for i in range(r):
                q = rows[i][c] // rows[r][c]
                rows[i] = [a - q * b for a, b in zip(rows[i], rows[r])]
            r += 1
        if r == len(rows):
            break
    return [tuple(row) for row in rows[:r]]


def echelon_coordinates(v, basis: list[Vec]) -> tuple[int, ...] | None:
    """Integer coordinates of v in an echelon basis, or None if v is not in its lattice."""
    rest = list(v)
    coords = []
    for row in basis:
        p = next(c for c, x in enumerate(row) if x)
        if rest[p] % row[p]:
            return None
        q = rest[p] // row[p]
        coords.append(q)
        rest = [a - q * b for a, b in zip(rest, row)]
    return tuple(coords) if not any(rest) else None


def in_face_generators(n: int, subset) -> list[Vec]:
    subset = frozenset(getattr(subset, "ray_indices", subset))
    phi = separating_form(n, subset)
    if phi is None:
        raise ValueError(f"{sorted(subset)} does not span a face")
    return [g for g in rank_one_exponents(n).values() if _dot(phi, g) == 0]


@lru_cache(maxsize=None)
def _lattice_basis(n: int, subset: frozenset[int]) -> tuple[Vec, ...]:
    return tuple(hermite_rows(in_face_generators(n, subset)))


def brute_force_lattice_basis(n: int, face) -> list[Vec]:
    return list(_lattice_basis(n, frozenset(getattr(face, "ray_indices", face))))


def same_lattice(basis_a, basis_b) -> bool:
    """Mutual integral expressibility of two bases, via echelon forms."""
    ha, hb = hermite_rows(basis_a), hermite_rows(basis_b)
    return all(echelon_coordinates(v, hb) is not None for v in basis_a) and all(
        echelon_coordinates(v, ha) is not None for v in basis_b
    )


def brute_force_volume(n: int, subset, d) -> int:
    subset = tuple(sorted(getattr(subset, "ray_indices", subset)))
    basis = _lattice_basis(n, frozenset(subset))
    rays = diagonal_rays(n)
    cols = []
    for i in subset:
        vertex = tuple(d[i - 1] * x for x in rays[i])
        c = echelon_coordinates(vertex, list(basis))
        if c is None:
            raise ArithmeticError(f"vertex {vertex} outside the face lattice")
        cols.append(c)
    return abs(det([list(r) for r in zip(*cols)]))


def brute_force_chi(n: int, d) -> int:
    d = tuple(d)
    if len(d) != n:
        raise ValueError("len(d) must equal n")
    total = 0
    for k in range(1, n + 1):
        for subset in itertools.combinations(range(1, n + 1), k):
            if not brute_force_face_check(n, subset):
                continue
            total += (-1) ** (k - 1) * brute_force_volume(n, subset, d)
    return total


def brute_force_face_count(n: int, k: int) -> int:
    return sum(brute_force_face_check(n, s) for s in itertools.combinations(range(1, n + 1), k))


def brieskorn_milnor(exponents) -> int:
    """Milnor number of sum x_i^{a_i}: prod(a_i - 1)."""
    return prod(a - 1 for a in exponents)


def classical_milnor_g(d) -> int:
    """mu of x_1^{d_1} + sum_{i>=2} x_i^{2 d_i}."""
    d = tuple(d)
    return brieskorn_milnor((d[0],) + tuple(2 * x for x in d[1:]))


def brute_force_elementary(values, k: int) -> int:
    return sum(prod(c) for c in itertools.combinations(values, k))
