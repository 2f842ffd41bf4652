"""Supports and Newton polyhedra of functions on S^2_n.

A function is described by its support only; coefficients never enter the
Euler characteristic.  Non-degeneracy is an input contract and is NOT
checked here.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from .cone import Face, ray_vector
from .errors import DomainError
from .lattice import LatticeVector, find_feasible_point, vscale
from .semigroup import build_generators, in_cone


@dataclass(frozen=True)
class DegreeVector:
    """Exponents d_i of the pure monomials z_i^{d_i}, one per ray."""

    d: tuple[int, ...]

    def __post_init__(self):
        d = tuple(self.d)
        if len(d) < 2:
            raise DomainError(f"need at least two degrees, got {d}")
        if any(not isinstance(x, int) or isinstance(x, bool) or x < 1 for x in d):
            raise DomainError(f"degrees must be integers >= 1, got {d}")
        object.__setattr__(self, "d", d)

    @property
    def n(self) -> int:
        return len(self.d)

    def __getitem__(self, i: int) -> int:
        """1-based access, matching ray indices."""
        return self.d[i - 1]

    def __iter__(self):
        return iter(self.d)

    def __len__(self):
        return len(self.d)


def as_degrees(d, n: int | None = None) -> DegreeVector:
    dv = d if isinstance(d, DegreeVector) else DegreeVector(tuple(d))
    if n is not None and dv.n != n:
        raise DomainError(f"degree vector has length {dv.n}, expected n={n}")
    return dv


@dataclass(frozen=True)
class FunctionSupport:
    """Support of f as (generator index, exponent) pairs, i.e. monomials z_idx^exp.

    Generator indices are 1-based in the canonical ordering, so 1..n are
    the ray variables.
    """

    n: int
    monomials: frozenset[tuple[int, int]]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise DomainError(f"n must be an integer >= 2, got {self.n!r}")
        big_n = self.n * (self.n + 1) // 2
        mons = frozenset((int(i), int(e)) for i, e in self.monomials)
        for i, e in mons:
            if not 1 <= i <= big_n:
                raise DomainError(f"generator index {i} outside 1..{big_n}")
            if e < 1:
                raise DomainError(f"exponent {e} < 1 (the constant term is excluded)")
        object.__setattr__(self, "monomials", mons)

    @classmethod
    def from_json(cls, data) -> FunctionSupport:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["n"]), frozenset(tuple(m) for m in data["monomials"]))

    def to_json(self) -> dict:
        return {"n": self.n, "monomials": [list(m) for m in sorted(self.monomials)]}

    def points(self) -> list[LatticeVector]:
        gens = build_generators(self.n).generators
        return [vscale(e, gens[i - 1]) for i, e in sorted(self.monomials)]

    @property
    def degrees(self) -> DegreeVector | None:
        """Minimal pure-monomial exponents, or None if some ray has none."""
        best: dict[int, int] = {}
        for i, e in self.monomials:
            if i <= self.n:
                best[i] = min(e, best.get(i, e))
        if len(best) < self.n:
            return None
        return DegreeVector(tuple(best[i] for i in range(1, self.n + 1)))


@dataclass
class ValidationResult:
    """Outcome of :func:`validate_support`.

    ``ok`` only asks for a pure monomial on every ray.  ``outside`` lists
    non-pure monomials that stick out of the Newton polyhedron of
    sum z_i^{d_i}; these break the hypothesis of the closed formula
    without affecting ``ok``.
    """

    ok: bool
    degrees: DegreeVector | None
    missing_rays: list[int] = field(default_factory=list)
    outside: list[tuple[int, int]] = field(default_factory=list)

    @property
    def newton_ok(self) -> bool:
        return self.ok and not self.outside


def validate_support(fs: FunctionSupport) -> ValidationResult:
    present = {i for i, _ in fs.monomials if i <= fs.n}
    missing = [i for i in range(1, fs.n + 1) if i not in present]
    if missing:
        return ValidationResult(False, None, missing)
    d = fs.degrees
    gens = build_generators(fs.n).generators
    outside = [
        (i, e)
        for i, e in sorted(fs.monomials)
        if i > fs.n and not newton_membership(vscale(e, gens[i - 1]), d)
    ]
    return ValidationResult(True, d, [], outside)


def newton_membership(point: Sequence, d) -> bool:
    """Exact test of point in Conv(union_i (d_i g_i + K)).

    Solved as the rational feasibility problem
    point = sum lam_i d_i g_i + sum mu_i g_i, lam, mu >= 0, sum lam = 1.
    """
    d = as_degrees(d)
    n = d.n
    if len(point) != n:
        raise DomainError(f"point has length {len(point)}, expected {n}")
    point = [Fraction(x) for x in point]
    if not in_cone(point):
        raise DomainError(f"{tuple(point)} is outside the cone")
    g = [ray_vector(n, i) for i in range(1, n + 1)]
    # columns: lam_1..lam_n, mu_1..mu_n
    rows = [
        [d[i + 1] * g[i][c] for i in range(n)] + [g[i][c] for i in range(n)]
        for c in range(n)
    ]
    rows.append([1] * n + [0] * n)
    return find_feasible_point(rows, point + [1], nvars=2 * n) is not None


@dataclass(frozen=True)
class CompactFaceData:
    face: Face
    vertices: tuple[LatticeVector, ...]


def compact_face(face: Face, d) -> CompactFaceData:
    """The unique (k-1)-dimensional compact face of Gamma_+ on a k-face: {d_i g_i}."""
    d = as_degrees(d)
    if face.ray_indices[-1] > d.n:
        raise DomainError(f"face {face} does not fit n={d.n}")
    verts = tuple(vscale(d[i], ray_vector(d.n, i)) for i in face.ray_indices)
    return CompactFaceData(face, verts)


def support_from_degrees(d: Iterable[int], extra: Iterable[tuple[int, int]] = ()) -> FunctionSupport:
    """Support of sum z_i^{d_i} plus optional extra monomials."""
    d = tuple(d)
    mons = {(i + 1, di) for i, di in enumerate(d)} | set(extra)
    return FunctionSupport(len(d), frozenset(mons))
