"""Normalized lattice volumes of the pyramids 0 * compact face.

Two public routes compute the same number: a determinant in the face
lattice basis, and the closed rule 2^(k-1) * prod of the participating
degrees.  Their agreement is checked by the test-suite, not assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import prod

from . import mutation
from .cone import Face, FaceFamily, face_lattice_basis, ray_vector
from .errors import DomainError, LatticeError
from .lattice import LatticeVector, det, express_in_basis, unit, vscale
from .newton import as_degrees, compact_face


@dataclass(frozen=True)
class VolumeResult:
    face: Face
    value: int


@lru_cache(maxsize=None)
def _ray_coordinates(n: int, face: Face, anchor: int | None, lattice: str) -> tuple[tuple[int, ...], ...]:
    basis = _basis(n, face, anchor, lattice)
    return tuple(express_in_basis(ray_vector(n, i), basis) for i in face.ray_indices)


def _basis(n: int, face: Face, anchor: int | None, lattice: str) -> tuple[LatticeVector, ...]:
    if lattice == "type1_lattice":
        return (unit(n, 1),) + tuple(vscale(2, unit(n, i)) for i in face.ray_indices[1:])
    if lattice == "type2_lattice":
        return tuple(ray_vector(n, i) for i in face.ray_indices)
    return face_lattice_basis(n, face, anchor)


def vertex_coordinates(
    face: Face, d, anchor: int | None = None, *, _active: str | None | bool = False
) -> list[tuple[int, ...]]:
    """Compact-face vertices d_i g_i in face lattice coordinates.

    Coordinates of each ray generator are cached per face; a vertex is a
    degree times a ray, so its coordinates are the scaled ray coordinates.
    """
    d = as_degrees(d)
    lattice = "face"
    active = mutation.active() if _active is False else _active
    if active == "type1_lattice" and face.family is FaceFamily.TYPE1 and face.k >= 2:
        lattice = active
    elif active == "type2_lattice" and face.family is FaceFamily.TYPE2:
        lattice = active
    ray_coords = _ray_coordinates(d.n, face, anchor, lattice)
    degs = d.d
    return [tuple(degs[i - 1] * c for c in rc) for i, rc in zip(face.ray_indices, ray_coords)]


def normalized_volume(face: Face, d, anchor: int | None = None) -> VolumeResult:
    """|det| of the k x k matrix whose columns are the vertex coordinates.

    The pyramid apex is the origin, so the vertices themselves are the
    edge vectors.
    """
    d = as_degrees(d)
    if face.ray_indices[-1] > d.n:
        raise DomainError(f"face {face} does not fit n={d.n}")
    active = mutation.active()
    cols = vertex_coordinates(face, d, anchor, _active=active)
    value = abs(det([list(r) for r in zip(*cols)]))
    if active == "ray_volume" and face.k == 1 and face.ray_indices[0] != 1:
        value *= 2
    if value < 1:
        raise LatticeError(f"degenerate volume on face {face}")
    return VolumeResult(face, value)


def normalized_volume_direct(face: Face, d, anchor: int | None = None) -> VolumeResult:
    """Same as :func:`normalized_volume` without the per-face coordinate cache.

    Every vertex is expressed in the basis from scratch; slower, used to
    confirm the cached path.
    """
    d = as_degrees(d)
    basis = face_lattice_basis(d.n, face, anchor)
    try:
        cols = [express_in_basis(v, basis) for v in compact_face(face, d).vertices]
    except LatticeError as exc:
        raise LatticeError(f"vertex of {face} not integral in its face basis") from exc
    return VolumeResult(face, abs(det([list(r) for r in zip(*cols)])))


def closed_form_volume(face: Face, d) -> int:
    """2^(k-1) times the product of d_i over the face's rays."""
    d = as_degrees(d)
    if face.ray_indices[-1] > d.n:
        raise DomainError(f"face {face} does not fit n={d.n}")
    p = prod(d[i] for i in face.ray_indices)
    if mutation.is_active("closed_form"):
        return p
    return 2 ** (face.k - 1) * p
