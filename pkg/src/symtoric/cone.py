"""Face lattice of the simplicial cone spanned by the semigroup generators.

The rays are g_1 = e_1 and g_j = e_1 + 2e_j (2 <= j <= n).  Because they
are linearly independent, every non-empty subset of ray indices spans a
face; faces containing ray 1 are type 1, the others type 2.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .errors import DomainError, InternalError
from .lattice import LatticeVector, det, dot, express_in_basis, rank, unit, vadd, vscale
from .semigroup import GeneratorSet, build_generators, canonical_labels, generator_for


class FaceFamily(enum.Enum):
    TYPE1 = 1  # contains e_1
    TYPE2 = 2


@dataclass(frozen=True)
class Ray:
    index: int
    vector: LatticeVector


@dataclass(frozen=True, order=True)
class Face:
    ray_indices: tuple[int, ...]

    def __post_init__(self):
        idx = tuple(sorted(self.ray_indices))
        if not idx:
            raise DomainError("the zero face is not represented")
        if len(set(idx)) != len(idx) or idx[0] < 1:
            raise DomainError(f"bad ray indices {self.ray_indices!r}")
        object.__setattr__(self, "ray_indices", idx)

    @property
    def k(self) -> int:
        return len(self.ray_indices)

    @property
    def family(self) -> FaceFamily:
        return FaceFamily.TYPE1 if self.ray_indices[0] == 1 else FaceFamily.TYPE2

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.ray_indices)) + "}"


@dataclass(frozen=True)
class SupportingForm:
    coefficients: LatticeVector

    def __call__(self, x) -> int:
        return dot(self.coefficients, x)


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 2:
        raise DomainError(f"n must be an integer >= 2, got {n!r}")


def _check_face(n: int, face: Face) -> None:
    if face.ray_indices[-1] > n:
        raise DomainError(f"face {face} has a ray index above n={n}")


def ray_vector(n: int, i: int) -> LatticeVector:
    if i == 1:
        return unit(n, 1)
    return vadd(unit(n, 1), vscale(2, unit(n, i)))


def rays(n: int) -> list[Ray]:
    _check_n(n)
    return [Ray(i, ray_vector(n, i)) for i in range(1, n + 1)]


def faces(n: int, k: int) -> list[Face]:
    """All k-dimensional faces, as k-subsets of ray indices in lexicographic order."""
    _check_n(n)
    if not isinstance(k, int) or not 1 <= k <= n:
        raise DomainError(f"k must satisfy 1 <= k <= n={n}, got {k!r}")
    return [Face(c) for c in itertools.combinations(range(1, n + 1), k)]


def all_faces(n: int) -> list[Face]:
    return [f for k in range(1, n + 1) for f in faces(n, k)]


def face_counts(n: int, k: int) -> tuple[int, int]:
    """Expected (type 1, type 2) counts of k-faces."""
    return comb(n - 1, k - 1), comb(n - 1, k)


def supporting_form(n: int, face: Face) -> SupportingForm:
    """Integer linear form vanishing exactly on the rays of a proper face.

    Type 1 face {1, i_2, ..., i_k}: sum of x_i over indices outside the face.
    Type 2 face {j_1, ..., j_k}: 2 x_1 - sum of x_j over the face.
    """
    _check_n(n)
    _check_face(n, face)
    if face.k >= n:
        raise DomainError("the full cone has no proper supporting form")
    members = set(face.ray_indices)
    if face.family is FaceFamily.TYPE1:
        coeffs = tuple(0 if i == 1 or i in members else 1 for i in range(1, n + 1))
    else:
        coeffs = tuple(2 if i == 1 else (-1 if i in members else 0) for i in range(1, n + 1))
    form = SupportingForm(coeffs)
    for r in rays(n):
        value = form(r.vector)
        if (r.index in members and value != 0) or (r.index not in members and value <= 0):
            raise InternalError(f"form {coeffs} does not support face {face}")
    return form


@lru_cache(maxsize=None)
def in_face_generators(n: int, face: Face) -> tuple[LatticeVector, ...]:
    """Elements of the minimal generating set lying on the face."""
    gens = build_generators(n).generators
    if face.k == n:
        return gens
    form = supporting_form(n, face)
    return tuple(g for g in gens if form(g) == 0)


@lru_cache(maxsize=None)
def face_lattice_basis(n: int, face: Face, anchor: int | None = None) -> tuple[LatticeVector, ...]:
    """A Z-basis of the lattice generated by the semigroup points on the face.

    Type 1: e_1, e_{i_2}, ..., e_{i_k}.  Type 2 with anchor a (default the
    smallest index): e_1 + 2e_a, then e_1 + e_a + e_j for the other j.
    The anchor is ignored for type 1 faces.
    """
    _check_n(n)
    _check_face(n, face)
    idx = face.ray_indices
    if face.family is FaceFamily.TYPE1:
        basis = tuple(unit(n, i) for i in idx)
    else:
        a = idx[0] if anchor is None else anchor
        if a not in idx:
            raise DomainError(f"anchor {a} is not a ray of face {face}")
        basis = (ray_vector(n, a),) + tuple(
            vadd(unit(n, 1), unit(n, a), unit(n, j)) for j in idx if j != a
        )
    if rank(basis) != face.k:
        raise InternalError(f"basis for {face} is not independent")
    in_face = set(in_face_generators(n, face))
    for g in in_face:
        express_in_basis(g, basis)  # raises NotInLattice on failure
    # k in-face generators with unimodular coordinates prove the basis is
    # not finer than the lattice of the face
    if face.family is FaceFamily.TYPE1:
        witness = [unit(n, 1)] + [vadd(unit(n, 1), unit(n, i)) for i in idx[1:]]
    else:
        witness = list(basis)
    if not set(witness) <= in_face:
        raise InternalError(f"witness for {face} leaves the face")
    if abs(det([express_in_basis(w, basis) for w in witness])) != 1:
        raise InternalError(f"basis for {face} is finer than the face lattice")
    return basis


def normal_form_basis(n: int, face: Face) -> tuple[LatticeVector, ...]:
    """Basis in which the in-face generators read exactly as build_generators(k).

    Identical to the lattice basis for type 1 faces.  For a type 2 face it
    is the unimodular shear {e_1 + 2e_a, e_j - e_a} of beta.
    """
    if face.family is FaceFamily.TYPE1:
        return face_lattice_basis(n, face)
    idx = face.ray_indices
    a = idx[0]
    return (ray_vector(n, a),) + tuple(vadd(unit(n, j), vscale(-1, unit(n, a))) for j in idx[1:])


def face_normal_form(n: int, face: Face) -> GeneratorSet:
    """In-face generators rewritten in face coordinates, labelled as an S^2_k generator set.

    Raises InternalError if they do not form exactly build_generators(k).
    """
    _check_n(n)
    _check_face(n, face)
    k = face.k
    if k < 2:
        raise DomainError("face normal form needs a face of dimension >= 2")
    basis = normal_form_basis(n, face)
    coords = [express_in_basis(g, basis) for g in in_face_generators(n, face)]
    lookup = {generator_for(k, i, j): (i, j) for i, j in canonical_labels(k)}
    if len(coords) != len(lookup) or set(coords) != set(lookup):
        raise InternalError(f"face {face} is not an S^2_{k} structure: {coords}")
    by_label = {lookup[c]: c for c in coords}
    labels = canonical_labels(k)
    return GeneratorSet(
        n=k,
        generators=tuple(by_label[lab] for lab in labels),
        labels=tuple(labels),
        index_map={lab: pos for pos, lab in enumerate(labels)},
    )
