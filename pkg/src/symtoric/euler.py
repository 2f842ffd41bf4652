"""Milnor-fiber Euler characteristics and local Euler obstructions on S^2_n.

chi(F_0) is available three ways:

* ``chi_face_sum``: alternating sum of determinant volumes over all faces,
* ``chi_closed_form``: sum_k (-1)^(k-1) 2^(k-1) e_k(d),
* ``chi_product_form``: (1 - prod(1 - 2 d_i)) / 2.

The affine-space companion (the function g = x_1^{d_1} + sum x_i^{2 d_i}
on C^n) gives chi(G_0) and the Milnor number mu(g).
"""

from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass, field
from math import comb, prod

from . import mutation
from .cone import all_faces
from .errors import DomainError, InternalError
from .newton import DegreeVector, as_degrees
from .volume import normalized_volume

SCHEMA_VERSION = 1


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 2:
        raise DomainError(f"n must be an integer >= 2, got {n!r}")


def elementary_symmetric(values) -> list[int]:
    """[e_0, e_1, ..., e_m] from the coefficients of prod(1 + v t)."""
    e = [1]
    for v in values:
        e = [a + v * b for a, b in zip(e + [0], [0] + e)]
    return e


def chi_face_sum(n: int, d) -> int:
    _check_n(n)
    d = as_degrees(d, n)
    total = 0
    for face in all_faces(n):
        vol = normalized_volume(face, d).value
        total += vol if face.k % 2 == 1 else -vol
    return total


def chi_closed_form(n: int, d) -> int:
    _check_n(n)
    d = as_degrees(d, n)
    e = elementary_symmetric(d)
    return sum((-1) ** (k - 1) * 2 ** (k - 1) * e[k] for k in range(1, n + 1))


def chi_product_form(n: int, d) -> int:
    _check_n(n)
    d = as_degrees(d, n)
    num = 1 - prod(1 - 2 * x for x in d)
    if num % 2:
        raise InternalError("numerator of the product form must be even")
    return num // 2


def chi_linear(n: int) -> int:
    """chi(F_0) of a generic linear form: the closed form at d = (1, ..., 1)."""
    _check_n(n)
    chi = chi_closed_form(n, (1,) * n)
    if chi != n % 2:
        raise InternalError(f"parity result violated for n={n}: chi={chi}")
    return chi


def bernstein_identity_check(n: int) -> bool:
    """sum_i C(n,i) 2^i (1-2)^(n-i) == 1, i.e. the Bernstein basis sums to 1 at x=2."""
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"n must be >= 1, got {n!r}")
    return sum(comb(n, i) * 2**i * (-1) ** (n - i) for i in range(n + 1)) == 1


def euler_obstruction(n: int) -> int:
    """Eu_{S^2_n}(0): chi of the Milnor fiber of a generic linear form.

    The singular locus is the origin, so {S^2_n minus 0, {0}} is a
    Whitney stratification and the obstruction equals that chi.
    """
    return chi_linear(n)


def euler_obstruction_f(n: int, d) -> int:
    """Eu_{f,S^2_n}(0) = Eu_{S^2_n}(0) - chi(F_0)."""
    return euler_obstruction(n) - chi_face_sum(n, d)


def _check_milnor_degrees(n: int, d) -> DegreeVector:
    _check_n(n)
    d = as_degrees(d, n)
    if d[1] < 2:
        raise DomainError(f"the Milnor relation needs d_1 >= 2, got d_1={d[1]}")
    return d


def affine_volume(subset: tuple[int, ...], d: DegreeVector) -> int:
    """Normalized volume on the coordinate face of R^n_{>=0} spanned by ``subset``.

    Ray e_1 carries d_1 and rays e_i (i >= 2) carry 2 d_i.
    """
    k = len(subset)
    p = prod(d[i] for i in subset)
    active = mutation.active()
    if k == 1:
        if subset[0] == 1:
            return p
        return p if active == "affine_ray" else 2 * p
    if subset[0] == 1:
        return 2**k * p if active == "affine_type1" else 2 ** (k - 1) * p
    return 2 ** (k - 1) * p if active == "affine_type2" else 2**k * p


def chi_affine_space(n: int, d) -> int:
    """chi(G_0) for g = x_1^{d_1} + sum_{i>=2} x_i^{2 d_i} on C^n, by face sum."""
    d = _check_milnor_degrees(n, d)
    total = 0
    for k in range(1, n + 1):
        s = sum(affine_volume(sub, d) for sub in itertools.combinations(range(1, n + 1), k))
        total += s if k % 2 == 1 else -s
    return total


def milnor_number_brieskorn(n: int, d) -> int:
    """mu(g) from chi(G_0) = 1 + (-1)^(n-1) mu(g)."""
    chi = chi_affine_space(n, d)
    mu = (-1) ** (n - 1) * (chi - 1)
    if mu < 0:
        raise InternalError(f"negative Milnor number {mu} (chi(G_0)={chi})")
    return mu


def type2_tail(d: DegreeVector) -> int:
    """sum_{k>=1} (-1)^(k-1) 2^(k-1) e_k(d_2, ..., d_n).

    This is what separates chi(G_0) from chi(F_0): each type-2 face has
    twice the volume on affine space.
    """
    e = elementary_symmetric(d.d[1:])
    return sum((-1) ** (k - 1) * 2 ** (k - 1) * e[k] for k in range(1, len(e)))


def euler_obstruction_f_via_milnor(n: int, d) -> int:
    """Eu_{f,S^2_n}(0) rebuilt from mu(g); raises InternalError if the two routes differ."""
    d = _check_milnor_degrees(n, d)
    mu = milnor_number_brieskorn(n, d)
    tail = type2_tail(d)
    value = -mu + tail if n % 2 == 1 else -1 + mu + tail
    direct = euler_obstruction_f(n, d)
    if value != direct:
        raise InternalError(f"Eu_f via mu(g) = {value} but Eu - chi = {direct} (n={n}, d={d.d})")
    return value


@dataclass
class ChiReport:
    n: int
    d: tuple[int, ...]
    chi_face_sum: int
    chi_closed: int
    chi_product: int
    eu_variety: int
    eu_function: int
    chi_affine: int | None = None
    milnor_g: int | None = None
    milnor_identity_ok: bool | None = None
    attestations: dict = field(default_factory=lambda: {"nondegenerate": True, "isolated_critical": True})

    @property
    def chi_agree(self) -> bool:
        return self.chi_face_sum == self.chi_closed == self.chi_product

    @property
    def bmps_ok(self) -> bool:
        return self.eu_function + self.chi_face_sum == self.eu_variety

    @property
    def agreement(self) -> dict:
        flags = {"chi_paths": self.chi_agree, "eu_identity": self.bmps_ok}
        if self.milnor_identity_ok is not None:
            flags["milnor_identity"] = self.milnor_identity_ok
        return flags

    @property
    def ok(self) -> bool:
        return all(self.agreement.values())

    def to_json(self) -> dict:
        out = {
            "schema": SCHEMA_VERSION,
            "n": self.n,
            "d": list(self.d),
            "chi": {"face_sum": self.chi_face_sum, "closed": self.chi_closed, "product": self.chi_product},
            "eu": {"variety": self.eu_variety, "function": self.eu_function},
            "milnor": None,
            "agreement": self.agreement,
            "attestations": dict(self.attestations),
        }
        if self.milnor_g is not None:
            out["milnor"] = {
                "mu": self.milnor_g,
                "chi_affine": self.chi_affine,
                "identity_ok": self.milnor_identity_ok,
            }
        return out

    @classmethod
    def from_json(cls, data: dict) -> ChiReport:
        if data.get("schema") != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema {data.get('schema')!r}")
        milnor = data.get("milnor") or {}
        return cls(
            n=data["n"],
            d=tuple(data["d"]),
            chi_face_sum=data["chi"]["face_sum"],
            chi_closed=data["chi"]["closed"],
            chi_product=data["chi"]["product"],
            eu_variety=data["eu"]["variety"],
            eu_function=data["eu"]["function"],
            chi_affine=milnor.get("chi_affine"),
            milnor_g=milnor.get("mu"),
            milnor_identity_ok=milnor.get("identity_ok"),
            attestations=dict(data.get("attestations", {})),
        )

    def as_dict(self) -> dict:
        return asdict(self)


def compute_report(n: int, d, *, nondegenerate: bool = True, isolated_critical: bool = True) -> ChiReport:
    """Evaluate every path for (n, d).  Path disagreement is recorded, not raised."""
    d = as_degrees(d, n)
    fs = chi_face_sum(n, d)
    eu = euler_obstruction(n)
    report = ChiReport(
        n=n,
        d=d.d,
        chi_face_sum=fs,
        chi_closed=chi_closed_form(n, d),
        chi_product=chi_product_form(n, d),
        eu_variety=eu,
        eu_function=eu - fs,
        attestations={"nondegenerate": nondegenerate, "isolated_critical": isolated_critical},
    )
    if d[1] >= 2:
        report.chi_affine = chi_affine_space(n, d)
        try:
            report.milnor_g = milnor_number_brieskorn(n, d)
            euler_obstruction_f_via_milnor(n, d)
            report.milnor_identity_ok = True
        except InternalError:
            report.milnor_identity_ok = False
    return report
