"""Self-verification suite behind ``symtoric verify``.

Each check returns a :class:`CheckResult`; the suite never raises on a
failed identity, it records it so the CLI can map failures to exit code 3.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from . import cone, euler, oracle, semigroup, volume
from .errors import InternalError, SymtoricError


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, msg: str) -> None:
        if len(self.failures) < 20:
            self.failures.append(msg)
        else:
            self.failures[-1] = "... (truncated)"

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "ok": self.ok,
            "checked": self.checked,
            "failures": self.failures,
            "seconds": round(self.seconds, 3),
        }


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        res = fn(*args, **kwargs)
        res.seconds = time.perf_counter() - t0
        return res

    wrapper.__name__ = fn.__name__
    return wrapper


def _random_degrees(rng: random.Random, n: int, lo: int = 1, hi: int = 9) -> tuple[int, ...]:
    return tuple(rng.randint(lo, hi) for _ in range(n))


@_timed
def check_relations(n_max: int) -> CheckResult:
    res = CheckResult("minor_relations")
    for n in range(2, n_max + 1):
        rep = semigroup.check_minor_relations(n)
        res.checked += rep.checked
        for v in rep.violations:
            res.fail(f"n={n}: relation {v}")
    return res


@_timed
def check_structure(n_max: int) -> CheckResult:
    res = CheckResult("structure")
    for n in range(2, n_max + 1):
        res.checked += 1
        if semigroup.generator_rank(n) != n:
            res.fail(f"rank of generators != {n}")
        if n <= 6 and not semigroup.minimality_check(n):
            res.fail(f"n={n}: generating set not minimal")
        for k in range(1, n + 1):
            fs = cone.faces(n, k)
            t1 = sum(f.family is cone.FaceFamily.TYPE1 for f in fs)
            res.checked += 1
            if (t1, len(fs) - t1) != cone.face_counts(n, k):
                res.fail(f"n={n},k={k}: face split {(t1, len(fs) - t1)}")
            for f in fs:
                try:
                    if k < n:
                        cone.supporting_form(n, f)
                    cone.face_lattice_basis(n, f)
                    if k >= 2:
                        nf = cone.face_normal_form(n, f)
                        if nf.generators != semigroup.build_generators(k).generators:
                            res.fail(f"n={n}: normal form of {f} differs")
                except SymtoricError as exc:
                    res.fail(f"n={n}: face {f}: {exc}")
    return res


@_timed
def check_saturation(n_max: int, bound: int) -> CheckResult:
    res = CheckResult("saturation")
    for n in range(2, min(n_max, 3) + 1):
        rep = semigroup.saturation_check(n, bound)
        res.checked += rep.cone_points
        for p in rep.violations:
            res.fail(f"n={n}: cone point {p} not in the semigroup")
    return res


@_timed
def check_oracle_faces(n_max: int) -> CheckResult:
    res = CheckResult("oracle_faces")
    for n in range(2, min(n_max, 7) + 1):
        for f in cone.all_faces(n):
            res.checked += 1
            if not oracle.brute_force_face_check(n, f):
                res.fail(f"n={n}: {f} rejected by LP")
                continue
            if not oracle.same_lattice(cone.face_lattice_basis(n, f), oracle.brute_force_lattice_basis(n, f)):
                res.fail(f"n={n}: lattice of {f} differs")
    return res


@_timed
def check_volumes(n_max: int, samples: int, rng: random.Random) -> CheckResult:
    res = CheckResult("volumes")
    for _ in range(samples):
        n = rng.randint(2, min(n_max, 7))
        d = _random_degrees(rng, n)
        for f in cone.all_faces(n):
            res.checked += 1
            a = volume.normalized_volume(f, d).value
            b = volume.closed_form_volume(f, d)
            if a != b:
                res.fail(f"n={n}, d={d}, face {f}: det {a} != closed {b}")
    return res


@_timed
def check_chi(n_max: int, samples: int, rng: random.Random) -> CheckResult:
    res = CheckResult("chi_paths")
    for _ in range(samples):
        n = rng.randint(2, min(n_max, 8))
        d = _random_degrees(rng, n)
        res.checked += 1
        vals = {
            "face_sum": euler.chi_face_sum(n, d),
            "closed": euler.chi_closed_form(n, d),
            "product": euler.chi_product_form(n, d),
        }
        if n <= 7:
            vals["oracle"] = oracle.brute_force_chi(n, d)
        if len(set(vals.values())) != 1:
            res.fail(f"n={n}, d={d}: {vals}")
    for n in range(2, max(n_max, 15) + 1):
        res.checked += 1
        try:
            eu = euler.euler_obstruction(n)
        except InternalError as exc:
            res.fail(str(exc))
            continue
        if eu != n % 2:
            res.fail(f"Eu(S^2_{n}) = {eu}")
    for n in range(1, 31):
        res.checked += 1
        if not euler.bernstein_identity_check(n):
            res.fail(f"Bernstein identity fails at n={n}")
    return res


@_timed
def check_milnor(n_max: int, samples: int, rng: random.Random) -> CheckResult:
    res = CheckResult("milnor")
    for _ in range(samples):
        n = rng.randint(2, min(n_max, 6))
        d = (rng.randint(2, 5),) + _random_degrees(rng, n - 1, 1, 5)
        res.checked += 1
        try:
            mu = euler.milnor_number_brieskorn(n, d)
            if mu != oracle.classical_milnor_g(d):
                res.fail(f"n={n}, d={d}: mu={mu}, classical {oracle.classical_milnor_g(d)}")
            euler.euler_obstruction_f_via_milnor(n, d)
        except InternalError as exc:
            res.fail(f"n={n}, d={d}: {exc}")
    return res


def run_suite(n_max: int = 5, *, bound: int = 2, samples: int = 50, seed: int = 0) -> list[CheckResult]:
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    rng = random.Random(seed)
    return [
        check_relations(n_max),
        check_structure(n_max),
        check_saturation(n_max, bound),
        check_oracle_faces(n_max),
        check_volumes(n_max, samples, rng),
        check_chi(n_max, samples, rng),
        check_milnor(n_max, samples, rng),
    ]
