"""Fault injection for negative-control tests.

Setting ``SYMTORIC_MUTATION`` (or using :func:`mutated`) replaces exactly
one volume rule with a plausible wrong one.  The cross-checks of the
package must then fail; if they still pass, agreement would be vacuous.
The flag is read on every call, never cached.
"""

from __future__ import annotations

import contextlib
import os

ENV_VAR = "SYMTORIC_MUTATION"

MUTATIONS = {
    # S^2_n determinant path
    "ray_volume": "ray volumes of e1+2e_j become 2*d_j (affine-space rule leaking in)",
    "type1_lattice": "type-1 faces measured in the lattice {e1, 2e_i} instead of {e1, e_i}",
    "type2_lattice": "type-2 faces measured in the ray lattice instead of beta",
    # closed-form volume rule
    "closed_form": "closed-form face volume drops the 2^(k-1) factor",
    # affine space (Brieskorn) path
    "affine_ray": "affine ray volumes 2*d_i become d_i",
    "affine_type1": "affine type-1 volumes 2^(k-1) prod d become 2^k prod d",
    "affine_type2": "affine type-2 volumes 2^k prod d become 2^(k-1) prod d",
}


def active() -> str | None:
    value = os.environ.get(ENV_VAR, "").strip()
    if not value:
        return None
    if value not in MUTATIONS:
        raise ValueError(f"unknown mutation {value!r}; choose from {sorted(MUTATIONS)}")
    return value


def is_active(name: str) -> bool:
    return active() == name


@contextlib.contextmanager
def mutated(name: str):
    if name not in MUTATIONS:
        raise ValueError(f"unknown mutation {name!r}")
    old = os.environ.get(ENV_VAR)
    os.environ[ENV_VAR] = name
    try:
        yield
    finally:
        if old is None:
            os.environ.pop(ENV_VAR, None)
        else:
            os.environ[ENV_VAR] = old
