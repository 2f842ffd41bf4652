"""The semigroup of the rank <= 1 symmetric n x n matrices.

The generators are indexed by symmetric matrix positions (i, j):

    m_11 = e_1,  m_1j = e_1 + e_j,  m_ij = e_1 + e_i + e_j  (2 <= i <= j)

and the canonical order puts the n ray generators e_1, e_1 + 2e_j first,
then m_1j for j = 2..n, then the off-diagonal m_ij (2 <= i < j) in
lexicographic order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import DomainError, ResourceError
from .lattice import LatticeVector, rank, unit, vadd

DEFAULT_SATURATION_CUTOFF = 2_000_000


@dataclass(frozen=True)
class GeneratorSet:
    n: int
    generators: tuple[LatticeVector, ...]
    labels: tuple[tuple[int, int], ...]
    index_map: dict[tuple[int, int], int] = field(compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def m(self, i: int, j: int) -> LatticeVector:
        """Generator for matrix entry (i, j), 1-based, symmetric in i and j."""
        return self.generators[self.index_map[(min(i, j), max(i, j))]]

    def position(self, i: int, j: int) -> int:
        """1-based position of m_ij in the canonical ordering."""
        return self.index_map[(min(i, j), max(i, j))] + 1


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 2:
        raise DomainError(f"n must be an integer >= 2, got {n!r}")


def generator_for(n: int, i: int, j: int) -> LatticeVector:
    i, j = min(i, j), max(i, j)
    if i == 1 and j == 1:
        return unit(n, 1)
    if i == 1:
        return vadd(unit(n, 1), unit(n, j))
    return vadd(unit(n, 1), unit(n, i), unit(n, j))


def canonical_labels(n: int) -> list[tuple[int, int]]:
    labels = [(1, 1)] + [(j, j) for j in range(2, n + 1)]
    labels += [(1, j) for j in range(2, n + 1)]
    labels += [(i, j) for i in range(2, n + 1) for j in range(i + 1, n + 1)]
    return labels


def build_generators(n: int) -> GeneratorSet:
    """The minimal generating set of the semigroup, in canonical order.

    >>> [list(g) for g in build_generators(2)]
    [[1, 0], [1, 2], [1, 1]]
    """
    _check_n(n)
    labels = canonical_labels(n)
    gens = tuple(generator_for(n, i, j) for i, j in labels)
    return GeneratorSet(
        n=n,
        generators=gens,
        labels=tuple(labels),
        index_map={lab: pos for pos, lab in enumerate(labels)},
    )


def ambient_and_dimension(n: int, t: int) -> tuple[int, int]:
    """Embedding dimension N and dimension of the rank < t symmetric matrices."""
    if not isinstance(n, int) or not isinstance(t, int) or not 2 <= t <= n:
        raise DomainError(f"need 2 <= t <= n, got n={n!r}, t={t!r}")
    big_n = n * (n + 1) // 2
    return big_n, big_n - (n - t + 1) * (n - t + 2) // 2


@dataclass
class RelationReport:
    n: int
    checked: int = 0
    violations: list[tuple[int, int, int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def check_minor_relations(n: int) -> RelationReport:
    """Check m_ij + m_kl == m_il + m_kj for every 2x2 minor of the symmetric matrix.

    Quadruples run over 1 <= i < k <= n and 1 <= j < l <= n, which covers
    all four cases of the relation (i or j equal to 1 or not).
    """
    _check_n(n)
    gs = build_generators(n)
    report = RelationReport(n)
    for i, k in itertools.combinations(range(1, n + 1), 2):
        for j, l in itertools.combinations(range(1, n + 1), 2):
            report.checked += 1
            if vadd(gs.m(i, j), gs.m(k, l)) != vadd(gs.m(i, l), gs.m(k, j)):
                report.violations.append((i, j, k, l))
    return report


def minimality_check(n: int, max_n: int = 6) -> bool:
    """True iff no generator is a non-negative integer combination of the others.

    Every generator has first coordinate 1, so a combination of two or more
    generators has first coordinate >= 2; a generator can only be hit by a
    single other generator, hence the check is pairwise distinctness plus
    the grading.
    """
    _check_n(n)
    if n > max_n:
        raise DomainError(f"minimality check is limited to n <= {max_n}")
    gens = build_generators(n).generators
    if any(g[0] != 1 for g in gens):
        return False
    return len(set(gens)) == len(gens)


def in_cone(p) -> bool:
    """Membership of a point in the cone spanned by the generators.

    Uses the facet inequalities x_j >= 0 (j >= 2) and 2 x_1 >= sum_{j>=2} x_j.
    """
    tail = p[1:]
    return all(x >= 0 for x in tail) and 2 * p[0] - sum(tail) >= 0


@dataclass
class SaturationReport:
    n: int
    bound: int
    cone_points: int = 0
    violations: list[LatticeVector] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def reachable_by_degree(n: int, max_degree: int) -> list[set[LatticeVector]]:
    """Sets of semigroup elements that are sums of exactly s generators, s = 0..max_degree."""
    gens = build_generators(n).generators
    levels = [{(0,) * n}]
    for _ in range(max_degree):
        levels.append({vadd(p, g) for p in levels[-1] for g in gens})
    return levels


def saturation_check(n: int, bound: int, cutoff: int = DEFAULT_SATURATION_CUTOFF) -> SaturationReport:
    """Verify on a box that every lattice point of the cone lies in the semigroup.

    Scans 0 <= p_1 <= bound, |p_i| <= 2*bound.  A cone point with first
    coordinate s must be a sum of exactly s generators (first-coordinate
    grading), which is what ``reachable_by_degree`` enumerates.
    """
    _check_n(n)
    if bound < 1:
        raise DomainError("bound must be >= 1")
    box = (bound + 1) * (4 * bound + 1) ** (n - 1)
    if box > cutoff:
        raise ResourceError(f"box of {box} points exceeds cutoff {cutoff}")
    levels = reachable_by_degree(n, bound)
    report = SaturationReport(n, bound)
    rng = range(-2 * bound, 2 * bound + 1)
    for p1 in range(bound + 1):
        for tail in itertools.product(rng, repeat=n - 1):
            p = (p1, *tail)
            if not in_cone(p):
                continue
            report.cone_points += 1
            if p not in levels[p1]:
                report.violations.append(p)
    return report


def generator_rank(n: int) -> int:
    return rank(build_generators(n).generators)
