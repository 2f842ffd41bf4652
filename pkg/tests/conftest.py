import itertools
from fractions import Fraction

import pytest

from symtoric import mutation


@pytest.fixture(autouse=True)
def _no_mutation(monkeypatch):
    monkeypatch.delenv(mutation.ENV_VAR, raising=False)


def leibniz_det(m):
    """Permutation-expansion determinant; independent of the Bareiss path."""
    k = len(m)
    total = 0
    for perm in itertools.permutations(range(k)):
        inv = sum(1 for i in range(k) for j in range(i + 1, k) if perm[i] > perm[j])
        term = -1 if inv % 2 else 1
        for i, p in enumerate(perm):
            term *= m[i][p]
        total += term
    return total


def minor_rank(vectors):
    """Largest size of a non-vanishing minor, by exhaustive search."""
    if not vectors:
        return 0
    rows, cols = len(vectors), len(vectors[0])
    for r in range(min(rows, cols), 0, -1):
        for ri in itertools.combinations(range(rows), r):
            for ci in itertools.combinations(range(cols), r):
                if leibniz_det([[vectors[i][j] for j in ci] for i in ri]) != 0:
                    return r
    return 0


def frac(x):
    return Fraction(x)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for num in sorted(lines):
            terminalreporter.write_line(lines[num])
