import itertools
from fractions import Fraction

import pytest

from liecompact.root_system import all_types

RANK8_TYPES = [str(t) for t in all_types(8, twists=False)]
SMALL_TYPES = [str(t) for t in all_types(4, twists=False)]
LARGE_TYPES = [t for t in RANK8_TYPES if t not in SMALL_TYPES]


def cofactor_det(m):
    """Determinant by Laplace expansion along the first row."""
    n = len(m)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(m[0][0])
    total = Fraction(0)
    for j in range(n):
        if m[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        total += (-1) ** j * m[0][j] * cofactor_det(minor)
    return total


def sylvester_negative_definite(m):
    n = len(m)
    return all((-1) ** k * cofactor_det([row[:k] for row in m[:k]]) > 0 for k in range(1, n + 1))


def grid_vectors(dim, radius=2):
    for x in itertools.product(range(-radius, radius + 1), repeat=dim):
        if any(x):
            yield x


@pytest.fixture
def sylvester():
    return sylvester_negative_definite


ACCEPTANCE_RESULTS = {}


def record_acceptance(key, description, passed):
    ACCEPTANCE_RESULTS[key] = (description, passed)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        description, passed = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {key}  {description}")
