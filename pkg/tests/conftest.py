from fractions import Fraction
from itertools import combinations

import pytest

from richsubset import Instance

ACCEPTANCE_LINES = []


def naive_min_rich(vectors, a):
    """Plain itertools search with Fractions, independent of the package oracle."""
    a = Fraction(a)
    n, d = len(vectors), len(vectors[0])
    total = [sum(Fraction(v[j]) for v in vectors) for j in range(d)]
    for k in range(n + 1):
        for combo in combinations(range(n), k):
            if all(sum(Fraction(vectors[i][j]) for i in combo) >= a * total[j] for j in range(d)):
                return k, combo
    raise AssertionError("unreachable")


def unit(j, d):
    return tuple(Fraction(int(k == j)) for k in range(d))


@pytest.fixture
def ext_1_3():
    """d=2, a=1/3, N=4: e1 followed by three copies of e2."""
    return Instance((unit(0, 2), unit(1, 2), unit(1, 2), unit(1, 2)))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
