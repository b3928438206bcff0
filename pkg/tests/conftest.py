from __future__ import annotations

import itertools
import sys
from fractions import Fraction

import pytest


def det(rows):
    """Determinant by exact Gaussian elimination over Q; an oracle independent of the SNF code."""
    M = [[Fraction(x) for x in r] for r in rows]
    n = len(M)
    out = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if M[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            M[c], M[p] = M[p], M[c]
            out = -out
        out *= M[c][c]
        for r in range(c + 1, n):
            f = M[r][c] / M[c][c]
            for k in range(c, n):
                M[r][k] -= f * M[c][k]
    return out


def box_solutions(A_rows, b, cap):
    """All x in [0, cap]^n with A x = b, by enumeration."""
    n = len(A_rows[0]) if A_rows else 0
    out = []
    for x in itertools.product(range(cap + 1), repeat=n):
        if all(sum(a * v for a, v in zip(row, x)) == bi for row, bi in zip(A_rows, b)):
            out.append(x)
    return out


@pytest.fixture
def rng():
    import random
    return random.Random(0)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        ok, detail = mod.RESULTS[k]
        terminalreporter.write_line(mod._line(k, ok, detail))
