"""Exact integer linear algebra.

Smith Normal Form with unimodular transforms, solving ``A x = b`` over the
integers, and deciding ``A x = b`` over the nonnegative integers.
Everything works on Python ints, so coefficient growth never overflows.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import floor, gcd
from typing import Iterable, Optional, Sequence, Union

from . import kernel


class DimensionError(ValueError):
    """Raised when matrix and vector shapes do not fit together."""


class IntMatrix:
    """Immutable dense integer matrix, stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[int]):
        entries = tuple(int(e) for e in entries)
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise DimensionError(
                f"{len(entries)} entries do not fill a {rows}x{cols} matrix")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "IntMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise DimensionError("ragged rows")
        return cls(len(rows), cols, (e for r in rows for e in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> "IntMatrix":
        for c in columns:
            if len(c) != rows:
                raise DimensionError(f"column of length {len(c)} in a {rows}-row matrix")
        return cls(rows, len(columns), (columns[j][i] for i in range(rows) for j in range(len(columns))))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, (1 if i == j else 0 for i in range(n) for j in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_columns([self.row(i) for i in range(self.rows)], self.cols)

    def hstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.rows != other.rows:
            raise DimensionError("hstack needs equal row counts")
        return IntMatrix.from_rows(
            [self.row(i) + other.row(i) for i in range(self.rows)], self.cols + other.cols)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        cols = [other.column(j) for j in range(other.cols)]
        return IntMatrix(self.rows, other.cols, (
            sum(a * b for a, b in zip(self.row(i), c))
            for i in range(self.rows) for c in cols))

    def apply(self, x: Sequence[int]) -> list[int]:
        if len(x) != self.cols:
            raise DimensionError(f"vector of length {len(x)} against {self.cols} columns")
        return [sum(a * b for a, b in zip(self.row(i), x)) for i in range(self.rows)]

    def diagonal(self) -> list[int]:
        return [self[i, i] for i in range(min(self.rows, self.cols))]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        return f"IntMatrix({self.to_rows()!r})" if self.rows else f"IntMatrix(0x{self.cols})"


@dataclass(frozen=True)
class SnfDecomposition:
    """``U @ A @ V == S`` with ``U``, ``V`` unimodular and ``S`` diagonal."""

    U: IntMatrix
    S: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self) -> list[int]:
        return self.S.diagonal()

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def smith_normal_form(A: IntMatrix) -> SnfDecomposition:
    """Smith Normal Form of ``A``.

    Pivots on the entry of least absolute value in the remaining block.  The
    identity ``U A V = S`` is checked by multiplication before returning.
    """
    m, n = A.shape
    a = A.to_rows()
    u = IntMatrix.identity(m).to_rows()
    v = IntMatrix.identity(n).to_rows()

    def swap_rows(i, k):
        a[i], a[k] = a[k], a[i]
        u[i], u[k] = u[k], u[i]

    def swap_cols(j, k):
        for r in a:
            r[j], r[k] = r[k], r[j]
        for r in v:
            r[j], r[k] = r[k], r[j]

    def add_row(dst, src, q):
        # row[dst] += q * row[src]
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for r in a:
            r[dst] += q * r[src]
        for r in v:
            r[dst] += q * r[src]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            p = a[t][t]
            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
            # leftover remainders in the pivot row/column: move the smallest in
            cand = None
            for i in range(t + 1, m):
                if a[i][t] and (cand is None or abs(a[i][t]) < abs(cand[2])):
                    cand = ("r", i, a[i][t])
            for j in range(t + 1, n):
                if a[t][j] and (cand is None or abs(a[t][j]) < abs(cand[2])):
                    cand = ("c", j, a[t][j])
            if cand is not None:
                if cand[0] == "r":
                    swap_rows(t, cand[1])
                else:
                    swap_cols(t, cand[1])
                continue
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if a[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]

    U = IntMatrix.from_rows(u, m)
    S = IntMatrix.from_rows(a, n)
    V = IntMatrix.from_rows(v, n)
    if U @ A @ V != S:
        raise ArithmeticError("Smith form reconstruction failed")
    return SnfDecomposition(U, S, V)


def unimodular_inverse(U: IntMatrix) -> IntMatrix:
    """Inverse of a square integer matrix with determinant +-1."""
    n = U.rows
    if U.cols != n:
        raise DimensionError("inverse of a non-square matrix")
    aug = [[Fraction(x) for x in U.row(i)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for c in range(n):
        p = next((r for r in range(c, n) if aug[r][c] != 0), None)
        if p is None:
            raise ArithmeticError("singular matrix")
        aug[c], aug[p] = aug[p], aug[c]
        pv = aug[c][c]
        aug[c] = [x / pv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    out = []
    for r in range(n):
        row = aug[r][n:]
        if any(x.denominator != 1 for x in row):
            raise ArithmeticError("matrix is not unimodular")
        out.append([int(x) for x in row])
    return IntMatrix.from_rows(out, n)


def rank(A: IntMatrix) -> int:
    """Rank over the rationals."""
    return smith_normal_form(A).rank


def solve_integer_linear(A: IntMatrix, b: Sequence[int]) -> Optional[list[int]]:
    """An integer solution of ``A x = b``, or ``None`` when none exists."""
    if len(b) != A.rows:
        raise DimensionError(f"right-hand side of length {len(b)} for {A.rows} rows")
    snf = smith_normal_form(A)
    c = snf.U.apply(b)
    d = snf.diagonal
    y = [0] * A.cols
    for i in range(A.rows):
        di = d[i] if i < len(d) else 0
        if di == 0:
            if c[i] != 0:
                return None
        elif c[i] % di:
            return None
        else:
            y[i] = c[i] // di
    x = snf.V.apply(y)
    if A.apply(x) != list(b):
        raise ArithmeticError("integer solve failed verification")
    return x


def _independent_rows(rows: tuple) -> tuple[int, ...]:
    """Indices of a maximal set of rationally independent rows, chosen greedily."""
    basis: list[list[Fraction]] = []
    pivots: list[int] = []
    keep = []
    for idx, r in enumerate(rows):
        v = [Fraction(x) for x in r]
        for bv, p in zip(basis, pivots):
            if v[p]:
                f = v[p] / bv[p]
                v = [a - f * c for a, c in zip(v, bv)]
        p = next((j for j, x in enumerate(v) if x), None)
        if p is not None:
            basis.append(v)
            pivots.append(p)
            keep.append(idx)
    return tuple(keep)


def _inverse(M: list[list[int]]) -> Optional[list[list[Fraction]]]:
    n = len(M)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == k)) for k in range(n)]
           for i, row in enumerate(M)]
    for c in range(n):
        p = next((r for r in range(c, n) if aug[r][c]), None)
        if p is None:
            return None
        aug[c], aug[p] = aug[p], aug[c]
        pv = aug[c][c]
        aug[c] = [x / pv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


@lru_cache(maxsize=4096)
def _bases(rows: tuple) -> tuple[tuple[int, ...], tuple, tuple]:
    """Independent row indices and every nonsingular square basis with its inverse."""
    keep = _independent_rows(rows)
    n = len(rows[0]) if rows else 0
    out = []
    for cols in itertools.combinations(range(n), len(keep)):
        inv = _inverse([[rows[i][j] for j in cols] for i in keep])
        if inv is not None:
            out.append((cols, inv))
    return keep, tuple(out), rows


def _vertices(rows: tuple, b: tuple) -> list[list[Fraction]]:
    """Basic feasible solutions of ``A x = b, x >= 0`` (the vertices of that polyhedron)."""
    keep, bases, _ = _bases(rows)
    n = len(rows[0]) if rows else 0
    bk = [b[i] for i in keep]
    out = []
    seen = set()
    for cols, inv in bases:
        xb = [sum(r * v for r, v in zip(row, bk)) for row in inv]
        if any(x < 0 for x in xb):
            continue
        x = [Fraction(0)] * n
        for j, v in zip(cols, xb):
            x[j] = v
        if all(sum(a * v for a, v in zip(r, x)) == bi for r, bi in zip(rows, b)):
            key = tuple(x)
            if key not in seen:
                seen.add(key)
                out.append(x)
    return out


@lru_cache(maxsize=4096)
def _extreme_rays(rows: tuple, n: int) -> tuple[tuple[int, ...], ...]:
    """Primitive integer generators of the extreme rays of ``{x >= 0 : A x = 0}``."""
    aug = tuple(rows) + ((1,) * n,)
    rays = []
    for v in _vertices(aug, (0,) * len(rows) + (1,)):
        den = 1
        for x in v:
            den = den * x.denominator // gcd(den, x.denominator)
        ints = [int(x * den) for x in v]
        g = 0
        for x in ints:
            g = gcd(g, x)
        rays.append(tuple(x // g for x in ints))
    return tuple(rays)


def integer_hull_box(A: IntMatrix, b: Sequence[int]) -> Optional[list[int]]:
    """Per-coordinate caps that contain a solution of ``A x = b`` in N^n if one exists.

    The polyhedron is the convex hull of its vertices plus the cone of its
    extreme rays.  Subtracting whole multiples of the (nonnegative, integer)
    rays from an integer point keeps it an integer point of the polyhedron
    and lowers it componentwise, so the lexicographically smallest solution
    has ``x_j <= max_v v_j + sum_r r_j``.  Returns ``None`` when the
    polyhedron is empty over the rationals.
    """
    rows = tuple(tuple(r) for r in A.to_rows())
    n = A.cols
    if not rows:
        return [0] * n
    verts = _vertices(rows, tuple(int(x) for x in b))
    if not verts:
        return None
    rays = _extreme_rays(rows, n)
    return [floor(max(v[j] for v in verts)) + sum(r[j] for r in rays) for j in range(n)]


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    witness: Optional[tuple[int, ...]]
    bound_used: int
    nodes: int = 0

    @property
    def status(self) -> str:
        return "feasible" if self.feasible else "infeasible"


def minimal_solution_bound(A: IntMatrix, b: Sequence[int]) -> int:
    """Coordinate bound on some nonnegative solution of ``A x = b``.

    If the system has a solution in N^n it has one with every entry at most
    ``n * (m * a) ** (2 * m + 1)``, with ``a`` the largest absolute entry of
    ``A`` and ``b`` (Papadimitriou, 1981).
    """
    m, n = A.shape
    a = max([abs(e) for e in A.entries] + [abs(e) for e in b] + [1])
    return n * (max(m, 1) * a) ** (2 * max(m, 1) + 1)


Bound = Union[int, Sequence[Optional[int]], None]


def nonneg_integer_feasible(A: IntMatrix, b: Sequence[int], bound: Bound = None,
                            lexmin: bool = True) -> FeasibilityResult:
    """Decide whether ``A x = b`` has a solution with ``x`` in N^cols.

    ``bound`` optionally caps the search: a single int caps every coordinate,
    a sequence caps coordinates individually (``None`` entries stay uncapped).
    Capped problems decide existence inside the box, which is what
    exhaustive-enumeration oracles compare against.

    Uncapped coordinates are capped by :func:`integer_hull_box` before the
    search, so every branch explores a bounded polytope.  The classical
    bound of :func:`minimal_solution_bound` stays in force as a pruning
    limit.

    With ``lexmin`` the witness is the lexicographically smallest solution,
    so certificates do not depend on the search path.  Pass ``lexmin=False``
    when only the yes/no answer matters; it is several times cheaper.
    """
    b = [int(x) for x in b]
    if len(b) != A.rows:
        raise DimensionError(f"right-hand side of length {len(b)} for {A.rows} rows")
    n = A.cols
    if bound is None or isinstance(bound, int):
        caps = [bound] * n
    else:
        caps = list(bound)
        if len(caps) != n:
            raise DimensionError(f"{len(caps)} caps for {n} variables")
    if any(c is not None and c < 0 for c in caps):
        return FeasibilityResult(False, None, 0)

    # capped coordinates behave like rows x_j + s_j = cap_j for the a-priori bound
    n_capped = sum(1 for c in caps if c is not None)
    a = max([abs(e) for e in A.entries] + [abs(e) for e in b]
            + [c for c in caps if c is not None] + [1])
    m_eff = max(A.rows + n_capped, 1)
    prune = (n + n_capped) * (m_eff * a) ** (2 * m_eff + 1)
    bound_used = max([c for c in caps if c is not None], default=prune) \
        if n_capped == n else prune

    if n == 0:
        ok = all(x == 0 for x in b)
        return FeasibilityResult(ok, () if ok else None, bound_used)
    if A.rows == 0:
        return FeasibilityResult(True, (0,) * n, bound_used)
    if solve_integer_linear(A, b) is None:
        return FeasibilityResult(False, None, bound_used)
    if any(c is None for c in caps):
        box = integer_hull_box(A, b)
        if box is None:
            return FeasibilityResult(False, None, bound_used)
        caps = [h if c is None else min(c, h) for c, h in zip(caps, box)]
        bound_used = max(caps)
        if any(c < 0 for c in caps):
            return FeasibilityResult(False, None, bound_used)

    witness, nodes = kernel.branch_and_bound(A.to_rows(), b, caps, prune)
    if witness is None:
        return FeasibilityResult(False, None, bound_used, nodes)
    if lexmin:
        witness = _lex_smallest(A, b, caps, witness)
    if any(x < 0 for x in witness) or A.apply(witness) != b:
        raise ArithmeticError("feasibility witness failed re-substitution")
    return FeasibilityResult(True, tuple(witness), bound_used, nodes)


def _lex_smallest(A: IntMatrix, b: list[int], caps: list, witness: list[int]) -> list[int]:
    # fix coordinates left to right at their least feasible value; the least
    # value is found by bisecting on the cap x_j <= v, which is monotone in v
    n = A.cols
    cols = [A.column(j) for j in range(n)]
    fixed: list[int] = []
    rest = list(b)
    for j in range(n):
        if j == n - 1:
            fixed.append(witness[j])
            break
        sub = IntMatrix.from_columns(cols[j:], A.rows)

        def probe(v):
            res = nonneg_integer_feasible(sub, rest, [v] + caps[j + 1:], lexmin=False)
            return res.witness

        lo, hi = 0, witness[j]
        best = witness[j:]
        while lo < hi:
            mid = (lo + hi) // 2
            w = probe(mid)
            if w is None:
                lo = mid + 1
            else:
                hi, best = w[0], list(w)
        # best[0] == lo here: it is feasible and no smaller cap is
        fixed.append(lo)
        witness = fixed[:-1] + best
        rest = [r - c * lo for r, c in zip(rest, cols[j])]
    return fixed
