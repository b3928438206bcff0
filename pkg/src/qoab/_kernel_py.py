"""Pure-Python feasibility kernel.

Exact phase-1 simplex on an integer-preserving tableau, and a depth-first
branch-and-bound driver on top of it.  ``_kernel.pyx`` is a typed port of
this file; both must return identical results on identical input.
"""

from __future__ import annotations


def lp_feasible(A, b, lower, upper):
    """Decide ``A y = b`` with ``lower <= y <= upper`` over the rationals.

    ``A`` is a list of integer rows, ``b`` an integer list, ``lower`` a list
    of integers and ``upper`` a list of integers or ``None`` (no cap).
    Returns ``(numerators, denominator)`` for a vertex of the region, or
    ``None`` when the region is empty.
    """
    m = len(A)
    n = len(lower)
    for j in range(n):
        if upper[j] is not None and upper[j] < lower[j]:
            return None

    # shift y = lower + z so that z >= 0
    rhs = []
    for i in range(m):
        row = A[i]
        s = b[i]
        for j in range(n):
            if lower[j]:
                s -= row[j] * lower[j]
        rhs.append(s)

    capped = [j for j in range(n) if upper[j] is not None]
    n_caps = len(capped)
    # columns: z (n) | cap slacks (n_caps) | artificials (m) | rhs
    width = n + n_caps + m + 1
    tab = []
    basis = []
    for i in range(m):
        sign = -1 if rhs[i] < 0 else 1
        row = [0] * width
        src = A[i]
        for j in range(n):
            row[j] = sign * src[j]
        row[n + n_caps + i] = 1
        row[-1] = sign * rhs[i]
        tab.append(row)
        basis.append(n + n_caps + i)
    for k in range(n_caps):
        j = capped[k]
        row = [0] * width
        row[j] = 1
        row[n + k] = 1
        row[-1] = upper[j] - lower[j]
        tab.append(row)
        basis.append(n + k)

    # phase-1 objective: minimise the sum of artificials
    obj = [0] * width
    for i in range(m):
        row = tab[i]
        for j in range(n + n_caps):
            obj[j] += row[j]
        obj[-1] += row[-1]
    tab.append(obj)

    n_rows = len(tab) - 1
    n_enter = n + n_caps
    denom = 1
    while True:
        # Bland's rule: lowest-index improving column
        col = -1
        for j in range(n_enter):
            if obj[j] > 0:
                col = j
                break
        if col < 0:
            break
        piv = -1
        best_num = 0
        best_den = 1
        for i in range(n_rows):
            a = tab[i][col]
            if a > 0:
                r = tab[i][-1]
                if piv < 0:
                    piv, best_num, best_den = i, r, a
                else:
                    lhs = r * best_den
                    rhs_ = best_num * a
                    if lhs < rhs_ or (lhs == rhs_ and basis[i] < basis[piv]):
                        piv, best_num, best_den = i, r, a
        if piv < 0:
            # objective is bounded below by zero, so this cannot happen
            raise ArithmeticError("phase-1 objective unbounded")
        prow = tab[piv]
        p = prow[col]
        for i in range(n_rows + 1):
            if i == piv:
                continue
            row = tab[i]
            f = row[col]
            if f == 0:
                for j in range(width):
                    row[j] = (row[j] * p) // denom
            else:
                for j in range(width):
                    row[j] = (row[j] * p - f * prow[j]) // denom
        denom = p
        basis[piv] = col

    if obj[-1] != 0:
        return None
    values = [lower[j] * denom for j in range(n)]
    for i in range(n_rows):
        v = basis[i]
        if v < n:
            values[v] += tab[i][-1]
    return values, denom


def branch_and_bound(A, b, caps, prune):
    """Search for ``x`` in N^n with ``A x = b``.

    ``caps`` holds per-variable upper bounds (``None`` for uncapped) and
    ``prune`` is the global coordinate bound: any branch whose lower bound
    on a variable exceeds it is discarded.  Returns ``(witness, nodes)``
    where ``witness`` is an integer list or ``None``.
    """
    n = len(caps)
    stack = [([0] * n, list(caps))]
    nodes = 0
    while stack:
        lower, upper = stack.pop()
        nodes += 1
        sol = lp_feasible(A, b, lower, upper)
        if sol is None:
            continue
        values, denom = sol
        split = -1
        for j in range(n):
            if values[j] % denom:
                split = j
                break
        if split < 0:
            return [v // denom for v in values], nodes
        fl = values[split] // denom
        # push the ceiling child first so the floor child is explored first
        if fl + 1 <= prune:
            lo = list(lower)
            lo[split] = fl + 1
            stack.append((lo, list(upper)))
        up = list(upper)
        up[split] = fl
        stack.append((list(lower), up))
    return None, nodes
