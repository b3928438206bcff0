# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled feasibility kernel; a typed port of ``_kernel_py.py``.

Values stay arbitrary-precision Python ints (the tableau holds minors of
the input and bounds can be astronomically large); the gain comes from C
loop counters and direct list indexing.
"""


def lp_feasible(list A, list b, list lower, list upper):
    cdef Py_ssize_t m = len(A)
    cdef Py_ssize_t n = len(lower)
    cdef Py_ssize_t i, j, k, col, piv, n_caps, width, n_rows, n_enter
    cdef list rhs, capped, tab, basis, row, src, obj, prow, values
    cdef object s, sign, p, f, denom, r, a, best_num, best_den, lhs, rhs_

    for j in range(n):
        if upper[j] is not None and upper[j] < lower[j]:
            return None

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
        row[width - 1] = sign * rhs[i]
        tab.append(row)
        basis.append(n + n_caps + i)
    for k in range(n_caps):
        j = capped[k]
        row = [0] * width
        row[j] = 1
        row[n + k] = 1
        row[width - 1] = upper[j] - lower[j]
        tab.append(row)
        basis.append(n + k)

    obj = [0] * width
    for i in range(m):
        row = tab[i]
        for j in range(n + n_caps):
            obj[j] += row[j]
        obj[width - 1] += row[width - 1]
    tab.append(obj)

    n_rows = len(tab) - 1
    n_enter = n + n_caps
    denom = 1
    while True:
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
            a = (<list>tab[i])[col]
            if a > 0:
                r = (<list>tab[i])[width - 1]
                if piv < 0:
                    piv = i
                    best_num = r
                    best_den = a
                else:
                    lhs = r * best_den
                    rhs_ = best_num * a
                    if lhs < rhs_ or (lhs == rhs_ and basis[i] < basis[piv]):
                        piv = i
                        best_num = r
                        best_den = a
        if piv < 0:
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

    if obj[width - 1] != 0:
        return None
    values = [lower[j] * denom for j in range(n)]
    for i in range(n_rows):
        k = basis[i]
        if k < n:
            values[k] += (<list>tab[i])[width - 1]
    return values, denom


def branch_and_bound(list A, list b, list caps, object prune):
    cdef Py_ssize_t n = len(caps)
    cdef Py_ssize_t j, split
    cdef Py_ssize_t nodes = 0
    cdef list stack, lower, upper, values, lo, up
    cdef object sol, denom, fl

    stack = [([0] * n, list(caps))]
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
        if fl + 1 <= prune:
            lo = list(lower)
            lo[split] = fl + 1
            stack.append((lo, list(upper)))
        up = list(upper)
        up[split] = fl
        stack.append((list(lower), up))
    return None, nodes
