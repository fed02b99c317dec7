"""Exact rational row reduction: rank, kernel, column space."""

from __future__ import annotations

from fractions import Fraction


def rref(rows, ncols: int, column_order=None):
    """Reduced row echelon form over Q. Returns (rows, pivot_columns)."""
    m = [[Fraction(x) for x in row] for row in rows]
    order = list(column_order) if column_order is not None else list(range(ncols))
    pivots = []
    r = 0
    for c in order:
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows, ncols: int) -> int:
    if not rows or ncols == 0:
        return 0
    return len(rref(rows, ncols)[1])


def kernel(rows, ncols: int, column_order=None) -> list[list[Fraction]]:
    """Basis of {x : rows . x = 0}; free variables follow column_order."""
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    red, pivots = rref(rows, ncols, column_order)
    order = list(column_order) if column_order is not None else list(range(ncols))
    free = [c for c in order if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(red, pivots):
            x[p] = -row[f]
        basis.append(x)
    return basis


def matmul(a, b):
    if not a or not b:
        return []
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def is_zero(m) -> bool:
    return all(x == 0 for row in m for x in row)
