"""Exact linear algebra over the rationals.

Rank is computed by fraction-free (Bareiss) elimination on integer rows;
rational rows are first scaled by their denominator lcm, which does not
change the row space.  Reduced row echelon form over `Fraction` is used
where solved expressions are needed, not just ranks.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _integer_rows(rows) -> list[list[int]]:
    out = []
    for row in rows:
        scale = 1
        for entry in row:
            if isinstance(entry, Fraction):
                scale = _lcm(scale, entry.denominator)
            else:
                den = getattr(entry, "denominator", 1)
                scale = _lcm(scale, int(den))
        out.append([int(entry * scale) for entry in row])
    return out


def exact_rank(rows) -> int:
    """Rank of a matrix given as a list of equal-length rational rows."""
    m = _integer_rows(rows)
    if not m:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(n_cols):
        pivot = next((i for i in range(rank, n_rows) if m[i][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        lead = m[rank][col]
        for i in range(rank + 1, n_rows):
            head = m[i][col]
            row_i, row_r = m[i], m[rank]
            for j in range(col + 1, n_cols):
                row_i[j] = (row_i[j] * lead - head * row_r[j]) // prev
            row_i[col] = 0
        prev = lead
        rank += 1
        if rank == n_rows:
            break
    return rank


def rref(rows, n_cols: int):
    """Reduced row echelon form over Fraction.

    Returns ``(reduced_rows, pivot_cols)``: the nonzero reduced rows, each
    with a leading 1 in its pivot column, and the pivot column indices in
    row order.  Column order is the elimination preference order.
    """
    m = [[Fraction(entry) for entry in row] for row in rows if any(row)]
    pivots: list[int] = []
    r = 0
    for col in range(n_cols):
        pivot = next((i for i in range(r, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        lead = m[r][col]
        if lead != 1:
            m[r] = [entry / lead for entry in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                factor = m[i][col]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots
