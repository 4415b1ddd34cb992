"""Strict-inequality feasibility over the rationals.

Fourier-Motzkin elimination on homogeneous systems f(x) > 0 with integer
coefficient rows.  Combining a row with positive and one with negative
coefficient in the pivot variable keeps strictness, so the system is
feasible exactly when no all-zero row is ever produced.
"""

from __future__ import annotations

from math import gcd


def _canonical(row):
    g = 0
    for c in row:
        g = gcd(g, abs(c))
    if g > 1:
        row = tuple(c // g for c in row)
    return tuple(row)


def strictly_feasible(rows) -> bool:
    """Is there a real vector x with f . x > 0 for every functional f?"""
    rows = [tuple(int(c) for c in r) for r in rows]
    if not rows:
        return True
    dim = len(rows[0])
    if any(len(r) != dim for r in rows):
        raise ValueError("functionals of mixed dimensions")
    work = set()
    for r in rows:
        if not any(r):
            return False
        work.add(_canonical(r))
    for var in range(dim):
        pos = [r for r in work if r[var] > 0]
        neg = [r for r in work if r[var] < 0]
        nxt = {r for r in work if r[var] == 0}
        for a in pos:
            for b in neg:
                comb = tuple(-b[var] * ak + a[var] * bk for ak, bk in zip(a, b))
                if not any(comb):
                    return False
                nxt.add(_canonical(comb))
        work = nxt
        if not work:
            return True
    return True
