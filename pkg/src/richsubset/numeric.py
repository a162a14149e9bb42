"""Exact rational scalars and vectors, plus a small kernel solver.

Scalars are :class:`fractions.Fraction` throughout; vectors are plain tuples
of fractions.  Nothing in here touches floating point.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple

from .exceptions import ValidationError

Rational = Fraction
RatVec = Tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def ceil_div(num: int, den: int) -> int:
    """Smallest integer >= num/den, exact for negative ``num``."""
    if den <= 0:
        raise ValidationError(f"ceil_div needs a positive denominator, got {den}")
    return -((-num) // den)


def ratvec(values: Iterable) -> RatVec:
    return tuple(Fraction(v) for v in values)


def zeros(dim: int) -> RatVec:
    return (ZERO,) * dim


def _check_dims(lhs: Sequence, rhs: Sequence) -> None:
    if len(lhs) != len(rhs):
        raise ValidationError(f"dimension mismatch: {len(lhs)} vs {len(rhs)}")


def vec_add(lhs: RatVec, rhs: RatVec) -> RatVec:
    _check_dims(lhs, rhs)
    return tuple(a + b for a, b in zip(lhs, rhs))


def vec_scale(c: Fraction, vec: RatVec) -> RatVec:
    return tuple(c * a for a in vec)


def vec_sum(vectors: Iterable[RatVec], dim: int) -> RatVec:
    acc = [ZERO] * dim
    for v in vectors:
        if len(v) != dim:
            raise ValidationError(f"dimension mismatch: {len(v)} vs {dim}")
        for j, a in enumerate(v):
            acc[j] += a
    return tuple(acc)


def vec_geq(lhs: RatVec, rhs: RatVec) -> bool:
    """Coordinatewise order: every ``lhs[j] >= rhs[j]``."""
    _check_dims(lhs, rhs)
    return all(a >= b for a, b in zip(lhs, rhs))


def kernel_vector(columns: Sequence[RatVec]) -> Optional[RatVec]:
    """Nonzero ``v`` with ``sum(v[i] * columns[i]) == 0``, or None if independent.

    Plain rational Gauss-Jordan elimination.  Pivots are taken in the leftmost
    column that still has a nonzero entry below the current row, using the
    first such row.  The kernel vector is built from the first free column and
    scaled so its first nonzero entry is +1, so equal inputs give equal outputs.
    """
    k = len(columns)
    if k == 0:
        return None
    d = len(columns[0])
    for c in columns:
        if len(c) != d:
            raise ValidationError(f"column dimension mismatch: {len(c)} vs {d}")

    # rows of the d x k matrix whose columns are the inputs
    m = [[Fraction(columns[c][r]) for c in range(k)] for r in range(d)]
    pivot_cols = []
    row = 0
    free = None
    for col in range(k):
        pr = next((r for r in range(row, d) if m[r][col] != 0), None)
        if pr is None:
            free = col
            break
        if pr != row:
            m[row], m[pr] = m[pr], m[row]
        piv = m[row][col]
        prow = [a / piv for a in m[row]]
        m[row] = prow
        for r in range(d):
            if r != row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], prow)]
        pivot_cols.append(col)
        row += 1
    if free is None:
        return None

    # columns before `free` are all pivots, so column `free` is a combination of them
    v = [ZERO] * k
    v[free] = ONE
    for r, pc in enumerate(pivot_cols):
        v[pc] = -m[r][free]
    lead = next(a for a in v if a != 0)
    return tuple(a / lead for a in v)
