"""Small coordinatewise-rich subsets of nonnegative rational vectors.

Given vectors ``u_0 .. u_{N-1}`` in dimension ``d`` with total ``w`` and a
ratio ``a = p/q``, an index set ``I`` is *a-rich* when
``sum(u_i for i in I) >= a * w`` in every coordinate.  :func:`select_rich_subset`
always finds one with ``|I| <= (d - 1) + ceil((p*N - d + 1) / q)``.

The search works on the polytope of fractional selections
``{x in [0,1]^N : sum(x_i u_i) = a w}``.  The uniform point ``x = (a, ..., a)``
lies in it; :func:`purify` walks it to a point with at most ``d`` fractional
coordinates.  Either enough coordinates are zero (take the support), or enough
are one, in which case the problem shrinks to a smaller ratio on part of the
vectors and the loop repeats.  The ratio's ``p + q`` drops every round.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from .exceptions import ValidationError
from .numeric import (
    ONE,
    RatVec,
    ceil_div,
    kernel_vector,
    vec_geq,
    vec_scale,
    vec_sum,
)


@dataclass(frozen=True)
class TargetRatio:
    """The ratio ``a = p/q``, stored in lowest terms with ``0 <= p <= q``."""

    p: int
    q: int

    def __post_init__(self):
        p, q = self.p, self.q
        if isinstance(p, bool) or isinstance(q, bool) or not isinstance(p, int) or not isinstance(q, int):
            raise ValidationError(f"ratio parts must be integers, got {p!r}/{q!r}")
        if q <= 0:
            raise ValidationError(f"ratio denominator must be positive, got {q}")
        if p < 0 or p > q:
            raise ValidationError(f"ratio {p}/{q} is outside [0, 1]")
        g = math.gcd(p, q)
        object.__setattr__(self, "p", p // g)
        object.__setattr__(self, "q", q // g)

    @classmethod
    def of(cls, value) -> "TargetRatio":
        """Build from a Fraction, int, ``(p, q)`` pair, or an existing ratio."""
        if isinstance(value, TargetRatio):
            return value
        if isinstance(value, tuple):
            return cls(*value)
        value = Fraction(value)
        return cls(value.numerator, value.denominator)

    @property
    def value(self) -> Fraction:
        return Fraction(self.p, self.q)

    def __str__(self):
        return f"{self.p}/{self.q}"


@dataclass(frozen=True)
class Instance:
    """``N >= 1`` nonnegative rational vectors of common dimension ``d``."""

    vectors: Tuple[RatVec, ...]
    d: int = None
    total: RatVec = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        vectors = tuple(tuple(Fraction(a) for a in v) for v in self.vectors)
        if not vectors:
            raise ValidationError("an instance needs at least one vector")
        d = len(vectors[0]) if self.d is None else self.d
        if d < 1:
            raise ValidationError(f"dimension must be positive, got {d}")
        for i, v in enumerate(vectors):
            if len(v) != d:
                raise ValidationError(f"vector {i} has dimension {len(v)}, expected {d}")
            for j, a in enumerate(v):
                if a < 0:
                    raise ValidationError(f"vector {i} coordinate {j} is negative ({a})")
        object.__setattr__(self, "vectors", vectors)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "total", vec_sum(vectors, d))

    @property
    def n(self) -> int:
        return len(self.vectors)

    def __len__(self):
        return len(self.vectors)


class Case(enum.Enum):
    BASE_ZERO = "BASE_ZERO"
    BASE_ONE = "BASE_ONE"
    SHORTCUT_ALL = "SHORTCUT_ALL"
    CASE_I = "CASE_I"
    CASE_II_PRIME = "CASE_II_PRIME"
    CASE_II_DOUBLE_PRIME = "CASE_II_DOUBLE_PRIME"


@dataclass(frozen=True)
class TraceStep:
    """One round of the selection loop.

    ``p``, ``q`` and ``n`` describe the problem solved in this round.  The
    ``sub_*`` fields describe the reduced problem handed to the next round and
    are None for terminal rounds; ``j_size`` is the number of coordinates
    left below one by purification (None when purification did not run or
    did not matter).
    """

    case: Case
    p: int
    q: int
    n: int
    sub_p: Optional[int] = None
    sub_q: Optional[int] = None
    sub_n: Optional[int] = None
    j_size: Optional[int] = None

    def to_dict(self) -> dict:
        return {
            "case": self.case.value,
            "p": self.p,
            "q": self.q,
            "n": self.n,
            "sub_p": self.sub_p,
            "sub_q": self.sub_q,
            "sub_n": self.sub_n,
            "j_size": self.j_size,
        }


@dataclass(frozen=True)
class PurifiedPoint:
    coords: Tuple[Fraction, ...]
    zero_set: frozenset
    one_set: frozenset
    fractional_set: frozenset
    pivots: int


@dataclass(frozen=True)
class Selection:
    indices: Tuple[int, ...]
    sum: RatVec
    bound_f: int
    trace: Tuple[TraceStep, ...] = ()

    @property
    def size(self) -> int:
        return len(self.indices)


def upper_bound_f(n: int, d: int, ratio: TargetRatio) -> int:
    """``(d - 1) + ceil((p*n - d + 1) / q)``; may exceed ``n``."""
    ratio = TargetRatio.of(ratio)
    s = d - 1
    return s + ceil_div(ratio.p * n - s, ratio.q)


def sw_bound(n: int, d: int, ratio: TargetRatio) -> Fraction:
    """Bound ``a*n + 2*d`` obtained from the Stromquist-Woodall arc theorem."""
    ratio = TargetRatio.of(ratio)
    return ratio.value * n + 2 * d


def alon_bound(n: int, d: int, ratio: TargetRatio) -> Fraction:
    """Bound ``(p/q)*n + (p*(q-p)/q)*d`` obtained from necklace splitting."""
    ratio = TargetRatio.of(ratio)
    p, q = ratio.p, ratio.q
    return Fraction(p * n, q) + Fraction(p * (q - p) * d, q)


def target_of(inst: Instance, ratio: TargetRatio) -> RatVec:
    return vec_scale(TargetRatio.of(ratio).value, inst.total)


def subset_sum(inst: Instance, indices: Iterable[int]) -> RatVec:
    idx = list(indices)
    for i in idx:
        if not 0 <= i < inst.n:
            raise ValidationError(f"index {i} out of range for N={inst.n}")
    return vec_sum((inst.vectors[i] for i in idx), inst.d)


def is_rich(inst: Instance, ratio: TargetRatio, indices: Iterable[int]) -> bool:
    """True iff the chosen vectors sum to at least ``a * total`` coordinatewise."""
    return vec_geq(subset_sum(inst, set(indices)), target_of(inst, ratio))


def _purify(vectors: Sequence[RatVec], d: int, ratio: TargetRatio, check: bool) -> PurifiedPoint:
    n = len(vectors)
    a = ratio.value
    x = [a] * n
    frac = [i for i in range(n) if 0 < x[i] < 1]
    pivots = 0
    while frac:
        # any d+1 columns in dimension d are dependent, so a short prefix suffices
        cols = frac[: d + 1]
        v = kernel_vector([vectors[i] for i in cols])
        if v is None:
            break
        if check:
            moved = vec_sum((vec_scale(vi, vectors[i]) for i, vi in zip(cols, v) if vi), d)
            assert not any(moved), "pivot direction is not in the kernel"
        step = None
        for i, vi in zip(cols, v):
            if vi > 0:
                room = (ONE - x[i]) / vi
            elif vi < 0:
                room = x[i] / -vi
            else:
                continue
            if step is None or room < step:
                step = room
        for i, vi in zip(cols, v):
            if vi:
                x[i] += step * vi
        frac = [i for i in frac if 0 < x[i] < 1]
        pivots += 1
        assert pivots <= n, "purification failed to terminate within N pivots"
    if check:
        got = vec_sum((vec_scale(xi, u) for xi, u in zip(x, vectors) if xi), d)
        assert got == vec_scale(a, vec_sum(vectors, d)), "purification left the feasible set"
        assert all(0 <= xi <= 1 for xi in x)
    return PurifiedPoint(
        coords=tuple(x),
        zero_set=frozenset(i for i in range(n) if x[i] == 0),
        one_set=frozenset(i for i in range(n) if x[i] == 1),
        fractional_set=frozenset(frac),
        pivots=pivots,
    )


def purify(inst: Instance, ratio, check: bool = True) -> PurifiedPoint:
    """Move ``(a, ..., a)`` to a feasible point with at most ``d`` fractional coordinates.

    Each pivot follows a kernel direction of the fractional columns as far as
    the box allows, which fixes at least one more coordinate at 0 or 1 while
    keeping ``sum(x_i u_i) = a * total`` exact.  With ``check`` every pivot
    direction is verified to be an exact kernel vector (so no pivot can break
    the equality) and the equality itself is re-verified at the end.
    """
    return _purify(inst.vectors, inst.d, TargetRatio.of(ratio), check)


def select_rich_subset(inst: Instance, ratio, check: bool = True) -> Selection:
    """Find an a-rich index set of size at most :func:`upper_bound_f`.

    Returns a :class:`Selection` whose ``trace`` lists every round taken.  The
    result is verified exactly before returning; a failed verification raises
    AssertionError since it can only come from a bug.
    """
    ratio = TargetRatio.of(ratio)
    d = inst.d
    s = d - 1
    # the current subproblem, as positions into inst.vectors
    active: List[int] = list(range(inst.n))
    forced: List[int] = []
    cur = ratio
    trace: List[TraceStep] = []
    while True:
        p, q = cur.p, cur.q
        n = len(active)
        f = upper_bound_f(n, d, cur)
        if p == 0:
            trace.append(TraceStep(Case.BASE_ZERO, p, q, n))
            chosen: List[int] = []
            break
        if p == q:
            trace.append(TraceStep(Case.BASE_ONE, p, q, n))
            chosen = active
            break
        if f >= n:
            trace.append(TraceStep(Case.SHORTCUT_ALL, p, q, n))
            chosen = active
            break

        vecs = [inst.vectors[i] for i in active]
        point = _purify(vecs, d, cur, check)
        z, o = len(point.zero_set), len(point.one_set)
        if z >= n - f:
            trace.append(TraceStep(Case.CASE_I, p, q, n))
            chosen = [active[k] for k in range(n) if k not in point.zero_set]
            break
        assert o >= f - s, f"neither {z} zeros nor {o} ones suffice (N={n}, f={f})"

        below = [active[k] for k in range(n) if k not in point.one_set]
        at_one = sorted(active[k] for k in point.one_set)
        if q >= 2 * p:
            nxt = TargetRatio(p, q - p)
            trace.append(TraceStep(Case.CASE_II_PRIME, p, q, n, nxt.p, nxt.q, len(below), len(below)))
            active = below
        else:
            nxt = TargetRatio(2 * p - q, p)
            trace.append(TraceStep(Case.CASE_II_DOUBLE_PRIME, p, q, n, nxt.p, nxt.q, len(at_one), len(below)))
            forced.extend(below)
            active = at_one
        cur = nxt

    indices = tuple(sorted(set(chosen) | set(forced)))
    total = subset_sum(inst, indices)
    f = upper_bound_f(inst.n, d, ratio)
    assert len(indices) <= f, f"selected {len(indices)} indices, bound is {f}"
    assert vec_geq(total, target_of(inst, ratio)), "selection is not rich"
    return Selection(indices=indices, sum=total, bound_f=f, trace=tuple(trace))
