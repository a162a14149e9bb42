"""Instances on which no a-rich set is smaller than the selector's bound.

For ``a = p/q`` with ``1 <= p < q`` pick ``r`` in ``[1, q-1]`` with
``p*r = 1 (mod q)`` and set ``m = ceil(p*r/q)``.  The instance consists of
``r`` copies of each of ``e_1 .. e_{d-1}`` followed by ``N - r(d-1)`` copies of
``e_d``.  Every coordinate sum of a subset is an integer, so a rich subset
needs ``m`` copies of each of the first ``d-1`` unit vectors and
``ceil(p(N - r(d-1))/q)`` copies of ``e_d``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .exceptions import ValidationError
from .numeric import ceil_div
from .selector import Instance, TargetRatio, upper_bound_f


def mod_inverse(p: int, q: int) -> int:
    """The unique ``r`` in ``[1, q-1]`` with ``p*r = 1 (mod q)``."""
    if q < 2 or not 1 <= p < q:
        raise ValidationError(f"mod_inverse needs 1 <= p < q and q >= 2, got p={p}, q={q}")
    if math.gcd(p, q) != 1:
        raise ValidationError(f"{p} has no inverse modulo {q}")
    return pow(p, -1, q)


@dataclass(frozen=True)
class ExtremalSpec:
    d: int
    n: int
    ratio: TargetRatio
    r: int
    m: int

    @classmethod
    def build(cls, d: int, n: int, ratio) -> "ExtremalSpec":
        ratio = TargetRatio.of(ratio)
        p, q = ratio.p, ratio.q
        if not 1 <= p < q:
            raise ValidationError(f"extremal instances need 1 <= p < q, got {ratio}")
        if d < 1:
            raise ValidationError(f"dimension must be positive, got {d}")
        r = mod_inverse(p, q)
        spec = cls(d=d, n=n, ratio=ratio, r=r, m=ceil_div(p * r, q))
        spec.validate()
        return spec

    @property
    def s(self) -> int:
        return self.d - 1

    @property
    def theorem_applies(self) -> bool:
        """Whether ``N >= (q-1)(d-1)``, the range where tightness is guaranteed."""
        return self.n >= (self.ratio.q - 1) * self.s

    def validate(self) -> None:
        p, q = self.ratio.p, self.ratio.q
        if (p * self.r) % q != 1 % q:
            raise ValidationError(f"r={self.r} is not an inverse of {p} mod {q}")
        if q * self.m - p * self.r != q - 1:
            raise ValidationError(f"m={self.m} does not satisfy qm - pr = q - 1")
        if self.n < self.r * self.s:
            raise ValidationError(f"N={self.n} is smaller than r(d-1)={self.r * self.s}")


def extremal_instance(spec: ExtremalSpec) -> Instance:
    spec.validate()
    d, r, s = spec.d, spec.r, spec.s

    def unit(j):
        return tuple(Fraction(int(k == j)) for k in range(d))

    vectors = [unit(i) for i in range(s) for _ in range(r)]
    vectors += [unit(d - 1)] * (spec.n - r * s)
    return Instance(tuple(vectors), d)


def extremal_min_size(spec: ExtremalSpec) -> int:
    """Exact minimum size of a rich set on :func:`extremal_instance`."""
    spec.validate()
    p, q = spec.ratio.p, spec.ratio.q
    size = spec.s * spec.m + ceil_div(p * (spec.n - spec.r * spec.s), q)
    assert size == upper_bound_f(spec.n, spec.d, spec.ratio)
    return size


def extremal_witness(spec: ExtremalSpec) -> Tuple[int, ...]:
    """A rich index set of size :func:`extremal_min_size`."""
    spec.validate()
    p, q, r, s = spec.ratio.p, spec.ratio.q, spec.r, spec.s
    picked = [i * r + k for i in range(s) for k in range(spec.m)]
    tail = ceil_div(p * (spec.n - r * s), q)
    picked += [r * s + k for k in range(tail)]
    return tuple(picked)
