import math
from fractions import Fraction as F

import pytest

from richsubset import (
    ExtremalSpec,
    TargetRatio,
    ValidationError,
    extremal_instance,
    extremal_min_size,
    extremal_witness,
    is_rich,
    mod_inverse,
    upper_bound_f,
)

from conftest import naive_min_rich, unit


@pytest.mark.parametrize("p,q,r", [(1, 2, 1), (1, 5, 1), (1, 11, 1), (2, 3, 2), (3, 7, 5), (5, 8, 5)])
def test_mod_inverse(p, q, r):
    assert mod_inverse(p, q) == r
    assert (p * r) % q == 1


@pytest.mark.parametrize("p,q", [(2, 4), (3, 9), (0, 5), (5, 5), (1, 1)])
def test_mod_inverse_rejects(p, q):
    with pytest.raises(ValidationError):
        mod_inverse(p, q)


def test_instance_one_third():
    spec = ExtremalSpec.build(2, 4, F(1, 3))
    inst = extremal_instance(spec)
    assert inst.vectors == (unit(0, 2), unit(1, 2), unit(1, 2), unit(1, 2))
    assert inst.total == (1, 3)
    assert extremal_min_size(spec) == 2 == naive_min_rich(inst.vectors, F(1, 3))[0]


def test_instance_two_thirds():
    spec = ExtremalSpec.build(2, 5, F(2, 3))
    assert (spec.r, spec.m) == (2, 2)
    inst = extremal_instance(spec)
    assert inst.vectors == (unit(0, 2),) * 2 + (unit(1, 2),) * 3
    assert inst.total == (2, 3)
    assert extremal_min_size(spec) == 4 == naive_min_rich(inst.vectors, F(2, 3))[0]


def test_instance_one_dimensional():
    spec = ExtremalSpec.build(1, 6, F(1, 2))
    assert extremal_instance(spec).vectors == ((F(1),),) * 6
    assert extremal_min_size(spec) == 3 == naive_min_rich(extremal_instance(spec).vectors, F(1, 2))[0]


def test_spec_rejects_short_n_and_trivial_ratios():
    with pytest.raises(ValidationError):
        ExtremalSpec.build(3, 3, F(2, 5))  # r = 3 needs N >= 6
    for a in [0, 1]:
        with pytest.raises(ValidationError):
            ExtremalSpec.build(2, 5, a)


def test_spec_identities_and_witnesses():
    for q in range(2, 10):
        for p in range(1, q):
            if math.gcd(p, q) != 1:
                continue
            for d in range(1, 5):
                r = mod_inverse(p, q)
                for n in range(r * (d - 1), r * (d - 1) + 10):
                    if n < 1:
                        continue
                    spec = ExtremalSpec.build(d, n, TargetRatio(p, q))
                    assert q * spec.m - p * spec.r == q - 1
                    size = extremal_min_size(spec)
                    assert size == upper_bound_f(n, d, spec.ratio)
                    w = extremal_witness(spec)
                    assert len(w) == len(set(w)) == size
                    assert is_rich(extremal_instance(spec), spec.ratio, w)
