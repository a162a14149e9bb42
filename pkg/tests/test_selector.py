import math
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from richsubset import (
    Case,
    Instance,
    TargetRatio,
    ValidationError,
    alon_bound,
    is_rich,
    kernel_vector,
    purify,
    random_instance,
    select_rich_subset,
    sw_bound,
    upper_bound_f,
)
from richsubset.oracle import greedy_top_k

from conftest import naive_min_rich


# --- ratios and instances ---------------------------------------------------

def test_ratio_normalizes_and_rejects():
    assert TargetRatio(2, 4) == TargetRatio(1, 2)
    assert TargetRatio.of(F(6, 9)) == TargetRatio(2, 3)
    assert TargetRatio.of(0) == TargetRatio(0, 1)
    for bad in [(3, 2), (-1, 2), (1, 0)]:
        with pytest.raises(ValidationError):
            TargetRatio(*bad)


def test_instance_validation():
    inst = Instance([[1, 2], [F(1, 2), 0]])
    assert inst.d == 2 and inst.n == 2
    assert inst.total == (F(3, 2), F(2))
    with pytest.raises(ValidationError):
        Instance([])
    with pytest.raises(ValidationError):
        Instance([[1, 2], [1]])
    with pytest.raises(ValidationError):
        Instance([[1, -1]])


# --- closed-form bounds -----------------------------------------------------

@pytest.mark.parametrize("n,d,p,q,expected", [
    (10, 3, 1, 2, 6),
    (7, 4, 0, 1, 0),
    (7, 4, 1, 1, 7),
    (4, 2, 1, 3, 2),
])
def test_upper_bound_f(n, d, p, q, expected):
    assert upper_bound_f(n, d, TargetRatio(p, q)) == expected


def test_upper_bound_matches_brute_force_on_small_extremal(ext_1_3):
    assert naive_min_rich(ext_1_3.vectors, F(1, 3))[0] == upper_bound_f(4, 2, TargetRatio(1, 3)) == 2


@pytest.mark.parametrize("n,d,a,expected", [(10, 3, F(1, 2), 11), (1, 1, 0, 2), (12, 2, F(1, 3), 8)])
def test_sw_bound(n, d, a, expected):
    assert sw_bound(n, d, a) == expected


@pytest.mark.parametrize("n,d,a,expected", [
    (10, 3, F(1, 2), F(13, 2)), (5, 4, 0, 0), (17, 1, 0, 0), (6, 2, F(2, 3), F(16, 3)),
])
def test_alon_bound(n, d, a, expected):
    assert alon_bound(n, d, a) == expected


def test_bound_dominance_and_monotonicity():
    for q in range(2, 13):
        for p in range(1, q):
            if math.gcd(p, q) != 1:
                continue
            r = TargetRatio(p, q)
            for d in range(1, 9):
                prev = None
                for n in range(1, 201):
                    f = upper_bound_f(n, d, r)
                    assert f <= sw_bound(n, d, r)
                    assert f <= alon_bound(n, d, r)
                    assert f <= r.value * n + F(d * (q - 1), q)
                    assert prev is None or f >= prev
                    prev = f


# --- richness ---------------------------------------------------------------

def test_is_rich_examples(ext_1_3):
    a = TargetRatio(1, 3)
    assert is_rich(ext_1_3, a, range(4))
    assert not is_rich(ext_1_3, a, {0})
    assert is_rich(ext_1_3, a, {0, 1})
    with pytest.raises(ValidationError):
        is_rich(ext_1_3, a, {4})


def test_full_set_always_rich():
    for seed in range(30):
        inst = random_instance(seed, 6, 3, 10, F(1, 4))
        assert is_rich(inst, TargetRatio(seed % 7, 7), range(6))


def test_richness_invariant_under_coordinate_scaling():
    rng = random.Random(3)
    for seed in range(100):
        inst = random_instance(seed, rng.randint(1, 8), 3, 20, F(1, 4))
        scale = [F(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(3)]
        scaled = Instance([tuple(c * x for c, x in zip(scale, v)) for v in inst.vectors])
        idx = {i for i in range(inst.n) if rng.random() < 0.5}
        a = TargetRatio(rng.randint(0, 5), 5)
        assert is_rich(inst, a, idx) == is_rich(scaled, a, idx)


# --- purification -----------------------------------------------------------

def _assert_purified(inst, ratio, pt):
    a = TargetRatio.of(ratio).value
    assert all(0 <= x <= 1 for x in pt.coords)
    lhs = tuple(sum(x * v[j] for x, v in zip(pt.coords, inst.vectors)) for j in range(inst.d))
    assert lhs == tuple(a * w for w in inst.total)
    assert len(pt.fractional_set) <= inst.d
    assert pt.pivots <= inst.n
    assert pt.zero_set | pt.one_set | pt.fractional_set == set(range(inst.n))
    assert len(pt.zero_set) + len(pt.one_set) + len(pt.fractional_set) == inst.n
    frac = sorted(pt.fractional_set)
    assert kernel_vector([inst.vectors[i] for i in frac]) is None


def test_purify_scalar_halves():
    inst = Instance([[1], [1], [1], [1]])
    pt = purify(inst, F(1, 2))
    _assert_purified(inst, F(1, 2), pt)
    assert sum(pt.coords) == 2
    assert len(pt.zero_set) + len(pt.one_set) >= 3


def test_purify_a_one_is_all_ones():
    inst = random_instance(5, 7, 2, 10)
    pt = purify(inst, 1)
    assert pt.coords == (1,) * 7 and not pt.fractional_set and pt.pivots == 0


def test_purify_independent_columns_untouched():
    inst = Instance([[1, 0, 0], [1, 2, 0], [0, 1, 3]])
    pt = purify(inst, F(2, 5))
    assert pt.coords == (F(2, 5),) * 3 and pt.pivots == 0


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 12), st.integers(1, 4), st.integers(0, 7), st.integers(1, 7))
def test_purify_contract(seed, n, d, p, q):
    p = min(p, q)
    inst = random_instance(seed, n, d, 12, F(1, 3))
    _assert_purified(inst, TargetRatio(p, q), purify(inst, TargetRatio(p, q)))


# --- selection --------------------------------------------------------------

def _assert_valid(inst, ratio, sel):
    ratio = TargetRatio.of(ratio)
    assert is_rich(inst, ratio, sel.indices)
    assert sel.size <= upper_bound_f(inst.n, inst.d, ratio)
    assert list(sel.indices) == sorted(set(sel.indices))
    assert len(sel.trace) <= ratio.p + ratio.q
    sums = [s.p + s.q for s in sel.trace]
    assert all(b < a for a, b in zip(sums, sums[1:]))
    for prev, step in zip(sel.trace, sel.trace[1:]):
        assert (prev.sub_p, prev.sub_q, prev.sub_n) == (step.p, step.q, step.n)
    for step in sel.trace:
        if step.case is Case.CASE_II_PRIME:
            assert (step.sub_p, step.sub_q) == (step.p, step.q - step.p)
        elif step.case is Case.CASE_II_DOUBLE_PRIME:
            assert (step.sub_p, step.sub_q) == (2 * step.p - step.q, step.p)
        else:
            assert step.sub_p is None
    assert sel.trace[-1].case not in (Case.CASE_II_PRIME, Case.CASE_II_DOUBLE_PRIME)


def test_select_scalar_example():
    inst = Instance([[3], [1], [1], [1]])
    assert naive_min_rich(inst.vectors, F(2, 3))[0] == 2
    sel = select_rich_subset(inst, F(2, 3))
    _assert_valid(inst, F(2, 3), sel)
    assert sel.bound_f == 3
    assert sum(inst.vectors[i][0] for i in sel.indices) >= 4


def test_select_zero_ratio():
    inst = random_instance(1, 5, 3)
    sel = select_rich_subset(inst, 0)
    assert sel.indices == () and sel.trace[0].case is Case.BASE_ZERO


def test_select_full_ratio():
    inst = random_instance(1, 5, 3)
    sel = select_rich_subset(inst, 1)
    assert sel.indices == tuple(range(5)) and sel.trace[0].case is Case.BASE_ONE


def test_select_extremal(ext_1_3):
    sel = select_rich_subset(ext_1_3, F(1, 3))
    _assert_valid(ext_1_3, F(1, 3), sel)
    assert sel.size == 2


def test_select_all_zero_instance():
    inst = random_instance(9, 6, 2, 10, 1)
    assert all(x == 0 for v in inst.vectors for x in v)
    for a in [F(1, 3), F(1, 2), F(3, 4)]:
        _assert_valid(inst, a, select_rich_subset(inst, a))


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 15), st.integers(1, 4),
       st.sampled_from([0, F(1, 4), F(1, 2)]), st.integers(0, 9), st.integers(1, 9))
def test_select_property(seed, n, d, zd, p, q):
    ratio = TargetRatio(min(p, q), q)
    inst = random_instance(seed, n, d, 30, zd)
    _assert_valid(inst, ratio, select_rich_subset(inst, ratio))


def test_permutation_robustness():
    rng = random.Random(11)
    for seed in range(150):
        n, d = rng.randint(1, 12), rng.randint(1, 4)
        inst = random_instance(seed, n, d, 15, F(1, 4))
        perm = list(range(n))
        rng.shuffle(perm)
        permuted = Instance([inst.vectors[i] for i in perm])
        ratio = TargetRatio(rng.randint(1, 6), 7)
        _assert_valid(permuted, ratio, select_rich_subset(permuted, ratio))


def test_one_dimensional_greedy_matches_bound():
    rng = random.Random(5)
    for seed in range(200):
        n = rng.randint(1, 20)
        inst = random_instance(seed, n, 1, 20, F(1, 5))
        q = rng.randint(1, 9)
        ratio = TargetRatio(rng.randint(0, q), q)
        g = greedy_top_k(inst, ratio)
        f = upper_bound_f(n, 1, ratio)
        assert f == -(-ratio.p * n // ratio.q)
        assert g.size == f and is_rich(inst, ratio, g.indices)
        assert select_rich_subset(inst, ratio).size <= f


def test_sub_instances_can_be_empty():
    # all-zero vectors with a < 1/2 make purification push every coordinate to one
    inst = Instance([[0, 0]] * 6)
    sel = select_rich_subset(inst, F(1, 3))
    _assert_valid(inst, F(1, 3), sel)
