"""Ground truth for small instances: exhaustive search and the d=1 greedy."""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, islice
from typing import Tuple

import numpy as np

from .exceptions import SizeLimitError, ValidationError
from .numeric import ceil_div
from .selector import Instance, Selection, TargetRatio, subset_sum, upper_bound_f

DEFAULT_MAX_N = 22
# combinations materialized per numpy batch
_BATCH = 1 << 16


@dataclass(frozen=True)
class OracleResult:
    min_size: int
    witness: Tuple[int, ...]
    explored: int


def _integer_problem(inst: Instance, ratio: TargetRatio):
    """Scale each coordinate to integers: rich iff ``q * S_j >= p * W_j``."""
    cols = []
    for j in range(inst.d):
        lcm = 1
        for v in inst.vectors:
            lcm = math.lcm(lcm, v[j].denominator)
        cols.append([int(v[j] * lcm) for v in inst.vectors])
    rows = [list(r) for r in zip(*cols)]
    need = [ratio.p * sum(c) for c in cols]
    # q * S_j never exceeds q * W_j, so int64 is safe below this
    fits = all(ratio.q * sum(c) < 2**62 for c in cols)
    dtype = np.int64 if fits else object
    return np.array(rows, dtype=dtype).reshape(inst.n, inst.d), np.array(need, dtype=dtype), ratio.q


def brute_min_rich(inst: Instance, ratio, max_n: int = DEFAULT_MAX_N) -> OracleResult:
    """Smallest rich subset by exhaustive search.

    Subsets are visited by increasing size and, within a size, in
    lexicographic order of their sorted indices; the first rich one wins.
    ``explored`` counts subsets visited up to and including the witness.
    """
    ratio = TargetRatio.of(ratio)
    n = inst.n
    if n > max_n:
        raise SizeLimitError(f"N={n} exceeds the exhaustive-search limit {max_n}")
    u, need, q = _integer_problem(inst, ratio)
    explored = 0
    for k in range(n + 1):
        if k == 0:
            explored += 1
            if all(x <= 0 for x in need):
                return OracleResult(0, (), explored)
            continue
        it = combinations(range(n), k)
        while True:
            batch = list(islice(it, _BATCH))
            if not batch:
                break
            idx = np.array(batch, dtype=np.intp)
            sums = u[idx].sum(axis=1)
            ok = (sums * q >= need).all(axis=1)
            hit = np.flatnonzero(ok)
            if hit.size:
                pos = int(hit[0])
                return OracleResult(k, tuple(batch[pos]), explored + pos + 1)
            explored += len(batch)
    raise AssertionError("the full index set is always rich")


def greedy_top_k(inst: Instance, ratio) -> Selection:
    """For ``d == 1``: the ``ceil(p*N/q)`` largest scalars, ties to lower index."""
    ratio = TargetRatio.of(ratio)
    if inst.d != 1:
        raise ValidationError(f"greedy_top_k needs d == 1, got d={inst.d}")
    k = ceil_div(ratio.p * inst.n, ratio.q)
    order = sorted(range(inst.n), key=lambda i: (-inst.vectors[i][0], i))
    indices = tuple(sorted(order[:k]))
    return Selection(indices, subset_sum(inst, indices), upper_bound_f(inst.n, 1, ratio))
