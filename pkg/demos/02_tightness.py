"""The bound cannot be improved: extremal instances versus exhaustive search.

For each ratio the extremal instance needs exactly f vectors.  The exhaustive
oracle confirms it, and the selector never does worse than f.
"""
from richsubset import (
    ExtremalSpec,
    brute_min_rich,
    extremal_instance,
    extremal_min_size,
    select_rich_subset,
    upper_bound_f,
)

d = 3
print(f"{'a':>5} {'N':>3} {'r':>2} {'m':>2} {'f':>3} {'oracle':>6} {'select':>6}")
for p, q in [(1, 2), (1, 3), (2, 3), (3, 4), (2, 5), (3, 5)]:
    for n in (8, 12):
        spec = ExtremalSpec.build(d, n, (p, q))
        if not spec.theorem_applies:
            continue
        inst = extremal_instance(spec)
        f = upper_bound_f(n, d, spec.ratio)
        assert extremal_min_size(spec) == f
        best = brute_min_rich(inst, spec.ratio).min_size
        got = select_rich_subset(inst, spec.ratio).size
        print(f"{p}/{q:<3} {n:>3} {spec.r:>2} {spec.m:>2} {f:>3} {best:>6} {got:>6}")
