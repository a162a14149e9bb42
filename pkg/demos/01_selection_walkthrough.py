"""Walk through one selection: purification, the case taken, and the result.

Run with ``python demos/01_selection_walkthrough.py``.
"""
from fractions import Fraction

from richsubset import Instance, is_rich, purify, select_rich_subset, upper_bound_f

# five vectors in the plane, target ratio 3/5
inst = Instance([
    [3, 1],
    [1, 4],
    [Fraction(1, 2), Fraction(1, 2)],
    [2, 0],
    [0, 2],
])
a = Fraction(3, 5)
print("total w       =", [str(x) for x in inst.total])
print("target a*w    =", [str(a * x) for x in inst.total])
print("bound f       =", upper_bound_f(inst.n, inst.d, a))

# start from x = (a, ..., a) and pivot until at most d coordinates are fractional
pt = purify(inst, a)
print("purified x    =", [str(x) for x in pt.coords], f"({pt.pivots} pivots)")
print("zeros / ones  =", sorted(pt.zero_set), sorted(pt.one_set))

sel = select_rich_subset(inst, a)
for step in sel.trace:
    print("round         :", step.case.value, f"a={step.p}/{step.q} on {step.n} vectors")
print("selected      =", list(sel.indices), "sum =", [str(x) for x in sel.sum])
print("rich?         =", is_rich(inst, a, sel.indices))
