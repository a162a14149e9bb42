"""Compare the exact bound with the two older ones as N grows.

The Stromquist-Woodall bound is a*N + 2d and the necklace-splitting bound is
a*N + a(1-a)d.  Both exceed f, which is roughly a*N + d(q-1)/q.
"""
from fractions import Fraction

from richsubset import alon_bound, sw_bound, upper_bound_f

d, a = 4, Fraction(2, 5)
print(f"d={d}, a={a}")
print(f"{'N':>5} {'f':>5} {'sw':>8} {'alon':>8}")
for n in (5, 10, 20, 50, 100, 200):
    f = upper_bound_f(n, d, a)
    sw, alon = sw_bound(n, d, a), alon_bound(n, d, a)
    print(f"{n:>5} {f:>5} {str(sw):>8} {str(alon):>8}")
