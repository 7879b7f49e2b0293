"""How fast the descent count forgets its residue class.

P[descents = k (mod b)] converges to 1/b as n grows, and for b = 2 the
deviation has a closed form through Bernoulli numbers.  The striking detail:
at even n the parity deviation is not just small, it is exactly zero, so the
geometric decay toward 2/pi per step is only visible between odd values of n.
"""

import math
from fractions import Fraction

from eulermod import (
    bernoulli_even_probability,
    eulerian_triangle,
    even_count_deviation,
    even_deviation_decay_rates,
    modular_descent_probability,
)

table = eulerian_triangle(33)

print("Residue-class masses at n=9 (exact rationals):")
for b in (2, 3, 4):
    probs = [modular_descent_probability(9, b, k, table) for k in range(b)]
    devs = [abs(p - Fraction(1, b)) for p in probs]
    print(f"  b={b}: {[str(p) for p in probs]}")
    print(f"       deviations from 1/{b}: {[float(d) for d in devs]}")

print()
print("Parity deviation P[even] - 1/2 (note the exact zeros at even n):")
for n in range(3, 16):
    d = even_count_deviation(n, table)
    print(f"  n={n:2d}: {str(d):>22s}  = {float(d):+.3e}")

print()
print("Closed form through Bernoulli numbers (exact rational equality):")
for n in (5, 12, 25):
    closed = bernoulli_even_probability(n)
    direct = modular_descent_probability(n, 2, 0, table)
    print(f"  n={n:2d}: closed {closed} == direct {direct}: {closed == direct}")

print()
print("Per-step decay rate of the parity deviation, against 2/pi:")
print(f"  2/pi = {2 / math.pi:.12f}")
for n, rate in even_deviation_decay_rates(19, 29, eulerian_triangle(31)):
    print(f"  odd n={n}: rate {rate:.12f}  (off by {abs(rate - 2 / math.pi):.2e})")
