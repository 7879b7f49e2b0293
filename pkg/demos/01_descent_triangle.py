"""The exact descent-count triangle and its basic structure.

A(n, k) counts permutations of 1..n with exactly k descents.  Everything
here is exact integer arithmetic; the brute-force recount at the end is the
sanity anchor for the recurrence.
"""

import math

from eulermod import brute_force_descent_distribution, descent_distribution, eulerian_triangle

table = eulerian_triangle(9)

print("Triangle rows 1..7 (row n sums to n!):")
for n in range(1, 8):
    row = table.row(n)
    print(f"  n={n}: {row}   sum={sum(row)} = {n}!")

print()
print("Rows are palindromic: reversing a permutation swaps ascents and descents.")
n = 7
print(f"  row {n}:          {table.row(n)}")
print(f"  row {n} reversed: {table.row(n)[::-1]}")

print()
print("The normalized row is the exact law of the descent count:")
dist = descent_distribution(8, table)
print(f"  n=8 mean     = {dist.mean()}  (always (n-1)/2)")
print(f"  n=8 variance = {dist.variance()}  (always (n+1)/12)")

print()
print("Brute force agreement (counting descents over all n! permutations):")
for n in range(1, 9):
    brute = brute_force_descent_distribution(n)
    counts = tuple(w * math.factorial(n) for w in brute.weights)
    marker = "ok" if counts == table.row(n) else "MISMATCH"
    print(f"  n={n}: {marker}")
