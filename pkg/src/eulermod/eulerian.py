"""Exact descent-count combinatorics.

Everything in this module is integer or rational arithmetic: triangle values
are arbitrary-precision ints, probabilities are ``fractions.Fraction``.  The
central object is the triangle ``A(n, k)`` counting permutations of
``{1, ..., n}`` with exactly ``k`` descents (positions ``i`` with
``pi(i) > pi(i+1)``).  Rows are indexed from ``n = 1``; row ``n`` has entries
``A(n, 0), ..., A(n, n-1)``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "EulerianTable",
    "ExactIntegerDistribution",
    "BernoulliSequence",
    "eulerian_triangle",
    "descent_distribution",
    "brute_force_descent_distribution",
    "modular_descent_probability",
    "bernoulli_numbers",
    "bernoulli_even_probability",
    "even_count_deviation",
    "even_deviation_decay_rates",
]

BRUTE_FORCE_LIMIT = 10


@dataclass(frozen=True)
class EulerianTable:
    """Triangle of descent counts, rows 1..n_max.

    ``rows[i]`` holds row ``i + 1``; row ``n`` sums to ``n!`` and is
    palindromic (``A(n, k) == A(n, n-1-k)``).
    """

    rows: tuple[tuple[int, ...], ...]

    @property
    def n_max(self) -> int:
        return len(self.rows)

    def row(self, n: int) -> tuple[int, ...]:
        if not 1 <= n <= self.n_max:
            raise ValueError(f"row {n} not in table (have 1..{self.n_max})")
        return self.rows[n - 1]

    def value(self, n: int, k: int) -> int:
        """A(n, k); zero outside the triangle (k < 0 or k > n-1)."""
        row = self.row(n)
        if 0 <= k < len(row):
            return row[k]
        return 0


@dataclass(frozen=True)
class ExactIntegerDistribution:
    """Probability mass on consecutive integers with exact rational weights.

    Weight of the integer ``support_offset + i`` is ``weights[i]``.
    """

    support_offset: int
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        if any(w < 0 for w in self.weights):
            raise ValueError("negative weight")
        if sum(self.weights) != 1:
            raise ValueError("weights must sum to exactly 1")

    def probability(self, m: int) -> Fraction:
        i = m - self.support_offset
        if 0 <= i < len(self.weights):
            return self.weights[i]
        return Fraction(0)

    def mean(self) -> Fraction:
        off = self.support_offset
        return sum(((off + i) * w for i, w in enumerate(self.weights)), Fraction(0))

    def variance(self) -> Fraction:
        mu = self.mean()
        off = self.support_offset
        return sum(
            ((off + i - mu) ** 2 * w for i, w in enumerate(self.weights)),
            Fraction(0),
        )


@dataclass(frozen=True)
class BernoulliSequence:
    """B_0..B_m as exact rationals, first convention (B_1 = -1/2)."""

    values: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.values or self.values[0] != 1:
            raise ValueError("B_0 must be 1")
        if len(self.values) > 1 and self.values[1] != Fraction(-1, 2):
            raise ValueError("B_1 must be -1/2")
        for j in range(3, len(self.values), 2):
            if self.values[j] != 0:
                raise ValueError(f"B_{j} must be 0")

    def __getitem__(self, j: int) -> Fraction:
        return self.values[j]

    def __len__(self) -> int:
        return len(self.values)


def eulerian_triangle(n_max: int) -> EulerianTable:
    """Build rows 1..n_max of the descent-count triangle.

    Uses the two-term recurrence
    ``A(n, k) = (k+1) A(n-1, k) + (n-k) A(n-1, k-1)``
    in exact integer arithmetic; O(n_max^2) entries.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    rows = [(1,)]
    for n in range(2, n_max + 1):
        prev = rows[-1]
        row = [1]
        for k in range(1, n - 1):
            row.append((k + 1) * prev[k] + (n - k) * prev[k - 1])
        row.append(1)
        rows.append(tuple(row))
    return EulerianTable(tuple(rows))


def _row(n: int, table: EulerianTable | None) -> tuple[int, ...]:
    if table is not None:
        return table.row(n)
    return eulerian_triangle(n).row(n)


def descent_distribution(
    n: int, table: EulerianTable | None = None
) -> ExactIntegerDistribution:
    """Law of the descent count of a uniform permutation of {1, ..., n}.

    Mass ``A(n, r) / n!`` at each ``r`` in ``{0, ..., n-1}``.  Mean is
    ``(n-1)/2`` and variance ``(n+1)/12``, exactly.  Pass a precomputed
    ``table`` (with ``n_max >= n``) to amortize triangle construction
    across many calls.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    fact = math.factorial(n)
    weights = tuple(Fraction(a, fact) for a in _row(n, table))
    return ExactIntegerDistribution(support_offset=0, weights=weights)


def brute_force_descent_distribution(n: int) -> ExactIntegerDistribution:
    """Descent law by enumerating all n! permutations (independent oracle).

    Capped at n <= 10 to keep enumeration bounded.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute force capped at n <= {BRUTE_FORCE_LIMIT}")
    counts = [0] * n
    for pi in itertools.permutations(range(n)):
        d = sum(1 for i in range(n - 1) if pi[i] > pi[i + 1])
        counts[d] += 1
    fact = math.factorial(n)
    return ExactIntegerDistribution(
        support_offset=0, weights=tuple(Fraction(c, fact) for c in counts)
    )


def modular_descent_probability(
    n: int, b: int, k: int, table: EulerianTable | None = None
) -> Fraction:
    """P[descent count == k (mod b)] for a uniform permutation, exactly.

    ``b > n`` is allowed; residues with an empty congruence class in
    ``{0, ..., n-1}`` get probability 0.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if b < 2:
        raise ValueError(f"b must be >= 2, got {b}")
    if not 0 <= k < b:
        raise ValueError(f"k must be in 0..{b - 1}, got {k}")
    row = _row(n, table)
    return Fraction(sum(row[k::b]), math.factorial(n))


def bernoulli_numbers(m: int) -> BernoulliSequence:
    """B_0..B_m from the defining recurrence sum_j C(m+1, j) B_j = 0."""
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    values = [Fraction(1)]
    for r in range(1, m + 1):
        if r > 1 and r % 2 == 1:
            values.append(Fraction(0))
            continue
        acc = sum(
            (math.comb(r + 1, j) * values[j] for j in range(r)), Fraction(0)
        )
        values.append(-acc / (r + 1))
    return BernoulliSequence(tuple(values))


def bernoulli_even_probability(
    n: int, bernoulli: BernoulliSequence | None = None
) -> Fraction:
    """P[descent count even] via the closed form with B_{n+1}.

    Evaluates ``(1/2) (1 + 2^(n+1) (2^(n+1) - 1) B_(n+1) / (n+1)!)`` in exact
    rational arithmetic.  Equals ``modular_descent_probability(n, 2, 0)`` as
    a rational identity.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if bernoulli is None:
        bernoulli = bernoulli_numbers(n + 1)
    elif len(bernoulli) < n + 2:
        raise ValueError(f"need B_0..B_{n + 1}, sequence has {len(bernoulli)}")
    two = 1 << (n + 1)
    term = Fraction(two * (two - 1), math.factorial(n + 1)) * bernoulli[n + 1]
    return Fraction(1, 2) * (1 + term)


def even_count_deviation(n: int, table: EulerianTable | None = None) -> Fraction:
    """P[descent count even] - 1/2, exactly.

    Vanishes identically for even n: row symmetry pairs k with n-1-k, which
    have opposite parities when n is even, so both parity classes carry mass
    exactly 1/2.
    """
    return modular_descent_probability(n, 2, 0, table) - Fraction(1, 2)


def even_deviation_decay_rates(
    n_lo: int, n_hi: int, table: EulerianTable | None = None
) -> list[tuple[int, float]]:
    """Per-step geometric decay rate of |P[even] - 1/2| over [n_lo, n_hi].

    The deviation is nonzero only at odd n (see even_count_deviation), so the
    measurable ratio spans two steps; the reported rate at odd n is
    ``sqrt(|dev(n+2)| / |dev(n)|)``, the decay factor per unit increment of n.
    Returns (n, rate) pairs for every odd n with n, n+2 in [n_lo, n_hi + 2].
    The rates converge to 2/pi.
    """
    if n_lo < 3:
        raise ValueError("n_lo must be >= 3 (deviation at n=1 is 1/2, not decaying)")
    if n_hi < n_lo:
        raise ValueError("empty range")
    if table is None or table.n_max < n_hi + 2:
        table = eulerian_triangle(n_hi + 2)
    rates = []
    start = n_lo if n_lo % 2 == 1 else n_lo + 1
    for n in range(start, n_hi + 1, 2):
        d0 = abs(even_count_deviation(n, table))
        d1 = abs(even_count_deviation(n + 2, table))
        rates.append((n, math.sqrt(float(d1 / d0))))
    return rates
