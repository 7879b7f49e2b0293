"""The move-to-end permutation chain and its exchangeable pair statistics.

W counts the adjacent value pairs (i, i+1) appearing out of order in a
permutation (the descents of the inverse).  One chain step removes the entry
at a uniformly random position and appends it, changing W by at most 1.  The
up-step chance P[W' = W + 1 | pi] is an average S(pi) of simple positional
indicators, and every moment identity this package relies on is checkable by
exhaustive enumeration for n <= 9; `pair_oracle` does exactly that, with no
shortcut formulas on the enumeration side.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

__all__ = [
    "Permutation",
    "PairMomentReport",
    "ChainSamples",
    "descents_of_inverse",
    "move_to_end",
    "up_step_indicators",
    "up_step_probability",
    "pair_oracle",
    "indicator_pair_moments",
    "sample_chain",
]

# One-line notation: entry i is the image of i+1. Any sequence of the
# integers 1..n is accepted; functions validate before use.
Permutation = tuple[int, ...]

ORACLE_LIMIT = 9

_SAMPLE_CHUNK = 32768  # fixed so a given seed always yields the same stream


def _validated(pi: Sequence[int]) -> tuple[int, ...]:
    p = tuple(pi)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"not a permutation of 1..{len(p)}: {p!r}")
    return p


def _positions(pi: tuple[int, ...]) -> list[int]:
    # pos[v - 1] = 0-based index of value v in pi
    pos = [0] * len(pi)
    for i, v in enumerate(pi):
        pos[v - 1] = i
    return pos


def descents_of_inverse(pi: Sequence[int]) -> int:
    """Number of i in 1..n-1 with i+1 placed before i (the statistic W)."""
    p = _validated(pi)
    if not p:
        raise ValueError("empty permutation")
    pos = _positions(p)
    return sum(1 for i in range(len(p) - 1) if pos[i] > pos[i + 1])


def move_to_end(pi: Sequence[int], i: int) -> tuple[int, ...]:
    """Remove the entry at 1-based position i and append it."""
    p = _validated(pi)
    if not 1 <= i <= len(p):
        raise ValueError(f"position {i} out of range 1..{len(p)}")
    return p[: i - 1] + p[i:] + (p[i - 1],)


def up_step_indicators(pi: Sequence[int]) -> tuple[int, ...]:
    """The n-1 bits whose average over positions is P[W' = W + 1 | pi].

    Bit 1 is set when 1 precedes 2; bit i (i >= 2) when i-1, i, i+1 appear
    in order.  Bit i is exactly the event that moving value i to the end
    raises W by one.
    """
    p = _validated(pi)
    n = len(p)
    if n < 2:
        raise ValueError("need n >= 2")
    pos = _positions(p)
    bits = [1 if pos[0] < pos[1] else 0]
    for i in range(2, n):
        bits.append(1 if pos[i - 2] < pos[i - 1] < pos[i] else 0)
    return tuple(bits)


def up_step_probability(pi: Sequence[int]) -> Fraction:
    """P[W' = W + 1 | pi] = (sum of up_step_indicators) / n, exactly."""
    bits = up_step_indicators(pi)
    return Fraction(sum(bits), len(bits) + 1)


@dataclass(frozen=True)
class PairMomentReport:
    """Exhaustively enumerated moments of (W, W', S) at a given n.

    The five t-terms group the second moment E[(X_1+...+X_{n-1})^2] by which
    indicator pairs interact: t1 collects first moments, t2 the ordered pairs
    involving index 1, t3/t4 interior pairs at index distance 1/2, t5 the
    independent interior pairs at distance >= 3.  They are populated only for
    n >= 6, where all five groups are nonempty.

    ``lambda_check`` is the verified regression factor f in
    E[W' - mu | W] = f (W - mu), present only when the relation holds exactly
    at every occupied value of W; it then equals (n-2)/n.
    """

    n: int
    t1: Optional[Fraction]
    t2: Optional[Fraction]
    t3: Optional[Fraction]
    t4: Optional[Fraction]
    t5: Optional[Fraction]
    mean_s: Fraction
    var_s_conditional_on_pi: Fraction
    var_s_conditional_on_w: Fraction
    lambda_check: Optional[Fraction]
    exchangeable: bool
    step_range_ok: bool

    def __post_init__(self):
        # conditioning on W is coarser than conditioning on pi
        if self.var_s_conditional_on_w > self.var_s_conditional_on_pi:
            raise ValueError("Var(S|W) exceeds Var(S|pi)")


def _enumerate_all(n: int):
    """All n! permutations with positions, up-steps, indicators, W, and n*S."""
    perms = np.array(list(itertools.permutations(range(1, n + 1))), dtype=np.int64)
    m = perms.shape[0]
    rows = np.arange(m)[:, None]
    pos = np.empty_like(perms)
    pos[rows, perms - 1] = np.arange(n)[None, :]
    up = pos[:, :-1] < pos[:, 1:]
    w = (n - 1) - up.sum(axis=1)
    x = np.concatenate([up[:, :1], up[:, :-1] & up[:, 1:]], axis=1)
    s_num = x.sum(axis=1)
    return perms, pos, up, x, w, s_num


def _int_bincount(values: np.ndarray, weights: np.ndarray, length: int) -> list[int]:
    # float64 accumulation is exact here: totals stay far below 2**53
    acc = np.bincount(values, weights=weights.astype(np.float64), minlength=length)
    return [int(round(t)) for t in acc]


def pair_oracle(n: int) -> PairMomentReport:
    """Enumerate all n! * n chain transitions and report exact moments.

    W' is recounted from scratch on each moved permutation rather than via
    any increment formula, so the report is an independent check of every
    identity (step range, exchangeability of (W, W'), linear regression of
    W' on W, and the S moments).
    """
    if not 2 <= n <= ORACLE_LIMIT:
        raise ValueError(f"n must be in 2..{ORACLE_LIMIT}, got {n}")
    perms, pos, up, x, w, s_num = _enumerate_all(n)
    m = perms.shape[0]
    row_idx = np.arange(m)

    sum_s = int(s_num.sum())
    sum_s2 = int((s_num.astype(np.int64) ** 2).sum())
    mean_s = Fraction(sum_s, m * n)
    var_s_pi = Fraction(sum_s2, m * n * n) - mean_s**2

    counts_w = np.bincount(w, minlength=n)
    s_sums_by_w = _int_bincount(w, s_num, n)
    var_s_w = (
        sum(
            Fraction(int(c), m) * Fraction(sw, int(c) * n) ** 2
            for c, sw in zip(counts_w, s_sums_by_w)
            if c
        )
        - mean_s**2
    )

    if n >= 6:
        pair_counts = x.astype(np.int64).T @ x.astype(np.int64)
        t1 = Fraction(int(np.trace(pair_counts)), m)
        t2 = Fraction(2 * int(pair_counts[0, 1:].sum()), m)
        t3 = Fraction(2 * sum(int(pair_counts[i, i + 1]) for i in range(1, n - 2)), m)
        t4 = Fraction(2 * sum(int(pair_counts[i, i + 2]) for i in range(1, n - 3)), m)
        t5_count = sum(
            int(pair_counts[i, j])
            for i in range(1, n - 1)
            for j in range(i + 3, n - 1)
        )
        t5 = Fraction(2 * t5_count, m)
    else:
        t1 = t2 = t3 = t4 = t5 = None

    # every transition: move the entry at position i, recount W'
    hist = np.zeros(n * n, dtype=np.int64)
    delta_lo, delta_hi = 0, 0
    for i in range(n):
        v = perms[:, i]
        posp = pos - (pos > i)
        posp[row_idx, v - 1] = n - 1
        wp = (n - 1) - (posp[:, :-1] < posp[:, 1:]).sum(axis=1)
        d = wp - w
        delta_lo = min(delta_lo, int(d.min()))
        delta_hi = max(delta_hi, int(d.max()))
        hist += np.bincount(w * n + wp, minlength=n * n)
    joint = hist.reshape(n, n)

    step_range_ok = delta_lo >= -1 and delta_hi <= 1
    exchangeable = bool((joint == joint.T).all())

    mu = Fraction(n - 1, 2)
    factor = Fraction(n - 2, n)
    wp_sums = (joint * np.arange(n)[None, :]).sum(axis=1)
    linear = all(
        Fraction(int(wp_sums[w0]), int(row_total)) - mu == factor * (w0 - mu)
        for w0, row_total in enumerate(joint.sum(axis=1))
        if row_total
    )

    return PairMomentReport(
        n=n,
        t1=t1,
        t2=t2,
        t3=t3,
        t4=t4,
        t5=t5,
        mean_s=mean_s,
        var_s_conditional_on_pi=var_s_pi,
        var_s_conditional_on_w=var_s_w,
        lambda_check=factor if linear else None,
        exchangeable=exchangeable,
        step_range_ok=step_range_ok,
    )


def indicator_pair_moments(n: int) -> dict[tuple[int, int], Fraction]:
    """E[X_i X_j] for 1 <= i <= j <= n-1 by exhaustive enumeration.

    The diagonal entries are the first moments E[X_i].
    """
    if not 2 <= n <= ORACLE_LIMIT:
        raise ValueError(f"n must be in 2..{ORACLE_LIMIT}, got {n}")
    _, _, _, x, _, _ = _enumerate_all(n)
    m = x.shape[0]
    pair_counts = x.astype(np.int64).T @ x.astype(np.int64)
    return {
        (i + 1, j + 1): Fraction(int(pair_counts[i, j]), m)
        for i in range(n - 1)
        for j in range(i, n - 1)
    }


@dataclass(frozen=True)
class ChainSamples:
    """Monte Carlo draws of (W, W', S), one chain transition per draw."""

    n: int
    steps: int
    seed: int
    w: np.ndarray
    w_prime: np.ndarray
    s: np.ndarray

    def __post_init__(self):
        for name in ("w", "w_prime", "s"):
            arr = getattr(self, name)
            arr.flags.writeable = False
            if len(arr) != self.steps:
                raise ValueError(f"{name} has {len(arr)} entries, expected {self.steps}")

    @property
    def s_mean(self) -> float:
        return float(self.s.mean())

    @property
    def s_var(self) -> float:
        return float(self.s.var(ddof=1)) if self.steps > 1 else 0.0


def sample_chain(n: int, steps: int, seed: int) -> ChainSamples:
    """Draw `steps` independent chain transitions from stationarity.

    Each draw is a fresh uniform permutation (Fisher-Yates per row inside
    numpy's PCG64 generator) plus one uniform position to move, recording
    (W(pi), W(pi'), S(pi)).  Identical seeds give identical outputs.  For
    parallel sampling, split streams with
    ``np.random.SeedSequence(seed).spawn(k)`` and merge running moments;
    this function itself is single-stream.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if steps < 1:
        raise ValueError(f"steps must be >= 1, got {steps}")
    rng = np.random.default_rng(seed)
    base = np.arange(1, n + 1, dtype=np.int64)
    w_out = np.empty(steps, dtype=np.int64)
    wp_out = np.empty(steps, dtype=np.int64)
    s_out = np.empty(steps, dtype=np.float64)
    done = 0
    while done < steps:
        m = min(_SAMPLE_CHUNK, steps - done)
        perms = np.tile(base, (m, 1))
        rng.permuted(perms, axis=1, out=perms)
        rows = np.arange(m)[:, None]
        pos = np.empty_like(perms)
        pos[rows, perms - 1] = np.arange(n)[None, :]
        up = pos[:, :-1] < pos[:, 1:]
        w = (n - 1) - up.sum(axis=1)
        s_num = up[:, 0].astype(np.int64) + (up[:, :-1] & up[:, 1:]).sum(axis=1)

        idx = rng.integers(0, n, size=m)
        v = perms[np.arange(m), idx]
        posp = pos - (pos > idx[:, None])
        posp[np.arange(m), v - 1] = n - 1
        wp = (n - 1) - (posp[:, :-1] < posp[:, 1:]).sum(axis=1)

        w_out[done : done + m] = w
        wp_out[done : done + m] = wp
        s_out[done : done + m] = s_num / n
        done += m
    return ChainSamples(n=n, steps=steps, seed=seed, w=w_out, w_prime=wp_out, s=s_out)
