"""Chain statistics, the enumeration oracle, and Monte Carlo sampling."""

import itertools
import math
from collections import Counter
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from eulermod import (
    descents_of_inverse,
    eulerian_triangle,
    indicator_pair_moments,
    move_to_end,
    pair_oracle,
    sample_chain,
    up_step_indicators,
    up_step_probability,
)

PI7 = (6, 4, 1, 5, 3, 2, 7)


def test_descents_of_inverse_examples():
    assert descents_of_inverse((1, 2, 3, 4)) == 0
    assert descents_of_inverse(tuple(range(7, 0, -1))) == 6
    assert descents_of_inverse(PI7) == 3
    assert descents_of_inverse((1,)) == 0


def test_move_to_end_examples():
    assert move_to_end(PI7, 3) == (6, 4, 5, 3, 2, 7, 1)
    assert move_to_end(PI7, 7) == PI7
    assert move_to_end((1, 2, 3, 4), 1) == (2, 3, 4, 1)


def test_indicator_examples():
    assert up_step_indicators((1, 2, 3, 4, 5)) == (1, 1, 1, 1)
    assert up_step_indicators((5, 4, 3, 2, 1)) == (0, 0, 0, 0)
    assert up_step_indicators(PI7) == (1, 0, 0, 0, 0, 0)
    assert up_step_probability(PI7) == Fraction(1, 7)
    assert up_step_probability((1, 2, 3, 4, 5, 6, 7)) == Fraction(6, 7)
    assert up_step_probability((7, 6, 5, 4, 3, 2, 1)) == 0


def test_input_validation():
    for bad in ((1, 1, 2), (0, 1, 2), (2, 3), ()):
        with pytest.raises(ValueError):
            descents_of_inverse(bad)
    with pytest.raises(ValueError):
        move_to_end((2, 1), 0)
    with pytest.raises(ValueError):
        move_to_end((2, 1), 3)
    with pytest.raises(ValueError):
        up_step_indicators((1,))


def test_w_distribution_equals_triangle_row():
    n = 6
    counts = Counter(
        descents_of_inverse(p) for p in itertools.permutations(range(1, n + 1))
    )
    row = eulerian_triangle(n).row(n)
    assert tuple(counts[k] for k in range(n)) == row


def test_oracle_small_n():
    rep = pair_oracle(2)
    assert rep.mean_s == Fraction(1, 4)
    assert rep.lambda_check == 0
    assert rep.t1 is None and rep.t5 is None
    rep3 = pair_oracle(3)
    assert rep3.exchangeable and rep3.step_range_ok
    assert rep3.lambda_check == Fraction(1, 3)
    assert rep3.mean_s == Fraction(2, 9)


@pytest.mark.parametrize("n", range(2, 9))
def test_oracle_pair_hypotheses_hold(n):
    rep = pair_oracle(n)
    assert rep.exchangeable
    assert rep.step_range_ok
    assert rep.lambda_check == Fraction(n - 2, n)
    assert rep.mean_s == Fraction(n + 1, 6 * n)
    assert rep.var_s_conditional_on_w <= rep.var_s_conditional_on_pi


def test_oracle_t_terms_at_seven():
    rep = pair_oracle(7)
    assert rep.t1 == Fraction(4, 3)
    assert rep.t2 == Fraction(2, 6) + Fraction(2, 24) + Fraction(2 * 3, 12)
    assert rep.t3 == Fraction(2 * 4, 24)
    assert rep.t4 == Fraction(2 * 3, 120)
    assert rep.t5 == Fraction(3 * 2, 36)
    # the five groups assemble the full second moment of the indicator sum
    n = 7
    second_moment = rep.var_s_conditional_on_pi * n * n + (rep.mean_s * n) ** 2
    assert rep.t1 + rep.t2 + rep.t3 + rep.t4 + rep.t5 == second_moment


def test_oracle_rejects_out_of_range():
    with pytest.raises(ValueError):
        pair_oracle(1)
    with pytest.raises(ValueError):
        pair_oracle(10)


def test_indicator_pair_moments_against_closed_forms():
    n = 8
    moments = indicator_pair_moments(n)
    for i in range(1, n):
        assert moments[(i, i)] == (Fraction(1, 2) if i == 1 else Fraction(1, 6))
    for j in range(2, n):
        if j == 2:
            want = Fraction(1, 6)
        elif j == 3:
            want = Fraction(1, 24)
        else:
            want = Fraction(1, 12)
        assert moments[(1, j)] == want
    for i in range(2, n):
        for j in range(i + 1, n):
            gap = j - i
            if gap == 1:
                want = Fraction(1, 24)
            elif gap == 2:
                want = Fraction(1, 120)
            else:
                want = Fraction(1, 36)
            assert moments[(i, j)] == want


@given(st.permutations(list(range(1, 13))))
def test_statistic_ranges_and_consistency(perm):
    pi = tuple(perm)
    n = len(pi)
    w = descents_of_inverse(pi)
    assert 0 <= w <= n - 1
    bits = up_step_indicators(pi)
    assert up_step_probability(pi) == Fraction(sum(bits), n)
    # up-step bit v fires exactly when moving value v raises W
    pos = {v: i for i, v in enumerate(pi)}
    for v in range(1, n + 1):
        moved = move_to_end(pi, pos[v] + 1)
        delta = descents_of_inverse(moved) - w
        assert delta in (-1, 0, 1)
        if v < n:
            assert (delta == 1) == bool(bits[v - 1])
        else:
            assert delta <= 0


def test_sample_chain_is_deterministic_per_seed():
    a = sample_chain(8, 3000, 42)
    b = sample_chain(8, 3000, 42)
    c = sample_chain(8, 3000, 43)
    assert (a.w == b.w).all() and (a.w_prime == b.w_prime).all() and (a.s == b.s).all()
    assert not (a.w == c.w).all()


def test_sample_chain_respects_step_range_and_supports():
    cs = sample_chain(5, 4000, 7)
    assert cs.w.min() >= 0 and cs.w.max() <= 4
    assert cs.w_prime.min() >= 0 and cs.w_prime.max() <= 4
    assert set(np.unique(cs.w_prime - cs.w)) <= {-1, 0, 1}
    assert np.all((cs.s >= 0) & (cs.s <= 4 / 5))


def test_sample_chain_mean_tracks_enumeration():
    n, steps = 5, 40000
    cs = sample_chain(n, steps, 11)
    rep = pair_oracle(n)
    se = math.sqrt(float(rep.var_s_conditional_on_pi) / steps)
    assert abs(cs.s_mean - float(rep.mean_s)) < 5 * se


def test_sample_chain_crosses_chunk_boundary():
    # internal chunk is 32768; straddling it must not disturb determinism
    long = sample_chain(4, 32768 + 5, 3)
    assert long.steps == 32768 + 5
    assert len(long.w) == len(long.s) == 32768 + 5


def test_sample_chain_validation():
    with pytest.raises(ValueError):
        sample_chain(1, 10, 0)
    with pytest.raises(ValueError):
        sample_chain(5, 0, 0)
