"""Acceptance gate: the package's shipped guarantees, one check per test.

Each test prints a single pass/fail line (visible with ``pytest -s``) and
enforces the stated numeric tolerance plus, where stated, a runtime budget.
The checks deliberately recompute their own inputs rather than sharing
fixtures, so every line stands alone.
"""

import math
import time
from fractions import Fraction

from eulermod import (
    bernoulli_even_probability,
    bernoulli_numbers,
    brute_force_descent_distribution,
    descent_bound_inputs,
    descent_tp_bound,
    eulerian_triangle,
    even_count_deviation,
    even_deviation_decay_rates,
    generic_tp_bound,
    modular_descent_probability,
    pair_oracle,
    poisson_mod_bounds,
    poisson_mod_probability,
    sample_chain,
    tv_descents_vs_tp,
    up_step_variance,
)
from eulermod.cli import main, verify_main_report

LAMBDA_GRID = (0.5, 1.0, 2.0, 5.0, 10.0, 50.0)
MODULI = range(2, 13)


def _report(num: int, label: str, ok: bool) -> None:
    print(f"[criterion {num:2d}] {label}: {'PASS' if ok else 'FAIL'}")
    assert ok, f"criterion {num} failed: {label}"


def test_01_triangle_ground_truth():
    t0 = time.perf_counter()
    table = eulerian_triangle(8)
    ok = table.row(3) == (1, 4, 1)
    for n in range(1, 9):
        dist = brute_force_descent_distribution(n)
        counts = tuple(w * math.factorial(n) for w in dist.weights)
        ok = ok and counts == table.row(n)
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed < 5.0
    _report(1, f"triangle row 3 = (1,4,1), rows 1..8 = brute force ({elapsed:.2f}s)", ok)


def test_02_bernoulli_identity():
    t0 = time.perf_counter()
    table = eulerian_triangle(50)
    seq = bernoulli_numbers(51)
    ok = all(
        bernoulli_even_probability(n, seq)
        == modular_descent_probability(n, 2, 0, table)
        for n in range(1, 51)
    )
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed < 5.0
    _report(2, f"Bernoulli closed form = parity mass, n = 1..50 ({elapsed:.2f}s)", ok)


def test_03_parity_deviation_decay_rate():
    # The parity deviation is exactly zero at every even n (row symmetry
    # flips parity when n is even), so a ratio of consecutive-n deviations
    # is 0/x or x/0 on alternating steps.  The measurable per-step rate is
    # the square root of the two-step ratio between consecutive odd n; that
    # is what must sit within 0.02 of 2/pi across the 20..30 window.
    table = eulerian_triangle(31)
    ok = all(even_count_deviation(n, table) == 0 for n in range(20, 31, 2))
    rates = even_deviation_decay_rates(19, 29, table)
    ok = ok and [n for n, _ in rates] == [19, 21, 23, 25, 27, 29]
    worst = max(abs(rate - 2 / math.pi) for _, rate in rates)
    ok = ok and worst < 0.02
    _report(3, f"per-step parity decay within 0.02 of 2/pi (worst {worst:.2e})", ok)


def test_04_residue_bound_suite():
    # The tight bound at large lambda lies far below the double-precision
    # noise floor of any probability summation, so the comparison carries a
    # 1e-12 absolute slack, the same scale the b=2 equality check uses.
    t0 = time.perf_counter()
    ok = True
    for lam in LAMBDA_GRID:
        for b in MODULI:
            tight, loose = poisson_mod_bounds(lam, b)
            ok = ok and tight <= loose + 1e-15
            for k in range(b):
                for method in ("direct_sum", "fourier"):
                    dev = abs(poisson_mod_probability(lam, b, k, method) - 1 / b)
                    ok = ok and dev <= tight + 1e-12
        dev2 = abs(poisson_mod_probability(lam, 2, 0, "fourier") - 0.5)
        ok = ok and abs(dev2 - math.exp(-2 * lam) / 2) <= 1e-12
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed < 10.0
    _report(4, f"residue deviations <= tight <= loose on full grid ({elapsed:.2f}s)", ok)


def test_05_residue_methods_agree():
    worst = 0.0
    for lam in LAMBDA_GRID:
        for b in MODULI:
            for k in range(b):
                d = poisson_mod_probability(lam, b, k, "direct_sum")
                f = poisson_mod_probability(lam, b, k, "fourier")
                worst = max(worst, abs(d - f))
    _report(5, f"direct sum vs Fourier within 1e-10 (worst {worst:.2e})", worst < 1e-10)


def test_06_enumeration_oracle():
    t0 = time.perf_counter()
    ok = True
    for n in range(6, 10):
        rep = pair_oracle(n)
        ok = ok and rep.mean_s == Fraction(n + 1, 6 * n)
        ok = ok and rep.t1 == Fraction(n + 1, 6)
        ok = ok and rep.t2 == Fraction(2, 6) + Fraction(2, 24) + Fraction(2 * (n - 4), 12)
        ok = ok and rep.t3 == Fraction(2 * (n - 3), 24)
        ok = ok and rep.t4 == Fraction(2 * (n - 4), 120)
        ok = ok and rep.t5 == Fraction((n - 4) * (n - 5), 36)
        ok = ok and rep.var_s_conditional_on_pi == Fraction(23 * (n + 1), 180 * n * n)
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed < 60.0
    _report(6, f"pair oracle 6..9 reproduces all moment formulas ({elapsed:.2f}s)", ok)


def test_07_pair_hypotheses():
    ok = True
    for n in range(2, 8):
        rep = pair_oracle(n)
        ok = ok and rep.exchangeable and rep.step_range_ok
        ok = ok and rep.lambda_check == Fraction(n - 2, n)  # factor 1 - 2/n
    _report(7, "exchangeability, step range, linearity with factor 1 - 2/n", ok)


def test_08_tv_against_bound_sweep():
    t0 = time.perf_counter()
    table = eulerian_triangle(200)
    min_margin, argmin = math.inf, None
    ok = True
    for n in range(45, 201):
        margin = descent_tp_bound(n) - tv_descents_vs_tp(n, table).value
        if margin < min_margin:
            min_margin, argmin = margin, n
        ok = ok and margin >= 0
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed < 60.0
    _report(
        8,
        f"tv <= closed-form bound, n = 45..200 "
        f"(min margin {min_margin:.4f} at n={argmin}, {elapsed:.2f}s)",
        ok,
    )


def test_09_modular_bound_sweep_and_cli(tmp_path):
    report = verify_main_report(6, 60, ("2", "3", "5", "12", "n"))
    ok = report.all_pass
    out = tmp_path / "verify_main.csv"
    code = main(
        ["verify-main", "--n-min", "6", "--n-max", "60", "--b", "2,3,5,12,n",
         "--no-timestamp", "--out", str(out)]
    )
    ok = ok and code == 0
    _report(9, f"modular bound holds on 6..60 x {{2,3,5,12,n}}, CLI exit {code}", ok)


def test_10_algebraic_reduction():
    worst = 0.0
    for n in range(6, 1001):
        generic = generic_tp_bound(descent_bound_inputs(n))
        closed = descent_tp_bound(n)
        worst = max(worst, abs(generic - closed) / closed)
    _report(10, f"generic bound = reduced form, n = 6..1000 (worst rel {worst:.2e})",
            worst <= 1e-12)


def test_11_monte_carlo_consistency():
    n, steps, seed = 50, 10**6, 1
    samples = sample_chain(n, steps, seed)
    mean_target = (n + 1) / (6 * n)
    var_target = float(up_step_variance(n))
    se_mean = math.sqrt(var_target / steps)
    z_mean = (samples.s_mean - mean_target) / se_mean
    centered = samples.s - samples.s.mean()
    m2 = float((centered**2).mean())
    m4 = float((centered**4).mean())
    se_var = math.sqrt((m4 - m2 * m2) / steps)
    z_var = (samples.s_var - var_target) / se_var
    rerun = sample_chain(n, steps, seed)
    identical = (
        (samples.w == rerun.w).all()
        and (samples.w_prime == rerun.w_prime).all()
        and (samples.s == rerun.s).all()
    )
    ok = abs(z_mean) <= 3.0 and abs(z_var) <= 3.0 and bool(identical)
    _report(
        11,
        f"10^6-step chain at n=50: |z_mean|={abs(z_mean):.2f}, "
        f"|z_var|={abs(z_var):.2f}, reruns identical={bool(identical)}",
        ok,
    )
