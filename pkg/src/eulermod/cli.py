"""Verification sweeps and reports over the descent-count machinery.

Subcommands either print data (triangle, modular, poisson-mod, simulate) or
run an inequality / identity sweep and fail loudly (verify-main, verify-tp,
oracle).  Exit code 0 means every emitted row passed, 1 means at least one
check failed, 2 means the invocation itself was invalid.

Output is CSV (default) or JSON.  Exact rationals appear twice, as a "p/q"
string and as a decimal real, so nothing downstream ever re-parses an exact
value lossily.  Reruns with the same flags and --no-timestamp are
byte-identical.
"""

from __future__ import annotations

import argparse
import csv
import datetime
import io
import json
import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import __version__
from .bounds import descent_tp_bound, modular_descent_bound, up_step_variance
from .distance import tv_descents_vs_tp
from .eulerian import EulerianTable, eulerian_triangle, modular_descent_probability
from .exchangeable import ChainSamples, PairMomentReport, pair_oracle, sample_chain
from .poisson import poisson_mod_probability

__all__ = ["BoundRow", "BoundReport", "verify_main_report", "verify_tp_report", "main"]

MARGIN_TOLERANCE = 1e-12  # absorbs final float rounding of closed-form sides


@dataclass(frozen=True)
class BoundRow:
    """One lhs <= rhs check; params are ordered (name, value) pairs."""

    params: tuple[tuple[str, object], ...]
    lhs: float
    rhs: float
    margin: float
    passed: bool

    def __post_init__(self):
        if self.margin != self.rhs - self.lhs:
            raise ValueError("margin must equal rhs - lhs")
        if self.passed != (self.margin >= -MARGIN_TOLERANCE):
            raise ValueError("pass flag inconsistent with margin")

    @classmethod
    def check(cls, params: Sequence[tuple[str, object]], lhs: float, rhs: float):
        margin = rhs - lhs
        return cls(
            params=tuple(params),
            lhs=lhs,
            rhs=rhs,
            margin=margin,
            passed=margin >= -MARGIN_TOLERANCE,
        )


@dataclass(frozen=True)
class BoundReport:
    rows: tuple[BoundRow, ...]

    @property
    def all_pass(self) -> bool:
        return all(row.passed for row in self.rows)


def _parse_modulus(token: str, n: int) -> int:
    # the literal token "n" asks for the modulus equal to the row's n
    return n if token == "n" else int(token)


def verify_main_report(
    n_min: int,
    n_max: int,
    b_tokens: Sequence[str],
    table: Optional[EulerianTable] = None,
) -> BoundReport:
    """Check |P[descents = k (mod b)] - 1/b| <= modular_descent_bound(n, b).

    One row per (n, b, k) over n_min..n_max and the given modulus list,
    whose entries are integers >= 2 or the literal "n".  LHS is exact
    rational arithmetic rendered to a double at the end; RHS is the closed
    form.  Duplicate moduli within one n are emitted once.
    """
    if n_min < 6:
        raise ValueError(f"n_min must be >= 6, got {n_min}")
    if n_max < n_min:
        raise ValueError("n_max must be >= n_min")
    if not b_tokens:
        raise ValueError("need at least one modulus")
    if table is None or table.n_max < n_max:
        table = eulerian_triangle(n_max)
    rows = []
    for n in range(n_min, n_max + 1):
        seen = set()
        for token in b_tokens:
            b = _parse_modulus(token, n)
            if b < 2:
                raise ValueError(f"modulus must be >= 2, got {b}")
            if b in seen:
                continue
            seen.add(b)
            rhs = modular_descent_bound(n, b)
            for k in range(b):
                p = modular_descent_probability(n, b, k, table)
                lhs = abs(float(p - Fraction(1, b)))
                rows.append(BoundRow.check((("n", n), ("b", b), ("k", k)), lhs, rhs))
    return BoundReport(rows=tuple(rows))


def verify_tp_report(
    n_list: Sequence[int], table: Optional[EulerianTable] = None
) -> BoundReport:
    """Check tv distance to the translated Poisson against descent_tp_bound."""
    if not n_list:
        raise ValueError("need at least one n")
    for n in n_list:
        if n < 6:
            raise ValueError(f"n must be >= 6, got {n}")
    if table is None or table.n_max < max(n_list):
        table = eulerian_triangle(max(n_list))
    rows = tuple(
        BoundRow.check(
            (("n", n),), tv_descents_vs_tp(n, table).value, descent_tp_bound(n)
        )
        for n in n_list
    )
    return BoundReport(rows=rows)


# ---------------------------------------------------------------- rendering


def _real(x: float) -> str:
    return repr(float(x))


def _cell(value) -> object:
    """JSON-ready cell; Fractions become 'p/q' strings."""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float):
        return value
    return value


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return _real(value)
    return str(value)


def _metadata(args, *, seed: Optional[int] = None) -> list[tuple[str, str]]:
    meta = [
        ("tool", f"eulermod {__version__}"),
        ("command", " ".join(args.raw_argv)),
    ]
    if seed is not None:
        meta.append(("seed", str(seed)))
    if not args.no_timestamp:
        stamp = datetime.datetime.now(datetime.timezone.utc)
        meta.append(("timestamp", stamp.strftime("%Y-%m-%dT%H:%M:%SZ")))
    return meta


def _render_csv(header, rows, meta) -> str:
    buf = io.StringIO()
    for key, value in meta:
        buf.write(f"# {key}: {value}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_csv_cell(v) for v in row])
    return buf.getvalue()


def _render_json(header, rows, meta) -> str:
    body = {
        "metadata": dict(meta),
        "rows": [
            {name: _cell(value) for name, value in zip(header, row)} for row in rows
        ],
    }
    return json.dumps(body, indent=2, allow_nan=False) + "\n"


def _emit(args, header, rows, *, seed: Optional[int] = None) -> None:
    meta = _metadata(args, seed=seed)
    text = (
        _render_json(header, rows, meta)
        if args.format == "json"
        else _render_csv(header, rows, meta)
    )
    if args.out is None:
        sys.stdout.write(text)
    else:
        with open(args.out, "w") as fh:
            fh.write(text)


def _bound_table(report: BoundReport) -> tuple[list[str], list[list[object]]]:
    param_names = [name for name, _ in report.rows[0].params]
    header = param_names + ["lhs", "rhs", "margin", "pass"]
    rows = [
        [value for _, value in row.params]
        + [row.lhs, row.rhs, row.margin, row.passed]
        for row in report.rows
    ]
    return header, rows


# ----------------------------------------------------------------- commands


def _cmd_triangle(args) -> int:
    table = eulerian_triangle(args.n)
    rows = [[args.n, k, v] for k, v in enumerate(table.row(args.n))]
    _emit(args, ["n", "k", "value"], rows)
    return 0


def _cmd_modular(args) -> int:
    ks = range(args.b) if args.k is None else [args.k]
    table = eulerian_triangle(args.n)
    rows = []
    for k in ks:
        p = modular_descent_probability(args.n, args.b, k, table)
        dev = abs(p - Fraction(1, args.b))
        rows.append([args.n, args.b, k, p, float(p), dev, float(dev)])
    header = [
        "n",
        "b",
        "k",
        "probability",
        "probability_real",
        "deviation",
        "deviation_real",
    ]
    _emit(args, header, rows)
    return 0


def _cmd_poisson_mod(args) -> int:
    method = {"sum": "direct_sum", "fourier": "fourier"}[args.method]
    p = poisson_mod_probability(args.lam, args.b, args.k, method=method)
    rows = [[args.lam, args.b, args.k, args.method, p]]
    _emit(args, ["lambda", "b", "k", "method", "probability"], rows)
    return 0


def _cmd_verify_main(args) -> int:
    report = verify_main_report(args.n_min, args.n_max, args.b)
    header, rows = _bound_table(report)
    _emit(args, header, rows)
    return 0 if report.all_pass else 1


def _cmd_verify_tp(args) -> int:
    report = verify_tp_report(args.n)
    header, rows = _bound_table(report)
    _emit(args, header, rows)
    return 0 if report.all_pass else 1


def _t_term_targets(n: int) -> dict[str, Fraction]:
    # closed forms for the five indicator pair groups, n >= 6
    return {
        "t1": Fraction(n + 1, 6),
        "t2": Fraction(2, 6) + Fraction(2, 24) + Fraction(2 * (n - 4), 12),
        "t3": Fraction(2 * (n - 3), 24),
        "t4": Fraction(2 * (n - 4), 120),
        "t5": Fraction((n - 4) * (n - 5), 36),
    }


def _oracle_rows(report: PairMomentReport) -> list[list[object]]:
    n = report.n

    def row(quantity, value, expected):
        if isinstance(value, bool) or isinstance(expected, bool):
            match = None if expected is None else value == expected
            return [quantity, value, None, expected, None, match]
        match = None if expected is None else value == expected
        return [
            quantity,
            value,
            None if value is None else float(value),
            expected,
            None if expected is None else float(expected),
            match,
        ]

    rows = [row("mean_s", report.mean_s, Fraction(n + 1, 6 * n))]
    if n >= 6:
        targets = _t_term_targets(n)
        for name in ("t1", "t2", "t3", "t4", "t5"):
            rows.append(row(name, getattr(report, name), targets[name]))
        var_target = up_step_variance(n)
    else:
        var_target = None
    rows.append(row("var_s_conditional_on_pi", report.var_s_conditional_on_pi, var_target))
    rows.append(row("var_s_conditional_on_w", report.var_s_conditional_on_w, None))
    rows.append(
        row(
            "variance_decomposition",
            bool(report.var_s_conditional_on_w <= report.var_s_conditional_on_pi),
            True,
        )
    )
    rows.append(row("lambda_factor", report.lambda_check, Fraction(n - 2, n)))
    rows.append(row("exchangeable", report.exchangeable, True))
    rows.append(row("step_range_ok", report.step_range_ok, True))
    return rows


def _cmd_oracle(args) -> int:
    report = pair_oracle(args.n)
    rows = _oracle_rows(report)
    header = ["quantity", "value", "value_real", "expected", "expected_real", "match"]
    _emit(args, header, rows)
    return 0 if all(r[-1] is not False for r in rows) else 1


def _simulate_rows(samples: ChainSamples) -> list[list[object]]:
    n, steps = samples.n, samples.steps
    s = samples.s
    w = samples.w.astype(float)
    wp = samples.w_prime.astype(float)

    def z_row(quantity, estimate, target, se):
        if target is None:
            return [quantity, estimate, None, None, None, None, True]
        z = (estimate - float(target)) / se if se > 0 else 0.0
        return [quantity, estimate, target, float(target), se, z, bool(abs(z) <= 3.0)]

    def mean_row(quantity, data, target):
        se = float(data.std(ddof=1)) / math.sqrt(steps) if steps > 1 else 0.0
        return z_row(quantity, float(data.mean()), target, se)

    def var_row(quantity, data, target):
        if steps < 2:
            return z_row(quantity, 0.0, None, 0.0)
        centered = data - data.mean()
        m2 = float((centered**2).mean())
        m4 = float((centered**4).mean())
        se = math.sqrt(max(m4 - m2 * m2, 0.0) / steps)
        return z_row(quantity, float(data.var(ddof=1)), target, se)

    return [
        mean_row("s_mean", s, Fraction(n + 1, 6 * n)),
        var_row("s_var", s, up_step_variance(n) if n >= 6 else None),
        mean_row("w_mean", w, Fraction(n - 1, 2)),
        mean_row("w_prime_mean", wp, Fraction(n - 1, 2)),
        var_row("w_var", w, Fraction(n + 1, 12)),
    ]


def _cmd_simulate(args) -> int:
    samples = sample_chain(args.n, args.steps, args.seed)
    rows = _simulate_rows(samples)
    header = ["quantity", "estimate", "target", "target_real", "stderr", "z", "pass"]
    _emit(args, header, rows, seed=args.seed)
    return 0 if all(r[-1] for r in rows) else 1


# ------------------------------------------------------------------ parsing


def _b_list(text: str) -> list[str]:
    tokens = [t.strip() for t in text.split(",") if t.strip()]
    if not tokens:
        raise argparse.ArgumentTypeError("empty modulus list")
    for t in tokens:
        if t != "n":
            try:
                value = int(t)
            except ValueError:
                raise argparse.ArgumentTypeError(f"bad modulus {t!r}") from None
            if value < 2:
                raise argparse.ArgumentTypeError(f"modulus must be >= 2, got {value}")
    return tokens


def _n_list(text: str) -> list[int]:
    try:
        values = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad integer list {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("empty n list")
    return values


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("csv", "json"), default="csv", help="output format"
    )
    common.add_argument("--out", default=None, help="write to PATH instead of stdout")
    common.add_argument(
        "--no-timestamp",
        action="store_true",
        help="omit the timestamp so reruns are byte-identical",
    )

    parser = argparse.ArgumentParser(
        prog="eulermod",
        description="Exact descent-count statistics and their Poisson-style bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("triangle", parents=[common], help="one row of A(n, k)")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_triangle)

    p = sub.add_parser(
        "modular", parents=[common], help="exact P[descents = k (mod b)]"
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--k", type=int, default=None)
    p.set_defaults(func=_cmd_modular)

    p = sub.add_parser(
        "poisson-mod", parents=[common], help="P[Po(lambda) = k (mod b)]"
    )
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=("sum", "fourier"), default="fourier")
    p.set_defaults(func=_cmd_poisson_mod)

    p = sub.add_parser(
        "verify-main",
        parents=[common],
        help="sweep the modular bound over n and moduli",
    )
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument(
        "--b",
        type=_b_list,
        required=True,
        help="comma-separated moduli; the token n means b equal to each row's n",
    )
    p.set_defaults(func=_cmd_verify_main)

    p = sub.add_parser(
        "verify-tp",
        parents=[common],
        help="sweep the translated-Poisson TV bound",
    )
    p.add_argument("--n", type=_n_list, required=True, help="comma-separated n values")
    p.set_defaults(func=_cmd_verify_tp)

    p = sub.add_parser(
        "oracle", parents=[common], help="exhaustive pair-moment check at one n"
    )
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser(
        "simulate", parents=[common], help="Monte Carlo moments of (W, W', S)"
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=_cmd_simulate)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    raw = list(sys.argv[1:] if argv is None else argv)
    args = _build_parser().parse_args(raw)
    args.raw_argv = raw
    try:
        return args.func(args)
    except (ValueError, OverflowError) as exc:
        print(f"eulermod: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
