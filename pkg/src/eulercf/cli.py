"""Command line tables for the series fractions.

    eulercf sum --m 1 --n 1 --x 1 --depth 40
    eulercf convergents --a 1 --b 0 --depth 5 --format csv
    eulercf contract --a 1 --b 1 --depth 8
    eulercf brouncker --preset odds --depth 3
    eulercf verify --rmax 6 --cap 12 --format json

Rationals go in and come out as ``p/q`` strings. Exit codes: 0 success,
2 usage error, 3 precondition violation, 4 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from decimal import Decimal, InvalidOperation, localcontext
from fractions import Fraction

from . import brouncker as br
from . import contfrac as cfm
from . import derivation, euler, oracle
from .exact import format_rational, parse_rational
from .series import SeriesParams

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PRECONDITION = 3
EXIT_VERIFICATION = 4

SUBCOMMANDS = ("sum", "convergents", "contract", "brouncker", "verify")
FORMATS = ("text", "csv", "json")


class PreconditionError(ValueError):
    pass


@dataclass
class RunConfig:
    subcommand: str
    mnx: tuple | None = None
    ab: tuple | None = None
    depth: int = 10
    format: str = "text"
    tol: Decimal = Decimal("1e-20")
    preset: str | None = None
    r: tuple | None = None
    rmax: int = 6
    caps: tuple = (12,)

    def params(self) -> SeriesParams:
        if self.mnx is not None:
            return SeriesParams.from_mnx(*self.mnx)
        return SeriesParams(*self.ab)

    def oracle_args(self) -> tuple:
        """(m, n, x) for the integral; (a, b) maps to (a, b, 1)."""
        if self.mnx is not None:
            return self.mnx
        a, b = self.ab
        return a, b, Fraction(1)

    def inputs(self) -> dict:
        out: dict = {"depth": self.depth}
        if self.mnx is not None:
            out.update(zip("mnx", map(format_rational, self.mnx)))
        if self.ab is not None:
            out.update(zip("ab", map(format_rational, self.ab)))
        if self.subcommand in ("sum", "convergents", "contract"):
            out["tol"] = str(self.tol)
        if self.preset is not None:
            out["preset"] = self.preset
        if self.r is not None:
            out["r"] = ",".join(map(format_rational, self.r))
        if self.subcommand == "verify":
            out = {"rmax": self.rmax, "caps": list(self.caps)}
        return out


@dataclass
class Report:
    command: str
    inputs: dict
    columns: list
    rows: list = field(default_factory=list)
    oracle: dict | None = None
    checks: list = field(default_factory=list)

    def check(self, name: str, passed: bool):
        self.checks.append({"name": name, "pass": bool(passed)})

    @property
    def failed(self) -> bool:
        return any(not c["pass"] for c in self.checks)


def decimal17(q) -> str:
    """Fixed 17-significant-digit rendering of an exact or decimal value."""
    with localcontext() as ctx:
        ctx.prec = 50
        if isinstance(q, Fraction):
            d = Decimal(q.numerator) / Decimal(q.denominator)
        else:
            d = Decimal(q)
        if d == 0:
            return "0." + "0" * 16 + "e+0"
        return format(d, ".16e")


def _oracle_for(config: RunConfig) -> oracle.OracleValue | None:
    m, n, x = config.oracle_args()
    if m <= 0 or x <= 0 or n < 0:
        return None
    return oracle.borel_integral(m, n, x, tol=config.tol)


def _diff(q: Fraction, ov: oracle.OracleValue) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = 50
        return Decimal(q.numerator) / Decimal(q.denominator) - ov.as_decimal


def _agreement_digits(q: Fraction, ov: oracle.OracleValue) -> int:
    diff = abs(_diff(q, ov))
    if diff == 0:
        return oracle.DIGITS
    return max(0, min(oracle.DIGITS, int(-diff.log10())))


# -- subcommands ----------------------------------------------------------


def _require_depth(depth: int, minimum: int = 1):
    if depth < minimum:
        raise PreconditionError(f"depth must be >= {minimum}, got {depth}")


def cmd_sum(config: RunConfig) -> Report:
    _require_depth(config.depth, 2)
    cf = euler.build_cf(config.params()).cf
    try:
        br_ = cfm.bracket(cf, config.depth)
    except cfm.NonAlternatingError as exc:
        raise PreconditionError(str(exc)) from exc
    ov = _oracle_for(config)
    report = Report(
        "sum",
        config.inputs(),
        ["depth", "lo", "hi", "width", "midpoint", "midpoint_decimal", "oracle", "agreement_digits", "contained"],
    )
    row = {
        "depth": config.depth,
        "lo": format_rational(br_.lo),
        "hi": format_rational(br_.hi),
        "width": decimal17(br_.width),
        "midpoint": format_rational(br_.midpoint),
        "midpoint_decimal": decimal17(br_.midpoint),
        "oracle": None,
        "agreement_digits": None,
        "contained": None,
    }
    if ov is not None:
        report.oracle = ov.to_dict()
        with localcontext() as ctx:
            ctx.prec = 50
            lo = Decimal(br_.lo.numerator) / Decimal(br_.lo.denominator)
            hi = Decimal(br_.hi.numerator) / Decimal(br_.hi.denominator)
        contained = lo <= ov.as_decimal <= hi if ov.exact is None else br_.contains(ov.exact)
        row.update(
            oracle=decimal17(ov.as_decimal),
            agreement_digits=_agreement_digits(br_.midpoint, ov),
            contained=contained,
        )
        report.check("contained", contained)
    report.rows.append(row)
    return report


def cmd_convergents(config: RunConfig) -> Report:
    _require_depth(config.depth)
    cf = euler.build_cf(config.params()).cf
    try:
        convs = cfm.convergents(cf, config.depth)
    except cfm.DegenerateDepthError as exc:
        raise PreconditionError(str(exc)) from exc
    ov = _oracle_for(config)
    report = Report("convergents", config.inputs(), ["depth", "h", "kk", "value", "decimal", "error"])
    if ov is not None:
        report.oracle = ov.to_dict()
    for c in convs:
        value = c.value
        report.rows.append(
            {
                "depth": c.depth,
                "h": format_rational(c.h),
                "kk": format_rational(c.kk),
                "value": format_rational(value),
                "decimal": decimal17(value),
                "error": None if ov is None else decimal17(_diff(value, ov)),
            }
        )
    return report


def cmd_contract(config: RunConfig) -> Report:
    _require_depth(config.depth)
    p = config.params()
    contracted = euler.build_contracted(p)
    original = euler.build_cf(p).cf
    try:
        con_vals = cfm.convergent_values(contracted, config.depth)
        orig_vals = cfm.convergent_values(original, 2 * config.depth + 2)
    except cfm.DegenerateDepthError as exc:
        raise PreconditionError(str(exc)) from exc
    via_contract = cfm.contract_even(euler.nested_form(p))
    ov = _oracle_for(config)
    report = Report(
        "contract",
        config.inputs(),
        ["k", "num", "den", "convergent", "decimal", "original_depth", "original_convergent", "product_is_one"],
    )
    if ov is not None:
        with localcontext() as ctx:
            ctx.prec = 50
            report.oracle = dict(ov.to_dict(), reciprocal=decimal17(1 / ov.as_decimal))
    all_one = True
    for k in range(config.depth + 1):
        num, den = (None, None) if k == 0 else contracted.pair(k)
        product_is_one = con_vals[k] * orig_vals[2 * k + 2] == 1
        all_one &= product_is_one
        report.rows.append(
            {
                "k": k,
                "num": None if num is None else format_rational(num),
                "den": format_rational(contracted.lead) if den is None else format_rational(den),
                "convergent": format_rational(con_vals[k]),
                "decimal": decimal17(con_vals[k]),
                "original_depth": 2 * k + 2,
                "original_convergent": format_rational(orig_vals[2 * k + 2]),
                "product_is_one": product_is_one,
            }
        )
    report.check("even_convergents_reciprocal", all_one)
    report.check(
        "matches_contract_even",
        contracted.lead == via_contract.lead and contracted.pairs(config.depth) == via_contract.pairs(config.depth),
    )
    return report


_LIMITS = {"odds": "pi_over_4", "naturals": "ln2"}


def cmd_brouncker(config: RunConfig) -> Report:
    _require_depth(config.depth)
    try:
        if config.preset is not None:
            r = br.RSequence.preset(config.preset)
        else:
            r = br.RSequence(config.r)
        if r.length is not None and config.depth > r.length:
            raise PreconditionError(f"depth {config.depth} exceeds the {r.length} given r values")
        cf = br.cf_from_r(r)
        convs = cfm.convergent_values(cf, config.depth)
        sums = br.series_sum_from_r(r, config.depth)
    except br.NotIncreasingError as exc:
        raise PreconditionError(str(exc)) from exc

    report = Report(
        "brouncker",
        config.inputs(),
        ["depth", "num", "den", "r", "convergent", "partial_sum", "equal", "decimal"],
    )
    pairs = cf.pairs(config.depth)
    rs = r.take(config.depth)
    all_equal = True
    for d in range(1, config.depth + 1):
        equal = convs[d] == sums[d - 1]
        all_equal &= equal
        num, den = pairs[d - 1]
        report.rows.append(
            {
                "depth": d,
                "num": format_rational(num),
                "den": format_rational(den),
                "r": format_rational(rs[d - 1]),
                "convergent": format_rational(convs[d]),
                "partial_sum": format_rational(sums[d - 1]),
                "equal": equal,
                "decimal": decimal17(convs[d]),
            }
        )
    report.check("convergent_equals_partial_sum", all_equal)
    decoded = br.detect_r(cf, config.depth)
    report.check("detect_r_round_trip", bool(decoded) and decoded.take(config.depth) == rs)
    if config.preset in _LIMITS:
        ov = oracle.reference_value(_LIMITS[config.preset])
        report.oracle = dict(ov.to_dict(), name=_LIMITS[config.preset])
        if config.depth >= 2:
            b = cfm.bracket(cf, config.depth)
            with localcontext() as ctx:
                ctx.prec = 50
                lo = Decimal(b.lo.numerator) / Decimal(b.lo.denominator)
                hi = Decimal(b.hi.numerator) / Decimal(b.hi.denominator)
            report.check("bracket_contains_limit", lo <= ov.as_decimal <= hi)
    return report


def cmd_verify(config: RunConfig) -> Report:
    if config.rmax < 0:
        raise PreconditionError("rmax must be >= 0")
    if any(c < 2 for c in config.caps):
        raise PreconditionError("every cap must be >= 2")
    report = Report("verify", config.inputs(), ["kind", "r", "term_cap", "holds", "first_discrepancy"])
    grid = [("I2", -1)] + [(kind, r) for r in range(config.rmax + 1) for kind in ("I1", "I2")]
    for cap in config.caps:
        for kind, r in grid:
            rep = derivation.verify_identity(kind, r, cap).to_dict()
            if rep["first_discrepancy"] is not None:
                d = rep["first_discrepancy"]
                rep["first_discrepancy"] = f"a^{d['monomial'][0]} b^{d['monomial'][1]}: {d['lhs']} vs {d['rhs']}"
            report.rows.append(rep)
    report.check("identities_hold", all(row["holds"] for row in report.rows))

    depth = 2 * config.rmax + 3
    try:
        trace = derivation.verify_chain(depth, max(config.caps))
        symbolic = SeriesParams.symbolic(1)
        expected = euler.build_cf(symbolic).c_sequence(depth)
        report.check("chain_matches_fraction", trace.emitted_numerators == expected)
    except derivation.IdentityFailure:
        report.check("chain_matches_fraction", False)
    return report


COMMANDS = {
    "sum": cmd_sum,
    "convergents": cmd_convergents,
    "contract": cmd_contract,
    "brouncker": cmd_brouncker,
    "verify": cmd_verify,
}


# -- rendering ------------------------------------------------------------


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def render(report: Report, fmt: str) -> str:
    if fmt == "json":
        payload = {
            "command": report.command,
            "inputs": report.inputs,
            "rows": report.rows,
            "oracle": report.oracle,
            "checks": report.checks,
        }
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(report.columns)
        for row in report.rows:
            writer.writerow([_cell(row[c]) for c in report.columns])
        return buf.getvalue()
    return _render_text(report)


def _render_text(report: Report) -> str:
    lines = [f"# {report.command}"]
    lines += [f"# {k} = {v}" for k, v in report.inputs.items()]
    table = [report.columns] + [[_cell(row[c]) for c in report.columns] for row in report.rows]
    widths = [max(len(r[i]) for r in table) for i in range(len(report.columns))]
    for r in table:
        lines.append("  ".join(cell.rjust(w) for cell, w in zip(r, widths)).rstrip())
    if report.oracle is not None:
        extras = ", ".join(f"{k}={v}" for k, v in report.oracle.items() if k != "value")
        lines.append(f"oracle: {report.oracle['value']} ({extras})")
    for c in report.checks:
        lines.append(f"check {c['name']}: {'pass' if c['pass'] else 'FAIL'}")
    return "\n".join(lines) + "\n"


def run(config: RunConfig) -> tuple:
    """Execute ``config``; returns ``(exit_status, rendered_report)``."""
    try:
        report = COMMANDS[config.subcommand](config)
    except PreconditionError as exc:
        return EXIT_PRECONDITION, f"precondition violated: {exc}\n"
    except oracle.OracleError as exc:
        return EXIT_PRECONDITION, f"oracle failed: {exc}\n"
    status = EXIT_VERIFICATION if report.failed else EXIT_OK
    return status, render(report, config.format)


# -- argument parsing -----------------------------------------------------


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _rational_list(text: str) -> tuple:
    parts = [p for p in text.split(",") if p.strip()]
    if not parts:
        raise argparse.ArgumentTypeError("empty list")
    return tuple(_rational_arg(p) for p in parts)


def _int_list(text: str) -> tuple:
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not an integer list: {text!r}") from exc


def _tol_arg(text: str) -> Decimal:
    try:
        tol = Decimal(text)
    except InvalidOperation as exc:
        raise argparse.ArgumentTypeError(f"not a decimal: {text!r}") from exc
    if not tol > 0:
        raise argparse.ArgumentTypeError("tol must be positive")
    return tol


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="eulercf", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p, depth):
        p.add_argument("--depth", type=int, default=depth)
        p.add_argument("--format", choices=FORMATS, default="text")

    def params(p):
        for name in ("m", "n", "x", "a", "b"):
            p.add_argument(f"--{name}", type=_rational_arg)
        p.add_argument("--tol", type=_tol_arg, default=Decimal("1e-20"), help="oracle tolerance")

    for name, depth in (("sum", 40), ("convergents", 10), ("contract", 8)):
        p = sub.add_parser(name)
        common(p, depth)
        params(p)

    p = sub.add_parser("brouncker")
    common(p, 10)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--preset", choices=("odds", "naturals"))
    group.add_argument("--r", type=_rational_list, help='explicit sequence, e.g. "1,3/2,2"')

    p = sub.add_parser("verify")
    common(p, 1)
    p.add_argument("--rmax", type=int, default=6)
    p.add_argument("--cap", type=_int_list, default=(12,), help="term caps, e.g. 4,8,12")
    return parser


def parse_config(argv: list[str] | None = None) -> RunConfig:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = RunConfig(subcommand=args.subcommand, depth=args.depth, format=args.format)
    if args.subcommand in ("sum", "convergents", "contract"):
        mnx = (args.m, args.n, args.x)
        ab = (args.a, args.b)
        has_mnx = any(v is not None for v in mnx)
        has_ab = any(v is not None for v in ab)
        if has_mnx == has_ab:
            parser.error("give exactly one of --m/--n/--x or --a/--b")
        if has_mnx and None in mnx:
            parser.error("--m, --n and --x go together")
        if has_ab and None in ab:
            parser.error("--a and --b go together")
        config.mnx = mnx if has_mnx else None
        config.ab = ab if has_ab else None
        config.tol = args.tol
    elif args.subcommand == "brouncker":
        config.preset, config.r = args.preset, args.r
    else:
        config.rmax, config.caps = args.rmax, args.cap
    return config


def main(argv: list[str] | None = None) -> int:
    config = parse_config(argv)
    status, text = run(config)
    stream = sys.stderr if status == EXIT_PRECONDITION else sys.stdout
    stream.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
