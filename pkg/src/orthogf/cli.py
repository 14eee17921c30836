"""Batch command-line front end.

Exit codes: 0 success or accepted verdict, 2 rejected verdict / failed
verification / undefined family, 1 usage error or crash.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .classify import Rejected, classify, identify_from_recursion
from .exact import format_rational, parse_rational
from .families import FAMILY_NAMES, FamilyId, polys_from_recursion, recursion_of
from .favard import NotThreeTerm, Recursion, fit
from .genfun import (
    AbcRule,
    ExplicitRule,
    GFSpec,
    MonicFamily,
    NamedRule,
    ZeroCoefficient,
    expand,
)
from .orthocheck import moments_from_recursion, verify_orthogonality

DEFAULT_ORDER = 12
EXIT_OK, EXIT_USAGE, EXIT_REJECTED = 0, 1, 2
_NEG_RATIONAL = re.compile(r"^-\d+(/\d+)?$")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _dumps(payload) -> str:
    return json.dumps(payload, separators=(",", ":"))


def _csv(rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue().rstrip("\n")


def _join_negative_values(argv: Sequence[str]) -> list[str]:
    # argparse treats "-1/2" as an option; glue it to the preceding flag.
    out: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if (
            tok.startswith("--")
            and "=" not in tok
            and i + 1 < len(argv)
            and _NEG_RATIONAL.match(argv[i + 1])
        ):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise UsageError(f"cannot read {path}: {e}") from e


def _rational(s: str) -> Fraction:
    try:
        return parse_rational(s)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def _rational_list(s: str) -> list[Fraction]:
    return [_rational(v) for v in s.split(",") if v.strip()]


def _order(s: str) -> int:
    try:
        n = int(s)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"order must be an integer, got {s!r}") from e
    if n < 0:
        raise argparse.ArgumentTypeError("order must be non-negative")
    return n


def _rule_from_args(args):
    kind = args.rule
    if kind is None:
        raise UsageError("give --rule (abc, explicit, named:exp|geometric|log) or --input")
    if kind == "abc":
        if None in (args.a, args.b, args.c):
            raise UsageError("--rule abc needs --a, --b and --c")
        return AbcRule(args.a, args.b, args.c)
    if kind == "explicit":
        if not args.values:
            raise UsageError("--rule explicit needs --values")
        return ExplicitRule(tuple(args.values))
    if kind.startswith("named:"):
        name = kind.split(":", 1)[1]
        param = args.a if name == "exp" else args.b
        if param is None:
            raise UsageError(f"--rule {kind} needs --{'a' if name == 'exp' else 'b'}")
        return NamedRule(name, param)
    raise UsageError(f"unknown rule {kind!r}")


def _spec_from_args(args, order: Optional[int] = None) -> GFSpec:
    if args.input:
        data = _load_json(args.input)
        if "rule" not in data:
            raise UsageError(f"{args.input} is not a generating-function spec")
        spec = GFSpec.from_json(data)
        if args.order is not None:
            spec = spec.with_order(args.order)
        return spec if order is None else spec.with_order(order)
    if args.alpha is None:
        raise UsageError("--alpha is required")
    n = order if order is not None else (args.order if args.order is not None else DEFAULT_ORDER)
    return GFSpec(_rule_from_args(args), args.alpha, n)


def _order_arg(args) -> int:
    return args.order if args.order is not None else DEFAULT_ORDER


def _family_id(args) -> FamilyId:
    return FamilyId(args.family, args.lam)


# ---- renderers -----------------------------------------------------------


def _render_family(family: MonicFamily, fmt: str) -> str:
    if fmt == "json":
        return _dumps(family.to_json())
    if fmt == "csv":
        return _csv([("n", "P_n")] + [(n, str(p)) for n, p in enumerate(family.polys)])
    return "\n".join(f"P_{n}(x) = {p}" for n, p in enumerate(family.polys))


def _render_recursion(rec: Recursion, fmt: str) -> str:
    if fmt == "json":
        return _dumps(rec.to_json())
    rows = []
    for n, beta in enumerate(rec.betas):
        omega = format_rational(rec.omega(n)) if 1 <= n <= len(rec.omegas) else ""
        rows.append((n, format_rational(beta), omega))
    if fmt == "csv":
        return _csv([("n", "beta_n", "omega_n")] + rows)
    return "\n".join(
        f"n={n}  beta={b}" + (f"  omega={w}" if w else "") for n, b, w in rows
    )


def _render_flat(payload: dict, fmt: str, approx: bool = False) -> str:
    if approx:
        payload = dict(payload)
        payload["approx"] = {
            k: repr(float(parse_rational(v)))
            for k, v in payload.items()
            if isinstance(v, str) and k not in ("family", "reason")
        }
    if fmt == "json":
        return _dumps(payload)
    flat = {k: v for k, v in payload.items() if not isinstance(v, (dict, list))}
    if fmt == "csv":
        return _csv([list(flat), list(flat.values())])
    return " ".join(f"{k}={v}" for k, v in flat.items())


def _render_report(report, fmt: str) -> str:
    payload = report.to_json()
    if fmt == "json":
        return _dumps(payload)
    if report.passed:
        rows = [(n, format_rational(d)) for n, d in enumerate(report.diagonal)]
        if fmt == "csv":
            return _csv([("n", "norm_n")] + rows)
        return "pass\n" + "\n".join(f"<P_{n},P_{n}> = {d}" for n, d in rows)
    j, k = report.first_failure
    value = format_rational(report.value)
    if fmt == "csv":
        return _csv([("pass", "j", "k", "value"), ("false", j, k, value)])
    return f"fail at ({j}, {k}): {value}"


# ---- subcommands ---------------------------------------------------------


def cmd_expand(args, out: Callable[[str], None]) -> int:
    out(_render_family(expand(_spec_from_args(args)), args.format))
    return EXIT_OK


def cmd_fit(args, out) -> int:
    if args.input:
        data = _load_json(args.input)
        if isinstance(data, dict) and "rule" in data:
            family = expand(_spec_from_args(args))
        else:
            family = MonicFamily.from_json(data)
            if args.order is not None:
                family = family.truncate(args.order)
    else:
        family = expand(_spec_from_args(args))
    out(_render_recursion(fit(family), args.format))
    return EXIT_OK


def cmd_classify(args, out) -> int:
    spec = _spec_from_args(args)
    verdict = classify(spec.rule, spec.alpha, spec.order)
    out(_render_flat(verdict.to_json(), args.format, args.approx))
    return EXIT_REJECTED if isinstance(verdict, Rejected) else EXIT_OK


def cmd_identify(args, out) -> int:
    if args.input:
        rec = Recursion.from_json(_load_json(args.input))
    elif args.omegas is not None:
        betas = args.betas if args.betas is not None else [Fraction(0)] * (len(args.omegas) + 1)
        rec = Recursion(tuple(betas), tuple(args.omegas))
    else:
        raise UsageError("give --input or --omegas (and optionally --betas)")
    if args.alpha is None:
        raise UsageError("--alpha is required")
    verdict = identify_from_recursion(rec, args.alpha)
    out(_render_flat(verdict.to_json(), args.format, args.approx))
    return EXIT_REJECTED if isinstance(verdict, Rejected) else EXIT_OK


def cmd_verify(args, out) -> int:
    N = _order_arg(args)
    if args.family:
        rec = recursion_of(_family_id(args), N + 1)
        family = polys_from_recursion(rec, N)
    else:
        spec = _spec_from_args(args, order=N + 1)
        longer = expand(spec)
        rec = fit(longer)
        family = longer.truncate(N)
    report = verify_orthogonality(family, rec)
    out(_render_report(report, args.format))
    return EXIT_OK if report.passed else EXIT_REJECTED


def cmd_table(args, out) -> int:
    N = _order_arg(args)
    fid = _family_id(args)
    rec = recursion_of(fid, N)
    family = polys_from_recursion(rec, N)
    moments = moments_from_recursion(rec, 2 * N - 1)
    if args.format == "json":
        payload = dict(fid.to_json())
        payload.update(
            order=N,
            recursion=rec.to_json(),
            polys=[p.to_json() for p in family.polys],
            moments=[format_rational(m) for m in moments.moments],
        )
        out(_dumps(payload))
        return EXIT_OK
    rows = []
    for n in range(N + 1):
        beta = format_rational(rec.beta(n)) if n < N else ""
        omega = format_rational(rec.omega(n)) if 1 <= n < N else ""
        rows.append((n, beta, omega, str(family[n])))
    if args.format == "csv":
        text = _csv([("n", "beta_n", "omega_n", "P_n")] + rows)
        text += "\n\n" + _csv([("k", "m_k")] + [(k, format_rational(m)) for k, m in enumerate(moments.moments)])
    else:
        text = "\n".join(f"n={n}  beta={b or '-'}  omega={w or '-'}  P_{n}(x) = {p}" for n, b, w, p in rows)
        text += "\nmoments: " + ", ".join(format_rational(m) for m in moments.moments)
    out(text)
    return EXIT_OK


# ---- parser --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--input", help="JSON file (spec, family or recursion, per subcommand)")
    common.add_argument("--order", type=_order, help=f"truncation order N (default {DEFAULT_ORDER})")

    rule = _Parser(add_help=False)
    rule.add_argument("--rule", help="abc | explicit | named:exp | named:geometric | named:log")
    rule.add_argument("--a", type=_rational)
    rule.add_argument("--b", type=_rational)
    rule.add_argument("--c", type=_rational)
    rule.add_argument("--values", type=_rational_list, help="comma-separated c_0,c_1,...")
    rule.add_argument("--alpha", type=_rational)

    approx = _Parser(add_help=False)
    approx.add_argument("--approx", action="store_true", help="append decimal renderings")

    fam = _Parser(add_help=False)
    fam.add_argument("--family", choices=FAMILY_NAMES)
    fam.add_argument("--lambda", dest="lam", type=_rational)

    parser = _Parser(prog="orthogf", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("expand", parents=[common, rule], help="expand F(xz - alpha z^2) into P_0..P_N")
    sub.add_parser("fit", parents=[common, rule], help="fit three-term recursion coefficients")
    sub.add_parser("classify", parents=[common, rule, approx], help="decide orthogonality of a rule")
    p = sub.add_parser("identify", parents=[common, approx], help="name the family of a recursion")
    p.add_argument("--alpha", type=_rational)
    p.add_argument("--betas", type=_rational_list)
    p.add_argument("--omegas", type=_rational_list)
    sub.add_parser("verify", parents=[common, rule, fam], help="exact Gram-matrix orthogonality check")
    t = sub.add_parser("table", parents=[common, fam], help="reference recursion, polynomials, moments")
    t.set_defaults(family_required=True)
    return parser


COMMANDS = {
    "expand": cmd_expand,
    "fit": cmd_fit,
    "classify": cmd_classify,
    "identify": cmd_identify,
    "verify": cmd_verify,
    "table": cmd_table,
}


def run(argv: Sequence[str], stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr

    def out(text: str) -> None:
        stdout.write(text + "\n")

    def err(payload: dict) -> None:
        stderr.write(_dumps(payload) + "\n")

    try:
        args = build_parser().parse_args(_join_negative_values(list(argv)))
        if getattr(args, "family_required", False) and not args.family:
            raise UsageError("--family is required")
        return COMMANDS[args.command](args, out)
    except UsageError as e:
        err({"error": "usage", "message": str(e)})
        return EXIT_USAGE
    except ZeroCoefficient as e:
        err({"error": "zero_coefficient", "index": e.n, "message": str(e)})
        return EXIT_REJECTED
    except NotThreeTerm as e:
        err({"error": "not_three_term", "index": e.n, "message": str(e)})
        return EXIT_REJECTED
    except (ValueError, KeyError, TypeError) as e:
        err({"error": "invalid_input", "message": str(e)})
        return EXIT_USAGE
    except Exception as e:  # noqa: BLE001 - crash contract: exit 1 with a structured message
        err({"error": "internal", "message": f"{type(e).__name__}: {e}"})
        return EXIT_USAGE


def main(argv: Optional[Sequence[str]] = None) -> None:
    sys.exit(run(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
