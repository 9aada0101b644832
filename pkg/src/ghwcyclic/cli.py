"""Command-line front end.

Exit codes: 0 success, 1 usage or parameter error, 2 cap exceeded,
3 verification failure.
"""

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from . import config
from .bounds import bound_report, bound_violations, dual_generator_matrix, linear_code_hierarchy, wei_duality
from .characters import (
    MultiplicativeCharacter,
    gauss_sum_exact,
    gauss_sum_numeric,
    gauss_sum_quadratic,
    gauss_sum_semiprimitive,
)
from .cyclic_code import build_code, generator_matrix
from .errors import CapExceededError, CrossCheckError, GHWError, InvalidParameterError
from .finite_field import build_field
from .ghw import STRATEGIES, check_monotone, weight_hierarchy

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CAP = 2
EXIT_VERIFY = 3

# (p, l, n, expected hierarchy or None)
BUILTIN_CORPUS = [
    (2, 1, 3, None),
    (2, 1, 5, None),
    (2, 1, 7, [4, 6, 7]),
    (2, 1, 9, None),
    (2, 1, 15, None),
    (3, 1, 4, [2, 4]),
    (3, 1, 8, None),
    (3, 1, 13, None),
    (2, 2, 21, [12, 18, 21]),
    (5, 1, 6, None),
    (2, 1, 17, None),
]

# brute force on the dual enumerates 2^n coordinate subsets
DUAL_MAX_N = 15


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


@dataclass
class RunConfig:
    p: int = None
    l: int = 1
    n: int = None
    strategy: str = "auto"
    subspace_cap: int = config.SUBSPACE_CAP
    field_cap: int = config.FIELD_CAP
    tolerance: float = config.TOLERANCE
    fmt: str = "text"
    output: str = None

    def validate(self):
        if self.subspace_cap <= 0 or self.field_cap <= 0:
            raise InvalidParameterError("caps must be positive")
        if not 0 < self.tolerance < 1e-2:
            raise InvalidParameterError("tolerance must lie in (0, 0.01)")
        if self.strategy not in STRATEGIES:
            raise InvalidParameterError(f"unknown strategy {self.strategy!r}")


def _round12(x):
    x = float(x)
    if abs(x) < 1e-9:
        return 0.0
    return float(f"{x:.12g}")


def dump_json(obj):
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


# -- hierarchy ---------------------------------------------------------------


def hierarchy_report(cfg):
    cs = build_code(cfg.p, cfg.l, cfg.n, field_cap=cfg.field_cap)
    h = weight_hierarchy(cs, cfg.strategy, cap=cfg.subspace_cap, tol=cfg.tolerance)
    rows = [{"r": 0, "d": 0, "method": "convention", "bounds": None, "routes": {}, "witness": [], "witness_route": None}]
    d1 = h.values[0]
    for entry in h.entries:
        rep = bound_report(entry.d, entry.r, cs.n, cs.k, cs.q, d1)
        rows.append(
            {
                "r": entry.r,
                "d": entry.d,
                "method": entry.method,
                "bounds": rep.to_dict(),
                "routes": dict(entry.routes),
                "witness": entry.witness.to_list() if entry.witness else None,
                "witness_route": entry.witness_route,
            }
        )
    return {
        "p": cs.p,
        "l": cs.l,
        "q": cs.q,
        "n": cs.n,
        "k": cs.k,
        "e": cs.e,
        "e_prime": cs.e_prime,
        "strategy": cfg.strategy,
        "hierarchy": rows,
    }


CSV_FIELDS = [
    "r",
    "d",
    "method",
    "lower_singleton",
    "upper_singleton",
    "upper_plotkin",
    "lower_griesmer",
    "r_mds",
    "meets_plotkin",
    "meets_griesmer",
]


def format_hierarchy(report, fmt):
    if fmt == "json":
        return dump_json(report)
    rows = report["hierarchy"][1:]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
        w.writeheader()
        for row in rows:
            w.writerow({"r": row["r"], "d": row["d"], "method": row["method"], **{k: row["bounds"][k] for k in CSV_FIELDS[3:]}})
        return buf.getvalue()
    head = (
        f"[n={report['n']}, k={report['k']}]_{report['q']} irreducible cyclic code"
        f"  (p={report['p']}, l={report['l']}, e={report['e']}, e'={report['e_prime']})\n"
    )
    lines = [head, f"{'r':>3} {'d_r':>5}  {'method':<10} {'Singleton':>11} {'Plotkin':>8} {'Griesmer':>9}  flags"]
    lines.append(f"{0:>3} {0:>5}  {'convention':<10}")
    for row in rows:
        b = row["bounds"]
        flags = [name for name in ("r_mds", "meets_plotkin", "meets_griesmer") if b[name]]
        lines.append(
            f"{row['r']:>3} {row['d']:>5}  {row['method']:<10} "
            f"{b['lower_singleton']:>4}..{b['upper_singleton']:<5} {b['upper_plotkin']:>8} {b['lower_griesmer']:>9}  "
            + ",".join(flags)
        )
    return "\n".join(lines) + "\n"


def cmd_hierarchy(cfg):
    report = hierarchy_report(cfg)
    return EXIT_OK, format_hierarchy(report, cfg.fmt)


# -- gauss -------------------------------------------------------------------


def gauss_report(p, l, order, b=1, field_cap=None):
    fs = build_field(p, l, 1, cap=field_cap)
    if order < 1 or fs.order % order:
        raise InvalidParameterError(f"order {order} does not divide q-1={fs.order}")
    if not 0 <= b < fs.Q:
        raise InvalidParameterError(f"b must encode an element of GF({fs.Q})")
    chi = MultiplicativeCharacter(order)
    num = gauss_sum_numeric(fs, chi, b)
    exact = gauss_sum_exact(fs, chi, b)
    if chi.is_trivial or b == 0:
        rule = "trivial"
    elif order == 2 and p != 2:
        rule = "quadratic"
    elif exact is not None:
        rule = "semiprimitive"
    else:
        rule = None
    magnitude = None
    if not chi.is_trivial and b != 0:
        magnitude = bool(abs(abs(num.value) - fs.Q**0.5) < config.env_tolerance())
    return {
        "p": p,
        "l": l,
        "q": fs.Q,
        "order": order,
        "b": b,
        "numeric": {"re": _round12(num.value.real), "im": _round12(num.value.imag)},
        "exact": exact.symbolic() if exact else None,
        "exact_parts": (
            {"coeff": exact.coeff, "i_power": exact.i_power, "root": exact.root, "root_power": exact.root_power}
            if exact
            else None
        ),
        "rule": rule,
        "magnitude_check": magnitude,
    }


def format_gauss(report, fmt):
    if fmt == "json":
        return dump_json(report)
    num = report["numeric"]
    lines = [
        f"G(chi, lambda_b) over GF({report['q']}), chi of order {report['order']}, b={report['b']}",
        f"  numeric: ({num['re']:.12g}, {num['im']:.12g})",
        f"  exact:   {report['exact'] if report['exact'] is not None else 'unknown'}"
        + (f"  [{report['rule']}]" if report["rule"] else ""),
    ]
    if report["magnitude_check"] is not None:
        lines.append(f"  |G| = sqrt(q): {'pass' if report['magnitude_check'] else 'FAIL'}")
    return "\n".join(lines) + "\n"


def cmd_gauss(p, l, order, b, fmt, field_cap=None):
    report = gauss_report(p, l, order, b, field_cap)
    code = EXIT_OK if report["magnitude_check"] is not False else EXIT_VERIFY
    return code, format_gauss(report, fmt)


# -- verify ------------------------------------------------------------------


def parse_corpus(text):
    """Lines ``p l n [d_1 ... d_k]``; ``#`` starts a comment."""
    entries = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            nums = [int(tok) for tok in line.split()]
        except ValueError:
            raise UsageError(f"corpus line {lineno}: expected integers, got {line!r}") from None
        if len(nums) < 3:
            raise UsageError(f"corpus line {lineno}: need at least p l n")
        entries.append((nums[0], nums[1], nums[2], nums[3:] or None))
    return entries


def verify_entry(p, l, n, expected, cfg):
    """Run every check on one code; returns (label, {check: (ok, detail)})."""
    label = f"p={p} l={l} n={n}"
    checks = {}
    try:
        cs = build_code(p, l, n, field_cap=cfg.field_cap)
    except InvalidParameterError as exc:
        return label, {"valid": (False, str(exc))}
    except CapExceededError as exc:
        return label, {"caps": (False, str(exc))}
    checks["valid"] = (True, str(cs))
    try:
        h = weight_hierarchy(cs, "auto", cap=cfg.subspace_cap, tol=cfg.tolerance)
    except CapExceededError as exc:
        checks["caps"] = (False, str(exc))
        return label, checks
    except CrossCheckError as exc:
        checks["routes"] = (False, str(exc))
        return label, checks
    values = h.values
    routes_used = sorted({m for e in h.entries for m in e.routes})
    checks["routes"] = (True, f"{values} via {','.join(routes_used)}")
    checks["monotone"] = (check_monotone(values, cs.n), "")
    violations = bound_violations(values, cs.n, cs.k, cs.q)
    checks["bounds"] = (not violations, "; ".join(violations))
    if cs.e_prime == 1:
        reps = [bound_report(d, r, cs.n, cs.k, cs.q, values[0]) for r, d in enumerate(values, 1)]
        ok = all(rep.meets_plotkin and rep.meets_griesmer for rep in reps)
        checks["plotkin_griesmer_equality"] = (ok, "")
    if cs.n <= DUAL_MAX_N:
        tables = cs.fs.base_tables
        dual = linear_code_hierarchy(dual_generator_matrix(generator_matrix(cs), tables), tables)
        predicted = wei_duality(values, cs.n, cs.k)
        checks["wei_duality"] = (dual == predicted, f"dual {dual}")
    if expected is not None:
        checks["expected"] = (values == list(expected), f"expected {list(expected)}")
    return label, checks


def cmd_verify(entries, cfg):
    results = [verify_entry(p, l, n, exp, cfg) for p, l, n, exp in entries]
    all_ok = all(ok for _, checks in results for ok, _ in checks.values())
    if cfg.fmt == "json":
        payload = {
            "passed": all_ok,
            "codes": [
                {"code": label, "checks": {name: {"ok": ok, "detail": detail} for name, (ok, detail) in checks.items()}}
                for label, checks in results
            ],
        }
        text = dump_json(payload)
    else:
        lines = []
        for label, checks in results:
            status = "PASS" if all(ok for ok, _ in checks.values()) else "FAIL"
            lines.append(f"{status} {label}")
            for name, (ok, detail) in checks.items():
                lines.append(f"    {'ok  ' if ok else 'FAIL'} {name}" + (f": {detail}" if detail else ""))
        lines.append(f"{'all checks passed' if all_ok else 'verification FAILED'} ({len(results)} codes)")
        text = "\n".join(lines) + "\n"
    return (EXIT_OK if all_ok else EXIT_VERIFY), text


# -- argument parsing ----------------------------------------------------------


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--subspace-cap", type=int, default=None, help=f"max subspaces per scan (env {config.ENV_SUBSPACE_CAP})")
    common.add_argument("--field-cap", type=int, default=None, help=f"max field size Q (env {config.ENV_FIELD_CAP})")
    common.add_argument("--tol", type=float, default=None, help=f"numeric tolerance (env {config.ENV_TOLERANCE})")
    common.add_argument("--format", dest="fmt", choices=["text", "json", "csv"], default="text")
    common.add_argument("-o", "--output", default=None, help="write the report here instead of stdout")

    parser = _Parser(prog="ghwcyclic", description="Generalized Hamming weights of irreducible cyclic codes.")
    sub = parser.add_subparsers(dest="command", required=True)

    h = sub.add_parser("hierarchy", parents=[common], help="weight hierarchy of one code")
    h.add_argument("-p", type=int, required=True)
    h.add_argument("-l", type=int, default=1)
    h.add_argument("-n", type=int, required=True)
    h.add_argument("--strategy", choices=STRATEGIES, default="auto")

    g = sub.add_parser("gauss", parents=[common], help="Gauss sum over GF(p^l)")
    g.add_argument("-p", type=int, required=True)
    g.add_argument("-l", type=int, default=1)
    g.add_argument("--order", type=int, required=True, help="order of the multiplicative character")
    g.add_argument("-b", "--b", dest="b", type=int, default=1, help="additive character index (element encoding)")

    v = sub.add_parser("verify", parents=[common], help="cross-check a corpus of codes")
    v.add_argument("--corpus", default=None, help="corpus file; the built-in corpus when omitted")
    return parser


def _config_from(args):
    cfg = RunConfig(
        p=getattr(args, "p", None),
        l=getattr(args, "l", 1),
        n=getattr(args, "n", None),
        strategy=getattr(args, "strategy", "auto"),
        subspace_cap=args.subspace_cap if args.subspace_cap is not None else config.env_subspace_cap(),
        field_cap=args.field_cap if args.field_cap is not None else config.env_field_cap(),
        tolerance=args.tol if args.tol is not None else config.env_tolerance(),
        fmt=args.fmt,
        output=args.output,
    )
    cfg.validate()
    return cfg


def run(argv=None):
    """Run the CLI; returns (exit code, report text, error text)."""
    try:
        args = build_parser().parse_args(argv)
        cfg = _config_from(args)
        if args.command == "hierarchy":
            code, text = cmd_hierarchy(cfg)
        elif args.command == "gauss":
            if cfg.fmt == "csv":
                raise UsageError("gauss supports text or json output")
            code, text = cmd_gauss(args.p, args.l, args.order, args.b, cfg.fmt, cfg.field_cap)
        else:
            if cfg.fmt == "csv":
                raise UsageError("verify supports text or json output")
            if args.corpus:
                with open(args.corpus) as fh:
                    entries = parse_corpus(fh.read())
            else:
                entries = BUILTIN_CORPUS
            code, text = cmd_verify(entries, cfg)
    except UsageError as exc:
        return EXIT_USAGE, "", str(exc)
    except (InvalidParameterError, ValueError, OSError) as exc:
        return EXIT_USAGE, "", f"error: {exc}"
    except CapExceededError as exc:
        return EXIT_CAP, "", f"error: {exc}"
    except CrossCheckError as exc:
        return EXIT_VERIFY, "", f"verification failure: {exc}"
    except GHWError as exc:
        return EXIT_VERIFY, "", f"error: {exc}"

    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text)
        text = ""
    return code, text, ""


def main(argv=None):
    code, text, err = run(argv)
    if text:
        sys.stdout.write(text)
    if err:
        sys.stderr.write(err + "\n")
    if code == EXIT_USAGE and err.startswith("ghwcyclic"):
        build_parser().print_usage(sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
