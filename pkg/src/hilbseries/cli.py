"""Command-line interface.

Four subcommands: ``series`` prints catalog series coefficients,
``verify`` runs the identity-check suites, ``oracle`` evaluates a single
fixed-point integral, and ``extract`` recovers universal series from
oracle data.  All numeric output is exact (strings "p/q"); every run
echoes its fully resolved configuration, so identical invocations
produce byte-identical output.  Exit codes: 0 success, 1 verification
failure, 2 usage error.

The default truncation order is 10 for pure series work and 4 for
oracle-driven commands; the HILBSERIES_ORDER environment variable
overrides either default, and --order overrides everything.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import catalog, extraction, verify
from .localization import (
    DEFAULT_SEED,
    chern_integral,
    get_surface,
    parse_class,
    segre_integral,
    surface_names,
    verlinde_chi,
)

ORDER_ENV = "HILBSERIES_ORDER"
SERIES_DEFAULT_ORDER = 10
ORACLE_DEFAULT_ORDER = 4

_FAMILIES = ("segreA", "chernA", "verlindeB", "y", "Y")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hilbseries",
        description="Universal tautological-integral series over Hilbert "
                    "schemes of surface points, with a toric fixed-point oracle.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_series = sub.add_parser("series", help="print coefficients of a catalog series")
    p_series.add_argument("--family", required=True, choices=_FAMILIES)
    p_series.add_argument("--rank", type=int, default=None,
                          help="class rank (segreA/chernA) or twist (verlindeB)")
    p_series.add_argument("--index", type=int, default=None,
                          help="which factor of the family, e.g. 3 for A3")
    p_series.add_argument("--order", type=int, default=None)
    p_series.add_argument("--format", choices=("json", "csv", "table"), default="table")

    p_verify = sub.add_parser("verify", help="run identity-check suites")
    p_verify.add_argument("--suite", default="all",
                          help="'all' or one of: %s" % ", ".join(verify.suite_names()))
    p_verify.add_argument("--order", type=int, default=None)
    p_verify.add_argument("--json", nargs="?", const="-", default=None, metavar="PATH",
                          help="write a JSON report to PATH (or stdout)")

    p_oracle = sub.add_parser("oracle", help="one fixed-point integral or Euler char")
    p_oracle.add_argument("--surface", required=True, choices=surface_names())
    p_oracle.add_argument("--class", dest="class_spec", required=True,
                          help='signed sum such as "O(2,1)+O(0,1)-O(1,0)"')
    p_oracle.add_argument("--n", type=int, required=True, help="number of points")
    p_oracle.add_argument("--kind", required=True, choices=("segre", "chern", "verlinde"))
    p_oracle.add_argument("--r", type=int, default=None, help="twist (verlinde only)")
    p_oracle.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_oracle.add_argument("--json", nargs="?", const="-", default=None, metavar="PATH")

    p_extract = sub.add_parser("extract", help="recover universal series from the oracle")
    p_extract.add_argument("--rank", type=int, required=True,
                           help="class rank (segre) or twist (verlinde)")
    p_extract.add_argument("--order", type=int, default=None)
    p_extract.add_argument("--kind", choices=("segre", "verlinde"), default="segre")
    p_extract.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_extract.add_argument("--json", nargs="?", const="-", default=None, metavar="PATH")
    return parser


def _resolve_order(args, parser, default):
    if args.order is not None:
        order = args.order
    elif os.environ.get(ORDER_ENV):
        try:
            order = int(os.environ[ORDER_ENV])
        except ValueError:
            parser.error("%s must be an integer, got %r"
                         % (ORDER_ENV, os.environ[ORDER_ENV]))
    else:
        order = default
    if order < 0:
        parser.error("order must be nonnegative")
    return order


def _emit(text, path):
    if path in (None, "-"):
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        with open(path, "w") as handle:
            handle.write(text if text.endswith("\n") else text + "\n")


def _json_doc(config, payload):
    doc = {"config": config}
    doc.update(payload)
    return json.dumps(doc, indent=2, sort_keys=True)


def _config_line(config):
    return "# hilbseries " + " ".join(
        "%s=%s" % (key, config[key]) for key in sorted(config))


def _cmd_series(args, parser):
    order = _resolve_order(args, parser, SERIES_DEFAULT_ORDER)
    family = args.family
    config = {"command": "series", "family": family, "order": order,
              "format": args.format}
    if family in ("segreA", "chernA", "verlindeB"):
        if args.rank is None or args.index is None:
            parser.error("--rank and --index are required for family %s" % family)
        config["rank"] = args.rank
        config["index"] = args.index
        lookup = {"segreA": catalog.segre_A, "chernA": catalog.chern_A,
                  "verlindeB": catalog.verlinde_B}[family]
        try:
            entry = lookup(args.rank, args.index, order)
        except catalog.UnknownSeriesError as exc:
            parser.error(str(exc))
        series, status, offset = entry.series, entry.status, 0
    else:
        if args.rank is not None or args.index is not None:
            parser.error("--rank/--index do not apply to branch family %s" % family)
        branch = catalog.segre_rank2_branch if family == "y" else catalog.verlinde_r3_branch
        series, status, offset = branch(order), catalog.PROVEN, 1
    config["status"] = status
    values = [extraction.frac_str(series.coefficient(n))
              for n in range(offset, order + 1)]
    if args.format == "json":
        text = _json_doc(config, {"offset": offset, "var": series.var,
                                  "coefficients": values})
    elif args.format == "csv":
        lines = [_config_line(config), "n,coefficient"]
        lines += ["%d,%s" % (n + offset, v) for n, v in enumerate(values)]
        text = "\n".join(lines)
    else:
        text = _config_line(config) + "\n" + ", ".join(values)
    _emit(text, None)
    return 0


def _cmd_verify(args, parser):
    order = _resolve_order(args, parser, SERIES_DEFAULT_ORDER)
    if args.suite == "all":
        names = None
    elif args.suite in verify.suite_names():
        names = [args.suite]
    else:
        parser.error("unknown suite %r; choose from all, %s"
                     % (args.suite, ", ".join(verify.suite_names())))
    config = {"command": "verify", "suite": args.suite, "order": order}
    reports = verify.run_suite(names, order=order)
    all_passed = all(report.passed for report in reports)
    if args.json is not None:
        text = _json_doc(config, {"passed": all_passed,
                                  "reports": [r.to_dict() for r in reports]})
        _emit(text, args.json)
        if args.json != "-":
            _print_verify_table(config, reports)
    else:
        _print_verify_table(config, reports)
    return 0 if all_passed else 1


def _print_verify_table(config, reports):
    print(_config_line(config))
    for report in reports:
        line = "%-18s %s  (%d checks)" % (
            report.name, "PASS" if report.passed else "FAIL", report.checks)
        if not report.passed and report.counterexample is not None:
            line += "  counterexample: %s" % (report.counterexample,)
        print(line)


def _cmd_oracle(args, parser):
    surface = get_surface(args.surface)
    try:
        kclass = parse_class(surface, args.class_spec)
    except ValueError as exc:
        parser.error(str(exc))
    if args.n < 0:
        parser.error("--n must be nonnegative")
    config = {"command": "oracle", "surface": surface.name,
              "class": kclass.spec(), "n": args.n, "kind": args.kind,
              "seed": args.seed}
    if args.kind == "verlinde":
        if args.r is None:
            parser.error("--r is required for kind verlinde")
        config["r"] = args.r
        value = verlinde_chi(surface, kclass, args.r, args.n, args.seed)
        result = "%d/1" % value
    else:
        if args.r is not None:
            parser.error("--r only applies to kind verlinde")
        integral = segre_integral if args.kind == "segre" else chern_integral
        result = extraction.frac_str(integral(surface, kclass, args.n, args.seed))
    numerics = {"rank": kclass.rank, "c2": kclass.c2, "c1sq": kclass.c1sq,
                "c1K": kclass.c1K, "Ksq": surface.ksq, "chiO": surface.chi_O}
    if args.json is not None:
        _emit(_json_doc(config, {"value": result, "class_numerics": numerics}),
              args.json)
    else:
        print(_config_line(config))
        print(result)
    return 0


def _cmd_extract(args, parser):
    order = _resolve_order(args, parser, ORACLE_DEFAULT_ORDER)
    config = {"command": "extract", "kind": args.kind, "rank": args.rank,
              "order": order, "seed": args.seed}
    if args.kind == "segre":
        panel = extraction.build_panel(args.rank)
        report = extraction.predict_unknown(args.rank, order, panel, args.seed)
        payload = {
            "panel": [{"surface": surface.name, "class": cls.spec()}
                      for surface, cls in panel],
            "exponent_columns": list(extraction.GeometryPanel.COLUMNS),
            "exponent_matrix": [[str(x) for x in row]
                                for row in panel.exponent_matrix],
        }
    else:
        rows = extraction._default_verlinde_rows()
        report = extraction.predict_verlinde(args.rank, order, rows, args.seed)
        payload = {
            "panel": [{"surface": surface.name, "class": cls.spec()}
                      for surface, cls in rows],
            "exponent_columns": ["chiL", "chiO", "c1K-Ksq/2", "Ksq"],
            "exponent_matrix": [[str(x) for x in row]
                                for row in extraction._verlinde_matrix(rows)],
        }
    payload["series"] = report["series"]
    if args.json is not None:
        _emit(_json_doc(config, payload), args.json)
    else:
        print(_config_line(config))
        for entry in report["series"]:
            line = "%s [%s]: %s" % (entry["series"], entry["status"],
                                    ", ".join(entry["extracted"]))
            if "agreement_order" in entry:
                line += "  (matches reference through order %d)" % entry["agreement_order"]
            print(line)
    return 0


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {"series": _cmd_series, "verify": _cmd_verify,
               "oracle": _cmd_oracle, "extract": _cmd_extract}[args.command]
    return handler(args, parser)


if __name__ == "__main__":
    sys.exit(main())
