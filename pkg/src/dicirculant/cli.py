"""Command-line front end.

Exit codes: 0 success, 1 cross-check failure (a classify-vs-BFS
disagreement, i.e. a classification-theorem alarm), 2 usage error.
JSON output carries schema_version 1; sets are sorted integer arrays
and complex values are [re, im] pairs rounded to 12 digits.  Text
output is human-oriented and not a stable contract.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import classifier, fourier, group, search, structure
from .cayley import (SpecParseError, SpecValidationError, build_graph,
                     parse_spec)
from .classifier import classify
from .fourier import DEFAULT_TOLERANCE
from .metrics import IntersectionArray, distance_partition, is_distance_regular

EXIT_OK = 0
EXIT_CROSS_CHECK = 1
EXIT_USAGE = 2

CSV_COLUMNS = ["n", "R", "T", "connected", "drg", "array", "class",
               "bipartite", "antipodal", "primitive", "fourier_ok"]


def dump_json(payload):
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def round_complex(z, digits=12):
    return [round(z.real, digits), round(z.imag, digits)]


def _write(text, out_path):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_spec_arg(text):
    try:
        return parse_spec(text)
    except SpecParseError as exc:
        raise UsageError(f"malformed spec: {exc}")
    except SpecValidationError as exc:
        raise UsageError("invalid spec: " + ", ".join(exc.violations))


class UsageError(Exception):
    pass


def cmd_check(args):
    spec = _parse_spec_arg(args.spec)
    payload = {"schema_version": 1, "spec": _spec_payload(spec)}
    exit_code = EXIT_OK
    if not spec.connected:
        payload["connected"] = False
        payload["note"] = "disconnected; distance-regularity undefined"
    else:
        g = build_graph(spec)
        drg = is_distance_regular(g, vertex_transitive_hint=True)
        classification = classify(spec)
        is_drg = isinstance(drg, IntersectionArray)
        payload["drg"] = is_drg
        payload["intersection_array"] = (
            {"b": list(drg.b), "c": list(drg.c)} if is_drg else None)
        if not is_drg:
            payload["witness"] = {"u": drg.u, "v": drg.v, "distance": drg.distance,
                                  "expected": list(drg.expected),
                                  "found": list(drg.found)}
        payload["classification"] = {"tag": classification.tag,
                                     "params": list(classification.params)}
        if is_drg != (classification.tag != classifier.NOT_DRG):
            payload["cross_check_failure"] = True
            exit_code = EXIT_CROSS_CHECK
    if args.format == "json":
        _write(dump_json(payload), args.out)
    else:
        lines = [f"spec: {spec!r}", f"connected: {spec.connected}"]
        if spec.connected:
            lines.append(f"drg: {payload['drg']}")
            if payload.get("intersection_array"):
                arr = payload["intersection_array"]
                lines.append("array: {" + ",".join(map(str, arr["b"])) + ";"
                             + ",".join(map(str, arr["c"])) + "}")
            cls = payload["classification"]
            inner = ",".join(map(str, cls["params"]))
            lines.append("class: " + (f"{cls['tag']}({inner})" if inner
                                      else cls["tag"]))
            if exit_code:
                lines.append("CROSS-CHECK FAILURE: classifier disagrees with BFS")
        _write("\n".join(lines) + "\n", args.out)
    return exit_code


def cmd_classify(args):
    spec = _parse_spec_arg(args.spec)
    if not spec.connected:
        raise UsageError("spec is disconnected; classification undefined")
    classification = classify(spec)
    payload = {"schema_version": 1, "spec": _spec_payload(spec),
               "classification": {"tag": classification.tag,
                                  "params": list(classification.params),
                                  "evidence": list(classification.evidence)}}
    if args.format == "json":
        _write(dump_json(payload), args.out)
    else:
        _write(f"{classification!r}\n  evidence: "
               + "; ".join(classification.evidence) + "\n", args.out)
    return EXIT_OK


def _spec_payload(spec):
    r, t = spec.sorted_sets()
    return {"n": spec.n, "R": list(r), "T": list(t),
            "connected": spec.connected}


def _survey_csv(reports):
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(CSV_COLUMNS)
    for report in reports:
        for row in report.rows:
            r, t = row.spec.sorted_sets()
            inst = row.instance
            writer.writerow([
                row.spec.n,
                " ".join(map(str, r)),
                " ".join(map(str, t)),
                row.spec.connected,
                row.drg,
                repr(row.array) if row.array else "",
                repr(row.classification) if row.classification else "",
                inst.bipartite if inst else "",
                inst.antipodal if inst else "",
                inst.primitive if inst else "",
                inst.fourier_ok if inst else "",
            ])
    return buf.getvalue()


def cmd_survey(args):
    ns = _requested_ns(args)
    reports = [search.survey(n, dedup=not args.no_dedup,
                             tolerance=args.tolerance, workers=args.workers)
               for n in ns]
    failures = sum(len(r.cross_check_failures) for r in reports)
    if args.format == "csv":
        _write(_survey_csv(reports), args.out)
    elif args.format == "json":
        payload = {"schema_version": 1,
                   "surveys": [r.to_dict() for r in reports]}
        _write(dump_json(payload), args.out)
    else:
        lines = []
        for report in reports:
            lines.append(f"n={report.n}: {report.total_specs} specs, "
                         f"{report.canonical_classes} canonical, "
                         f"{report.connected_specs} connected, "
                         f"{len(report.drg_instances)} DRG")
            for inst in report.drg_instances:
                lines.append(f"  {inst.spec!r} -> {inst.array!r} "
                             f"{inst.classification!r} family={inst.family!r}")
            if report.cross_check_failures:
                lines.append(f"  CROSS-CHECK FAILURES: "
                             f"{report.cross_check_failures}")
        _write("\n".join(lines) + "\n", args.out)
    return EXIT_CROSS_CHECK if failures else EXIT_OK


def _requested_ns(args):
    if args.n_range:
        try:
            a, b = args.n_range.split("..")
            a, b = int(a), int(b)
        except ValueError:
            raise UsageError("--n-range expects A..B")
        if a < 1 or b < a:
            raise UsageError("--n-range expects 1 <= A <= B")
        return list(range(a, b + 1))
    if args.n is None:
        raise UsageError("one of --n or --n-range is required")
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    return [args.n]


def cmd_search_ds(args):
    if args.group == "cyclic":
        table = classifier.cyclic_table(args.order)
    else:
        if args.order % 4 != 0:
            raise UsageError("dicyclic groups have order 4n")
        table, _ = group.multiplication_table(args.order // 4)
    try:
        sets = search.search_difference_sets(table, args.order, args.k,
                                             args.lam, limit=args.limit)
    except search.ParameterContradictionError as exc:
        raise UsageError(str(exc))
    payload = {"schema_version": 1,
               "group": {"kind": args.group, "order": args.order},
               "v": args.order, "k": args.k, "lam": args.lam,
               "difference_sets": [sorted(D) for D in sets]}
    if args.format == "json":
        _write(dump_json(payload), args.out)
    else:
        lines = [f"{len(sets)} difference set class(es) for "
                 f"({args.order},{args.k},{args.lam}) in {args.group} group"]
        lines += ["  {" + ",".join(map(str, sorted(D))) + "}" for D in sets]
        _write("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_fourier(args):
    spec = _parse_spec_arg(args.spec)
    m = 2 * spec.n
    r = fourier.dft_of_set(spec.R, m, args.tolerance)
    t = fourier.dft_of_set(spec.T, m, args.tolerance)
    orbits = fourier.unit_orbits(m)
    payload = {
        "schema_version": 1,
        "spec": _spec_payload(spec),
        "dft_R": [round_complex(z) for z in r.values],
        "dft_T": [round_complex(z) for z in t.values],
        "unit_orbits": [{"order": order, "members": sorted(members)}
                        for order, members in orbits.orbits],
        "transversals": {
            str(div): {"R+0": fourier.is_transversal(set(spec.R) | {0}, div, m),
                       "T": fourier.is_transversal(spec.T, div, m)}
            for div in range(1, m + 1) if m % div == 0
        },
    }
    if spec.connected:
        g = build_graph(spec)
        drg = is_distance_regular(g, vertex_transitive_hint=True)
        if isinstance(drg, IntersectionArray):
            dp = distance_partition(spec, g)
            payload["fourier_lemma_ok"] = fourier.check_fourier_lemma(
                spec, dp, drg, args.tolerance)
    if args.format == "json":
        _write(dump_json(payload), args.out)
    else:
        lines = [f"spec: {spec!r}",
                 "dft R: " + " ".join(f"{z[0]:+.4f}{z[1]:+.4f}i"
                                      for z in payload["dft_R"]),
                 "dft T: " + " ".join(f"{z[0]:+.4f}{z[1]:+.4f}i"
                                      for z in payload["dft_T"])]
        if "fourier_lemma_ok" in payload:
            lines.append(f"fourier lemma: {payload['fourier_lemma_ok']}")
        _write("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="dicirculant",
        description="Distance-regular Cayley graphs on dicyclic groups: "
                    "construction, classification, and exhaustive surveys.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, spec_arg=False, tolerance=False):
        p.add_argument("--out", default=None, help="output file (default stdout)")
        p.add_argument("--format", choices=["json", "csv", "text"],
                       default="text")
        if spec_arg:
            p.add_argument("spec", help="'n=<int>; R=<list>; T=<list>'")
        if tolerance:
            p.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE)

    p_check = sub.add_parser("check", help="validate, build, test, classify one spec")
    common(p_check, spec_arg=True)
    p_check.set_defaults(func=cmd_check)

    p_classify = sub.add_parser("classify", help="classifier only, with evidence")
    common(p_classify, spec_arg=True)
    p_classify.set_defaults(func=cmd_classify)

    p_survey = sub.add_parser("survey", help="full survey per n")
    common(p_survey, tolerance=True)
    p_survey.add_argument("--n", type=int, default=None)
    p_survey.add_argument("--n-range", default=None, metavar="A..B")
    p_survey.add_argument("--workers", type=int, default=1)
    p_survey.add_argument("--no-dedup", action="store_true",
                          help="survey all specs, not canonical representatives")
    p_survey.set_defaults(func=cmd_survey)

    p_ds = sub.add_parser("search-ds", help="difference-set search")
    common(p_ds)
    p_ds.add_argument("--group", choices=["cyclic", "dicyclic"], required=True)
    p_ds.add_argument("--order", type=int, required=True)
    p_ds.add_argument("--k", type=int, required=True)
    p_ds.add_argument("--lam", type=int, required=True)
    p_ds.add_argument("--limit", type=int, default=None)
    p_ds.set_defaults(func=cmd_search_ds)

    p_fourier = sub.add_parser("fourier",
                               help="DFT / orbit / transversal diagnostics")
    common(p_fourier, spec_arg=True, tolerance=True)
    p_fourier.set_defaults(func=cmd_fourier)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    if getattr(args, "workers", 1) is not None and getattr(args, "workers", 1) < 1:
        sys.stderr.write("error: --workers must be >= 1\n")
        return EXIT_USAGE
    if getattr(args, "tolerance", 1.0) <= 0:
        sys.stderr.write("error: --tolerance must be > 0\n")
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
