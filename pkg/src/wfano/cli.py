"""Command line front end.

Subcommands: certify, enumerate, moments (s-value | table), okounkov,
wps (normalize | stratum | index), blowup (build | intersect | transform).
Reports are emitted as JSON (default) or aligned text; all rationals are
exact fraction strings "p/q" and ``--approx`` adds a clearly labelled
12-significant-digit decimal column.  Exit codes: 0 success, 2 precondition
or usage violation (machine-readable error object), 3 internal invariant
failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from fractions import Fraction

from . import blowup as bl
from . import convex as cx
from . import engine as ce
from . import moments as mo
from . import wpoly as wp
from .lattice import WeightVector, base_locus, fano_index, normalize, stratum, top_intersection
from .schema import SCHEMA_VERSION


class CLIError(Exception):
    """Usage or precondition violation; maps to exit code 2."""

    def __init__(self, kind: str, message: str):
        super().__init__(message)
        self.kind = kind


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CLIError("usage", message)


def _fmt(value) -> object:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, (int, str)):
        return value
    if isinstance(value, (list, tuple)):
        return [_fmt(v) for v in value]
    if isinstance(value, dict):
        return {k: _fmt(v) for k, v in value.items()}
    return str(value)


def _approx(value) -> object:
    if isinstance(value, Fraction):
        return f"{float(value):.12g}"
    if isinstance(value, (list, tuple)):
        return [_approx(v) for v in value]
    if isinstance(value, dict):
        return {k: _approx(v) for k, v in value.items()}
    return None


def _report(command: str, inputs: dict, outputs: dict, trace=None, approx=False) -> dict:
    rep = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": _fmt(inputs),
        "outputs": _fmt(outputs),
    }
    if trace is not None:
        rep["trace"] = trace
    if approx:
        rep["approx"] = {k: a for k, v in outputs.items()
                         if (a := _approx(v)) is not None}
    return rep


def _emit(rep: dict, fmt: str, out) -> None:
    if fmt == "json":
        json.dump(rep, out, indent=2)
        out.write("\n")
        return
    out.write(f"# {rep['command']}\n")
    for section in ("inputs", "outputs"):
        out.write(f"{section}:\n")
        for k, v in rep[section].items():
            out.write(f"  {k:<24} {v}\n")
    if "approx" in rep:
        out.write("approx (12 significant digits, not exact):\n")
        for k, v in rep["approx"].items():
            out.write(f"  {k:<24} {v}\n")
    for t in rep.get("trace", []):
        tag = "EXTERNAL " if t["external"] else ""
        out.write(f"rule {t['rule_id']} [{t['scope']}] {tag}-> {t['output']}\n")
        out.write(f"    {t['statement']}\n")
        if t.get("citation"):
            out.write(f"    citation: {t['citation']}\n")


def _weights(text: str) -> WeightVector:
    try:
        return WeightVector.parse(text)
    except ValueError as exc:
        raise CLIError("weights", str(exc))


def build_parser() -> _Parser:
    p = _Parser(prog="wfano", description=__doc__)
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.add_argument("--approx", action="store_true",
                   help="add approximate decimal values (12 significant digits)")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("certify", help="certify a stability-threshold lower bound")
    c.add_argument("--weights", required=True)
    c.add_argument("--degree", type=int, required=True)
    c.add_argument("--eckardt", action="store_true",
                   help="assert a generalized Eckardt point at the last vertex")
    c.add_argument("--m", type=int, default=None, help="vertex escape level")
    c.add_argument("--general", action="store_true", help="assert a general member")
    c.add_argument("--b1", choices=["yes", "no", "unknown"], default="unknown",
                   help="assert containment of the weight-one base locus")

    e = sub.add_parser("enumerate", help="sweep weight tuples and certify each")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--max-weight", type=int, required=True)
    e.add_argument("--index", type=int, default=None)
    e.add_argument("--degree", type=int, default=None)
    e.add_argument("--eckardt", action="store_true")
    e.add_argument("--general", action="store_true")
    e.add_argument("--csv", action="store_true", help="emit a CSV table instead of JSON")

    m = sub.add_parser("moments", help="flag moment integrals")
    msub = m.add_subparsers(dest="moments_command", required=True)
    ms = msub.add_parser("s-value")
    ms.add_argument("--n", type=int, required=True)
    ms.add_argument("--a", type=int, required=True)
    ms.add_argument("--k", type=int, required=True)
    ms.add_argument("--j", type=int, required=True)
    ms.add_argument("--q-in-w1", action="store_true")
    mt = msub.add_parser("table")
    mt.add_argument("--n-max", type=int, default=8)
    mt.add_argument("--a-max", type=int, default=6)
    mt.add_argument("--k-max", type=int, default=6)

    o = sub.add_parser("okounkov", help="Okounkov bodies of the supported surfaces")
    osub = o.add_subparsers(dest="okounkov_command", required=True)
    oc = osub.add_parser("case")
    oc.add_argument("name", choices=["hirzebruch", "hirzebruch2", "perhaps-useful"])
    oc.add_argument("--a", type=int, default=0)
    oc.add_argument("--b", type=int, default=0)
    oc.add_argument("--k", type=int, default=0)
    oc.add_argument("--flag-in-surface", action="store_true")
    oc.add_argument("--csv-samples", type=int, default=0,
                    help="emit a CSV of boundary samples instead of JSON")

    w = sub.add_parser("wps", help="weighted projective space arithmetic")
    wsub = w.add_subparsers(dest="wps_command", required=True)
    wn = wsub.add_parser("normalize")
    wn.add_argument("--weights", required=True)
    ws = wsub.add_parser("stratum")
    ws.add_argument("--weights", required=True)
    ws.add_argument("--vanish", required=True, help="comma separated indices")
    wi = wsub.add_parser("index")
    wi.add_argument("--weights", required=True)
    wi.add_argument("--degree", type=int, required=True)
    wb = wsub.add_parser("base-locus")
    wb.add_argument("--weights", required=True)
    wb.add_argument("--threshold", type=int, required=True)
    wb.add_argument("--point", type=int, default=None)

    b = sub.add_parser("blowup", help="standard weighted blowups")
    bsub = b.add_subparsers(dest="blowup_command", required=True)
    bb = bsub.add_parser("build")
    bb.add_argument("--weights", required=True)
    bb.add_argument("--r", type=int, required=True)
    bi = bsub.add_parser("intersect")
    bi.add_argument("--weights", required=True)
    bi.add_argument("--r", type=int, required=True)
    bi.add_argument("--k", type=int, required=True)
    bt = bsub.add_parser("transform")
    bt.add_argument("--weights", required=True)
    bt.add_argument("--r", type=int, required=True)
    bt.add_argument("--poly", required=True)
    return p


def _run_certify(args, out) -> dict:
    w = _weights(args.weights)
    flags = ce.Flags(
        eckardt_at_p=True if args.eckardt else None,
        m=args.m,
        b1_in_x=args.b1,
        general_member=args.general,
    )
    datum = ce.FanoDatum(ambient=w, d=args.degree, flags=flags)
    try:
        cert = ce.certify(datum)
    except (ce.NonFanoError, ce.ContradictoryFlagsError, ValueError) as exc:
        raise CLIError("precondition", str(exc))
    cj = cert.to_json_dict()
    trace = cj.pop("trace")
    return _report(
        "certify",
        {"weights": w.text(), "degree": args.degree, "index": datum.index,
         "flags": {"eckardt_at_P": args.eckardt, "m": args.m, "b1_in_x": args.b1,
                   "general_member": args.general, "quasi_smooth": True}},
        cj,
        trace=trace,
        approx=args.approx,
    )


def _run_enumerate(args, out) -> dict | None:
    threads = max(1, int(os.environ.get("WFANO_THREADS", "1")))
    try:
        rows = list(ce.enumerate_data(
            n=args.n, max_weight=args.max_weight, index=args.index,
            degree=args.degree, eckardt=args.eckardt, general=args.general,
            threads=threads,
        ))
    except ValueError as exc:
        raise CLIError("precondition", str(exc))
    if args.csv:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["weights", "degree", "index", "bound", "anticanonical_bound",
                         "upper", "verdict", "rules"])
        for row in rows:
            c = row.certificate
            writer.writerow([
                row.datum.ambient.text(), row.datum.d, c.index, str(c.bound),
                str(c.anticanonical_bound), "" if c.upper is None else str(c.upper),
                c.verdict, ";".join(row.fired_rules()),
            ])
        return None
    payload = [{
        "weights": row.datum.ambient.text(),
        "degree": row.datum.d,
        "index": row.certificate.index,
        "bound": str(row.certificate.bound),
        "anticanonical_bound": str(row.certificate.anticanonical_bound),
        "upper": None if row.certificate.upper is None else str(row.certificate.upper),
        "verdict": row.certificate.verdict,
        "rules": list(row.fired_rules()),
    } for row in rows]
    return _report("enumerate",
                   {"n": args.n, "max_weight": args.max_weight, "index": args.index,
                    "degree": args.degree, "eckardt": args.eckardt,
                    "general": args.general},
                   {"rows": payload, "row_count": len(payload)})


def _run_moments(args, out) -> dict | None:
    if args.moments_command == "s-value":
        try:
            s = mo.s_value(args.n, args.a, args.k, args.j, args.q_in_w1)
            cf = mo.s_value_closed_form(args.n, args.a, args.k, args.j, args.q_in_w1)
        except ValueError as exc:
            raise CLIError("precondition", str(exc))
        return _report("moments s-value",
                       {"n": args.n, "a": args.a, "k": args.k, "j": args.j,
                        "q_in_w1": args.q_in_w1},
                       {"s_value": s, "closed_form": cf, "match": s == cf},
                       approx=args.approx)
    writer = csv.DictWriter(out, fieldnames=["n", "a", "k", "j", "q_in_W1", "S",
                                             "closed_form", "match"],
                            lineterminator="\n")
    writer.writeheader()
    for row in mo.moment_table(range(2, args.n_max + 1), range(1, args.a_max + 1),
                               range(1, args.k_max + 1)):
        writer.writerow(row)
    return None


def _run_okounkov(args, out) -> dict | None:
    try:
        case = cx.okounkov_body_surface(args.name, a=args.a, b=args.b, k=args.k,
                                        flag_in_surface=args.flag_in_surface)
    except ValueError as exc:
        raise CLIError("precondition", str(exc))
    if args.csv_samples:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["x", "upper"])
        for x, y in case.body.boundary_samples(args.csv_samples):
            writer.writerow([str(x), str(y)])
        return None
    return _report("okounkov case",
                   {"case": args.name, "a": args.a, "b": args.b, "k": args.k,
                    "flag_in_surface": args.flag_in_surface},
                   {"body": case.body.to_json_obj(), "area": case.area,
                    "L2": case.L2, "eps": case.eps, "t_max": case.t_max,
                    "s_value": case.s_value,
                    "second_coordinate": case.second_coordinate},
                   approx=args.approx)


def _run_wps(args, out) -> dict:
    w = _weights(args.weights)
    if args.wps_command == "normalize":
        rep = normalize(w)
        return _report("wps normalize",
                       {"weights": w.text()},
                       {"weights": rep.output.text(), "g_i": list(rep.g_i),
                        "g": rep.g, "well_formed_input": w.is_well_formed})
    if args.wps_command == "stratum":
        try:
            vanish = [int(x) for x in args.vanish.split(",")]
            st = stratum(w, vanish)
        except ValueError as exc:
            raise CLIError("precondition", str(exc))
        return _report("wps stratum",
                       {"weights": w.text(), "vanish": vanish},
                       {"quotient_weights": st.quotient_weights.text(),
                        "scale": st.scale, "mult": st.mult,
                        "dimension": st.dimension},
                       approx=args.approx)
    if args.wps_command == "base-locus":
        try:
            loc = base_locus(w, args.threshold, args.point)
        except ValueError as exc:
            raise CLIError("precondition", str(exc))
        return _report("wps base-locus",
                       {"weights": w.text(), "threshold": args.threshold,
                        "point": args.point},
                       {"vanishing": sorted(loc.vanishing),
                        "dimension": loc.dimension,
                        "is_empty": loc.is_empty,
                        "quotient_weights":
                            None if loc.stratum is None
                            else loc.stratum.quotient_weights.text(),
                        "scale": None if loc.stratum is None else loc.stratum.scale})
    idx = fano_index(w, args.degree)
    return _report("wps index",
                   {"weights": w.text(), "degree": args.degree},
                   {"index": idx, "fano": idx > 0})


def _run_blowup(args, out) -> dict:
    w = _weights(args.weights)
    try:
        frame = bl.build(w, args.r)
    except (ValueError, AssertionError) as exc:
        raise CLIError("precondition", str(exc))
    if args.blowup_command == "build":
        exc_data = bl.exceptional_class(frame)
        return _report("blowup build",
                       {"weights": w.text(), "r": args.r},
                       {"frame": frame.to_json_dict(),
                        "exceptional_class": list(exc_data.cls),
                        "exceptional_product": {
                            "left": list(exc_data.left_factor),
                            "right": list(exc_data.right_factor),
                            "restriction_scale": list(exc_data.restriction_scale),
                            "self_restriction": list(exc_data.self_restriction)},
                        "psi_pullback_o1": list(bl.psi_pullback_o1(frame)),
                        "pi_pullback_o1": list(bl.pi_pullback_o1(frame))})
    if args.blowup_command == "intersect":
        try:
            val = bl.intersection_bi(frame, args.k)
        except ValueError as exc:
            raise CLIError("precondition", str(exc))
        return _report("blowup intersect",
                       {"weights": w.text(), "r": args.r, "k": args.k},
                       {"value": val}, approx=args.approx)
    try:
        f = wp.parse(args.poly, w)
        ft = wp.strict_transform(f, args.r)
    except (ValueError, AssertionError) as exc:
        raise CLIError("precondition", str(exc))
    return _report("blowup transform",
                   {"weights": w.text(), "r": args.r, "poly": args.poly},
                   {"bidegree": list(ft.bidegree),
                    "terms": [[list(e), str(c)] for e, c in ft.terms],
                    "variables": [f"x{i}" for i in range(args.r + 1)]
                                 + [f"y{j}" for j in range(args.r + 1, w.s + 1)]
                                 + ["z"]})


def run(argv, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        dispatch = {
            "certify": _run_certify,
            "enumerate": _run_enumerate,
            "moments": _run_moments,
            "okounkov": _run_okounkov,
            "wps": _run_wps,
            "blowup": _run_blowup,
        }
        rep = dispatch[args.command](args, out)
        if rep is not None:
            _emit(rep, args.format, out)
        return 0
    except CLIError as exc:
        json.dump({"schema_version": SCHEMA_VERSION,
                   "error": {"kind": exc.kind, "message": str(exc)}}, out, indent=2)
        out.write("\n")
        return 2
    except Exception as exc:  # internal invariant violation
        json.dump({"schema_version": SCHEMA_VERSION,
                   "error": {"kind": "internal", "message": f"{type(exc).__name__}: {exc}"}},
                  out, indent=2)
        out.write("\n")
        return 3


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
