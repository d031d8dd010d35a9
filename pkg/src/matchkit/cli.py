"""Command-line interface: ``matchkit <subcommand> [options]``.

Output is one JSON document on stdout (``--csv`` for tables).  Energies
are shown to four decimals, with the full value under ``<key>_full``.
Exit status: 0 success, 1 numeric failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import math
import os
import sys
from collections.abc import Sequence
from importlib import resources

from . import asymptotics, search
from .energy import me_quadrature, me_roots
from .families import ADJACENCY_FAMILIES, family_graph, family_id, family_mvector
from .graph import Graph, GraphError, from_graph6, to_graph6
from .matching import MatchVector, match_vector, parse_mvector, quasi_compare
from .quadrature import ConvergenceError, QuadratureSettings
from .roots import RootError

log = logging.getLogger("matchkit")

FAMILY_CHOICES = ("g1", "g2", "snpp", "snstar", "snstarstar", "k4pendant", "cycle", "path",
                  "star", "pkl", "g10_1", "g10_2")


class UsageError(Exception):
    pass


def _r4(x: float) -> float:
    return round(x, 4)


def _mv_json(mv: MatchVector) -> list[str]:
    return [str(c) for c in mv]


# ------------------------------------------------------------------ inputs

def _parse_edges(text: str, n: int | None) -> Graph:
    pairs = []
    for tok in text.replace(" ", "").split(","):
        if not tok:
            continue
        try:
            u, v = (int(x) for x in tok.split("-"))
        except ValueError:
            raise UsageError(f"--edges: cannot parse {tok!r}; expected 'u-v,u-v,...'") from None
        pairs.append((u, v))
    order = n if n is not None else 1 + max((max(p) for p in pairs), default=-1)
    return Graph.from_edges(order, pairs)


def _graph_input(args) -> Graph | None:
    if getattr(args, "g6", None):
        return from_graph6(args.g6)
    if getattr(args, "edges", None):
        return _parse_edges(args.edges, args.n)
    return None


def _mvector_input(args) -> tuple[MatchVector, Graph | None]:
    """The count vector named by --g6/--edges, --mvector or --family."""
    g = _graph_input(args)
    if g is not None:
        return match_vector(g), g
    if getattr(args, "mvector", None):
        if args.n is None:
            raise UsageError("--mvector requires --n")
        return parse_mvector(args.mvector, args.n), None
    if getattr(args, "family", None):
        fid = _family(args)
        g = family_graph(fid) if fid.name in ADJACENCY_FAMILIES else None
        return family_mvector(fid), g
    raise UsageError("one of --g6, --edges, --mvector or --family is required")


def _family(args):
    if args.family not in ("g10_1", "g10_2") and args.n is None:
        raise UsageError(f"--family {args.family} requires --n")
    if args.family == "pkl" and (args.k is None or args.l is None):
        raise UsageError("--family pkl requires --k and --l")
    return family_id(args.family, args.n or 0, args.k or 0, args.l or 0)


def _settings(args) -> QuadratureSettings:
    tol = getattr(args, "tolerance", None)
    return QuadratureSettings(rel_tol=tol) if tol is not None else QuadratureSettings()


# ---------------------------------------------------------------- commands

def cmd_mp(args) -> dict:
    mv, g = _mvector_input(args)
    out = {"n": mv.n}
    if g is not None:
        out["m"] = g.m
    else:
        out["m"] = mv[1]
    out["mvector"] = _mv_json(mv)
    return out


def _energy(mv: MatchVector, method: str, settings: QuadratureSettings):
    if method == "roots":
        return me_roots(mv)
    res = me_quadrature(mv, settings)
    if method == "both":
        other = me_roots(mv)
        if abs(other.value - res.value) > max(1e-6, 10 * res.error):
            raise ArithmeticError(
                f"quadrature {res.value!r} and roots {other.value!r} disagree")
    return res


def cmd_me(args) -> dict:
    mv, _ = _mvector_input(args)
    res = _energy(mv, args.method, _settings(args))
    return {"me": _r4(res.value), "me_full": res.value, "method": res.method,
            "error": res.error, "n": res.n}


def cmd_compare(args) -> dict:
    if args.n is None:
        raise UsageError("compare requires --n")
    a = parse_mvector(args.mvector_a, args.n)
    b = parse_mvector(args.mvector_b, args.n)
    q = quasi_compare(a, b)
    s = _settings(args)
    ea, eb = me_quadrature(a, s).value, me_quadrature(b, s).value
    return {
        "order": q.order.value,
        "delta_me": _r4(ea - eb), "delta_me_full": ea - eb,
        "me_a": _r4(ea), "me_a_full": ea,
        "me_b": _r4(eb), "me_b_full": eb,
        "above": list(q.above), "below": list(q.below),
    }


def cmd_family(args) -> dict:
    fid = _family(args)
    mv = family_mvector(fid)
    res = me_quadrature(mv, _settings(args))
    out = {"family": str(fid), "n": mv.n, "mvector": _mv_json(mv),
           "me": _r4(res.value), "me_full": res.value}
    if fid.name in ADJACENCY_FAMILIES:
        out["g6"] = to_graph6(family_graph(fid))
    return out


def cmd_analysis(args) -> dict:
    out: dict = {"schema_version": search.SCHEMA_VERSION, "analysis": args.what}
    if args.what == "k0":
        computed = asymptotics.k0_polynomial()
        printed = list(asymptotics.K0_PUBLISHED)
        width = max(len(computed), len(printed))
        pad = lambda p: p + [0] * (width - len(p))  # noqa: E731
        mismatches = [{"degree": d, "computed": c, "printed": p}
                      for d, (c, p) in enumerate(zip(pad(computed), pad(printed))) if c != p]
        out.update({"computed": computed, "printed": printed,
                    "match": not mismatches, "mismatches": mismatches})
        if mismatches:
            args._status = 1
    elif args.what == "limit-integral":
        v = asymptotics.limit_ratio_integral(_settings(args))
        out.update({"value": _r4(v), "value_full": v})
    elif args.what == "verdict":
        if args.n is None:
            raise UsageError("analysis verdict requires --n")
        out.update(asymptotics.asymptotic_verdict(args.n, settings=_settings(args)))
    elif args.what == "n11":
        out.update(asymptotics.n11_report(_settings(args)))
    return out


def cmd_enumerate(args) -> dict:
    if args.n is None or args.m is None:
        raise UsageError("enumerate requires --n and --m")
    spec = search.CorpusSpec(args.n, args.m, args.connected)
    cache = search.default_cache_dir()
    graphs = list(search.enumerate_graphs(spec, args.slow, args.jobs, cache))
    return {"schema_version": search.SCHEMA_VERSION, "kind": "corpus",
            "n": spec.n, "m": spec.m, "connected": spec.connected_only,
            "count": len(graphs), "cache_file": str(cache / spec.filename),
            "graphs": [to_graph6(g) for g in graphs]}


def cmd_verify(args) -> dict:
    if args.claim is None or args.n is None:
        raise UsageError("verify requires --claim and --n")
    return search.verify_claim(args.claim, args.n, args.slow, args.jobs,
                               search.default_cache_dir())


# ------------------------------------------------------------------ output

def load_schema(command: str) -> dict:
    """The JSON schema shipped for a subcommand's output."""
    return json.loads(resources.files("matchkit").joinpath("schemas", f"{command}.json").read_text())


def _scalar(v):
    if isinstance(v, (list, tuple)):
        return " ".join(str(x) for x in v)
    if isinstance(v, dict):
        return json.dumps(v, sort_keys=True)
    return v


def _csv_rows(payload: dict) -> list[dict]:
    if "ranked" in payload:
        return payload["ranked"]
    if "graphs" in payload:
        return [{"g6": s} for s in payload["graphs"]]
    return [payload]


def write_output(payload: dict, as_csv: bool, stream=None) -> None:
    stream = stream or sys.stdout
    if not as_csv:
        stream.write(json.dumps(payload, separators=(",", ":")) + "\n")
        return
    rows = _csv_rows(payload)
    fields = list(rows[0]) if rows else []
    w = csv.DictWriter(stream, fieldnames=fields, lineterminator="\n")
    w.writeheader()
    for row in rows:
        w.writerow({k: _scalar(row.get(k)) for k in fields})


# ------------------------------------------------------------------ parser

def _add_graph_inputs(p, family=True, mvector=True):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--g6", help="graph in graph6 format")
    g.add_argument("--edges", help="edge list '0-1,1-2,...'")
    if mvector:
        g.add_argument("--mvector", help="matching counts 'm0,m1,...' (needs --n)")
    if family:
        g.add_argument("--family", choices=FAMILY_CHOICES)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--l", type=int)


def _positive_float(text: str) -> float:
    v = float(text)
    if not v > 0 or math.isinf(v):
        raise argparse.ArgumentTypeError(f"must be a positive number, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--csv", action="store_true", help="CSV instead of JSON")
    common.add_argument("--tolerance", type=_positive_float,
                        help="relative tolerance for quadrature (default 1e-9)")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="matchkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mp", parents=[common], help="matching counts of a graph")
    _add_graph_inputs(p)
    p.set_defaults(func=cmd_mp)

    p = sub.add_parser("me", parents=[common], help="matching energy")
    _add_graph_inputs(p)
    p.add_argument("--method", choices=("quadrature", "roots", "both"), default="quadrature")
    p.set_defaults(func=cmd_me)

    p = sub.add_parser("compare", parents=[common], help="quasi-order and energy difference")
    p.add_argument("--mvector-a", required=True)
    p.add_argument("--mvector-b", required=True)
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("family", parents=[common], help="named family member")
    p.add_argument("--family", choices=FAMILY_CHOICES, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--l", type=int)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("analysis", parents=[common], help="asymptotic comparison")
    p.add_argument("what", choices=("k0", "limit-integral", "verdict", "n11"))
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_analysis)

    jobs = argparse.ArgumentParser(add_help=False)
    jobs.add_argument("--slow", action="store_true", help="allow n = 9, 10")
    jobs.add_argument("--jobs", type=int, default=os.cpu_count() or 1)

    p = sub.add_parser("enumerate", parents=[common, jobs], help="isomorph-free corpus")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--connected", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", parents=[common, jobs], help="check an extremal claim")
    p.add_argument("--claim", choices=search.CLAIMS)
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Sequence[str] | None = None, stdout=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    args._status = 0
    try:
        payload = args.func(args)
    except (UsageError, GraphError, search.SlowGateError) as e:
        parser.print_usage(sys.stderr)
        print(f"matchkit {args.command}: error: {e}", file=sys.stderr)
        return 2
    except (ConvergenceError, RootError, ArithmeticError, OverflowError) as e:
        print(f"matchkit {args.command}: numeric failure: {e}", file=sys.stderr)
        return 1
    except ValueError as e:
        parser.print_usage(sys.stderr)
        print(f"matchkit {args.command}: error: {e}", file=sys.stderr)
        return 2
    write_output(payload, args.csv, stdout)
    return args._status


def main() -> None:
    sys.exit(run())
