"""Command line front end: betti, suspend, extend, verify, scan.

stdout carries machine output only (JSON, JSON-lines, graph6, CSV); stderr
carries human diagnostics.  Exit codes: 0 success / no fail verdicts, 1 fail
verdicts found, 2 input or precondition errors, 3 engine cap overruns,
4 oracle mismatch under --oracle.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from .cache import ResultCache
from .complexes import CapExceeded
from .enumeration import enumerate_graphs
from .graph6 import graph_from_graph6, graph_to_graph6, iter_graph6
from .graphs import (
    Graph,
    anticycle,
    complete,
    cycle,
    independent_sets,
    one_vertex_extensions,
    path,
    s_suspension,
)
from .linalg import Field, RATIONALS
from .monomials import edge_ideal, ideal_power, parse_ideal, parse_monomial
from .resolutions import (
    DEFAULT_CAPS,
    EngineCaps,
    betti_table,
    taylor_betti_oracle,
)
from .verification import (
    STATEMENTS,
    ScanConfig,
    check_abc_bound,
    check_betti_splitting,
    check_colon_reg_bound,
    check_doublelinear,
    check_s_suspension_invariance,
    enumerate_im_reg_extensions,
    is_im_reg_invariant_extension,
    run_statement,
    scan_conjecture,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_CAP = 3
EXIT_ORACLE = 4

CACHE_ENV = "EDGEIDEALS_CACHE"

_BUILDERS = {"cycle": cycle, "anticycle": anticycle, "path": path, "complete": complete}


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _build_graph(spec: str) -> Graph:
    name, _, arg = spec.partition(":")
    if name not in _BUILDERS or not arg:
        raise ValueError(f"unknown builder {spec!r} (use cycle:n|anticycle:n|path:n|complete:n)")
    return _BUILDERS[name](int(arg))


def _parse_vertex_set(text: str) -> frozenset:
    s = text.strip()
    if not s:
        return frozenset()
    return frozenset(int(t) for t in s.split(","))


def _single_graph(args) -> Graph:
    if getattr(args, "builder", None):
        return _build_graph(args.builder)
    if getattr(args, "graph6", None):
        return graph_from_graph6(args.graph6)
    raise ValueError("need a graph: --builder or --graph6")


def _family(args) -> list:
    if getattr(args, "max_n", None):
        return enumerate_graphs(args.max_n, require_edge=True)
    if getattr(args, "graph6_file", None):
        with open(args.graph6_file, "r", encoding="ascii") as fh:
            return iter_graph6(fh)
    return [_single_graph(args)]


def _caps(args) -> EngineCaps:
    return EngineCaps(
        lattice_max=args.lattice_cap,
        order_faces_max=args.face_cap,
        taylor_max_generators=args.taylor_cap,
        quotients_max_generators=args.lq_cap,
        quotients_time_budget=args.time_budget,
        membership_table_max=DEFAULT_CAPS.membership_table_max,
    )


def _field(args) -> Field:
    return Field.from_token(args.field)


def _cache(args) -> ResultCache:
    if getattr(args, "no_cache", False):
        return ResultCache(None)
    root = getattr(args, "cache_dir", None) or os.environ.get(CACHE_ENV)
    return ResultCache(root)


def _header(command: str, args, field: Field, caps: EngineCaps, **extra) -> dict:
    head = {"command": command, "field": field.token(), "caps": caps.to_json()}
    head.update(extra)
    return {"header": head}


def _add_graph_flags(p, family: bool = False):
    p.add_argument("--builder", help="builder spec, e.g. cycle:5")
    p.add_argument("--graph6", help="inline graph6 string")
    if family:
        p.add_argument("--graph6-file", help="file with one graph6 string per line")
        p.add_argument("--max-n", type=int, help="internal exhaustive family up to n vertices")


def _add_engine_flags(p):
    p.add_argument("--field", default="Q", help="coefficient field: Q (default) or GF(p)")
    p.add_argument("--lattice-cap", type=int, default=DEFAULT_CAPS.lattice_max)
    p.add_argument("--face-cap", type=int, default=DEFAULT_CAPS.order_faces_max)
    p.add_argument("--taylor-cap", type=int, default=DEFAULT_CAPS.taylor_max_generators)
    p.add_argument("--lq-cap", type=int, default=DEFAULT_CAPS.quotients_max_generators)
    p.add_argument("--time-budget", type=float, default=DEFAULT_CAPS.quotients_time_budget)


def _add_cache_flags(p):
    p.add_argument("--cache-dir", help=f"result cache directory (or ${CACHE_ENV})")
    p.add_argument("--no-cache", action="store_true", help="disable the result cache")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers over family items")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="edgeideals",
        description="Betti tables, regularity and suspension constructions for edge ideals",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("betti", help="Betti table of an edge ideal or a given monomial ideal")
    _add_graph_flags(p)
    p.add_argument("--ideal", help='JSON array of monomial strings, e.g. \'["x0*x1","x1^2"]\'')
    p.add_argument("--nvars", type=int, help="ambient variable count for --ideal")
    p.add_argument("--power", type=int, default=1, help="compute the k-th power first")
    p.add_argument("--oracle", action="store_true", help="cross-check with the Taylor strand oracle")
    p.add_argument("--multi", action="store_true", help="include the multigraded refinement")
    _add_engine_flags(p)

    p = sub.add_parser("suspend", help="one-vertex suspensions over independent sets")
    _add_graph_flags(p)
    p.add_argument("--set", dest="sset", help="comma-separated independent set (empty string for the cone)")
    p.add_argument("--all", action="store_true", help="suspend over every proper independent set")
    p.add_argument("--verify", action="store_true", help="emit JSON lines with im/reg invariance checks")
    _add_engine_flags(p)

    p = sub.add_parser("extend", help="one-vertex extensions, filtered to invariant ones by default")
    _add_graph_flags(p)
    p.add_argument("--all", action="store_true", help="emit all 2^n - 1 extensions, unfiltered")
    p.add_argument("--json", action="store_true", help="emit JSON lines with im/reg data")
    _add_engine_flags(p)

    p = sub.add_parser("verify", help="run a named statement over a graph family or an ideal instance")
    p.add_argument("--statement", required=True, help=", ".join(STATEMENTS + ("splitting", "doublelinear", "colon", "abc")))
    _add_graph_flags(p, family=True)
    p.add_argument("--set", dest="sset", help="independent set for suspension/main1/main2")
    p.add_argument("--cover", help="vertex cover for keylemma")
    p.add_argument("--k", type=int, help="power index (keylemma, blemma, main1)")
    p.add_argument("--kmax", type=int, help="largest power to check")
    p.add_argument("--ideal", help="JSON array of monomial strings (splitting/doublelinear/colon/abc)")
    p.add_argument("--part-j", help="JSON array: first part of the splitting, or the sub-ideal for abc")
    p.add_argument("--part-k", help="JSON array: second part of the splitting")
    p.add_argument("--monomial", help="monomial for the colon bound, e.g. x0")
    p.add_argument("--nvars", type=int, help="ambient variable count for ideal inputs")
    _add_engine_flags(p)
    _add_cache_flags(p)

    p = sub.add_parser("scan", help="scan a graph family for conjecture counterexamples")
    p.add_argument("--conjecture", required=True, choices=("np", "generalnp", "newconj2"))
    _add_graph_flags(p, family=True)
    p.add_argument("--kmax", type=int, default=2)
    p.add_argument("--reg-filter", type=int, help="only graphs with this regularity (np default: 3)")
    p.add_argument("--cg", type=int, default=2, help="power threshold c_G for newconj2")
    p.add_argument("--summary", help="write a per-statement CSV summary to this path")
    _add_engine_flags(p)
    _add_cache_flags(p)

    return ap


# -- subcommands -----------------------------------------------------------------


def _cmd_betti(args) -> int:
    field = _field(args)
    caps = _caps(args)
    if args.ideal:
        gens = json.loads(args.ideal)
        nvars = args.nvars
        if nvars is None:
            raise ValueError("--ideal needs --nvars")
        ideal = parse_ideal(gens, nvars)
    else:
        ideal = edge_ideal(_single_graph(args))
    if args.power != 1:
        ideal = ideal_power(ideal, args.power)
    table = betti_table(ideal, field, caps)
    if args.oracle:
        oracle = taylor_betti_oracle(ideal, field, caps)
        if oracle != table:
            sys.stderr.write("oracle mismatch between the lattice engine and the Taylor strands\n")
            sys.stderr.write(f"primary: {json.dumps(table.to_json(True), sort_keys=True)}\n")
            sys.stderr.write(f"oracle:  {json.dumps(oracle.to_json(True), sort_keys=True)}\n")
            return EXIT_ORACLE
    _emit(table.to_json(include_multi=args.multi))
    return EXIT_OK


def _cmd_suspend(args) -> int:
    field = _field(args)
    caps = _caps(args)
    g = _single_graph(args)
    if args.all:
        sets = [frozenset(s) for s in independent_sets(g) if len(s) < g.n]
    elif args.sset is not None:
        sets = [_parse_vertex_set(args.sset)]
    else:
        raise ValueError("suspend needs --set or --all")
    for s in sets:
        gs = s_suspension(g, s)
        if args.verify:
            rep = check_s_suspension_invariance(g, s, field, caps)
            _emit(
                {
                    "graph6": graph_to_graph6(gs),
                    "set": sorted(s),
                    "verdict": rep.verdict,
                    "im_reg": rep.data,
                }
            )
        else:
            sys.stdout.write(graph_to_graph6(gs) + "\n")
    return EXIT_OK


def _cmd_extend(args) -> int:
    field = _field(args)
    caps = _caps(args)
    g = _single_graph(args)
    if args.all:
        exts = one_vertex_extensions(g)
    else:
        exts = enumerate_im_reg_extensions(g, field, caps)
    for ext in exts:
        if args.json:
            invariant = (
                is_im_reg_invariant_extension(g, ext, field, caps) if args.all else True
            )
            _emit(
                {
                    "graph6": graph_to_graph6(ext),
                    "z_neighborhood": sorted(ext.neighbors(g.n)),
                    "invariant": invariant,
                }
            )
        else:
            sys.stdout.write(graph_to_graph6(ext) + "\n")
    return EXIT_OK


_IDEAL_STATEMENTS = ("splitting", "doublelinear", "colon", "abc")


def _verify_ideal_statement(args, field, caps) -> list:
    if args.nvars is None:
        raise ValueError(f"--statement {args.statement} needs --nvars")
    nv = args.nvars
    if args.statement in ("splitting", "doublelinear"):
        if not (args.ideal and args.part_j and args.part_k):
            raise ValueError("splitting statements need --ideal, --part-j and --part-k")
        whole = parse_ideal(json.loads(args.ideal), nv)
        left = parse_ideal(json.loads(args.part_j), nv)
        right = parse_ideal(json.loads(args.part_k), nv)
        fn = check_betti_splitting if args.statement == "splitting" else check_doublelinear
        return [fn(whole, left, right, field, caps)]
    if args.statement == "colon":
        if not (args.ideal and args.monomial):
            raise ValueError("colon needs --ideal and --monomial")
        ideal = parse_ideal(json.loads(args.ideal), nv)
        return [check_colon_reg_bound(ideal, parse_monomial(args.monomial, nv), field, caps)]
    if not (args.ideal and args.part_j):
        raise ValueError("abc needs --ideal (ambient I) and --part-j (sub-ideal J)")
    ambient = parse_ideal(json.loads(args.ideal), nv)
    sub = parse_ideal(json.loads(args.part_j), nv)
    return [check_abc_bound(sub, ambient, None, field, caps)]


def _statement_params(args) -> dict:
    params: dict = {}
    if args.sset is not None:
        params["sets"] = [_parse_vertex_set(args.sset)]
    if args.cover is not None:
        params["covers"] = [tuple(sorted(_parse_vertex_set(args.cover)))]
    if args.k is not None:
        params["k"] = args.k
    if args.kmax is not None:
        params["k_max"] = args.kmax
    return params


def _reports_for_graph(statement, g6, params, field, caps, cache: ResultCache) -> list:
    key = {
        "op": "verify",
        "statement": statement,
        "graph6": g6,
        "params": {k: sorted(map(sorted, v)) if k in ("sets", "covers") else v for k, v in params.items()},
        "field": field.token(),
        "caps": caps.to_json(),
    }
    hit = cache.get(key)
    if hit is not None:
        return hit
    g = graph_from_graph6(g6)
    reports = [r.to_json() for r in run_statement(statement, g, params, field, caps)]
    cache.put(key, reports)
    return reports


def _parallel_map(fn, items, jobs: int) -> list:
    if jobs <= 1 or len(items) <= 1:
        return [fn(it) for it in items]
    import multiprocessing

    with multiprocessing.Pool(jobs) as pool:
        return pool.map(fn, items)


_WORKER_CTX: dict = {}


def _verify_worker(g6: str) -> list:
    ctx = _WORKER_CTX
    return _reports_for_graph(
        ctx["statement"], g6, ctx["params"], ctx["field"], ctx["caps"], ResultCache(None)
    )


def _cmd_verify(args) -> int:
    field = _field(args)
    caps = _caps(args)
    statement = args.statement
    _emit(_header("verify", args, field, caps, statement=statement))
    if statement in _IDEAL_STATEMENTS:
        reports = [r.to_json() for r in _verify_ideal_statement(args, field, caps)]
    else:
        if statement not in STATEMENTS:
            raise ValueError(f"unknown statement {statement!r}")
        params = _statement_params(args)
        cache = _cache(args)
        family = [graph_to_graph6(g) for g in _family(args)]
        if cache.enabled:
            results = [
                _reports_for_graph(statement, g6, params, field, caps, cache)
                for g6 in family
            ]
        else:
            _WORKER_CTX.update(statement=statement, params=params, field=field, caps=caps)
            results = _parallel_map(_verify_worker, family, args.jobs)
        reports = [rep for chunk in results for rep in chunk]
        reports.sort(key=lambda r: (r["statement"], r["instance"]))
    failed = False
    for rep in reports:
        _emit(rep)
        if rep["verdict"] == "fail":
            failed = True
    return EXIT_FAIL if failed else EXIT_OK


def _scan_worker(g6: str) -> list:
    ctx = _WORKER_CTX
    config: ScanConfig = ctx["config"]
    return [r.to_json() for r in scan_conjecture(config, [graph_from_graph6(g6)])]


def _cmd_scan(args) -> int:
    field = _field(args)
    caps = _caps(args)
    config = ScanConfig(
        conjecture=args.conjecture,
        k_max=args.kmax,
        field=field,
        caps=caps,
        reg_filter=args.reg_filter,
        c_g=args.cg,
    )
    _emit(_header("scan", args, field, caps, conjecture=args.conjecture, k_max=args.kmax))
    family = [graph_to_graph6(g) for g in _family(args)]
    cache = _cache(args)
    reports = []
    if cache.enabled:
        for g6 in family:
            key = {
                "op": "scan",
                "conjecture": args.conjecture,
                "graph6": g6,
                "k_max": args.kmax,
                "reg_filter": args.reg_filter,
                "c_g": args.cg,
                "field": field.token(),
                "caps": caps.to_json(),
            }
            hit = cache.get(key)
            if hit is None:
                hit = [r.to_json() for r in scan_conjecture(config, [graph_from_graph6(g6)])]
                cache.put(key, hit)
            reports.extend(hit)
    else:
        _WORKER_CTX.update(config=config)
        for chunk in _parallel_map(_scan_worker, family, args.jobs):
            reports.extend(chunk)
    reports.sort(key=lambda r: (r["statement"], r["instance"]))
    failed = False
    for rep in reports:
        _emit(rep)
        if rep["verdict"] == "fail":
            failed = True
    if args.summary:
        rows = {}
        for rep in reports:
            row = rows.setdefault(
                rep["statement"],
                {"statement": rep["statement"], "instances": 0, "pass": 0, "fail": 0, "skipped": 0},
            )
            row["instances"] += 1
            row[rep["verdict"]] += 1
        with open(args.summary, "w", encoding="utf-8", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=["statement", "instances", "pass", "fail", "skipped"])
            w.writeheader()
            w.writerows(rows[k] for k in sorted(rows))
    return EXIT_FAIL if failed else EXIT_OK


_COMMANDS = {
    "betti": _cmd_betti,
    "suspend": _cmd_suspend,
    "extend": _cmd_extend,
    "verify": _cmd_verify,
    "scan": _cmd_scan,
}


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code not in (0, None) else EXIT_OK
    try:
        return _COMMANDS[args.command](args)
    except CapExceeded as e:
        sys.stderr.write(f"cap overrun: {e}\n")
        return EXIT_CAP
    except (ValueError, OSError, json.JSONDecodeError) as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
