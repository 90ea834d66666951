"""Command-line entry point: ``planturan {construct,verify,bounds,extremal,repro}``.

Every command prints a JSON run manifest on stdout; logs go to stderr. The
exit code is 0 iff every requested check passed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
import time
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from . import bounds as B
from . import constructions as C
from .detectors import Family, ForbiddenFamily, circumference, find
from .extremal import exact_extremal
from .graph import Graph, GraphError, from_graph6, is_planar, to_dot, to_graph6

SCHEMA = "planturan.run/1"
log = logging.getLogger("planturan")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class Builder:
    fn: Callable[..., Graph]
    params: tuple[str, ...]
    expected: Optional[Callable[..., int]]
    citation: str


def _base(params: dict) -> Graph:
    if "base" not in params:
        raise UsageError("gluing constructions need base=<graph6>")
    return from_graph6(params["base"])


BUILDERS: dict[str, Builder] = {
    "T": Builder(C.T, ("m",), lambda m: 3 * m - 6, "T_m := K_2 + P_{m-2}"),
    "O": Builder(C.O, ("p",), lambda p: max(2 * p - 3, 0),
                 "maximal outerplanar O_p with max degree <= 4"),
    "R": Builder(C.R, ("ell", "k"), C.R_edge_count, "spine R_ell"),
    "T-np": Builder(C.T_np, ("n", "p"), lambda n, p: 3 * n - 6, "T_n^p: triangulation with circumference p"),
    "L-np": Builder(C.L_np, ("n", "p_minus_1"), lambda n, p_minus_1: 3 * n - 6, "L_n^{p-1}: triangulation with circumference 2p-1"),
    "counterexample-ck": Builder(C.counterexample_Ck, ("k", "n"),
                                 lambda k, n: C.ConstructionParams.from_kn(k, n).expected_edges(),
                                 "R_{t+4} with H_1..H_{t+1} glued on its spine, C_k-free"),
    "small-regime": Builder(C.small_regime_Ck, ("k", "n"), lambda k, n: 3 * n - 6,
                            "C_k-free triangulation at small orders"),
}

GLUES: dict[str, tuple[Callable[..., Graph], tuple[str, ...], Callable[..., int], str]] = {
    "lemma31-glue": (C.lemma31_glue, ("k",), lambda k: 3 * k - 6, "glue T_k onto v: +3k-6 edges, C_k^+-free kept"),
    "lemma42a-glue": (C.lemma42a_glue, ("k",), lambda k: 6 * k - 12, "glue two T_k: +6k-12 edges, 2C_k-free kept"),
    "lemma42b-glue": (C.lemma42b_glue, ("k",), lambda k: 6 * k - 6, "glue two T_k copies differently: +6k-6 edges"),
    "lemma51a-glue": (C.lemma51a_glue, ("k",), lambda k: 3 * k - 6, "glue T_k onto v: +3k-6 edges, Theta_k^+-free kept"),
    "lemma51b-glue": (C.lemma51b_glue, ("k", "t"), lambda k, t: 2 * t - 1, "join t new vertices: +2t-1 edges"),
    "lemma51c-glue": (C.lemma51c_glue, ("t",), lambda t: 2 * t, "join t new vertices to a non-adjacent pair: +2t edges"),
}


def build(name: str, params: dict) -> tuple[Graph, Optional[int], str]:
    """Graph, expected edge count and citation for a named construction."""
    def ints(keys):
        try:
            return {p: int(params[p]) for p in keys}
        except KeyError as e:
            raise UsageError(f"{name} needs parameter {e.args[0]}") from None
        except ValueError as e:
            raise UsageError(str(e)) from None

    if name in BUILDERS:
        b = BUILDERS[name]
        args = ints(b.params)
        return b.fn(**args), b.expected(**args), b.citation
    if name in GLUES:
        fn, keys, delta, cite = GLUES[name]
        args = ints(keys)
        base = _base(params)
        return fn(base=base, **args), base.edge_count() + delta(**args), cite
    if name == "witness":
        wname = params.get("name")
        if wname not in C.CATALOG:
            raise UsageError(f"unknown witness {wname!r}; known: {sorted(C.CATALOG)}")
        entry = C.CATALOG[wname]
        args = ints(entry.params)
        return entry.build(**args), entry.expected_edges(**args), entry.citation
    raise UsageError(f"unknown construction {name!r}; known: {sorted(BUILDERS) + sorted(GLUES) + ['witness']}")


def parse_construct_spec(spec: str) -> tuple[str, dict]:
    """``"counterexample-ck k=13 n=390"`` -> (name, {"k": "13", "n": "390"})."""
    parts = spec.split()
    if not parts:
        raise UsageError("empty construction spec")
    params = {}
    for item in parts[1:]:
        key, sep, val = item.partition("=")
        if not sep:
            raise UsageError(f"bad construction parameter {item!r}, expected key=value")
        params[key.replace("-", "_")] = val
    return parts[0], params


def _family(name: str, k: int) -> ForbiddenFamily:
    try:
        return ForbiddenFamily(Family(name), k)
    except ValueError as e:
        raise UsageError(str(e)) from None


# -- subcommands -------------------------------------------------------------

def cmd_construct(args) -> tuple[dict, bool]:
    params = {key: val for key, val in vars(args).items()
              if key in ("m", "p", "ell", "k", "n", "t", "p_minus_1", "name", "base") and val is not None}
    g, expected, citation = build(args.construction, params)
    g6 = to_graph6(g)
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(to_dot(g, args.construction))
    ok = expected is None or expected == g.edge_count()
    res = {
        "construction": args.construction,
        "vertices": g.n,
        "edges": g.edge_count(),
        "expected_edges": expected,
        "edge_count_matches": ok,
        "graph6": g6,
        "citation": citation,
    }
    return res, ok


def _load_graph(args) -> tuple[Graph, str]:
    if args.g6:
        return from_graph6(args.g6), "graph6"
    if args.construct:
        name, params = parse_construct_spec(args.construct)
        return build(name, params)[0], args.construct
    raise UsageError("verify needs --g6 or --construct")


def cmd_verify(args) -> tuple[dict, bool]:
    g, source = _load_graph(args)
    planar = is_planar(g)
    res: dict = {"source": source, "vertices": g.n, "edge_count": g.edge_count(), "planar": planar,
                 "graph6": to_graph6(g)}
    if args.family == "circumference":
        res["circumference"] = circumference(g)
        return res, planar
    fam = _family(args.family, args.k)
    w = find(g, fam)
    res.update({"family": fam.kind.value, "k": fam.k, "free": w is None,
                "witness": w.to_json() if w else None})
    if w is not None:
        res["witness_valid"] = w.validate(g)
    want_free = args.expect == "free"
    ok = planar and (w is None) == want_free
    return res, ok


def _int_range(text: str) -> list[int]:
    lo, sep, hi = text.partition("..")
    try:
        return list(range(int(lo), int(hi) + 1)) if sep else [int(lo)]
    except ValueError:
        raise UsageError(f"bad integer or range {text!r}") from None


def cmd_bounds(args) -> tuple[dict, bool]:
    if args.action == "compare":
        if args.k is None:
            raise UsageError("bounds compare needs --k (e.g. 13..25)")
        rows = []
        for k in _int_range(args.k):
            n = B.threshold_order(k) if args.at_threshold or args.n is None else int(args.n)
            rows.append(B.beats_conjecture(k, n).to_json())
        res = {"comparisons": rows}
        if args.format == "csv":
            buf = io.StringIO()
            w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
            w.writeheader()
            w.writerows(rows)
            res["csv"] = buf.getvalue()
        return res, all(r["beats"] for r in rows)
    if not args.id:
        raise UsageError("bounds needs --id or the compare action")
    fid = B.canonical_id(args.id)
    k = int(args.k) if args.k is not None else None
    n = int(args.n) if args.n is not None else None
    q = B.BoundQuery(fid, n=n, k=k, ell=args.ell, D=args.D)
    if fid in B.APPROXIMATE:
        val = B.approx_bound(q)
        return {"id": fid, "exact": False, "decimal": str(val), "citation": B.APPROXIMATE[fid]}, True
    val = B.eval_bound(q)
    res = {"id": fid, "exact": True, "value": B.render(val), "decimal": B.decimal(val),
           "citation": B.FORMULAS[fid].citation}
    if q.r is not None:
        res["r"] = q.r
    return res, True


def cmd_extremal(args) -> tuple[dict, bool]:
    fam = _family(args.family, args.k)
    r = exact_extremal(args.n, fam, cap_override=args.cap_override)
    res = r.to_json()
    res.pop("elapsed_seconds")
    ok = args.expect is None or r.value == args.expect
    if args.expect is not None:
        res["expected"] = args.expect
    return res, ok


def cmd_repro(args) -> tuple[dict, bool]:
    with open(args.manifest) as fh:
        old = json.load(fh)
    if old.get("schema") != SCHEMA:
        raise UsageError(f"unsupported manifest schema {old.get('schema')!r}")
    new = run(old["argv"])
    same = _canon(new["results"]) == _canon(old["results"])
    return {"manifest": args.manifest, "argv": old["argv"], "identical": same}, same and new["ok"]


def _collect(obj, suffix: str) -> list[str]:
    """String values under keys ending in ``suffix`` anywhere in ``obj``."""
    found = []
    if isinstance(obj, dict):
        for key, val in obj.items():
            if isinstance(val, str) and key.endswith(suffix):
                found.append(val)
            else:
                found.extend(_collect(val, suffix))
    elif isinstance(obj, list):
        for val in obj:
            found.extend(_collect(val, suffix))
    return found


def _canon(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


COMMANDS = {
    "construct": cmd_construct,
    "verify": cmd_verify,
    "bounds": cmd_bounds,
    "extremal": cmd_extremal,
    "repro": cmd_repro,
}


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="planturan", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    ap.add_argument("--out", help="also write the run manifest to this file")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a named graph")
    c.add_argument("construction")
    for flag in ("m", "p", "ell", "k", "n", "t"):
        c.add_argument(f"--{flag}", type=int)
    c.add_argument("--p-minus-1", dest="p_minus_1", type=int)
    c.add_argument("--name", help="witness catalog entry")
    c.add_argument("--base", help="base graph (graph6) for gluing constructions")
    c.add_argument("--dot", help="write a DOT rendering to this path")

    v = sub.add_parser("verify", help="check planarity and freeness of a graph")
    src = v.add_mutually_exclusive_group(required=True)
    src.add_argument("--g6")
    src.add_argument("--construct", help='e.g. "counterexample-ck k=13 n=390"')
    v.add_argument("--family", required=True, choices=[f.value for f in Family] + ["circumference"])
    v.add_argument("--k", type=int, default=3)
    v.add_argument("--expect", choices=["free", "contains"], default="free")

    b = sub.add_parser("bounds", help="evaluate bound formulas exactly")
    b.add_argument("action", nargs="?", choices=["compare"])
    b.add_argument("--id")
    b.add_argument("--k")
    b.add_argument("--n")
    b.add_argument("--ell", type=int)
    b.add_argument("--D", type=int)
    b.add_argument("--at-threshold", action="store_true")
    b.add_argument("--format", choices=["json", "csv"], default="json")

    e = sub.add_parser("extremal", help="exact ex_P(n, F) by exhaustive search")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--family", required=True, choices=[f.value for f in Family])
    e.add_argument("--k", type=int, required=True)
    e.add_argument("--cap-override", type=int)
    e.add_argument("--expect", type=int)

    r = sub.add_parser("repro", help="re-run a manifest and compare results")
    r.add_argument("manifest")
    return ap


def run(argv: Sequence[str]) -> dict:
    args = make_parser().parse_args(list(argv))
    start = time.perf_counter()
    results, ok = COMMANDS[args.command](args)
    argv_clean = [a for a in argv]
    if args.out:
        i = argv_clean.index("--out")
        del argv_clean[i:i + 2]
    return {
        "schema": SCHEMA,
        "subcommand": args.command,
        "argv": argv_clean,
        "params": {key: val for key, val in vars(args).items()
                   if key not in ("command", "out", "verbose") and val is not None},
        "results": results,
        "digests": sorted(set(_collect(results, "graph6"))),
        "citations": sorted(set(_collect(results, "citation"))),
        "ok": ok,
        "timing": {"seconds": round(time.perf_counter() - start, 3)},
    }


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    verbose = "-v" in argv or "--verbose" in argv
    logging.basicConfig(stream=sys.stderr, level=logging.INFO if verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        manifest = run(argv)
    except (UsageError, GraphError, B.BoundError, ValueError) as e:
        print(json.dumps({"schema": SCHEMA, "ok": False, "error": type(e).__name__, "message": str(e)}))
        return 2
    text = json.dumps(manifest, indent=2, sort_keys=True)
    print(text)
    out = manifest["params"].get("out") or _out_path(argv)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    return 0 if manifest["ok"] else 1


def _out_path(argv: Sequence[str]) -> Optional[str]:
    if "--out" in argv:
        i = list(argv).index("--out")
        return argv[i + 1] if i + 1 < len(argv) else None
    return None


if __name__ == "__main__":
    sys.exit(main())
