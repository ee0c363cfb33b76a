"""Command-line interface.

Exit codes: 0 success, 1 verification mismatch, 2 parameter error,
3 enumeration guard exceeded.  All output is deterministic: reruns with the
same arguments (and any --threads value) are byte-identical.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path

from . import bounds as bounds_mod
from . import closed_form, export, hochster, kneser
from .combinatorics import binom, mask_of
from .config import ENV_PREFIX, GuardExceeded, Guards


def _guards_from(args) -> Guards:
    base = Guards.from_env()
    return base.with_overrides(
        max_subsets=args.max_subsets,
        max_faces=args.max_faces,
        max_matrix_cells=args.max_matrix_cells,
        max_search_nodes=args.max_search_nodes,
    )


def _cache_dir(args) -> Path | None:
    if args.cache_dir:
        return Path(args.cache_dir)
    import os
    env = os.environ.get(ENV_PREFIX + "CACHE_DIR")
    return Path(env) if env else None


def _cache_fetch(cache: Path | None, key_obj: dict) -> tuple[str | None, Path | None]:
    if cache is None:
        return None, None
    key = hashlib.sha256(json.dumps(key_obj, sort_keys=True).encode()).hexdigest()
    path = cache / f"{key}.json"
    if path.exists():
        return path.read_text(), path
    return None, path


def _cache_store(path: Path | None, text: str) -> None:
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)


def _parse_subset(raw: str | None) -> int | None:
    """Comma-separated 1-based elements -> mask; empty string means the empty set."""
    if raw is None:
        return None
    raw = raw.strip()
    if not raw:
        return 0
    try:
        return mask_of(int(tok) for tok in raw.split(","))
    except ValueError as exc:
        raise ValueError(f"bad subset {raw!r}: {exc}") from exc


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_info(args) -> int:
    kn = kneser.build(args.m, args.k, _guards_from(args))
    degree = binom(args.m - args.k, args.k)
    data = {
        "m": args.m,
        "k": args.k,
        "vertices": 2 * kn.n_left,
        "edges": kn.graph.edge_count(),
        "degree": degree,
        "ladder": kn.is_ladder,
    }
    if args.output == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(f"H({args.m},{args.k}): bipartite Kneser graph")
        print(f"  vertices : {data['vertices']} ({kn.n_left} per side)")
        print(f"  edges    : {data['edges']}")
        print(f"  regular degree : {degree}")
        print(f"  ladder (m = 2k): {'yes' if kn.is_ladder else 'no'}")
    return 0


def cmd_betti_linear(args) -> int:
    guards = _guards_from(args)
    strand = closed_form.linear_strand(args.m, args.k, args.i_max)
    if not args.verify:
        if args.output == "json":
            print(closed_form.linear_strand_to_json(strand))
        elif args.output == "csv":
            print(closed_form.linear_strand_to_csv(strand), end="")
        else:
            print(f"linear strand of H({args.m},{args.k}), i = 1..{args.i_max}")
            for i, v in enumerate(strand.values, start=1):
                print(f"  beta_{{{i},{i + 1}}} = {v}")
            print(f"  support ends at i = {strand.support_end}")
        return 0
    g = kneser.build(args.m, args.k, guards).graph
    rows = []
    ok = True
    for i, v in enumerate(strand.values, start=1):
        oracle = hochster.linear_strand_oracle(g, i, threads=args.threads,
                                               guards=guards)
        match = oracle == v
        ok = ok and match
        rows.append((i, v, oracle, match))
    if args.output == "json":
        payload = {
            "m": args.m,
            "k": args.k,
            "rows": [{"i": i, "formula": str(v), "oracle": str(o),
                      "match": mt} for i, v, o, mt in rows],
            "verified": ok,
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(f"linear strand of H({args.m},{args.k}) with oracle verification")
        for i, v, o, mt in rows:
            status = "ok" if mt else "MISMATCH"
            print(f"  i={i}: formula {v}  oracle {o}  {status}")
        print("verified" if ok else "VERIFICATION FAILED")
    return 0 if ok else 1


def cmd_betti_table(args) -> int:
    guards = _guards_from(args)
    cache = _cache_dir(args)
    key = {"command": "betti-table", "m": args.m, "k": args.k, "char": args.char}
    cached, path = _cache_fetch(cache, key)
    if cached is None:
        g = kneser.build(args.m, args.k, guards).graph
        table = hochster.full_betti_oracle(g, field_char=args.char, guards=guards)
        stored = json.dumps({"n": table.n,
                             "table": json.loads(hochster.betti_table_to_json(table))},
                            indent=2, sort_keys=True)
        _cache_store(path, stored)
    else:
        stored = cached
    obj = json.loads(stored)
    table = hochster.betti_table_from_json(json.dumps(obj["table"]), n=obj["n"])
    if args.output == "json":
        print(hochster.betti_table_to_json(table))
    else:
        print(f"Betti table of R/I(H({args.m},{args.k})), characteristic {args.char}")
        print(hochster.betti_table_triangle(table), end="")
        print(f"pd  = {hochster.pd_of(table)}")
        print(f"reg = {hochster.reg_of(table)}")
    return 0


def _render_report_text(obj: dict) -> str:
    lines = [f"invariant : {obj['invariant']}"]
    params = ", ".join(f"{k}={v}" for k, v in sorted(obj["params"].items()))
    lines.append(f"params    : {params}")
    lines.append(f"lower     : {obj['lower']}")
    lines.append(f"upper     : {obj['upper']}")
    lines.append(f"exact     : {obj['exact'] if obj['exact'] is not None else '-'}")
    for cert in obj["certificates"]:
        checks = ", ".join(f"{name}={'ok' if ok else 'FAIL'}"
                           for name, ok in sorted(cert["checks"].items()))
        lines.append(f"certificate {cert['kind']}: {checks}")
    for a in obj["anchors"]:
        lines.append(f"  - {a}")
    return "\n".join(lines)


def cmd_bounds(args) -> int:
    if args.invariant == "reg":
        report = bounds_mod.reg_bounds(args.m, args.k)
    elif args.invariant == "pd":
        report = bounds_mod.pd_bounds(args.m, args.k)
    else:
        report = bounds_mod.reg_power_bounds(args.m, args.k, args.p)
    text = report.to_json()
    if args.output == "json":
        print(text)
    else:
        print(_render_report_text(json.loads(text)))
    return 0


def cmd_certify(args) -> int:
    guards = _guards_from(args)
    cache = _cache_dir(args)
    key = {"command": "certify", "m": args.m, "k": args.k, "kind": args.kind,
           "s": args.s, "j": args.j, "t": args.t, "q": args.q,
           "variant": args.variant}
    cached, path = _cache_fetch(cache, key)
    if cached is None:
        s = _parse_subset(args.s)
        q = _parse_subset(args.q)
        if args.kind == "matching":
            report = bounds_mod.certify_induced_matching(args.m, args.k, s,
                                                         guards=guards)
        elif args.kind == "cochord":
            variant = (bounds_mod.DOUBLE_STAR_VARIANT
                       if args.variant == "double-stars"
                       else bounds_mod.STAR_VARIANT)
            report = bounds_mod.certify_cochordal_cover(args.m, args.k, variant,
                                                        t=args.t, guards=guards)
        elif args.kind == "domination":
            report = bounds_mod.certify_domination(args.m, args.k, s, args.j,
                                                   guards=guards)
        else:
            report = bounds_mod.certify_gamma_demand(args.m, args.k, q, s,
                                                     guards=guards)
        stored = report.to_json()
        _cache_store(path, stored)
    else:
        stored = cached
    if args.output == "json":
        print(stored)
    else:
        print(_render_report_text(json.loads(stored)))
    return 0


def cmd_export(args) -> int:
    kn = kneser.build(args.m, args.k, _guards_from(args))
    if args.format == "m2":
        print(export.to_macaulay2(kn), end="")
    elif args.format == "singular":
        print(export.to_singular(kn), end="")
    elif args.format == "dot":
        print(export.to_dot_graph(kn), end="")
    else:
        print(export.to_json_graph(kn))
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("m", type=int, help="ground set size")
    common.add_argument("k", type=int, help="subset size (left side)")
    common.add_argument("--threads", type=int, default=1,
                        help="worker threads for oracle sums (default 1)")
    common.add_argument("--cache-dir", default=None,
                        help="directory for cached results")
    common.add_argument("--output", choices=["text", "json", "csv"],
                        default="text", help="output format")
    for guard in ("max-subsets", "max-faces", "max-matrix-cells", "max-search-nodes"):
        common.add_argument(f"--{guard}", type=int, default=None,
                            dest=guard.replace("-", "_"),
                            help=f"override the {guard.replace('-', '_')} guard")

    p = argparse.ArgumentParser(
        prog="kneserhom",
        description="Homological invariants of edge ideals of bipartite "
                    "Kneser graphs H(m,k)")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("info", parents=[common], help="graph parameters")
    sp.set_defaults(func=cmd_info)

    sp = sub.add_parser("betti-linear", parents=[common],
                        help="closed-form linear strand, optionally verified")
    sp.add_argument("--i-max", type=int, default=8)
    sp.add_argument("--verify", action="store_true",
                    help="cross-check each value against the Hochster oracle")
    sp.set_defaults(func=cmd_betti_linear)

    sp = sub.add_parser("betti-table", parents=[common],
                        help="full Betti table by the brute-force oracle")
    sp.add_argument("--char", type=int, default=2,
                    help="field characteristic, 0 or a prime (default 2)")
    sp.set_defaults(func=cmd_betti_table)

    sp = sub.add_parser("bounds", parents=[common],
                        help="regularity / projective dimension bounds")
    sp.add_argument("--invariant", choices=["reg", "pd", "reg-power"],
                    required=True)
    sp.add_argument("--p", type=int, default=1, help="power for reg-power")
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("certify", parents=[common],
                        help="build and verify a combinatorial certificate")
    sp.add_argument("--kind", choices=["matching", "cochord", "domination", "gamma"],
                    required=True)
    sp.add_argument("--s", default=None,
                    help="comma-separated elements for the spread/witness set")
    sp.add_argument("--q", default=None,
                    help="comma-separated elements of the demand core (gamma)")
    sp.add_argument("--j", type=int, default=None,
                    help="extra element for domination")
    sp.add_argument("--t", type=int, default=None,
                    help="distinguished element for double-star covers")
    sp.add_argument("--variant", choices=["stars", "double-stars"],
                    default="stars", help="cover variant for --kind cochord")
    sp.set_defaults(func=cmd_certify)

    sp = sub.add_parser("export", parents=[common],
                        help="emit the graph or its edge ideal")
    sp.add_argument("--format", choices=["m2", "singular", "dot", "json"],
                    required=True)
    sp.set_defaults(func=cmd_export)
    return p


def main(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except GuardExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
