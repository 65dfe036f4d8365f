"""Command-line front end.

Subcommands: roots, ideals, orbits, cascade, dual, normal-form,
structure-table, count-anr, conjecture-check, hasse, paper-suite.
Domain errors exit with status 1, usage errors with 2; all output is
deterministic for fixed arguments and seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import anr, normal_form, orbits, suite, weyl
from .chevalley import build_structure_table
from .ideals import (
    abelian_nilradicals,
    enumerate_abelian_ideals,
    ideal_from_shape,
    ideal_generated,
    is_abelian,
    maximal_abelian_ideals,
)
from .root_system import (
    build_root_system,
    node_from_bourbaki,
    node_to_bourbaki,
)

_NUMBERING_ENV = "BOREL_ORBITS_NUMBERING"


def _numbering(args) -> str:
    conv = args.numbering or os.environ.get(_NUMBERING_ENV, "bourbaki")
    if conv not in ("bourbaki", "vinberg"):
        raise ValueError(f"unknown numbering convention {conv!r}")
    return conv


def _node_in(rs, args, node: int) -> int:
    return node_to_bourbaki(rs, node, _numbering(args)) - 1


def _node_out(rs, args, node0: int) -> int:
    return node_from_bourbaki(rs, node0 + 1, _numbering(args))


def _parse_root_list(rs, text: str):
    tokens = []
    depth = 0
    cur = ""
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "," and depth == 0:
            tokens.append(cur)
            cur = ""
        else:
            cur += ch
    if cur.strip():
        tokens.append(cur)
    return frozenset(rs.parse_root(t.strip()) for t in tokens if t.strip())


def _resolve_ideal(rs, args) -> frozenset:
    specs = [s for s in ("ideal", "shape", "max_abelian", "anr")
             if getattr(args, s, None) is not None]
    if len(specs) != 1:
        raise ValueError(
            "specify the ideal with exactly one of --ideal, --shape, "
            "--max-abelian or --anr")
    if args.ideal is not None:
        gens = _parse_root_list(rs, args.ideal)
        ideal = ideal_generated(rs, gens)
        if not is_abelian(rs, ideal):
            raise ValueError("the generated ideal is not abelian")
        return ideal
    if args.shape is not None:
        rows = [int(x) for x in args.shape.split(",") if x.strip()]
        ideal = ideal_from_shape(rs, rows)
        if not is_abelian(rs, ideal):
            raise ValueError(f"the shape {rows} ideal is not abelian")
        return ideal
    if args.max_abelian is not None:
        mx = maximal_abelian_ideals(rs)
        if not 0 <= args.max_abelian < len(mx):
            raise ValueError(
                f"{rs.type} has {len(mx)} maximal abelian ideals, "
                f"index {args.max_abelian} is out of range")
        return mx[args.max_abelian]
    node = _node_in(rs, args, args.anr)
    return anr.anr_ideal(rs, node)


def _ideal_spec_options(p):
    p.add_argument("--ideal", help="comma-separated generator roots")
    p.add_argument("--shape", help="type-A Young diagram rows, e.g. 3,3,1")
    p.add_argument("--max-abelian", type=int, dest="max_abelian",
                   help="index into the maximal abelian ideals")
    p.add_argument("--anr", type=int, help="abelian-nilradical node (1-based)")


def _labels(rs, roots):
    return ",".join(sorted(rs.root_label(i) for i in roots))


def _parse_vector(rs, text: str) -> dict:
    out = {}
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ":" not in part:
            raise ValueError(f"vector entry {part!r} is not of the form root:value")
        token, _, value = part.rpartition(":")
        out[rs.parse_root(token.strip())] = Fraction(value.strip())
    return out


# -- subcommand handlers ----------------------------------------------------

def _cmd_roots(args) -> int:
    rs = build_root_system(args.type)
    if args.json:
        data = {
            "type": str(rs.type),
            "rank": rs.rank,
            "cartan": [list(r) for r in rs.cartan],
            "theta": rs.root_json(rs.theta_index),
            "positive_roots": [rs.root_json(i) for i in range(rs.num_positive)],
        }
        print(json.dumps(data, indent=2, sort_keys=True))
        return 0
    print(f"{rs.type}: {rs.num_positive} positive roots, "
          f"theta = {rs.root_label(rs.theta_index)}")
    for i in range(rs.num_positive):
        kind = "long" if rs.long[i] else "short"
        print(f"{i:4d}  h={rs.heights[i]:2d}  {kind:5s}  {rs.root_label(i):12s} "
              f"{list(rs.positive_roots[i])}")
    return 0


def _cmd_ideals(args) -> int:
    rs = build_root_system(args.type)
    if args.shape is not None:
        rows = [int(x) for x in args.shape.split(",") if x.strip()]
        ideal = ideal_from_shape(rs, rows)
        items = [("shape " + args.shape, ideal)]
    elif args.anr:
        items = [(f"alpha_{_node_out(rs, args, node)}", ideal)
                 for node, ideal in abelian_nilradicals(rs)]
    elif args.maximal:
        items = [(f"maximal {k}", a)
                 for k, a in enumerate(maximal_abelian_ideals(rs))]
    else:
        items = [(f"abelian {k}", a)
                 for k, a in enumerate(enumerate_abelian_ideals(rs))]
    if args.json:
        print(json.dumps(
            [{"name": name, "size": len(a), "roots": sorted(rs.root_label(i) for i in a)}
             for name, a in items], indent=2, sort_keys=True))
        return 0
    for name, a in items:
        print(f"{name}: dim {len(a)}: {_labels(rs, a)}")
    return 0


def _cmd_orbits(args) -> int:
    rs = build_root_system(args.type)
    ideal = _resolve_ideal(rs, args)
    subsets = orbits.strongly_orth_subsets(rs, ideal)
    if args.count:
        print(len(subsets))
        return 0
    records = [orbits.orbit_record(rs, ideal, s) for s in subsets]
    if args.json:
        print(json.dumps([r.to_json(rs) for r in records], indent=2, sort_keys=True))
        return 0
    if args.csv:
        print("orth_set,size,dim_in_a,dim_in_a_star,dual")
        for r in records:
            print(f"\"{_labels(rs, r.orth_set)}\",{len(r.orth_set)},"
                  f"{r.dim_in_a},{r.dim_in_a_star},\"{_labels(rs, r.dual)}\"")
        return 0
    print(f"{rs.type}, ideal of dim {len(ideal)}: {len(subsets)} orbits")
    for r in records:
        line = f"  {{{_labels(rs, r.orth_set)}}}"
        if args.dims:
            line += f"  dim {r.dim_in_a}, dual dim {r.dim_in_a_star}"
        if args.dual:
            line += f"  dual {{{_labels(rs, r.dual)}}}"
        print(line)
    return 0


def _cmd_cascade(args) -> int:
    rs = build_root_system(args.type)
    cascade = sorted(orbits.kostant_cascade(rs))
    if args.json:
        print(json.dumps({
            "type": str(rs.type),
            "cascade": sorted(rs.root_label(i) for i in cascade),
            "size": len(cascade),
            "borel_index": orbits.borel_index(rs),
        }, indent=2, sort_keys=True))
        return 0
    print(f"{rs.type} cascade ({len(cascade)} roots, Borel index "
          f"{orbits.borel_index(rs)}): {_labels(rs, cascade)}")
    return 0


def _cmd_dual(args) -> int:
    rs = build_root_system(args.type)
    ideal = _resolve_ideal(rs, args)
    s = _parse_root_list(rs, args.set)
    if not s <= ideal:
        raise ValueError("--set must lie inside the chosen ideal")
    dual = orbits.pyasetskii_dual(rs, ideal, s)
    if args.json:
        record = orbits.orbit_record(rs, ideal, s)
        print(json.dumps(record.to_json(rs), indent=2, sort_keys=True))
        return 0
    print(_labels(rs, dual))
    return 0


def _cmd_normal_form(args) -> int:
    rs = build_root_system(args.type)
    ideal = _resolve_ideal(rs, args)
    vec = _parse_vector(rs, args.vector)
    if args.dual:
        s, transcript = normal_form.reduce_in_dual(rs, ideal, vec)
    else:
        s, transcript = normal_form.reduce_in_ideal(rs, ideal, vec)
    if args.json:
        data = {"orth_set": sorted(rs.root_label(i) for i in s),
                "normalized": transcript.normalized}
        if args.transcript:
            data["transcript"] = transcript.to_json(rs)
        print(json.dumps(data, indent=2, sort_keys=True))
        return 0
    print(f"S = {{{_labels(rs, s)}}}  (normalized: {transcript.normalized})")
    if args.transcript:
        for d, t in transcript.steps:
            print(f"  step: root {rs.root_label(d)}, t = {t}")
        print(f"  torus: {[str(x) for x in transcript.torus]}")
        print(f"  result: {{{', '.join(f'{rs.root_label(i)}: {c}' for i, c in sorted(transcript.result.items()))}}}")
    return 0


def _cmd_structure_table(args) -> int:
    rs = build_root_system(args.type)
    table = build_structure_table(rs)
    if args.json:
        print(json.dumps(table.to_json(), indent=2, sort_keys=True))
        return 0
    for entry in table.to_json():
        print(f"N[{entry['a']}, {entry['b']}] = {entry['n']}")
    return 0


def _cmd_count_anr(args) -> int:
    rs = build_root_system(args.type)
    if args.node is not None:
        nodes = [_node_in(rs, args, args.node)]
    else:
        nodes = anr.anr_nodes(rs)
        if not nodes:
            raise ValueError(f"{rs.type} has no abelian nilradicals")
    tables = [anr.anr_statistic(rs, node) for node in nodes]
    if args.json:
        print(json.dumps([t.to_json() for t in tables], indent=2, sort_keys=True))
        return 0
    if args.csv:
        print("type,node,k,count")
        for t in tables:
            for k, c in enumerate(t.counts):
                print(f"{t.type},{_node_out(rs, args, t.node)},{k},{c}")
        return 0
    for t in tables:
        row = " ".join(str(c) for c in t.counts)
        print(f"{t.type} alpha_{_node_out(rs, args, t.node)}: {row} | {t.total}")
    return 0


def _report_human(rs, rep) -> None:
    where = f"node alpha_{rep.node + 1}" if rep.node is not None else "maximal ideal"
    print(f"{rep.type} {where}: {len(rep.rows)} orbits "
          f"[evidence only, not a proof]")
    print(f"  formula violations:      {len(rep.formula_violations)}")
    print(f"  parity violations:       {len(rep.parity_violations)}")
    print(f"  monotonicity violations: {len(rep.monotonicity_violations)}")
    print(f"  subset-order violations: {len(rep.subset_violations)}")
    print(f"  cover-gap violations:    {len(rep.cover_gap_violations)}")
    print(f"  rank-graded subposet:    {rep.rank_graded}")
    for s in rep.formula_violations:
        row = next(r for r in rep.rows if r.orth_set == s)
        print(f"  mismatch at {{{_labels(rs, s)}}}: dim {row.dim_actual} vs "
              f"(l + #S)/2 = {row.formula_value} (l = {row.sigma_length})")


def _cmd_conjecture_check(args) -> int:
    rs = build_root_system(args.type)
    if (args.node is None) == (args.ideal is None):
        raise ValueError("specify exactly one of --node (nilradical) or --ideal")
    if args.node is not None:
        rep = anr.conjecture_check(rs, _node_in(rs, args, args.node))
    else:
        gens = _parse_root_list(rs, args.ideal)
        rep = anr.maximal_ideal_report(rs, ideal_generated(rs, gens))
    if args.json:
        print(json.dumps(rep.to_json(rs), indent=2, sort_keys=True))
    else:
        _report_human(rs, rep)
    return 0


def _cmd_hasse(args) -> int:
    rs = build_root_system(args.type)
    rep = anr.conjecture_check(rs, _node_in(rs, args, args.node))
    dims = {r.orth_set: r.dim_actual for r in rep.rows}

    def nid(s):
        return "S_" + "_".join(str(i) for i in s) if s else "S_empty"

    lines = ["digraph bruhat {"]
    for r in rep.rows:
        label = "{" + _labels(rs, r.orth_set) + "}" if r.orth_set else "{}"
        lines.append(f'  {nid(r.orth_set)} [label="{label}\\ndim {r.dim_actual}"];')
    for lo, hi in rep.covers:
        lines.append(f"  {nid(lo)} -> {nid(hi)};")
    lines.append("}")
    print("\n".join(lines))
    return 0


def _cmd_paper_suite(args) -> int:
    ok = suite.run(only=args.only, seed=args.seed)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="borel-orbits",
        description="B-orbit combinatorics in abelian ideals of a Borel subalgebra")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--numbering", choices=("bourbaki", "vinberg"),
                        help=f"simple-root numbering convention "
                             f"(default from ${_NUMBERING_ENV} or bourbaki)")
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=lambda **kw: argparse.ArgumentParser(
                                    parents=[common], **kw))

    p = sub.add_parser("roots", help="print the positive-root table")
    p.add_argument("type")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_roots)

    p = sub.add_parser("ideals", help="list abelian ideals")
    p.add_argument("type")
    p.add_argument("--abelian", action="store_true", help="list all (default)")
    p.add_argument("--maximal", action="store_true")
    p.add_argument("--anr", action="store_true", help="list abelian nilradicals")
    p.add_argument("--shape", help="type-A Young diagram rows")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_ideals)

    p = sub.add_parser("orbits", help="orbit labels of one abelian ideal")
    p.add_argument("type")
    _ideal_spec_options(p)
    p.add_argument("--count", action="store_true", help="print only the orbit count")
    p.add_argument("--dims", action="store_true")
    p.add_argument("--dual", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(fn=_cmd_orbits)

    p = sub.add_parser("cascade", help="Kostant's cascade of the type")
    p.add_argument("type")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_cascade)

    p = sub.add_parser("dual", help="Pyasetskii dual of one orbit label")
    p.add_argument("type")
    _ideal_spec_options(p)
    p.add_argument("--set", required=True, help="comma-separated roots of S")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_dual)

    p = sub.add_parser("normal-form", help="reduce a vector to its orbit label")
    p.add_argument("type")
    _ideal_spec_options(p)
    p.add_argument("--vector", required=True,
                   help='comma-separated root:value pairs, e.g. "e1-e4:3/2,e2-e6:-1"')
    p.add_argument("--dual", action="store_true", help="treat input as a covector")
    p.add_argument("--transcript", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_normal_form)

    p = sub.add_parser("structure-table", help="Chevalley structure constants")
    p.add_argument("type")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_structure_table)

    p = sub.add_parser("count-anr", help="orbit counts of abelian nilradicals")
    p.add_argument("type")
    p.add_argument("--node", type=int, help="1-based simple-root number")
    p.add_argument("--csv", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_count_anr)

    p = sub.add_parser("conjecture-check",
                       help="order/dimension evidence for one nilradical or maximal ideal")
    p.add_argument("type")
    p.add_argument("--node", type=int)
    p.add_argument("--ideal", help="generators of a maximal abelian non-nilradical ideal")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_conjecture_check)

    p = sub.add_parser("hasse", help="DOT digraph of Bruhat covers on the labels")
    p.add_argument("type")
    p.add_argument("--node", type=int, required=True)
    p.add_argument("--dot", action="store_true", help="DOT output (the only format)")
    p.set_defaults(fn=_cmd_hasse)

    p = sub.add_parser("paper-suite", help="run the full verification suite")
    p.add_argument("--only", help="filter items by number or name substring")
    p.add_argument("--seed", type=int, default=suite.DEFAULT_SEED)
    p.set_defaults(fn=_cmd_paper_suite)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
