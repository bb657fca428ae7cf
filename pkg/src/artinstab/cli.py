"""Command-line interface: validation, classification, orbits, conjugacy and
stability decisions with stable machine-readable output.

Exit codes: 0 a decision was rendered (whatever the verdict), 2 invalid
input, 3 the stability question is inapplicable and --mode force was not
given, 4 the subset-size cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .classify import (
    classify_group,
    recognize_component,
    spherical_decomposition,
    standard_graph,
)
from .graph import CoxeterGraph, GraphError, components, parse_graph, to_dot, to_json_dict
from .oracle import (
    UnsupportedTypeError,
    expand_subset,
    longest_element,
    positive_roots,
    w0_conjugation_permutation,
)
from .orbit import conjugator, orbit
from .stability import SubsetSizeLimitError, decide_with_applicability
from .twist import delta_automorphism

_ORACLE_CHECK_TYPES: list[tuple[str, int, int]] = (
    [("A", n, 0) for n in range(2, 7)]
    + [("D", n, 0) for n in range(4, 8)]
    + [("E", 6, 0), ("E", 7, 0)]
    + [("F", 4, 0)]
    + [("B", n, 0) for n in range(2, 5)]
    + [("I2", 2, m) for m in range(5, 11)]
)


def _fail(message: str) -> None:
    print(f"error: {message}", file=sys.stderr)


def _emit_json(payload) -> None:
    print(json.dumps(payload, indent=2, ensure_ascii=False))


def _load_graph(args) -> CoxeterGraph:
    return parse_graph(Path(args.graph).read_bytes())


def _parse_subset(g: CoxeterGraph, raw: str):
    names = [part.strip() for part in raw.split(",") if part.strip()]
    return g.subset(names)


def _attach_letters(node, g: CoxeterGraph):
    """Add expanded generator words to every delta factor in a JSON tree."""
    if isinstance(node, dict):
        out = {}
        for key, value in node.items():
            out[key] = _attach_letters(value, g)
        if "delta_of" in node:
            out["letters"] = expand_subset(g, node["delta_of"])
        return out
    if isinstance(node, list):
        return [_attach_letters(item, g) for item in node]
    return node


def _word_text(word_json: list[dict]) -> str:
    if not word_json:
        return "(empty word)"
    parts = []
    for factor in word_json:
        sign = "" if factor["sign"] == 1 else "^-1"
        parts.append("delta{" + ",".join(factor["delta_of"]) + "}" + sign)
    return " . ".join(parts)


def _cmd_validate(args) -> int:
    g = _load_graph(args)
    payload = to_json_dict(g)
    if args.format == "json":
        _emit_json(payload)
    else:
        print(f"graph ok: {len(g.generators)} generators")
        print(json.dumps(payload, ensure_ascii=False))
    return 0


def _cmd_classify(args) -> int:
    g = _load_graph(args)
    report = classify_group(g)
    if args.format == "json":
        _emit_json(report.to_json_dict())
    else:
        d = report.to_json_dict()
        for key, value in d.items():
            print(f"{key}: {value}")
    return 0


def _cmd_type(args) -> int:
    g = _load_graph(args)
    X = _parse_subset(g, args.subset)
    comps = components(g, X)
    entries = []
    for comp in comps:
        tc = recognize_component(g, comp)
        entries.append(
            {
                "generators": list(comp),
                "type": None if tc is None else str(tc.type),
                "positions": None if tc is None else list(tc.positions),
            }
        )
    payload = {
        "subset": list(X),
        "spherical": all(e["type"] is not None for e in entries),
        "components": entries,
    }
    if args.format == "json":
        _emit_json(payload)
    else:
        kind = "spherical" if payload["spherical"] else "not spherical"
        print(f"subset {','.join(X)}: {kind}")
        for e in entries:
            print(f"  {{{','.join(e['generators'])}}}: {e['type'] or 'not finite type'}")
    return 0


def _cmd_orbit(args) -> int:
    g = _load_graph(args)
    X = _parse_subset(g, args.subset)
    table = orbit(g, X)
    payload = table.to_json_list()
    if args.expand_words:
        payload = _attach_letters(payload, g)
    if args.format == "json":
        _emit_json(payload)
    else:
        for entry in payload:
            print(f"{{{','.join(entry['subset'])}}}  via  {_word_text(entry['word'])}")
    return 0


def _cmd_conjugate(args) -> int:
    g = _load_graph(args)
    X = _parse_subset(g, args.subset)
    Xp = _parse_subset(g, args.target)
    word = conjugator(g, X, Xp)
    if word is None:
        payload = {"conjugate": False, "word": None}
    else:
        payload = {"conjugate": True, "word": word.to_json_list()}
    if args.expand_words:
        payload = _attach_letters(payload, g)
    if args.format == "json":
        _emit_json(payload)
    elif word is None:
        print("not conjugate")
    else:
        print(_word_text(payload["word"]))
    return 0


def _cmd_stability(args) -> int:
    g = _load_graph(args)
    X = _parse_subset(g, args.subset)
    report = decide_with_applicability(
        g, X, mode=args.mode, max_subset_size=args.max_subset_size
    )
    payload = report.to_json_dict()
    if args.expand_words:
        payload = _attach_letters(payload, g)
    if args.format == "json":
        _emit_json(payload)
    else:
        print(f"verdict: {payload['verdict']} ({payload['semantics']})")
        if payload["witness"] is not None:
            print(f"witness: {json.dumps(payload['witness'], ensure_ascii=False)}")
        if payload["reason"] is not None:
            print(f"reason: {payload['reason']}")
    if report.verdict == "inapplicable":
        return 3
    return 0


def _cmd_export_dot(args) -> int:
    g = _load_graph(args)
    sys.stdout.write(to_dot(g))
    return 0


def _cmd_oracle_check(args) -> int:
    rows = []
    all_ok = True
    for family, n, m in _ORACLE_CHECK_TYPES:
        g = standard_graph(family, n, m)
        tc = recognize_component(g, g.generators)
        assert tc is not None
        oracle_perm = w0_conjugation_permutation(tc)
        tau = delta_automorphism(tc)
        pos_index = {v: i + 1 for i, v in enumerate(tc.positions)}
        twist_perm = {pos_index[a]: pos_index[b] for a, b in tau.items()}
        ok = oracle_perm == twist_perm
        if tc.type.family != "I2":
            ok = ok and len(longest_element(tc).word) == len(positive_roots(tc))
        all_ok = all_ok and ok
        rows.append(
            {
                "type": str(tc.type),
                "oracle_permutation": {str(k): v for k, v in sorted(oracle_perm.items())},
                "twist_permutation": {str(k): v for k, v in sorted(twist_perm.items())},
                "match": ok,
            }
        )
    if args.format == "json":
        _emit_json({"all_match": all_ok, "rows": rows})
    else:
        for row in rows:
            status = "PASS" if row["match"] else "FAIL"
            print(f"{status}  {row['type']:7s} {row['oracle_permutation']}")
        print("all match" if all_ok else "MISMATCH FOUND")
    return 0


def _add_common(sub, graph_required=True):
    sub.add_argument("--graph", required=graph_required, help="path to the graph JSON file")
    sub.add_argument("--format", choices=("json", "text"), default="text")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="artinstab",
        description=(
            "Decide conjugacy and conjugacy stability of standard parabolic "
            "subgroups of Artin groups given by a Coxeter graph."
        ),
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("validate", help="parse a graph file and echo the normalized graph")
    _add_common(p)
    p.set_defaults(handler=_cmd_validate)

    p = subs.add_parser("classify", help="report the group-family classification")
    _add_common(p)
    p.set_defaults(handler=_cmd_classify)

    p = subs.add_parser("type", help="spherical-type decomposition of a subset")
    _add_common(p)
    p.add_argument("--subset", required=True, help="comma-separated generators")
    p.set_defaults(handler=_cmd_type)

    p = subs.add_parser("orbit", help="twist closure of a subset with witness words")
    _add_common(p)
    p.add_argument("--subset", required=True)
    p.add_argument("--expand-words", action="store_true")
    p.set_defaults(handler=_cmd_orbit)

    p = subs.add_parser("conjugate", help="find a conjugating word between two subsets")
    _add_common(p)
    p.add_argument("--subset", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--expand-words", action="store_true")
    p.set_defaults(handler=_cmd_conjugate)

    p = subs.add_parser("stability", help="decide conjugacy stability of a subset")
    _add_common(p)
    p.add_argument("--subset", required=True)
    p.add_argument("--mode", choices=("auto", "force"), default="auto")
    p.add_argument("--expand-words", action="store_true")
    p.add_argument("--max-subset-size", type=int, default=16)
    p.set_defaults(handler=_cmd_stability)

    p = subs.add_parser("export-dot", help="render the graph in DOT format")
    _add_common(p)
    p.set_defaults(handler=_cmd_export_dot)

    p = subs.add_parser(
        "oracle-check",
        help="cross-verify diagram reflections against the Weyl-group oracle",
    )
    _add_common(p, graph_required=False)
    p.set_defaults(handler=_cmd_oracle_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except GraphError as exc:
        _fail(str(exc))
        return 2
    except SubsetSizeLimitError as exc:
        _fail(str(exc))
        return 4
    except UnsupportedTypeError as exc:
        _fail(str(exc))
        return 2
    except (OSError, ValueError) as exc:
        _fail(str(exc))
        return 2


if __name__ == "__main__":
    sys.exit(main())
