"""Coxeter graph data model for Artin groups.

A Coxeter graph records a finite set of generators together with, for every
unordered pair, the length m of the braid relation between them: m = 2 means
the pair commutes, infinity means there is no relation at all.  Two vertices
are adjacent when m >= 3 (infinity included); this is the adjacency used by
every algorithm in this package.

All values are immutable after construction and every operation is a pure
function, so everything here is safe to share between threads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

INFINITY: float = float("inf")

Label = int | float
VertexSet = tuple[str, ...]


class GraphError(ValueError):
    """Malformed graph input."""


def _pair(s: str, t: str) -> tuple[str, str]:
    return (s, t) if s < t else (t, s)


def _valid_name(name: object) -> bool:
    return isinstance(name, str) and name.isascii() and name.isidentifier()


def _valid_label(m: object) -> bool:
    if m == INFINITY:
        return True
    return isinstance(m, int) and not isinstance(m, bool) and m >= 2


@dataclass(frozen=True)
class CoxeterGraph:
    """Immutable labeled graph on a lexicographically sorted generator tuple.

    The sorted generator order is the canonical order; every deterministic
    choice downstream (component ordering, BFS frontiers, serialization)
    derives from it.
    """

    generators: VertexSet
    labels: dict[tuple[str, str], Label]

    @staticmethod
    def build(
        generators: Iterable[str],
        relations: Iterable[tuple[str, str, Label]] = (),
        infinite_by_default: bool = False,
    ) -> CoxeterGraph:
        gens = list(generators)
        if not gens:
            raise GraphError("generator list is empty")
        for name in gens:
            if not _valid_name(name):
                raise GraphError(f"invalid generator name {name!r}")
        if len(set(gens)) != len(gens):
            dup = sorted(n for n in set(gens) if gens.count(n) > 1)
            raise GraphError(f"duplicate generator names: {dup}")
        order = tuple(sorted(gens))

        default: Label = INFINITY if infinite_by_default else 2
        labels: dict[tuple[str, str], Label] = {}
        for s, t, m in relations:
            if s not in order or t not in order:
                missing = s if s not in order else t
                raise GraphError(f"relation names unknown generator {missing!r}")
            if s == t:
                raise GraphError(f"self-pair relation on {s!r}")
            if not _valid_label(m):
                raise GraphError(f"invalid label {m!r} for pair ({s!r}, {t!r})")
            key = _pair(s, t)
            if key in labels:
                if labels[key] != m:
                    raise GraphError(
                        f"pair ({s!r}, {t!r}) listed twice with conflicting "
                        f"labels {labels[key]!r} and {m!r}"
                    )
                raise GraphError(f"pair ({s!r}, {t!r}) listed twice")
            labels[key] = m
        for i, s in enumerate(order):
            for t in order[i + 1 :]:
                labels.setdefault((s, t), default)
        return CoxeterGraph(order, labels)

    def label(self, s: str, t: str) -> Label:
        return self.labels[_pair(s, t)]

    def has_edge(self, s: str, t: str) -> bool:
        return self.label(s, t) >= 3

    def subset(self, names: Iterable[str]) -> VertexSet:
        """Normalize to a canonical sorted vertex tuple, validating membership."""
        out = sorted(set(names))
        known = set(self.generators)
        for name in out:
            if name not in known:
                raise ValueError(f"unknown generator {name!r}")
        return tuple(out)


def parse_graph(text: bytes | str) -> CoxeterGraph:
    """Parse the JSON input format into a fully label-filled graph.

    The file format is ``{"generators": [...], "relations": [[s, t, m], ...],
    "infinite_by_default": false}`` where a relation label is an integer >= 2,
    the integer 0 (meaning infinity), or the string "inf".  Unlisted pairs
    receive the default label: 2 normally, infinity when
    ``infinite_by_default`` is set.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"malformed JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise GraphError("top-level value must be an object")
    unknown = set(data) - {"generators", "relations", "infinite_by_default"}
    if unknown:
        raise GraphError(f"unknown keys: {sorted(unknown)}")
    gens = data.get("generators")
    if not isinstance(gens, list):
        raise GraphError("'generators' must be a list")
    infinite_by_default = data.get("infinite_by_default", False)
    if not isinstance(infinite_by_default, bool):
        raise GraphError("'infinite_by_default' must be a boolean")

    raw = data.get("relations", [])
    if not isinstance(raw, list):
        raise GraphError("'relations' must be a list")
    relations: list[tuple[str, str, Label]] = []
    for i, entry in enumerate(raw):
        where = f"relations[{i}]"
        if not (isinstance(entry, list) and len(entry) == 3):
            raise GraphError(f"{where}: expected [generator, generator, label]")
        s, t, m = entry
        if m == "inf" or m == 0:
            m = INFINITY
        elif not _valid_label(m):
            raise GraphError(f"{where}: invalid label {m!r} (need integer >= 2, 0 or \"inf\")")
        relations.append((s, t, m))
    return CoxeterGraph.build(gens, relations, infinite_by_default)


def to_json_dict(g: CoxeterGraph) -> dict:
    """Serialize in the input file format; unlisted pairs default to m = 2."""
    relations = []
    for (s, t) in sorted(g.labels):
        m = g.labels[(s, t)]
        if m == 2:
            continue
        relations.append([s, t, 0 if m == INFINITY else m])
    return {
        "generators": list(g.generators),
        "relations": relations,
        "infinite_by_default": False,
    }


def serialize_graph(g: CoxeterGraph) -> str:
    return json.dumps(to_json_dict(g), indent=2, ensure_ascii=False)


def induced(g: CoxeterGraph, X: Iterable[str]) -> CoxeterGraph:
    """The graph on X with labels restricted from g."""
    Xs = g.subset(X)
    labels = {(s, t): g.labels[(s, t)] for i, s in enumerate(Xs) for t in Xs[i + 1 :]}
    return CoxeterGraph(Xs, labels)


def components(g: CoxeterGraph, X: Iterable[str]) -> list[VertexSet]:
    """Connected components of the induced graph on X, sorted by minimal vertex."""
    Xs = g.subset(X)
    remaining = set(Xs)
    out: list[VertexSet] = []
    for start in Xs:
        if start not in remaining:
            continue
        comp = {start}
        frontier = [start]
        remaining.discard(start)
        while frontier:
            v = frontier.pop()
            for w in sorted(remaining):
                if g.has_edge(v, w):
                    comp.add(w)
                    remaining.discard(w)
                    frontier.append(w)
        out.append(tuple(sorted(comp)))
    return out


def adjacent(g: CoxeterGraph, X: Iterable[str]) -> VertexSet:
    """Vertices outside X adjacent to some vertex of X."""
    Xs = g.subset(X)
    inside = set(Xs)
    return tuple(
        s
        for s in g.generators
        if s not in inside and any(g.has_edge(s, x) for x in Xs)
    )


def to_dot(g: CoxeterGraph) -> str:
    """DOT rendering: edges for m >= 3, the label printed when m > 3."""
    lines = ["graph coxeter {"]
    for v in g.generators:
        lines.append(f'  "{v}";')
    for (s, t) in sorted(g.labels):
        m = g.labels[(s, t)]
        if m < 3:
            continue
        if m == INFINITY:
            lines.append(f'  "{s}" -- "{t}" [label="∞"];')
        elif m > 3:
            lines.append(f'  "{s}" -- "{t}" [label="{m}"];')
        else:
            lines.append(f'  "{s}" -- "{t}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
