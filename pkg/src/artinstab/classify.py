"""Recognition of finite-type Coxeter diagrams and group-family classification.

Irreducible finite (spherical) types are A_n, B_n (n >= 2), D_n (n >= 4),
E_6, E_7, E_8, F_4, H_3, H_4 and the dihedral types I_2(m), 5 <= m < infinity.
``recognize_component`` matches a connected induced subgraph against this
catalog and returns a canonical position labeling; everything downstream
(twist automorphisms, the Weyl-group oracle) is phrased in terms of those
positions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from .graph import (
    INFINITY,
    CoxeterGraph,
    VertexSet,
    components,
    _pair,
)


@dataclass(frozen=True, order=True)
class IrreducibleType:
    """A catalog entry: family letter plus rank (and the edge label for I2)."""

    family: str  # "A", "B", "D", "E", "F", "H" or "I2"
    rank: int
    m: int = 0  # I2 only: the dihedral edge label

    def __str__(self) -> str:
        if self.family == "I2":
            return f"I2({self.m})"
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class TypedComponent:
    """A recognized component with its canonical position labeling.

    ``positions[i]`` is the generator sitting at diagram position i + 1.
    Path types (A, B, F, H, I2) are numbered along the path; D has its two
    prongs at positions 1 and 2, the branch vertex at 3 and the tail
    ascending; E types have the branch vertex at position 4, the short arm
    at position 1 and the chain 2-3-4-5-6(-7)(-8).
    """

    type: IrreducibleType
    positions: tuple[str, ...]

    @property
    def vertices(self) -> VertexSet:
        return tuple(sorted(self.positions))


def _path_order(adj: dict[str, list[str]], start: str, n: int) -> list[str]:
    order = [start]
    prev: str | None = None
    cur = start
    while len(order) < n:
        nxt = [w for w in adj[cur] if w != prev]
        prev, cur = cur, nxt[0]
        order.append(cur)
    return order


def recognize_component(g: CoxeterGraph, Y: Iterable[str]) -> TypedComponent | None:
    """Match a connected subset against the finite-type catalog.

    Returns None when the induced diagram is not of finite type.  Raises
    ValueError when Y is not connected in the graph.
    """
    Ys = g.subset(Y)
    if components(g, Ys) != [Ys]:
        raise ValueError(f"subset is not connected: {Ys!r}")
    n = len(Ys)
    if n == 1:
        return TypedComponent(IrreducibleType("A", 1), Ys)

    lab: dict[tuple[str, str], int] = {}
    adj: dict[str, list[str]] = {v: [] for v in Ys}
    edges = 0
    for i, s in enumerate(Ys):
        for t in Ys[i + 1 :]:
            m = g.label(s, t)
            if m == 2:
                continue
            if m == INFINITY:
                return None
            edges += 1
            adj[s].append(t)
            adj[t].append(s)
            lab[_pair(s, t)] = int(m)
    if edges != n - 1:
        return None  # every catalog diagram is a tree

    if n == 2:
        m = lab[_pair(Ys[0], Ys[1])]
        if m == 3:
            return TypedComponent(IrreducibleType("A", 2), Ys)
        if m == 4:
            return TypedComponent(IrreducibleType("B", 2), Ys)
        return TypedComponent(IrreducibleType("I2", 2, m), Ys)

    deg = {v: len(adj[v]) for v in Ys}
    if max(deg.values()) > 3:
        return None
    branches = [v for v in Ys if deg[v] == 3]

    if not branches:
        leaves = sorted(v for v in Ys if deg[v] == 1)
        seq = _path_order(adj, leaves[0], n)
        lseq = [lab[_pair(seq[i], seq[i + 1])] for i in range(n - 1)]
        if all(m == 3 for m in lseq):
            return TypedComponent(IrreducibleType("A", n), tuple(seq))
        if n == 4 and lseq == [3, 4, 3]:
            return TypedComponent(IrreducibleType("F", 4), tuple(seq))
        others = sorted(set(lseq) - {3})
        if others == [4] and lseq.count(4) == 1 and 4 in (lseq[0], lseq[-1]):
            if lseq[-1] == 4:
                seq.reverse()
            return TypedComponent(IrreducibleType("B", n), tuple(seq))
        if (
            n in (3, 4)
            and others == [5]
            and lseq.count(5) == 1
            and 5 in (lseq[0], lseq[-1])
        ):
            if lseq[-1] == 5:
                seq.reverse()
            return TypedComponent(IrreducibleType("H", n), tuple(seq))
        return None

    if len(branches) > 1 or any(m != 3 for m in lab.values()):
        return None
    b = branches[0]
    arms: list[list[str]] = []
    for x in sorted(adj[b]):
        arm = [x]
        prev, cur = b, x
        while deg[cur] == 2:
            nxt = [w for w in adj[cur] if w != prev][0]
            arm.append(nxt)
            prev, cur = cur, nxt
        arms.append(arm)
    arms.sort(key=len)
    lens = [len(a) for a in arms]

    if lens[0] == 1 and lens[1] == 1:
        if n == 4:
            a, c, d = sorted(arm[0] for arm in arms)
            return TypedComponent(IrreducibleType("D", 4), (a, c, b, d))
        prongs = sorted((arms[0][0], arms[1][0]))
        return TypedComponent(
            IrreducibleType("D", n), (prongs[0], prongs[1], b, *arms[2])
        )
    if lens[0] == 1 and lens[1] == 2 and lens[2] in (2, 3, 4):
        if lens[2] == 2 and arms[2][-1] < arms[1][-1]:
            arms[1], arms[2] = arms[2], arms[1]
        short, mid, long = arms
        return TypedComponent(
            IrreducibleType("E", n), (short[0], mid[1], mid[0], b, *long)
        )
    return None


def spherical_decomposition(
    g: CoxeterGraph, X: Iterable[str]
) -> list[TypedComponent] | None:
    """Typed components of X when all are of finite type, else None."""
    out = []
    for comp in components(g, X):
        tc = recognize_component(g, comp)
        if tc is None:
            return None
        out.append(tc)
    return out


def is_spherical(g: CoxeterGraph, X: Iterable[str]) -> bool:
    return spherical_decomposition(g, X) is not None


def is_twistable(c: TypedComponent) -> bool:
    """Whether conjugation by the component's Garside element acts as the
    nontrivial diagram reflection: A_n (n >= 2), odd D_n (n >= 5), E_6 and
    odd I_2(m)."""
    t = c.type
    if t.family == "A":
        return t.rank >= 2
    if t.family == "D":
        return t.rank >= 5 and t.rank % 2 == 1
    if t.family == "E":
        return t.rank == 6
    if t.family == "I2":
        return t.m % 2 == 1
    return False


@dataclass(frozen=True)
class GroupFamilyReport:
    """Which known-hypothesis families the whole group falls into."""

    spherical: bool
    fc_type: bool
    free_product_of_spherical: bool
    free_factors: tuple[tuple[VertexSet, tuple[str, ...]], ...] | None
    large: bool
    two_dimensional: bool
    martin_2dim_condition: bool
    affine_family: str | None
    applicability: str  # "FullStability" | "QuasiStability" | "Unknown"
    justification: str

    def to_json_dict(self) -> dict:
        factors = None
        if self.free_factors is not None:
            factors = [
                {"generators": list(gens), "types": list(types)}
                for gens, types in self.free_factors
            ]
        return {
            "spherical": self.spherical,
            "fc_type": self.fc_type,
            "free_product_of_spherical": self.free_product_of_spherical,
            "free_factors": factors,
            "large": self.large,
            "two_dimensional": self.two_dimensional,
            "martin_2dim_condition": self.martin_2dim_condition,
            "affine_family": self.affine_family,
            "applicability": self.applicability,
            "justification": self.justification,
        }


def _maximal_cliques(vertices: VertexSet, nbrs: dict[str, set[str]]) -> list[set[str]]:
    out: list[set[str]] = []

    def grow(r: set[str], p: set[str], x: set[str]) -> None:
        if not p and not x:
            out.append(r)
            return
        for v in sorted(p):
            grow(r | {v}, p & nbrs[v], x & nbrs[v])
            p = p - {v}
            x = x | {v}

    grow(set(), set(vertices), set())
    return out


def _affine_family(g: CoxeterGraph) -> str | None:
    S = g.generators
    n = len(S)
    if n < 3:
        return None
    deg = {
        v: sum(1 for w in S if w != v and g.has_edge(v, w))
        for v in S
    }
    edges = [(s, t) for i, s in enumerate(S) for t in S[i + 1 :] if g.has_edge(s, t)]
    if components(g, S) != [S]:
        return None
    if all(deg[v] == 2 for v in S) and len(edges) == n:
        if all(g.label(s, t) == 3 for s, t in edges):
            return f"A~{n - 1}"
        return None
    leaves = [v for v in S if deg[v] == 1]
    if len(leaves) == 2 and all(deg[v] == 2 for v in S if v not in leaves):
        adj = {v: [w for w in S if w != v and g.has_edge(v, w)] for v in S}
        seq = _path_order(adj, sorted(leaves)[0], n)
        lseq = [g.label(seq[i], seq[i + 1]) for i in range(n - 1)]
        if lseq[0] == 4 and lseq[-1] == 4 and all(m == 3 for m in lseq[1:-1]):
            return f"C~{n - 1}"
    return None


def classify_group(g: CoxeterGraph) -> GroupFamilyReport:
    """Classify the whole group into the families with known hypotheses.

    FullStability means the stability decision applies as stated; for an
    FC-type group outside those families the decision has quasi-stability
    semantics; anything else is reported Unknown.
    """
    S = g.generators
    spherical = is_spherical(g, S)

    # the graph whose edges are the pairs with a finite label (m = 2 included)
    fin_nbrs = {
        v: {w for w in S if w != v and g.label(v, w) != INFINITY} for v in S
    }
    fc_type = all(
        is_spherical(g, clique) for clique in _maximal_cliques(S, fin_nbrs)
    )

    factor_sets: list[VertexSet] = []
    remaining = set(S)
    for start in S:
        if start not in remaining:
            continue
        comp = {start}
        frontier = [start]
        remaining.discard(start)
        while frontier:
            v = frontier.pop()
            for w in sorted(remaining & fin_nbrs[v]):
                comp.add(w)
                remaining.discard(w)
                frontier.append(w)
        factor_sets.append(tuple(sorted(comp)))
    factor_decomps = [spherical_decomposition(g, f) for f in factor_sets]
    free_product = all(d is not None for d in factor_decomps)
    free_factors = None
    if free_product:
        free_factors = tuple(
            (fset, tuple(str(tc.type) for tc in dec))
            for fset, dec in zip(factor_sets, factor_decomps)
        )

    large = all(m != 2 for m in g.labels.values())
    two_dimensional = all(
        sum(
            (Fraction(0) if g.label(a, b) == INFINITY else Fraction(1, int(g.label(a, b))))
            for a, b in combinations(triple, 2)
        )
        <= 1
        for triple in combinations(S, 3)
    )
    martin = two_dimensional and all(
        sum(1 for w in S if w != v and g.label(v, w) == 2) <= 1 for v in S
    )
    affine = _affine_family(g)

    if spherical:
        applicability, why = "FullStability", "the whole group is of spherical type"
    elif free_product:
        applicability, why = (
            "FullStability",
            "the group is a free product of spherical-type factors",
        )
    elif martin:
        applicability, why = (
            "FullStability",
            "two-dimensional with every vertex commuting with at most one "
            "other (commuting read as m = 2)",
        )
    elif affine is not None:
        applicability, why = "FullStability", f"Euclidean group of type {affine}"
    elif fc_type:
        applicability, why = (
            "QuasiStability",
            "FC-type group: verdicts carry quasi-stability semantics",
        )
    else:
        applicability, why = "Unknown", "hypotheses unknown for this family"

    return GroupFamilyReport(
        spherical=spherical,
        fc_type=fc_type,
        free_product_of_spherical=free_product,
        free_factors=free_factors,
        large=large,
        two_dimensional=two_dimensional,
        martin_2dim_condition=martin,
        affine_family=affine,
        applicability=applicability,
        justification=why,
    )


def standard_graph(family: str, n: int = 0, m: int = 0) -> CoxeterGraph:
    """Build the catalog diagram of the given type on generators s1..sn."""
    def name(i: int) -> str:
        return f"s{i}"

    if family == "I2":
        if m < 3:
            raise ValueError("I2 needs an edge label m >= 3")
        return CoxeterGraph.build([name(1), name(2)], [(name(1), name(2), m)])

    rels: list[tuple[str, str, int]] = []
    if family == "A":
        if n < 1:
            raise ValueError("A needs rank >= 1")
        rels = [(name(i), name(i + 1), 3) for i in range(1, n)]
    elif family == "B":
        if n < 2:
            raise ValueError("B needs rank >= 2")
        rels = [(name(1), name(2), 4)]
        rels += [(name(i), name(i + 1), 3) for i in range(2, n)]
    elif family == "D":
        if n < 4:
            raise ValueError("D needs rank >= 4")
        rels = [(name(1), name(3), 3), (name(2), name(3), 3)]
        rels += [(name(i), name(i + 1), 3) for i in range(3, n)]
    elif family == "E":
        if n not in (6, 7, 8):
            raise ValueError("E needs rank 6, 7 or 8")
        rels = [(name(1), name(4), 3)]
        rels += [(name(i), name(i + 1), 3) for i in range(2, n)]
    elif family == "F":
        if n != 4:
            raise ValueError("F needs rank 4")
        rels = [
            (name(1), name(2), 3),
            (name(2), name(3), 4),
            (name(3), name(4), 3),
        ]
    elif family == "H":
        if n not in (3, 4):
            raise ValueError("H needs rank 3 or 4")
        rels = [(name(1), name(2), 5)]
        rels += [(name(i), name(i + 1), 3) for i in range(2, n)]
    else:
        raise ValueError(f"unknown family {family!r}")
    return CoxeterGraph.build([name(i) for i in range(1, n + 1)], rels)
