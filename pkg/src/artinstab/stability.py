"""The conjugacy-stability decision for standard parabolic subgroups.

A standard parabolic subgroup generated by X fails to be conjugacy stable
exactly when one of three obstructions exists:

* a subset of X has a component of type D_2k (k > 2) that extends to an odd
  D type through a vertex outside X at the tail position, with no such
  extension available inside X;
* a subset of X has a D_4 component with an outside odd-D extension at some
  leaf that can be repaired neither at the same leaf nor at both other
  leaves from inside X;
* some subset of X, tracked component by component, reaches a configuration
  with all generators inside X under twists through all of the ambient
  generator set that it cannot reach using twists through X alone.

Otherwise the subgroup is conjugacy stable (under the standardisability,
ribbon and parabolic-closure hypotheses of the containing group's family).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable

from .classify import (
    GroupFamilyReport,
    TypedComponent,
    classify_group,
    is_spherical,
    is_twistable,
    recognize_component,
)
from .graph import CoxeterGraph, VertexSet, adjacent, components
from .twist import ConjugatorWord, TwistFactor, delta_conjugate_set

ComponentTuple = tuple[VertexSet, ...]


class SubsetSizeLimitError(RuntimeError):
    """The decision would enumerate too many subsets; raise the cap to force."""

    def __init__(self, size: int, cap: int):
        self.size = size
        self.cap = cap
        super().__init__(
            f"subset has {size} generators, above the cap of {cap}; "
            f"raise max_subset_size to proceed"
        )


@dataclass(frozen=True)
class Witness:
    """Machine-checkable evidence for a NotStable verdict."""

    kind: str  # "permutation" | "d2k_exception" | "d4_exception"
    subset: VertexSet
    tuple: ComponentTuple | None = None
    word: ConjugatorWord | None = None
    component: tuple[str, ...] | None = None
    leaf: str | None = None
    attach: str | None = None

    def to_json_dict(self) -> dict:
        out: dict = {"kind": self.kind, "subset": list(self.subset)}
        if self.tuple is not None:
            out["tuple"] = [list(part) for part in self.tuple]
        if self.word is not None:
            out["word"] = self.word.to_json_list()
        if self.component is not None:
            out["component"] = list(self.component)
        if self.leaf is not None:
            out["leaf"] = self.leaf
        if self.attach is not None:
            out["attach"] = self.attach
        return out


@dataclass(frozen=True)
class StabilityVerdict:
    status: str  # "stable" | "not_stable" | "inapplicable"
    witness: Witness | None = None
    reason: str | None = None


@dataclass(frozen=True)
class StabilityReport:
    """Verdict plus the semantics it carries and the group-family context."""

    verdict: str
    semantics: str  # "stability" | "quasi_stability"
    witness: Witness | None
    family: GroupFamilyReport
    flags: tuple[str, ...] = ()
    reason: str | None = None

    def to_json_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "semantics": self.semantics,
            "witness": None if self.witness is None else self.witness.to_json_dict(),
            "family": self.family.to_json_dict(),
            "flags": list(self.flags),
            "reason": self.reason,
        }


def initial_tuple(g: CoxeterGraph, X1: Iterable[str]) -> ComponentTuple:
    return tuple(components(g, X1))


def tuple_twist(
    g: CoxeterGraph, T: ComponentTuple, t: str
) -> tuple[ComponentTuple, TwistFactor] | None:
    """Twist the union of the tuple at t, tracking each position's image."""
    union = g.subset([v for part in T for v in part])
    if t not in adjacent(g, union):
        raise ValueError(f"{t!r} is not adjacent to {list(union)}")
    extended = g.subset(union + (t,))
    comp = next(c for c in components(g, extended) if t in c)
    tc = recognize_component(g, comp)
    if tc is None or not is_twistable(tc):
        return None
    moved = tuple(delta_conjugate_set(g, comp, part) for part in T)
    return moved, TwistFactor(comp, 1)


def tuple_orbit(
    g: CoxeterGraph,
    X1: Iterable[str],
    allowed: Callable[[str], bool] | None = None,
) -> dict[ComponentTuple, ConjugatorWord]:
    """BFS closure of the component tuple of X1 under tuple twists at
    vertices satisfying ``allowed`` (all vertices when None)."""
    start = initial_tuple(g, X1)
    table: dict[ComponentTuple, ConjugatorWord] = {start: ConjugatorWord()}
    queue = deque([start])
    while queue:
        T = queue.popleft()
        union = tuple(sorted(v for part in T for v in part))
        for t in adjacent(g, union):
            if allowed is not None and not allowed(t):
                continue
            step = tuple_twist(g, T, t)
            if step is None:
                continue
            moved, factor = step
            if moved in table:
                continue
            table[moved] = table[T].extended(factor)
            queue.append(moved)
    return table


def _merged_component_is_odd_d(
    g: CoxeterGraph, Y: VertexSet, t: str, anchor: str
) -> bool:
    """Whether the component of Y + t containing the anchor vertex has type
    D of odd rank."""
    extended = g.subset(Y + (t,))
    comp = next(c for c in components(g, extended) if anchor in c)
    tc = recognize_component(g, comp)
    return tc is not None and tc.type.family == "D" and tc.type.rank % 2 == 1


def _check_preconditions(g: CoxeterGraph, X: VertexSet, Y: VertexSet, Yp: TypedComponent) -> None:
    if not set(Y) <= set(X):
        raise ValueError("Y must be a subset of X")
    if Yp.vertices not in components(g, Y):
        raise ValueError("the typed component is not a component of Y")


def _find_d2k_obstruction(
    g: CoxeterGraph, X: VertexSet, Y: VertexSet, Yp: TypedComponent
) -> str | None:
    """Outside vertex at the tail of an even-D component (rank >= 6) whose
    merge is odd D, provided no inside vertex at the tail merges to odd D."""
    tail = Yp.positions[-1]
    inside = set(X)
    candidates = [t for t in adjacent(g, (tail,)) if t not in inside]
    found = None
    for t in candidates:
        if _merged_component_is_odd_d(g, Y, t, tail):
            found = t
            break
    if found is None:
        return None
    for t in adjacent(g, (tail,)):
        if t in inside and t not in Y and _merged_component_is_odd_d(g, Y, t, tail):
            return None
    return found


def check_d2k_exception(
    g: CoxeterGraph, X: Iterable[str], Y: Iterable[str], Yp: TypedComponent
) -> bool:
    """Obstruction test for a D_2k component, k > 2, of a subset Y of X."""
    Xs, Ys = g.subset(X), g.subset(Y)
    _check_preconditions(g, Xs, Ys, Yp)
    t = Yp.type
    if not (t.family == "D" and t.rank >= 6 and t.rank % 2 == 0):
        raise ValueError(f"component has type {t}, expected even D of rank >= 6")
    return _find_d2k_obstruction(g, Xs, Ys, Yp) is not None


def _find_d4_obstruction(
    g: CoxeterGraph, X: VertexSet, Y: VertexSet, Yp: TypedComponent
) -> tuple[str, str] | None:
    """(leaf, outside vertex) of an odd-D extension of a D_4 component that
    no inside extension repairs, neither at the same leaf nor at both other
    leaves."""
    p = Yp.positions
    leaves = (p[0], p[1], p[3])
    inside = set(X)

    def inside_odd_extension(leaf: str) -> bool:
        return any(
            t in inside and t not in Y and _merged_component_is_odd_d(g, Y, t, leaf)
            for t in adjacent(g, (leaf,))
        )

    for i, leaf in enumerate(leaves):
        attach = None
        for t in adjacent(g, (leaf,)):
            if t not in inside and _merged_component_is_odd_d(g, Y, t, leaf):
                attach = t
                break
        if attach is None:
            continue
        if inside_odd_extension(leaf):
            continue
        others = [leaves[j] for j in range(3) if j != i]
        if all(inside_odd_extension(o) for o in others):
            continue
        return leaf, attach
    return None


def check_d4_exception(
    g: CoxeterGraph, X: Iterable[str], Y: Iterable[str], Yp: TypedComponent
) -> bool:
    """Obstruction test for a D_4 component of a subset Y of X."""
    Xs, Ys = g.subset(X), g.subset(Y)
    _check_preconditions(g, Xs, Ys, Yp)
    t = Yp.type
    if not (t.family == "D" and t.rank == 4):
        raise ValueError(f"component has type {t}, expected D4")
    return _find_d4_obstruction(g, Xs, Ys, Yp) is not None


def _subsets_descending(X: VertexSet) -> Iterable[VertexSet]:
    for size in range(len(X), 0, -1):
        yield from combinations(X, size)


def decide_stability(
    g: CoxeterGraph, X: Iterable[str], max_subset_size: int = 16
) -> StabilityVerdict:
    """Decide conjugacy stability of the standard parabolic subgroup on X.

    Scans subsets of X largest first: even-D tail obstructions, then D_4
    leaf obstructions, then the component-tuple comparison of the closure
    under all twists against the closure under twists inside X.  The first
    obstruction found is returned as the witness; with no obstruction the
    subgroup is stable.
    """
    Xs = g.subset(X)
    if len(Xs) > max_subset_size:
        raise SubsetSizeLimitError(len(Xs), max_subset_size)

    typed: dict[VertexSet, list[TypedComponent | None]] = {}

    def typed_components(T: VertexSet) -> list[TypedComponent | None]:
        if T not in typed:
            typed[T] = [recognize_component(g, comp) for comp in components(g, T)]
        return typed[T]

    for T in _subsets_descending(Xs):
        for tc in typed_components(T):
            if tc is None:
                continue
            t = tc.type
            if t.family == "D" and t.rank >= 6 and t.rank % 2 == 0:
                attach = _find_d2k_obstruction(g, Xs, T, tc)
                if attach is not None:
                    return StabilityVerdict(
                        "not_stable",
                        Witness(
                            "d2k_exception",
                            subset=T,
                            component=tc.positions,
                            attach=attach,
                        ),
                    )

    for T in _subsets_descending(Xs):
        for tc in typed_components(T):
            if tc is None:
                continue
            if tc.type.family == "D" and tc.type.rank == 4:
                site = _find_d4_obstruction(g, Xs, T, tc)
                if site is not None:
                    leaf, attach = site
                    return StabilityVerdict(
                        "not_stable",
                        Witness(
                            "d4_exception",
                            subset=T,
                            component=tc.positions,
                            leaf=leaf,
                            attach=attach,
                        ),
                    )

    inside = set(Xs)
    for X1 in _subsets_descending(Xs):
        internal = tuple_orbit(g, X1, lambda t: t in inside)
        external = tuple_orbit(g, X1)
        for T, word in external.items():
            if T in internal:
                continue
            if all(v in inside for part in T for v in part):
                return StabilityVerdict(
                    "not_stable",
                    Witness("permutation", subset=X1, tuple=T, word=word),
                )
    return StabilityVerdict("stable")


def decide_with_applicability(
    g: CoxeterGraph,
    X: Iterable[str],
    mode: str = "auto",
    max_subset_size: int = 16,
) -> StabilityReport:
    """Classify the group, then decide stability with the right semantics.

    Groups in a family with full hypotheses get a stability verdict; FC-type
    groups outside those families get quasi-stability semantics, upgraded to
    full stability when X itself is spherical; unknown families yield an
    inapplicable report unless mode is "force".
    """
    if mode not in ("auto", "force"):
        raise ValueError(f"mode must be 'auto' or 'force', got {mode!r}")
    Xs = g.subset(X)
    family = classify_group(g)
    flags: tuple[str, ...] = ()
    if family.applicability == "FullStability":
        semantics = "stability"
    elif family.applicability == "QuasiStability":
        semantics = "stability" if is_spherical(g, Xs) else "quasi_stability"
    else:
        if mode != "force":
            return StabilityReport(
                verdict="inapplicable",
                semantics="stability",
                witness=None,
                family=family,
                reason=family.justification,
            )
        flags = ("hypotheses_unverified",)
        semantics = "stability"
    verdict = decide_stability(g, Xs, max_subset_size=max_subset_size)
    return StabilityReport(
        verdict=verdict.status,
        semantics=semantics,
        witness=verdict.witness,
        family=family,
        flags=flags,
    )
