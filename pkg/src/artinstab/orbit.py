"""Breadth-first search over standard parabolic subgroups under twists.

Two standard parabolic subgroups are conjugate exactly when one lies in the
twist closure of the other; the search records, for every reachable subset,
a word of Garside factors witnessing the conjugation.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from .graph import CoxeterGraph, VertexSet, adjacent
from .twist import ConjugatorWord, elementary_twist


@dataclass(frozen=True)
class OrbitTable:
    """Insertion-ordered map from reachable subsets to witness words.

    The first entry is always the start subset with the empty word, and
    applying any entry's word to the start subset yields the entry's key.
    """

    entries: tuple[tuple[VertexSet, ConjugatorWord], ...]

    def subsets(self) -> tuple[VertexSet, ...]:
        return tuple(key for key, _ in self.entries)

    def word_for(self, Y: VertexSet) -> ConjugatorWord | None:
        for key, word in self.entries:
            if key == Y:
                return word
        return None

    def __contains__(self, Y: VertexSet) -> bool:
        return any(key == Y for key, _ in self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[tuple[VertexSet, ConjugatorWord]]:
        return iter(self.entries)

    def to_json_list(self) -> list[dict]:
        return [
            {"subset": list(key), "word": word.to_json_list()}
            for key, word in self.entries
        ]


def _search(
    g: CoxeterGraph, X: VertexSet, target: VertexSet | None
) -> tuple[dict[VertexSet, ConjugatorWord], ConjugatorWord | None]:
    table: dict[VertexSet, ConjugatorWord] = {X: ConjugatorWord()}
    queue: deque[VertexSet] = deque([X])
    while queue:
        Y = queue.popleft()
        for t in adjacent(g, Y):
            step = elementary_twist(g, Y, t)
            if step is None:
                continue
            Z, factor = step
            if Z in table:
                continue
            word = table[Y].extended(factor)
            table[Z] = word
            if target is not None and Z == target:
                return table, word
            queue.append(Z)
    return table, None


def orbit(g: CoxeterGraph, X: Iterable[str]) -> OrbitTable:
    """The full twist closure of X, in canonical BFS order."""
    start = g.subset(X)
    table, _ = _search(g, start, None)
    return OrbitTable(tuple(table.items()))


def conjugator(
    g: CoxeterGraph, X: Iterable[str], Xp: Iterable[str]
) -> ConjugatorWord | None:
    """A word conjugating the set X to Xp, or None when the two standard
    parabolic subgroups are not conjugate.  Stops as soon as Xp is reached."""
    Xs = g.subset(X)
    Xps = g.subset(Xp)
    if len(Xs) != len(Xps):
        return None
    if Xs == Xps:
        return ConjugatorWord()
    _, word = _search(g, Xs, Xps)
    return word
