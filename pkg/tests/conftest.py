from __future__ import annotations

import random

from artinstab import INFINITY, CoxeterGraph

LABEL_CHOICES = (2, 3, 4, 5, INFINITY)

# weighted toward commuting pairs and simply laced edges so that random
# graphs frequently contain twistable components and nontrivial orbits
LABEL_WEIGHTS = (2, 2, 2, 3, 3, 3, 3, 4, 5, INFINITY)


def build_graph(names: str | list[str], *relations) -> CoxeterGraph:
    """Small helper: build_graph("abc", ("a","b",3), ...)."""
    return CoxeterGraph.build(list(names), list(relations))


def random_graph(rng: random.Random, max_vertices: int = 6) -> CoxeterGraph:
    n = rng.randint(1, max_vertices)
    names = list("abcdef"[:n])
    rels = []
    for i in range(n):
        for j in range(i + 1, n):
            m = rng.choice(LABEL_WEIGHTS)
            if m != 2:
                rels.append((names[i], names[j], m))
    return CoxeterGraph.build(names, rels)


def random_subset(rng: random.Random, g: CoxeterGraph, nonempty: bool = True):
    gens = list(g.generators)
    k = rng.randint(1 if nonempty else 0, len(gens))
    return tuple(sorted(rng.sample(gens, k)))


def rename_graph(g: CoxeterGraph, mapping: dict[str, str]) -> CoxeterGraph:
    rels = []
    for (s, t), m in g.labels.items():
        if m != 2:
            rels.append((mapping[s], mapping[t], m))
    return CoxeterGraph.build([mapping[v] for v in g.generators], rels)
