import itertools
import random

import pytest

from clumpgraph.clumps import ClumpGraph, parse_clump_layers, validate_strongly_canonical
from clumpgraph.graphs import ColoredLayeredGraph, SimpleGraph, layer_and_root, proper_coloring


def clump(k: int, spec: str, weights=None) -> ClumpGraph:
    return ClumpGraph(k, parse_clump_layers(spec, k), weights)


def random_weighted_strongly_canonical(rng: random.Random, k: int, depth: int) -> ClumpGraph:
    """Random valid layer walk with random weights, unit weight at the root."""
    while True:
        layers = [frozenset({0})]
        ok = True
        for pos in range(1, depth + 1):
            prev = layers[-1]
            cands = []
            for r in range(1, k + 1):
                for sub in itertools.combinations(range(k), r):
                    s = frozenset(sub)
                    if len(prev) == 1 and len(s) > k - 1:
                        continue
                    if len(prev | s) != min(k, len(prev) + len(s)):
                        continue
                    if len(prev) == k and len(s) < 2:
                        continue
                    if len(s) == k and pos < 2:
                        continue
                    if pos == depth and len(s) != 1:
                        continue
                    cands.append(s)
            if not cands:
                ok = False
                break
            layers.append(rng.choice(cands))
        if not ok:
            continue
        h = ClumpGraph(k, tuple(layers))
        if validate_strongly_canonical(h).verdict:
            weights = tuple(
                tuple(1 if i == 0 else rng.randint(1, 4) for _ in layer)
                for i, layer in enumerate(h.sorted_layers)
            )
            return ClumpGraph(k, h.layers, weights)


def petersen() -> SimpleGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return SimpleGraph.from_edges(10, outer + inner + spokes)


def random_connected_graph(rng: random.Random, n: int, extra_edge_p: float = 0.3) -> SimpleGraph:
    """Random tree plus extra edges; always connected."""
    edges = set()
    for v in range(1, n):
        edges.add((rng.randrange(v), v))
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < extra_edge_p:
                edges.add((u, v))
    return SimpleGraph.from_edges(n, edges)


def random_layered_colored(rng: random.Random, n: int) -> ColoredLayeredGraph:
    """Layer a random connected graph from a far root; color with the
    deterministic backtracker (at most n colors, so it always succeeds)."""
    g = random_connected_graph(rng, n)
    lay = layer_and_root(g)
    colors = proper_coloring(g, n)
    return ColoredLayeredGraph(g, lay.root, lay.layer, colors, n)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240817)
