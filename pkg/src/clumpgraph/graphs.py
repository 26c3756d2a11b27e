"""Vertex-level graphs: BFS layering, proper colorings, saturation.

A layered colored graph is a connected simple graph with a distinguished
root, per-vertex BFS distance from that root, and a proper coloring with
at most k colors.  Saturation adds every edge between differently colored
vertices in the same or consecutive layers; it keeps every BFS distance
from the root intact, so the layering survives.  End-layer normalization
rewrites the last layer to use a single color while preserving order,
diameter and minimum degree.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple


class GraphError(ValueError):
    """Malformed or out-of-contract graph input."""


class NotConnectedError(GraphError):
    """Operation requires a connected graph."""


class GraphFormatError(GraphError):
    """Unparseable graph text."""


def _edge(u: int, v: int) -> tuple[int, int]:
    if u == v:
        raise GraphError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph on vertices 0..n-1."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n < 1:
            raise GraphError("vertex count must be >= 1")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise GraphError(f"edge ({u},{v}) out of range or unordered")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        return cls(n, frozenset(_edge(u, v) for u, v in edges))

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(s) for s in adj)

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        """Neighborhoods as bitmasks; handy for n <= ~60."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def min_degree(self) -> int:
        return min(self.degree(v) for v in range(self.n))

    def has_edge(self, u: int, v: int) -> bool:
        return _edge(u, v) in self.edges

    def bfs_distances(self, root: int) -> list[int]:
        """Distances from root; -1 marks unreachable vertices."""
        dist = [-1] * self.n
        dist[root] = 0
        queue = deque([root])
        adj = self.adjacency
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def is_connected(self) -> bool:
        return all(d >= 0 for d in self.bfs_distances(0))


def diameter(g: SimpleGraph) -> int:
    """Exact diameter by all-pairs BFS; raises on disconnected input."""
    best = 0
    for v in range(g.n):
        dist = g.bfs_distances(v)
        ecc = max(dist)
        if min(dist) < 0:
            raise NotConnectedError("diameter undefined: graph is not connected")
        best = max(best, ecc)
    return best


class Layering(NamedTuple):
    """Root of maximum eccentricity with its BFS layer map."""

    root: int
    layer: tuple[int, ...]
    depth: int


def layer_and_root(g: SimpleGraph) -> Layering:
    """Pick the smallest-id vertex of maximum eccentricity and layer from it.

    The returned depth equals the diameter of the graph.
    """
    best_root, best_ecc, best_dist = -1, -1, None
    for v in range(g.n):
        dist = g.bfs_distances(v)
        if min(dist) < 0:
            raise NotConnectedError("layering undefined: graph is not connected")
        ecc = max(dist)
        if ecc > best_ecc:
            best_root, best_ecc, best_dist = v, ecc, dist
    return Layering(best_root, tuple(best_dist), best_ecc)


def proper_coloring(g: SimpleGraph, k: int) -> tuple[int, ...] | None:
    """Deterministic backtracking coloring with at most k colors.

    Vertices are processed in id order and colors tried ascending, so the
    result is the lexicographically smallest proper coloring (colors of a
    fresh vertex never exceed 1 + max color used so far; the lex-smallest
    coloring has the same property, so the cap loses nothing).
    """
    if k < 1:
        raise GraphError("color count must be >= 1")
    n = g.n
    adj = g.adjacency
    colors = [-1] * n

    def assign(v: int) -> bool:
        if v == n:
            return True
        used = {colors[w] for w in adj[v] if colors[w] >= 0}
        cap = min(k, max(colors[:v], default=-1) + 2)
        for c in range(cap):
            if c not in used:
                colors[v] = c
                if assign(v + 1):
                    return True
                colors[v] = -1
        return False

    if assign(0):
        return tuple(colors)
    return None


def chromatic_number(g: SimpleGraph, kmax: int) -> int | None:
    """Least k <= kmax admitting a proper coloring, or None beyond kmax."""
    for k in range(1, kmax + 1):
        if proper_coloring(g, k) is not None:
            return k
    return None


@dataclass(frozen=True)
class ColoredLayeredGraph:
    """Connected rooted graph with BFS layers and a proper <=k coloring.

    Layer indices must equal BFS distances from the root, every edge must
    stay within consecutive layers, and the coloring must be proper.
    """

    graph: SimpleGraph
    root: int
    layer: tuple[int, ...]
    color: tuple[int, ...]
    k: int

    def __post_init__(self):
        g = self.graph
        if not (0 <= self.root < g.n):
            raise GraphError("root out of range")
        if len(self.layer) != g.n or len(self.color) != g.n:
            raise GraphError("layer/color maps must cover every vertex")
        if self.k < 1 or any(not (0 <= c < self.k) for c in self.color):
            raise GraphError("colors out of range")
        dist = g.bfs_distances(self.root)
        if min(dist) < 0:
            raise NotConnectedError("layered graph must be connected")
        if list(self.layer) != dist:
            raise GraphError("layer map does not match BFS distances from root")
        for u, v in g.edges:
            if self.color[u] == self.color[v]:
                raise GraphError(f"coloring not proper on edge ({u},{v})")
            if abs(self.layer[u] - self.layer[v]) > 1:
                raise GraphError(f"edge ({u},{v}) spans more than one layer")

    @property
    def depth(self) -> int:
        """Largest layer index; equals the root's eccentricity."""
        return max(self.layer)

    @cached_property
    def layers(self) -> tuple[tuple[int, ...], ...]:
        """Vertices per layer, each in ascending id order."""
        buckets: list[list[int]] = [[] for _ in range(self.depth + 1)]
        for v in range(self.graph.n):
            buckets[self.layer[v]].append(v)
        return tuple(tuple(b) for b in buckets)

    def layer_colors(self, i: int) -> frozenset[int]:
        return frozenset(self.color[v] for v in self.layers[i])


def layered_colored(g: SimpleGraph, k: int) -> ColoredLayeredGraph:
    """Layer from a max-eccentricity root and attach the default coloring."""
    lay = layer_and_root(g)
    colors = proper_coloring(g, k)
    if colors is None:
        raise GraphError(f"graph admits no proper {k}-coloring")
    return ColoredLayeredGraph(g, lay.root, lay.layer, colors, k)


def saturate(g: ColoredLayeredGraph) -> ColoredLayeredGraph:
    """Add all edges between differently colored vertices in the same or
    consecutive layers.  BFS distances from the root are unchanged (new
    edges never join layers more than one apart); asserted by re-layering.
    """
    edges = set(g.graph.edges)
    by_layer = g.layers
    depth = g.depth
    for i in range(depth + 1):
        group = by_layer[i] + (by_layer[i + 1] if i < depth else ())
        for a in range(len(group)):
            u = group[a]
            for b in range(a + 1, len(group)):
                v = group[b]
                if g.color[u] != g.color[v]:
                    edges.add(_edge(u, v))
    out = ColoredLayeredGraph(
        SimpleGraph(g.graph.n, frozenset(edges)), g.root, g.layer, g.color, g.k
    )
    assert out.depth == g.depth  # root eccentricity preserved
    return out


def is_saturated(g: ColoredLayeredGraph) -> bool:
    by_layer = g.layers
    for i in range(g.depth + 1):
        group = by_layer[i] + (by_layer[i + 1] if i < g.depth else ())
        for a in range(len(group)):
            for b in range(a + 1, len(group)):
                u, v = group[a], group[b]
                if g.color[u] != g.color[v] and not g.graph.has_edge(u, v):
                    return False
    return True


def normalize_end_layer(g: ColoredLayeredGraph) -> ColoredLayeredGraph:
    """Rewrite the last layer to a single color.

    Keeps one color A of the last layer in place (preferring, by lowest
    index, a color that also occurs in layer depth-2) and moves every
    other last-layer vertex into layer depth-1, connecting it to all
    differently colored vertices of layer depth-2.  Order, depth, the
    coloring, and properness are preserved; no degree decreases.
    """
    depth = g.depth
    if depth < 2:
        raise GraphError("end-layer normalization requires depth >= 2")
    last = g.layers[depth]
    last_colors = sorted({g.color[v] for v in last})
    if len(last_colors) == 1:
        return g

    anchor_colors = {g.color[v] for v in g.layers[depth - 2]}
    shared = [c for c in last_colors if c in anchor_colors]
    keep = shared[0] if shared else last_colors[0]

    moved = [v for v in last if g.color[v] != keep]
    layer = list(g.layer)
    edges = set(g.graph.edges)
    for v in moved:
        layer[v] = depth - 1
        attached = 0
        for w in g.layers[depth - 2]:
            if g.color[w] != g.color[v]:
                edges.add(_edge(v, w))
                attached += 1
        assert attached > 0, "moved vertex must reach layer depth-2"

    out = ColoredLayeredGraph(
        SimpleGraph(g.graph.n, frozenset(edges)), g.root, tuple(layer), g.color, g.k
    )
    assert out.depth == depth
    assert len({out.color[v] for v in out.layers[depth]}) == 1
    assert out.layers[: depth - 1] == g.layers[: depth - 1]
    assert out.graph.min_degree() >= g.graph.min_degree()
    return out


# --- text format ----------------------------------------------------------
#
# Plain graph:   first line "n m", then m lines "u v" (0-based).
# Layered form:  additionally "root r" and one "color v c" line per vertex.


def parse_graph(text: str) -> SimpleGraph:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphFormatError("empty graph text")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphFormatError("first line must be 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise GraphFormatError("first line must be 'n m'") from exc
    if len(lines) - 1 < m:
        raise GraphFormatError(f"expected {m} edge lines")
    edges = []
    for ln in lines[1 : m + 1]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"bad edge line: {ln!r}")
        u, v = int(parts[0]), int(parts[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex id out of range on line {ln!r}")
        if u == v:
            raise GraphFormatError(f"self-loop on line {ln!r}")
        edges.append((u, v))
    try:
        return SimpleGraph.from_edges(n, edges)
    except GraphError as exc:
        raise GraphFormatError(str(exc)) from exc


def parse_colored_graph(text: str, k: int | None = None) -> ColoredLayeredGraph:
    """Parse the layered extension; layers are recomputed by BFS from the root."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    g = parse_graph(text)
    # edge block first, then color/root lines in any order
    m = int(lines[0].split()[1])
    root = None
    colors: dict[int, int] = {}
    for ln in lines[m + 1 :]:
        parts = ln.split()
        if parts[0] == "root" and len(parts) == 2:
            if root is not None:
                raise GraphFormatError("duplicate root line")
            root = int(parts[1])
        elif parts[0] == "color" and len(parts) == 3:
            v, c = int(parts[1]), int(parts[2])
            if not (0 <= v < g.n):
                raise GraphFormatError(f"color line for unknown vertex {v}")
            if c < 0:
                raise GraphFormatError(f"negative color on line {ln!r}")
            colors[v] = c
        else:
            raise GraphFormatError(f"unrecognized line: {ln!r}")
    if root is None:
        raise GraphFormatError("missing root line")
    if not (0 <= root < g.n):
        raise GraphFormatError("root out of range")
    if set(colors) != set(range(g.n)):
        raise GraphFormatError("every vertex needs exactly one color line")
    color = tuple(colors[v] for v in range(g.n))
    kk = k if k is not None else max(color) + 1
    dist = g.bfs_distances(root)
    if min(dist) < 0:
        raise NotConnectedError("layered graph must be connected")
    return ColoredLayeredGraph(g, root, tuple(dist), color, kk)


def format_graph(g: SimpleGraph) -> str:
    lines = [f"{g.n} {len(g.edges)}"]
    lines += [f"{u} {v}" for u, v in sorted(g.edges)]
    return "\n".join(lines) + "\n"


def format_colored_graph(g: ColoredLayeredGraph) -> str:
    lines = [format_graph(g.graph).rstrip("\n"), f"root {g.root}"]
    lines += [f"color {v} {g.color[v]}" for v in range(g.graph.n)]
    return "\n".join(lines) + "\n"
