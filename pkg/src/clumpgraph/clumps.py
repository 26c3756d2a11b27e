"""Clump graphs: layered quotients of colored graphs by (layer, color).

A clump graph is a sequence of nonempty color subsets C_0..C_D of
{0..k-1}, one per layer.  Adjacency is derived, never stored: clumps
(i, a) and (j, b) are adjacent iff |i - j| <= 1 and a != b.  This is the
saturated form, so a clump graph built from a saturated vertex graph and
the blow-up going the other way are mutually inverse.

Validators check the canonical-structure conditions (what layer sizes and
color overlaps can occur) and the strong form (singleton first and last
layers, depth >= 2, exact cross-layer matchings).  The enumerator streams
every strongly canonical clump graph once per color-permutation class.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator

from .graphs import ColoredLayeredGraph, SimpleGraph, diameter, is_saturated


class ClumpError(ValueError):
    """Malformed clump graph or out-of-contract input."""


@dataclass(frozen=True)
class Violation:
    condition: str
    layer: int
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def verdict(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.verdict


@dataclass(frozen=True)
class ClumpGraph:
    """Layered color-set sequence with optional positive integer weights.

    ``weights[i]`` aligns with ``sorted(layers[i])``.
    """

    k: int
    layers: tuple[frozenset[int], ...]
    weights: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self):
        if self.k < 2:
            raise ClumpError("need at least two colors")
        if not self.layers:
            raise ClumpError("need at least one layer")
        for i, layer in enumerate(self.layers):
            if not layer:
                raise ClumpError(f"layer {i} is empty")
            if min(layer) < 0 or max(layer) >= self.k:
                raise ClumpError(f"layer {i} uses colors outside 0..{self.k - 1}")
        if self.weights is not None:
            if len(self.weights) != len(self.layers):
                raise ClumpError("weights must align with layers")
            for i, (ws, layer) in enumerate(zip(self.weights, self.layers)):
                if len(ws) != len(layer):
                    raise ClumpError(f"weights of layer {i} misaligned")
                if any(w < 1 for w in ws):
                    raise ClumpError(f"layer {i} has a non-positive weight")

    @property
    def depth(self) -> int:
        return len(self.layers) - 1

    @cached_property
    def sorted_layers(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(sorted(layer)) for layer in self.layers)

    def clumps(self) -> Iterator[tuple[int, int]]:
        for i, layer in enumerate(self.sorted_layers):
            for c in layer:
                yield (i, c)

    @property
    def n_clumps(self) -> int:
        return sum(len(layer) for layer in self.layers)

    def weight(self, i: int, c: int) -> int:
        if self.weights is None:
            raise ClumpError("clump graph carries no weights")
        return self.weights[i][self.sorted_layers[i].index(c)]

    def neighbors(self, i: int, c: int) -> Iterator[tuple[int, int]]:
        for j in (i - 1, i, i + 1):
            if 0 <= j <= self.depth:
                for b in self.sorted_layers[j]:
                    if b != c:
                        yield (j, b)

    def with_weights(self, weights: dict[tuple[int, int], int]) -> "ClumpGraph":
        aligned = tuple(
            tuple(weights[(i, c)] for c in layer)
            for i, layer in enumerate(self.sorted_layers)
        )
        return ClumpGraph(self.k, self.layers, aligned)

    def unweighted(self) -> "ClumpGraph":
        return ClumpGraph(self.k, self.layers) if self.weights is not None else self


# --- construction and blow-up ---------------------------------------------


def build_clump_graph(g: ColoredLayeredGraph) -> ClumpGraph:
    """Quotient a saturated layered colored graph by (layer, color)."""
    if not is_saturated(g):
        raise ClumpError("unsaturated input: saturate the graph first")
    depth = g.depth
    counts: list[dict[int, int]] = [{} for _ in range(depth + 1)]
    for v in range(g.graph.n):
        layer = counts[g.layer[v]]
        layer[g.color[v]] = layer.get(g.color[v], 0) + 1
    # saturation plus the layered-graph invariants force the quotient edges
    # to coincide with derived adjacency; cheap sanity pass over the edges
    for u, v in g.graph.edges:
        assert abs(g.layer[u] - g.layer[v]) <= 1 and g.color[u] != g.color[v]
    layers = tuple(frozenset(c) for c in counts)
    weights = tuple(tuple(counts[i][c] for c in sorted(counts[i])) for i in range(depth + 1))
    return ClumpGraph(g.k, layers, weights)


def blow_up(h: ClumpGraph) -> ColoredLayeredGraph:
    """Replace each clump by an independent set of its weight's size.

    Requires weights and a single root vertex (layer 0 must be one clump
    of weight 1).  The result is the saturated layered colored graph whose
    clump graph is ``h`` again; for depth >= 2 its diameter equals the
    depth, which is asserted.
    """
    if h.weights is None:
        raise ClumpError("blow-up needs clump weights")
    if len(h.layers[0]) != 1 or h.weights[0][0] != 1:
        raise ClumpError("blow-up needs layer 0 to be a single clump of weight 1")
    ids: dict[tuple[int, int], range] = {}
    layer_map: list[int] = []
    color_map: list[int] = []
    n = 0
    for i, layer in enumerate(h.sorted_layers):
        for idx, c in enumerate(layer):
            w = h.weights[i][idx]
            ids[(i, c)] = range(n, n + w)
            layer_map += [i] * w
            color_map += [c] * w
            n += w
    edges = set()
    for i, c in ids:
        for j, b in h.neighbors(i, c):
            if (j, b) > (i, c):
                for u in ids[(i, c)]:
                    for v in ids[(j, b)]:
                        edges.add((u, v) if u < v else (v, u))
    out = ColoredLayeredGraph(
        SimpleGraph(n, frozenset(edges)),
        root=0,
        layer=tuple(layer_map),
        color=tuple(color_map),
        k=h.k,
    )
    assert out.graph.n == sum(sum(ws) for ws in h.weights)
    if h.depth >= 2:
        assert diameter(out.graph) == h.depth
    return out


# --- validators -------------------------------------------------------------


def validate_canonical(h: ClumpGraph) -> ValidationReport:
    """Check the canonical-structure conditions.

    Per consecutive pair (i, i+1): (a) a single-color layer is followed by
    at most k-1 colors; (b) the union of the two layers' color sets has
    exactly min(k, |C_i| + |C_{i+1}|) colors; (c) a layer using all k
    colors sits at index >= 2 and is followed by at least 2 colors.  With
    weights: (d) a repeated color (clump weight > 1) needs index > 0 and
    |C_i| + max(|C_{i-1}|, |C_{i+1}|) >= k.
    """
    k, layers = h.k, h.layers
    depth = h.depth
    out: list[Violation] = []
    for i in range(depth):
        a, b = layers[i], layers[i + 1]
        if len(a) == 1 and len(b) > k - 1:
            out.append(
                Violation("after-singleton", i, f"|C_{i}|=1 but |C_{i + 1}|={len(b)} > k-1")
            )
        if len(a | b) != min(k, len(a) + len(b)):
            out.append(
                Violation(
                    "layer-union-size",
                    i,
                    f"|C_{i} u C_{i + 1}|={len(a | b)}, expected "
                    f"min(k, {len(a)}+{len(b)})={min(k, len(a) + len(b))}",
                )
            )
        if len(a) == k and (i < 2 or len(b) < 2):
            out.append(
                Violation("full-layer-position", i, f"all {k} colors at layer {i}")
            )
    if h.weights is not None:
        for i in range(depth + 1):
            heavy = [c for c, w in zip(h.sorted_layers[i], h.weights[i]) if w > 1]
            if not heavy:
                continue
            if i == 0:
                out.append(
                    Violation("heavy-clump-support", 0, "repeated color in layer 0")
                )
                continue
            prev = len(layers[i - 1]) if i > 0 else 0
            nxt = len(layers[i + 1]) if i < depth else 0
            if len(layers[i]) + max(prev, nxt) < k:
                out.append(
                    Violation(
                        "heavy-clump-support",
                        i,
                        f"colors {heavy} repeated but |C_{i}|+max"
                        f"({prev},{nxt}) < k",
                    )
                )
    return ValidationReport(tuple(out))


def validate_strongly_canonical(h: ClumpGraph) -> ValidationReport:
    """Canonical checks plus singleton end layers, depth >= 2, and the
    exact cross-layer matching count: |C_{i-1} n C_i| must equal
    max(0, |C_{i-1}| + |C_i| - k) for every interface."""
    out = list(validate_canonical(h).violations)
    if h.depth < 2:
        out.append(Violation("min-depth", h.depth, f"depth {h.depth} < 2"))
    if len(h.layers[0]) != 1:
        out.append(Violation("end-layers-mono", 0, f"|C_0|={len(h.layers[0])} != 1"))
    if len(h.layers[-1]) != 1:
        out.append(
            Violation("end-layers-mono", h.depth, f"|C_D|={len(h.layers[-1])} != 1")
        )
    for i in range(1, h.depth + 1):
        a, b = h.layers[i - 1], h.layers[i]
        expect = max(0, len(a) + len(b) - h.k)
        if len(a & b) != expect:
            out.append(
                Violation(
                    "cross-layer-matching",
                    i,
                    f"{len(a & b)} shared colors between layers {i - 1},{i}; "
                    f"expected {expect}",
                )
            )
    return ValidationReport(tuple(out))


# --- enumeration ------------------------------------------------------------


@lru_cache(maxsize=None)
def _tables(k: int):
    """Lex-ordered subsets, pairwise-allowed transitions, permutation action."""
    subsets = sorted(
        tuple(c)
        for r in range(1, k + 1)
        for c in itertools.combinations(range(k), r)
    )
    index = {s: i for i, s in enumerate(subsets)}
    sets = [frozenset(s) for s in subsets]
    full = index[tuple(range(k))]

    def allowed(a: frozenset, b: frozenset) -> bool:
        if len(a) == 1 and len(b) > k - 1:
            return False
        if len(a | b) != min(k, len(a) + len(b)):
            return False
        if len(a) == k and len(b) < 2:
            return False
        return True

    trans = [
        [j for j, b in enumerate(sets) if allowed(a, b)] for a in sets
    ]
    perms = list(itertools.permutations(range(k)))
    act = [
        [index[tuple(sorted(p[c] for c in s))] for s in subsets] for p in perms
    ]
    return subsets, sets, index, full, trans, act


def enumerate_strongly_canonical(k: int, depth: int) -> Iterator[ClumpGraph]:
    """Stream one representative per color-permutation class.

    Representatives are the lexicographically least layer encodings under
    all k! color permutations, emitted in ascending encoding order.  A
    prefix beaten by some permutation can never lead to a canonical
    sequence, so the search prunes on prefixes and stays linear in the
    number of graphs emitted.

    The stream ranges over every layer sequence meeting the structural
    conditions, whether or not some vertex graph realizes it; downstream
    verification over this superset is strictly stronger than over the
    realizable family alone.
    """
    if k < 3:
        raise ClumpError("strongly canonical clump graphs need k >= 3")
    if depth < 2:
        raise ClumpError("strongly canonical clump graphs need depth >= 2")
    if k > 8:
        raise ClumpError("color-permutation canonicalization capped at k = 8")
    subsets, sets, index, full, trans, act = _tables(k)
    start = index[(0,)]
    live0 = [p for p in range(len(act)) if act[p][start] == start]

    seq = [start]

    def emit() -> ClumpGraph:
        return ClumpGraph(k, tuple(sets[i] for i in seq))

    def walk(pos: int, live: list[int]) -> Iterator[ClumpGraph]:
        a = seq[-1]
        last = pos == depth
        for b in trans[a]:
            if b == full and pos < 2:
                continue
            if last and len(subsets[b]) != 1:
                continue
            new_live = []
            beaten = False
            for p in live:
                pb = act[p][b]
                if pb < b:
                    beaten = True
                    break
                if pb == b:
                    new_live.append(p)
            if beaten:
                continue
            seq.append(b)
            if last:
                yield emit()
            else:
                yield from walk(pos + 1, new_live)
            seq.pop()

    yield from walk(1, live0)


def _partitions(n: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(n, 0, -1):
        for rest in _partitions(n - first):
            if not rest or rest[0] <= first:
                yield (first,) + rest


def count_strongly_canonical(k: int, depth: int) -> tuple[int, int]:
    """Exact (sequence count, color-class count) without enumeration.

    Sequences are counted by a transfer-matrix pass; classes by averaging,
    over one permutation per cycle type, the number of sequences all of
    whose layers that permutation fixes setwise (weighted by cycle-type
    size).  Agrees with the enumerator and stays cheap at depths where
    enumeration is hopeless.
    """
    if k < 3 or depth < 2:
        raise ClumpError("counting needs k >= 3 and depth >= 2")
    if k > 8:
        raise ClumpError("color-permutation counting capped at k = 8")
    subsets, sets, index, full, trans, act = _tables(k)

    def paths(allowed_mask: list[bool]) -> int:
        cur = {
            i: 1
            for i, s in enumerate(subsets)
            if len(s) == 1 and allowed_mask[i]
        }
        for pos in range(1, depth + 1):
            nxt: dict[int, int] = {}
            for a, cnt in cur.items():
                for b in trans[a]:
                    if not allowed_mask[b]:
                        continue
                    if b == full and pos < 2:
                        continue
                    if pos == depth and len(subsets[b]) != 1:
                        continue
                    nxt[b] = nxt.get(b, 0) + cnt
            cur = nxt
        return sum(cur.values())

    n_seq = paths([True] * len(subsets))

    total = 0
    for part in _partitions(k):
        perm = []
        base = 0
        for cyc in part:
            perm += [base + (i + 1) % cyc for i in range(cyc)]
            base += cyc
        fixed = [
            tuple(sorted(perm[c] for c in s)) == s for s in subsets
        ]
        cls_size = math.factorial(k)
        for cyc in part:
            cls_size //= cyc
        for mult in (part.count(v) for v in set(part)):
            cls_size //= math.factorial(mult)
        total += cls_size * paths(fixed)
    return n_seq, total // math.factorial(k)


# --- text format and DOT ----------------------------------------------------
#
# Header "k=<k> D=<D>", then a layers line like "0|1,2|0" and an optional
# weights line "w=1|2,1|1" aligned with it.


def parse_clump_layers(spec: str, k: int) -> tuple[frozenset[int], ...]:
    layers = []
    for i, part in enumerate(spec.strip().split("|")):
        try:
            colors = [int(x) for x in part.split(",") if x != ""]
        except ValueError as exc:
            raise ClumpError(f"bad layer spec {part!r}") from exc
        if not colors:
            raise ClumpError(f"layer {i} is empty in {spec!r}")
        if len(set(colors)) != len(colors):
            raise ClumpError(f"layer {i} repeats a color")
        if min(colors) < 0 or max(colors) >= k:
            raise ClumpError(f"layer {i} uses colors outside 0..{k - 1}")
        layers.append(frozenset(colors))
    return tuple(layers)


def parse_weight_line(spec: str, layers: tuple[frozenset[int], ...]) -> tuple[tuple[int, ...], ...]:
    body = spec.strip()
    if body.startswith("w="):
        body = body[2:]
    parts = body.split("|")
    if len(parts) != len(layers):
        raise ClumpError("weights line does not align with layers")
    out = []
    for i, part in enumerate(parts):
        ws = [int(x) for x in part.split(",") if x != ""]
        if len(ws) != len(layers[i]):
            raise ClumpError(f"layer {i} weights misaligned")
        out.append(tuple(ws))
    return tuple(out)


def parse_clumps(text: str) -> ClumpGraph:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("k="):
        raise ClumpError("clump text must start with 'k=<k> D=<D>'")
    head = dict(tok.split("=", 1) for tok in lines[0].split())
    try:
        k, depth = int(head["k"]), int(head["D"])
    except (KeyError, ValueError) as exc:
        raise ClumpError("clump header must carry k= and D=") from exc
    if len(lines) < 2:
        raise ClumpError("missing layers line")
    layers = parse_clump_layers(lines[1], k)
    if len(layers) != depth + 1:
        raise ClumpError(f"header says D={depth} but {len(layers) - 1} given")
    weights = None
    if len(lines) > 2:
        if not lines[2].startswith("w="):
            raise ClumpError("third line must be a weights line 'w=...'")
        weights = parse_weight_line(lines[2], layers)
    return ClumpGraph(k, layers, weights)


def format_clumps(h: ClumpGraph) -> str:
    lines = [f"k={h.k} D={h.depth}"]
    lines.append("|".join(",".join(str(c) for c in layer) for layer in h.sorted_layers))
    if h.weights is not None:
        lines.append("w=" + "|".join(",".join(str(w) for w in ws) for ws in h.weights))
    return "\n".join(lines) + "\n"


def to_dot(h: ClumpGraph, node_labels: dict[tuple[int, int], str] | None = None) -> str:
    """GraphViz rendering of the derived adjacency, one rank per layer."""
    lines = ["graph clumps {", "  rankdir=LR;"]
    for i, layer in enumerate(h.sorted_layers):
        lines.append(f"  subgraph cluster_{i} {{ label=\"layer {i}\";")
        for c in layer:
            label = f"{i}:{c}"
            if h.weights is not None:
                label += f" w={h.weight(i, c)}"
            if node_labels and (i, c) in node_labels:
                label += f"\\n{node_labels[(i, c)]}"
            lines.append(f'    "c{i}_{c}" [label="{label}"];')
        lines.append("  }")
    for i, c in h.clumps():
        for j, b in h.neighbors(i, c):
            if (j, b) > (i, c):
                lines.append(f'  "c{i}_{c}" -- "c{j}_{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
