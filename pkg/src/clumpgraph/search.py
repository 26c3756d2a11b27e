"""Exhaustive desk-scale experiments.

Three searches live here: enumeration of all connected graphs on up to 9
vertices (one representative per isomorphism class), extremal-diameter
tables that pit every small k-colorable graph against the closed-form
bound, and a hunt for clump graphs where the weighting scheme breaks
(expected to find witnesses from k = 5 on and nothing for k in {3, 4}).

Isomorphism rejection uses a permutation-minimal adjacency encoding: the
bit chunks a vertex contributes against already-placed vertices, minimized
by branch and bound.  Only minimal-chunk extensions can lead to the
minimal encoding, which prunes the factorial search to something cheap at
this scale.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from multiprocessing import Pool
from typing import Iterator, Sequence

from .clumps import ClumpGraph, ClumpError, enumerate_strongly_canonical
from .graphs import SimpleGraph, proper_coloring
from .structure import core_sets, partition_segments
from .weighting import (
    DualWeighting,
    _scheme_values,
    diameter_bound,
    expected_total,
    verify_weighting,
)

MAX_VERTICES = 9  # n! canonicalization stays comfortable up to here


def canonical_key(n: int, masks: Sequence[int]) -> tuple[int, ...]:
    """Permutation-minimal adjacency encoding of a graph given as neighbor
    bitmasks.  Chunk d holds the adjacency bits of the vertex placed at
    position d against positions 0..d-1 (position 0 as the top bit)."""
    if n == 1:
        return ()
    best: list[int] | None = None
    cur: list[int] = []
    placed: list[int] = []

    def dfs(remaining: list[int], tight: bool) -> None:
        nonlocal best
        pos = len(placed)
        if pos == n:
            if best is None or cur < best:
                best = cur.copy()
            return
        groups: dict[int, list[int]] = {}
        for v in remaining:
            chunk = 0
            mv = masks[v]
            for j, u in enumerate(placed):
                if mv >> u & 1:
                    chunk |= 1 << (pos - 1 - j)
            groups.setdefault(chunk, []).append(v)
        chunk = min(groups)
        if best is not None and tight:
            ref = best[pos - 1]
            if chunk > ref:
                return
            tight = chunk == ref
        cur.append(chunk)
        for v in groups[chunk]:
            placed.append(v)
            rest = [u for u in remaining if u != v]
            dfs(rest, tight)
            placed.pop()
            # a finished sibling may have updated best; stay honest
            if best is not None and not tight:
                tight = cur == best[: len(cur)]
        cur.pop()

    verts = list(range(n))
    for start in verts:
        placed.append(start)
        dfs([u for u in verts if u != start], best is not None)
        placed.pop()
    return tuple(best)


def _masks_from_edges(n: int, edges) -> tuple[int, ...]:
    masks = [0] * n
    for u, v in edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return tuple(masks)


def _graph_from_key(n: int, key: tuple[int, ...]) -> SimpleGraph:
    edges = []
    for pos in range(1, n):
        chunk = key[pos - 1]
        for j in range(pos):
            if chunk >> (pos - 1 - j) & 1:
                edges.append((j, pos))
    return SimpleGraph.from_edges(n, edges)


def _canon_batch(args) -> list[tuple[int, ...]]:
    n, batch = args
    return [canonical_key(n, masks) for masks in batch]


_LEVEL_CACHE: dict[int, list[tuple[int, ...]]] = {}


def _connected_level(n: int, workers: int = 1) -> list[tuple[int, ...]]:
    """Canonical keys of all connected graphs on n vertices, sorted by
    (edge count, key).  Built by attaching a new vertex to every nonempty
    subset of each (n-1)-vertex representative; every connected graph has
    a non-cut vertex, so the augmentation is complete."""
    if n in _LEVEL_CACHE:
        return _LEVEL_CACHE[n]
    if n == 1:
        _LEVEL_CACHE[1] = [()]
        return _LEVEL_CACHE[1]
    parents = _connected_level(n - 1, workers)
    candidates: list[tuple[int, ...]] = []
    new = n - 1
    for pkey in parents:
        pmasks = _masks_from_edges(n, _graph_from_key(n - 1, pkey).edges)
        masks = list(pmasks)
        for sub in range(1, 1 << (n - 1)):
            masks2 = masks.copy()
            masks2[new] = sub
            for j in range(n - 1):
                if sub >> j & 1:
                    masks2[j] |= 1 << new
            candidates.append(tuple(masks2))
    if workers > 1:
        size = max(1, len(candidates) // (workers * 8))
        batches = [
            (n, candidates[i : i + size]) for i in range(0, len(candidates), size)
        ]
        with Pool(workers) as pool:
            keyed = [k for chunk in pool.map(_canon_batch, batches) for k in chunk]
    else:
        keyed = [canonical_key(n, masks) for masks in candidates]
    uniq = sorted(set(keyed), key=lambda k: (sum(c.bit_count() for c in k), k))
    _LEVEL_CACHE[n] = uniq
    return uniq


def enumerate_connected_graphs(n: int, workers: int = 1) -> Iterator[SimpleGraph]:
    """One representative per isomorphism class of connected graphs."""
    if not (1 <= n <= MAX_VERTICES):
        raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}")
    for key in _connected_level(n, workers):
        yield _graph_from_key(n, key)


def count_connected_graphs(n: int, workers: int = 1) -> int:
    if not (1 <= n <= MAX_VERTICES):
        raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}")
    return len(_connected_level(n, workers))


# --- extremal tables ---------------------------------------------------------


@dataclass(frozen=True)
class ExtremalRow:
    k: int
    n: int
    delta: int
    max_diameter: int
    witness: SimpleGraph
    bound: Fraction | None
    bound_floor: int | None


def _graph_stats(args):
    n, key, k = args
    g = _graph_from_key(n, key)
    if proper_coloring(g, k) is None:
        return None
    # connected by construction; all-pairs eccentricity
    diam = 0
    for v in range(n):
        diam = max(diam, max(g.bfs_distances(v)))
    return (min(g.degree(v) for v in range(n)), diam, key)


def extremal_table(
    k: int,
    n_max: int,
    delta_set: Sequence[int],
    workers: int = 1,
) -> list[ExtremalRow]:
    """Max diameter over all connected graphs with chromatic number <= k
    and minimum degree >= delta, per (n, delta), against the closed-form
    bound when k in {3, 4}."""
    if k not in (3, 4, 5):
        raise ValueError("extremal tables cover k in {3, 4, 5}")
    if not (1 <= n_max <= MAX_VERTICES):
        raise ValueError(f"n_max must be in 1..{MAX_VERTICES}")
    deltas = sorted(set(delta_set))
    if any(d < 1 for d in deltas):
        raise ValueError("minimum degrees must be >= 1")
    rows = []
    for n in range(1, n_max + 1):
        keys = _connected_level(n, workers)
        jobs = [(n, key, k) for key in keys]
        if workers > 1:
            with Pool(workers) as pool:
                stats = pool.map(_graph_stats, jobs, chunksize=256)
        else:
            stats = [_graph_stats(j) for j in jobs]
        stats = [s for s in stats if s is not None]
        for delta in deltas:
            pool_stats = [s for s in stats if s[0] >= delta]
            if not pool_stats:
                continue
            best = max(s[1] for s in pool_stats)
            witness_key = next(s[2] for s in pool_stats if s[1] == best)
            bound = diameter_bound(n, delta, k) if k in (3, 4) else None
            rows.append(
                ExtremalRow(
                    k=k,
                    n=n,
                    delta=delta,
                    max_diameter=best,
                    witness=_graph_from_key(n, witness_key),
                    bound=bound,
                    bound_floor=None if bound is None else math.floor(bound),
                )
            )
    return rows


def extremal_csv(rows: Sequence[ExtremalRow]) -> str:
    lines = ["k,n,delta,max_diam,bound,witness-edge-list"]
    for r in rows:
        edges = ";".join(f"{u}-{v}" for u, v in sorted(r.witness.edges))
        bound = "" if r.bound is None else str(r.bound)
        lines.append(f"{r.k},{r.n},{r.delta},{r.max_diameter},{bound},{edges}")
    return "\n".join(lines) + "\n"


# --- scheme failure hunting --------------------------------------------------


@dataclass(frozen=True)
class SchemeFailure:
    graph: ClumpGraph
    kind: str  # "structure-violation" | "total-mismatch" | "infeasible-vertex"
    layer: int
    detail: str


def check_scheme_on(h: ClumpGraph) -> list[SchemeFailure]:
    """Apply the weighting case table verbatim and report what breaks."""
    prof = core_sets(h, checked=False)
    part = partition_segments(h, prof)
    out: list[SchemeFailure] = []
    for seg in part.segments:
        if seg.kind == 3:
            continue
        for i in range(seg.start, seg.end + 1):
            size = len(h.layers[i])
            if prof.core[i] != h.layers[i] or size not in (1, h.k - 1):
                out.append(
                    SchemeFailure(
                        h,
                        "structure-violation",
                        i,
                        f"kind-{seg.kind} segment layer with |C|={size}, "
                        f"|S|={len(prof.core[i])}",
                    )
                )
    u = DualWeighting(h, _scheme_values(h, part, prof))
    rep = verify_weighting(h, u)
    want = expected_total(h.k, h.depth)
    if rep.total != want:
        out.append(
            SchemeFailure(
                h, "total-mismatch", -1, f"total {rep.total}, expected {want}"
            )
        )
    if not rep.feasible:
        out.append(
            SchemeFailure(
                h,
                "infeasible-vertex",
                rep.worst_clump[0],
                f"clump {rep.worst_clump} has neighbor sum {rep.worst_sum} > 1",
            )
        )
    return out


def _check_batch(graphs: list[ClumpGraph]) -> list[SchemeFailure]:
    return [f for h in graphs for f in check_scheme_on(h)]


def scheme_failure_search(
    k: int,
    depth_max: int,
    limit: int | None = None,
    workers: int = 1,
) -> list[SchemeFailure]:
    """Sweep all strongly canonical clump graphs with depth <= depth_max
    and collect every scheme failure, in enumeration order.  ``limit``
    stops the sweep once that many failures are in hand (existence
    checks); k in {3, 4} is allowed as the expected-empty control."""
    if k < 3:
        raise ClumpError("scheme search needs k >= 3")
    if not (2 <= depth_max <= 12):
        raise ClumpError("depth_max must be in 2..12")
    failures: list[SchemeFailure] = []
    for depth in range(2, depth_max + 1):
        stream = enumerate_strongly_canonical(k, depth)
        if workers > 1:
            with Pool(workers) as pool:
                batches = iter(lambda: list(itertools.islice(stream, 2048)), [])
                for found in pool.imap(_check_batch, batches):
                    failures.extend(found)
                    if limit is not None and len(failures) >= limit:
                        pool.terminate()
                        return failures[:limit]
        else:
            for h in stream:
                failures.extend(check_scheme_on(h))
                if limit is not None and len(failures) >= limit:
                    return failures[:limit]
    return failures
