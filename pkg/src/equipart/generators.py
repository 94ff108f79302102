"""Deterministic corpora of planar and triangle-free planar graphs.

Triangulations are grown face by face, so planarity holds by construction;
flips, edge deletions, and triangle breaking only ever preserve it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .errors import BadSpec
from .graph import Graph

STACKED = "stacked_triangulation"
FLIPPED = "flipped_triangulation"
SPARSE = "planar_sparse"
TRIANGLE_FREE = "triangle_free_planar"

KINDS = (STACKED, FLIPPED, SPARSE, TRIANGLE_FREE)


@dataclass(frozen=True)
class GenSpec:
    kind: str
    n: int
    seed: int = 0
    flips: int = 0
    edges: Optional[int] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise BadSpec(f"unknown kind {self.kind!r}")
        if self.n < 3:
            raise BadSpec(f"need n >= 3, got {self.n}")
        if self.edges is not None and not 0 <= self.edges <= 3 * self.n - 6:
            raise BadSpec(f"edge count {self.edges} outside [0, 3n-6]")
        if self.flips < 0:
            raise BadSpec(f"negative flip count {self.flips}")


def gen_planar(spec: GenSpec) -> Graph:
    """Generate the graph described by ``spec``; same spec, same graph."""
    rng = random.Random(spec.seed)
    if spec.kind == STACKED:
        edges, _ = _triangulation(spec.n, rng)
        return Graph(spec.n, edges)
    if spec.kind == FLIPPED:
        edges, faces = _triangulation(spec.n, rng)
        edges = _apply_flips(edges, faces, spec.flips, rng)
        return Graph(spec.n, edges)
    if spec.kind == SPARSE:
        target = spec.edges if spec.edges is not None else max(0, 2 * spec.n - 4)
        return Graph(spec.n, _sparse_edges(spec.n, target, rng))
    if spec.kind == TRIANGLE_FREE:
        target = spec.edges if spec.edges is not None else max(0, 2 * spec.n - 4)
        edges = _sparse_edges(spec.n, target, rng)
        return Graph(spec.n, _break_triangles(spec.n, edges, rng))
    raise AssertionError(spec.kind)


def _triangulation(n: int, rng: random.Random) -> tuple[set, list]:
    """Stacked triangulation: insert each new vertex into a random face.

    Faces are plain vertex triples; the initial triangle contributes both
    its sides, so every edge always lies on exactly two faces.
    """
    edges = {(0, 1), (0, 2), (1, 2)}
    faces = [(0, 1, 2), (0, 1, 2)]
    for v in range(3, n):
        a, b, c = faces.pop(rng.randrange(len(faces)))
        for u in (a, b, c):
            edges.add((min(u, v), max(u, v)))
        faces.extend([(a, b, v), (a, c, v), (b, c, v)])
    return edges, faces


def _apply_flips(edges: set, faces: list, flips: int, rng: random.Random) -> set:
    """Attempt ``flips`` diagonal flips; a draw whose flip would break
    simplicity is skipped (it still consumes one attempt)."""
    for _ in range(flips):
        ordered = sorted(edges)
        a, b = ordered[rng.randrange(len(ordered))]
        opposite = []
        hit = []
        for fi, f in enumerate(faces):
            if a in f and b in f:
                hit.append(fi)
                opposite.append(next(x for x in f if x not in (a, b)))
        if len(hit) != 2:
            continue
        c, d = opposite
        if c == d:
            continue
        cd = (min(c, d), max(c, d))
        if cd in edges:
            continue
        edges.discard((a, b))
        edges.add(cd)
        f0, f1 = hit
        faces[f0] = tuple(sorted((a, c, d)))
        faces[f1] = tuple(sorted((b, c, d)))
    return edges


def _sparse_edges(n: int, target: int, rng: random.Random) -> set:
    edges, _ = _triangulation(n, rng)
    while len(edges) > target:
        ordered = sorted(edges)
        edges.discard(ordered[rng.randrange(len(ordered))])
    return edges


def _break_triangles(n: int, edges: set, rng: random.Random) -> set:
    """Delete one random edge of each remaining triangle until none is left."""
    while True:
        tri = _first_triangle(n, edges)
        if tri is None:
            return edges
        a, b, c = tri
        sides = [(a, b), (a, c), (b, c)]
        edges.discard(sides[rng.randrange(3)])
        continue


def _first_triangle(n: int, edges: set) -> Optional[tuple[int, int, int]]:
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    for a in range(n):
        for b in sorted(adj[a]):
            if b <= a:
                continue
            for c in sorted(adj[a] & adj[b]):
                if c > b:
                    return a, b, c
    return None
