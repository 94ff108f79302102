"""Shared test fixtures: named graphs, exhaustive small-graph enumeration,
and deterministic generated corpora."""

from __future__ import annotations

import itertools
from functools import lru_cache

import networkx as nx
import numpy as np

from equipart import Graph, is_planar
from equipart.generators import (FLIPPED, SPARSE, STACKED, TRIANGLE_FREE,
                                 GenSpec, gen_planar)


def from_nx(h: nx.Graph) -> Graph:
    mapping = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Graph(h.number_of_nodes(),
                 [(mapping[u], mapping[v]) for u, v in h.edges()])


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph(n, list(itertools.combinations(range(n), 2)))


def star(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen() -> Graph:
    return from_nx(nx.petersen_graph())


def cube_q3() -> Graph:
    return from_nx(nx.hypercube_graph(3))


def icosahedron() -> Graph:
    return from_nx(nx.icosahedral_graph())


# ---------------------------------------------------------------------------
# exhaustive enumeration of labeled graphs on n vertices as edge-subset masks

@lru_cache(maxsize=None)
def edge_pairs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, j) for i in range(n) for j in range(i + 1, n))


def mask_graph(n: int, mask: int) -> Graph:
    pairs = edge_pairs(n)
    return Graph(n, [pairs[b] for b in range(len(pairs)) if (mask >> b) & 1])


@lru_cache(maxsize=None)
def planar_mask_table(n: int) -> np.ndarray:
    """planar_mask_table(n)[mask] == 1 iff the labeled graph is planar.

    Planarity is isomorphism-invariant, so each mask orbit under vertex
    permutations is decided by one is_planar call and propagated to the
    whole orbit; this keeps the 2^21 masks of n=7 cheap.
    """
    pairs = edge_pairs(n)
    e = len(pairs)
    pos = {p: i for i, p in enumerate(pairs)}
    perm_target = np.array(
        [[pos[tuple(sorted((pm[i], pm[j])))] for (i, j) in pairs]
         for pm in itertools.permutations(range(n))],
        dtype=np.int64)
    powers = np.int64(1) << perm_target
    table = np.full(1 << e, -1, dtype=np.int8)
    for mask in range(1 << e):
        if table[mask] >= 0:
            continue
        val = np.int8(1 if is_planar(mask_graph(n, mask)) else 0)
        bits = (mask >> np.arange(e, dtype=np.int64)) & 1
        table[powers @ bits] = val
    return table


@lru_cache(maxsize=None)
def triangle_free_mask_table(n: int) -> np.ndarray:
    pairs = edge_pairs(n)
    e = len(pairs)
    pos = {p: i for i, p in enumerate(pairs)}
    masks = np.arange(1 << e, dtype=np.int64)
    ok = np.ones(1 << e, dtype=bool)
    for a, b, c in itertools.combinations(range(n), 3):
        t = (1 << pos[(a, b)]) | (1 << pos[(a, c)]) | (1 << pos[(b, c)])
        ok &= (masks & t) != t
    return ok


def planar_masks(n: int) -> np.ndarray:
    return np.flatnonzero(planar_mask_table(n) == 1)


def planar_orbit_reps(n: int) -> list[int]:
    """One planar mask per isomorphism class (lowest mask in each orbit)."""
    pairs = edge_pairs(n)
    e = len(pairs)
    pos = {p: i for i, p in enumerate(pairs)}
    perm_target = np.array(
        [[pos[tuple(sorted((pm[i], pm[j])))] for (i, j) in pairs]
         for pm in itertools.permutations(range(n))],
        dtype=np.int64)
    powers = np.int64(1) << perm_target
    table = planar_mask_table(n)
    seen = np.zeros(1 << e, dtype=bool)
    reps = []
    for mask in range(1 << e):
        if seen[mask]:
            continue
        bits = (mask >> np.arange(e, dtype=np.int64)) & 1
        seen[powers @ bits] = True
        if table[mask] == 1:
            reps.append(mask)
    return reps


# ---------------------------------------------------------------------------
# deterministic generated corpora

@lru_cache(maxsize=None)
def generated_planar_corpus(count: int = 1000, max_n: int = 40) -> tuple[Graph, ...]:
    kinds = (STACKED, FLIPPED, SPARSE)
    graphs = []
    for i in range(count):
        n = 4 + (i % (max_n - 3))
        kind = kinds[i % 3]
        spec = GenSpec(kind=kind, n=n, seed=1000 + i,
                       flips=3 * n if kind == FLIPPED else 0,
                       edges=(3 * n - 6) * (i % 4) // 4 if kind == SPARSE else None)
        graphs.append(gen_planar(spec))
    return tuple(graphs)


@lru_cache(maxsize=None)
def generated_trifree_corpus(count: int = 500, max_n: int = 40) -> tuple[Graph, ...]:
    graphs = []
    for i in range(count):
        n = 4 + (i % (max_n - 3))
        spec = GenSpec(kind=TRIANGLE_FREE, n=n, seed=5000 + i,
                       edges=max(0, (2 * n - 4) * (2 + i % 3) // 4))
        graphs.append(gen_planar(spec))
    return tuple(graphs)
