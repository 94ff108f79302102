"""Equitable partitions of planar graphs into degenerate parts.

Each algorithm replays an elimination sequence in reverse from a trivially
valid partition of the edgeless graph, repairing with a single swap whenever
re-adding an edge would overload a part.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import _kernels
from .elimination import (EliminationSequence, LowVertexStep, PairStep,
                          edge_elimination_sequence,
                          trifree_elimination_sequence)
from .errors import RepairFailed
from .graph import Graph


@dataclass(frozen=True)
class RepairEvent:
    """A swap applied while re-adding the edge at ``step``: the overloaded
    vertex v moved to ``from_part`` and w moved the other way."""
    step: int
    from_part: int
    v: int
    w: int
    kind: str = field(default="swap_from_part", init=False)

    def to_json(self) -> dict:
        return {"step": self.step, "kind": self.kind,
                "from_part": self.from_part, "moved": [self.v, self.w]}


@dataclass(frozen=True)
class Partition:
    parts: tuple[tuple[int, ...], ...]
    trace: tuple[RepairEvent, ...] = ()

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.parts)

    def to_json(self) -> dict:
        return {"parts": [list(p) for p in self.parts],
                "trace": [e.to_json() for e in self.trace]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def partition_2x3deg(g: Graph, debug: bool = False) -> Partition:
    """Equitable 2-partition of a planar graph into 3-degenerate parts."""
    n = g.n
    assign0 = np.zeros(n, dtype=np.int64)
    assign0[(n + 1) // 2:] = 1
    return _replay_partition(g, nparts=2, cap=3, assign0=assign0, debug=debug)


def partition_3x2deg(g: Graph, debug: bool = False) -> Partition:
    """Equitable 3-partition of a planar graph into 2-degenerate parts."""
    n = g.n
    assign0 = np.arange(n, dtype=np.int64) % 3
    return _replay_partition(g, nparts=3, cap=2, assign0=assign0, debug=debug)


def _replay_partition(g: Graph, nparts: int, cap: int, assign0: np.ndarray,
                      debug: bool) -> Partition:
    seq = edge_elimination_sequence(g)
    steps = np.array([(s.v, s.v1) for s in seq.steps], dtype=np.int64)
    steps = steps.reshape(-1, 2)
    assign, trace, ntrace, ok = _kernels.replay_parts(
        g.n, steps, assign0, nparts, cap)
    if not ok:
        raise RepairFailed(
            f"no swap partner while rebuilding a {cap}-degenerate "
            f"{nparts}-partition; input is not planar")
    events = tuple(
        RepairEvent(step=int(trace[i, 0]), from_part=int(trace[i, 3]),
                    v=int(trace[i, 1]), w=int(trace[i, 2]))
        for i in range(ntrace))
    if debug:
        _debug_replay(g, steps, assign0, events, nparts, cap)
    return Partition(parts=_parts_from_assign(assign, nparts), trace=events)


def partition_2x2deg_trifree(g: Graph, debug: bool = False) -> Partition:
    """Equitable 2-partition of a triangle-free planar graph into
    2-degenerate parts.

    Replays the vertex/edge peel in reverse: a low-degree vertex rejoins the
    smaller part; for a removed edge (u, v), v joins the part holding at
    most two of its present neighbors and u joins the other part.
    """
    seq = trifree_elimination_sequence(g)
    raw = np.full((len(seq.steps), 3), -1, dtype=np.int64)
    for i, s in enumerate(seq.steps):
        if isinstance(s, LowVertexStep):
            raw[i, 0], raw[i, 1] = 0, s.v
        else:
            raw[i, 0], raw[i, 1], raw[i, 2] = 1, s.u, s.v
    assign = _kernels.trifree_replay(g.matrix(), raw, len(seq.steps))
    if debug:
        _debug_trifree_replay(g, seq, assign)
    return Partition(parts=_parts_from_assign(assign, 2))


def _parts_from_assign(assign: np.ndarray, nparts: int) -> tuple[tuple[int, ...], ...]:
    parts: list[list[int]] = [[] for _ in range(nparts)]
    for v in range(len(assign)):
        parts[int(assign[v])].append(v)
    return tuple(tuple(p) for p in parts)


def _assert_invariants(cur: np.ndarray, assign: np.ndarray, nparts: int,
                       cap: int, where: str) -> None:
    sizes = [int(np.sum(assign == p)) for p in range(nparts)]
    if max(sizes) - min(sizes) > 1:
        raise AssertionError(f"{where}: sizes {sizes} not equitable")
    for p in range(nparts):
        idx = np.flatnonzero(assign == p)
        if len(idx) == 0:
            continue
        sub = cur[np.ix_(idx, idx)]
        alive = _kernels.peel_above(sub, cap)
        if alive.any():
            raise AssertionError(f"{where}: part {p} not {cap}-degenerate")


def _debug_replay(g: Graph, steps: np.ndarray, assign0: np.ndarray,
                  events: tuple[RepairEvent, ...], nparts: int, cap: int) -> None:
    """Re-apply the recorded replay one step at a time, asserting the
    partition stays equitable and degenerate for the current edge set."""
    n = g.n
    cur = np.zeros((n, n), dtype=np.uint8)
    assign = assign0.copy()
    by_step = {e.step: e for e in events}
    _assert_invariants(cur, assign, nparts, cap, "base")
    for t in range(steps.shape[0] - 1, -1, -1):
        v, v1 = steps[t]
        cur[v, v1] = cur[v1, v] = 1
        e = by_step.get(t)
        if e is not None:
            assert assign[e.v] != e.from_part and assign[e.w] == e.from_part
            assign[e.v], assign[e.w] = assign[e.w], assign[e.v]
        _assert_invariants(cur, assign, nparts, cap, f"step {t}")


def _debug_trifree_replay(g: Graph, seq: EliminationSequence,
                          final_assign: np.ndarray) -> None:
    n = g.n
    cur = np.zeros((n, n), dtype=np.uint8)
    assign = np.full(n, -1, dtype=np.int64)
    present: set[int] = set()

    def insert(v: int, part: int) -> None:
        assign[v] = part
        for u in g.adj[v]:
            if u in present:
                cur[v, u] = cur[u, v] = 1
        present.add(v)

    for s in reversed(seq.steps):
        if isinstance(s, LowVertexStep):
            sizes = [int(np.sum(assign == p)) for p in (0, 1)]
            insert(s.v, 0 if sizes[0] <= sizes[1] else 1)
        else:
            assert isinstance(s, PairStep)
            in0 = sum(1 for u in g.adj[s.v] if u in present and assign[u] == 0)
            pv = 0 if in0 <= 2 else 1
            insert(s.v, pv)
            insert(s.u, 1 - pv)
        sizes = [int(np.sum(assign == p)) for p in (0, 1)]
        assert abs(sizes[0] - sizes[1]) <= 1, f"trifree sizes {sizes}"
        for p in (0, 1):
            idx = np.flatnonzero(assign == p)
            if len(idx):
                sub = cur[np.ix_(idx, idx)]
                assert not _kernels.peel_above(sub, 2).any()
    assert np.array_equal(assign, final_assign)
