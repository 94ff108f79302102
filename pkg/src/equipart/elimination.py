"""Removal sequences whose reverse replay drives the partition constructions."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Union

from . import _kernels
from .errors import NoLowDegreeVertex, StructureClaimViolated
from .graph import Graph


@dataclass(frozen=True)
class EdgeStep:
    """Edge (v, v1) removed while deg(v) <= 5."""
    v: int
    v1: int

    def to_json(self) -> dict:
        return {"kind": "edge", "v": self.v, "v1": self.v1}


@dataclass(frozen=True)
class LowVertexStep:
    """Vertex v removed while deg(v) <= 2."""
    v: int

    def to_json(self) -> dict:
        return {"kind": "low_vertex", "v": self.v}


@dataclass(frozen=True)
class PairStep:
    """Edge (u, v) removed with both endpoints, deg(u) = 3 and deg(v) <= 6."""
    u: int
    v: int

    def to_json(self) -> dict:
        return {"kind": "pair", "u": self.u, "v": self.v}


Step = Union[EdgeStep, LowVertexStep, PairStep]


@dataclass(frozen=True)
class EliminationSequence:
    steps: tuple[Step, ...]

    def __len__(self) -> int:
        return len(self.steps)

    def to_jsonl(self) -> str:
        return "\n".join(json.dumps(s.to_json()) for s in self.steps)


def edge_elimination_sequence(g: Graph) -> EliminationSequence:
    """One EdgeStep per edge of ``g``, always from a vertex of current
    positive degree at most 5.

    Picks the lowest-id vertex of minimum positive degree and its lowest-id
    neighbor. Raises NoLowDegreeVertex when every non-isolated vertex has
    degree >= 6, which cannot happen on planar inputs.
    """
    if g.m == 0:
        return EliminationSequence(steps=())
    steps, ok = _kernels.edge_elimination(g.matrix())
    if not ok:
        raise NoLowDegreeVertex(
            "every non-isolated vertex has degree >= 6; input is not planar")
    return EliminationSequence(
        steps=tuple(EdgeStep(int(v), int(v1)) for v, v1 in steps))


def trifree_elimination_sequence(g: Graph) -> EliminationSequence:
    """Reduce ``g`` to the empty graph by degree-<=2 vertices and
    (3, <=6)-degree edges with both endpoints.

    Lowest-id / lexicographically-first choices throughout. Raises
    StructureClaimViolated when neither move exists; triangle-free planar
    graphs always admit one.
    """
    if g.n == 0:
        return EliminationSequence(steps=())
    raw, nsteps, ok = _kernels.trifree_elimination(g.matrix())
    if not ok:
        raise StructureClaimViolated(
            "no vertex of degree <= 2 and no (3, <=6)-degree edge; "
            "input is not triangle-free planar")
    steps: list[Step] = []
    for t in range(nsteps):
        kind, a, b = int(raw[t, 0]), int(raw[t, 1]), int(raw[t, 2])
        steps.append(LowVertexStep(a) if kind == 0 else PairStep(a, b))
    return EliminationSequence(steps=tuple(steps))
