"""Certify partition properties, always with a re-checkable failure witness.

Checks cover degeneracy bounds, acyclicity, equitability, independence,
bipartiteness, triangle-freeness, and planarity validation of inputs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import networkx as nx

from . import _kernels
from .graph import Graph

D_DEGENERATE = "d_degenerate"
FOREST = "forest"
LINEAR_FOREST = "linear_forest"
INDEPENDENT = "independent"
BIPARTITE = "bipartite"
UNCONSTRAINED = "unconstrained"

CONSTRAINTS = (D_DEGENERATE, FOREST, LINEAR_FOREST, INDEPENDENT, BIPARTITE,
               UNCONSTRAINED)


@dataclass(frozen=True)
class Witness:
    kind: str

    def to_json(self) -> dict:
        d = dict(self.__dict__)
        return d


@dataclass(frozen=True)
class CycleWitness(Witness):
    """Vertices of a cycle, in cycle order, inside the offending part."""
    vertices: tuple[int, ...]
    kind: str = field(default="cycle", init=False)

    def verifies(self, g: Graph) -> bool:
        k = len(self.vertices)
        if k < 3 or len(set(self.vertices)) != k:
            return False
        return all(
            g.has_edge(self.vertices[i], self.vertices[(i + 1) % k])
            for i in range(k)
        )


@dataclass(frozen=True)
class DenseCoreWitness(Witness):
    """Vertex set inducing minimum degree > d."""
    vertices: tuple[int, ...]
    d: int
    kind: str = field(default="dense_core", init=False)

    def verifies(self, g: Graph) -> bool:
        vs = set(self.vertices)
        if not vs:
            return False
        return all(
            sum(1 for u in g.adj[v] if u in vs) > self.d for v in vs
        )


@dataclass(frozen=True)
class ImbalanceWitness(Witness):
    part_a: int
    part_b: int
    size_a: int
    size_b: int
    kind: str = field(default="imbalance", init=False)


@dataclass(frozen=True)
class TriangleWitness(Witness):
    vertices: tuple[int, int, int]
    kind: str = field(default="triangle", init=False)

    def verifies(self, g: Graph) -> bool:
        a, b, c = self.vertices
        return g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c)


@dataclass(frozen=True)
class MaxDegreeWitness(Witness):
    """A vertex with too many neighbors inside its part."""
    vertex: int
    neighbors: tuple[int, ...]
    kind: str = field(default="max_degree", init=False)


@dataclass(frozen=True)
class CoverageWitness(Witness):
    missing: tuple[int, ...]
    duplicated: tuple[int, ...]
    kind: str = field(default="coverage", init=False)


@dataclass(frozen=True)
class PartCountWitness(Witness):
    expected: int
    actual: int
    kind: str = field(default="part_count", init=False)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    witness: Optional[Witness] = None


@dataclass(frozen=True)
class Report:
    checks: tuple[CheckResult, ...]

    @property
    def verdict(self) -> str:
        return "pass" if all(c.passed for c in self.checks) else "fail"

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "checks": [
                {
                    "name": c.name,
                    "pass": c.passed,
                    "witness": c.witness.to_json() if c.witness else None,
                }
                for c in self.checks
            ],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


@dataclass(frozen=True)
class PartitionSpec:
    """Expected shape of a partition: part count, per-part constraint, equitability."""
    parts: int
    constraint: str = UNCONSTRAINED
    d: Optional[int] = None
    equitable: bool = True

    def __post_init__(self):
        if self.parts < 1:
            raise ValueError(f"parts must be >= 1, got {self.parts}")
        if self.constraint not in CONSTRAINTS:
            raise ValueError(f"unknown constraint {self.constraint!r}")
        if self.constraint == D_DEGENERATE and (self.d is None or self.d < 0):
            raise ValueError("d_degenerate requires d >= 0")

    @classmethod
    def degenerate(cls, parts: int, d: int, equitable: bool = True) -> "PartitionSpec":
        return cls(parts=parts, constraint=D_DEGENERATE, d=d, equitable=equitable)


def degeneracy_order(g: Graph) -> tuple[int, list[int]]:
    """Degeneracy and the min-degree peeling order (lowest-id tie-break)."""
    if g.n == 0:
        return 0, []
    d, order = _kernels.degeneracy_peel(g.matrix())
    return int(d), [int(v) for v in order]


def degeneracy(g: Graph) -> int:
    return degeneracy_order(g)[0]


def find_triangle(g: Graph) -> Optional[TriangleWitness]:
    i, j, k = _kernels.find_triangle(g.matrix())
    if i < 0:
        return None
    return TriangleWitness(vertices=(int(i), int(j), int(k)))


def is_triangle_free(g: Graph) -> bool:
    return find_triangle(g) is None


def is_planar(g: Graph) -> bool:
    """Planarity with cheap necessary edge-count prefilters first."""
    n, m = g.n, g.m
    if n >= 3:
        if m > 3 * n - 6:
            return False
        if m > 2 * n - 4 and is_triangle_free(g):
            return False
    if m == 0 or n <= 4:
        return True
    h = nx.Graph()
    h.add_nodes_from(range(n))
    h.add_edges_from(g.edges())
    ok, _ = nx.check_planarity(h, counterexample=False)
    return bool(ok)


def check_partition(g: Graph, parts, spec: PartitionSpec) -> Report:
    """Verify that ``parts`` is a partition of V(g) matching ``spec``.

    A bad partition (overlap / missed vertices) is reported as a failing
    check with a coverage witness, not an exception.
    """
    if hasattr(parts, "parts"):
        parts = parts.parts
    parts = [sorted(p) for p in parts]
    checks: list[CheckResult] = []

    seen: dict[int, int] = {}
    duplicated = set()
    for p in parts:
        for v in p:
            if v in seen or not (0 <= v < g.n):
                duplicated.add(v)
            seen[v] = seen.get(v, 0) + 1
    missing = [v for v in range(g.n) if v not in seen]
    if missing or duplicated:
        checks.append(CheckResult(
            "partition", False,
            CoverageWitness(missing=tuple(missing),
                            duplicated=tuple(sorted(duplicated)))))
    else:
        checks.append(CheckResult("partition", True))

    if len(parts) != spec.parts:
        checks.append(CheckResult(
            "part_count", False,
            PartCountWitness(expected=spec.parts, actual=len(parts))))
    else:
        checks.append(CheckResult("part_count", True))

    if spec.equitable:
        sizes = [len(p) for p in parts]
        lo = min(range(len(sizes)), key=lambda i: sizes[i])
        hi = max(range(len(sizes)), key=lambda i: sizes[i])
        if sizes[hi] - sizes[lo] > 1:
            checks.append(CheckResult(
                "equitable", False,
                ImbalanceWitness(part_a=hi, part_b=lo,
                                 size_a=sizes[hi], size_b=sizes[lo])))
        else:
            checks.append(CheckResult("equitable", True))

    for i, p in enumerate(parts):
        name = f"part_{i}_{spec.constraint}"
        witness = _check_part(g, p, spec)
        checks.append(CheckResult(name, witness is None, witness))

    return Report(checks=tuple(checks))


def check_mixed_partition(g: Graph, parts,
                          constraints: Sequence[tuple[str, Optional[int]]],
                          equitable: bool = True) -> Report:
    """Like check_partition, but with one (constraint, d) pair per part."""
    if hasattr(parts, "parts"):
        parts = parts.parts
    base = check_partition(
        g, parts, PartitionSpec(parts=len(constraints), equitable=equitable))
    checks = [c for c in base.checks if not c.name.startswith("part_")
              or not c.name.endswith(UNCONSTRAINED)]
    for i, (p, (constraint, d)) in enumerate(zip(parts, constraints)):
        sub = PartitionSpec(parts=1, constraint=constraint, d=d,
                            equitable=False)
        w = _check_part(g, sorted(p), sub)
        checks.append(CheckResult(f"part_{i}_{constraint}", w is None, w))
    return Report(checks=tuple(checks))


def _check_part(g: Graph, part: Sequence[int], spec: PartitionSpec) -> Optional[Witness]:
    part = [v for v in part if 0 <= v < g.n]
    if spec.constraint == UNCONSTRAINED or not part:
        return None
    if spec.constraint == D_DEGENERATE:
        return dense_core_witness(g, part, spec.d)
    if spec.constraint == INDEPENDENT:
        return dense_core_witness(g, part, 0)
    if spec.constraint == FOREST:
        cyc = find_cycle(g, part)
        return CycleWitness(vertices=tuple(cyc)) if cyc else None
    if spec.constraint == LINEAR_FOREST:
        cyc = find_cycle(g, part)
        if cyc:
            return CycleWitness(vertices=tuple(cyc))
        ps = set(part)
        for v in part:
            nbrs = [u for u in g.adj[v] if u in ps]
            if len(nbrs) > 2:
                return MaxDegreeWitness(vertex=v, neighbors=tuple(nbrs))
        return None
    if spec.constraint == BIPARTITE:
        cyc = odd_cycle(g, part)
        return CycleWitness(vertices=tuple(cyc)) if cyc else None
    raise AssertionError(spec.constraint)


def dense_core_witness(g: Graph, part: Iterable[int], d: int) -> Optional[DenseCoreWitness]:
    """Remainder of peeling with threshold d: the canonical non-d-degeneracy
    certificate, or None when the part is d-degenerate."""
    idx, sub = g.subgraph_matrix(part)
    if not idx:
        return None
    alive = _kernels.peel_above(sub, d)
    core = tuple(idx[i] for i in range(len(idx)) if alive[i])
    if not core:
        return None
    return DenseCoreWitness(vertices=core, d=d)


def find_cycle(g: Graph, part: Iterable[int]) -> Optional[list[int]]:
    """A cycle of the induced subgraph, as a vertex list, or None."""
    ps = set(part)
    parent: dict[int, Optional[int]] = {}
    state: dict[int, int] = {}  # 1 = on current DFS path, 2 = finished
    for root in sorted(ps):
        if root in state:
            continue
        parent[root] = None
        state[root] = 1
        stack = [(root, iter(g.adj[root]))]
        while stack:
            v, it = stack[-1]
            descended = False
            for u in it:
                if u not in ps or u == parent[v]:
                    continue
                if state.get(u) == 1:
                    # back edge to an ancestor: walk v up to u
                    cycle = [v]
                    x = v
                    while x != u:
                        x = parent[x]
                        cycle.append(x)
                    return cycle
                if u not in state:
                    parent[u] = v
                    state[u] = 1
                    stack.append((u, iter(g.adj[u])))
                    descended = True
                    break
            if not descended:
                state[v] = 2
                stack.pop()
    return None


def odd_cycle(g: Graph, part: Iterable[int]) -> Optional[list[int]]:
    """An odd cycle of the induced subgraph (2-colorability witness), or None."""
    ps = set(part)
    color: dict[int, int] = {}
    parent: dict[int, Optional[int]] = {}
    for root in sorted(ps):
        if root in color:
            continue
        color[root] = 0
        parent[root] = None
        queue = [root]
        qi = 0
        while qi < len(queue):
            v = queue[qi]
            qi += 1
            for u in g.adj[v]:
                if u not in ps:
                    continue
                if u not in color:
                    color[u] = 1 - color[v]
                    parent[u] = v
                    queue.append(u)
                elif color[u] == color[v]:
                    pa = _path_to_root(v, parent)
                    pb = _path_to_root(u, parent)
                    while len(pa) > 1 and len(pb) > 1 and pa[-2] == pb[-2]:
                        pa.pop()
                        pb.pop()
                    return pa[:-1] + pb[::-1]
    return None


def _path_to_root(v: int, parent: dict[int, Optional[int]]) -> list[int]:
    path = [v]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return path
