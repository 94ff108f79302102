"""Exact backtracking colorers (desk scale) and coloring validation.

The acyclic search keeps, for every unordered color pair, a rollback-able
union-find over the vertices wearing those two colors: giving vertex v a
color closes a bichromatic cycle exactly when two of v's neighbors already
sit in one pair-component.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from typing import Optional, Union

from .graph import Graph
from .verify import (CheckResult, CoverageWitness, Report, dense_core_witness,
                     find_cycle, CycleWitness)

DEFAULT_BUDGET = 10 ** 7


def _default_budget() -> int:
    raw = os.environ.get("EQUIPART_BUDGET", "").strip()
    return int(raw) if raw else DEFAULT_BUDGET


class BudgetExhausted:
    """Sentinel: the search hit its decision-node budget before finishing."""

    _instance: Optional["BudgetExhausted"] = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "BUDGET_EXHAUSTED"


BUDGET_EXHAUSTED = BudgetExhausted()


@dataclass(frozen=True)
class Coloring:
    classes: tuple[tuple[int, ...], ...]
    kind: str = "proper"

    @property
    def k(self) -> int:
        return len(self.classes)

    def to_json(self) -> dict:
        return {"kind": self.kind, "classes": [list(c) for c in self.classes]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, data: dict) -> "Coloring":
        return cls(classes=tuple(tuple(sorted(c)) for c in data["classes"]),
                   kind=data.get("kind", "proper"))


class _PairForest:
    """Union-find without path compression, so unions can be rolled back."""

    __slots__ = ("parent", "size", "history")

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self.history: list[int] = []

    def find(self, v: int) -> int:
        while self.parent[v] != v:
            v = self.parent[v]
        return v

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.history.append(rb)

    def mark(self) -> int:
        return len(self.history)

    def rollback(self, mark: int) -> None:
        while len(self.history) > mark:
            child = self.history.pop()
            root = self.parent[child]
            self.size[root] -= self.size[child]
            self.parent[child] = child


def exact_proper_coloring(g: Graph, k: int, budget: Optional[int] = None
                          ) -> Union[Coloring, None, BudgetExhausted]:
    """Backtracking proper k-coloring: a Coloring, None when none exists,
    or BUDGET_EXHAUSTED."""
    return _exact_coloring(g, k, acyclic=False, budget=budget)


def exact_acyclic_coloring(g: Graph, k: int, budget: Optional[int] = None
                           ) -> Union[Coloring, None, BudgetExhausted]:
    """Backtracking acyclic k-coloring (proper, no bichromatic cycle)."""
    return _exact_coloring(g, k, acyclic=True, budget=budget)


class _OutOfBudget(Exception):
    pass


def _exact_coloring(g: Graph, k: int, acyclic: bool, budget: Optional[int]
                    ) -> Union[Coloring, None, BudgetExhausted]:
    if k < 1:
        return Coloring(classes=(), kind="acyclic" if acyclic else "proper") \
            if g.n == 0 else None
    n = g.n
    budget = _default_budget() if budget is None else budget
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    color = [-1] * n
    forests: dict[tuple[int, int], _PairForest] = {}
    if acyclic:
        for a in range(k):
            for b in range(a + 1, k):
                forests[(a, b)] = _PairForest(n)
    nodes = 0

    def try_color(v: int, c: int) -> Optional[list[tuple[tuple[int, int], int]]]:
        """Apply color c to v in every pair forest; None if a bichromatic
        cycle closes. Returns rollback marks."""
        marks = []
        for c2 in range(k):
            if c2 == c:
                continue
            key = (c, c2) if c < c2 else (c2, c)
            pf = forests[key]
            marks.append((key, pf.mark()))
            seen_roots: set[int] = set()
            for u in g.adj[v]:
                if color[u] == c2:
                    r = pf.find(u)
                    if r in seen_roots:
                        for kk, mm in marks:
                            forests[kk].rollback(mm)
                        return None
                    seen_roots.add(r)
            for u in g.adj[v]:
                if color[u] == c2:
                    pf.union(v, u)
        return marks

    def search(idx: int) -> bool:
        nonlocal nodes
        if idx == n:
            return True
        v = order[idx]
        for c in range(k):
            nodes += 1
            if nodes > budget:
                raise _OutOfBudget
            if any(color[u] == c for u in g.adj[v]):
                continue
            marks = None
            if acyclic:
                marks = try_color(v, c)
                if marks is None:
                    continue
            color[v] = c
            if search(idx + 1):
                return True
            color[v] = -1
            if marks is not None:
                for kk, mm in marks:
                    forests[kk].rollback(mm)
        return False

    try:
        found = search(0)
    except _OutOfBudget:
        return BUDGET_EXHAUSTED
    if not found:
        return None
    classes: list[list[int]] = [[] for _ in range(k)]
    for v in range(n):
        classes[color[v]].append(v)
    return Coloring(classes=tuple(tuple(c) for c in classes),
                    kind="acyclic" if acyclic else "proper")


def validate_coloring(g: Graph, c: Coloring) -> Report:
    """Check that the classes partition V(g), each is independent, and (for
    kind "acyclic") that every pair of classes induces a forest."""
    checks: list[CheckResult] = []
    seen: dict[int, int] = {}
    duplicated = set()
    for cl in c.classes:
        for v in cl:
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

    for i, cl in enumerate(c.classes):
        w = dense_core_witness(g, [v for v in cl if 0 <= v < g.n], 0)
        checks.append(CheckResult(f"class_{i}_independent", w is None, w))

    if c.kind == "acyclic":
        for i in range(len(c.classes)):
            for j in range(i + 1, len(c.classes)):
                both = [v for v in (*c.classes[i], *c.classes[j]) if 0 <= v < g.n]
                cyc = find_cycle(g, both)
                checks.append(CheckResult(
                    f"pair_{i}_{j}_forest", cyc is None,
                    CycleWitness(vertices=tuple(cyc)) if cyc else None))
    return Report(checks=tuple(checks))
