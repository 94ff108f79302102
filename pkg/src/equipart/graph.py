"""Simple undirected graphs with dense 0..n-1 vertex identifiers.

Supports the graph6 byte format (n <= 62, single-byte size prefix) and a
plain-text edge list ("u v" per line, optional leading "n" line).
"""

from __future__ import annotations

from typing import Iterable, Iterator

import numpy as np

from .errors import MalformedInput, OverlappingSets

GRAPH6_MAX_N = 62


class Graph:
    """Immutable simple graph: no loops, no parallel edges.

    Adjacency is exposed as a tuple of sorted neighbor tuples, so iteration
    order is deterministic everywhere.
    """

    __slots__ = ("n", "adj", "m", "_matrix")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise MalformedInput(f"negative vertex count {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise MalformedInput(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise MalformedInput(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.adj = tuple(tuple(sorted(s)) for s in nbrs)
        self.m = sum(len(a) for a in self.adj) // 2
        self._matrix: np.ndarray | None = None

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges (u, v) with u < v in lexicographic order."""
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    def vertices(self) -> range:
        return range(self.n)

    def matrix(self) -> np.ndarray:
        """Dense uint8 adjacency matrix, cached (the graph is immutable)."""
        if self._matrix is None:
            mat = np.zeros((self.n, self.n), dtype=np.uint8)
            for u in range(self.n):
                for v in self.adj[u]:
                    mat[u, v] = 1
            self._matrix = mat
        return self._matrix

    def subgraph_matrix(self, vertices: Iterable[int]) -> tuple[list[int], np.ndarray]:
        """Adjacency matrix of the induced subgraph, plus the vertex order."""
        idx = sorted(vertices)
        sub = self.matrix()[np.ix_(idx, idx)]
        return idx, sub

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def to_graph6(self) -> str:
        return encode_graph6(self)

    def to_edge_list(self) -> str:
        lines = [str(self.n)]
        lines.extend(f"{u} {v}" for u, v in self.edges())
        return "\n".join(lines) + "\n"


def parse_graph(text: str, format: str = "graph6") -> Graph:
    """Parse ``text`` in the named format ("graph6" or "edge_list")."""
    if format == "graph6":
        return parse_graph6(text)
    if format == "edge_list":
        return parse_edge_list(text)
    raise MalformedInput(f"unknown format {format!r}")


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise MalformedInput("empty graph6 string")
    first = ord(s[0])
    if first == 126:
        raise MalformedInput("multi-byte graph6 size prefix not supported (n > 62)")
    if not (63 <= first <= 126):
        raise MalformedInput(f"bad graph6 size byte {s[0]!r}", line=1, offset=0)
    n = first - 63
    need = (n * (n - 1) // 2 + 5) // 6
    body = s[1:]
    if len(body) != need:
        raise MalformedInput(
            f"graph6 body has {len(body)} bytes, expected {need} for n={n}"
        )
    bits: list[int] = []
    for pos, ch in enumerate(body):
        c = ord(ch)
        if not (63 <= c <= 126):
            raise MalformedInput(f"bad graph6 byte {ch!r}", line=1, offset=pos + 1)
        val = c - 63
        bits.extend((val >> (5 - b)) & 1 for b in range(6))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def encode_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise MalformedInput(f"graph6 output limited to n <= {GRAPH6_MAX_N}, got {g.n}")
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_edge_list(text: str) -> Graph:
    lines = text.splitlines()
    edges: list[tuple[int, int]] = []
    n_declared: int | None = None
    start = 0
    # optional first non-blank line holding just "n"
    for i, raw in enumerate(lines):
        if not raw.strip():
            continue
        parts = raw.split()
        if len(parts) == 1:
            n_declared = _parse_vertex(parts[0], i + 1, raw)
            start = i + 1
        break
    max_seen = -1
    for i in range(start, len(lines)):
        raw = lines[i]
        if not raw.strip() or raw.lstrip().startswith("#"):
            continue
        parts = raw.split()
        if len(parts) != 2:
            raise MalformedInput(f"expected 'u v', got {raw!r}", line=i + 1, offset=0)
        u = _parse_vertex(parts[0], i + 1, raw)
        v = _parse_vertex(parts[1], i + 1, raw)
        if u == v:
            raise MalformedInput(f"self-loop at vertex {u}", line=i + 1, offset=0)
        max_seen = max(max_seen, u, v)
        edges.append((u, v))
    n = n_declared if n_declared is not None else max_seen + 1
    if max_seen >= n:
        raise MalformedInput(f"vertex {max_seen} out of range for declared n={n}")
    return Graph(n, edges)


def _parse_vertex(token: str, line: int, raw: str) -> int:
    try:
        val = int(token)
    except ValueError:
        raise MalformedInput(
            f"bad vertex token {token!r}", line=line, offset=raw.find(token)
        ) from None
    if val < 0:
        raise MalformedInput(f"negative vertex {val}", line=line, offset=raw.find(token))
    return val


def edges_between(g: Graph, u_set: Iterable[int], v_set: Iterable[int]) -> int:
    """Number of edges of ``g`` with one end in each set (sets must be disjoint)."""
    us = set(u_set)
    vs = set(v_set)
    common = us & vs
    if common:
        raise OverlappingSets(f"sets share vertices {sorted(common)}")
    if len(vs) < len(us):
        us, vs = vs, us
    return sum(1 for u in us for w in g.adj[u] if w in vs)
