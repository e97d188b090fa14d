"""Finite simple graphs: representation, parsing, subgraphs and generators.

Vertices are dense integer ids 0..n-1. Graphs are immutable after
construction and validated on construction, so every downstream
computation may assume a well-formed adjacency structure.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

VertexSet = tuple[int, ...]


class EdgeListParseError(ValueError):
    """Raised for malformed edge-list text, with the offending line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: ``n`` vertices, sorted adjacency tuples.

    Invariants (checked on construction): no self-loops, symmetric
    adjacency, all neighbor ids in ``[0, n)``, each adjacency tuple
    strictly increasing.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be >= 0, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        for v, nbrs in enumerate(self.adj):
            prev = -1
            for u in nbrs:
                if u == v:
                    raise ValueError(f"self-loop at vertex {v}")
                if not 0 <= u < self.n:
                    raise ValueError(f"neighbor {u} of vertex {v} out of range")
                if u <= prev:
                    raise ValueError(f"adjacency of vertex {v} not strictly sorted")
                prev = u
        for v, nbrs in enumerate(self.adj):
            for u in nbrs:
                if v not in self.neighbor_sets[u]:
                    raise ValueError(f"asymmetric edge {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from undirected edges; duplicates are merged."""
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(nbrs) for nbrs in self.adj)

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        """Per-vertex neighbor sets as bitmasks (bit u set iff u adjacent)."""
        masks = []
        for nbrs in self.adj:
            m = 0
            for u in nbrs:
                m |= 1 << u
            masks.append(m)
        return tuple(masks)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges as sorted (u, v) pairs with u < v, lexicographic."""
        return tuple((v, u) for v in range(self.n) for u in self.adj[v] if u > v)

    def degree(self, x: int) -> int:
        return len(self.adj[self._check_vertex(x)])

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbor_sets[self._check_vertex(u)]

    def _check_vertex(self, x: int) -> int:
        if not 0 <= x < self.n:
            raise ValueError(f"vertex {x} out of range for n={self.n}")
        return x

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edge_count})"


def induced_subgraph(G: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph induced on ``vertices``, relabeled 0..|S|-1 in ascending id order."""
    members = sorted(set(vertices))
    for v in members:
        G._check_vertex(v)
    local = {v: i for i, v in enumerate(members)}
    adj = []
    for v in members:
        nbrs = G.neighbor_sets[v]
        adj.append(tuple(local[u] for u in members if u in nbrs and u != v))
    return Graph(len(members), tuple(adj))


def unit_sphere(G: Graph, x: int) -> tuple[Graph, VertexSet]:
    """Subgraph induced on the neighbors of ``x``, plus local-id -> original-id map."""
    G._check_vertex(x)
    members = G.adj[x]
    return induced_subgraph(G, members), members


# ---------------------------------------------------------------------------
# Text formats.  Edge list: lines "u v", optional "n <count>" header, '#'
# comments and blank lines allowed.  JSON: {"n": int, "edges": [[u, v], ...]}.
# Both emitters sort edges so emit(parse(emit(G))) round-trips bit-exactly.
# ---------------------------------------------------------------------------

def from_edge_list(text: str) -> Graph:
    """Parse edge-list text; vertex count is 1 + max id unless a header sets it."""
    declared_n: int | None = None
    edges: list[tuple[int, int]] = []
    max_id = -1
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "n":
            if len(tokens) != 2:
                raise EdgeListParseError(line_no, "header must be 'n <count>'")
            try:
                declared_n = int(tokens[1])
            except ValueError:
                raise EdgeListParseError(line_no, f"non-integer count {tokens[1]!r}") from None
            if declared_n < 0:
                raise EdgeListParseError(line_no, "vertex count must be >= 0")
            continue
        if len(tokens) != 2:
            raise EdgeListParseError(line_no, f"expected 'u v', got {line!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise EdgeListParseError(line_no, f"non-integer token in {line!r}") from None
        if u == v:
            raise EdgeListParseError(line_no, f"self-loop at vertex {u}")
        if u < 0 or v < 0:
            raise EdgeListParseError(line_no, f"negative vertex id in {line!r}")
        edges.append((u, v))
        max_id = max(max_id, u, v)
    n = declared_n if declared_n is not None else max_id + 1
    if max_id >= n:
        raise ValueError(f"edge endpoint {max_id} exceeds declared n={n}")
    return Graph.from_edges(n, edges)


def to_edge_list(G: Graph) -> str:
    lines = [f"n {G.n}"]
    lines.extend(f"{u} {v}" for u, v in G.edges)
    return "\n".join(lines) + "\n"


def from_json(text: str) -> Graph:
    obj = json.loads(text)
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise ValueError('graph JSON must be {"n": int, "edges": [[u, v], ...]}')
    return Graph.from_edges(int(obj["n"]), [(int(u), int(v)) for u, v in obj["edges"]])


def to_json(G: Graph) -> str:
    return json.dumps({"n": G.n, "edges": [list(e) for e in G.edges]})


def loads(text: str) -> Graph:
    """Parse either format; JSON is recognized by a leading '{'."""
    if text.lstrip().startswith("{"):
        return from_json(text)
    return from_edge_list(text)


def load(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read())


# ---------------------------------------------------------------------------
# Generators.  All deterministic given (kind, params, seed).
# ---------------------------------------------------------------------------

def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"complete graph needs n >= 1, got {n}")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(n: int) -> Graph:
    """Star on n vertices: center 0 joined to 1..n-1."""
    if n < 2:
        raise ValueError(f"star needs n >= 2, got {n}")
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def octahedron() -> Graph:
    # K_{2,2,2}: all pairs except the three antipodal ones.
    non_edges = {(0, 1), (2, 3), (4, 5)}
    edges = [(i, j) for i in range(6) for j in range(i + 1, 6) if (i, j) not in non_edges]
    return Graph.from_edges(6, edges)


_ICOSAHEDRON_EDGES = (
    # north pole 0, upper ring 1-5, lower ring 6-10, south pole 11
    [(0, i) for i in range(1, 6)]
    + [(1 + i, 1 + (i + 1) % 5) for i in range(5)]
    + [(6 + i, 6 + (i + 1) % 5) for i in range(5)]
    + [(1 + i, 6 + i) for i in range(5)]
    + [(1 + i, 6 + (i + 1) % 5) for i in range(5)]
    + [(11, 6 + i) for i in range(5)]
)


def icosahedron() -> Graph:
    return Graph.from_edges(12, _ICOSAHEDRON_EDGES)


def random_tree(n: int, seed: int) -> Graph:
    """Random recursive tree: vertex v >= 1 attaches to a uniform earlier vertex."""
    if n < 1:
        raise ValueError(f"tree needs n >= 1, got {n}")
    rng = np.random.default_rng(seed)
    edges = [(int(rng.integers(0, v)), v) for v in range(1, n)]
    return Graph.from_edges(n, edges)


def erdos_renyi(n: int, q: float, seed: int) -> Graph:
    """G(n, q): each unordered pair is an edge independently with probability q."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if not 0.0 <= q <= 1.0:
        raise ValueError(f"edge probability must be in [0, 1], got {q}")
    rng = np.random.default_rng(seed)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    draws = rng.random(len(pairs))
    return Graph.from_edges(n, [p for p, d in zip(pairs, draws) if d < q])


GENERATOR_KINDS = (
    "cycle", "path", "tree_random", "complete", "star",
    "octahedron", "icosahedron", "erdos_renyi",
)


def generate(kind: str, n: int | None = None, q: float | None = None,
             seed: int = 0) -> Graph:
    """Dispatch to a named generator; deterministic given (kind, params, seed)."""
    def need_n():
        if n is None:
            raise ValueError(f"generator {kind!r} needs n")
        return n

    if kind == "cycle":
        return cycle_graph(need_n())
    if kind == "path":
        return path_graph(need_n())
    if kind == "complete":
        return complete_graph(need_n())
    if kind == "star":
        return star_graph(need_n())
    if kind == "tree_random":
        return random_tree(need_n(), seed)
    if kind == "octahedron":
        return octahedron()
    if kind == "icosahedron":
        return icosahedron()
    if kind == "erdos_renyi":
        if q is None:
            raise ValueError("erdos_renyi needs edge probability q")
        return erdos_renyi(need_n(), q, seed)
    raise ValueError(f"unknown generator kind {kind!r}; known: {', '.join(GENERATOR_KINDS)}")
