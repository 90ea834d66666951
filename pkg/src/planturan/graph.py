"""Simple undirected graphs on dense integer labels, plus the elementary
operations used by every construction (join, union, pendant, edge
identification), planarity, graph6 and DOT serialization.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional, Sequence

import networkx as nx
import numpy as np

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised for malformed graphs or invalid vertex/edge arguments."""


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph with vertices ``0 .. n-1``.

    ``edges`` holds normalized pairs ``(u, v)`` with ``u < v``. Two graphs
    compare equal iff they have the same order and the same labeled edge set;
    ``name`` is a provenance tag and takes no part in equality.
    """

    n: int
    edges: frozenset[Edge]
    name: Optional[str] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if not (0 <= u < v < self.n):
                raise GraphError(f"edge {(u, v)} not normalized or out of range for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], name: Optional[str] = None) -> "Graph":
        norm = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"self-loop at {u}")
            norm.add(_norm(u, v))
        return cls(n, frozenset(norm), name)

    def named(self, name: str) -> "Graph":
        return Graph(self.n, self.edges, name)

    def __len__(self) -> int:
        return self.n

    def edge_count(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edges

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """(indptr, indices) with sorted neighbor lists, as int64 arrays."""
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        for v, a in enumerate(self.adjacency):
            indptr[v + 1] = indptr[v] + len(a)
        indices = np.empty(indptr[-1], dtype=np.int64)
        for v, a in enumerate(self.adjacency):
            indices[indptr[v]:indptr[v + 1]] = sorted(a)
        return indptr, indices

    def subgraph(self, keep: Iterable[int]) -> "Graph":
        """Induced subgraph, relabeled densely in increasing label order."""
        keep = sorted(set(keep))
        pos = {v: i for i, v in enumerate(keep)}
        es = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        return Graph.from_edges(len(keep), es)

    def add_edges(self, extra: Iterable[Sequence[int]]) -> "Graph":
        return Graph.from_edges(self.n, list(self.edges) + [tuple(e) for e in extra], self.name)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabel needs a permutation of the vertex set")
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges), self.name)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    @classmethod
    def from_networkx(cls, g: nx.Graph, name: Optional[str] = None) -> "Graph":
        nodes = sorted(g.nodes())
        pos = {v: i for i, v in enumerate(nodes)}
        return cls.from_edges(len(nodes), ((pos[u], pos[v]) for u, v in g.edges()), name)

    def __repr__(self) -> str:
        tag = f" {self.name!r}" if self.name else ""
        return f"<Graph{tag} n={self.n} e={len(self.edges)}>"


# -- elementary graphs -------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n, frozenset())


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2), name=f"K{n}")


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)), name=f"P{n}")


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)), name=f"C{n}")


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)), name=f"K{a},{b}")


def complement(g: Graph) -> Graph:
    es = [e for e in combinations(range(g.n), 2) if e not in g.edges]
    return Graph.from_edges(g.n, es)


# -- operations --------------------------------------------------------------

def join(g: Graph, h: Graph) -> Graph:
    """``g + h``: disjoint union plus every edge between the two sides."""
    off = g.n
    es = list(g.edges)
    es += [(u + off, v + off) for u, v in h.edges]
    es += [(x, y + off) for x in range(g.n) for y in range(h.n)]
    return Graph.from_edges(g.n + h.n, es)


def disjoint_union(gs: Sequence[Graph]) -> Graph:
    es: list[Edge] = []
    off = 0
    for g in gs:
        es += [(u + off, v + off) for u, v in g.edges]
        off += g.n
    return Graph.from_edges(off, es)


def add_pendant(g: Graph, v: int) -> Graph:
    """New vertex ``n`` joined only to ``v``."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} not in graph of order {g.n}")
    return Graph.from_edges(g.n + 1, list(g.edges) + [(v, g.n)])


def join_vertex_to(g: Graph, v: int, h: Graph) -> Graph:
    """Disjoint union of ``g`` and ``h`` with ``v`` joined to every vertex of ``h``.

    This is the shared step of all the recursive gluing constructions.
    """
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} not in graph of order {g.n}")
    base = disjoint_union([g, h])
    return base.add_edges((v, g.n + i) for i in range(h.n))


def identify_edge_with_maps(g: Graph, e_g: Edge, h: Graph, e_h: Edge) -> tuple[Graph, list[int], list[int]]:
    """Glue ``h`` onto ``g`` by merging edge ``e_h`` into ``e_g``.

    ``e_h[0]`` is merged with ``e_g[0]`` and ``e_h[1]`` with ``e_g[1]``. The
    vertices of ``g`` keep their labels; the remaining vertices of ``h`` get
    ``g.n, g.n+1, ...`` in increasing order. Returns the glued graph and the
    label maps for ``g`` and ``h``.
    """
    if not g.has_edge(*e_g):
        raise GraphError(f"{e_g} is not an edge of the first graph")
    if not h.has_edge(*e_h):
        raise GraphError(f"{e_h} is not an edge of the second graph")
    hmap = [-1] * h.n
    hmap[e_h[0]] = e_g[0]
    hmap[e_h[1]] = e_g[1]
    nxt = g.n
    for v in range(h.n):
        if hmap[v] < 0:
            hmap[v] = nxt
            nxt += 1
    es = list(g.edges) + [(hmap[u], hmap[v]) for u, v in h.edges]
    return Graph.from_edges(nxt, es), list(range(g.n)), hmap


def identify_edge(g: Graph, e_g: Edge, h: Graph, e_h: Edge) -> Graph:
    return identify_edge_with_maps(g, e_g, h, e_h)[0]


def degree_sequence(g: Graph) -> list[int]:
    return sorted(len(a) for a in g.adjacency)


def is_planar(g: Graph) -> bool:
    """Exact planarity decision (left-right criterion via networkx)."""
    if g.n <= 4:
        return True
    if g.n >= 3 and g.edge_count() > 3 * g.n - 6:
        return False
    return nx.check_planarity(g.to_networkx())[0]


def planar_faces(g: Graph) -> list[list[int]]:
    """Face boundary walks of some planar embedding of ``g``.

    Raises GraphError if ``g`` is not planar. Isolated vertices are ignored.
    """
    ok, emb = nx.check_planarity(g.to_networkx())
    if not ok:
        raise GraphError("graph is not planar")
    seen: set[tuple[int, int]] = set()
    faces = []
    for u, v in emb.edges():
        if (u, v) in seen:
            continue
        faces.append(emb.traverse_face(u, v, mark_half_edges=seen))
    return faces


# -- serialization -----------------------------------------------------------

def _encode_n(n: int) -> list[int]:
    if n < 63:
        return [n]
    if n < 258048:
        return [63] + [(n >> s) & 63 for s in (12, 6, 0)]
    if n < 68719476736:
        return [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]
    raise GraphError("graph too large for graph6")


def to_graph6(g: Graph) -> str:
    """graph6 string (no header, no newline)."""
    bits = [1 if (i, j) in g.edges else 0 for j in range(g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    data = _encode_n(g.n)
    for i in range(0, len(bits), 6):
        x = 0
        for b in bits[i:i + 6]:
            x = (x << 1) | b
        data.append(x)
    return "".join(chr(x + 63) for x in data)


def from_graph6(s: str) -> Graph:
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    vals = [ord(c) - 63 for c in s]
    if not vals or any(not 0 <= x <= 63 for x in vals):
        raise GraphError(f"invalid graph6 string {s!r}")
    if vals[0] < 63:
        n, body = vals[0], vals[1:]
    elif len(vals) > 1 and vals[1] < 63:
        if len(vals) < 4:
            raise GraphError("truncated graph6 header")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    else:
        if len(vals) < 8:
            raise GraphError("truncated graph6 header")
        n = 0
        for x in vals[2:8]:
            n = (n << 6) | x
        body = vals[8:]
    need = n * (n - 1) // 2
    if len(body) != (need + 5) // 6:
        raise GraphError(f"graph6 body has {len(body)} bytes, expected {(need + 5) // 6}")
    bits = [(x >> s) & 1 for x in body for s in range(5, -1, -1)]
    es = []
    k = 0
    for j in range(n):
        for i in range(j):
            if bits[k]:
                es.append((i, j))
            k += 1
    if any(bits[need:]):
        raise GraphError("nonzero padding bits in graph6 string")
    return Graph.from_edges(n, es)


def to_dot(g: Graph, name: Optional[str] = None) -> str:
    title = name or g.name or "G"
    lines = [f'graph "{title}" {{']
    lines += [f"  {v};" for v in range(g.n)]
    lines += [f"  {u} -- {v};" for u, v in g.sorted_edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"
