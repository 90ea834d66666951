"""Canonical labeling of small graphs by individualization-refinement.

Graphs are given as adjacency bitmasks (``adj[v]`` has bit ``w`` set iff
``vw`` is an edge). The canonical code is the largest adjacency code over
all leaves of the refinement tree; twins in a cell are interchangeable, so
only one of each twin class is individualized.
"""

from __future__ import annotations

from .graph import Graph


def _pair_bits(n: int) -> list[list[int]]:
    bit = [[0] * n for _ in range(n)]
    b = 0
    for j in range(n):
        for i in range(j):
            bit[i][j] = bit[j][i] = 1 << b
            b += 1
    return bit


_BITS: dict[int, list[list[int]]] = {}


def pair_bits(n: int) -> list[list[int]]:
    if n not in _BITS:
        _BITS[n] = _pair_bits(n)
    return _BITS[n]


def _refine(adj: list[int], colors: list[int]) -> list[int]:
    n = len(adj)
    ncolors = len(set(colors))
    while True:
        sig = []
        for v in range(n):
            a = adj[v]
            nb = sorted(colors[w] for w in range(n) if a >> w & 1)
            sig.append((colors[v], tuple(nb)))
        rank = {s: i for i, s in enumerate(sorted(set(sig)))}
        colors = [rank[s] for s in sig]
        if len(rank) == ncolors:
            return colors
        ncolors = len(rank)


def _code(adj: list[int], order: list[int]) -> int:
    n = len(adj)
    bits = pair_bits(n)
    code = 0
    for j in range(n):
        aj = adj[order[j]]
        for i in range(j):
            if aj >> order[i] & 1:
                code |= bits[i][j]
    return code


def _search(adj: list[int], colors: list[int]) -> tuple[int, list[int]]:
    n = len(adj)
    colors = _refine(adj, colors)
    if len(set(colors)) == n:
        order = sorted(range(n), key=colors.__getitem__)
        return _code(adj, order), order
    counts: dict[int, int] = {}
    for c in colors:
        counts[c] = counts.get(c, 0) + 1
    target = min(c for c, m in counts.items() if m > 1)
    cell = [v for v in range(n) if colors[v] == target]
    reps: list[int] = []
    for v in cell:
        if not any((adj[v] & ~(1 << u)) == (adj[u] & ~(1 << v)) for u in reps):
            reps.append(v)
    best = (-1, [])
    for v in reps:
        nc = [2 * c + 1 for c in colors]
        nc[v] = 2 * colors[v]
        cand = _search(adj, nc)
        if cand[0] > best[0]:
            best = cand
    return best


def canonical_form(adj: list[int]) -> tuple[int, list[int]]:
    """(code, order): ``order[i]`` is the vertex placed at canonical label i."""
    n = len(adj)
    if n == 0:
        return 0, []
    degs = [bin(a).count("1") for a in adj]
    return _search(adj, degs)


def adjacency_masks(g: Graph) -> list[int]:
    adj = [0] * g.n
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def canonical_code(g: Graph) -> int:
    return canonical_form(adjacency_masks(g))[0]


def canonical_graph(g: Graph) -> Graph:
    """The canonical representative of the isomorphism class of ``g``."""
    _, order = canonical_form(adjacency_masks(g))
    pos = {v: i for i, v in enumerate(order)}
    return Graph.from_edges(g.n, ((pos[u], pos[v]) for u, v in g.edges), g.name)


def graph_from_code(n: int, code: int) -> Graph:
    bits = pair_bits(n)
    return Graph.from_edges(n, ((i, j) for j in range(n) for i in range(j) if code & bits[i][j]))
