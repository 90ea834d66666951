"""Naive reference oracles used only by the test-suite.

Subgraph containment by brute-force enumeration of injective pattern maps,
longest cycle by trying every vertex ordering, planarity by searching for a
K5 or K3,3 minor. None of this shares code with the package detectors.
"""

from itertools import combinations, permutations

from planturan.graph import Graph, add_pendant, cycle_graph, disjoint_union


def theta_patterns(k):
    out = []
    for j in range(2, k // 2 + 1):
        out.append(cycle_graph(k).add_edges([(0, j)]))
    return out


def degree_two_pendants(h):
    return [add_pendant(h, v) for v in range(h.n) if h.degree(v) == 2]


def patterns(kind, k):
    """Every pattern graph of a family (isomorphic repeats are harmless)."""
    c = cycle_graph(k)
    if kind == "cycle":
        return [c]
    if kind == "cycle-plus":
        return [add_pendant(c, 0)]
    if kind == "two-cycles":
        return [disjoint_union([c, c])]
    if kind == "cycle-union-cycle-plus":
        return [disjoint_union([c, add_pendant(c, 0)])]
    if kind == "theta":
        return theta_patterns(k)
    if kind == "theta-plus":
        return [p for h in theta_patterns(k) for p in degree_two_pendants(h)]
    raise ValueError(kind)


def has_monomorphism(pattern: Graph, host: Graph) -> bool:
    """Is there an injective map V(pattern) -> V(host) preserving edges?"""
    if pattern.n > host.n or pattern.edge_count() > host.edge_count():
        return False
    order = list(range(pattern.n))
    padj = pattern.adjacency
    hadj = host.adjacency
    image = [-1] * pattern.n
    used = [False] * host.n

    def extend(i):
        if i == len(order):
            return True
        x = order[i]
        for y in range(host.n):
            if used[y]:
                continue
            if all(image[z] < 0 or image[z] in hadj[y] for z in padj[x]):
                image[x] = y
                used[y] = True
                if extend(i + 1):
                    return True
                used[y] = False
                image[x] = -1
        return False

    return extend(0)


def naive_contains(host, kind, k):
    return any(has_monomorphism(p, host) for p in patterns(kind, k))


def naive_circumference(g):
    best = 0
    for size in range(3, g.n + 1):
        for verts in combinations(range(g.n), size):
            first = verts[0]
            for rest in permutations(verts[1:]):
                cyc = (first,) + rest
                if all(g.has_edge(cyc[i], cyc[(i + 1) % size]) for i in range(size)):
                    best = size
                    break
            if best == size:
                break
    return best


def _partitions(n, parts):
    """Assignments of vertices to ``parts`` unlabeled blocks or to -1 (unused).

    Blocks are numbered in order of first use, so each partition appears once.
    """
    assign = [-1] * n

    def rec(v, used):
        if v == n:
            if used == parts:
                yield list(assign)
            return
        if n - v < parts - used:
            return
        assign[v] = -1
        yield from rec(v + 1, used)
        for b in range(min(used + 1, parts)):
            assign[v] = b
            yield from rec(v + 1, max(used, b + 1))
        assign[v] = -1

    yield from rec(0, 0)


def _branch_sets_minor(g, parts, complete_bipartite):
    adj = g.adjacency
    for assign in _partitions(g.n, parts):
        sets = [[v for v in range(g.n) if assign[v] == b] for b in range(parts)]
        if not all(_connected(adj, s) for s in sets):
            continue

        def touch(a, b):
            return any(w in adj[v] for v in sets[a] for w in sets[b])

        if not complete_bipartite:
            if all(touch(a, b) for a, b in combinations(range(parts), 2)):
                return True
            continue
        for side in combinations(range(6), 3):
            other = [b for b in range(6) if b not in side]
            if all(touch(a, b) for a in side for b in other):
                return True
    return False


def _connected(adj, verts):
    verts = set(verts)
    start = next(iter(verts))
    seen = {start}
    todo = [start]
    while todo:
        v = todo.pop()
        for w in adj[v]:
            if w in verts and w not in seen:
                seen.add(w)
                todo.append(w)
    return seen == verts


def naive_is_planar(g):
    """Wagner: planar iff no K5 and no K3,3 minor. Feasible for n <= 7."""
    if g.n >= 5 and _branch_sets_minor(g, 5, False):
        return False
    if g.n >= 6 and _branch_sets_minor(g, 6, True):
        return False
    return True
