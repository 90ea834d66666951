"""Builders for the extremal planar graph families and proof witnesses.

Every triangulation builder (``T``, ``T_np``, ``L_np``) keeps the two apex
vertices of ``K_2 + P_{m-2}`` at labels 0 and 1, and edge ``(0, 1)`` is the
edge used when a block is glued onto the spine of the C_k counterexample.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Optional

from .graph import (
    Graph,
    GraphError,
    complement,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    identify_edge,
    join,
    join_vertex_to,
    path_graph,
    planar_faces,
)

GLUE_EDGE = (0, 1)


def T(m: int) -> Graph:  # noqa: N802
    """Plane triangulation ``K_2 + P_{m-2}``; apexes 0, 1, path 2..m-1."""
    if m < 3:
        raise GraphError(f"T(m) needs m >= 3, got {m}")
    g = join(complete_graph(2), path_graph(m - 2))
    return g.named(f"T{m}")


def T_faces(m: int) -> list[tuple[int, int, int]]:  # noqa: N802
    """The 2m-4 triangular faces of ``T(m)`` as sorted triples, sorted.

    Apex 0 sits above the path and apex 1 below it; the faces are the
    triangles on either side of each path edge plus the two end triangles
    through the apex edge. For m = 3 both faces have the triple (0, 1, 2).
    """
    if m < 3:
        raise GraphError(f"T(m) needs m >= 3, got {m}")
    faces = [(0, 1, 2), (0, 1, m - 1)]
    for i in range(2, m - 1):
        faces.append((0, i, i + 1))
        faces.append((1, i, i + 1))
    return sorted(faces)


def O(p: int) -> Graph:  # noqa: N802,E743
    """Maximal outerplanar graph with max degree at most 4.

    Serpentine triangulation of a p-gon: ``i ~ i+1`` and ``i ~ i+2``, the
    square of a path. Its outer cycle is 0, 2, 4, ..., then the odd labels
    back down to 1.
    """
    if p < 1:
        raise GraphError(f"O(p) needs p >= 1, got {p}")
    es = [(i, i + 1) for i in range(p - 1)] + [(i, i + 2) for i in range(p - 2)]
    return Graph.from_edges(p, es, name=f"O{p}")


def R(ell: int, k: int) -> Graph:  # noqa: N802
    """Spine graph: path v_1..v_{ell-2} plus adjacent u_1, u_2, both joined to
    v_1, v_k, v_{2(k-1)+1}, ..., v_{a(k-1)+1} with a = (ell-3) // (k-1).

    Labels: v_i is i-1, u_1 is ell-2, u_2 is ell-1.
    """
    if ell < 4:
        raise GraphError(f"R(ell, k) needs ell >= 4, got {ell}")
    if k < 3:
        raise GraphError(f"R(ell, k) needs k >= 3, got {k}")
    a = (ell - 3) // (k - 1)
    u1, u2 = ell - 2, ell - 1
    es = [(i, i + 1) for i in range(ell - 3)] + [(u1, u2)]
    for j in range(a + 1):
        v = j * (k - 1)
        es += [(u1, v), (u2, v)]
    return Graph.from_edges(ell, es, name=f"R{ell},{k}")


def R_edge_count(ell: int, k: int) -> int:  # noqa: N802
    return ell + 2 * ((ell - 3) // (k - 1))


def _stack_vertices(g: Graph, faces: list[tuple[int, int, int]]) -> Graph:
    es = list(g.edges)
    n = g.n
    for f in faces:
        es += [(n, x) for x in f]
        n += 1
    return Graph.from_edges(n, es)


def T_np(n: int, p: int) -> Graph:  # noqa: N802
    """``T(p)`` with ``n - p`` new vertices, each stacked in its own face.

    Faces are filled in the sorted order of ``T_faces(p)``.
    """
    if p < 4:
        raise GraphError(f"T_np needs p >= 4, got {p}")
    if not p <= n <= 3 * p - 4:
        raise GraphError(f"T_np(n, p) needs p <= n <= 3p-4, got n={n}, p={p}")
    g = _stack_vertices(T(p), T_faces(p)[: n - p])
    return g.named(f"T{n}^{p}")


def L_np(n: int, p_minus_1: int) -> Graph:  # noqa: N802
    """Even-k block: ``T(p-1)`` with an adjacent pair in its first face plus
    ``n - p - 1`` stacked vertices in further faces.

    In face (x, y, z) the first new vertex joins x, y, z and the second joins
    the first, x and y. Valid for ``2p <= n <= 3p - 6``.
    """
    p = p_minus_1 + 1
    if p < 5:
        raise GraphError(f"L_np needs p >= 5, got p={p}")
    if not 2 * p <= n <= 3 * p - 6:
        raise GraphError(f"L_np(n, p-1) needs 2p <= n <= 3p-6, got n={n}, p={p}")
    base = T(p - 1)
    faces = T_faces(p - 1)
    x, y, z = faces[0]
    a, b = base.n, base.n + 1
    g = Graph.from_edges(base.n + 2, list(base.edges) + [(a, x), (a, y), (a, z), (b, a), (b, x), (b, y)])
    g = _stack_vertices(g, faces[1: 1 + n - p - 1])
    return g.named(f"L{n}^{p - 1}")


@dataclass(frozen=True)
class ConstructionParams:
    """Parameters of the C_k counterexample for order ``n``.

    ``n - 4 = t * divisor + r`` with ``divisor = k - 6 + (k-1)//2``
    (3p-5 for k = 2p+1, 3p-7 for k = 2p).
    """

    k: int
    n: int
    p: int
    divisor: int
    t: int
    r: int
    parity: int

    @classmethod
    def from_kn(cls, k: int, n: int) -> "ConstructionParams":
        if k < 3:
            raise GraphError(f"k must be >= 3, got {k}")
        divisor = k - 6 + (k - 1) // 2
        if divisor <= 0:
            raise GraphError(f"k={k} too small for the spine construction")
        if n < 4:
            raise GraphError(f"n must be >= 4, got {n}")
        t, r = divmod(n - 4, divisor)
        return cls(k=k, n=n, p=k // 2, divisor=divisor, t=t, r=r, parity=k % 2)

    @property
    def spine_order(self) -> int:
        return self.t + 4

    @property
    def a(self) -> int:
        """Index of the last spine attachment, floor((ell - 3) / (k - 1))."""
        return (self.spine_order - 3) // (self.k - 1)

    @property
    def small_regime_max(self) -> int:
        return self.k - 5 + (self.k - 1) // 2

    def expected_edges(self) -> int:
        return 3 * self.n - 3 * self.t + 2 * ((self.t + 1) // (self.k - 1)) - min(self.r + 8, 9)


def _full_block(k: int) -> Graph:
    p = k // 2
    return T_np(3 * p - 4, p) if k % 2 else L_np(3 * p - 6, p - 1)


def _last_block(k: int, r: int) -> Graph:
    p = k // 2
    if r <= 1:
        return complete_graph(r + 2)
    if r <= k - 3:
        return T(r + 2)
    return T_np(r + 2, p) if k % 2 else L_np(r + 2, p - 1)


def counterexample_blocks(k: int, n: int) -> list[Graph]:
    """H_1, ..., H_{t+1}: the blocks glued along the spine."""
    cp = ConstructionParams.from_kn(k, n)
    return [_full_block(k)] * cp.t + [_last_block(k, cp.r)]


def counterexample_Ck(k: int, n: int) -> Graph:  # noqa: N802
    """Planar C_k-free graph on ``n`` vertices with
    ``3n - 3t + 2*floor((t+1)/(k-1)) - min(r+8, 9)`` edges.

    Block H_i is glued onto spine edge v_i v_{i+1} of ``R(t+4, k)`` by
    identifying its edge (0, 1) with (v_i, v_{i+1}).
    """
    if k < 11:
        raise GraphError(f"counterexample_Ck needs k >= 11, got {k}")
    cp = ConstructionParams.from_kn(k, n)
    if n < k - 4 + (k - 1) // 2:
        raise GraphError(f"counterexample_Ck needs n >= {k - 4 + (k - 1) // 2}, got {n}")
    g = R(cp.spine_order, k)
    for i, h in enumerate(counterexample_blocks(k, n)):
        g = identify_edge(g, (i, i + 1), h, GLUE_EDGE)
    if g.n != n:
        raise AssertionError(f"built {g.n} vertices, expected {n}")
    return g.named(f"counterexample_C{k}_n{n}")


def small_regime_Ck(k: int, n: int) -> Graph:  # noqa: N802
    """C_k-free triangulation for ``k <= n <= k - 5 + floor((k-1)/2)``."""
    p = k // 2
    if k < 11 or not k <= n <= k - 5 + (k - 1) // 2:
        raise GraphError(f"no small-regime triangulation for k={k}, n={n}")
    return T_np(n, p) if k % 2 else L_np(n, p - 1)


# -- proof witnesses ---------------------------------------------------------

def G_star(k: int, n: int) -> Graph:  # noqa: N802
    """``K_1 + (t O_{k-2} u O_eps)`` for ``k+1 <= n <= 2k``."""
    if not k + 1 <= n <= 2 * k:
        raise GraphError(f"G_star needs k+1 <= n <= 2k, got k={k}, n={n}")
    if n <= 2 * k - 3:
        t, eps = 1, n - k + 1
    else:
        t, eps = 2, n - 2 * k + 3
    g = join(empty_graph(1), disjoint_union([O(k - 2)] * t + [O(eps)]))
    return g.named(f"G*_{k},{n}")


def G_star_edges(k: int, n: int) -> int:  # noqa: N802
    if n <= 2 * k - 3:
        return 3 * n - 9
    return 3 * n - 11 if n == 2 * k - 2 else 3 * n - 12


def C8_plus_chords() -> Graph:  # noqa: N802
    # v_1..v_8 are 0..7; chords v_i v_{i+2} for i = 1, 3, 5
    return cycle_graph(8).add_edges([(0, 2), (2, 4), (4, 6)]).named("C8+chords")


def M(n: int) -> Graph:  # noqa: N802
    """``K_1 + (floor((n-1)/2) K_2 u (n-1 mod 2) K_1)``, a friendship-type graph."""
    if n < 1:
        raise GraphError("M(n) needs n >= 1")
    parts = [complete_graph(2)] * ((n - 1) // 2) + [empty_graph(1)] * ((n - 1) % 2)
    return join(empty_graph(1), disjoint_union(parts)).named(f"M{n}")


def H_star_12() -> Graph:  # noqa: N802
    return cycle_graph(12).add_edges([(i, (i + 2) % 12) for i in range(0, 12, 2)]).named("H*12")


def two_K4() -> Graph:  # noqa: N802
    return disjoint_union([complete_graph(4)] * 2).named("2K4")


def K23() -> Graph:  # noqa: N802
    return complete_bipartite(2, 3).named("K2,3")


def K2_join_coK3() -> Graph:  # noqa: N802
    return join(complete_graph(2), empty_graph(3)).named("K2+coK3")


def C6_complement() -> Graph:  # noqa: N802
    return complement(cycle_graph(6)).named("co-C6")


def K2m(m: int) -> Graph:  # noqa: N802
    return complete_bipartite(2, m).named(f"K2,{m}")


def lemma31_glue(k: int, base: Graph, v: int = 0) -> Graph:
    """Attach ``O_{k-2} u K_2`` (or ``k`` isolated vertices when k = 3) to
    vertex ``v`` of ``base``; adds k vertices and 3k-6 edges."""
    if k < 3:
        raise GraphError("k must be >= 3")
    extra = empty_graph(3) if k == 3 else disjoint_union([O(k - 2), complete_graph(2)])
    return join_vertex_to(base, v, extra)


def lemma42a_glue(k: int, base: Graph, v: int = 0) -> Graph:
    """Attach ``2 O_{k-2} u 2 K_2`` to ``v``; adds 2k vertices, 6k-12 edges."""
    if k < 4:
        raise GraphError("k must be >= 4")
    extra = disjoint_union([O(k - 2), O(k - 2), complete_graph(2), complete_graph(2)])
    return join_vertex_to(base, v, extra)


def lemma42b_glue(k: int, base: Graph, v: int = 0) -> Graph:
    """Attach ``O_{2k-2} u K_2`` to ``v``; adds 2k vertices, 6k-6 edges."""
    if k < 4:
        raise GraphError("k must be >= 4")
    return join_vertex_to(base, v, disjoint_union([O(2 * k - 2), complete_graph(2)]))


def lemma51a_glue(k: int, base: Graph, v: int = 0) -> Graph:
    """Same attachment as ``lemma31_glue`` (k >= 4); adds 3k-6 edges."""
    if k < 4:
        raise GraphError("k must be >= 4")
    return lemma31_glue(k, base, v)


def lemma51b_glue(k: int, t: int, base: Graph, v: int = 0) -> Graph:
    """Attach a star ``K_{1,t-1}`` to ``v``; adds t vertices and 2t-1 edges."""
    if k < 5 or t not in (k - 2, k - 1):
        raise GraphError(f"lemma51b needs k >= 5 and t in {{k-2, k-1}}, got k={k}, t={t}")
    star = join(empty_graph(1), empty_graph(t - 1))
    return join_vertex_to(base, v, star)


def lemma51c_anchor(base: Graph) -> tuple[int, int]:
    """Two vertices two steps apart on a non-triangular face of ``base``.

    Faces come from a fixed planar embedding, visited in order of their
    sorted boundary; the pair must also be non-adjacent in ``base``.
    """
    faces = sorted(planar_faces(base), key=lambda f: (sorted(f), len(f)))
    for face in faces:
        if len(face) <= 3:
            continue
        m = len(face)
        for i in range(m):
            u1, u2 = face[i], face[(i + 2) % m]
            if u1 != u2 and not base.has_edge(u1, u2):
                return (min(u1, u2), max(u1, u2))
    raise GraphError("base graph has no non-triangular face with a usable vertex pair")


def lemma51c_glue(t: int, base: Graph) -> Graph:
    """Add ``t`` new vertices inside one non-triangular face, each joined to
    the same pair ``u1, u2``; adds 2t edges."""
    if t not in (2, 3):
        raise GraphError(f"lemma51c needs t in {{2, 3}}, got {t}")
    u1, u2 = lemma51c_anchor(base)
    es = list(base.edges)
    for i in range(t):
        es += [(u1, base.n + i), (u2, base.n + i)]
    return Graph.from_edges(base.n + t, es)


@dataclass(frozen=True)
class CatalogEntry:
    build: Callable[..., Graph]
    expected_edges: Optional[Callable[..., int]]
    citation: str
    params: tuple[str, ...] = ()


def J_substitute() -> Graph:
    """A 7-vertex planar Theta_4-free graph with 11 edges, found by exhaustive
    search (11 is the maximum at n = 7)."""
    from .detectors import Family, ForbiddenFamily
    from .extremal import exact_extremal

    return exact_extremal(7, ForbiddenFamily(Family.THETA, 4)).witness.named("J-substitute")


CATALOG: dict[str, CatalogEntry] = {
    "G-star": CatalogEntry(G_star, G_star_edges,
                           "G* := K_1 + (t O_{k-2} u O_eps), C_k^+-free", ("k", "n")),
    "c8-plus-chords": CatalogEntry(C8_plus_chords, lambda: 11,
                                   "C_8 plus v_i v_{i+2}, i in {1,3,5}; ex_P(8,C_4) = 11"),
    "M": CatalogEntry(M, lambda n: (n - 1) + (n - 1) // 2,
                      "M_n = K_1 + (floor((n-1)/2) K_2 u ...), C_4^+-free", ("n",)),
    "H-star-12": CatalogEntry(H_star_12, lambda: 18,
                              "H*: C_12 plus v_i v_{i+2}, i odd; e(H*) = 18"),
    "two-K4": CatalogEntry(two_K4, lambda: 12, "2K_4 is C_4^+-free"),
    "K23": CatalogEntry(K23, lambda: 6, "K_{2,3} is Theta_4-free"),
    "K2-joins": CatalogEntry(K2_join_coK3, lambda: 7, "K_2 + co-K_3 is Theta_4^+-free"),
    "C6-complement": CatalogEntry(C6_complement, lambda: 9, "J := co-C_6 when |U| = 2, Theta_4-free"),
    "J-substitute": CatalogEntry(J_substitute, lambda: 11,
                                 "J: 7-vertex Theta_4-free planar graph with 11 edges, search-derived"),
    "K2m": CatalogEntry(K2m, lambda m: 2 * m, "K_{2,n-2} is Theta_4-free", ("m",)),
}


def witness(name: str, **params) -> Graph:
    """Build a named proof-witness graph from ``CATALOG``."""
    try:
        entry = CATALOG[name]
    except KeyError:
        raise GraphError(f"unknown witness {name!r}; known: {sorted(CATALOG)}") from None
    missing = [p for p in entry.params if p not in params]
    if missing:
        raise GraphError(f"witness {name!r} needs parameters {missing}")
    return entry.build(**{p: int(params[p]) for p in entry.params})


def theta_graph(k: int, j: int) -> Graph:
    """``C_k`` (vertices 0..k-1) with chord ``0 - j``, 2 <= j <= k-2."""
    if k < 4 or not 2 <= j <= k - 2:
        raise GraphError(f"no theta graph with k={k}, chord to {j}")
    return cycle_graph(k).add_edges([(0, j)]).named(f"Theta{k},{j}")


def all_edge_deletions(g: Graph, count: int) -> list[Graph]:
    """Every graph obtained from ``g`` by deleting ``count`` edges."""
    es = g.sorted_edges()
    return [Graph.from_edges(g.n, [e for e in es if e not in drop])
            for drop in map(set, combinations(es, count))]
