"""Exact containment tests for the forbidden families C_k, C_k+, 2C_k,
C_k u C_k+, Theta_k and Theta_k+, plus circumference.

Every test enumerates exact ``k``-cycles. The enumeration works block by
block: a cycle lives inside one biconnected block, so a block is searched for
cycles through its highest-degree vertex, that vertex is dropped, and the
remainder is split into blocks again. Blocks with fewer than ``k`` vertices
are discarded. Inside a block the search is a DFS from the anchor pruned by
BFS distance back to it (see ``_kernels``).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import _kernels as K
from .graph import Graph


class Family(str, enum.Enum):
    CYCLE = "cycle"
    CYCLE_PLUS = "cycle-plus"
    TWO_CYCLES = "two-cycles"
    CYCLE_UNION_CYCLE_PLUS = "cycle-union-cycle-plus"
    THETA = "theta"
    THETA_PLUS = "theta-plus"


_MODE = {
    Family.CYCLE: K.CYCLE,
    Family.CYCLE_PLUS: K.CYCLE_PLUS,
    Family.TWO_CYCLES: K.TWO_CYCLES,
    Family.CYCLE_UNION_CYCLE_PLUS: K.UNION_PLUS,
    Family.THETA: K.THETA,
    Family.THETA_PLUS: K.THETA_PLUS,
}


@dataclass(frozen=True)
class ForbiddenFamily:
    kind: Family
    k: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", Family(self.kind))
        low = 4 if self.kind in (Family.THETA, Family.THETA_PLUS) else 3
        if self.k < low:
            raise ValueError(f"{self.kind.value} needs k >= {low}, got {self.k}")

    @property
    def min_order(self) -> int:
        """Number of vertices of the smallest member of the family."""
        k = self.k
        return {
            Family.CYCLE: k,
            Family.CYCLE_PLUS: k + 1,
            Family.TWO_CYCLES: 2 * k,
            Family.CYCLE_UNION_CYCLE_PLUS: 2 * k + 1,
            Family.THETA: k,
            Family.THETA_PLUS: k + 1,
        }[self.kind]

    def __str__(self) -> str:
        return f"{self.kind.value}({self.k})"


@dataclass(frozen=True)
class ContainmentWitness:
    """Vertices of a found pattern copy.

    ``cycles`` holds one or two vertex sequences in cyclic order; ``chord``
    and ``pendant`` (attachment vertex, leaf) are present for the families
    that have them.
    """

    family: ForbiddenFamily
    cycles: tuple[tuple[int, ...], ...]
    chord: Optional[tuple[int, int]] = None
    pendant: Optional[tuple[int, int]] = None

    def validate(self, g: Graph) -> bool:
        k = self.family.k
        used: set[int] = set()
        for cyc in self.cycles:
            if len(cyc) != k or len(set(cyc)) != k:
                return False
            if used & set(cyc):
                return False
            used |= set(cyc)
            if not all(g.has_edge(cyc[i], cyc[(i + 1) % k]) for i in range(k)):
                return False
        kind = self.family.kind
        want_cycles = 2 if kind in (Family.TWO_CYCLES, Family.CYCLE_UNION_CYCLE_PLUS) else 1
        if len(self.cycles) != want_cycles:
            return False
        first = self.cycles[0]
        if kind in (Family.THETA, Family.THETA_PLUS):
            if self.chord is None or not g.has_edge(*self.chord):
                return False
            a, b = self.chord
            if a not in first or b not in first:
                return False
            i, j = first.index(a), first.index(b)
            if (i - j) % k in (1, k - 1):
                return False
        if kind in (Family.CYCLE_PLUS, Family.THETA_PLUS, Family.CYCLE_UNION_CYCLE_PLUS):
            if self.pendant is None or not g.has_edge(*self.pendant):
                return False
            x, w = self.pendant
            if w in used or not any(x in c for c in self.cycles):
                return False
            if kind is Family.THETA_PLUS and x in self.chord:
                return False
        return True

    def to_json(self) -> dict:
        d: dict = {"family": self.family.kind.value, "k": self.family.k,
                   "cycles": [list(c) for c in self.cycles]}
        if self.chord is not None:
            d["chord"] = list(self.chord)
        if self.pendant is not None:
            d["pendant"] = list(self.pendant)
        return d


@dataclass
class _BlockWalk:
    """Work list of vertex sets, each a biconnected block still to search."""

    g: Graph
    min_size: int
    stack: list[frozenset[int]] = field(default_factory=list)

    def push_blocks_of(self, verts: frozenset[int]) -> None:
        for b in blocks(self.g, verts):
            if len(b) >= self.min_size:
                self.stack.append(b)


def blocks(g: Graph, verts: Optional[frozenset[int]] = None) -> list[frozenset[int]]:
    """Vertex sets of the biconnected blocks of the subgraph induced on ``verts``.

    Bridges count as two-vertex blocks; isolated vertices are left out.
    """
    adj = g.adjacency
    if verts is None:
        verts = frozenset(range(g.n))
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    out: list[frozenset[int]] = []
    counter = 0
    for root in sorted(verts):
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(sorted(adj[root] & verts)))]
        while stack:
            v, parent, nbrs = stack[-1]
            advanced = False
            for w in nbrs:
                if w == parent:
                    continue
                if w not in disc:
                    disc[w] = low[w] = counter
                    counter += 1
                    edge_stack.append((v, w))
                    stack.append((w, v, iter(sorted(adj[w] & verts))))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[v])
                if low[v] >= disc[parent]:
                    comp: set[int] = set()
                    while True:
                        e = edge_stack.pop()
                        comp.update(e)
                        if e == (parent, v):
                            break
                    out.append(frozenset(comp))
    return out


def _pick_anchor(g: Graph, block: frozenset[int]) -> int:
    adj = g.adjacency
    return min(block, key=lambda v: (-len(adj[v] & block), v))


def find(g: Graph, family: ForbiddenFamily) -> Optional[ContainmentWitness]:
    """A copy of some member of ``family`` in ``g``, or None if ``g`` is free."""
    k = family.k
    if g.n < family.min_order:
        return None
    indptr, indices = g.csr
    mode = _MODE[family.kind]
    out = np.zeros(2 * k + 4, dtype=np.int64)
    walk = _BlockWalk(g, k)
    walk.push_blocks_of(frozenset(range(g.n)))
    alive = np.zeros(g.n, dtype=np.uint8)
    while walk.stack:
        block = walk.stack.pop()
        anchor = _pick_anchor(g, block)
        alive[:] = 0
        alive[list(block)] = 1
        if K.cycles_through(indptr, indices, alive, anchor, k, mode, out):
            return _witness(family, out)
        walk.push_blocks_of(block - {anchor})
    return None


def _witness(family: ForbiddenFamily, out: np.ndarray) -> ContainmentWitness:
    k = family.k
    vals = [int(x) for x in out]
    first = tuple(vals[:k])
    a, b = vals[k], vals[k + 1]
    kind = family.kind
    if kind is Family.CYCLE:
        return ContainmentWitness(family, (first,))
    if kind is Family.CYCLE_PLUS:
        return ContainmentWitness(family, (first,), pendant=(a, b))
    if kind is Family.THETA:
        return ContainmentWitness(family, (first,), chord=(a, b))
    if kind is Family.THETA_PLUS:
        return ContainmentWitness(family, (first,), chord=(a, b), pendant=(vals[2 * k + 2], vals[2 * k + 3]))
    second = tuple(vals[k + 2:2 * k + 2])
    if kind is Family.TWO_CYCLES:
        return ContainmentWitness(family, (first, second))
    return ContainmentWitness(family, (first, second), pendant=(a, b))


def contains(g: Graph, family: ForbiddenFamily) -> bool:
    return find(g, family) is not None


def contains_cycle_k(g: Graph, k: int) -> bool:
    return contains(g, ForbiddenFamily(Family.CYCLE, k))


def contains_cycle_plus(g: Graph, k: int) -> bool:
    return contains(g, ForbiddenFamily(Family.CYCLE_PLUS, k))


def contains_two_cycles(g: Graph, k: int) -> bool:
    return contains(g, ForbiddenFamily(Family.TWO_CYCLES, k))


def contains_ck_union_ck_plus(g: Graph, k: int) -> bool:
    return contains(g, ForbiddenFamily(Family.CYCLE_UNION_CYCLE_PLUS, k))


def contains_theta(g: Graph, k: int) -> bool:
    return contains(g, ForbiddenFamily(Family.THETA, k))


def contains_theta_plus(g: Graph, k: int) -> bool:
    return contains(g, ForbiddenFamily(Family.THETA_PLUS, k))


def longest_cycle(g: Graph) -> tuple[int, ...]:
    """Vertices of a longest cycle in cyclic order (empty for forests)."""
    indptr, indices = g.csr
    best: tuple[int, ...] = ()
    out = np.zeros(max(g.n, 1), dtype=np.int64)
    alive = np.zeros(g.n, dtype=np.uint8)
    walk = _BlockWalk(g, 3)
    walk.push_blocks_of(frozenset(range(g.n)))
    while walk.stack:
        block = walk.stack.pop()
        if len(block) <= len(best):
            continue
        anchor = _pick_anchor(g, block)
        alive[:] = 0
        alive[list(block)] = 1
        length = K.longest_cycle_through(indptr, indices, alive, anchor, len(block), out)
        if length > len(best):
            best = tuple(int(x) for x in out[:length])
        walk.min_size = max(3, len(best) + 1)
        walk.push_blocks_of(block - {anchor})
    return best


def circumference(g: Graph) -> int:
    return len(longest_cycle(g))
