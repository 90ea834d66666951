"""Exact planar Turán numbers for small orders by exhaustive search.

The search walks the isomorphism classes of planar F-free graphs on ``n``
vertices, starting from the empty graph and adding one edge at a time. Every
planar F-free graph is reachable this way because both properties are closed
under edge deletion. A class is visited once (canonical codes are memoized),
and a class is not expanded when its edge count plus the number of edges
that could still be added individually cannot beat the best value found.
"""

from __future__ import annotations

import logging
import os
import time
from dataclasses import dataclass
from typing import Iterator, Optional

from . import constructions as C
from .canon import adjacency_masks, canonical_form, graph_from_code, pair_bits
from .detectors import ForbiddenFamily, contains
from .graph import Graph, is_planar

log = logging.getLogger(__name__)

DEFAULT_CAP = 9
CAP_ENV = "PLANTURAN_SEARCH_CAP"


class SearchCapError(ValueError):
    pass


def search_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    return int(raw) if raw else DEFAULT_CAP


def _check_cap(n: int, cap_override: Optional[int]) -> None:
    cap = cap_override if cap_override is not None else search_cap()
    if cap != DEFAULT_CAP:
        log.warning("extremal search cap raised to %d (default %d); runtime grows super-exponentially",
                    cap, DEFAULT_CAP)
    if n > cap:
        raise SearchCapError(f"n={n} exceeds the search cap {cap}")
    if n < 1:
        raise SearchCapError("n must be positive")


@dataclass(frozen=True)
class ExtremalResult:
    n: int
    family: ForbiddenFamily
    value: int
    witness: Graph
    nodes: int
    elapsed: float

    def to_json(self) -> dict:
        from .graph import to_graph6
        return {
            "n": self.n,
            "family": self.family.kind.value,
            "k": self.family.k,
            "value": self.value,
            "witness_graph6": to_graph6(self.witness),
            "nodes_explored": self.nodes,
            "elapsed_seconds": round(self.elapsed, 3),
        }


class _Explorer:
    def __init__(self, n: int, family: ForbiddenFamily):
        self.n = n
        self.family = family
        self.pairs = [(i, j) for j in range(n) for i in range(j)]
        self.bits = pair_bits(n)
        self.nodes = 0
        self._ok: dict[int, bool] = {}

    def graph(self, code: int) -> Graph:
        return graph_from_code(self.n, code)

    def admissible(self, code: int) -> bool:
        """Planar and family-free, memoized on the canonical code."""
        hit = self._ok.get(code)
        if hit is None:
            g = self.graph(code)
            hit = is_planar(g) and not contains(g, self.family)
            self._ok[code] = hit
        return hit

    def children(self, code: int) -> list[int]:
        """Canonical codes of the admissible one-edge extensions, in order."""
        n = self.n
        adj = [0] * n
        for i, j in self.pairs:
            if code & self.bits[i][j]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        out = []
        for i, j in self.pairs:
            if adj[i] >> j & 1:
                continue
            adj[i] |= 1 << j
            adj[j] |= 1 << i
            c, _ = canonical_form(adj)
            adj[i] &= ~(1 << j)
            adj[j] &= ~(1 << i)
            if self.admissible(c):
                out.append(c)
        return out

    def walk(self, floor: int) -> Iterator[tuple[int, int, list[int]]]:
        """Depth-first over classes; yields (code, edges, children).

        ``floor`` is read through ``self.floor`` at every step so a caller may
        raise it while iterating; classes that cannot reach more than
        ``self.floor`` edges are skipped.
        """
        self.floor = floor
        seen = {0}
        stack = [(0, 0)]
        while stack:
            code, e = stack.pop()
            self.nodes += 1
            kids = self.children(code)
            yield code, e, kids
            if e + len(kids) <= self.floor:
                continue
            for c in reversed(kids):
                if c not in seen:
                    seen.add(c)
                    stack.append((c, e + 1))


def _seeds(n: int, family: ForbiddenFamily) -> list[Graph]:
    cands = [C.C8_plus_chords(), C.H_star_12(), C.two_K4(), C.K23(), C.K2_join_coK3(), C.C6_complement(),
             C.M(n)]
    if n >= 3:
        cands.append(C.K2m(n - 2))
    for k in range(3, n):
        if k + 1 <= n <= 2 * k:
            cands.append(C.G_star(k, n))
    return [g for g in cands if g.n == n and is_planar(g) and not contains(g, family)]


def exact_extremal(n: int, family: ForbiddenFamily, cap_override: Optional[int] = None,
                   use_seeds: bool = True) -> ExtremalResult:
    """ex_P(n, family) with a maximizing witness (its canonical labeling)."""
    _check_cap(n, cap_override)
    start = time.perf_counter()
    ex = _Explorer(n, family)
    best_code, best = 0, 0
    seed_graphs = _seeds(n, family) if use_seeds else []
    for g in seed_graphs:
        if g.edge_count() > best:
            best_code, _ = canonical_form(adjacency_masks(g))
            best = g.edge_count()
    for code, e, _ in ex.walk(best):
        if e > best:
            g = ex.graph(code)
            # full recheck before accepting a new record
            if not is_planar(g) or contains(g, family):
                raise AssertionError("search admitted a graph that fails the final check")
            best, best_code = e, code
            ex.floor = best
    witness = ex.graph(best_code)
    log.info("ex_P(%d, %s) = %d after %d classes", n, family, best, ex.nodes)
    return ExtremalResult(n, family, best, witness, ex.nodes, time.perf_counter() - start)


def enumerate_free_graphs(n: int, family: ForbiddenFamily, min_edges: int = 0,
                          cap_override: Optional[int] = None) -> Iterator[Graph]:
    """Every planar family-free graph on ``n`` vertices with at least
    ``min_edges`` edges, one per isomorphism class (canonically labeled)."""
    _check_cap(n, cap_override)
    ex = _Explorer(n, family)
    for code, e, _ in ex.walk(min_edges - 1):
        if e >= min_edges:
            yield ex.graph(code)


def verify_exact_value(n: int, family: ForbiddenFamily, claimed: int,
                       cap_override: Optional[int] = None) -> bool:
    return exact_extremal(n, family, cap_override).value == claimed
