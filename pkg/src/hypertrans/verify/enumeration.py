"""Isomorph-free generation of connected hypergraphs by canonical augmentation.

Every connected object is grown from a smaller connected one.  Its
*canonical parent* is obtained by deleting a canonically chosen piece:
an edge (for hypergraphs and multigraphs) or a vertex (for simple
graphs), restricted to pieces whose removal keeps the object connected.
A child is kept only when the piece just added lies in the automorphism
orbit of that canonical piece, and a parent only tries one augmentation
per orbit of its own automorphism group.  Together these emit each
isomorphism class exactly once.

Cheap invariants (degrees, multiplicities, neighbour degrees) decide
most acceptance tests; the full canonical labeling only runs on ties.
"""

from __future__ import annotations

import time
from collections import Counter
from itertools import combinations
from typing import Callable, Iterator, Sequence

from .. import canon
from ..canon import bits
from ..core import Hypergraph
from .config import SweepConfig


def _subset_orbit_reps(n: int, candidates: Sequence[int], gens: Sequence[Sequence[int]]) -> list[int]:
    """First member of each orbit of ``candidates`` (vertex masks) under ``gens``."""
    if not gens:
        return list(candidates)
    size = 1 << n
    tables = []
    for g in gens:
        img = [0] * size
        for mask in range(1, size):
            low = mask & -mask
            img[mask] = img[mask ^ low] | (1 << g[low.bit_length() - 1])
        tables.append(img)
    seen = bytearray(size)
    reps = []
    for mask in candidates:
        if seen[mask]:
            continue
        reps.append(mask)
        seen[mask] = 1
        stack = [mask]
        while stack:
            cur = stack.pop()
            for img in tables:
                nxt = img[cur]
                if not seen[nxt]:
                    seen[nxt] = 1
                    stack.append(nxt)
    return reps


def _connected_without(adj: Sequence[int], full: int, u: int) -> bool:
    rest = full & ~(1 << u)
    seen = frontier = rest & -rest
    while frontier:
        nb = 0
        while frontier:
            low = frontier & -frontier
            nb |= adj[low.bit_length() - 1]
            frontier ^= low
        frontier = nb & rest & ~seen
        seen |= frontier
    return seen == rest


class GraphTree:
    """Connected simple graphs, grown one vertex at a time.

    The canonical deletion vertex is, among non-cut vertices, one of
    minimum degree, then lexicographically least sorted neighbour degrees,
    then least canonical label.  Nodes are ``(n, adjacency masks, m)``.
    """

    def __init__(self, n_max: int, m_max: int):
        self.n_max = n_max
        self.m_max = m_max

    def roots(self) -> list:
        if self.n_max >= 2 and self.m_max >= 1:
            return [(2, (0b10, 0b01), 1)]
        return []

    @staticmethod
    def to_hypergraph(node) -> Hypergraph:
        n, adj, _ = node
        edges = tuple((u, v) for u in range(n) for v in bits(adj[u] >> (u + 1) << (u + 1)))
        return Hypergraph._trusted(n, edges)

    @staticmethod
    def size(node) -> tuple[int, int]:
        return node[0], node[2]

    @staticmethod
    def _labeling(n: int, adj: Sequence[int]) -> canon.Labeling:
        return canon.canonical_labeling(n, canon.graph_refiner(adj), canon.graph_certifier(adj))

    def children(self, node) -> list:
        n, adj, m = node
        if n >= self.n_max or m >= self.m_max:
            return []
        room = self.m_max - m
        gens = self._labeling(n, adj).generators
        candidates = [S for S in range(1, 1 << n) if S.bit_count() <= room]
        deg = [a.bit_count() for a in adj]
        out = []
        for S in _subset_orbit_reps(n, candidates, gens):
            child = self._augment(n, adj, deg, m, S)
            if child is not None:
                out.append(child)
        return out

    def _augment(self, n: int, adj: Sequence[int], deg: list[int], m: int, S: int):
        s = S.bit_count()
        v = n
        vbit = 1 << v
        new_adj = [a | vbit if S >> u & 1 else a for u, a in enumerate(adj)]
        new_adj.append(S)
        new_deg = [d + (S >> u & 1) for u, d in enumerate(deg)]
        new_deg.append(s)
        full = (vbit << 1) - 1
        child = (n + 1, tuple(new_adj), m + s)
        ties = []
        for u in range(n):
            du = new_deg[u]
            if du > s:
                continue
            if du == 1 or _connected_without(new_adj, full, u):
                if du < s:
                    return None
                ties.append(u)
        if not ties:
            return child

        def nbr_key(x: int) -> list[int]:
            return sorted(new_deg[w] for w in bits(new_adj[x]))

        kv = nbr_key(v)
        rivals = []
        for u in ties:
            ku = nbr_key(u)
            if ku < kv:
                return None
            if ku == kv:
                rivals.append(u)
        if not rivals:
            return child
        lab = self._labeling(n + 1, new_adj)
        target = min(rivals + [v], key=lambda x: lab.labeling[x])
        if target == v:
            return child
        roots = canon.orbit_partition(n + 1, lab.generators)
        return child if roots[target] == roots[v] else None


class EdgeTree:
    """Connected k-uniform hypergraphs (repeated edges allowed), one edge at a time.

    The canonical deletion edge is, among edges whose removal keeps the
    hypergraph connected, one maximizing (multiplicity, sorted vertex
    degrees), then least canonical image.  Added edges use a nonempty set
    of old vertices plus fresh ones, so the result stays connected.
    Nodes are ``(n, edge masks)``.
    """

    def __init__(self, k: int, n_max: int, m_max: int, cap: int = 1, max_degree: int | None = None):
        self.k = k
        self.n_max = n_max
        self.m_max = m_max
        self.cap = cap
        self.max_degree = max_degree

    def roots(self) -> list:
        if self.n_max >= self.k and self.m_max >= 1 and (self.max_degree is None or self.max_degree >= 1):
            return [(self.k, ((1 << self.k) - 1,))]
        return []

    @staticmethod
    def to_hypergraph(node) -> Hypergraph:
        n, edges = node
        return Hypergraph._trusted(n, tuple(sorted(tuple(bits(e)) for e in edges)))

    @staticmethod
    def size(node) -> tuple[int, int]:
        return node[0], len(node[1])

    @staticmethod
    def _labeling(n: int, edges: Sequence[int]) -> canon.Labeling:
        return canon.canonical_labeling(n, canon.hyper_refiner(n, edges), canon.hyper_certifier(edges))

    @staticmethod
    def _degrees(n: int, edges: Sequence[int]) -> list[int]:
        deg = [0] * n
        for e in edges:
            for v in bits(e):
                deg[v] += 1
        return deg

    def children(self, node) -> list:
        n, edges = node
        if len(edges) >= self.m_max:
            return []
        k = self.k
        deg = self._degrees(n, edges)
        mult = Counter(edges)
        blocked = 0
        if self.max_degree is not None:
            for v, d in enumerate(deg):
                if d >= self.max_degree:
                    blocked |= 1 << v
        candidates = []
        for s in range(max(1, k - (self.n_max - n)), min(k, n) + 1):
            for S in combinations(range(n), s):
                mask = sum(1 << v for v in S)
                if mask & blocked:
                    continue
                if s == k and mult[mask] >= self.cap:
                    continue
                candidates.append(mask)
        if not candidates:
            return []
        gens = self._labeling(n, edges).generators
        out = []
        for S in _subset_orbit_reps(n, candidates, gens):
            fresh = k - S.bit_count()
            new = S | (((1 << fresh) - 1) << n)
            child = (n + fresh, edges + (new,))
            if self._accept(child):
                out.append(child)
        return out

    @staticmethod
    def _removable(edges: Sequence[int], i: int) -> bool:
        others = edges[:i] + edges[i + 1:]
        if not others:
            return False
        target = 0
        for e in others:
            target |= e
        seen = others[0]
        pending = list(others[1:])
        grew = True
        while grew and pending:
            grew = False
            rest = []
            for e in pending:
                if e & seen:
                    seen |= e
                    grew = True
                else:
                    rest.append(e)
            pending = rest
        return not pending and seen == target

    def _accept(self, child) -> bool:
        n, edges = child
        new = edges[-1]
        deg = self._degrees(n, edges)
        mult = Counter(edges)

        def key(e: int) -> tuple:
            return mult[e], sorted(deg[v] for v in bits(e))

        kn = key(new)
        rivals = set()
        for i, e in enumerate(edges[:-1]):
            if e == new:
                continue
            ke = key(e)
            if ke < kn:
                continue
            if e in rivals:
                continue
            if mult[e] < 2 and not self._removable(edges, i):
                continue
            if ke > kn:
                return False
            rivals.add(e)
        if not rivals:
            return True
        lab = self._labeling(n, edges).labeling

        def image(e: int) -> int:
            return sum(1 << lab[v] for v in bits(e))

        target = min(rivals | {new}, key=image)
        if target == new:
            return True
        return target in canon.mask_orbit(new, self._labeling(n, edges).generators)


class Enumeration:
    """A resumable stream over one canonical-augmentation tree.

    The tree is cut at the shallowest level with at least ``min_tasks``
    nodes; everything above that level forms task 0, and each node on the
    level (with its subtree) forms one further task.  ``truncated`` is set
    when the time budget runs out before the stream is exhausted.
    """

    def __init__(self, tree, time_budget: float | None = None, min_tasks: int = 32,
                 predicate: Callable[[Hypergraph], bool] | None = None):
        self.tree = tree
        self.time_budget = time_budget
        self.truncated = False
        self.predicate = predicate
        self._prefix, self._cut = self._split(min_tasks)

    def _split(self, min_tasks: int) -> tuple[list, list]:
        prefix: list = []
        level = self.tree.roots()
        while level and len(level) < min_tasks:
            nxt = [c for node in level for c in self.tree.children(node)]
            if not nxt:
                break
            prefix.extend(level)
            level = nxt
        return prefix, level

    @property
    def num_tasks(self) -> int:
        return 1 + len(self._cut)

    def task_root(self, index: int) -> Hypergraph | None:
        return None if index == 0 else self.tree.to_hypergraph(self._cut[index - 1])

    def _walk(self, node) -> Iterator:
        stack = [node]
        while stack:
            cur = stack.pop()
            yield cur
            stack.extend(reversed(self.tree.children(cur)))

    def task(self, index: int) -> Iterator[Hypergraph]:
        nodes = iter(self._prefix) if index == 0 else self._walk(self._cut[index - 1])
        for node in nodes:
            H = self.tree.to_hypergraph(node)
            if self.predicate is None or self.predicate(H):
                yield H

    def tasks(self, start: int = 0) -> Iterator[tuple[int, Iterator[Hypergraph]]]:
        for i in range(start, self.num_tasks):
            yield i, self.task(i)

    def __iter__(self) -> Iterator[Hypergraph]:
        deadline = None if self.time_budget is None else time.monotonic() + self.time_budget
        for _, items in self.tasks():
            for H in items:
                if deadline is not None and time.monotonic() > deadline:
                    self.truncated = True
                    return
                yield H


def hypergraph_tree(cfg: SweepConfig):
    if cfg.k == 2 and cfg.multiplicity_cap == 1 and cfg.max_degree is None:
        return GraphTree(cfg.n_max, cfg.m_max)
    return EdgeTree(cfg.k, cfg.n_max, cfg.m_max, cfg.multiplicity_cap, cfg.max_degree)


def enumerate_hypergraphs(cfg: SweepConfig) -> Enumeration:
    """One representative per isomorphism class of connected k-uniform
    hypergraphs with ``n <= n_max``, ``1 <= m <= m_max`` and no isolated vertices."""
    return Enumeration(hypergraph_tree(cfg), cfg.time_budget)


def enumerate_multigraphs(v_max: int, m_max: int, max_degree: int | None = None,
                          max_multiplicity: int | None = None,
                          time_budget: float | None = None) -> Enumeration:
    """Connected loopless multigraphs with ``2 <= n <= v_max`` and ``1 <= m <= m_max``,
    as 2-uniform hypergraphs with repeated edges."""
    cap = max_multiplicity if max_multiplicity is not None else m_max
    if max_degree is not None:
        cap = min(cap, max_degree)
    tree = EdgeTree(2, max(v_max, 2), max(m_max, 1), max(cap, 1), max_degree)
    if v_max < 2 or m_max < 1:
        tree = EdgeTree(2, 2, 1, 1, 0)  # empty: max_degree 0 forbids the root
    return Enumeration(tree, time_budget)
