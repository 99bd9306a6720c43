"""Canonical labeling by colour refinement plus individualization.

Vertices are ``0..n-1``.  A *refiner* maps an ordered colouring (a list
of ranks ``0..r-1``) to its coarsest equitable refinement, splitting
cells in an isomorphism-invariant order.  The search individualizes a
vertex of the first smallest non-singleton cell, refines, and recurses;
each discrete leaf gives a labeling whose certificate is compared
against the best so far.  Automorphisms found when two leaves tie are
used for orbit pruning and to jump back over equivalent subtrees.

Two refiners are provided: one over hyperedge bitmasks (handles repeated
edges) and a faster one over simple-graph adjacency bitmasks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

Refiner = Callable[[list[int]], list[int]]
Certifier = Callable[[list[int]], object]


@dataclass(frozen=True)
class Labeling:
    certificate: object
    labeling: tuple[int, ...]  # vertex -> canonical position
    generators: tuple[tuple[int, ...], ...]  # automorphisms found during search


def bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _rank(keys: list) -> tuple[list[int], int]:
    uniq = sorted(set(keys))
    if len(uniq) == 1:
        return [0] * len(keys), 1
    index = {k: i for i, k in enumerate(uniq)}
    return [index[k] for k in keys], len(uniq)


def hyper_refiner(n: int, edges: Sequence[int]) -> Refiner:
    """Refiner for a hypergraph given as a list of edge bitmasks."""
    incident: list[list[int]] = [[] for _ in range(n)]
    for i, e in enumerate(edges):
        for v in bits(e):
            incident[v].append(i)

    def refine(colors: list[int]) -> list[int]:
        ncolors = max(colors) + 1 if colors else 0
        while ncolors < n:
            cells = [0] * ncolors
            for v, c in enumerate(colors):
                cells[c] |= 1 << v
            ekeys = [tuple((e & c).bit_count() for c in cells) for e in edges]
            keys = [(colors[v], tuple(sorted([ekeys[i] for i in incident[v]])))
                    for v in range(n)]
            new, count = _rank(keys)
            if count == ncolors:
                break
            colors, ncolors = new, count
        return colors

    return refine


def graph_refiner(adj: Sequence[int]) -> Refiner:
    """Refiner for a simple graph given by adjacency bitmasks."""
    n = len(adj)

    def refine(colors: list[int]) -> list[int]:
        ncolors = max(colors) + 1 if colors else 0
        while ncolors < n:
            cells = [0] * ncolors
            for v, c in enumerate(colors):
                cells[c] |= 1 << v
            keys = [(colors[v],) + tuple((a & c).bit_count() for c in cells)
                    for v, a in enumerate(adj)]
            new, count = _rank(keys)
            if count == ncolors:
                break
            colors, ncolors = new, count
        return colors

    return refine


def hyper_certifier(edges: Sequence[int]) -> Certifier:
    members = [bits(e) for e in edges]

    def certify(lab: list[int]) -> tuple[int, ...]:
        return tuple(sorted(sum(1 << lab[v] for v in vs) for vs in members))

    return certify


def graph_certifier(adj: Sequence[int]) -> Certifier:
    n = len(adj)
    pairs = [(u, v) for u in range(n) for v in bits(adj[u]) if u < v]

    def certify(lab: list[int]) -> int:
        # Position of pair (i, j), i < j, in a fixed row-major order;
        # smaller integers mean a lexicographically smaller adjacency.
        total = 0
        for u, v in pairs:
            i, j = lab[u], lab[v]
            if i > j:
                i, j = j, i
            total |= 1 << (n * n - 1 - (i * n + j))
        return total

    return certify


def _orbit_roots(n: int, gens: list[tuple[int, ...]]) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for v in range(n):
            a, b = find(v), find(g[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


def canonical_labeling(n: int, refine: Refiner, certify: Certifier,
                       colors: list[int] | None = None) -> Labeling:
    """Run the individualization-refinement search.

    ``colors`` is an optional initial vertex colouring (ranks); vertices
    of different colours are never mapped onto each other.
    """
    if n == 0:
        return Labeling(certify([]), (), ())
    start = refine(list(colors) if colors is not None else [0] * n)

    gens: list[tuple[int, ...]] = []
    first: list = []  # [certificate, inverse labeling, path]
    best: list = []

    def leaf(lab: list[int], path: list[int]) -> int:
        cert = certify(lab)
        if not first:
            inv = [0] * n
            for v, p in enumerate(lab):
                inv[p] = v
            first[:] = [cert, inv, path]
            best[:] = [cert, inv, path, lab]
            return len(path)
        for ref in (first, best):
            if cert == ref[0]:
                inv = ref[1]
                gamma = tuple(inv[lab[v]] for v in range(n))
                if any(gamma[v] != v for v in range(n)):
                    gens.append(gamma)
                common = 0
                for a, b in zip(path, ref[2]):
                    if a != b:
                        break
                    common += 1
                return common
        if cert < best[0]:
            inv = [0] * n
            for v, p in enumerate(lab):
                inv[p] = v
            best[:] = [cert, inv, path, lab]
        return len(path)

    def node(colors: list[int], path: list[int]) -> int:
        depth = len(path)
        sizes: dict[int, int] = {}
        for c in colors:
            sizes[c] = sizes.get(c, 0) + 1
        if len(sizes) == n:
            return leaf(colors, path)
        target = min((s, c) for c, s in sizes.items() if s > 1)[1]
        cell = [v for v in range(n) if colors[v] == target]
        explored: list[int] = []
        for w in cell:
            if explored:
                fixing = [g for g in gens if all(g[p] == p for p in path)]
                if fixing:
                    roots = _orbit_roots(n, fixing)
                    if any(roots[w] == roots[x] for x in explored):
                        continue
            child = [c + 1 if c > target else c for c in colors]
            for v in cell:
                if v != w:
                    child[v] = target + 1
            result = node(refine(child), path + [w])
            explored.append(w)
            if result < depth:
                return result
        return depth

    node(start, [])
    return Labeling(best[0], tuple(best[3]), tuple(gens))


def orbit_partition(n: int, gens: Sequence[Sequence[int]]) -> list[int]:
    """Orbit representative (least member) of every vertex."""
    return _orbit_roots(n, [tuple(g) for g in gens])


def mask_orbit(mask: int, gens: Sequence[Sequence[int]]) -> set[int]:
    """Orbit of a vertex subset (bitmask) under the group generated by ``gens``."""
    seen = {mask}
    stack = [mask]
    while stack:
        cur = stack.pop()
        vs = bits(cur)
        for g in gens:
            img = 0
            for v in vs:
                img |= 1 << g[v]
            if img not in seen:
                seen.add(img)
                stack.append(img)
    return seen
