"""Minimum transversals and the Chvatal-McDiarmid bound.

All set arithmetic is on vertex bitmasks.  The exact solver is a
branch-and-bound over uncovered edges: pick the smallest uncovered edge,
branch on its vertices in decreasing degree order (excluding earlier
siblings in later branches), and prune with a greedy packing of pairwise
disjoint uncovered edges, each of which needs its own vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .canon import bits
from .core import Hypergraph, VertexSet, is_k_uniform
from .errors import ContractViolation, InputError


@dataclass(frozen=True)
class Transversal:
    host: Hypergraph
    vertices: VertexSet

    def __post_init__(self):
        if not is_transversal(self.host, self.vertices):
            raise ContractViolation(f"{self.vertices} misses an edge of {self.host}")

    def __len__(self) -> int:
        return len(self.vertices)


def _mask(vertices: Iterable[int]) -> int:
    out = 0
    for v in vertices:
        out |= 1 << v
    return out


def is_transversal(H: Hypergraph, T: Iterable[int]) -> bool:
    t = _mask(T)
    if t >> H.num_vertices:
        raise InputError(f"vertex set {sorted(bits(t))} not contained in [0, {H.num_vertices})")
    return all(e & t for e in H.edge_masks)


def _minimal_edges(edges: Iterable[int]) -> list[int]:
    """Drop duplicates and edges containing another edge; tau is unchanged."""
    uniq = sorted(set(edges), key=lambda e: (e.bit_count(), e))
    kept: list[int] = []
    for e in uniq:
        if not any(f & e == f for f in kept):
            kept.append(e)
    return kept


def _greedy(edges: list[int]) -> int:
    chosen = 0
    remaining = edges
    while remaining:
        count: dict[int, int] = {}
        for e in remaining:
            for v in bits(e):
                count[v] = count.get(v, 0) + 1
        v = max(count, key=lambda x: (count[x], -x))
        chosen |= 1 << v
        remaining = [e for e in remaining if not e >> v & 1]
    return chosen


def _packing_bound(edges: list[int]) -> int:
    used = 0
    lb = 0
    for e in sorted(edges, key=int.bit_count):
        if not e & used:
            used |= e
            lb += 1
    return lb


def min_transversal_mask(edges: Iterable[int], upper: int | None = None) -> int | None:
    """A minimum transversal of the edge masks, as a mask.

    With ``upper`` given, only transversals of size ``< upper`` are
    sought and ``None`` is returned when there are none.  An empty edge
    (mask 0) can never be hit, which also yields ``None``.
    """
    es = _minimal_edges(edges)
    if not es:
        return 0 if upper is None or upper > 0 else None
    if es[0] == 0:
        return None
    best = _greedy(es)
    best_size = best.bit_count()
    if upper is not None and best_size >= upper:
        best, best_size = None, upper

    def search(chosen: int, size: int, remaining: list[int]) -> None:
        nonlocal best, best_size
        if not remaining:
            best, best_size = chosen, size
            return
        if size + _packing_bound(remaining) >= best_size:
            return
        edge = min(remaining, key=int.bit_count)
        verts = bits(edge)
        deg = {v: sum(1 for f in remaining if f >> v & 1) for v in verts}
        verts.sort(key=lambda v: (-deg[v], v))
        excluded = 0
        for v in verts:
            bit = 1 << v
            rest = []
            for f in remaining:
                if f & bit:
                    continue
                f &= ~excluded
                if not f:
                    break
                rest.append(f)
            else:
                search(chosen | bit, size + 1, rest)
            excluded |= bit
            if size + 1 >= best_size:
                return

    search(0, 0, es)
    return best


def transversal_number(H: Hypergraph) -> int:
    """tau(H) without a witness."""
    mask = min_transversal_mask(H.edge_masks)
    if mask is None:
        raise InputError("hypergraph has an empty edge")
    return mask.bit_count()


def _has_transversal_below(edges: list[int], limit: int) -> bool:
    if limit <= 0:
        return not edges
    return min_transversal_mask(edges, upper=limit) is not None


def _lex_smallest(edges: list[int], n: int, size: int, allowed: int) -> int | None:
    """Lexicographically smallest transversal with exactly ``size`` vertices from ``allowed``."""
    if not edges:
        # Pad with the smallest allowed vertices so the size is exact.
        pad = bits(allowed)[:size]
        return _mask(pad) if len(pad) == size else None
    if size == 0:
        return None
    for v in bits(allowed):
        rest_allowed = allowed & ~((2 << v) - 1)
        rest = [e & rest_allowed for e in edges if not e >> v & 1]
        if any(e == 0 for e in rest):
            continue
        if not _has_transversal_below(rest, size):
            continue
        tail = _lex_smallest(rest, n, size - 1, rest_allowed)
        if tail is not None:
            return tail | (1 << v)
    return None


def tau_exact(H: Hypergraph) -> tuple[int, Transversal]:
    """tau(H) and the lexicographically smallest minimum transversal."""
    tau = transversal_number(H)
    es = _minimal_edges(H.edge_masks)
    full = (1 << H.num_vertices) - 1
    if not es:
        return 0, Transversal(H, ())
    mask = _lex_smallest(es, H.num_vertices, tau, full)
    assert mask is not None
    return tau, Transversal(H, tuple(bits(mask)))


def tau_set_containing(H: Hypergraph, forced: Iterable[int]) -> Transversal | None:
    """A minimum transversal containing every vertex of ``forced``, if any exists."""
    f = _mask(forced)
    if f >> H.num_vertices:
        raise InputError("forced set not contained in the vertex set")
    tau = transversal_number(H)
    size = f.bit_count()
    if size > tau:
        return None
    rest = [e for e in H.edge_masks if not e & f]
    if not rest:
        # forced is itself a transversal, so size == tau here
        return Transversal(H, tuple(bits(f)))
    es = _minimal_edges(rest)
    if not _has_transversal_below(es, tau - size + 1):
        return None
    full = ((1 << H.num_vertices) - 1) & ~f
    extra = _lex_smallest(es, H.num_vertices, tau - size, full)
    if extra is None:
        return None
    return Transversal(H, tuple(bits(f | extra)))


# -- the bound -----------------------------------------------------------

def bound_parts(n: int, m: int, k: int) -> tuple[int, int]:
    """Numerator ``n + floor(k/2) m`` and denominator ``floor(3k/2)``."""
    return n + (k // 2) * m, (3 * k) // 2


def cm_bound(H: Hypergraph, k: int) -> Fraction:
    """``(n + floor(k/2) m) / floor(3k/2)`` as an exact rational."""
    if k < 2:
        raise ContractViolation("the bound needs k >= 2")
    if not is_k_uniform(H, k):
        raise ContractViolation(f"hypergraph is not {k}-uniform")
    num, den = bound_parts(H.n, H.m, k)
    return Fraction(num, den)


def meets_bound_with_equality(H: Hypergraph, k: int) -> bool:
    cm_bound(H, k)
    num, den = bound_parts(H.n, H.m, k)
    return transversal_number(H) * den == num


def format_fraction(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"
