"""Conflict multigraph of a hypergraph with maximum degree at most two.

Each hyperedge becomes a vertex and each degree-2 hypervertex becomes an
edge joining the two hyperedges that contain it.  A matching in this
multigraph picks pairwise independent degree-2 vertices, each of which
covers two hyperedges at once, which turns matchings into transversals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import Hypergraph, is_k_uniform
from .errors import ContractViolation
from .multigraph import Matching, Multigraph, max_matching
from .transversal import Transversal, cm_bound, transversal_number


@dataclass(frozen=True)
class ConflictMultigraph:
    graph: Multigraph
    # one (e, f, hypervertex) per edge instance, sorted; e < f index hyperedges
    instances: tuple[tuple[int, int, int], ...]

    @property
    def witness(self) -> dict[int, int]:
        """Edge-instance index -> inducing hypergraph vertex."""
        return {i: w for i, (_, _, w) in enumerate(self.instances)}

    def witnesses_of(self, e: int, f: int) -> list[int]:
        if e > f:
            e, f = f, e
        return [w for a, b, w in self.instances if (a, b) == (e, f)]


def _check(H: Hypergraph, k: int) -> None:
    if not is_k_uniform(H, k):
        raise ContractViolation(f"hypergraph is not {k}-uniform")
    if H.m and H.max_degree > 2:
        raise ContractViolation(f"maximum degree {H.max_degree} exceeds 2")
    if H.n and H.min_degree < 1:
        raise ContractViolation("hypergraph has isolated vertices")


def to_conflict_multigraph(H: Hypergraph, k: int) -> ConflictMultigraph:
    _check(H, k)
    containing: list[list[int]] = [[] for _ in range(H.n)]
    for i, e in enumerate(H.edges):
        for v in e:
            containing[v].append(i)
    instances = sorted((c[0], c[1], v) for v, c in enumerate(containing) if len(c) == 2)
    graph = Multigraph.from_edges(H.m, ((e, f) for e, f, _ in instances))
    return ConflictMultigraph(graph, tuple(instances))


def _distinct_representatives(edges: list[tuple[int, ...]]) -> list[int]:
    """One distinct vertex per edge, lowest indices first (augmenting paths)."""
    owner: dict[int, int] = {}

    def try_assign(i: int, seen: set[int]) -> bool:
        for v in edges[i]:
            if v in seen:
                continue
            seen.add(v)
            if v not in owner or try_assign(owner[v], seen):
                owner[v] = i
                return True
        return False

    for i in range(len(edges)):
        if not try_assign(i, set()):
            raise ContractViolation("unmatched edges admit no distinct representatives")
    return sorted(owner)


def transversal_from_matching(H: Hypergraph, C: ConflictMultigraph, M: Matching) -> Transversal:
    """``S`` (one witness per matched pair) plus one vertex from each edge missing ``S``.

    The result always has exactly ``m - |M|`` vertices.  For a maximal
    matching the leftover edges are pairwise disjoint and each contributes
    its lowest vertex; otherwise distinct representatives are chosen.
    """
    if M.host != C.graph:
        raise ContractViolation("matching does not belong to this conflict multigraph")
    S = [min(C.witnesses_of(e, f)) for e, f in M.pairs]
    s = set(S)
    leftover = [e for e in H.edges if not s.intersection(e)]
    rest = _distinct_representatives(leftover)
    return Transversal(H, tuple(sorted(s.union(rest))))


@dataclass(frozen=True)
class ChainReport:
    """The inequalities tau <= m - alpha' <= m - n2/floor(3k/2) = cm bound."""

    tau: int
    alpha: int
    n: int
    m: int
    n2: int
    k: int
    via_matching: int  # m - alpha'
    via_counting: Fraction  # m - n2 / floor(3k/2)
    bound: Fraction

    @property
    def first_link(self) -> bool:
        return self.tau <= self.via_matching

    @property
    def first_tight(self) -> bool:
        return self.tau == self.via_matching

    @property
    def second_link(self) -> bool:
        return self.via_matching <= self.via_counting

    @property
    def second_tight(self) -> bool:
        return self.via_matching == self.via_counting

    @property
    def identity(self) -> bool:
        return self.via_counting == self.bound

    @property
    def all_tight(self) -> bool:
        return self.first_tight and self.second_tight and self.identity

    @property
    def holds(self) -> bool:
        return self.first_link and self.second_link and self.identity


def claim_d_bound(H: Hypergraph, k: int) -> ChainReport:
    C = to_conflict_multigraph(H, k)
    alpha = len(max_matching(C.graph))
    n2 = C.graph.size
    den = (3 * k) // 2
    return ChainReport(
        tau=transversal_number(H), alpha=alpha, n=H.n, m=H.m, n2=n2, k=k,
        via_matching=H.m - alpha,
        via_counting=H.m - Fraction(n2, den),
        bound=cm_bound(H, k),
    )
