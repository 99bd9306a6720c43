"""Loopless multigraphs: matchings, edge colourings and Shannon multigraphs."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from types import MappingProxyType
from typing import Iterable, Mapping, TextIO

from .core import Hypergraph, _ints, _tokens, are_isomorphic
from .errors import ContractViolation, InputError, ParseError

Pair = tuple[int, int]


def _pair(u: int, v: int) -> Pair:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True, eq=False)
class Multigraph:
    """Vertices ``0..num_vertices-1``; ``multiplicity[(u, v)]`` with ``u < v``."""

    num_vertices: int
    multiplicity: Mapping[Pair, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.num_vertices < 0:
            raise InputError("num_vertices must be non-negative")
        clean: dict[Pair, int] = {}
        for (u, v), mu in self.multiplicity.items():
            if u == v:
                raise InputError(f"loop at vertex {u}")
            if not (0 <= u < self.num_vertices and 0 <= v < self.num_vertices):
                raise InputError(f"pair ({u}, {v}) outside [0, {self.num_vertices})")
            if mu < 0:
                raise InputError(f"negative multiplicity on ({u}, {v})")
            if mu:
                p = _pair(u, v)
                clean[p] = clean.get(p, 0) + mu
        object.__setattr__(self, "multiplicity", MappingProxyType(dict(sorted(clean.items()))))

    @classmethod
    def from_edges(cls, num_vertices: int, edges: Iterable[tuple[int, int]]) -> Multigraph:
        """One entry per edge instance; repeated pairs become parallel edges."""
        mult: dict[Pair, int] = {}
        for u, v in edges:
            if u == v:
                raise InputError(f"loop at vertex {u}")
            p = _pair(u, v)
            mult[p] = mult.get(p, 0) + 1
        return cls(num_vertices, mult)

    def __eq__(self, other):
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self.num_vertices == other.num_vertices and dict(self.multiplicity) == dict(other.multiplicity)

    def __hash__(self):
        return hash((self.num_vertices, self.pairs))

    def __repr__(self):
        return f"Multigraph({self.num_vertices}, {dict(self.multiplicity)})"

    @property
    def pairs(self) -> tuple[tuple[int, int, int], ...]:
        return tuple((u, v, mu) for (u, v), mu in self.multiplicity.items())

    @property
    def size(self) -> int:
        return sum(self.multiplicity.values())

    @property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.num_vertices
        for (u, v), mu in self.multiplicity.items():
            deg[u] += mu
            deg[v] += mu
        return tuple(deg)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def max_multiplicity(self) -> int:
        return max(self.multiplicity.values(), default=0)

    def mu(self, u: int, v: int) -> int:
        return self.multiplicity.get(_pair(u, v), 0)

    def edge_instances(self) -> list[Pair]:
        return [p for p, mu in self.multiplicity.items() for _ in range(mu)]

    def neighbors(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.num_vertices)]
        for u, v in self.multiplicity:
            adj[u].append(v)
            adj[v].append(u)
        return [sorted(a) for a in adj]

    def is_connected(self) -> bool:
        if self.num_vertices == 0:
            return False
        adj = self.neighbors()
        seen = {0}
        queue = deque([0])
        while queue:
            for w in adj[queue.popleft()]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == self.num_vertices

    def to_hypergraph(self) -> Hypergraph:
        return Hypergraph(self.num_vertices, tuple(self.edge_instances()))

    @classmethod
    def from_hypergraph(cls, H: Hypergraph) -> Multigraph:
        if any(len(e) != 2 for e in H.edges):
            raise ContractViolation("only 2-uniform hypergraphs are multigraphs")
        return cls.from_edges(H.num_vertices, H.edges)


def multigraphs_isomorphic(G1: Multigraph, G2: Multigraph) -> bool:
    return are_isomorphic(G1.to_hypergraph(), G2.to_hypergraph())


# -- matchings -----------------------------------------------------------

@dataclass(frozen=True)
class Matching:
    host: Multigraph
    pairs: tuple[Pair, ...]

    def __post_init__(self):
        pairs = tuple(sorted(_pair(u, v) for u, v in self.pairs))
        object.__setattr__(self, "pairs", pairs)
        seen: set[int] = set()
        for u, v in pairs:
            if self.host.mu(u, v) < 1:
                raise ContractViolation(f"({u}, {v}) is not an edge")
            if u in seen or v in seen:
                raise ContractViolation(f"({u}, {v}) shares a vertex with another matched pair")
            seen.update((u, v))

    def __len__(self) -> int:
        return len(self.pairs)


def max_matching(G: Multigraph) -> Matching:
    """Maximum matching via Edmonds' blossom algorithm on the underlying simple graph."""
    n = G.num_vertices
    adj = G.neighbors()
    match = [-1] * n

    def find_path(root: int) -> int:
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = deque([root])

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if match[a] == -1:
                    break
                a = parent[match[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[match[b]]

        def mark(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    b = lca(v, to)
                    blossom = [False] * n
                    mark(v, b, to, blossom)
                    mark(to, b, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = b
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        return _augment(to, parent)
                    used[match[to]] = True
                    queue.append(match[to])
        return -1

    def _augment(v: int, parent: list[int]) -> int:
        end = v
        while v != -1:
            pv = parent[v]
            nxt = match[pv]
            match[v] = pv
            match[pv] = v
            v = nxt
        return end

    for root in range(n):
        if match[root] == -1:
            find_path(root)
    pairs = tuple((u, match[u]) for u in range(n) if u < match[u])
    return Matching(G, pairs)


def matching_number(G: Multigraph) -> int:
    return len(max_matching(G))


# -- edge colourings -----------------------------------------------------

@dataclass(frozen=True)
class EdgeColoring:
    """``colors[(u, v)]`` lists one colour per parallel edge, ascending."""

    host: Multigraph
    colors: Mapping[Pair, tuple[int, ...]]
    num_colors: int

    def __post_init__(self):
        object.__setattr__(self, "colors",
                           MappingProxyType({p: tuple(sorted(cs)) for p, cs in sorted(self.colors.items())}))
        if not self.is_proper():
            raise ContractViolation("edge colouring is not proper")

    def is_proper(self) -> bool:
        if dict(self.host.multiplicity).keys() != self.colors.keys():
            return False
        at: dict[int, set[int]] = {}
        for (u, v), cs in self.colors.items():
            if len(cs) != self.host.mu(u, v):
                return False
            for c in cs:
                if not 0 <= c < self.num_colors:
                    return False
                for w in (u, v):
                    used = at.setdefault(w, set())
                    if c in used:
                        return False
                    used.add(c)
        return True

    def used_colors(self) -> int:
        return len({c for cs in self.colors.values() for c in cs})

    def color_classes(self) -> list[list[Pair]]:
        classes: list[list[Pair]] = [[] for _ in range(self.num_colors)]
        for p, cs in self.colors.items():
            for c in cs:
                classes[c].append(p)
        return classes


def _coloring_from(G: Multigraph, edges: list[Pair], cols: list[int], q: int) -> EdgeColoring:
    out: dict[Pair, list[int]] = {}
    for p, c in zip(edges, cols):
        out.setdefault(p, []).append(c)
    return EdgeColoring(G, {p: tuple(cs) for p, cs in out.items()}, q)


def _color_with(G: Multigraph, q: int) -> list[int] | None:
    """Lexicographically least proper ``q``-colouring of the edge instances.

    A new colour may only be the next unused one, and parallel copies of a
    pair take increasing colours; the least colouring satisfies both.
    """
    edges = G.edge_instances()
    used = [0] * G.num_vertices
    left = list(G.degrees)
    cols = [-1] * len(edges)
    return cols if _search_colors(edges, q, used, left, cols) else None


def _search_colors(edges: list[Pair], q: int, used: list[int], left: list[int], cols: list[int]) -> bool:
    full = (1 << q) - 1

    def rec(i: int, top: int) -> bool:
        if i == len(edges):
            return True
        u, v = edges[i]
        lo = cols[i - 1] + 1 if i and edges[i - 1] == edges[i] else 0
        avail = full & ~(used[u] | used[v])
        for c in range(lo, min(q, top + 2)):
            if not avail >> c & 1:
                continue
            bit = 1 << c
            used[u] |= bit
            used[v] |= bit
            left[u] -= 1
            left[v] -= 1
            cols[i] = c
            if (q - used[u].bit_count() >= left[u] and q - used[v].bit_count() >= left[v]
                    and rec(i + 1, max(top, c))):
                return True
            used[u] &= ~bit
            used[v] &= ~bit
            left[u] += 1
            left[v] += 1
        cols[i] = -1
        return False

    return rec(0, -1)


def chromatic_index_exact(G: Multigraph) -> tuple[int, EdgeColoring]:
    """chi'(G) and the lexicographically least optimal colouring.

    Colour counts are tried upwards from ``max_degree``.
    """
    if G.size == 0:
        raise InputError("chromatic index of an edgeless multigraph is not defined here")
    q = G.max_degree
    while True:
        cols = _color_with(G, q)
        if cols is not None:
            return q, _coloring_from(G, G.edge_instances(), cols, q)
        q += 1


def shannon_bound(max_degree: int) -> int:
    return (3 * max_degree) // 2


class _FanColorer:
    """Colours edge instances one at a time with ``K`` colours, recolouring
    along fans at one endpoint and two-coloured alternating chains when no
    colour is free at both ends.  Succeeds whenever ``K >= floor(3 Delta/2)``.
    """

    def __init__(self, edges: list[Pair], n: int, K: int):
        self.edges = edges
        self.K = K
        self.full = (1 << K) - 1
        self.color = [-1] * len(edges)
        self.present = [0] * n
        self.at: list[dict[int, int]] = [{} for _ in range(n)]
        self.incident: list[list[int]] = [[] for _ in range(n)]
        for i, (u, v) in enumerate(edges):
            self.incident[u].append(i)
            self.incident[v].append(i)

    def missing(self, v: int) -> int:
        return self.full & ~self.present[v]

    def other(self, i: int, v: int) -> int:
        a, b = self.edges[i]
        return b if a == v else a

    def set_color(self, i: int, c: int) -> None:
        old = self.color[i]
        for w in self.edges[i]:
            if old >= 0:
                self.present[w] &= ~(1 << old)
                del self.at[w][old]
            self.present[w] |= 1 << c
            self.at[w][c] = i
        self.color[i] = c

    def run(self) -> list[int]:
        for i, (u, v) in enumerate(self.edges):
            common = self.missing(u) & self.missing(v)
            if common:
                self.set_color(i, _lowest(common))
            else:
                self._fan(i, u, v)
        return self.color

    def _fan(self, e0: int, x: int, y: int) -> None:
        fan = [e0]
        rim = [y]
        candidates = sorted(self.at[x].values(), key=lambda i: self.color[i])
        reach = self.missing(y)
        while True:
            nxt = next((f for f in candidates if reach >> self.color[f] & 1), None)
            if nxt is None:
                raise RuntimeError("fan cannot be extended; colour budget too small")
            candidates.remove(nxt)
            z = self.other(nxt, x)
            fan.append(nxt)
            rim.append(z)
            reach |= self.missing(z)
            if self.missing(z) & self.missing(x):
                self._fold(fan, rim, x, len(fan) - 1)
                return
            for idx in range(len(rim) - 1):
                if rim[idx] != z and self.missing(rim[idx]) & self.missing(z):
                    self._reduce(fan, rim, x, idx)
                    return

    def _fold(self, fan: list[int], rim: list[int], x: int, j: int) -> None:
        while True:
            c = _lowest(self.missing(x) & self.missing(rim[j]))
            f = fan[j]
            old = self.color[f]
            self.set_color(f, c)
            if j == 0:
                return
            j = next((i for i in range(j) if self.missing(rim[i]) >> old & 1), -1)
            if j < 0:
                raise RuntimeError("fan property lost while folding")

    def _chain(self, start: int, a: int, b: int) -> tuple[list[int], int]:
        """Alternating b/a chain from ``start`` (which misses ``a``)."""
        chain = []
        cur, w = b, start
        while cur in self.at[w]:
            i = self.at[w][cur]
            chain.append(i)
            w = self.other(i, w)
            cur = a if cur == b else b
        return chain, w

    def _swap(self, chain: list[int], a: int, b: int) -> None:
        old = {i: self.color[i] for i in chain}
        for i in chain:
            for w in self.edges[i]:
                self.present[w] &= ~(1 << old[i])
                self.at[w].pop(old[i], None)
            self.color[i] = -1
        for i in chain:
            self.set_color(i, a if old[i] == b else b)

    def _reduce(self, fan: list[int], rim: list[int], x: int, i: int) -> None:
        z = rim[-1]
        a = _lowest(self.missing(rim[i]) & self.missing(z))
        b = _lowest(self.missing(x))
        chain, end = self._chain(rim[i], a, b)
        if end != x:
            self._swap(chain, a, b)
            self._fold(fan, rim, x, i)
            return
        chain, end = self._chain(z, a, b)
        self._swap(chain, a, b)
        self._fold(fan, rim, x, len(fan) - 1)


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def edge_color_shannon(G: Multigraph) -> EdgeColoring:
    """A proper colouring with at most ``floor(3 Delta / 2)`` colours."""
    if G.size == 0:
        raise InputError("nothing to colour")
    K = max(shannon_bound(G.max_degree), 1)
    edges = G.edge_instances()
    try:
        cols = _FanColorer(edges, G.num_vertices, K).run()
        return _coloring_from(G, edges, cols, K)
    except (RuntimeError, ContractViolation):
        cols = _color_with(G, K)
        if cols is None:  # would contradict Shannon's bound
            raise
        return _coloring_from(G, edges, cols, K)


# -- Shannon multigraphs ------------------------------------------------

def make_shannon(d: int) -> Multigraph:
    """Three vertices with multiplicities floor(d/2), floor(d/2), ceil(d/2)."""
    if d < 2:
        raise InputError("Shannon multigraphs need d >= 2")
    lo, hi = d // 2, (d + 1) // 2
    return Multigraph(3, {(0, 1): lo, (0, 2): lo, (1, 2): hi})


def contains_shannon_submultigraph(G: Multigraph, d: int) -> tuple[int, int, int] | None:
    """A triple ``(x, y, z)`` with mu(xy), mu(xz) >= floor(d/2) and mu(yz) >= ceil(d/2)."""
    if d < 2:
        raise InputError("Shannon multigraphs need d >= 2")
    lo, hi = d // 2, (d + 1) // 2
    active = [v for v, deg in enumerate(G.degrees) if deg >= 2 * lo]
    for a, b, c in combinations(active, 3):
        for x, y, z in ((a, b, c), (b, a, c), (c, a, b)):
            if G.mu(x, y) >= lo and G.mu(x, z) >= lo and G.mu(y, z) >= hi:
                return x, y, z
    return None


def is_shannon_multigraph(G: Multigraph, d: int) -> bool:
    lo, hi = d // 2, (d + 1) // 2
    live = [v for v, deg in enumerate(G.degrees) if deg]
    if len(live) != 3 or G.num_vertices != 3:
        return False
    return sorted(G.multiplicity.values()) == sorted([lo, lo, hi]) and len(G.multiplicity) == 3


@dataclass(frozen=True)
class MatchingVerdict:
    alpha: int
    size: int
    d: int
    denominator: int  # floor(3d/2)
    bound_holds: bool  # alpha * floor(3d/2) >= m
    equality: bool
    is_shannon: bool  # m == 0 or G is a Shannon multigraph of degree d
    matching: Matching

    @property
    def consistent(self) -> bool:
        return self.bound_holds and self.equality == self.is_shannon


def matching_bound_check(G: Multigraph, d: int) -> MatchingVerdict:
    """Compare the matching number against ``m / floor(3d/2)`` exactly."""
    if d < 4:
        raise ContractViolation("the matching bound is stated for d >= 4")
    if not G.is_connected():
        raise ContractViolation("multigraph must be connected")
    if G.max_degree > d:
        raise ContractViolation(f"maximum degree {G.max_degree} exceeds d = {d}")
    M = max_matching(G)
    den = shannon_bound(d)
    m = G.size
    return MatchingVerdict(
        alpha=len(M), size=m, d=d, denominator=den,
        bound_holds=len(M) * den >= m,
        equality=len(M) * den == m,
        is_shannon=m == 0 or is_shannon_multigraph(G, d),
        matching=M,
    )


# -- text format ---------------------------------------------------------

def parse_multigraph(text: str) -> Multigraph:
    """Parse ``n p`` followed by ``p`` lines ``u v mult`` with ``u < v``."""
    lines = _tokens(text)
    if not lines:
        raise ParseError("missing header 'n p'", 1)
    lineno, toks, cols = lines[0]
    if len(toks) != 2:
        raise ParseError(f"header must have 2 fields, got {len(toks)}", lineno, cols[min(2, len(toks)) - 1])
    n, p = _ints(toks, lineno, cols)
    if n < 0 or p < 0:
        raise ParseError("header values must be non-negative", lineno, cols[0] if n < 0 else cols[1])
    body = lines[1:]
    if len(body) != p:
        where = body[p][0] if len(body) > p else (body[-1][0] + 1 if body else lineno + 1)
        raise ParseError(f"expected {p} pair lines, found {len(body)}", where)
    mult: dict[Pair, int] = {}
    for lineno, toks, cols in body:
        if len(toks) != 3:
            raise ParseError(f"pair line needs 3 fields, got {len(toks)}", lineno,
                             cols[3] if len(toks) > 3 else cols[-1])
        u, v, mu = _ints(toks, lineno, cols)
        for val, col in ((u, cols[0]), (v, cols[1])):
            if not 0 <= val < n:
                raise ParseError(f"vertex {val} out of range [0, {n})", lineno, col)
        if u >= v:
            raise ParseError("pair must satisfy u < v", lineno, cols[1])
        if mu < 1:
            raise ParseError("multiplicity must be at least 1", lineno, cols[2])
        if (u, v) in mult:
            raise ParseError(f"pair ({u}, {v}) listed twice", lineno, cols[0])
        mult[(u, v)] = mu
    return Multigraph(n, mult)


def format_multigraph(G: Multigraph) -> str:
    lines = [f"{G.num_vertices} {len(G.multiplicity)}"]
    lines += [f"{u} {v} {mu}" for u, v, mu in G.pairs]
    return "\n".join(lines) + "\n"


def read_multigraph(fh: TextIO) -> Multigraph:
    return parse_multigraph(fh.read())


def write_multigraph(fh: TextIO, G: Multigraph) -> None:
    fh.write(format_multigraph(G))
