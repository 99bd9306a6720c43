"""Hypergraph data model, text I/O and structural queries."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, TextIO

from . import canon
from .errors import ContractViolation, InputError, ParseError

Edge = tuple[int, ...]
VertexSet = tuple[int, ...]


@dataclass(frozen=True)
class Hypergraph:
    """A finite hypergraph whose edges form a multiset of vertex sets.

    Vertices are ``0..num_vertices-1``.  Each edge is a strictly
    increasing tuple; repeated edges are allowed and count towards ``m``.
    """

    num_vertices: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if self.num_vertices < 0:
            raise InputError("num_vertices must be non-negative")
        edges = tuple(tuple(e) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        for e in edges:
            for a, b in zip(e, e[1:]):
                if a >= b:
                    raise InputError(f"edge {e} is not strictly increasing")
            if e and not (0 <= e[0] and e[-1] < self.num_vertices):
                raise InputError(f"edge {e} has a vertex outside [0, {self.num_vertices})")

    @classmethod
    def from_edges(cls, edges: Iterable[Iterable[int]], num_vertices: int | None = None) -> Hypergraph:
        """Build from arbitrary vertex iterables; sorts each edge, rejects repeats."""
        out = []
        for e in edges:
            se = tuple(sorted(e))
            if len(set(se)) != len(se):
                raise InputError(f"edge {se} repeats a vertex")
            out.append(se)
        if num_vertices is None:
            num_vertices = max((e[-1] + 1 for e in out if e), default=0)
        return cls(num_vertices, tuple(out))

    @classmethod
    def _trusted(cls, num_vertices: int, edges: tuple[Edge, ...]) -> Hypergraph:
        # Skips validation; callers guarantee the invariants.
        obj = object.__new__(cls)
        object.__setattr__(obj, "num_vertices", num_vertices)
        object.__setattr__(obj, "edges", edges)
        return obj

    @property
    def n(self) -> int:
        return self.num_vertices

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << v for v in e) for e in self.edges)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.num_vertices
        for e in self.edges:
            for v in e:
                deg[v] += 1
        return tuple(deg)

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def edge_sizes(self) -> set[int]:
        return {len(e) for e in self.edges}

    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    def __str__(self) -> str:
        body = " ".join("".join(map(str, e)) if self.num_vertices <= 10 else "{" + ",".join(map(str, e)) + "}"
                        for e in self.sorted_edges())
        return f"H(n={self.n}, m={self.m}: {body})"


def degree(H: Hypergraph, v: int) -> int:
    """Number of edges containing ``v``, counted with multiplicity."""
    if not 0 <= v < H.num_vertices:
        raise InputError(f"vertex {v} out of range [0, {H.num_vertices})")
    return H.degrees[v]


def is_k_uniform(H: Hypergraph, k: int) -> bool:
    return all(len(e) == k for e in H.edges)


def _check_vertex_set(H: Hypergraph, X: Iterable[int]) -> VertexSet:
    xs = tuple(sorted(set(X)))
    if xs and not (0 <= xs[0] and xs[-1] < H.num_vertices):
        raise InputError(f"vertex set {xs} not contained in [0, {H.num_vertices})")
    return xs


def components(H: Hypergraph) -> list[VertexSet]:
    """Vertex sets of the connected components, ordered by least vertex.

    Isolated vertices form singleton cells.
    """
    parent = list(range(H.num_vertices))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in H.edges:
        if e:
            r = find(e[0])
            for v in e[1:]:
                s = find(v)
                if s != r:
                    parent[s] = r
    cells: dict[int, list[int]] = {}
    for v in range(H.num_vertices):
        cells.setdefault(find(v), []).append(v)
    return sorted((tuple(c) for c in cells.values()), key=lambda c: c[0])


def is_connected(H: Hypergraph) -> bool:
    return H.num_vertices > 0 and len(components(H)) == 1


def induced_on(H: Hypergraph, cell: VertexSet) -> tuple[Hypergraph, dict[int, int]]:
    """Sub-hypergraph on ``cell`` keeping every edge inside it, densely re-indexed."""
    index = {v: i for i, v in enumerate(cell)}
    edges = tuple(tuple(index[v] for v in e) for e in H.edges if e and e[0] in index)
    return Hypergraph._trusted(len(cell), edges), index


def delete_vertices(H: Hypergraph, X: Iterable[int]) -> tuple[Hypergraph, dict[int, int]]:
    """Strong deletion ``H - X``.

    Removes ``X``, every edge meeting ``X`` and every vertex left isolated.
    Returns the re-indexed hypergraph and the old-to-new vertex map.
    """
    xs = set(_check_vertex_set(H, X))
    kept = [e for e in H.edges if not xs.intersection(e)]
    alive = sorted({v for e in kept for v in e})
    index = {v: i for i, v in enumerate(alive)}
    edges = tuple(tuple(index[v] for v in e) for e in kept)
    return Hypergraph._trusted(len(alive), edges), index


def remove_isolated(H: Hypergraph) -> tuple[Hypergraph, dict[int, int]]:
    return delete_vertices(H, ())


# -- isomorphism ---------------------------------------------------------

def _labeling(H: Hypergraph) -> canon.Labeling:
    masks = H.edge_masks
    return canon.canonical_labeling(H.num_vertices, canon.hyper_refiner(H.num_vertices, masks),
                                    canon.hyper_certifier(masks),
                                    list(_degree_ranks(H)))


def _degree_ranks(H: Hypergraph) -> list[int]:
    deg = H.degrees
    order = sorted(set(deg))
    rank = {d: i for i, d in enumerate(order)}
    return [rank[d] for d in deg]


def canonical_labeling(H: Hypergraph) -> canon.Labeling:
    """Canonical vertex labeling of ``H`` with automorphism generators."""
    return _labeling(H)


def canonical_form(H: Hypergraph) -> Hypergraph:
    """The canonically relabeled copy of ``H``; equal for isomorphic inputs."""
    lab = _labeling(H).labeling
    edges = sorted(tuple(sorted(lab[v] for v in e)) for e in H.edges)
    return Hypergraph._trusted(H.num_vertices, tuple(edges))


def canonical_key(H: Hypergraph) -> tuple[int, tuple[int, ...]]:
    return H.num_vertices, _labeling(H).certificate


def _quick_invariant(H: Hypergraph) -> tuple:
    return (H.num_vertices, H.m, tuple(sorted(H.degrees)), tuple(sorted(len(e) for e in H.edges)))


def are_isomorphic(H1: Hypergraph, H2: Hypergraph) -> bool:
    if _quick_invariant(H1) != _quick_invariant(H2):
        return False
    return canonical_key(H1) == canonical_key(H2)


def isomorphism(H1: Hypergraph, H2: Hypergraph) -> tuple[int, ...] | None:
    """A vertex bijection ``phi`` with ``phi(H1) == H2``, or ``None``."""
    if _quick_invariant(H1) != _quick_invariant(H2):
        return None
    a, b = _labeling(H1), _labeling(H2)
    if a.certificate != b.certificate:
        return None
    inv_b = [0] * H2.num_vertices
    for v, p in enumerate(b.labeling):
        inv_b[p] = v
    return tuple(inv_b[a.labeling[v]] for v in range(H1.num_vertices))


def relabel(H: Hypergraph, perm: Iterable[int]) -> Hypergraph:
    """Apply the vertex map ``v -> perm[v]``."""
    p = list(perm)
    return Hypergraph(H.num_vertices, tuple(tuple(sorted(p[v] for v in e)) for e in H.edges))


# -- text format ---------------------------------------------------------

def _ints(tokens: list[str], line: int, cols: list[int]) -> list[int]:
    out = []
    for tok, col in zip(tokens, cols):
        try:
            out.append(int(tok))
        except ValueError:
            raise ParseError(f"expected an integer, got {tok!r}", line, col) from None
    return out


def _tokens(text: str) -> list[tuple[int, list[str], list[int]]]:
    """Non-comment, non-blank lines as (line number, tokens, columns)."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        toks, cols = [], []
        pos = 0
        for tok in raw.split():
            pos = raw.index(tok, pos)
            toks.append(tok)
            cols.append(pos + 1)
            pos += len(tok)
        out.append((lineno, toks, cols))
    return out


def parse_hypergraph(text: str) -> tuple[int, Hypergraph]:
    """Parse the ``k n m`` format; returns ``(k, H)``."""
    lines = _tokens(text)
    if not lines:
        raise ParseError("missing header 'k n m'", 1)
    lineno, toks, cols = lines[0]
    if len(toks) != 3:
        raise ParseError(f"header must have 3 fields, got {len(toks)}", lineno, cols[min(3, len(toks)) - 1])
    k, n, m = _ints(toks, lineno, cols)
    for val, name, col in ((k, "k", cols[0]), (n, "n", cols[1]), (m, "m", cols[2])):
        if val < 0:
            raise ParseError(f"{name} must be non-negative", lineno, col)
    if m > 0 and k < 1:
        raise ParseError("k must be positive when m > 0", lineno, cols[0])
    body = lines[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] + 1 if body else lineno + 1)
        raise ParseError(f"expected {m} edge lines, found {len(body)}", where)
    edges = []
    for lineno, toks, cols in body:
        if len(toks) != k:
            raise ParseError(f"edge has {len(toks)} vertices, expected {k}", lineno,
                             cols[k] if len(toks) > k else cols[-1])
        vs = _ints(toks, lineno, cols)
        for i, (v, col) in enumerate(zip(vs, cols)):
            if not 0 <= v < n:
                raise ParseError(f"vertex {v} out of range [0, {n})", lineno, col)
            if i and v <= vs[i - 1]:
                msg = "repeated vertex in edge" if v == vs[i - 1] else "vertices not strictly increasing"
                raise ParseError(msg, lineno, col)
        edges.append(tuple(vs))
    return k, Hypergraph(n, tuple(edges))


def format_hypergraph(H: Hypergraph, k: int | None = None) -> str:
    sizes = H.edge_sizes()
    if len(sizes) > 1:
        raise ContractViolation("only uniform hypergraphs can be written")
    if sizes:
        (size,) = sizes
        if k is not None and k != size:
            raise ContractViolation(f"hypergraph is {size}-uniform, not {k}-uniform")
        k = size
    lines = [f"{k or 0} {H.n} {H.m}"]
    lines += [" ".join(map(str, e)) for e in H.sorted_edges()]
    return "\n".join(lines) + "\n"


def read_hypergraph(fh: TextIO) -> tuple[int, Hypergraph]:
    return parse_hypergraph(fh.read())


def write_hypergraph(fh: TextIO, H: Hypergraph, k: int | None = None) -> None:
    fh.write(format_hypergraph(H, k))
