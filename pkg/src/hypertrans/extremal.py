"""The single edge ``E_k``, the generalized triangle ``T_k`` and classification."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .core import Hypergraph, is_connected, is_k_uniform, isomorphism
from .errors import ContractViolation, InputError
from .transversal import bound_parts, cm_bound, tau_set_containing, transversal_number


def gen_E(k: int) -> Hypergraph:
    if k < 2:
        raise InputError("E_k needs k >= 2")
    return Hypergraph(k, (tuple(range(k)),))


def triangle_blocks(k: int) -> dict[str, tuple[int, ...]]:
    """Vertex blocks A, B, C, D of ``gen_T(k)``, laid out in that order."""
    if k < 2:
        raise InputError("T_k needs k >= 2")
    a, b, d = (k + 1) // 2, k // 2, k % 2
    start = 0
    blocks = {}
    for name, size in (("A", a), ("B", b), ("C", b), ("D", d)):
        blocks[name] = tuple(range(start, start + size))
        start += size
    return blocks


def gen_T(k: int) -> Hypergraph:
    """Edges A+B, A+C and B+C+D with |A| = ceil(k/2), |B| = |C| = floor(k/2), |D| = k mod 2."""
    bl = triangle_blocks(k)
    n = sum(len(x) for x in bl.values())
    edges = (bl["A"] + bl["B"], bl["A"] + bl["C"], bl["B"] + bl["C"] + bl["D"])
    return Hypergraph(n, tuple(tuple(sorted(e)) for e in edges))


class Tag(enum.Enum):
    IS_EK = "IsEk"
    IS_TK = "IsTk"
    STRICTLY_BELOW_BOUND = "StrictlyBelowBound"
    OUT_OF_THEOREM_SCOPE = "OutOfTheoremScope"
    # equality without being E_k or T_k, or tau above the bound
    THEOREM_VIOLATION = "TheoremViolation"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class ExtremalClass:
    tag: Tag
    tau: int | None = None
    bound: Fraction | None = None
    # IsEk/IsTk: vertex map onto gen_E(k)/gen_T(k); otherwise None
    isomorphism: tuple[int, ...] | None = None
    # StrictlyBelowBound: bound - tau
    gap: Fraction | None = None
    note: str = field(default="", compare=False)

    def describe(self) -> str:
        parts = [str(self.tag)]
        if self.tau is not None:
            parts.append(f"tau={self.tau}")
        if self.bound is not None:
            parts.append(f"bound={self.bound.numerator}/{self.bound.denominator}")
        if self.isomorphism is not None:
            parts.append("map=" + ",".join(f"{v}->{w}" for v, w in enumerate(self.isomorphism)))
        if self.gap is not None:
            parts.append(f"gap={self.gap.numerator}/{self.gap.denominator}")
        if self.note:
            parts.append(self.note)
        return " ".join(parts)


def classify(H: Hypergraph, k: int, tau: int | None = None) -> ExtremalClass:
    """Where a connected k-uniform hypergraph sits relative to the bound.

    ``tau`` may be supplied when already known.
    """
    if not is_k_uniform(H, k):
        raise ContractViolation(f"hypergraph is not {k}-uniform")
    if not is_connected(H):
        raise ContractViolation("hypergraph is not connected")
    if k == 3:
        return ExtremalClass(Tag.OUT_OF_THEOREM_SCOPE, note="k=3 extremal families not covered")
    bound = cm_bound(H, k)
    if tau is None:
        tau = transversal_number(H)
    num, den = bound_parts(H.n, H.m, k)
    if tau * den < num:
        return ExtremalClass(Tag.STRICTLY_BELOW_BOUND, tau, bound, gap=bound - tau)
    if tau * den > num:
        return ExtremalClass(Tag.THEOREM_VIOLATION, tau, bound, note="tau exceeds the bound")
    for tag, ref in ((Tag.IS_EK, gen_E(k)), (Tag.IS_TK, gen_T(k))):
        phi = isomorphism(H, ref)
        if phi is not None:
            return ExtremalClass(tag, tau, bound, isomorphism=phi)
    return ExtremalClass(Tag.THEOREM_VIOLATION, tau, bound, note="equality but neither E_k nor T_k")


@dataclass(frozen=True)
class ExtremalFamilyReport:
    k: int
    tau_E_is_1: bool
    tau_T_is_2: bool
    bound_equality: bool
    every_vertex_extends: bool

    @property
    def passed(self) -> bool:
        return self.tau_E_is_1 and self.tau_T_is_2 and self.bound_equality and self.every_vertex_extends

    def lines(self) -> list[str]:
        return [f"tau(E_{self.k}) = 1: {'pass' if self.tau_E_is_1 else 'FAIL'}",
                f"tau(T_{self.k}) = 2: {'pass' if self.tau_T_is_2 else 'FAIL'}",
                f"bound equality: {'pass' if self.bound_equality else 'FAIL'}",
                f"every vertex in a minimum transversal: {'pass' if self.every_vertex_extends else 'FAIL'}"]


def observation3_check(k: int) -> ExtremalFamilyReport:
    E, T = gen_E(k), gen_T(k)
    tE, tT = transversal_number(E), transversal_number(T)
    equal = all(t * bound_parts(H.n, H.m, k)[1] == bound_parts(H.n, H.m, k)[0]
                for H, t in ((E, tE), (T, tT)))
    extends = all(tau_set_containing(H, [v]) is not None for H in (E, T) for v in range(H.n))
    return ExtremalFamilyReport(k, tE == 1, tT == 2, equal, extends)
