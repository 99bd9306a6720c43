from __future__ import annotations

from dataclasses import asdict, dataclass

from ..errors import InputError


@dataclass(frozen=True)
class SweepConfig:
    """Limits for enumerating connected k-uniform hypergraphs.

    ``max_multiplicity`` only applies when ``allow_multi_edges`` is set;
    ``max_degree`` is an optional pruning cap used for multigraph sweeps.
    ``time_budget`` is in seconds (``None`` means unlimited).
    """

    k: int
    n_max: int
    m_max: int
    allow_multi_edges: bool = False
    max_multiplicity: int = 2
    time_budget: float | None = None
    max_degree: int | None = None

    def __post_init__(self):
        if self.k < 1:
            raise InputError("k must be positive")
        if self.n_max < self.k:
            raise InputError("n_max must be at least k")
        if self.m_max < 1:
            raise InputError("m_max must be at least 1")
        if self.allow_multi_edges and self.max_multiplicity < 1:
            raise InputError("max_multiplicity must be positive")

    @property
    def multiplicity_cap(self) -> int:
        return self.max_multiplicity if self.allow_multi_edges else 1

    def to_dict(self) -> dict:
        return asdict(self)
