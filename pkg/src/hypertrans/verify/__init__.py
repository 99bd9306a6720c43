from .config import SweepConfig
from .enumeration import Enumeration, enumerate_hypergraphs, enumerate_multigraphs
from .hall import hall_check, neighbourhood
from .sweeps import MAGIC, SweepReport, theorem1_sweep, theorem2_sweep, vizing_sweep

__all__ = [
    "MAGIC", "Enumeration", "SweepConfig", "SweepReport", "enumerate_hypergraphs",
    "enumerate_multigraphs", "hall_check", "neighbourhood", "theorem1_sweep",
    "theorem2_sweep", "vizing_sweep",
]
