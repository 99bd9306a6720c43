"""Exhaustive sweeps over enumerated hypergraphs and multigraphs.

Violations never raise: they are collected in the report so a whole run
can be inspected afterwards.  Runs can be split into tasks, checkpointed
after each task and resumed, or spread over worker processes; the merged
report does not depend on how the run was split.
"""

from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator

from ..core import Hypergraph, canonical_form, delete_vertices
from ..errors import InputError
from ..extremal import Tag, classify
from ..multigraph import (Multigraph, chromatic_index_exact, contains_shannon_submultigraph,
                          edge_color_shannon, matching_bound_check, shannon_bound)
from ..transversal import _greedy, bound_parts, min_transversal_mask
from .config import SweepConfig
from .enumeration import EdgeTree, Enumeration, hypergraph_tree

MAGIC = "TKCHK1"
PROGRESS_EVERY = 100_000


def _sort_key(H: Hypergraph) -> tuple:
    return H.n, H.m, H.edges


@dataclass
class SweepReport:
    kind: str
    params: dict
    instances_checked: int = 0
    bound_violations: list[tuple[Hypergraph, str]] = field(default_factory=list)
    # (canonical form, label); the label is the classification tag or a short description
    equality_cases: list[tuple[Hypergraph, str]] = field(default_factory=list)
    # anything else that contradicts the statement being swept
    findings: list[tuple[Hypergraph, str]] = field(default_factory=list)
    # known, expected departures (e.g. odd cycles in the degree-2 Vizing sweep)
    expected_exceptions: list[tuple[Hypergraph, str]] = field(default_factory=list)
    truncated: bool = False
    runtime: float = 0.0
    note: str = ""

    @property
    def violations(self) -> int:
        return len(self.bound_violations) + len(self.findings)

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def equality_labels(self) -> list[str]:
        return sorted(label for _, label in self.equality_cases)

    def merge(self, other: SweepReport) -> None:
        self.instances_checked += other.instances_checked
        self.bound_violations += other.bound_violations
        self.equality_cases += other.equality_cases
        self.findings += other.findings
        self.expected_exceptions += other.expected_exceptions
        self.truncated |= other.truncated

    def finalize(self) -> None:
        for items in (self.bound_violations, self.equality_cases, self.findings, self.expected_exceptions):
            items.sort(key=lambda pair: (_sort_key(pair[0]), pair[1]))

    def trailer(self) -> str:
        return (f"#RESULT instances={self.instances_checked} violations={self.violations} "
                f"equality={len(self.equality_cases)} truncated={int(self.truncated)}")

    def render(self) -> str:
        head = " ".join(f"{k}={v}" for k, v in self.params.items() if v is not None)
        lines = [f"# sweep {self.kind} {head}".rstrip()]
        if self.note:
            lines.append(f"# {self.note}")
        sections = (("violation", self.bound_violations), ("equality", self.equality_cases),
                    ("finding", self.findings), ("expected", self.expected_exceptions))
        for word, items in sections:
            for H, label in items:
                edges = " ".join("{" + ",".join(map(str, e)) + "}" for e in H.edges)
                lines.append(f"{word} {label} n={H.n} m={H.m} {edges}")
        lines.append(f"# runtime {self.runtime:.2f}s")
        lines.append(self.trailer())
        return "\n".join(lines) + "\n"

    # -- (de)serialization for checkpoints ------------------------------

    def to_json(self) -> dict:
        def dump(items):
            return [[H.n, [list(e) for e in H.edges], label] for H, label in items]

        return {"instances": self.instances_checked, "violations": dump(self.bound_violations),
                "equality": dump(self.equality_cases), "findings": dump(self.findings),
                "expected": dump(self.expected_exceptions), "runtime": self.runtime}

    @classmethod
    def from_json(cls, kind: str, params: dict, data: dict) -> SweepReport:
        def load(items):
            return [(Hypergraph(n, tuple(tuple(e) for e in edges)), label) for n, edges, label in items]

        return cls(kind, params, data["instances"], load(data["violations"]), load(data["equality"]),
                   load(data["findings"]), load(data["expected"]), runtime=data["runtime"])


# -- per-instance checks ---------------------------------------------------

class _BoundCheck:
    def __init__(self, k: int, exact: bool):
        self.k = k
        self.exact = exact

    def __call__(self, H: Hypergraph, rep: SweepReport) -> None:
        k = self.k
        num, den = bound_parts(H.n, H.m, k)
        masks = H.edge_masks
        # a greedy transversal already certifies strict inequality in most cases
        if not self.exact and _greedy(list(masks)).bit_count() * den < num:
            return
        tau = min_transversal_mask(masks).bit_count()
        if tau * den > num:
            rep.bound_violations.append((canonical_form(H), f"tau={tau} exceeds {num}/{den}"))
            return
        if tau * den < num:
            return
        cls = classify(H, k, tau)
        C = canonical_form(H)
        if cls.tag not in (Tag.IS_EK, Tag.IS_TK):
            rep.findings.append((C, f"equality but {cls.tag}"))
            return
        rep.equality_cases.append((C, str(cls.tag)))
        self._degree_facts(C, rep)

    def _degree_facts(self, H: Hypergraph, rep: SweepReport) -> None:
        # even k: every vertex has degree 1 or 2; odd k: degree at most 3
        cap = 2 if self.k % 2 == 0 else 3
        if H.min_degree < 1 or H.max_degree > cap:
            rep.findings.append((H, f"equality case has degree outside [1, {cap}]"))
        v = H.degrees.index(H.max_degree)
        H2, _ = delete_vertices(H, [v])
        if not (H2.n <= H.n - 1 and H2.m == H.m - H.max_degree):
            rep.findings.append((H, "deletion arithmetic fails"))


class _MatchingCheck:
    def __init__(self, d: int):
        self.d = d

    def __call__(self, H: Hypergraph, rep: SweepReport) -> None:
        G = Multigraph.from_hypergraph(H)
        verdict = matching_bound_check(G, self.d)
        if not verdict.bound_holds:
            rep.bound_violations.append((H, f"alpha={verdict.alpha} below {verdict.size}/{verdict.denominator}"))
        elif verdict.equality != verdict.is_shannon:
            rep.findings.append((H, f"equality={verdict.equality} but shannon={verdict.is_shannon}"))
        if verdict.equality:
            rep.equality_cases.append((H, f"Shannon({self.d})"))


def _is_long_odd_cycle(G: Multigraph) -> bool:
    return (G.num_vertices >= 5 and G.num_vertices % 2 == 1 and G.size == G.num_vertices
            and G.max_multiplicity == 1 and set(G.degrees) == {2} and G.is_connected())


class _VizingCheck:
    def __init__(self, d: int):
        self.d = d

    def __call__(self, H: Hypergraph, rep: SweepReport) -> None:
        G = Multigraph.from_hypergraph(H)
        if G.max_degree != self.d:
            return
        rep.instances_checked += 1
        d = self.d
        top = shannon_bound(d)
        coloring = edge_color_shannon(G)
        if not coloring.is_proper() or coloring.used_colors() > top:
            rep.findings.append((H, f"shannon colouring used {coloring.used_colors()} colours"))
        chi, _ = chromatic_index_exact(G)
        if chi != top:
            return
        tri = contains_shannon_submultigraph(G, d)
        if tri is not None:
            rep.equality_cases.append((H, f"chi'={chi} shannon@{','.join(map(str, tri))}"))
        elif d >= 4:
            rep.findings.append((H, f"chi'={chi} without a Shannon submultigraph"))
        elif d == 2 and not _is_long_odd_cycle(G):
            rep.findings.append((H, f"chi'={chi} without a Shannon submultigraph, not an odd cycle"))
        else:
            rep.expected_exceptions.append((H, f"chi'={chi} without a Shannon submultigraph"))


# -- runner ----------------------------------------------------------------

_built: dict = {}


def _build(kind: str, params: dict) -> tuple[Enumeration, Callable[[Hypergraph, SweepReport], None], bool]:
    """Enumeration, per-instance check, and whether the check counts instances itself.

    Building splits the search tree, so results are cached per sweep.
    """
    key = (kind, json.dumps(params, sort_keys=True))
    if key not in _built:
        _built.clear()
        _built[key] = _make(kind, params)
    return _built[key]


def _make(kind: str, params: dict) -> tuple[Enumeration, Callable[[Hypergraph, SweepReport], None], bool]:
    if kind == "t1":
        cfg = SweepConfig(params["k"], params["n_max"], params["m_max"], params["multi"] > 1,
                          max(params["multi"], 1))
        return Enumeration(hypergraph_tree(cfg)), _BoundCheck(cfg.k, params["exact"]), False
    d = params["d"]
    tree = EdgeTree(2, max(params["v_max"], 2), params["m_max"], d, d)
    if kind == "t2":
        return Enumeration(tree), _MatchingCheck(d), False
    return Enumeration(tree), _VizingCheck(d), True


def _run_task(kind: str, params: dict, index: int, deadline: float | None,
              tick: Callable[[int], None] | None = None) -> SweepReport:
    enum, check, self_counting = _build(kind, params)
    rep = SweepReport(kind, params)
    seen = 0
    for H in enum.task(index):
        if deadline is not None and time.monotonic() > deadline:
            rep.truncated = True
            break
        if not self_counting:
            rep.instances_checked += 1
        check(H, rep)
        seen += 1
        if tick is not None:
            tick(seen)
    return rep


_worker_state: dict = {}


def _worker_init(kind: str, params: dict, deadline: float | None) -> None:
    _worker_state.update(kind=kind, params=params, deadline=deadline)


def _worker_task(index: int) -> tuple[int, dict, bool]:
    rep = _run_task(_worker_state["kind"], _worker_state["params"], index, _worker_state["deadline"])
    return index, rep.to_json(), rep.truncated


def _read_checkpoint(path: str, kind: str, params: dict) -> tuple[int, SweepReport] | None:
    if not os.path.exists(path):
        return None
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    head, _, body = text.partition("\n")
    if head != MAGIC:
        raise InputError(f"{path}: not a sweep checkpoint")
    try:
        data = json.loads(body)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: corrupt checkpoint ({exc.msg})") from None
    if data.get("kind") != kind or data.get("params") != params:
        raise InputError(f"{path}: checkpoint belongs to a different sweep")
    return data["tasks_done"], SweepReport.from_json(kind, params, data["report"])


def _write_checkpoint(path: str, kind: str, params: dict, done: int, prefix, rep: SweepReport) -> None:
    data = {"kind": kind, "params": params, "tasks_done": done,
            "last_prefix": None if prefix is None else [prefix.n, [list(e) for e in prefix.edges]],
            "report": rep.to_json()}
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.write(MAGIC + "\n" + json.dumps(data, sort_keys=True) + "\n")
    os.replace(tmp, path)


def _sweep(kind: str, params: dict, time_budget: float | None, checkpoint: str | None,
           progress: Callable[[int], None] | None, workers: int) -> SweepReport:
    start = time.monotonic()
    deadline = None if time_budget is None else start + time_budget
    enum, _, _ = _build(kind, params)
    total = SweepReport(kind, params)
    done = 0
    if checkpoint is not None:
        restored = _read_checkpoint(checkpoint, kind, params)
        if restored is not None:
            done, total = restored
    base_runtime = total.runtime
    counted = total.instances_checked
    next_mark = (counted // PROGRESS_EVERY + 1) * PROGRESS_EVERY

    def tick(seen: int) -> None:
        nonlocal next_mark
        if progress is not None and counted + seen >= next_mark:
            progress(counted + seen)
            next_mark += PROGRESS_EVERY

    def absorb(index: int, rep: SweepReport) -> bool:
        nonlocal counted
        total.merge(rep)
        counted = total.instances_checked
        if rep.truncated:
            return False
        if checkpoint is not None:
            total.runtime = base_runtime + time.monotonic() - start
            _write_checkpoint(checkpoint, kind, params, index + 1, enum.task_root(index), total)
        return True

    pending = range(done, enum.num_tasks)
    if workers > 1 and len(pending) > 1:
        import multiprocessing

        with multiprocessing.Pool(workers, _worker_init, (kind, params, deadline)) as pool:
            for index, data, truncated in pool.imap(_worker_task, pending):
                rep = SweepReport.from_json(kind, params, data)
                rep.truncated = truncated
                if not absorb(index, rep):
                    pool.terminate()
                    break
                tick(0)
    else:
        for index in pending:
            if not absorb(index, _run_task(kind, params, index, deadline, tick)):
                break
    total.runtime = base_runtime + time.monotonic() - start
    total.finalize()
    return total


def theorem1_sweep(cfg: SweepConfig, *, exact: bool = False, checkpoint: str | None = None,
                   progress: Callable[[int], None] | None = None, workers: int = 1) -> SweepReport:
    """Check the transversal bound and its equality characterization on every
    connected k-uniform hypergraph within the limits of ``cfg``.

    Unless ``exact`` is set, tau is only computed when a greedy transversal
    does not already prove the inequality strict.
    """
    if cfg.k == 3 or cfg.k < 2:
        raise InputError("the sweep needs k = 2 or k >= 4")
    if cfg.max_degree is not None:
        raise InputError("degree caps are not supported for this sweep")
    params = {"k": cfg.k, "n_max": cfg.n_max, "m_max": cfg.m_max,
              "multi": cfg.multiplicity_cap, "exact": exact}
    return _sweep("t1", params, cfg.time_budget, checkpoint, progress, workers)


def theorem2_sweep(d: int, v_max: int, m_max: int, *, time_budget: float | None = None,
                   checkpoint: str | None = None, progress: Callable[[int], None] | None = None,
                   workers: int = 1) -> SweepReport:
    """Check ``alpha' * floor(3d/2) >= m`` with equality exactly on Shannon
    multigraphs, over connected multigraphs with maximum degree at most ``d``.

    The edgeless case satisfies the statement trivially and is not enumerated.
    """
    if d < 4:
        raise InputError("the matching sweep needs d >= 4")
    params = {"d": d, "v_max": v_max, "m_max": m_max}
    if m_max < 1 or v_max < 2:
        return SweepReport("t2", params, note="vacuous: only the edgeless multigraph fits")
    return _sweep("t2", params, time_budget, checkpoint, progress, workers)


def vizing_sweep(d: int, v_max: int, m_max: int, *, time_budget: float | None = None,
                 checkpoint: str | None = None, progress: Callable[[int], None] | None = None,
                 workers: int = 1) -> SweepReport:
    """Over connected multigraphs with maximum degree exactly ``d``, those with
    chromatic index ``floor(3d/2)`` must contain a Shannon multigraph of degree ``d``
    when ``d >= 4``.  For smaller ``d`` such instances are listed as expected
    exceptions; at ``d = 2`` they must be odd cycles of length at least 5.
    """
    if d < 1:
        raise InputError("d must be positive")
    params = {"d": d, "v_max": v_max, "m_max": m_max}
    if m_max < 1 or v_max < 2:
        return SweepReport("vizing", params, note="vacuous: no multigraph has an edge")
    return _sweep("vizing", params, time_budget, checkpoint, progress, workers)


def iter_equality_cases(report: SweepReport) -> Iterator[Hypergraph]:
    for H, _ in report.equality_cases:
        yield H
