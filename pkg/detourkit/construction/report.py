"""
Checking a constructed graph against its predicted invariants.

Within the certified limit the full detour profile is computed and must
match the prediction exactly with a constant sequence. Above it every
vertex needs a path of the predicted order (the order the constructive
proofs promise), found by the witnessed search; a path of that order
covers both of its ends at once.
"""

import logging
import time
from dataclasses import dataclass, field

from detourkit.detour import engine
from detourkit.detour.engine import DetourProfile
from detourkit.detour.modes import Mode, PathWitness, SearchMode
from detourkit.graphs.simple import SimpleGraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Prediction:
    order: int
    size: int
    tau: int

    @property
    def deficiency(self) -> int:
        return self.order - self.tau

    def as_dict(self) -> dict:
        return {"order": self.order, "size": self.size, "tau": self.tau, "deficiency": self.deficiency}


@dataclass
class ConstructionReport:
    graph: SimpleGraph
    predicted: Prediction
    verification: Mode
    profile: DetourProfile | None = None
    witnesses: dict[int, PathWitness] = field(default_factory=dict, repr=False)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {
            "order": self.graph.n,
            "size": self.graph.size,
            "predicted": self.predicted.as_dict(),
            "verification": self.verification.value,
            "profile": self.profile.as_dict() if self.profile else None,
            "witnessed_vertices": len(self.witnesses),
            "ok": self.ok,
            "failures": self.failures,
            "graph6": self.graph.to_graph6(),
        }


def _shape_failures(g: SimpleGraph, predicted: Prediction) -> list[str]:
    failures = []
    if g.n != predicted.order:
        failures.append(f"order {g.n}, predicted {predicted.order}")
    if g.size != predicted.size:
        failures.append(f"size {g.size}, predicted {predicted.size}")
    return failures


def _witness_all(g: SimpleGraph, tau: int, mode: SearchMode) -> tuple[dict[int, PathWitness], list[str]]:
    witnesses: dict[int, PathWitness] = {}
    failures = []
    for v in g.vertices:
        if v in witnesses:
            continue
        found = engine.path_of_order(g, v, tau, mode)
        if found is None or not found.is_valid(g):
            failures.append(f"no path of order {tau} found from vertex {v}")
            continue
        witnesses[v] = found
        end = found.vertices[-1]
        witnesses.setdefault(end, PathWitness(tuple(reversed(found.vertices))))
    return witnesses, failures


def verify_construction(
    g: SimpleGraph, predicted: Prediction, certify: bool = False, mode: SearchMode | None = None
) -> ConstructionReport:
    """
    Certified when g fits the certified limit (or `certify` forces the
    exhaustive search), otherwise Witnessed.
    """
    mode = mode or SearchMode()
    failures = _shape_failures(g, predicted)
    began = time.monotonic()
    if mode.use_table(g.n) or certify:
        run = mode if mode.use_table(g.n) else SearchMode.certified(override=True)
        profile = engine.detour_profile(g, run)
        if profile.tau != predicted.tau:
            failures.append(f"tau {profile.tau}, predicted {predicted.tau}")
        if not profile.constant:
            failures.append(f"detour sequence {profile.sequence} is not constant")
        report = ConstructionReport(g, predicted, Mode.CERTIFIED, profile=profile, failures=failures)
    else:
        witnesses, missing = _witness_all(g, predicted.tau, SearchMode.witnessed(mode.node_budget))
        report = ConstructionReport(g, predicted, Mode.WITNESSED, witnesses=witnesses, failures=failures + missing)
    logger.info(
        "Verified order-%d construction (%s) in %.1fs: %s",
        g.n,
        report.verification.value,
        time.monotonic() - began,
        "ok" if report.ok else "; ".join(report.failures),
    )
    return report
