"""Local verifiers, step-counted execution and time budgets.

Cost model: a verifier calls ``meter.tick()`` once per view-field read and
once per word operation on values of at most 64 bits; longer operands are
charged one tick per started 64-bit word (see :func:`word_ops`).  Budgets
are compared after the run, never enforced mid-run.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .errors import MissingN, RadiusMismatch
from .graph import Configuration, IdAssignment, View, consecutive_ids, extract_view
from .poly import PolyBound, poly_eval

# what a verifier may look at in certificates; engines use the narrower kinds
# to shrink certificate spaces without changing any outcome
CERT_BITS = "bits"
CERT_LENGTH = "length"
CERT_NONE = "none"


class CostMeter:
    __slots__ = ("steps",)

    def __init__(self):
        self.steps = 0

    def tick(self, k: int = 1) -> None:
        self.steps += k

    def read(self, value):
        """Charge one field read and hand the value back."""
        self.steps += 1
        return value


def word_ops(nbits: int) -> int:
    """Ticks charged for one operation on an ``nbits``-bit operand."""
    return max(1, -(-nbits // 64))


@dataclass(frozen=True)
class Verifier:
    """A radius-t local decision function.

    ``decide(view, meter)`` (or ``decide(view, meter, n)`` when ``n_aware``)
    returns True to accept.  ``cert_access`` and ``reads_ids`` declare what
    the function depends on; ``cert_precheck``, when set, is a syntax test
    on the node's own certificate such that failing it forces rejection.
    """

    name: str
    radius: int
    decide: Callable = field(compare=False)
    n_aware: bool = False
    cert_access: str = CERT_BITS
    reads_ids: bool = True
    cert_precheck: Callable[[str], bool] | None = field(default=None, compare=False)

    def __repr__(self):
        return f"Verifier({self.name!r}, radius={self.radius})"


def run(verifier: Verifier, view: View, n: int | None = None) -> tuple[bool, int]:
    """Execute one node; returns ``(accepted, steps)``.

    ``n`` is forwarded only to n-aware verifiers.
    """
    if view.radius != verifier.radius:
        raise RadiusMismatch(
            f"{verifier.name} has radius {verifier.radius}, view has radius {view.radius}")
    meter = CostMeter()
    if verifier.n_aware:
        if n is None:
            raise MissingN(f"{verifier.name} needs the graph size n")
        verdict = verifier.decide(view, meter, n)
    else:
        verdict = verifier.decide(view, meter)
    return bool(verdict), meter.steps


@dataclass(frozen=True)
class NodeRun:
    node: int
    accepted: bool
    steps: int
    view_bits: int


@dataclass(frozen=True)
class RunReport:
    nodes: tuple[NodeRun, ...]

    @property
    def accepted(self) -> bool:
        return all(r.accepted for r in self.nodes)

    @property
    def max_steps(self) -> int:
        return max((r.steps for r in self.nodes), default=0)

    @property
    def rejecting(self) -> list[int]:
        return [r.node for r in self.nodes if not r.accepted]

    @property
    def verdicts(self) -> list[bool]:
        return [r.accepted for r in self.nodes]


def run_all(
    verifier: Verifier,
    cfg: Configuration,
    ids: IdAssignment | Sequence[int] | None = None,
    certs=None,
) -> RunReport:
    """Run the verifier at every node; n-aware verifiers are told ``cfg.n``."""
    if ids is None:
        ids = consecutive_ids(cfg)
    out = []
    for v in range(cfg.n):
        view = extract_view(cfg, ids, certs, v, verifier.radius)
        ok, steps = run(verifier, view, cfg.n)
        out.append(NodeRun(v, ok, steps, view.bits))
    return RunReport(tuple(out))


@dataclass(frozen=True)
class BudgetEntry:
    node: int
    steps: int
    bound: int
    ratio: float


@dataclass(frozen=True)
class BudgetReport:
    kind: str
    bound: PolyBound
    entries: tuple[BudgetEntry, ...]

    @property
    def within(self) -> bool:
        return all(e.steps <= e.bound for e in self.entries)

    @property
    def worst_ratio(self) -> float:
        return max((e.ratio for e in self.entries), default=0.0)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "bound": str(self.bound),
            "entries": [
                {"node": e.node, "steps": e.steps, "bound": e.bound, "ratio": _finite(e.ratio)}
                for e in self.entries
            ],
            "within": self.within,
            "worst_ratio": _finite(self.worst_ratio),
        }


def _finite(x: float):
    return x if math.isfinite(x) else "inf"


def within_budget(report: RunReport, bound: PolyBound, kind: str = "local-view") -> BudgetReport:
    """Compare measured steps against ``bound(n)`` or ``bound(|view|)``."""
    if kind not in ("global", "local-view"):
        raise ValueError(f"unknown budget kind {kind!r}")
    n = len(report.nodes)
    entries = []
    for r in report.nodes:
        b = poly_eval(bound, n if kind == "global" else r.view_bits)
        if b > 0:
            ratio = r.steps / b
        else:
            ratio = 0.0 if r.steps == 0 else math.inf
        entries.append(BudgetEntry(r.node, r.steps, b, ratio))
    return BudgetReport(kind, bound, tuple(entries))


def lift(verifier: Verifier, radius: int) -> Verifier:
    """Same decision, evaluated on the root's sub-view of a larger view."""
    if radius < verifier.radius:
        raise ValueError("cannot lift to a smaller radius")
    if radius == verifier.radius:
        return verifier
    inner = verifier
    if inner.n_aware:
        def decide(view, meter, n):
            ok, steps = run(inner, view.subview(0, inner.radius), n)
            meter.tick(steps)
            return ok
    else:
        def decide(view, meter):
            ok, steps = run(inner, view.subview(0, inner.radius))
            meter.tick(steps)
            return ok
    return Verifier(f"{inner.name}@r{radius}", radius, decide, inner.n_aware,
                    inner.cert_access, inner.reads_ids, inner.cert_precheck)
