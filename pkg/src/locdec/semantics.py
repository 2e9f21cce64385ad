"""Finite acceptance semantics for LD-, Sigma1- and Pi1-style classes.

Every decision here is an exhaustive quantification over certificate
assignments (in a fixed enumeration order) and ID assignments (from
:func:`locdec.graph.id_universe`).  Two exact shortcuts keep this tractable:

* a node's verdict depends only on its own ball, so verdicts are memoized
  per (node, IDs on the ball, certificates on the ball), universal checks
  decompose node by node, and existential searches prune a partial
  assignment as soon as some completed ball rejects;
* verifiers that declare ``cert_access``/``reads_ids``/``cert_precheck``
  get collapsed spaces (``use_symmetry=False`` turns this off).

Certificate order: total length ascending, then node 0's certificate
first in shortlex order, then node 1's, and so on.  Witnesses are always
the first qualifying assignment in that order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence

from .engine import CERT_BITS, CERT_LENGTH, CERT_NONE, Verifier, run, run_all, within_budget
from .errors import SpaceTooLarge, UniverseTooLarge
from .graph import (
    GLOBAL,
    LOCAL,
    CertificateAssignment,
    Configuration,
    IdAssignment,
    extract_view,
    id_universe,
)
from .poly import PolyBound, poly_eval

LD, PLD, LP, LPSTAR, SIGMA1, PI1 = "LD", "PLD", "LP", "LPstar", "Sigma1", "Pi1"
FLAVOR_LOCAL, FLAVOR_PLOCAL, FLAVOR_LP = "local", "plocal", "lp"

UNIFORM_ACCEPT = "UNIFORM-ACCEPT"
UNIFORM_REJECT = "UNIFORM-REJECT"
INCONSISTENT = "INCONSISTENT"


@dataclass(frozen=True)
class ClassSpec:
    """Parameters of one class.

    ``cert_bound`` is Q (in n for the P-local flavor, in the view size for
    the LP flavor).  The unbounded local flavor has no Q; ``explore_bound``
    (a polynomial in n) then caps the certificates actually enumerated.
    """

    family: str
    flavor: str | None = None
    cert_bound: PolyBound | None = None
    time_bound: PolyBound | None = None
    knows_n: bool = False
    explore_bound: PolyBound | None = None

    def __post_init__(self):
        if self.family not in (LD, PLD, LP, LPSTAR, SIGMA1, PI1):
            raise ValueError(f"unknown family {self.family!r}")
        if self.family in (SIGMA1, PI1):
            if self.flavor not in (FLAVOR_LOCAL, FLAVOR_PLOCAL, FLAVOR_LP):
                raise ValueError(f"{self.family} needs a flavor")
            if self.flavor == FLAVOR_LOCAL:
                if self.cert_bound is not None:
                    raise ValueError("the local flavor has unbounded certificates")
                if self.time_bound is not None:
                    raise ValueError("the local flavor has unbounded time")
            elif self.cert_bound is None:
                raise ValueError(f"the {self.flavor} flavor needs a certificate bound")
        else:
            if self.flavor is not None or self.cert_bound is not None:
                raise ValueError(f"{self.family} takes no certificates")
            if self.family == LD and self.time_bound is not None:
                raise ValueError("LD has unbounded time")
        if self.knows_n and self.flavor != FLAVOR_PLOCAL:
            raise ValueError("knowing n is only defined for the P-local flavor")

    # constructors -----------------------------------------------------------
    @classmethod
    def ld(cls):
        return cls(LD)

    @classmethod
    def pld(cls, time_bound=None):
        return cls(PLD, time_bound=time_bound)

    @classmethod
    def lp(cls, time_bound=None):
        return cls(LP, time_bound=time_bound)

    @classmethod
    def lpstar(cls, time_bound=None):
        return cls(LPSTAR, time_bound=time_bound)

    @classmethod
    def sigma1_local(cls, explore_bound):
        return cls(SIGMA1, FLAVOR_LOCAL, explore_bound=explore_bound)

    @classmethod
    def sigma1_plocal(cls, cert_bound, time_bound=None):
        return cls(SIGMA1, FLAVOR_PLOCAL, cert_bound, time_bound)

    @classmethod
    def sigma1_lp(cls, cert_bound, time_bound=None):
        return cls(SIGMA1, FLAVOR_LP, cert_bound, time_bound)

    @classmethod
    def pi1_local(cls, explore_bound):
        return cls(PI1, FLAVOR_LOCAL, explore_bound=explore_bound)

    @classmethod
    def pi1_plocal(cls, cert_bound, time_bound=None, knows_n=False):
        return cls(PI1, FLAVOR_PLOCAL, cert_bound, time_bound, knows_n)

    @classmethod
    def pi1_lp(cls, cert_bound, time_bound=None):
        return cls(PI1, FLAVOR_LP, cert_bound, time_bound)

    # derived ----------------------------------------------------------------
    @property
    def id_mode(self) -> str:
        return LOCAL if self.family == LP or self.flavor == FLAVOR_LP else GLOBAL

    @property
    def cert_kind(self) -> str | None:
        return {FLAVOR_PLOCAL: "global", FLAVOR_LP: "local-view",
                FLAVOR_LOCAL: "global"}.get(self.flavor)

    @property
    def time_kind(self) -> str | None:
        if self.family in (PLD,) or self.flavor == FLAVOR_PLOCAL:
            return "global"
        if self.family in (LP, LPSTAR) or self.flavor == FLAVOR_LP:
            return "local-view"
        return None

    @property
    def takes_certificates(self) -> bool:
        return self.family in (SIGMA1, PI1)

    def describe(self) -> str:
        name = self.family if self.flavor is None else f"{self.family}^{self.flavor}"
        if self.knows_n:
            name += "[n]"
        if self.cert_bound is not None:
            name += f"(Q={self.cert_bound})"
        if self.explore_bound is not None:
            name += f"(explored<={self.explore_bound})"
        return name


# -------------------------------------------------------------- certificates


def strings_upto(b: int) -> list[str]:
    """All binary strings of length 0..b in shortlex order."""
    out = [""]
    for k in range(1, b + 1):
        out.extend(format(i, f"0{k}b") for i in range(1 << k))
    return out


def certificate_count(bounds: Sequence[int]) -> int:
    total = 1
    for b in bounds:
        total *= (1 << (b + 1)) - 1
    return total


def ordered_assignments(cands: Sequence[Sequence[str]]) -> Iterator[tuple[str, ...]]:
    """Assignments from per-node shortlex lists, total length ascending."""
    n = len(cands)
    if n == 0:
        yield ()
        return
    lo = [0] * (n + 1)
    hi = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        lo[i] = lo[i + 1] + min(len(s) for s in cands[i])
        hi[i] = hi[i + 1] + max(len(s) for s in cands[i])
    cur: list[str] = [""] * n

    def rec(i, rem):
        if i == n:
            yield tuple(cur)
            return
        for s in cands[i]:
            left = rem - len(s)
            if left < lo[i + 1]:
                break
            if left > hi[i + 1]:
                continue
            cur[i] = s
            yield from rec(i + 1, left)

    for total in range(lo[0], hi[0] + 1):
        yield from rec(0, total)


def enumerate_certificates(bounds: Sequence[int], cap: int | None = None
                           ) -> Iterator[CertificateAssignment]:
    """Every assignment with ``|c(v)| <= bounds[v]``, in the fixed order."""
    bounds = tuple(bounds)
    if any(b < 0 for b in bounds):
        raise ValueError("bounds must be nonnegative")
    count = certificate_count(bounds)
    if cap is not None and count > cap:
        raise SpaceTooLarge(f"{count} certificate assignments exceed cap {cap}")

    def gen():
        for c in ordered_assignments([strings_upto(b) for b in bounds]):
            yield CertificateAssignment(c, bounds)

    return gen()


def candidates(bound: int, access: str = CERT_BITS) -> list[str]:
    if access == CERT_NONE:
        return [""]
    if access == CERT_LENGTH:
        return ["0" * k for k in range(bound + 1)]
    return strings_upto(bound)


def cert_to_hex(s: str) -> str:
    """``"<bit length>:<hex value>"``; the empty certificate is ``"0:"``."""
    return f"{len(s)}:{int(s, 2):x}" if s else "0:"


def hex_to_cert(h: str) -> str:
    length, _, value = h.partition(":")
    k = int(length)
    return format(int(value, 16), f"0{k}b") if k else ""


# ------------------------------------------------------------------ evaluator


class _Space:
    """Memoized per-node verdicts for one (verifier, configuration, id list)."""

    def __init__(self, verifier: Verifier, cfg: Configuration, ids: Sequence[IdAssignment],
                 cap: int | None = None):
        self.verifier, self.cfg, self.ids = verifier, cfg, list(ids)
        self.t = verifier.radius
        self.cap = cap
        self.evaluations = 0
        self.balls = [tuple(sorted(cfg.ball(v, self.t))) for v in range(cfg.n)]
        self.rid = [[tuple(idk.ids[u] for u in self.balls[v]) for idk in self.ids]
                    for v in range(cfg.n)]
        self._base: dict = {}
        self._memo: dict = {}
        # nodes whose whole ball is assigned once node i is
        self.complete_at = [[] for _ in range(cfg.n)]
        for v in range(cfg.n):
            self.complete_at[max(self.balls[v])].append(v)

    def _count(self, k=1):
        self.evaluations += k
        if self.cap is not None and self.evaluations > self.cap:
            raise SpaceTooLarge(f"exploration exceeded cap {self.cap}")

    def base_view(self, v: int, k: int):
        key = (v, self.rid[v][k])
        hit = self._base.get(key)
        if hit is None:
            view = extract_view(self.cfg, self.ids[k], None, v, self.t)
            where = {u: j for j, u in enumerate(self.balls[v])}
            perm = tuple(where[u] for u in view.graph_nodes)
            hit = self._base[key] = (view, perm)
        return hit

    def verdict(self, v: int, k: int, ball_certs: tuple | None) -> bool:
        key = (v, self.rid[v][k], ball_certs)
        hit = self._memo.get(key)
        if hit is None:
            self._count()
            view, perm = self.base_view(v, k)
            if ball_certs is not None:
                view = view.with_local_certs([ball_certs[j] for j in perm])
            hit = self._memo[key] = run(self.verifier, view, self.cfg.n)[0]
        return hit

    def ball_certs(self, v: int, c: Sequence[str]) -> tuple:
        return tuple(c[u] for u in self.balls[v])

    def accepts(self, k: int, c: Sequence[str] | None) -> bool:
        for v in range(self.cfg.n):
            bc = None if c is None else self.ball_certs(v, c)
            if not self.verdict(v, k, bc):
                return False
        return True

    def distinct_id_indices(self, v: int) -> list[int]:
        seen, out = set(), []
        for k, r in enumerate(self.rid[v]):
            if r not in seen:
                seen.add(r)
                out.append(k)
        return out


def _id_list(cfg: Configuration, verifier: Verifier, mode: str, slack: int,
             ids: Sequence[IdAssignment] | None, use_symmetry: bool,
             all_ids: bool = False, cap: int | None = None) -> tuple[list[IdAssignment], int]:
    """The ids to evaluate and the size of the full id space.

    A verifier declared not to read ids needs only the first assignment,
    unless ``all_ids`` (budgets that depend on ids) asks for every one.
    """
    if ids is not None:
        ids = list(ids)
        return ids, len(ids)
    universe = id_universe(cfg, slack, mode=mode, t=verifier.radius)
    if use_symmetry and not verifier.reads_ids and not all_ids:
        return [next(iter(universe))], len(universe)
    if cap is not None and len(universe) > cap:
        raise UniverseTooLarge(f"{len(universe)} id assignments exceed cap {cap}")
    return list(universe), len(universe)


def _check_n(verifier: Verifier, spec: ClassSpec):
    if verifier.n_aware and not spec.knows_n:
        raise ValueError(f"{verifier.name} reads n but {spec.describe()} does not supply it")


def _global_bounds(spec: ClassSpec, n: int) -> tuple[int, ...]:
    poly = spec.explore_bound if spec.flavor == FLAVOR_LOCAL else spec.cert_bound
    if poly is None:
        raise ValueError("the local flavor needs an explicit exploration bound")
    return (max(0, poly_eval(poly, n)),) * n


def view_size_bounds(cfg: Configuration, ids: IdAssignment, t: int, q: PolyBound
                     ) -> tuple[int, ...]:
    """Per-node ``Q(|N^t(v)|)``, measured on certificate-free views."""
    return tuple(max(0, poly_eval(q, extract_view(cfg, ids, None, v, t).bits))
                 for v in range(cfg.n))


def candidate_count(bound: int, access: str = CERT_BITS) -> int:
    if access == CERT_NONE:
        return 1
    if access == CERT_LENGTH:
        return bound + 1
    return (1 << (bound + 1)) - 1


def _cands(bounds, verifier: Verifier, use_symmetry: bool, precheck: bool, cap=None):
    access = verifier.cert_access if use_symmetry else CERT_BITS
    if cap is not None:
        for b in bounds:
            if candidate_count(b, access) > cap:
                raise SpaceTooLarge(f"{candidate_count(b, access)} certificates per node exceed cap {cap}")
    out = []
    for b in bounds:
        cs = candidates(b, access)
        if precheck and use_symmetry and verifier.cert_precheck is not None:
            cs = [s for s in cs if verifier.cert_precheck(s)]
        out.append(cs)
    return out


# ------------------------------------------------------------------- results


@dataclass(frozen=True)
class QuantResult:
    outcome: str
    witness: tuple[str, ...] | None = None
    accepting_ids: IdAssignment | None = None
    rejecting_ids: IdAssignment | None = None
    bounds: tuple[int, ...] | None = None
    explored: dict = field(default_factory=dict, compare=False)
    bounded_exploration: bool = False

    def to_json(self) -> dict:
        return {
            "outcome": self.outcome,
            "witness_cert": None if self.witness is None else [cert_to_hex(c) for c in self.witness],
            "witness_ids": {
                "accepting": None if self.accepting_ids is None else list(self.accepting_ids.ids),
                "rejecting": None if self.rejecting_ids is None else list(self.rejecting_ids.ids),
            },
            "bounds": None if self.bounds is None else list(self.bounds),
            "explored": dict(self.explored),
            "within_explored_bound": self.bounded_exploration,
        }


@dataclass(frozen=True)
class SigmaResult:
    yes: bool
    witness: tuple[str, ...] | None = None
    witness_ids: IdAssignment | None = None
    failing_ids: IdAssignment | None = None
    bounds: tuple[int, ...] | None = None
    explored: dict = field(default_factory=dict, compare=False)
    bounded_exploration: bool = False

    def __bool__(self):
        return self.yes

    def to_json(self) -> dict:
        return {
            "outcome": "yes" if self.yes else "no",
            "witness_cert": None if self.witness is None else [cert_to_hex(c) for c in self.witness],
            "witness_ids": None if self.witness_ids is None else list(self.witness_ids.ids),
            "bounds": None if self.bounds is None else list(self.bounds),
            "explored": dict(self.explored),
            "within_explored_bound": self.bounded_exploration,
        }


# -------------------------------------------------------------------- sigma1


def _first_accepting(space: _Space, cands, id_indices: list[int]) -> tuple | None:
    """First assignment (in order) accepted under every listed id, or None."""
    n = space.cfg.n
    lo = [0] * (n + 1)
    hi = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        if not cands[i]:
            return None
        lo[i] = lo[i + 1] + min(len(s) for s in cands[i])
        hi[i] = hi[i + 1] + max(len(s) for s in cands[i])
    k0 = id_indices[0]
    cur = [""] * n

    def rec(i, rem):
        if i == n:
            return all(space.accepts(k, cur) for k in id_indices[1:])
        for s in cands[i]:
            left = rem - len(s)
            if left < lo[i + 1]:
                break
            if left > hi[i + 1]:
                continue
            cur[i] = s
            if all(space.verdict(v, k0, space.ball_certs(v, cur)) for v in space.complete_at[i]):
                if rec(i + 1, left):
                    return True
        return False

    for total in range(lo[0], hi[0] + 1):
        if rec(0, total):
            return tuple(cur)
    return None


def sigma1_decide(
    verifier: Verifier,
    cfg: Configuration,
    spec: ClassSpec,
    slack: int = 1,
    cap: int | None = None,
    ids: Sequence[IdAssignment] | None = None,
    use_symmetry: bool = True,
) -> SigmaResult:
    """Exists-certificate semantics.

    P-local and local flavors: yes iff one assignment is accepted under every
    ID assignment.  LP flavor: IDs come first, so yes iff every ID assignment
    has some accepted assignment within its own view-size budgets; the
    witness reported is the one for the first ID assignment.
    """
    if spec.family != SIGMA1:
        raise ValueError(f"sigma1_decide needs a Sigma1 spec, got {spec.describe()}")
    _check_n(verifier, spec)
    lp = spec.flavor == FLAVOR_LP
    id_list, id_total = _id_list(cfg, verifier, spec.id_mode, slack, ids, use_symmetry, lp, cap)
    space = _Space(verifier, cfg, id_list, cap)
    explored = {"id_count": id_total}
    local = spec.flavor == FLAVOR_LOCAL

    def done(*args):
        explored["evaluations"] = space.evaluations
        return SigmaResult(*args, explored=explored, bounded_exploration=local)

    if not lp:
        bounds = _global_bounds(spec, cfg.n)
        cands = _cands(bounds, verifier, use_symmetry, True, space.cap)
        explored["cert_count"] = certificate_count(bounds)
        w = _first_accepting(space, cands, list(range(len(id_list))))
        return done(w is not None, w, id_list[0] if w else None, None, bounds)

    first_witness = None
    for bounds, members in _lp_groups(cfg, verifier, spec, id_list, use_symmetry):
        cands = _cands(bounds, verifier, use_symmetry, True, space.cap)
        w = _first_accepting(space, cands, [members[0]])
        if w is None:
            return done(False, None, None, id_list[members[0]], bounds)
        for k in members[1:]:
            # same budgets, but an id-reading verifier may still need another c
            if not space.accepts(k, w) and _first_accepting(space, cands, [k]) is None:
                return done(False, None, None, id_list[k], bounds)
        if first_witness is None:
            first_witness = (w, id_list[members[0]], bounds)
    w, idw, bounds = first_witness
    return done(True, w, idw, None, bounds)


def _lp_groups(cfg, verifier, spec, id_list, use_symmetry):
    """Id indices grouped by their view-size budgets, in order of appearance.

    When the verifier is declared not to read ids one member per group is
    enough; otherwise every id is kept.
    """
    groups: dict = {}
    for k, idk in enumerate(id_list):
        bounds = view_size_bounds(cfg, idk, verifier.radius, spec.cert_bound)
        groups.setdefault(bounds, []).append(k)
    if use_symmetry and not verifier.reads_ids:
        return [(b, m[:1]) for b, m in groups.items()]
    return list(groups.items())


# ----------------------------------------------------------------------- pi1


def _first_ball_rejection(space: _Space, cands, id_indices: Iterable[int]):
    """Some (node, id index, ball certs) that rejects, or None if all accept."""
    wanted = sorted(set(id_indices))
    for v in range(space.cfg.n):
        # one wanted id per distinct restriction to the ball
        by_ball: dict = {}
        for k in wanted:
            by_ball.setdefault(space.rid[v][k], k)
        ks = list(by_ball.values())
        for combo in itertools.product(*(cands[u] for u in space.balls[v])):
            for k in ks:
                if not space.verdict(v, k, combo):
                    return v, k, combo
    return None


def pi1_classify(
    verifier: Verifier,
    cfg: Configuration,
    spec: ClassSpec,
    slack: int = 1,
    cap: int | None = None,
    ids: Sequence[IdAssignment] | None = None,
    use_symmetry: bool = True,
) -> QuantResult:
    """For-all-certificate semantics, reported as a three-way outcome.

    UNIFORM-ACCEPT: every enumerated (certificate, id) pair accepts.
    UNIFORM-REJECT: the first assignment rejected under every id (P-local and
    local flavors) or, for the LP flavor, every id has some rejecting
    assignment within its own budgets.  INCONSISTENT otherwise.
    """
    if spec.family != PI1:
        raise ValueError(f"pi1_classify needs a Pi1 spec, got {spec.describe()}")
    _check_n(verifier, spec)
    lp = spec.flavor == FLAVOR_LP
    id_list, id_total = _id_list(cfg, verifier, spec.id_mode, slack, ids, use_symmetry, lp, cap)
    space = _Space(verifier, cfg, id_list, cap)
    explored = {"id_count": id_total}
    if lp:
        return _pi1_lp(space, verifier, cfg, spec, id_list, use_symmetry, explored)

    bounds = _global_bounds(spec, cfg.n)
    cands = _cands(bounds, verifier, use_symmetry, False, space.cap)
    explored["cert_count"] = certificate_count(bounds)
    idx = range(len(id_list))

    def done(outcome, **kw):
        explored["evaluations"] = space.evaluations
        return QuantResult(outcome, bounds=bounds, explored=explored,
                           bounded_exploration=spec.flavor == FLAVOR_LOCAL, **kw)

    if _first_ball_rejection(space, cands, idx) is None:
        return done(UNIFORM_ACCEPT)

    # first pass: an assignment rejected under every id; any accepting id
    # disqualifies it, so most assignments cost a single id
    for c in ordered_assignments(cands):
        acc = next((k for k in idx if space.accepts(k, c)), None)
        if acc is None:
            return done(UNIFORM_REJECT, witness=c, rejecting_ids=id_list[0])
    # no uniform rejection: report the first assignment with mixed verdicts
    for c in ordered_assignments(cands):
        verdicts = [space.accepts(k, c) for k in idx]
        if not all(verdicts):
            acc, rej = verdicts.index(True), verdicts.index(False)
            return done(INCONSISTENT, witness=c, accepting_ids=id_list[acc],
                        rejecting_ids=id_list[rej])
    raise AssertionError("a rejecting ball combination exists but no assignment rejects")


def _pi1_lp(space, verifier, cfg, spec, id_list, use_symmetry, explored):
    first_reject = None
    all_accept_id = None
    for bounds, members in _lp_groups(cfg, verifier, spec, id_list, use_symmetry):
        cands = _cands(bounds, verifier, use_symmetry, False, space.cap)
        for k in members:
            if _first_ball_rejection(space, cands, [k]) is None:
                if all_accept_id is None:
                    all_accept_id = k
                continue
            if first_reject is None:
                c = next(c for c in ordered_assignments(cands) if not space.accepts(k, c))
                first_reject = (c, k, bounds)
        if all_accept_id is not None and first_reject is not None:
            break
    explored["evaluations"] = space.evaluations
    if first_reject is None:
        return QuantResult(UNIFORM_ACCEPT, explored=explored)
    c, k, bounds = first_reject
    if all_accept_id is None:
        return QuantResult(UNIFORM_REJECT, witness=c, rejecting_ids=id_list[k],
                           bounds=bounds, explored=explored)
    return QuantResult(INCONSISTENT, witness=c, accepting_ids=id_list[all_accept_id],
                       rejecting_ids=id_list[k], bounds=bounds, explored=explored)


# ------------------------------------------------------------------------ LD


@dataclass(frozen=True)
class DecidesReport:
    ok: bool
    checked: int
    violation: dict | None = None


def _ld_verdicts(verifier, cfg, mode, slack, cap, use_symmetry):
    ids, total = _id_list(cfg, verifier, mode, slack, None, use_symmetry, cap=cap)
    space = _Space(verifier, cfg, ids, cap)
    return ids, total, [space.accepts(k, None) for k in range(len(ids))], space


def decide_ld(
    verifier: Verifier,
    language_oracle: Callable[[Configuration], bool],
    cfgs: Iterable[Configuration],
    slack: int = 1,
    id_mode: str = GLOBAL,
    cap: int | None = None,
    use_symmetry: bool = True,
) -> DecidesReport:
    """Check ``member <=> accepted`` for every configuration and every id."""
    checked = 0
    for i, cfg in enumerate(cfgs):
        checked += 1
        member = bool(language_oracle(cfg))
        ids, _, verdicts, _ = _ld_verdicts(verifier, cfg, id_mode, slack, cap, use_symmetry)
        for k, ok in enumerate(verdicts):
            if ok != member:
                return DecidesReport(False, checked, {
                    "config_index": i, "ids": list(ids[k].ids),
                    "accepted": ok, "member": member})
    return DecidesReport(True, checked)


# ------------------------------------------------------------- class checks


@dataclass
class ClassReport:
    spec: ClassSpec
    entries: list = field(default_factory=list)
    first_mismatch: dict | None = None
    worst_budget_ratio: float = 0.0

    @property
    def ok(self) -> bool:
        return self.first_mismatch is None

    def to_json(self) -> dict:
        return {
            "spec": self.spec.describe(),
            "pass": self.ok,
            "first_mismatch": self.first_mismatch,
            "worst_budget_ratio": self.worst_budget_ratio,
            "entries": self.entries,
        }


@dataclass(frozen=True)
class LdResult:
    outcome: str
    explored: dict

    def to_json(self) -> dict:
        return {"outcome": self.outcome, "explored": dict(self.explored)}


def classify(verifier: Verifier, cfg: Configuration, spec: ClassSpec, slack: int = 1,
             cap: int | None = None, use_symmetry: bool = True):
    """Dispatch to the decider for ``spec``; returns (outcome string, result).

    Certificate-free families report UNIFORM-ACCEPT, UNIFORM-REJECT or
    INCONSISTENT over the id space.
    """
    if spec.family == SIGMA1:
        res = sigma1_decide(verifier, cfg, spec, slack, cap, use_symmetry=use_symmetry)
        return ("yes" if res.yes else "no"), res
    if spec.family == PI1:
        res = pi1_classify(verifier, cfg, spec, slack, cap, use_symmetry=use_symmetry)
        return res.outcome, res
    _, total, verdicts, space = _ld_verdicts(verifier, cfg, spec.id_mode, slack, cap, use_symmetry)
    if all(verdicts):
        outcome = UNIFORM_ACCEPT
    elif not any(verdicts):
        outcome = UNIFORM_REJECT
    else:
        outcome = INCONSISTENT
    return outcome, LdResult(outcome, {"id_count": total, "evaluations": space.evaluations})


def agrees(outcome: str, member: bool) -> bool:
    if outcome in ("yes", "no"):
        return (outcome == "yes") == member
    return outcome == (UNIFORM_ACCEPT if member else UNIFORM_REJECT)


def check_class_membership(
    verifier: Verifier,
    spec: ClassSpec,
    language_oracle: Callable[[Configuration], bool],
    cfg_family: Iterable[Configuration],
    slack: int = 1,
    cap: int | None = None,
    use_symmetry: bool = True,
    stop_at_first: bool = False,
) -> ClassReport:
    """Run the class semantics over a family and compare with membership.

    When the spec carries a time bound, each configuration is also measured
    once (first id, empty certificates) against it.
    """
    report = ClassReport(spec)
    for i, cfg in enumerate(cfg_family):
        member = bool(language_oracle(cfg))
        outcome, res = classify(verifier, cfg, spec, slack, cap, use_symmetry)
        entry = {"config_index": i, "member": member, "outcome": outcome,
                 "agrees": agrees(outcome, member)}
        if hasattr(res, "to_json"):
            entry["result"] = res.to_json()
        if spec.time_bound is not None:
            certs = ("",) * cfg.n if spec.takes_certificates else None
            rr = run_all(verifier, cfg, None, certs)
            br = within_budget(rr, spec.time_bound, spec.time_kind)
            entry["budget"] = br.to_json()
            report.worst_budget_ratio = max(report.worst_budget_ratio, br.worst_ratio)
        report.entries.append(entry)
        if not entry["agrees"] and report.first_mismatch is None:
            report.first_mismatch = entry
            if stop_at_first:
                break
    return report
