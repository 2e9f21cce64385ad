"""ITER and ITER-minus: a Turing machine run written out along a path.

The pivot carries ``(0,)`` and the word ``M || a || b``; the node at
distance d on one arm carries ``(1, d)`` and ``M || config(M, x, d)`` where
x is a for one arm and b for the other.  Both endpoints must hold halting
configurations; ITER also wants one of them accepting.
"""

from __future__ import annotations

import random
from functools import lru_cache

from ..engine import CERT_LENGTH, CERT_NONE, Verifier, word_ops
from ..errors import MalformedEncoding, NonHaltingInput
from ..graph import Configuration, Label, build_path
from ..turing import (
    TMSpec,
    decode_arm,
    decode_pivot,
    encode_arm,
    encode_pivot,
    tm_config_after,
    tm_halt_time,
    tm_next,
)
from ..poly import PolyBound

PIVOT = (0,)
ARM = 1


@lru_cache(maxsize=4096)
def _pivot(word):
    try:
        return decode_pivot(word)
    except (MalformedEncoding, ValueError):
        return None


@lru_cache(maxsize=65536)
def _arm(word):
    try:
        return decode_arm(word)
    except (MalformedEncoding, ValueError):
        return None


def parse_node(label: Label):
    """('pivot', tm, a, b), ('arm', d, tm, conf) or None if malformed."""
    if label.word is None:
        return None
    if label.ints == PIVOT:
        p = _pivot(label.word)
        return None if p is None else ("pivot",) + p
    if len(label.ints) == 2 and label.ints[0] == ARM and label.ints[1] >= 1:
        a = _arm(label.word)
        return None if a is None else ("arm", label.ints[1]) + a
    return None


def iter_build(tm: TMSpec, a: str, b: str, cap: int = 10_000) -> Configuration:
    """Arm a (reversed), pivot, arm b; each arm as long as its halting time."""
    ta, tb = tm_halt_time(tm, a, cap), tm_halt_time(tm, b, cap)
    for word, t in ((a, ta), (b, tb)):
        if t is None:
            raise NonHaltingInput(f"{tm.name} does not halt on {word!r} within {cap} steps")
    arm_a = [Label((ARM, d), encode_arm(tm, tm_config_after(tm, a, d))) for d in range(1, ta + 1)]
    arm_b = [Label((ARM, d), encode_arm(tm, tm_config_after(tm, b, d))) for d in range(1, tb + 1)]
    pivot = Label(PIVOT, encode_pivot(tm, a, b))
    return build_path(arm_a[::-1] + [pivot] + arm_b)


def iter_membership(cfg: Configuration, tm: TMSpec | None = None, strict: bool = True) -> bool:
    """ITER when ``strict``, ITER-minus otherwise."""
    if not cfg.is_path() or cfg.n < 3:
        return False
    parsed = [parse_node(lab) for lab in cfg.labels]
    if any(p is None for p in parsed):
        return False
    pivots = [v for v, p in enumerate(parsed) if p[0] == "pivot"]
    if len(pivots) != 1 or cfg.degree(pivots[0]) != 2:
        return False
    p = pivots[0]
    _, machine, a, b = parsed[p]
    if tm is not None and machine != tm:
        return False
    order = cfg.path_order()
    k = order.index(p)
    arms = [order[:k][::-1], order[k + 1:]]
    ends = []
    for x_left, x_right in ((a, b), (b, a)):
        ends = []
        for arm, x in zip(arms, (x_left, x_right)):
            ok = True
            for d, v in enumerate(arm, 1):
                kind, dv, m, conf = parsed[v]
                if kind != "arm" or dv != d or m != machine or conf != tm_config_after(machine, x, d):
                    ok = False
                    break
            if not ok:
                break
            ends.append(parsed[arm[-1]][3])
        if len(ends) == 2:
            break
    if len(ends) != 2 or not all(c.halted for c in ends):
        return False
    return not strict or any(c.accepting for c in ends)


def _minus_checks(view, meter) -> bool:
    own = parse_node(meter.read(view.root.label))
    meter.tick(word_ops(len(view.root.label.word or "")))
    if own is None:
        return False
    nbrs = []
    for j in view.neighbors(0):
        q = parse_node(meter.read(view.nodes[j].label))
        meter.tick(word_ops(len(view.nodes[j].label.word or "")))
        if q is None:
            return False
        nbrs.append(q)
    if own[0] == "pivot":
        _, tm, a, b = own
        if len(nbrs) != 2 or any(q[0] != "arm" or q[1] != 1 or q[2] != tm for q in nbrs):
            return False
        first = (tm_config_after(tm, a, 1), tm_config_after(tm, b, 1))
        meter.tick(2)
        got = (nbrs[0][3], nbrs[1][3])
        return got == first or got[::-1] == first
    _, d, tm, conf = own
    if not 1 <= len(nbrs) <= 2:
        return False
    inner, outer = [], []
    for q in nbrs:
        if q[0] == "pivot":
            if d != 1:
                return False
            qtm = q[1]
            inner.append(q)
        else:
            qtm = q[2]
            if q[1] == d - 1:
                inner.append(q)
            elif q[1] == d + 1:
                outer.append(q)
            else:
                return False
        if qtm != tm:
            return False
    if len(inner) != 1 or len(outer) > 1:
        return False
    if inner[0][0] == "arm":
        meter.tick()
        if tm_next(tm, inner[0][3]) != conf:
            return False
    # the pivot checks its own neighbors' first configurations
    return bool(outer) or conf.halted


def iter_minus_verifier() -> Verifier:
    """Radius 1: same machine everywhere, distances step by one, consecutive
    configurations, pivot's neighbors start the two runs, endpoints halt."""

    def decide(view, meter):
        return _minus_checks(view, meter)

    return Verifier("iter-minus", 1, decide, cert_access=CERT_NONE, reads_ids=False)


def iter_pi1_bound() -> PolyBound:
    return PolyBound.identity()


def iter_pi1_verifier() -> Verifier:
    """The ITER-minus checks, and the pivot reads its certificate length k and
    rejects if both runs are in rejecting configurations after k steps."""

    def decide(view, meter):
        if not _minus_checks(view, meter):
            return False
        own = parse_node(view.root.label)
        if own[0] != "pivot":
            return True
        _, tm, a, b = own
        k = len(meter.read(view.root.cert) or "")
        meter.tick(2 * (k + 1))
        return not (tm_config_after(tm, a, k).rejecting and tm_config_after(tm, b, k).rejecting)

    return Verifier("iter-pi1", 1, decide, cert_access=CERT_LENGTH, reads_ids=False)


def mutate(cfg: Configuration, rng: random.Random) -> tuple[Configuration, str]:
    """Change exactly one label field of one node; returns the new
    configuration and a description of the change."""
    v = rng.randrange(cfg.n)
    lab = cfg.labels[v]
    fields = [("int", i) for i in range(len(lab.ints))]
    if lab.word:
        fields.append(("word", None))
    kind, i = rng.choice(fields)
    if kind == "int":
        old = lab.ints[i]
        new = rng.choice([x for x in range(0, max(old, 2) + 3) if x != old])
        ints = lab.ints[:i] + (new,) + lab.ints[i + 1:]
        new_lab, what = Label(ints, lab.word), f"node {v} int {i}: {old} -> {new}"
    else:
        pos = rng.randrange(len(lab.word))
        flipped = "1" if lab.word[pos] == "0" else "0"
        new_lab = Label(lab.ints, lab.word[:pos] + flipped + lab.word[pos + 1:])
        what = f"node {v} word bit {pos} flipped"
    labels = list(cfg.labels)
    labels[v] = new_lab
    return cfg.with_labels(labels), what
