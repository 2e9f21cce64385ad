"""Small generated verifiers for equivalence and cover experiments.

Each generated verifier applies a threshold or parity predicate to one
numeric feature of its view.  Features read certificate bits, certificate
lengths, labels or IDs, and the symmetry declarations follow from that.
"""

from __future__ import annotations

from .engine import CERT_BITS, CERT_LENGTH, CERT_NONE, Verifier


def _certs(view):
    return [nd.cert or "" for nd in view.nodes]


FEATURES = {
    # name: (function of (view, meter), cert access, reads ids)
    "own-ones": (lambda v, m: m.read(v.root.cert or "").count("1"), CERT_BITS, False),
    "ball-ones": (lambda v, m: sum(m.read(c).count("1") for c in _certs(v)), CERT_BITS, False),
    "own-len": (lambda v, m: len(m.read(v.root.cert or "")), CERT_LENGTH, False),
    "ball-len": (lambda v, m: sum(len(m.read(c)) for c in _certs(v)), CERT_LENGTH, False),
    "label-sum": (lambda v, m: sum(sum(m.read(nd.label).ints) for nd in v.nodes), CERT_NONE, False),
    "ones-plus-label": (lambda v, m: sum(m.read(c).count("1") for c in _certs(v))
                        + sum(m.read(v.root.label).ints), CERT_BITS, False),
    "own-id": (lambda v, m: m.read(v.root.id), CERT_NONE, True),
}

PREDICATES = [("ge", t) for t in (1, 2, 3)] + [("le", t) for t in (0, 1, 2)] + \
    [("parity", p) for p in (0, 1)]


def generated(feature: str, kind: str, param: int, radius: int) -> Verifier:
    fn, access, reads_ids = FEATURES[feature]

    def decide(view, meter):
        x = fn(view, meter)
        meter.tick()
        if kind == "ge":
            return x >= param
        if kind == "le":
            return x <= param
        return x % 2 == param

    return Verifier(f"{kind}{param}-{feature}-r{radius}", radius, decide,
                    cert_access=access, reads_ids=reads_ids)


def family(radius: int, features=None) -> list[Verifier]:
    """Every (feature, predicate) combination at the given radius."""
    out = []
    for feature in features or FEATURES:
        for kind, param in PREDICATES:
            out.append(generated(feature, kind, param, radius))
    return out


def constant(verdict: bool, radius: int = 0) -> Verifier:
    return Verifier("accept-all" if verdict else "reject-all", radius,
                    lambda view, meter: verdict, cert_access=CERT_NONE, reads_ids=False)


def exponential(radius: int = 0) -> Verifier:
    """Charges 2**label_bits ticks, so it outgrows any polynomial budget."""

    def decide(view, meter):
        meter.tick(2 ** view.label_bits)
        return True

    return Verifier("exponential", radius, decide, cert_access=CERT_NONE)


def neighbor_bit_rejector() -> Verifier:
    """Radius 1: reject iff some neighbor's certificate starts with 1."""

    def decide(view, meter):
        for j in view.neighbors(0):
            if meter.read(view.nodes[j].cert or "")[:1] == "1":
                return False
        return True

    return Verifier("neighbor-bit", 1, decide, reads_ids=False)


def id_parity(radius: int = 0) -> Verifier:
    """Accept iff the own ID is odd; its verdict depends on the IDs."""

    def decide(view, meter):
        return meter.read(view.root.id) % 2 == 1

    return Verifier("odd-id", radius, decide, cert_access=CERT_NONE)
