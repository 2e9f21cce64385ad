"""Proper k-coloring (decided without help), k-colorability (certified) and
NOT-ALL-SELECTED."""

from __future__ import annotations

import itertools

from ..engine import CERT_NONE, Verifier
from ..errors import BadLabel, NotColorable
from ..graph import CertificateAssignment, Configuration
from ..poly import PolyBound


def _color(label, k):
    ints = label.ints
    if len(ints) != 1 or not 1 <= ints[0] <= k:
        return None
    return ints[0]


def coloring_membership(k: int):
    def member(cfg: Configuration) -> bool:
        colors = [_color(lab, k) for lab in cfg.labels]
        if None in colors:
            return False
        return all(colors[u] != colors[w] for u, w in cfg.edges)
    member.__name__ = f"proper_{k}_coloring"
    return member


def coloring_verifier(k: int) -> Verifier:
    """Accept iff the own color is in 1..k and differs from every neighbor's."""

    def decide(view, meter):
        own = _color(meter.read(view.root.label), k)
        if own is None:
            return False
        for j in view.neighbors(0):
            meter.tick()
            if _color(meter.read(view.nodes[j].label), k) == own:
                return False
        return True

    return Verifier(f"coloring-{k}", 1, decide, cert_access=CERT_NONE, reads_ids=False)


# ------------------------------------------------------------- colorability


def color_width(k: int) -> int:
    return max(1, (k - 1).bit_length())


def colorability_bound(k: int) -> PolyBound:
    return PolyBound.constant(color_width(k))


def encode_color(color: int, k: int) -> str:
    return format(color - 1, f"0{color_width(k)}b")


def decode_color(cert: str | None, k: int) -> int | None:
    if cert is None or len(cert) != color_width(k):
        return None
    color = int(cert, 2) + 1
    return color if color <= k else None


def colorability_verifier(k: int) -> Verifier:
    """The certificate is a color; accept iff it is valid and differs from
    every neighbor's."""

    def decide(view, meter):
        own = decode_color(meter.read(view.root.cert), k)
        if own is None:
            return False
        for j in view.neighbors(0):
            meter.tick()
            if decode_color(meter.read(view.nodes[j].cert), k) == own:
                return False
        return True

    return Verifier(f"colorability-{k}", 1, decide, reads_ids=False,
                    cert_precheck=lambda c: decode_color(c, k) is not None)


def _colorings(cfg: Configuration, k: int):
    for colors in itertools.product(range(1, k + 1), repeat=cfg.n):
        if all(colors[u] != colors[w] for u, w in cfg.edges):
            yield colors


def colorability_membership(k: int):
    def member(cfg: Configuration) -> bool:
        return next(_colorings(cfg, k), None) is not None
    member.__name__ = f"{k}_colorable"
    return member


def colorability_prover(cfg: Configuration, k: int) -> CertificateAssignment:
    """First proper coloring in lexicographic order, as certificates."""
    colors = next(_colorings(cfg, k), None)
    if colors is None:
        raise NotColorable(f"graph is not {k}-colorable")
    width = color_width(k)
    return CertificateAssignment(tuple(encode_color(c, k) for c in colors), (width,) * cfg.n)


# --------------------------------------------------------- not all selected


def not_all_selected_membership(cfg: Configuration) -> bool:
    """Some node carries the label 0; labels must be 0 or 1."""
    for v, lab in enumerate(cfg.labels):
        if len(lab.ints) != 1 or lab.ints[0] not in (0, 1):
            raise BadLabel(f"node {v} label {lab} is not 0 or 1")
    return any(lab.ints[0] == 0 for lab in cfg.labels)
