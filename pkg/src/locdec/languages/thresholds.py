"""Path languages comparing every label with the path length.

AGTG: every label exceeds n.  ALTG: every label is below n.
"""

from __future__ import annotations

from ..engine import CERT_LENGTH, CERT_NONE, Verifier
from ..errors import NotAPath
from ..graph import CertificateAssignment, Configuration
from ..poly import PolyBound


def _value(label):
    return label.ints[0] if len(label.ints) == 1 and label.word is None else None


def _path_values(cfg: Configuration):
    if not cfg.is_path():
        return None
    vals = [_value(lab) for lab in cfg.labels]
    return None if None in vals else vals


def agtg_membership(cfg: Configuration) -> bool:
    vals = _path_values(cfg)
    return vals is not None and all(x > cfg.n for x in vals)


def altg_membership(cfg: Configuration) -> bool:
    vals = _path_values(cfg)
    return vals is not None and all(x < cfg.n for x in vals)


def agtg_pi1_verifier() -> Verifier:
    """Accept iff the own label exceeds the own certificate length."""

    def decide(view, meter):
        x = _value(meter.read(view.root.label))
        cert = meter.read(view.root.cert) or ""
        meter.tick()
        return x is not None and x > len(cert)

    return Verifier("agtg-pi1", 0, decide, cert_access=CERT_LENGTH, reads_ids=False)


def altg_verifier_with_n() -> Verifier:
    def decide(view, meter, n):
        x = _value(meter.read(view.root.label))
        meter.tick()
        return x is not None and x < n

    return Verifier("altg-n", 0, decide, n_aware=True, cert_access=CERT_NONE, reads_ids=False)


# ------------------------------------------------------------ NPLD scheme
# certificate of the i-th node on an n-node path: 1^i 0 1^n


def npld_bound() -> PolyBound:
    return PolyBound((2, 2))


def encode_pair(i: int, n: int) -> str:
    return "1" * i + "0" + "1" * n


def decode_pair(cert: str | None) -> tuple[int, int] | None:
    if not cert:
        return None
    i = cert.find("0")
    if i < 1 or i == len(cert) - 1:
        return None
    rest = cert[i + 1:]
    if "0" in rest:
        return None
    return i, len(rest)


def agtg_npld_prover(cfg: Configuration) -> CertificateAssignment:
    """Counters 1..n from the smaller-index endpoint, all paired with n."""
    if not cfg.is_path():
        raise NotAPath("AGTG certificates need a path")
    if not agtg_membership(cfg):
        raise ValueError("prover called on a non-member")
    certs = [""] * cfg.n
    for i, v in enumerate(cfg.path_order(), 1):
        certs[v] = encode_pair(i, cfg.n)
    bound = npld_bound()(cfg.n)
    return CertificateAssignment(tuple(certs), (bound,) * cfg.n)


def agtg_npld_verifier() -> Verifier:
    """Counters step by one between neighbors, share n, end at 1 and n;
    then the own label must exceed n."""

    def decide(view, meter):
        own = decode_pair(meter.read(view.root.cert))
        if own is None:
            return False
        i, n = own
        nbrs = []
        for j in view.neighbors(0):
            p = decode_pair(meter.read(view.nodes[j].cert))
            meter.tick()
            if p is None or p[1] != n:
                return False
            nbrs.append(p[0])
        meter.tick()
        if len(nbrs) == 0:
            ok = i == 1 and n == 1
        elif len(nbrs) == 1:
            ok = (i == 1 and nbrs[0] == 2) or (i == n and nbrs[0] == n - 1)
        elif len(nbrs) == 2:
            ok = sorted(nbrs) == [i - 1, i + 1]
        else:
            ok = False
        x = _value(meter.read(view.root.label))
        return ok and x is not None and x > n

    return Verifier("agtg-npld", 1, decide, reads_ids=False,
                    cert_precheck=lambda c: decode_pair(c) is not None)
