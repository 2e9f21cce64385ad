"""Verifier-to-verifier simulations with doubled radius.

Both transforms need, for every node u within distance r of the root, the
size of u's certificate-free radius-r view.  It is computed inside the
radius-2r view, which contains every such ball.
"""

from __future__ import annotations

from .engine import CERT_BITS, CERT_LENGTH, CERT_NONE, Verifier, run
from .errors import SpaceTooLarge
from .poly import PolyBound, compose, monotone_dominator, multiply, poly_eval
from .semantics import candidates, ordered_assignments


def _inner_budgets(view, r, Q, meter):
    """Local indices of N^r(root) in ``view`` and their certificate budgets."""
    near = [i for i, nd in enumerate(view.nodes) if nd.dist <= r]
    budgets = []
    for i in near:
        bits = view.subview(i, r).strip_certs().bits
        meter.tick(bits.bit_length() + 1)
        budgets.append(max(0, poly_eval(Q, bits)))
    return near, budgets


def pi1lp_to_ld(A: Verifier, Q: PolyBound, cap: int | None = None) -> Verifier:
    """Radius-2r verifier accepting iff A accepts at the root under every
    certificate assignment to N^r(root) within the budgets Q(|N^r(u)|).

    Assignments are enumerated in the usual order; A's ``cert_access``
    declaration narrows the candidates.
    """
    if A.n_aware:
        raise ValueError("the LP-flavored classes do not supply n")
    r = A.radius

    def decide(view, meter):
        near, budgets = _inner_budgets(view, r, Q, meter)
        base, outer = view.subview_indexed(0, r)
        slot = {j: k for k, j in enumerate(near)}
        cands = [candidates(b, A.cert_access) for b in budgets]
        total = 1
        for c in cands:
            total *= len(c)
        if cap is not None and total > cap:
            raise SpaceTooLarge(f"{total} inner assignments exceed cap {cap}")
        stripped = base.strip_certs()
        for c in ordered_assignments(cands):
            ok, steps = run(A, stripped.with_local_certs([c[slot[j]] for j in outer]))
            meter.tick(steps)
            if not ok:
                return False
        return True

    return Verifier(f"ld[{A.name}]", 2 * r, decide, cert_access=CERT_NONE, reads_ids=True)


def pi1lp_to_pi1plocal(A: Verifier, Q: PolyBound, h: PolyBound) -> tuple[Verifier, PolyBound]:
    """Screening verifier and its global bound R(x) = Q'(x^2 h(x)).

    The verifier accepts outright when some u in N^r(root) has a certificate
    longer than Q(|N^r(u)|); otherwise it runs A on the root's r-view.
    """
    if A.n_aware:
        raise ValueError("the LP-flavored classes do not supply n")
    q_dom = monotone_dominator(Q)
    R = compose(q_dom, multiply(PolyBound((0, 0, 1)), h))
    r = A.radius

    def decide(view, meter):
        near, budgets = _inner_budgets(view, r, Q, meter)
        for i, b in zip(near, budgets):
            meter.tick()
            if len(view.nodes[i].cert or "") > b:
                return True
        ok, steps = run(A, view.subview(0, r))
        meter.tick(steps)
        return ok

    access = CERT_BITS if A.cert_access == CERT_BITS else CERT_LENGTH
    return Verifier(f"screen[{A.name}]", 2 * r, decide, cert_access=access), R
