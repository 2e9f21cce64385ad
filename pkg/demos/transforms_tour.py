"""Apply both verifier transforms to a small verifier and compare outcomes."""

import itertools

from locdec.engine import run_all
from locdec.graph import build_path, consecutive_ids
from locdec.languages import agtg_pi1_verifier
from locdec.poly import PolyBound
from locdec.semantics import ClassSpec, pi1_classify
from locdec.transforms import pi1lp_to_ld, pi1lp_to_pi1plocal
from locdec import zoo

A = zoo.generated("ones-plus-label", "le", 2, 1)
Q = PolyBound.constant(1)
B = pi1lp_to_ld(A, Q)
print(f"{A.name} (radius {A.radius}) -> {B.name} (radius {B.radius}), certificates dropped")
for labels in itertools.product((0, 1, 2), repeat=2):
    cfg = build_path(labels)
    ids = consecutive_ids(cfg)
    lp = pi1_classify(A, cfg, ClassSpec.pi1_lp(Q), ids=[ids]).outcome
    print(f"  {labels}: LD verdict {run_all(B, cfg, ids).accepted!s:5}  for-all-certificates {lp}")

A = agtg_pi1_verifier()
X = PolyBound.identity()
S, R = pi1lp_to_pi1plocal(A, X, PolyBound((0, 64)))
print(f"\nscreening {A.name}: global certificate bound R(x) = {R}")
for labels in [(1, 3), (200, 200), (3, 200, 1)]:
    cfg = build_path(labels)
    lhs = pi1_classify(S, cfg, ClassSpec.pi1_plocal(R)).outcome
    rhs = pi1_classify(A, cfg, ClassSpec.pi1_lp(X)).outcome
    print(f"  {labels}: screened {lhs:15} original {rhs}")
