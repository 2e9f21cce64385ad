"""Build ITER instances for the bundled machines and classify them.

The pivot's certificate length selects a time step k; the verifier there
rejects iff both arms hold rejecting configurations at step k.
"""

from locdec.engine import run_all
from locdec.harness import ITER_INSTANCES
from locdec.languages import iter_build, iter_membership, iter_minus_verifier, iter_pi1_verifier
from locdec.poly import PolyBound
from locdec.semantics import ClassSpec, pi1_classify
from locdec.turing import BUNDLED, format_tm

spec = ClassSpec.pi1_plocal(PolyBound.identity())
for name, (good, bad) in ITER_INSTANCES.items():
    tm = BUNDLED[name]
    print(format_tm(tm))
    for a, b in (good, bad):
        cfg = iter_build(tm, a, b)
        res = pi1_classify(iter_pi1_verifier(), cfg, spec)
        minus = run_all(iter_minus_verifier(), cfg).accepted
        line = (f"  a={a!r:6} b={b!r:6} n={cfg.n:2} ITER={iter_membership(cfg)!s:5} "
                f"ITER-minus verifier accepts={minus!s:5} Pi1 outcome={res.outcome}")
        if res.witness is not None:
            pivot = next(v for v in range(cfg.n) if cfg.labels[v].ints == (0,))
            line += f" (pivot certificate length {len(res.witness[pivot])})"
        print(line)
    print()
