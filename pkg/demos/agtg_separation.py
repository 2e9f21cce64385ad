"""Why AGTG needs a size-bounded certificate space.

Prints the three indistinguishable paths, the cover of the non-member by
the two members, and how each certificate regime classifies them.
"""

from locdec.harness import agtg_triple, falsify, global_budget, triple_cover
from locdec.languages import agtg_membership, agtg_pi1_verifier
from locdec.poly import PolyBound
from locdec.semantics import ClassSpec, pi1_classify

r = 1
triple = agtg_triple(r)
for name, g in zip(("G1", "G2", "G3"), triple[:3]):
    labels = [lab.ints[0] for lab in g.labels]
    print(f"{name}: labels {labels}, member={agtg_membership(g)}")

cover = triple_cover(triple, r)
print("\nradius-1 cover of G3 (node -> (source, node)):", cover.mapping)

blocked = triple_cover(triple, r, budget=global_budget(PolyBound.identity()))
print("same cover when certificates are bounded by n:", "ok" if blocked.ok else "blocked")
for v, s, u, bu, bv in blocked.budget_blocked:
    print(f"  G3 node {v} needs budget {bv}, source {s} node {u} only has {bu}")

ver = agtg_pi1_verifier()
print("\nbounded by Q(n) = n:")
for name, g in zip(("G1", "G2", "G3"), triple[:3]):
    res = pi1_classify(ver, g, ClassSpec.pi1_plocal(PolyBound.identity()))
    print(f"  {name}: {res.outcome}")

print("\nunbounded certificates (explored up to 2n bits):")
report = falsify(ver, ClassSpec.pi1_local(PolyBound((0, 2))), triple, agtg_membership, r)
for entry in report.results:
    print(f"  {entry['graph']}: {entry['outcome']} (member={entry['member']})")
print(" ", report.explanation)
