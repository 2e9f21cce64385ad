"""End-to-end acceptance checks, one test per criterion.

Each test records a PASS/FAIL line that is printed in the pytest terminal
summary.  Run standalone with ``python3 tests/test_acceptance.py``.
"""

import itertools
import random
import time

import networkx as nx

from locdec import zoo
from locdec.engine import run, run_all
from locdec.graph import build_graph, build_path, consecutive_ids, extract_view, view_bits
from locdec.harness import (
    _triple_sources,
    agtg_triple,
    altg_triple,
    exp_agtg,
    exp_altg,
    exp_envelope,
    exp_iter,
    exp_ld_transform,
    exp_npld,
    exp_path_l,
    random_assignments,
    replay_cover,
    triple_cover,
)
from locdec.languages import (
    agtg_membership,
    agtg_npld_verifier,
    agtg_pi1_verifier,
    colorability_bound,
    colorability_membership,
    colorability_verifier,
    coloring_membership,
    coloring_verifier,
    npld_bound,
)
from locdec.poly import PolyBound
from locdec.semantics import ClassSpec, agrees, pi1_classify, sigma1_decide
from locdec.transforms import pi1lp_to_pi1plocal

X = PolyBound.identity()


def _labels(cfg):
    return [lab.ints[0] for lab in cfg.labels]


def test_criterion_01_agtg_pi1_plocal(acceptance_line):
    start = time.time()
    spec = ClassSpec.pi1_plocal(X)
    verifier = agtg_pi1_verifier()
    cfgs = [build_path(ls) for n in (2, 3) for ls in itertools.product(range(1, 8), repeat=n)]
    rng = random.Random(1)
    for n in (4, 5):
        cfgs += [build_path([rng.randint(1, n + 3) for _ in range(n)]) for _ in range(100)]
    bad = []
    for cfg in cfgs:
        # no symmetry shortcuts: every certificate of up to n bits, every id
        res = pi1_classify(verifier, cfg, spec, use_symmetry=False)
        if not agrees(res.outcome, agtg_membership(cfg)):
            bad.append(_labels(cfg))
    elapsed = time.time() - start
    ok = not bad and elapsed < 300
    acceptance_line(1, "AGTG Pi1 P-local correctness", ok,
                    f"{len(cfgs)} configs, {len(bad)} mismatches, {elapsed:.1f}s")
    assert not bad
    assert elapsed < 300


def test_criterion_02_agtg_triple(acceptance_line):
    failures = []
    checked = 0
    for r in (1, 2):
        report = exp_agtg(r)
        if not report.passed:
            failures.append(f"r={r} experiment")
        # longer random certificates on top of the exhaustive short ones
        triple = agtg_triple(r)
        cover = triple_cover(triple, r)
        target, sources = _triple_sources(triple, consecutive_ids(triple.g3))
        verifiers = [agtg_pi1_verifier()] + [zoo.generated(f, k, p, r) for f, k, p in
                                             (("ball-ones", "ge", 1), ("own-len", "parity", 0),
                                              ("ones-plus-label", "le", 2))]
        for ver in verifiers:
            rr = replay_cover(ver, target, sources, cover, r,
                              random_assignments(triple.g3.n, 2 * triple.n, 150, seed=r))
            checked += rr.checked + report.witnesses["replays"][ver.name]["checked"]
            if not rr.ok:
                failures.append(f"r={r} {ver.name}")
        if len(cover.mapping) != triple.g3.n:
            failures.append(f"r={r} partial mapping")
    acceptance_line(2, "AGTG triple cover and replay", not failures,
                    f"{checked} node replays, failures: {failures or 'none'}")
    assert not failures


def test_criterion_03_npld_scheme(acceptance_line):
    start = time.time()
    report = exp_npld(max_complete=6, max_sound=3, max_label=7)
    # the certificate precheck prunes the search; confirm it changes nothing
    spec = ClassSpec.sigma1_plocal(npld_bound())
    ver = agtg_npld_verifier()
    unpruned_bad = []
    for n in (1, 2):
        for ls in itertools.product(range(1, 8), repeat=n):
            cfg = build_path(ls)
            if agtg_membership(cfg):
                continue
            if sigma1_decide(ver, cfg, spec, use_symmetry=False).yes:
                unpruned_bad.append(list(ls))
    elapsed = time.time() - start
    ok = report.passed and not unpruned_bad and elapsed < 600
    acceptance_line(3, "NPLD scheme for AGTG", ok,
                    f"{report.explored['yes_instances']} yes / {report.explored['no_instances']} no "
                    f"instances, {elapsed:.1f}s")
    assert report.passed, report.witnesses
    assert not unpruned_bad


def test_criterion_04_altg(acceptance_line):
    reports = [exp_altg(r, max_n=4, max_label=6) for r in (1, 2)]
    monotone = all(X(t.n + 1) >= X(t.n) for t in (altg_triple(r, X) for r in (1, 2)))
    ok = all(rep.passed for rep in reports) and monotone
    acceptance_line(4, "ALTG knows-n verifier and triple", ok,
                    f"{reports[0].explored['configs']} configs per radius")
    assert ok, [rep.witnesses for rep in reports]


def test_criterion_05_ld_transform(acceptance_line):
    assert len(zoo.family(0)) >= 50
    report = exp_ld_transform(max_n=4, qs=(0, 1, 2), radii=(0, 1), ids_per_cfg=2, extra=0)
    acceptance_line(5, "Pi1 LP to LD transform", report.passed,
                    f"{report.explored['checks']} (cfg, id) checks")
    assert report.passed, report.witnesses


def _oversized(cfg, ids, certs, r, Q, v):
    ball = cfg.ball(v, r)
    return any(len(certs[u]) > Q(view_bits(extract_view(cfg, ids, None, u, r))) for u in ball)


def test_criterion_06_screening_transform(acceptance_line):
    h = PolyBound((0, 64))
    rng = random.Random(6)
    problems = []
    local_checks = 0
    for A in (agtg_pi1_verifier(), zoo.generated("ball-len", "ge", 2, 1),
              zoo.generated("ones-plus-label", "parity", 1, 1)):
        B, R = pi1lp_to_pi1plocal(A, X, h)
        for n in range(1, 5):
            for _ in range(40):
                cfg = build_path([rng.choice((1, 3, 200)) for _ in range(n)])
                ids = consecutive_ids(cfg)
                certs = []
                for u in range(n):
                    budget = X(view_bits(extract_view(cfg, ids, None, u, A.radius)))
                    length = rng.choice((0, 1, budget, budget + 1, budget + 5))
                    certs.append("".join(rng.choice("01") for _ in range(length)))
                for v in range(n):
                    local_checks += 1
                    got = run(B, extract_view(cfg, ids, certs, v, B.radius))[0]
                    if _oversized(cfg, ids, certs, A.radius, X, v):
                        want = True
                    else:
                        want = run(A, extract_view(cfg, ids, certs, v, A.radius))[0]
                    if got != want:
                        problems.append((A.name, _labels(cfg), v))
    A = agtg_pi1_verifier()
    B, R = pi1lp_to_pi1plocal(A, X, h)
    end_to_end = 0
    for n in range(1, 5):
        for ls in itertools.product((1, 3, 200), repeat=n):
            cfg = build_path(ls)
            end_to_end += 1
            lhs = pi1_classify(B, cfg, ClassSpec.pi1_plocal(R)).outcome
            rhs = pi1_classify(A, cfg, ClassSpec.pi1_lp(X)).outcome
            if lhs != rhs:
                problems.append(("end-to-end", list(ls), lhs, rhs))
    acceptance_line(6, "Screening transform", not problems,
                    f"{local_checks} node checks, {end_to_end} configs, R = {R}")
    assert not problems, problems[:5]


def test_criterion_07_iter(acceptance_line):
    report = exp_iter(mutations=20, seed=7)
    lengths = {name: e["rejecting"].get("pivot_certificate_length")
               for name, e in report.witnesses.items()}
    acceptance_line(7, "ITER and ITER-minus", report.passed, f"pivot witness lengths {lengths}")
    assert report.passed, report.witnesses


def test_criterion_08_envelope(acceptance_line):
    report = exp_envelope(count=100, seed=8, m_max=1000, max_degree=4)
    acceptance_line(8, "Monotone dominator", report.passed,
                    f"{len(report.witnesses['violations'])} violations")
    assert report.passed, report.witnesses


def test_criterion_09_path_l(acceptance_line):
    report = exp_path_l(max_len=6, r=1)
    acceptance_line(9, "path_L decisions and view identity", report.passed,
                    f"{report.explored['instances']} words, {len(report.mappings['view_sweeps'])} sweeps")
    assert report.passed, report.witnesses


def test_criterion_10_warmups(acceptance_line):
    problems = []
    checked = 0
    shapes = [[(0, 1), (1, 2), (0, 2)]] + [[(i, i + 1) for i in range(n - 1)] for n in range(1, 5)]
    k = 3
    verifier, member = coloring_verifier(k), coloring_membership(k)
    for edges in shapes:
        n = 1 + max((max(e) for e in edges), default=0)
        for colors in itertools.product(range(0, k + 1), repeat=n):
            cfg = build_graph(n, edges, colors)
            checked += 1
            if run_all(verifier, cfg).accepted != member(cfg):
                problems.append(("coloring", edges, colors))
    for g in nx.graph_atlas_g():
        if not 1 <= g.number_of_nodes() <= 5:
            continue
        for k in (1, 2, 3):
            cfg = build_graph(g.number_of_nodes(), list(g.edges()), [0] * g.number_of_nodes())
            checked += 1
            spec = ClassSpec.sigma1_plocal(colorability_bound(k))
            got = sigma1_decide(colorability_verifier(k), cfg, spec).yes
            if got != colorability_membership(k)(cfg):
                problems.append(("colorability", list(g.edges()), k))
    acceptance_line(10, "Coloring and colorability warm-ups", not problems,
                    f"{checked} instances")
    assert not problems, problems[:5]


if __name__ == "__main__":
    import sys

    import pytest

    sys.exit(pytest.main([__file__, "-q"]))
