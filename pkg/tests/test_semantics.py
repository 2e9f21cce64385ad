import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from locdec import zoo
from locdec.engine import run_all
from locdec.errors import SpaceTooLarge, UniverseTooLarge
from locdec.graph import build_graph, build_path, consecutive_ids, id_universe
from locdec.harness import agtg_triple
from locdec.languages import (
    agtg_membership,
    agtg_npld_prover,
    agtg_npld_verifier,
    agtg_pi1_verifier,
    altg_verifier_with_n,
    coloring_membership,
    coloring_verifier,
    not_all_selected_membership,
    npld_bound,
)
from locdec.poly import PolyBound
from locdec.semantics import (
    INCONSISTENT,
    UNIFORM_ACCEPT,
    UNIFORM_REJECT,
    ClassSpec,
    certificate_count,
    check_class_membership,
    classify,
    cert_to_hex,
    decide_ld,
    enumerate_certificates,
    hex_to_cert,
    pi1_classify,
    sigma1_decide,
    strings_upto,
)

X = PolyBound.identity()
TRIANGLE = [(0, 1), (1, 2), (0, 2)]


# ---------------------------------------------------------------- enumeration

def test_enumeration_counts():
    assert [c.certs for c in enumerate_certificates([1])] == [("",), ("0",), ("1",)]
    assert len(list(enumerate_certificates([1, 1]))) == 9
    assert [c.certs for c in enumerate_certificates([0, 0, 0])] == [("", "", "")]
    assert certificate_count([2]) == 7
    assert certificate_count([2, 2]) == 49
    assert certificate_count([]) == 1


def test_enumeration_order_is_length_then_shortlex():
    got = [c.certs for c in enumerate_certificates([1, 1])]
    assert got[:5] == [("", ""), ("", "0"), ("", "1"), ("0", ""), ("1", "")]
    key = lambda c: (sum(map(len, c)), [(len(s), s) for s in c])
    assert got == sorted(got, key=key)


@given(st.lists(st.integers(0, 2), min_size=1, max_size=3))
@settings(max_examples=30, deadline=None)
def test_enumeration_is_complete_and_unique(bounds):
    got = [c.certs for c in enumerate_certificates(bounds)]
    assert len(got) == len(set(got)) == certificate_count(bounds)
    everything = set(itertools.product(*(strings_upto(b) for b in bounds)))
    assert set(got) == everything


def test_enumeration_cap():
    with pytest.raises(SpaceTooLarge):
        list(enumerate_certificates([3, 3, 3], cap=100))


@pytest.mark.parametrize("cert", ["", "0", "1", "0001", "1011010", "0" * 9])
def test_hex_round_trip(cert):
    assert hex_to_cert(cert_to_hex(cert)) == cert
    assert cert_to_hex("") == "0:"


# ----------------------------------------------------------------------- LD

def test_decide_ld_coloring_triangles():
    cfgs = [build_graph(3, TRIANGLE, cs) for cs in itertools.product((1, 2, 3), repeat=3)]
    rep = decide_ld(coloring_verifier(3), coloring_membership(3), cfgs, slack=0)
    assert rep.ok and rep.checked == 27


def test_decide_ld_finds_violation_and_is_vacuous_on_empty():
    rep = decide_ld(zoo.constant(True), not_all_selected_membership, [build_path([1])])
    assert not rep.ok
    assert decide_ld(zoo.constant(True), not_all_selected_membership, []).ok


def test_ld_inconsistent_over_ids():
    outcome, _ = classify(zoo.id_parity(), build_path([1, 1]), ClassSpec.ld())
    assert outcome == INCONSISTENT


# ------------------------------------------------------------------- sigma1

def test_sigma1_npld_yes_with_prover_witness():
    cfg = build_path([5, 5, 5])
    res = sigma1_decide(agtg_npld_verifier(), cfg, ClassSpec.sigma1_plocal(npld_bound()))
    assert res.yes
    assert res.witness == agtg_npld_prover(cfg).certs


def test_sigma1_npld_no_instance():
    res = sigma1_decide(agtg_npld_verifier(), build_path([2, 5, 5]),
                        ClassSpec.sigma1_plocal(npld_bound()))
    assert not res.yes and res.witness is None


def test_sigma1_trivial_bound_zero():
    res = sigma1_decide(zoo.constant(True), build_path([1, 2]),
                        ClassSpec.sigma1_plocal(PolyBound.constant(0)))
    assert res.yes and res.witness == ("", "")


def test_sigma1_witness_accepted_under_every_id():
    ver = zoo.generated("own-ones", "ge", 1, 0)
    cfg = build_path([1, 2, 3])
    res = sigma1_decide(ver, cfg, ClassSpec.sigma1_plocal(PolyBound.constant(1)))
    assert res.yes
    assert res.witness == ("1", "1", "1")
    for ids in id_universe(cfg, 1):
        assert run_all(ver, cfg, ids, res.witness).accepted


@given(st.lists(st.integers(1, 4), min_size=1, max_size=3), st.integers(0, 2), st.integers(0, 2))
@settings(max_examples=40, deadline=None)
def test_sigma1_monotone_in_the_bound(labels, q1, extra):
    cfg = build_path(labels)
    ver = zoo.generated("ones-plus-label", "parity", 0, 1)
    small = sigma1_decide(ver, cfg, ClassSpec.sigma1_plocal(PolyBound.constant(q1)))
    if small.yes:
        big = sigma1_decide(ver, cfg, ClassSpec.sigma1_plocal(PolyBound.constant(q1 + extra)))
        assert big.yes and big.witness is not None


def test_sigma1_local_flavor_flags_bounded_exploration():
    res = sigma1_decide(agtg_npld_verifier(), build_path([5, 5]), ClassSpec.sigma1_local(npld_bound()))
    assert res.yes and res.bounded_exploration


# ---------------------------------------------------------------------- pi1

def test_pi1_agtg_yes_and_no():
    spec = ClassSpec.pi1_plocal(X)
    assert pi1_classify(agtg_pi1_verifier(), build_path([5, 5, 5]), spec).outcome == UNIFORM_ACCEPT
    res = pi1_classify(agtg_pi1_verifier(), build_path([2, 5, 5]), spec)
    assert res.outcome == UNIFORM_REJECT
    # the first rejecting assignment in enumeration order is the shortest one
    assert res.witness == ("00", "", "")


def test_pi1_altg_knows_n():
    spec = ClassSpec.pi1_plocal(PolyBound.constant(1), knows_n=True)
    res = pi1_classify(altg_verifier_with_n(), build_path([2, 2, 2]), spec)
    assert res.outcome == UNIFORM_ACCEPT


def test_n_aware_verifier_needs_knows_n():
    with pytest.raises(ValueError):
        pi1_classify(altg_verifier_with_n(), build_path([2]), ClassSpec.pi1_plocal(X))


def test_pi1_inconsistent_surfaces_id_witnesses():
    res = pi1_classify(zoo.id_parity(), build_path([1, 1]), ClassSpec.pi1_plocal(X))
    assert res.outcome == INCONSISTENT
    assert res.accepting_ids is not None and res.rejecting_ids is not None
    assert run_all(zoo.id_parity(), build_path([1, 1]), res.accepting_ids).accepted
    assert not run_all(zoo.id_parity(), build_path([1, 1]), res.rejecting_ids).accepted


def test_pi1_cap():
    with pytest.raises(SpaceTooLarge):
        pi1_classify(zoo.generated("ball-ones", "parity", 0, 1), build_path([1, 1, 1]),
                     ClassSpec.pi1_plocal(PolyBound.constant(6)), slack=0, cap=50,
                     use_symmetry=False)


# symmetry declarations only prune; they never change an outcome
@given(st.lists(st.integers(1, 3), min_size=1, max_size=3),
       st.sampled_from(sorted(zoo.FEATURES)), st.sampled_from(zoo.PREDICATES),
       st.integers(0, 1), st.integers(0, 2))
@settings(max_examples=60, deadline=None)
def test_symmetry_declarations_are_honest(labels, feature, pred, r, q):
    ver = zoo.generated(feature, pred[0], pred[1], r)
    cfg = build_path(labels)
    for spec in (ClassSpec.pi1_plocal(PolyBound.constant(q)), ClassSpec.pi1_lp(PolyBound.constant(q))):
        fast = pi1_classify(ver, cfg, spec)
        slow = pi1_classify(ver, cfg, spec, use_symmetry=False)
        assert fast.outcome == slow.outcome
    s_spec = ClassSpec.sigma1_plocal(PolyBound.constant(q))
    assert sigma1_decide(ver, cfg, s_spec).yes == sigma1_decide(ver, cfg, s_spec, use_symmetry=False).yes


# --------------------------------------------------------- class membership

def test_check_class_membership_agtg_pass():
    cfgs = [build_path(ls) for n in (1, 2, 3) for ls in itertools.product(range(1, 8), repeat=n)]
    rep = check_class_membership(agtg_pi1_verifier(), ClassSpec.pi1_plocal(X), agtg_membership, cfgs)
    assert rep.ok and len(rep.entries) == len(cfgs)


def test_check_class_membership_unbounded_exploration_fails_on_triple():
    t = agtg_triple(1)
    rep = check_class_membership(agtg_pi1_verifier(), ClassSpec.pi1_local(PolyBound((0, 2))),
                                 agtg_membership, [t.g1, t.g2, t.g3])
    assert not rep.ok


def test_check_class_membership_coloring_with_budget():
    cfgs = [build_graph(3, TRIANGLE, cs) for cs in itertools.product((1, 2, 3), repeat=3)]
    rep = check_class_membership(coloring_verifier(3), ClassSpec.pld(PolyBound.parse("x^2 + 10")),
                                 coloring_membership(3), cfgs)
    assert rep.ok and rep.worst_budget_ratio <= 1.0
    assert rep.to_json()["pass"]


def test_classspec_validation():
    with pytest.raises(ValueError):
        ClassSpec("Pi1", "plocal")
    with pytest.raises(ValueError):
        ClassSpec("LD", time_bound=X)
    with pytest.raises(ValueError):
        ClassSpec("Sigma1", "lp", X, knows_n=True)
    assert ClassSpec.pi1_lp(X).id_mode == "local"
    assert ClassSpec.pi1_plocal(X).id_mode == "global"
    assert ClassSpec.pi1_plocal(X, knows_n=True).describe() == "Pi1^plocal[n](Q=x)"


def test_consecutive_ids_used_by_default():
    assert consecutive_ids(build_path([1, 1, 1])).ids == (1, 2, 3)


def test_id_universe_cap_is_reported():
    with pytest.raises(UniverseTooLarge):
        pi1_classify(zoo.id_parity(), build_path([1, 1, 1, 1]), ClassSpec.pi1_plocal(X), cap=50)
