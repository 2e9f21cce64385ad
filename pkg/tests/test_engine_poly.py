import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from locdec import zoo
from locdec.engine import lift, run, run_all, within_budget, word_ops
from locdec.errors import MissingN, NonPositiveLeading, RadiusMismatch
from locdec.graph import build_graph, build_path, consecutive_ids, extract_view
from locdec.languages import agtg_pi1_verifier, altg_verifier_with_n, coloring_verifier
from locdec.poly import PolyBound, compose, monotone_dominator, multiply, poly_eval

TRIANGLE = [(0, 1), (1, 2), (0, 2)]


def _view(label, cert, radius=0):
    cfg = build_path([label])
    return extract_view(cfg, consecutive_ids(cfg), (cert,), 0, radius)


def test_agtg_rule_strict_inequality():
    ver = agtg_pi1_verifier()
    assert run(ver, _view(5, "101"))[0] is True
    assert run(ver, _view(2, "101"))[0] is False
    assert run(ver, _view(4, "1111"))[0] is False


def test_run_is_deterministic():
    ver = agtg_pi1_verifier()
    view = _view(9, "0110")
    assert run(ver, view) == run(ver, view)


def test_radius_mismatch_and_missing_n():
    with pytest.raises(RadiusMismatch):
        run(agtg_pi1_verifier(), _view(5, "", radius=1))
    with pytest.raises(MissingN):
        run(altg_verifier_with_n(), _view(2, ""))
    assert run(altg_verifier_with_n(), _view(2, ""), 3)[0] is True


def test_run_all_coloring():
    ver = coloring_verifier(3)
    assert run_all(ver, build_graph(3, TRIANGLE, [1, 2, 3])).accepted
    bad = run_all(ver, build_graph(3, TRIANGLE, [1, 1, 2]))
    assert not bad.accepted
    assert bad.rejecting == [0, 1]
    single = run_all(ver, build_path([2]))
    assert single.accepted and len(single.nodes) == 1


def test_poly_eval_examples():
    assert poly_eval(PolyBound.identity(), 5) == 5
    assert poly_eval(PolyBound((1, -4, 1)), 1) == -2
    assert poly_eval(PolyBound(), 7) == 0


@pytest.mark.parametrize("text, coeffs", [
    ("x", (0, 1)), ("2x^2 + 3", (3, 0, 2)), ("x^2-4x+1", (1, -4, 1)), ("7", (7,)),
    ("64x^3 + 1", (1, 0, 0, 64)),
])
def test_poly_parse_and_print(text, coeffs):
    p = PolyBound.parse(text)
    assert p.coeffs == coeffs
    assert PolyBound.parse(str(p)) == p


@pytest.mark.parametrize("bad", ["", "x^", "2 3", "y"])
def test_poly_parse_rejects(bad):
    with pytest.raises(ValueError):
        PolyBound.parse(bad)


@pytest.mark.parametrize("p, expected", [
    ((0, 0, 1), (1, 2, 1)),
    ((1, -4, 1), (6, 12, 6)),
    ((0, -100, 1, 1), (102, 306, 306, 102)),
])
def test_monotone_dominator_examples(p, expected):
    assert monotone_dominator(PolyBound(p)).coeffs == expected


def test_monotone_dominator_needs_positive_leading():
    with pytest.raises(NonPositiveLeading):
        monotone_dominator(PolyBound((3, -1)))


@given(st.lists(st.integers(-50, 50), max_size=4), st.integers(1, 50))
@settings(max_examples=100, deadline=None)
def test_dominator_dominates_and_is_monotone(lower, lead):
    P = PolyBound(tuple(lower) + (lead,))
    D = monotone_dominator(P)
    prev = None
    for m in range(0, 200):
        assert D(m) >= P(m)
        if prev is not None:
            assert D(m) >= prev
        prev = D(m)


@given(st.lists(st.integers(-5, 5), max_size=3), st.lists(st.integers(-5, 5), max_size=3),
       st.integers(-10, 10))
@settings(max_examples=100, deadline=None)
def test_compose_and_multiply_pointwise(a, b, m):
    p, q = PolyBound(tuple(a)), PolyBound(tuple(b))
    assert compose(p, q)(m) == p(q(m))
    assert multiply(p, q)(m) == p(m) * q(m)


def test_word_ops():
    assert word_ops(0) == 1 and word_ops(64) == 1 and word_ops(65) == 2


def test_budget_linear_verifier_within_square():
    report = run_all(agtg_pi1_verifier(), build_path([5, 6, 7]), None, ("1", "", "0110"))
    assert within_budget(report, PolyBound.parse("x^2")).within


def test_budget_exponential_verifier_exceeds():
    ver = zoo.exponential()
    small = within_budget(run_all(ver, build_path([1])), PolyBound.parse("x^2"))
    big = within_budget(run_all(ver, build_path([1 << 40])), PolyBound.parse("x^2"))
    assert not big.within
    assert big.worst_ratio > small.worst_ratio


def test_budget_constant_verifier_single_node():
    report = run_all(zoo.constant(True), build_path([3]))
    assert within_budget(report, PolyBound.identity()).within
    assert within_budget(report, PolyBound.identity(), "global").to_json()["within"]


def test_lift_keeps_verdicts():
    base = agtg_pi1_verifier()
    lifted = lift(base, 2)
    cfg = build_path([1, 5, 2, 9])
    certs = ("", "11", "01", "0")
    assert run_all(lifted, cfg, None, certs).verdicts == run_all(base, cfg, None, certs).verdicts
    with pytest.raises(ValueError):
        lift(lifted, 1)
