import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from locdec.engine import run, run_all
from locdec.errors import BadLabel, NonHaltingInput, NotColorable, WordTooLong
from locdec.graph import CertificateAssignment, Label, build_graph, build_path, consecutive_ids, extract_view
from locdec.languages import (
    LANGUAGE_NAMES,
    agtg_membership,
    agtg_npld_prover,
    agtg_npld_verifier,
    agtg_pi1_verifier,
    altg_membership,
    altg_verifier_with_n,
    build_path_L,
    colorability_bound,
    colorability_membership,
    colorability_prover,
    colorability_verifier,
    coloring_membership,
    coloring_verifier,
    get_language,
    iter_build,
    iter_membership,
    iter_minus_verifier,
    not_all_selected_membership,
    palindrome,
    path_L_endpoint_verifier,
    path_L_membership,
    single_node_membership,
    single_node_verifier,
)
from locdec.languages.iter import mutate
from locdec.languages.thresholds import decode_pair, encode_pair
from locdec.poly import PolyBound
from locdec.semantics import ClassSpec, sigma1_decide
from locdec.turing import BUNDLED, EVEN_PARITY, LOOPER

TRIANGLE = [(0, 1), (1, 2), (0, 2)]


def test_coloring_examples():
    ver = coloring_verifier(3)
    assert run_all(ver, build_graph(3, TRIANGLE, [1, 2, 3])).accepted
    assert run_all(ver, build_path([1, 1])).rejecting == [0, 1]
    assert run_all(ver, build_path([1, 2, 1])).accepted
    assert not coloring_membership(3)(build_path([0, 1]))


def test_colorability_examples():
    tri = build_graph(3, TRIANGLE, [0, 0, 0])
    certs = colorability_prover(tri, 3)
    assert run_all(colorability_verifier(3), tri, None, certs).accepted
    assert sigma1_decide(colorability_verifier(3), tri, ClassSpec.sigma1_plocal(colorability_bound(3))).yes
    assert not sigma1_decide(colorability_verifier(2), tri,
                             ClassSpec.sigma1_plocal(colorability_bound(2))).yes
    with pytest.raises(NotColorable):
        colorability_prover(tri, 2)
    single = sigma1_decide(colorability_verifier(1), build_path([0]),
                           ClassSpec.sigma1_plocal(colorability_bound(1)))
    assert single.yes and single.witness == ("0",)


def test_not_all_selected():
    assert not_all_selected_membership(build_path([0, 1, 1]))
    assert not not_all_selected_membership(build_path([1, 1]))
    assert not_all_selected_membership(build_path([0]))
    with pytest.raises(BadLabel):
        not_all_selected_membership(build_path([2]))


def test_agtg_examples():
    assert agtg_membership(build_path([4, 5, 5]))
    assert not agtg_membership(build_path([3, 5, 5]))
    cfg = build_path([4])
    view = extract_view(cfg, consecutive_ids(cfg), ("1111",), 0, 0)
    assert run(agtg_pi1_verifier(), view)[0] is False


def test_npld_prover_and_bad_counter():
    cfg = build_path([5, 5, 5])
    assert run_all(agtg_npld_verifier(), cfg, None, agtg_npld_prover(cfg)).accepted
    # every node claims n = 2, which cannot fit a consecutive count on 3 nodes
    fake = (encode_pair(1, 2), encode_pair(2, 2), encode_pair(2, 2))
    assert not run_all(agtg_npld_verifier(), cfg, None, fake).accepted


@given(st.integers(1, 30), st.integers(1, 30))
def test_pair_round_trip(i, n):
    assert decode_pair(encode_pair(i, n)) == (i, n)


@pytest.mark.parametrize("cert", ["", "0", "01", "10", "1010", "111"])
def test_pair_decoder_rejects_empty_fields(cert):
    assert decode_pair(cert) is None


@given(st.lists(st.integers(1, 12), min_size=1, max_size=6))
@settings(max_examples=60, deadline=None)
def test_npld_prover_complete_on_members(labels):
    cfg = build_path(labels)
    if agtg_membership(cfg):
        assert run_all(agtg_npld_verifier(), cfg, None, agtg_npld_prover(cfg)).accepted


def test_npld_prover_works_from_either_end():
    cfg = build_graph(3, [(2, 1), (1, 0)], [5, 5, 5])
    assert run_all(agtg_npld_verifier(), cfg, None, agtg_npld_prover(cfg)).accepted


def test_altg_examples():
    assert altg_membership(build_path([2, 2, 2]))
    assert not altg_membership(build_path([3, 2, 2]))
    cfg = build_path([2, 2, 2])
    assert run(altg_verifier_with_n(), extract_view(cfg, consecutive_ids(cfg), None, 0, 0), 3)[0]


def test_path_l_examples():
    assert path_L_membership(build_path_L("0110", 16), palindrome)
    assert not path_L_membership(build_path_L("01", 16), palindrome)
    cfg = build_path_L("1", 4)
    assert [lab.ints for lab in cfg.labels] == [(4, 4), (4, 3), (4, 2), (4, 1)]
    assert cfg.labels[-1].word == "1"
    with pytest.raises(WordTooLong):
        build_path_L("010", 4)


@pytest.mark.parametrize("phi", ["", "0", "01", "010", "0110", "0111"])
def test_path_l_verifier_matches_oracle(phi):
    n = max(2, 1 << len(phi))
    cfg = build_path_L(phi, n)
    ver = path_L_endpoint_verifier(palindrome)
    assert run_all(ver, cfg).accepted == path_L_membership(cfg, palindrome)


def test_path_l_reversed_orientation():
    cfg = build_path_L("00", 4)
    flipped = build_graph(4, [(3 - u, 3 - w) for u, w in cfg.edges], cfg.labels[::-1])
    assert path_L_membership(flipped, palindrome)
    assert run_all(path_L_endpoint_verifier(palindrome), flipped).accepted


def test_single_node():
    yes = build_graph(1, [], [Label((), "0110")])
    no = build_graph(1, [], [Label((), "01")])
    ver = single_node_verifier(palindrome)
    assert single_node_membership(yes) and run_all(ver, yes).accepted
    assert not single_node_membership(no) and not run_all(ver, no).accepted


def test_iter_even_parity_instances():
    good = iter_build(EVEN_PARITY, "11", "1")
    assert iter_membership(good, EVEN_PARITY) and run_all(iter_minus_verifier(), good).accepted
    bad = iter_build(EVEN_PARITY, "1", "111")
    assert iter_membership(bad, strict=False) and not iter_membership(bad)
    assert run_all(iter_minus_verifier(), bad).accepted
    with pytest.raises(NonHaltingInput):
        iter_build(LOOPER, "0", "1", cap=50)


@pytest.mark.parametrize("name", sorted(BUNDLED))
def test_iter_mutations_are_detected(name):
    cfg = iter_build(BUNDLED[name], "10", "0")
    rng = random.Random(name)
    for _ in range(10):
        mutated, what = mutate(cfg, rng)
        assert not iter_membership(mutated, strict=False), what
        assert not run_all(iter_minus_verifier(), mutated).accepted, what


def test_registry_complete():
    for name in LANGUAGE_NAMES:
        lang = get_language(name)
        assert lang.name == name and lang.description
        for ver, spec in lang.verifiers.values():
            assert isinstance(spec, ClassSpec)
    with pytest.raises(KeyError):
        get_language("nope")


def test_colorability_oracle_small_graphs():
    for n in range(1, 4):
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
            cfg = build_graph(n, edges, [0] * n)
            for k in (1, 2, 3):
                got = sigma1_decide(colorability_verifier(k), cfg,
                                    ClassSpec.sigma1_plocal(colorability_bound(k))).yes
                assert got == colorability_membership(k)(cfg)


def test_certificate_assignment_bounds_checked():
    with pytest.raises(ValueError):
        CertificateAssignment(("000",), (2,))
    assert PolyBound.constant(2)(10) == 2
