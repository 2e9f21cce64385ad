import re

from locdec import zoo
from locdec.engine import run_all
from locdec.graph import build_path


def test_family_is_large_and_uniquely_named():
    fam = zoo.family(1)
    assert len(fam) >= 50
    names = [v.name for v in fam]
    assert len(set(names)) == len(names)
    assert all(re.fullmatch(r"(ge|le|parity)\d-[a-z-]+-r1", n) for n in names)
    assert {v.radius for v in fam} == {1}


def test_generated_threshold():
    ver = zoo.generated("label-sum", "ge", 3, 0)
    assert run_all(ver, build_path([1, 3])).verdicts == [False, True]


def test_constants_and_parity():
    cfg = build_path([0, 0, 0])
    assert run_all(zoo.constant(True), cfg).accepted
    assert run_all(zoo.constant(False), cfg).rejecting == [0, 1, 2]
    # consecutive ids 1, 2, 3
    assert run_all(zoo.id_parity(), cfg).verdicts == [True, False, True]
