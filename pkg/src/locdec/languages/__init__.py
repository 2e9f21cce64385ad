"""Every concrete language, with its verifiers, class specs and provers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from ..engine import Verifier
from ..graph import Configuration
from ..poly import PolyBound
from ..semantics import ClassSpec
from .coloring import (
    colorability_bound,
    colorability_membership,
    colorability_prover,
    colorability_verifier,
    coloring_membership,
    coloring_verifier,
    not_all_selected_membership,
)
from .iter import iter_build, iter_membership, iter_minus_verifier, iter_pi1_bound, iter_pi1_verifier
from .pathl import build_path_L, palindrome, path_L_endpoint_verifier, path_L_membership
from .single_node import single_node_membership, single_node_verifier
from .thresholds import (
    agtg_membership,
    agtg_npld_prover,
    agtg_npld_verifier,
    agtg_pi1_verifier,
    altg_membership,
    altg_verifier_with_n,
    npld_bound,
)


@dataclass(frozen=True)
class Language:
    """``verifiers`` maps a semantics name (as used by the CLI) to a
    (verifier, class spec) pair."""

    name: str
    membership: Callable[[Configuration], bool]
    shape: str = "any"
    verifiers: dict = field(default_factory=dict)
    prover: Callable | None = None
    description: str = ""


def get_language(name: str, k: int = 3) -> Language:
    try:
        make = _REGISTRY[name]
    except KeyError:
        raise KeyError(f"unknown language {name!r}; known: {', '.join(LANGUAGE_NAMES)}") from None
    return make(k)


def _coloring(k):
    return Language("coloring", coloring_membership(k), "any",
                    {"ld": (coloring_verifier(k), ClassSpec.ld())},
                    description=f"proper {k}-coloring given as labels")


def _colorability(k):
    return Language(
        "colorability", colorability_membership(k), "any",
        {"sigma1-plocal": (colorability_verifier(k), ClassSpec.sigma1_plocal(colorability_bound(k)))},
        lambda cfg: colorability_prover(cfg, k),
        f"{k}-colorable graphs, certified by a coloring")


def _nas(k):
    return Language("not-all-selected", not_all_selected_membership, "any",
                    description="some node is labeled 0")


def _agtg(k):
    return Language(
        "agtg", agtg_membership, "path",
        {"pi1-plocal": (agtg_pi1_verifier(), ClassSpec.pi1_plocal(PolyBound.identity())),
         "sigma1-plocal": (agtg_npld_verifier(), ClassSpec.sigma1_plocal(npld_bound()))},
        agtg_npld_prover, "paths whose labels all exceed n")


def _altg(k):
    return Language(
        "altg", altg_membership, "path",
        {"pi1-plocal-n": (altg_verifier_with_n(),
                          ClassSpec.pi1_plocal(PolyBound.identity(), knows_n=True))},
        description="paths whose labels are all below n")


def _pathl(k):
    return Language("path-l", path_L_membership, "path",
                    {"ld": (path_L_endpoint_verifier(palindrome), ClassSpec.ld())},
                    description="labeled paths ending in a palindrome word")


def _iter_minus(k):
    return Language("iter-minus", lambda cfg: iter_membership(cfg, strict=False), "path",
                    {"ld": (iter_minus_verifier(), ClassSpec.ld())},
                    description="Turing machine runs ending in halting configurations")


def _iter(k):
    return Language("iter", lambda cfg: iter_membership(cfg, strict=True), "path",
                    {"pi1-plocal": (iter_pi1_verifier(), ClassSpec.pi1_plocal(iter_pi1_bound()))},
                    description="Turing machine runs with an accepting endpoint")


def _single(k):
    return Language("single-node", single_node_membership, "any",
                    {"ld": (single_node_verifier(palindrome), ClassSpec.ld())},
                    description="one node whose word is a palindrome")


_REGISTRY = {
    "agtg": _agtg,
    "altg": _altg,
    "colorability": _colorability,
    "coloring": _coloring,
    "iter": _iter,
    "iter-minus": _iter_minus,
    "not-all-selected": _nas,
    "path-l": _pathl,
    "single-node": _single,
}
LANGUAGE_NAMES = sorted(_REGISTRY)

__all__ = [
    "Language", "get_language", "LANGUAGE_NAMES",
    "agtg_membership", "agtg_npld_prover", "agtg_npld_verifier", "agtg_pi1_verifier",
    "altg_membership", "altg_verifier_with_n", "npld_bound",
    "build_path_L", "palindrome", "path_L_endpoint_verifier", "path_L_membership",
    "colorability_membership", "colorability_prover", "colorability_verifier",
    "coloring_membership", "coloring_verifier", "not_all_selected_membership",
    "iter_build", "iter_membership", "iter_minus_verifier", "iter_pi1_verifier",
    "iter_pi1_bound", "single_node_membership", "single_node_verifier",
]
