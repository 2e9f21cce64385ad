"""One-node languages defined by an arbitrary word oracle.

Only a decidable stand-in ships; the oracle is pluggable.
"""

from __future__ import annotations

from ..engine import CERT_NONE, Verifier, word_ops
from ..graph import Configuration
from .pathl import WordOracle, palindrome


def single_node_membership(cfg: Configuration, L: WordOracle = palindrome) -> bool:
    if cfg.n != 1 or cfg.edges:
        return False
    word = cfg.labels[0].word
    return word is not None and bool(L(word))


def single_node_verifier(L: WordOracle = palindrome) -> Verifier:
    """Radius 1: accept iff there are no neighbors and the word is in L."""

    def decide(view, meter):
        if meter.read(len(view.neighbors(0))):
            return False
        word = meter.read(view.root.label.word)
        if word is None:
            return False
        meter.tick(word_ops(len(word)))
        return bool(L(word))

    return Verifier("single-node", 1, decide, cert_access=CERT_NONE, reads_ids=False)
