"""path_L: an n-node path labeled (n,n), ..., (n,2), (n,1;phi) with phi in L.

``L`` is any membership oracle on binary words; binary palindromes are the
bundled decidable stand-in.
"""

from __future__ import annotations

from typing import Callable

from ..engine import CERT_NONE, Verifier, word_ops
from ..errors import WordTooLong
from ..graph import Configuration, Label, build_path

WordOracle = Callable[[str], bool]


def palindrome(word: str) -> bool:
    return word == word[::-1]


def max_word_length(n: int) -> int:
    """floor(log2 n)."""
    return n.bit_length() - 1


def build_path_L(phi: str, n: int) -> Configuration:
    if n < 1:
        raise ValueError("n must be positive")
    if len(phi) > max_word_length(n):
        raise WordTooLong(f"|phi| = {len(phi)} exceeds floor(log2 {n}) = {max_word_length(n)}")
    labels = [Label((n, n - i)) for i in range(n - 1)] + [Label((n, 1), phi)]
    return build_path(labels)


def _fits(labels, n) -> bool:
    for pos, lab in enumerate(labels):
        i = n - pos
        if lab.ints != (n, i):
            return False
        if i == 1:
            if lab.word is None or len(lab.word) > max_word_length(n):
                return False
        elif lab.word is not None:
            return False
    return True


def path_L_membership(cfg: Configuration, L: WordOracle = palindrome) -> bool:
    if not cfg.is_path():
        return False
    order = cfg.path_order()
    labels = [cfg.labels[v] for v in order]
    for seq in (labels, labels[::-1]):
        if _fits(seq, cfg.n):
            return bool(L(seq[-1].word))
    return False


def _parse(label):
    if len(label.ints) != 2 or label.ints[1] < 1 or label.ints[1] > label.ints[0]:
        return None
    m, i = label.ints
    if (i == 1) != (label.word is not None):
        return None
    return m, i


def path_L_endpoint_verifier(L: WordOracle = palindrome) -> Verifier:
    """Radius 1.  Node (m,i) needs exactly the neighbors (m,i-1) and (m,i+1)
    that exist in 1..m; node (m,1;phi) also checks |phi| and evaluates L."""

    def decide(view, meter):
        own = _parse(meter.read(view.root.label))
        if own is None:
            return False
        m, i = own
        if i == 1:
            phi = view.root.label.word
            meter.tick(word_ops(len(phi)))
            if len(phi) > max_word_length(m) or not L(phi):
                return False
        want = sorted(j for j in (i - 1, i + 1) if 1 <= j <= m)
        got = []
        for j in view.neighbors(0):
            p = _parse(meter.read(view.nodes[j].label))
            meter.tick()
            if p is None or p[0] != m:
                return False
            got.append(p[1])
        return sorted(got) == want

    return Verifier("path-L", 1, decide, cert_access=CERT_NONE, reads_ids=False)
