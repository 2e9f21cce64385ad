"""Integer-coefficient polynomials used as time and certificate budgets.

Polynomials are written in ``x`` on the command line and in reports, e.g.
``"2x^2 - 4x + 1"``.  Grammar (whitespace ignored)::

    poly  := ["-"] term (("+" | "-") term)*
    term  := coeff ["*"] power | coeff | power
    power := "x" ["^" digits]
    coeff := digits
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import comb

from .errors import NonPositiveLeading

_TERM = re.compile(r"([+-])?(\d+)?\*?(x(?:\^(\d+))?)?")


@dataclass(frozen=True)
class PolyBound:
    """Polynomial ``sum(coeffs[i] * x**i)``; coefficients lowest degree first."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = tuple(int(a) for a in self.coeffs)
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def constant(cls, a: int) -> "PolyBound":
        return cls((a,))

    @classmethod
    def identity(cls) -> "PolyBound":
        return cls((0, 1))

    @classmethod
    def parse(cls, text: str) -> "PolyBound":
        if re.search(r"[\dx^]\s+[\dx^]", str(text)):
            raise ValueError(f"missing operator in {text!r}")
        s = re.sub(r"\s+", "", str(text))
        if not s:
            raise ValueError("empty polynomial")
        coeffs: dict[int, int] = {}
        pos = 0
        first = True
        while pos < len(s):
            m = _TERM.match(s, pos)
            sign, digits, power, exp = m.groups()
            if m.end() == pos or (digits is None and power is None):
                raise ValueError(f"cannot parse polynomial {text!r} at {pos}")
            if sign is None and not first:
                raise ValueError(f"missing operator in {text!r} at {pos}")
            a = int(digits) if digits is not None else 1
            if sign == "-":
                a = -a
            k = 0 if power is None else (int(exp) if exp is not None else 1)
            coeffs[k] = coeffs.get(k, 0) + a
            pos = m.end()
            first = False
        degree = max(coeffs)
        return cls(tuple(coeffs.get(i, 0) for i in range(degree + 1)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __call__(self, m: int) -> int:
        return poly_eval(self, m)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            a = self.coeffs[k]
            if a == 0:
                continue
            mag = abs(a)
            if k == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("x" if k == 1 else f"x^{k}")
            if not parts:
                parts.append(("-" if a < 0 else "") + body)
            else:
                parts.append(("- " if a < 0 else "+ ") + body)
        return " ".join(parts)


def poly_eval(p: PolyBound, m: int) -> int:
    """Exact Horner evaluation at an integer point."""
    acc = 0
    for a in reversed(p.coeffs):
        acc = acc * m + a
    return acc


def monotone_dominator(p: PolyBound) -> PolyBound:
    """Return ``(sum |a_i|) * (x + 1)**k`` for ``p`` of degree ``k``.

    For every integer m >= 0 the result is >= p(m) and nondecreasing in m,
    because ``|a_i| m**i <= |a_i| (m+1)**k`` term by term.
    """
    if p.leading <= 0:
        raise NonPositiveLeading(f"leading coefficient of {p} must be positive")
    k = p.degree
    s = sum(abs(a) for a in p.coeffs)
    return PolyBound(tuple(s * comb(k, i) for i in range(k + 1)))


def compose(outer: PolyBound, inner: PolyBound) -> PolyBound:
    """Polynomial composition ``outer(inner(x))``."""
    result = PolyBound()
    for a in reversed(outer.coeffs):
        result = _add(_mul(result, inner), PolyBound((a,)))
    return result


def multiply(p: PolyBound, q: PolyBound) -> PolyBound:
    return _mul(p, q)


def _mul(p: PolyBound, q: PolyBound) -> PolyBound:
    if not p.coeffs or not q.coeffs:
        return PolyBound()
    out = [0] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        for j, b in enumerate(q.coeffs):
            out[i + j] += a * b
    return PolyBound(tuple(out))


def _add(p: PolyBound, q: PolyBound) -> PolyBound:
    n = max(len(p.coeffs), len(q.coeffs))
    pa = p.coeffs + (0,) * (n - len(p.coeffs))
    qa = q.coeffs + (0,) * (n - len(q.coeffs))
    return PolyBound(tuple(a + b for a, b in zip(pa, qa)))
