"""Specialization of symmetric functions at ``x_j = 1/j^2``.

Under this substitution ``p_n`` becomes zeta(2n) and ``e_n``, ``h_n`` become
rational multiples of pi^{2n}.  Values are kept symbolic in pi^2 as a
:class:`ZetaValue` (degree d -> rational coefficient of pi^{2d}); nothing
here touches floating point except :meth:`ZetaValue.to_float`.
"""
from __future__ import annotations

import json
import math
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .bernoulli import bernoulli
from .checks import CheckResult, frac_str
from .symexpr import SymExpr, to_h_basis


class ZetaValue:
    """Exact ``sum_d q_d * pi^{2d}``."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, Fraction | int] | None = None):
        clean = {}
        for d, q in (coeffs or {}).items():
            if d < 0:
                raise ValueError("pi^2 degree must be nonnegative")
            q = Fraction(q)
            if q:
                clean[int(d)] = clean.get(int(d), 0) + q
        self._coeffs = {d: q for d, q in clean.items() if q}

    @classmethod
    def constant(cls, q) -> "ZetaValue":
        return cls({0: q})

    @property
    def coeffs(self) -> dict[int, Fraction]:
        return dict(sorted(self._coeffs.items()))

    def coeff(self, degree: int) -> Fraction:
        return self._coeffs.get(degree, Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, ZetaValue):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __add__(self, other: "ZetaValue") -> "ZetaValue":
        out = dict(self._coeffs)
        for d, q in other._coeffs.items():
            out[d] = out.get(d, 0) + q
        return ZetaValue(out)

    def __sub__(self, other: "ZetaValue") -> "ZetaValue":
        return self + other.scale(-1)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, ZetaValue):
            return NotImplemented
        out: dict[int, Fraction] = {}
        for d1, q1 in self._coeffs.items():
            for d2, q2 in other._coeffs.items():
                out[d1 + d2] = out.get(d1 + d2, 0) + q1 * q2
        return ZetaValue(out)

    __rmul__ = __mul__

    def scale(self, c) -> "ZetaValue":
        c = Fraction(c)
        return ZetaValue({d: q * c for d, q in self._coeffs.items()})

    def to_float(self) -> float:
        return math.fsum(float(q) * math.pi ** (2 * d) for d, q in self._coeffs.items())

    def __repr__(self):
        return f"ZetaValue({self.to_text()})"

    def to_text(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for d, q in sorted(self._coeffs.items()):
            parts.append(frac_str(q) if d == 0 else f"({frac_str(q)})*pi^{2 * d}")
        return " + ".join(parts)

    def to_latex(self) -> str:
        if not self._coeffs:
            return "0"
        out = ""
        for d, q in sorted(self._coeffs.items()):
            mag = abs(q)
            power = "" if d == 0 else rf"\pi^{{{2 * d}}}"
            if d == 0:
                body = frac_str(mag) if mag.denominator == 1 else rf"\frac{{{mag.numerator}}}{{{mag.denominator}}}"
            elif mag.denominator == 1:
                body = power if mag == 1 else f"{mag.numerator}{power}"
            else:
                num = power if mag.numerator == 1 else f"{mag.numerator}{power}"
                body = f"{num}/{mag.denominator}"
            if not out:
                out = ("-" if q < 0 else "") + body
            else:
                out += (" - " if q < 0 else " + ") + body
        return out

    def to_dict(self) -> dict:
        return {"terms": [{"pi2_degree": d, "coeff": frac_str(q)} for d, q in sorted(self._coeffs.items())]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data) -> "ZetaValue":
        out: dict[int, Fraction] = {}
        for t in data["terms"]:
            d = int(t["pi2_degree"])
            out[d] = out.get(d, 0) + Fraction(t["coeff"])
        return cls(out)


@lru_cache(maxsize=None)
def spec_e(n: int) -> ZetaValue:
    """``e_n(1, 1/4, 1/9, ...) = pi^{2n} / (2n+1)!``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return ZetaValue({n: Fraction(1, math.factorial(2 * n + 1))})


@lru_cache(maxsize=None)
def spec_h(n: int) -> ZetaValue:
    """``h_n(1, 1/4, ...) = (-1)^n pi^{2n} (2 - 2^{2n}) B_{2n} / (2n)!``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return ZetaValue.constant(1)
    q = (-1) ** n * (2 - 2 ** (2 * n)) * bernoulli(2 * n) / math.factorial(2 * n)
    return ZetaValue({n: q})


@lru_cache(maxsize=None)
def spec_p(n: int) -> ZetaValue:
    """``p_n(1, 1/4, ...) = zeta(2n) = (-1)^{n+1} (2 pi)^{2n} B_{2n} / (2 (2n)!)``."""
    if n < 1:
        raise ValueError("p_n is specialized only for n >= 1")
    q = (-1) ** (n + 1) * 2 ** (2 * n) * bernoulli(2 * n) / (2 * math.factorial(2 * n))
    return ZetaValue({n: q})


@lru_cache(maxsize=None)
def _spec_h_index(index: tuple[int, ...]) -> ZetaValue:
    out = ZetaValue.constant(1)
    for k in index:
        out = out * spec_h(k)
    return out


def specialize(a: SymExpr) -> ZetaValue:
    """Evaluate ``a`` at ``x_j = 1/j^2`` through its h expansion."""
    acc: dict[int, Fraction] = {}
    for index, c in to_h_basis(a).items():
        for d, q in _spec_h_index(index)._coeffs.items():
            acc[d] = acc.get(d, 0) + c * q
    return ZetaValue(acc)


def derive_bernoulli(lhs: SymExpr, rhs: SymExpr, identity: str = "specialized", params: dict | None = None
                     ) -> CheckResult:
    """Specialize both sides of a symmetric-function identity and compare.

    The note spells out, for every pi^2 degree present, the rational
    equation that the match (or mismatch) amounts to.
    """
    left = specialize(lhs)
    right = specialize(rhs)
    lines = []
    for d in sorted(set(left.coeffs) | set(right.coeffs)):
        a, b = left.coeff(d), right.coeff(d)
        mark = "==" if a == b else "!="
        lines.append(f"pi^{2 * d}: {frac_str(a)} {mark} {frac_str(b)}")
    return CheckResult(identity, dict(params or {}), left, right, left == right, "; ".join(lines))
