"""Sparse symmetric-function expressions in the e, h, p and s bases.

A :class:`SymExpr` is a basis tag plus a mapping from partitions to exact
rationals.  The h basis is the comparison basis: every expression can be
pushed there (Jacobi-Trudi for s, Newton's identities for p, the column
Jacobi-Trudi determinant for e), and two expressions are equal exactly when
their h expansions agree term by term.

Convention: ``e_0 = h_0 = p_0 = 1`` and ``h_k = 0`` for ``k < 0``.
"""
from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Union

from .partition import Partition, conjugate, partition, partitions_of, sort_parts

BASES = ("e", "h", "p", "s")
MULTIPLICATIVE = ("e", "h", "p")

Scalar = Union[int, Fraction]


class BasisMismatch(ValueError):
    """Raised when combining expressions in different bases."""


class SymExpr:
    """Immutable basis-tagged linear combination of partitions."""

    __slots__ = ("basis", "_terms", "_hash")

    def __init__(self, basis: str, terms: Mapping[Partition, Scalar] | None = None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}; expected one of {BASES}")
        clean: dict[Partition, Fraction] = {}
        for index, coeff in (terms or {}).items():
            key = partition(index)
            if tuple(index) != key:
                raise ValueError(f"index {index!r} is not a partition")
            c = Fraction(coeff)
            if c:
                clean[key] = clean.get(key, Fraction(0)) + c
                if not clean[key]:
                    del clean[key]
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("SymExpr is immutable")

    def __reduce__(self):
        return (_rebuild, (self.basis, dict(self._terms)))

    @classmethod
    def _raw(cls, basis: str, terms: dict[Partition, Fraction]) -> "SymExpr":
        # trusted fast path: keys already partitions, no zero coefficients
        obj = cls.__new__(cls)
        object.__setattr__(obj, "basis", basis)
        object.__setattr__(obj, "_terms", terms)
        object.__setattr__(obj, "_hash", None)
        return obj

    @classmethod
    def zero(cls, basis: str) -> "SymExpr":
        return cls(basis)

    @classmethod
    def one(cls, basis: str) -> "SymExpr":
        return cls(basis, {(): 1})

    @property
    def terms(self) -> dict[Partition, Fraction]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), reverse=True)

    def coeff(self, index: Iterable[int]) -> Fraction:
        return self._terms.get(tuple(index), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def degrees(self) -> set[int]:
        return {sum(k) for k in self._terms}

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, SymExpr):
            return NotImplemented
        return self.basis == other.basis and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.basis, frozenset(self._terms.items()))))
        return self._hash

    def __repr__(self):
        if not self._terms:
            return f"SymExpr({self.basis!r}, 0)"
        return f"SymExpr({self.basis!r}, {self.to_text()})"

    def __add__(self, other):
        if not isinstance(other, SymExpr):
            return NotImplemented
        return add(self, other)

    def __sub__(self, other):
        if not isinstance(other, SymExpr):
            return NotImplemented
        return add(self, scale(other, -1))

    def __neg__(self):
        return scale(self, -1)

    def __mul__(self, other):
        if isinstance(other, SymExpr):
            return multiply(self, other)
        if isinstance(other, (int, Fraction)):
            return scale(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return scale(self, other)
        return NotImplemented

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for index, c in self.items():
            name = f"{self.basis}{list(index)}"
            if c == 1:
                body, sign = name, "+"
            elif c == -1:
                body, sign = name, "-"
            else:
                sign = "-" if c < 0 else "+"
                body = f"{abs(c)}*{name}"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def to_latex(self) -> str:
        if not self._terms:
            return "0"
        out = ""
        for index, c in self.items():
            sub = "{()}" if not index else "{(" + ",".join(str(x) for x in index) + ")}"
            name = f"{self.basis}_{sub}"
            mag = abs(c)
            if mag == 1:
                body = name
            elif mag.denominator == 1:
                body = f"{mag.numerator}{name}"
            else:
                body = rf"\frac{{{mag.numerator}}}{{{mag.denominator}}}{name}"
            if not out:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out

    def to_dict(self) -> dict:
        return {
            "basis": self.basis,
            "terms": [{"index": list(k), "coeff": _frac_str(c)} for k, c in self.items()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: Mapping) -> "SymExpr":
        terms: dict[Partition, Fraction] = {}
        for entry in data["terms"]:
            key = partition(entry["index"])
            terms[key] = terms.get(key, Fraction(0)) + Fraction(entry["coeff"])
        return cls(data["basis"], terms)

    @classmethod
    def from_json(cls, text: str) -> "SymExpr":
        return cls.from_dict(json.loads(text))


def _rebuild(basis, terms):
    return SymExpr._raw(basis, terms)


def _frac_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _monomial(basis: str, parts: tuple[int, ...], coeff: Scalar = 1) -> SymExpr:
    if len(parts) == 1 and isinstance(parts[0], (tuple, list)):
        parts = tuple(parts[0])
    if basis in MULTIPLICATIVE:
        if any(x < 0 for x in parts):
            raise ValueError(f"negative index in {basis}{list(parts)}")
        # generators of degree 0 are 1
        index = sort_parts(parts)
    else:
        index = partition(parts)
        if index != tuple(parts):
            raise ValueError(f"Schur index {parts!r} is not a partition")
    return SymExpr(basis, {index: coeff})


def e(*parts) -> SymExpr:
    """``e(2, 1)`` or ``e((2, 1))`` is the elementary function e_{(2,1)}."""
    return _monomial("e", parts)


def h(*parts) -> SymExpr:
    return _monomial("h", parts)


def p(*parts) -> SymExpr:
    return _monomial("p", parts)


def s(*parts) -> SymExpr:
    return _monomial("s", parts)


def add(a: SymExpr, b: SymExpr) -> SymExpr:
    if a.basis != b.basis:
        raise BasisMismatch(f"cannot add {a.basis}- and {b.basis}-expressions; convert first")
    out = dict(a._terms)
    for k, c in b._terms.items():
        v = out.get(k, 0) + c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return SymExpr._raw(a.basis, out)


def scale(a: SymExpr, c: Scalar) -> SymExpr:
    c = Fraction(c)
    if not c:
        return SymExpr.zero(a.basis)
    return SymExpr._raw(a.basis, {k: v * c for k, v in a._terms.items()})


def linear_combination(basis: str, pairs: Iterable[tuple[Scalar, SymExpr]]) -> SymExpr:
    """Sum of ``c * x`` over ``pairs``, all in ``basis``."""
    acc: dict[Partition, Fraction] = {}
    for c, x in pairs:
        if x.basis != basis:
            raise BasisMismatch(f"expected {basis}-expression, got {x.basis}")
        c = Fraction(c)
        if not c:
            continue
        for k, v in x._terms.items():
            acc[k] = acc.get(k, 0) + c * v
    return SymExpr._raw(basis, {k: v for k, v in acc.items() if v})


def multiply(a: SymExpr, b: SymExpr) -> SymExpr:
    """Product in a multiplicative basis: indices merge as multisets."""
    if a.basis != b.basis:
        raise BasisMismatch(f"cannot multiply {a.basis}- and {b.basis}-expressions; convert first")
    if a.basis not in MULTIPLICATIVE:
        raise ValueError("Schur products are not supported; use transition.mn_multiply for p_r * s")
    out: dict[Partition, Fraction] = {}
    for ka, ca in a._terms.items():
        for kb, cb in b._terms.items():
            key = sort_parts(ka + kb)
            out[key] = out.get(key, 0) + ca * cb
    return SymExpr._raw(a.basis, {k: v for k, v in out.items() if v})


def product(factors: Iterable[SymExpr], basis: str = "h") -> SymExpr:
    acc = SymExpr.one(basis)
    for f in factors:
        acc = multiply(acc, f)
    return acc


# --- conversion to the h basis ------------------------------------------------

def _h_gen(k: int) -> SymExpr:
    if k < 0:
        return SymExpr.zero("h")
    if k == 0:
        return SymExpr.one("h")
    return SymExpr._raw("h", {(k,): Fraction(1)})


@lru_cache(maxsize=None)
def jacobi_trudi(lam: Partition) -> SymExpr:
    """``det(h_{lam_i - i + j})`` expanded in the h basis.

    Cofactor expansion down the rows with minors memoized on the set of
    columns still available.
    """
    return _jt_determinant(partition(lam))


def jacobi_trudi_sequence(seq: Iterable[int]) -> SymExpr:
    """The same determinant for an arbitrary integer sequence.

    For non-partitions this is the straightened value (possibly zero or a
    signed Schur function); :func:`s` itself rejects such indices.
    """
    return _jt_determinant(tuple(int(x) for x in seq))


@lru_cache(maxsize=None)
def _jt_determinant(lam: tuple[int, ...]) -> SymExpr:
    size = len(lam)
    if size == 0:
        return SymExpr.one("h")

    @lru_cache(maxsize=None)
    def minor(row: int, cols: tuple[int, ...]) -> SymExpr:
        if row == size:
            return SymExpr.one("h")
        pairs = []
        for pos, col in enumerate(cols):
            k = lam[row] - row + col
            if k < 0:
                continue
            rest = minor(row + 1, cols[:pos] + cols[pos + 1:])
            if rest.is_zero():
                continue
            pairs.append((-1 if pos % 2 else 1, multiply(_h_gen(k), rest)))
        return linear_combination("h", pairs)

    return minor(0, tuple(range(size)))


@lru_cache(maxsize=None)
def _p_gen_in_h(n: int) -> SymExpr:
    # p_n = n h_n - sum_{k=1}^{n-1} h_k p_{n-k}
    if n == 0:
        return SymExpr.one("h")
    pairs = [(n, _h_gen(n))]
    for k in range(1, n):
        pairs.append((-1, multiply(_h_gen(k), _p_gen_in_h(n - k))))
    return linear_combination("h", pairs)


@lru_cache(maxsize=None)
def _e_gen_in_h(n: int) -> SymExpr:
    # e_n = s_{(1^n)}: Jacobi-Trudi on the single-column shape
    if n == 0:
        return SymExpr.one("h")
    return jacobi_trudi(conjugate((n,)))


_GENERATOR = {"e": _e_gen_in_h, "p": _p_gen_in_h, "h": _h_gen}


@lru_cache(maxsize=None)
def _monomial_in_h(basis: str, index: Partition) -> SymExpr:
    if basis == "h":
        return SymExpr._raw("h", {index: Fraction(1)}) if index else SymExpr.one("h")
    if basis == "s":
        return jacobi_trudi(index)
    gen = _GENERATOR[basis]
    return product((gen(k) for k in index), "h")


def to_h_basis(a: SymExpr) -> SymExpr:
    """Exact expansion of ``a`` in the complete homogeneous basis."""
    if a.basis == "h":
        return a
    return linear_combination("h", ((c, _monomial_in_h(a.basis, k)) for k, c in a._terms.items()))


def to_s_basis(a: SymExpr) -> SymExpr:
    """Expansion in the Schur basis.

    Goes through h and peels off the lexicographically smallest index each
    step: ``s_lam = h_lam + (h_mu with mu > lam in dominance)``, and lex
    order refines dominance.
    """
    if a.basis == "s":
        return a
    rest = dict(to_h_basis(a)._terms)
    out: dict[Partition, Fraction] = {}
    while rest:
        lam = min(rest)
        c = rest[lam]
        out[lam] = out.get(lam, 0) + c
        for k, v in jacobi_trudi(lam)._terms.items():
            nv = rest.get(k, 0) - c * v
            if nv:
                rest[k] = nv
            else:
                rest.pop(k, None)
    return SymExpr("s", out)


def convert(a: SymExpr, basis: str) -> SymExpr:
    if basis == "h":
        return to_h_basis(a)
    if basis == "s":
        return to_s_basis(a)
    raise ValueError("conversion targets are 'h' and 's'")


def equal(a: SymExpr, b: SymExpr) -> bool:
    """Equality as symmetric functions (compared in the h basis)."""
    return to_h_basis(a) == to_h_basis(b)


def hook_to_he(arm: int, leg: int) -> SymExpr:
    """``s_{(arm, 1^leg)} = sum_i (-1)^i h_{arm+i} e_{leg-i}``, returned in the h basis."""
    if arm < 1 or leg < 0:
        raise ValueError(f"invalid hook ({arm}, 1^{leg})")
    pairs = []
    for i in range(leg + 1):
        pairs.append(((-1) ** i, multiply(_h_gen(arm + i), _e_gen_in_h(leg - i))))
    return linear_combination("h", pairs)


def homogeneous_basis(basis: str, n: int) -> list[SymExpr]:
    """All basis elements of degree ``n`` in canonical order."""
    return [SymExpr._raw(basis, {lam: Fraction(1)}) for lam in partitions_of(n)]
