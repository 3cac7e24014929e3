"""Result records shared by every verification routine."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any


@dataclass(frozen=True)
class CheckResult:
    """Outcome of checking one identity at one parameter set.

    ``passed`` records whether the two sides agreed.  ``expected_fail`` marks
    documented discrepancies; such a case is *ok* exactly when it fails.
    """

    identity: str
    params: dict
    lhs: Any
    rhs: Any
    passed: bool
    note: str = ""
    expected_fail: bool = False

    @property
    def n(self):
        return self.params.get("n")

    @property
    def ok(self) -> bool:
        return self.passed != self.expected_fail

    @property
    def status(self) -> str:
        if self.expected_fail:
            return "XFAIL" if not self.passed else "XPASS"
        return "PASS" if self.passed else "FAIL"

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "params": dict(self.params),
            "lhs": to_jsonable(self.lhs),
            "rhs": to_jsonable(self.rhs),
            "pass": self.passed,
            "expected_fail": self.expected_fail,
            "ok": self.ok,
            "note": self.note,
        }


def frac_str(c: Fraction | int) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def to_jsonable(value):
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, (int, Fraction)):
        return frac_str(value)
    if hasattr(value, "to_dict"):
        return value.to_dict()
    if isinstance(value, dict):
        return {_key(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    return str(value)


def _key(k) -> str:
    if isinstance(k, tuple):
        return "[" + ",".join(str(x) for x in k) + "]"
    return str(k)


def to_text(value) -> str:
    if isinstance(value, (int, Fraction)):
        return frac_str(value)
    if hasattr(value, "to_text"):
        return value.to_text()
    if isinstance(value, dict):
        return "{" + ", ".join(f"{_key(k)}: {to_text(v)}" for k, v in value.items()) + "}"
    return str(value)


def to_latex(value) -> str:
    if isinstance(value, (int, Fraction)):
        c = Fraction(value)
        if c.denominator == 1:
            return str(c.numerator)
        sign = "-" if c < 0 else ""
        return rf"{sign}\frac{{{abs(c.numerator)}}}{{{c.denominator}}}"
    if hasattr(value, "to_latex"):
        return value.to_latex()
    if isinstance(value, dict):
        return r"\{" + ", ".join(f"{_key(k)}: {to_latex(v)}" for k, v in value.items()) + r"\}"
    return str(value)
