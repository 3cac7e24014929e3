"""Exact Bernoulli numbers and the Bernoulli-number identities checked here.

``bernoulli`` uses the classical recurrence
``sum_{k=0}^{n} C(n+1, k) B_k = 0`` (so B_1 = -1/2), which is independent
of every identity verified in this module.
"""
from __future__ import annotations

import threading
from fractions import Fraction
from math import comb

from .checks import CheckResult

__all__ = [
    "CheckResult",
    "IDENTITIES",
    "bernoulli",
    "binom",
    "check_identity",
    "corollary_recurrence",
    "harmonic",
]

_cache: list[Fraction] = [Fraction(1), Fraction(-1, 2)]
_lock = threading.Lock()


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero outside ``0 <= k <= n``."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def _extend(n: int) -> None:
    with _lock:
        for m in range(len(_cache), n + 1):
            if m % 2 == 1:
                _cache.append(Fraction(0))
                continue
            total = Fraction(1) - Fraction(m + 1, 2)  # k = 0 and k = 1 terms
            for k in range(2, m, 2):
                total += comb(m + 1, k) * _cache[k]
            _cache.append(-total / (m + 1))


def bernoulli(n: int) -> Fraction:
    """B_n as an exact fraction; B_1 = -1/2."""
    if n < 0:
        raise ValueError("Bernoulli index must be nonnegative")
    if n >= len(_cache):
        _extend(n)
    return _cache[n]


def harmonic(n: int) -> Fraction:
    if n < 1:
        raise ValueError("harmonic number index must be positive")
    return sum((Fraction(1, k) for k in range(1, n + 1)), Fraction(0))


def _pow2(exponent: int) -> Fraction:
    return Fraction(2) ** exponent


B = bernoulli


# Each identity returns (lhs, rhs) at parameter n.

def _nested12(n):
    lhs = (2 * n + 1) * B(2 * n)
    rhs = Fraction(0)
    for i in range(n + 1):
        for j in range(i + 1):
            rhs += (binom(2 * n + 1, 2 * i - 2 * j + 1) * B(2 * n - 2 * i + 2 * j)
                    * (_pow2(1 - 2 * i + 2 * j) - _pow2(2 - 2 * n)))
    return lhs, rhs


def _lacunary13(n):
    lhs = B(2 * n) * _pow2(2 * n - 1)
    rhs = sum((binom(2 * n, 2 * j - 1) * B(2 * j) * (_pow2(2 * j - 1) - 1) for j in range(n + 1)),
              Fraction(0))
    return lhs, rhs


def _ramanujan14(n):
    lhs = Fraction(2 * n + 1)
    rhs = sum((binom(2 * n + 1, 2 * j) * B(2 * j) * 4**j for j in range(n + 1)), Fraction(0))
    return lhs, rhs


def _miki16(n):
    plain = Fraction(0)
    weighted = Fraction(0)
    for k in range(2, n - 1):
        t = B(k) * B(n - k) / (k * (n - k))
        plain += t
        weighted += binom(n, k) * t
    return plain - weighted, 2 * B(n) * harmonic(n) / n


def _euler17(n):
    lhs = sum((binom(2 * n, 2 * j) * B(2 * j) * B(2 * n - 2 * j) for j in range(1, n)), Fraction(0))
    return lhs, -(2 * n + 1) * B(2 * n)


def corollary_sum(n: int) -> Fraction:
    """``sum_{j=1}^{2n+1} C(4n+2, 2j-1) (2n+1-j) (1 - 2^{2j-1}) B_{2j}``."""
    return sum(
        (binom(4 * n + 2, 2 * j - 1) * (2 * n + 1 - j) * (1 - _pow2(2 * j - 1)) * B(2 * j)
         for j in range(1, 2 * n + 2)),
        Fraction(0),
    )


def _corollary(n):
    return corollary_sum(n), (4 * n + 3) * _pow2(4 * n) * B(4 * n + 2)


# name -> (function, smallest n, parity restriction or None, description)
IDENTITIES = {
    "nested12": (_nested12, 1, None,
                 "(2n+1)B_{2n} = sum_{0<=j<=i<=n} C(2n+1,2i-2j+1) B_{2n-2i+2j} (2^{1-2i+2j} - 2^{2-2n})"),
    "lacunary13": (_lacunary13, 1, None,
                   "B_{2n} 2^{2n-1} = sum_{j=0}^{n} C(2n,2j-1) B_{2j} (2^{2j-1} - 1)"),
    "ramanujan14": (_ramanujan14, 1, None,
                    "2n+1 = sum_{j=0}^{n} C(2n+1,2j) B_{2j} 2^{2j}"),
    "miki16": (_miki16, 4, 0,
               "sum_{k=2}^{n-2} B_k B_{n-k}/(k(n-k)) - sum_{k=2}^{n-2} C(n,k) B_k B_{n-k}/(k(n-k)) = 2 B_n H_n / n"),
    "euler17": (_euler17, 2, None,
                "sum_{j=1}^{n-1} C(2n,2j) B_{2j} B_{2n-2j} = -(2n+1) B_{2n}"),
    "corollary": (_corollary, 0, None,
                  "sum_{j=1}^{2n+1} C(4n+2,2j-1)(2n+1-j)(1-2^{2j-1}) B_{2j} = (4n+3) 2^{4n} B_{4n+2}"),
}

# the corollary does not hold at n = 0 (lhs 0, rhs 3 B_2 = 1/2)
EXPECTED_FAIL = {("corollary", 0)}


def check_identity(identity: str, n: int) -> CheckResult:
    """Evaluate both sides of ``identity`` at ``n`` exactly."""
    try:
        func, lowest, parity, statement = IDENTITIES[identity]
    except KeyError:
        raise ValueError(f"unknown identity {identity!r}; expected one of {sorted(IDENTITIES)}") from None
    if n < lowest or (parity is not None and n % 2 != parity):
        raise ValueError(f"{identity} is not defined at n = {n}")
    lhs, rhs = func(n)
    expected_fail = (identity, n) in EXPECTED_FAIL
    note = statement
    if expected_fail:
        note += "; known discrepancy at this n"
    return CheckResult(identity, {"n": n}, lhs, rhs, lhs == rhs, note, expected_fail)


def corollary_recurrence(n: int) -> Fraction:
    """B_{4n+2} from B_2, ..., B_{4n} alone.

    The j = 2n+1 summand carries the factor 2n+1-j = 0, so the left side
    only involves smaller indices.
    """
    if n < 1:
        raise ValueError("corollary_recurrence needs n >= 1")
    return corollary_sum(n) / ((4 * n + 3) * _pow2(4 * n))


# --- intermediate quantities of the corollary's derivation ---------------------

def convolution_half(n: int) -> Fraction:
    """``sum_{i=1}^{n} C(4n+2, 2i) B_{2i} B_{4n-2i+2}``."""
    return sum((binom(4 * n + 2, 2 * i) * B(2 * i) * B(4 * n - 2 * i + 2) for i in range(1, n + 1)),
               Fraction(0))


def convolution_full(n: int) -> Fraction:
    """Same summand as :func:`convolution_half` over ``1 <= i <= 2n``."""
    return sum((binom(4 * n + 2, 2 * i) * B(2 * i) * B(4 * n - 2 * i + 2) for i in range(1, 2 * n + 1)),
               Fraction(0))


def moment_double_sum(n: int) -> Fraction:
    """The specialized Schur-hook side, as a double sum over ``0 <= j <= i <= 2n``."""
    total = Fraction(0)
    for i in range(2 * n + 1):
        for j in range(i + 1):
            total += (binom(4 * n + 2, 2 * j) * Fraction(n - i, 2 * j + 1)
                      * (_pow2(1 - 4 * n) - _pow2(2 - 2 * j)) * B(4 * n - 2 * j + 2))
    return total


def moment_regrouped(n: int) -> Fraction:
    """Double sum regrouped by ``j`` with the inner sum over ``i`` kept explicit."""
    total = Fraction(0)
    for j in range(2 * n + 1):
        inner = sum(n - i for i in range(j, 2 * n + 1))
        total += (inner * binom(4 * n + 2, 2 * j) * Fraction(1, 2 * j + 1)
                  * (2 - _pow2(4 * n - 2 * j + 2)) * B(4 * n - 2 * j + 2))
    return total / _pow2(4 * n)


def moment_closed(n: int) -> Fraction:
    """Regrouped sum after evaluating the inner sum and reindexing."""
    total = sum(
        (binom(4 * n + 2, 2 * j - 1) * (2 * n + 1 - j) * (2 - _pow2(2 * j)) * B(2 * j)
         for j in range(1, 2 * n + 2)),
        Fraction(0),
    )
    return -total / _pow2(4 * n + 2)
