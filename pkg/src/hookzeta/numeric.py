"""Floating-point truncations of the specialization ``x_j = 1/j^2``.

Used only as an independent numerical oracle for :mod:`hookzeta.zeta`.
Generators are computed from the first ``N`` variables directly:
``e_k`` and ``h_k`` by prefix recurrences over the variables, ``p_k`` as
plain power sums.
"""
from __future__ import annotations

import numpy as np


def variables(N: int) -> np.ndarray:
    return 1.0 / np.arange(1, N + 1, dtype=np.float64) ** 2


def truncated_generators(N: int, max_degree: int) -> dict[str, np.ndarray]:
    """``{"e": e_0..e_d, "h": h_0..h_d, "p": p_0..p_d}`` over ``x_1..x_N``.

    ``p_0`` is reported as ``N`` (the number of variables) and is unused.
    """
    x = variables(N)
    e_prev = np.ones(N)  # e_{k-1}(x_1..x_m) for every prefix m
    h_prev = np.ones(N)
    e_vals, h_vals = [1.0], [1.0]
    for k in range(1, max_degree + 1):
        # e_k(x_1..x_m) = sum_{t <= m} x_t e_{k-1}(x_1..x_{t-1})
        shifted = np.concatenate(([1.0 if k == 1 else 0.0], e_prev[:-1]))
        e_prev = np.cumsum(x * shifted)
        # h_k(x_1..x_m) = sum_{t <= m} x_t h_{k-1}(x_1..x_t)
        h_prev = np.cumsum(x * h_prev)
        e_vals.append(float(e_prev[-1]))
        h_vals.append(float(h_prev[-1]))
    p_vals = [float(N)] + [float(np.sum(x**k)) for k in range(1, max_degree + 1)]
    return {"e": np.array(e_vals), "h": np.array(h_vals), "p": np.array(p_vals)}


def richardson(f_n: float, f_2n: float) -> float:
    """Cancel the 1/N term of a sequence sampled at N and 2N."""
    return 2.0 * f_2n - f_n
