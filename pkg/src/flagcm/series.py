"""Reciprocal power series of alternating h-polynomials.

For ``p(z) = sum (-1)^i h_i z^i`` the coefficients of ``1/p(z)`` would be the
Tor dimensions of a Koszul Artinian reduction with h-vector ``h``; a negative
coefficient therefore rules ``h`` out as the h-vector of a CM flag complex.
"""

from __future__ import annotations

from typing import Sequence

IntegerSeries = list[int]


def alternating_polynomial(h: Sequence[int]) -> list[int]:
    return [(-1) ** i * x for i, x in enumerate(h)]


def poincare_coeffs(h: Sequence[int], terms: int) -> IntegerSeries:
    """First ``terms`` coefficients ``a_0 .. a_{terms-1}`` of ``1/p(z)``."""
    if not h or h[0] != 1:
        raise ValueError("h must start with h_0 = 1")
    if terms > 10000:
        raise ValueError("at most 10000 terms")
    a: list[int] = []
    for n in range(terms):
        if n == 0:
            a.append(1)
            continue
        a.append(sum((-1) ** (i + 1) * h[i] * a[n - i] for i in range(1, min(n, len(h) - 1) + 1)))
    return a


def koszul_obstruction(h: Sequence[int], horizon: int) -> int | None:
    """Least index ``n <= horizon`` with a negative coefficient, else ``None``."""
    for n, c in enumerate(poincare_coeffs(h, horizon + 1)):
        if c < 0:
            return n
    return None


def multiply(p: Sequence[int], q: Sequence[int], terms: int) -> list[int]:
    out = [0] * terms
    for i, x in enumerate(p[:terms]):
        if x:
            for j, y in enumerate(q[:terms - i]):
                out[i + j] += x * y
    return out
