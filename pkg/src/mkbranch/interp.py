"""One-column interpolation polynomials, the one-variable basis and the Cauchy kernel."""
from __future__ import annotations

from .field import as_rational
from .laurent import LaurentPoly, bracket


def e_polys(n: int, base, t0) -> list:
    """``[E_0, ..., E_n]`` in ``n`` variables, built one variable at a time.

    The ``i``-th selected variable ``z_j`` (both 1-based) carries the shift
    ``base^(j-i) * t0``; this is what makes E_r permutation symmetric.
    """
    base, t0 = as_rational(base), as_rational(t0)
    one = LaurentPoly.constant(n)
    table = [one] + [LaurentPoly.zero(n)] * n
    for j in range(n):
        for r in range(j + 1, 0, -1):
            table[r] = table[r] + table[r - 1] * bracket(n, j, base ** (j + 1 - r) * t0)
    return table


def e_r(n: int, r: int, base, t0) -> LaurentPoly:
    """``E_r(z_1..z_n; base, t0)``; ``E_0 = 1``."""
    if not 0 <= r <= n:
        raise ValueError(f"r={r} outside 0..{n}")
    return e_polys(n, base, t0)[r]


def one_var_basis(k: int, base, t0) -> LaurentPoly:
    """``<x; t0>_{base,k} = <x; t0><x; base*t0>...<x; base^(k-1)*t0>``."""
    if k < 0:
        raise ValueError(f"basis index k={k} must be nonnegative")
    base, t0 = as_rational(base), as_rational(t0)
    result = LaurentPoly.constant(1)
    for i in range(k):
        result = result * bracket(1, 0, base ** i * t0)
    return result


def cauchy_kernel(m: int, n: int) -> LaurentPoly:
    """``prod_{i,j} <x_i; z_j>`` in variables ``x_1..x_m, z_1..z_n`` (in that order)."""
    if m < 1 or n < 1:
        raise ValueError("kernel needs m, n >= 1")
    nv = m + n
    result = LaurentPoly.constant(nv)
    for i in range(m):
        x = LaurentPoly.variable(nv, i) + LaurentPoly.variable(nv, i, -1)
        for j in range(n):
            z = LaurentPoly.variable(nv, m + j) + LaurentPoly.variable(nv, m + j, -1)
            result = result * (x - z)
    return result
