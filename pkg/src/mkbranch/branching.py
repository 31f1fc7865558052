"""Branching coefficients and the construction of P_lambda by adding one variable at a time."""
from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Sequence

from .field import ParameterPoint
from .interp import one_var_basis
from .laurent import LaurentPoly, sum_polys
from .partitions import (as_partition, complement, conjugate, double_strip_leq,
                         enumerate_branch_sources, enumerate_chains, strip_degree, weight)
from .pieri import pieri_coeff


@dataclass(frozen=True)
class BranchingCoeffs:
    lam: tuple
    mu: tuple
    m: int
    d: int
    B: tuple

    def to_json(self) -> dict:
        return {"lambda": list(self.lam), "mu": list(self.mu), "m": self.m, "d": self.d,
                "B": [b.to_json() for b in self.B]}


def _check_pair(lam, mu):
    lam = as_partition(lam)
    if not lam:
        raise ValueError("lambda must have at least one part")
    mu = as_partition(mu, len(lam) - 1)
    if not double_strip_leq(mu, lam):
        raise ValueError(f"{mu} is not below {lam} by two horizontal strips")
    return lam, mu


def branching_coeffs(lam: Sequence[int], mu: Sequence[int], params: ParameterPoint,
                     m: int | None = None) -> BranchingCoeffs:
    """``B^0..B^d`` for ``lam`` in Lambda_{n+1} over ``mu`` in Lambda_n.

    Each coefficient is a Pieri coefficient in ``m`` variables between the
    rotated conjugate complements, evaluated with q and t exchanged.
    """
    lam, mu = _check_pair(lam, mu)
    n = len(mu)
    if m is None:
        m = lam[0]
    if m < lam[0]:
        raise ValueError(f"m={m} smaller than lambda_1={lam[0]}")
    d = strip_degree(lam, mu, m)
    source = complement(conjugate(mu, m), n)
    target = complement(conjugate(lam, m), n + 1)
    swapped = params.swapped()
    excess = weight(lam) - weight(mu)
    coeffs = []
    for k in range(d + 1):
        c = pieri_coeff(source, target, m - k, m, swapped)
        coeffs.append(-c if (k + excess) % 2 else c)
    return BranchingCoeffs(lam, mu, m, d, tuple(coeffs))


@lru_cache(maxsize=4096)
def _branching_poly(lam, mu, params, m):
    bc = branching_coeffs(lam, mu, params, m)
    terms = [one_var_basis(k, params.q, params.t0).scale(b) for k, b in enumerate(bc.B)]
    return sum_polys(terms, 1)


def branching_poly(lam: Sequence[int], mu: Sequence[int], params: ParameterPoint,
                   m: int | None = None) -> LaurentPoly:
    """One-variable branching polynomial ``sum_k B^k <x; t0>_{q,k}``."""
    lam, mu = _check_pair(lam, mu)
    return _branching_poly(lam, mu, params, m)


def askey_wilson(m: int, params: ParameterPoint) -> LaurentPoly:
    """Monic Askey-Wilson polynomial of degree ``m`` (the one-variable case)."""
    if m < 0:
        raise ValueError(f"degree m={m} must be nonnegative")
    return branching_poly((m,), (), params)


def branch_step(expansions: Mapping[tuple, LaurentPoly], lam: Sequence[int],
                params: ParameterPoint, m: int | None = None) -> LaurentPoly:
    """P_lam in n+1 variables from the n-variable polynomials of its sources.

    The new variable is the last one.
    """
    lam = as_partition(lam)
    n = len(lam) - 1
    parts = []
    for mu in enumerate_branch_sources(lam):
        if mu not in expansions:
            raise ValueError(f"missing source polynomial for {mu}")
        low = expansions[mu].embed(n + 1, range(n))
        top = branching_poly(lam, mu, params, m).embed(n + 1, [n])
        parts.append(low * top)
    return sum_polys(parts, n + 1)


class MKFamily:
    """Memoized Macdonald-Koornwinder polynomials at one parameter point.

    ``m`` fixes the rectangle width used by every branching step; ``None``
    means the minimal choice ``lambda_1`` at each step.
    """

    def __init__(self, params: ParameterPoint, m: int | None = None):
        self.params = params
        self.m = m
        self._polys = {(): LaurentPoly.constant(0)}
        self._lock = threading.Lock()

    def __call__(self, lam: Sequence[int]) -> LaurentPoly:
        return self.polynomial(lam)

    def polynomial(self, lam: Sequence[int]) -> LaurentPoly:
        lam = as_partition(lam)
        poly = self._polys.get(lam)
        if poly is not None:
            return poly
        if self.m is not None and lam and lam[0] > self.m:
            raise ValueError(f"lambda_1={lam[0]} exceeds fixed m={self.m}")
        sources = {mu: self.polynomial(mu) for mu in enumerate_branch_sources(lam)}
        poly = branch_step(sources, lam, self.params, self.m)
        with self._lock:
            return self._polys.setdefault(lam, poly)


@lru_cache(maxsize=64)
def mk_family(params: ParameterPoint, m: int | None = None) -> MKFamily:
    """Shared memo table for ``params`` (and a fixed ``m``, if any)."""
    return MKFamily(params, m)


def compute_mk(lam: Sequence[int], params: ParameterPoint, m: int | None = None) -> LaurentPoly:
    """Monic P_lam(z_1..z_n; q, t, t0..t3) with n = len(lam)."""
    return mk_family(params, m).polynomial(lam)


def compute_mk_chains(lam: Sequence[int], params: ParameterPoint) -> LaurentPoly:
    """P_lam as the sum over chains of products of one-variable branching polynomials."""
    lam = as_partition(lam)
    n = len(lam)
    terms = []
    for chain in enumerate_chains(lam):
        prod = LaurentPoly.constant(n)
        prev = ()
        for i, mu in enumerate(chain):
            prod = prod * branching_poly(mu, prev, params).embed(n, [i])
            prev = mu
        terms.append(prod)
    return sum_polys(terms, n)
