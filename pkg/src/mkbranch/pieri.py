"""Explicit Pieri coefficients for the one-column interpolation polynomials.

All hatted quantities live in Q(sqrt(s)); every factor below pairs two of
them, so the final values are rational.  That collapse is checked, not assumed.
"""
from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass
from typing import Iterator, Sequence

from .field import FieldElement, ParameterPoint, ResonantParameterError, qpochhammer
from .partitions import as_partition, proximity_r


@dataclass(frozen=True)
class SignedSupport:
    """Rows where ``lam`` and ``mu`` differ (1-based), with signs ``mu_j - lam_j``."""

    J: tuple
    eps: tuple
    Jc: tuple

    @property
    def signs(self) -> dict:
        return dict(zip(self.J, self.eps))


def signed_support(lam: Sequence[int], mu: Sequence[int]) -> SignedSupport:
    n = len(lam)
    J, eps = [], []
    for j in range(n):
        diff = mu[j] - lam[j]
        if diff:
            if abs(diff) != 1:
                raise ValueError(f"rows {j + 1} of {tuple(lam)} and {tuple(mu)} differ by {diff}")
            J.append(j + 1)
            eps.append(diff)
    Jc = tuple(j for j in range(1, n + 1) if j not in J)
    return SignedSupport(tuple(J), tuple(eps), Jc)


def _quotient(num: FieldElement, den: FieldElement, label: str) -> FieldElement:
    if not den:
        raise ResonantParameterError(label)
    return num / den


class _Spectral:
    """Hatted spectral data of ``lam`` in ``n`` variables at one parameter point."""

    def __init__(self, lam: Sequence[int], n: int, params: ParameterPoint):
        self.lam = tuple(lam)
        self.n = n
        self.q = params.q
        self.t = params.t
        self.t0 = params.t0
        self.hat_t = [params.hat_t(l) for l in range(4)]
        self.tau_hat = {}
        for j in range(1, n + 1):
            th = params.tau_hat(n, j)
            self.tau_hat[j, 1] = th
            self.tau_hat[j, -1] = th.inverse()

    def th(self, j: int, e: int = 1) -> FieldElement:
        return self.tau_hat[j, e]

    def single(self, j: int, e: int) -> FieldElement:
        lam_j = self.lam[j - 1]
        x = self.th(j, e) * self.q ** (e * lam_j)
        num = FieldElement(1)
        for l in range(4):
            num = num * (1 - self.hat_t[l] * x)
        sq = self.th(j, e) * self.th(j, e) * self.q ** (2 * e * lam_j)
        den = self.t0 * (1 - sq) * (1 - sq * self.q)
        return _quotient(num, den, f"single block j={j}, eps={e}: t0(1-T^2)(1-T^2 q)")

    def pair(self, j: int, e: int, k: int, f: int, mixed: bool) -> FieldElement:
        """Pair block; ``mixed`` selects the t / t^-1 numerator of the U-factor."""
        x = self.th(j, e) * self.th(k, f) * self.q ** (e * self.lam[j - 1] + f * self.lam[k - 1])
        xq = x * self.q
        if mixed:
            num = (1 - self.t * x) * (1 - xq / self.t)
            den = (1 - x) * (1 - xq)
        else:
            num = (1 - self.t * x) * (1 - self.t * xq)
            den = self.t * (1 - x) * (1 - xq)
        return _quotient(num, den, f"pair block ({j},{k}), eps=({e},{f})")

    def cross(self, j: int, e: int, k: int) -> FieldElement:
        base = self.th(j, e) * self.q ** (e * self.lam[j - 1])
        lam_k = self.lam[k - 1]
        x_plus = base * self.th(k, 1) * self.q ** lam_k
        x_minus = base * self.th(k, -1) * self.q ** (-lam_k)
        num = (1 - self.t * x_plus) * (1 - self.t * x_minus)
        den = self.t * (1 - x_plus) * (1 - x_minus)
        return _quotient(num, den, f"cross block j={j}, eps={e}, k={k}")

    def block_product(self, signed: dict, others: Sequence[int], mixed: bool) -> FieldElement:
        idx = sorted(signed)
        value = FieldElement(1)
        for j in idx:
            value = value * self.single(j, signed[j])
        for a, b in itertools.combinations(idx, 2):
            value = value * self.pair(a, signed[a], b, signed[b], mixed)
        for j in idx:
            for k in others:
                value = value * self.cross(j, signed[j], k)
        return value


def principal_specialization(lam: Sequence[int], n: int, params: ParameterPoint) -> FieldElement:
    """Closed-form principal specialization of P_lam, written in hatted data.

    Numerically it is the value of P_lam at ``(tau_1, ..., tau_n)`` with
    ``tau_j = t^(n-j) t0``; the tests check this against the built polynomial.
    """
    lam = as_partition(lam, n)
    q, t = params.q, params.t
    hat_t = [params.hat_t(l) for l in range(4)]
    th = [params.tau_hat(n, j) for j in range(1, n + 1)]
    num = FieldElement(1)
    den = FieldElement(1)
    for j in range(n):
        for l in range(4):
            num = num * qpochhammer(hat_t[l] * th[j], q, lam[j])
        den = den * params.tau(n, j + 1) ** lam[j] * qpochhammer(th[j] * th[j], q, 2 * lam[j])
        if not den:
            raise ResonantParameterError(f"(tau_hat_{j + 1}^2;q)_{2 * lam[j]}")
    for j, k in itertools.combinations(range(n), 2):
        prod = th[j] * th[k]
        ratio = th[j] / th[k]
        num = num * qpochhammer(t * prod, q, lam[j] + lam[k]) * qpochhammer(t * ratio, q, lam[j] - lam[k])
        den = den * qpochhammer(prod, q, lam[j] + lam[k]) * qpochhammer(ratio, q, lam[j] - lam[k])
        if not den:
            raise ResonantParameterError(f"principal specialization pair ({j + 1},{k + 1})")
    return num / den


def v_factor(lam: Sequence[int], support: SignedSupport, n: int, params: ParameterPoint) -> FieldElement:
    """The V-factor over the rows ``support.J`` (1 when J is empty)."""
    if not support.J:
        return FieldElement(1)
    spectral = _Spectral(as_partition(lam, n), n, params)
    return spectral.block_product(support.signs, support.Jc, mixed=False)


def u_summands(K: Sequence[int], p: int) -> Iterator[dict]:
    """All signed subsets ``{i: eps_i}`` with ``I ⊂ K``, ``|I| = p``."""
    for I in itertools.combinations(sorted(K), p):
        for signs in itertools.product((1, -1), repeat=p):
            yield dict(zip(I, signs))


def u_factor(lam: Sequence[int], K: Sequence[int], p: int, n: int, params: ParameterPoint) -> FieldElement:
    """The U-factor: signed sum over p-subsets of K (1 when p = 0)."""
    K = tuple(sorted(K))
    if not 0 <= p <= len(K):
        raise ValueError(f"p={p} outside 0..{len(K)}")
    if p == 0:
        return FieldElement(1)
    spectral = _Spectral(as_partition(lam, n), n, params)
    total = FieldElement(0)
    for signed in u_summands(K, p):
        rest = [k for k in K if k not in signed]
        total = total + spectral.block_product(signed, rest, mixed=True)
    return -total if p % 2 else total


def assemble_pieri(lam: Sequence[int], mu: Sequence[int], r: int, n: int,
                   params: ParameterPoint) -> FieldElement:
    """The product of the three factors in Q(sqrt(s)), before any collapse to Q."""
    lam = as_partition(lam, n)
    mu = as_partition(mu, n)
    if r == 0:
        return FieldElement(1 if mu == lam else 0)
    if not proximity_r(mu, lam, r):
        return FieldElement(0)
    support = signed_support(lam, mu)
    ps_lam = principal_specialization(lam, n, params)
    ps_mu = principal_specialization(mu, n, params)
    if not ps_mu:
        raise ResonantParameterError(f"principal specialization of {mu}")
    return ps_lam / ps_mu * v_factor(lam, support, n, params) \
        * u_factor(lam, support.Jc, r - len(support.J), n, params)


def _pieri_coeff(lam, mu, r, n, params) -> FieldElement:
    value = assemble_pieri(lam, mu, r, n, params)
    if value.b:
        raise ArithmeticError(f"Pieri coefficient C^{mu}_{lam},{r} is not rational: {value!r}")
    return FieldElement(value.a)


class PieriCoeffTable:
    """Write-once memo of Pieri coefficients keyed by ``(lam, mu, r, n, params)``."""

    def __init__(self):
        self._data = {}
        self._lock = threading.Lock()

    def __len__(self):
        return len(self._data)

    def __contains__(self, key):
        return key in self._data

    def get(self, lam, mu, r, n, params) -> FieldElement:
        key = (lam, mu, r, n, params)
        value = self._data.get(key)
        if value is None:
            value = _pieri_coeff(lam, mu, r, n, params)
            with self._lock:
                value = self._data.setdefault(key, value)
        return value

    def clear(self):
        with self._lock:
            self._data.clear()


DEFAULT_TABLE = PieriCoeffTable()


def pieri_coeff(lam: Sequence[int], mu: Sequence[int], r: int, n: int,
                params: ParameterPoint, cache: PieriCoeffTable | None = DEFAULT_TABLE) -> FieldElement:
    """Coefficient of P_mu in the expansion of ``E_r * P_lam`` (n variables).

    Returns exact zero when ``mu`` is not ``~_r``-close to ``lam``.
    """
    lam = as_partition(lam, n)
    mu = as_partition(mu, n)
    if not 0 <= r <= n:
        raise ValueError(f"r={r} outside 0..{n}")
    if cache is None:
        return _pieri_coeff(lam, mu, r, n, params)
    return cache.get(lam, mu, r, n, params)


def coefficient_table_json(lam, mu, r, n, value: FieldElement) -> dict:
    return {"lambda": list(lam), "mu": list(mu), "r": r, "n": n, "C": value.to_json()}
