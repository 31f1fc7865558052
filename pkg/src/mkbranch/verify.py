"""Identity verifiers and the numerical orthogonality oracle.

Exact checks reduce to "this Laurent polynomial is zero".  The orthogonality
oracle is the only floating-point code in the package: a uniform trapezoidal
rule on the torus against Gustafson's density with truncated infinite
Pochhammer symbols.
"""
from __future__ import annotations

import itertools
import logging
import math
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

from .branching import (MKFamily, askey_wilson, mk_family, branching_coeffs, branching_poly,
                        compute_mk_chains)
from .field import FieldElement, ParameterPoint, ResonantParameterError
from .interp import cauchy_kernel, e_r, one_var_basis
from .laurent import LaurentPoly, sum_polys
from .partitions import (complement, conjugate, double_strip_leq, enumerate_branch_sources,
                         enumerate_pieri_targets, partitions_in_box, proximity_r, strip_degree,
                         weight)
from .pieri import pieri_coeff

log = logging.getLogger(__name__)

MAX_OFFENDERS = 10


@dataclass
class Report:
    check: str
    instance: dict
    passed: bool
    residual_terms: int = 0
    offending: list = field(default_factory=list)
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return asdict(self)


def _residual_report(check: str, instance: dict, residual: LaurentPoly, **detail) -> Report:
    offending = [{"exp": list(e), "coef": c.to_json()}
                 for e, c in sorted(residual.terms.items())[:MAX_OFFENDERS]]
    return Report(check, instance, residual.is_zero(), len(residual), offending, detail)


# -- random parameter points ---------------------------------------------------------

def random_point(rng: random.Random, bound: int = 40, upper: Fraction | None = None) -> ParameterPoint:
    """Rationals with numerators and denominators at most ``bound``.

    Without ``upper`` the values are positive and different from 1; with it
    they lie in the open interval ``(0, upper)``.
    """
    def draw():
        while True:
            den = rng.randint(2 if upper is not None else 1, bound)
            num = rng.randint(1, bound)
            value = Fraction(num, den)
            if upper is not None and not value < upper:
                continue
            if value != 1:
                return value

    return ParameterPoint(*(draw() for _ in range(6)))


def nonresonant_points(seed: int, count: int, probe: Callable[[ParameterPoint], object] | None = None,
                       upper: Fraction | None = None, max_tries: int = 100) -> list:
    """``count`` random points for which ``probe`` raises no resonance error."""
    rng = random.Random(seed)
    points = []
    tries = 0
    while len(points) < count:
        tries += 1
        if tries > max_tries:
            raise RuntimeError(f"no non-resonant point found after {max_tries} draws (seed {seed})")
        params = random_point(rng, upper=upper)
        if probe is not None:
            try:
                probe(params)
            except ResonantParameterError as exc:
                log.info("seed %s: rejected resonant point %s (%s)", seed, params, exc.factor)
                continue
        log.info("seed %s: using point %s", seed, params)
        points.append(params)
    return points


# -- exact verifiers ---------------------------------------------------------------------

def verify_pieri(lam: Sequence[int], n: int, r: int, params: ParameterPoint,
                 family: MKFamily | None = None) -> Report:
    """``E_r * P_lam - sum_mu C * P_mu == 0``."""
    family = family or mk_family(params)
    lam = tuple(lam)
    lhs = e_r(n, r, params.t, params.t0) * family(lam)
    coeffs = {mu: pieri_coeff(lam, mu, r, n, params) for mu in enumerate_pieri_targets(lam, n, r)}
    rhs = sum_polys([family(mu).scale(c) for mu, c in coeffs.items()], n)
    irrational = [list(mu) for mu, c in coeffs.items() if c.b]
    report = _residual_report("pieri", {"lambda": list(lam), "n": n, "r": r, "params": params.to_dict()},
                              lhs - rhs, targets=len(coeffs), irrational=irrational)
    report.passed = report.passed and not irrational
    return report


def verify_mimachi_cauchy(m: int, n: int, params: ParameterPoint) -> Report:
    """Kernel expansion in P(x; q, t) times P(z; t, q)."""
    x_family, z_family = mk_family(params), mk_family(params.swapped())
    terms = []
    for lam in partitions_in_box(m, n):
        dual = complement(conjugate(lam, n), m)
        sign = -1 if (m * n - weight(lam)) % 2 else 1
        left = x_family(lam).embed(m + n, range(m))
        right = z_family(dual).embed(m + n, range(m, m + n))
        terms.append((left * right).scale(sign))
    residual = cauchy_kernel(m, n) - sum_polys(terms, m + n)
    return _residual_report("cauchy-mimachi", {"m": m, "n": n, "params": params.to_dict()}, residual)


def verify_okounkov_column_row(m: int, params: ParameterPoint) -> Report:
    """Kernel with one z-variable expanded in E_r(x; t, t0) and the base-t basis."""
    terms = []
    for r in range(m + 1):
        left = e_r(m, r, params.t, params.t0).embed(m + 1, range(m))
        right = one_var_basis(m - r, params.t, params.t0).embed(m + 1, [m])
        sign = -1 if (m - r) % 2 else 1
        terms.append((left * right).scale(sign))
    residual = cauchy_kernel(m, 1) - sum_polys(terms, m + 1)
    return _residual_report("cauchy-okounkov", {"m": m, "params": params.to_dict()}, residual)


def verify_m_independence(lam: Sequence[int], mu: Sequence[int], params: ParameterPoint,
                          extra: int = 2) -> Report:
    """Branching coefficients agree for m = lam_1, ..., lam_1 + extra."""
    lam, mu = tuple(lam), tuple(mu)
    base = lam[0]
    results = {}
    for m in range(base, base + extra + 1):
        try:
            results[m] = branching_coeffs(lam, mu, params, m)
        except ResonantParameterError as exc:
            return Report("m-indep", {"lambda": list(lam), "mu": list(mu), "params": params.to_dict()},
                          False, detail={"resonant_m": m, "factor": exc.factor})
    ref = results[base]
    mismatched = [m for m, bc in results.items() if bc.B != ref.B or bc.d != ref.d]
    irrational = any(c.b for bc in results.values() for c in bc.B)
    return Report("m-indep", {"lambda": list(lam), "mu": list(mu), "params": params.to_dict()},
                  not mismatched and not irrational,
                  detail={"d": ref.d, "mismatched_m": mismatched, "irrational": irrational})


def verify_branching_consistency(lam: Sequence[int], params: ParameterPoint,
                                 family: MKFamily | None = None) -> Report:
    """Memoized branching equals the chain sum; the result is symmetric and monic."""
    family = family or mk_family(params)
    lam = tuple(lam)
    poly = family(lam)
    residual = poly - compute_mk_chains(lam, params)
    report = _residual_report("branching", {"lambda": list(lam), "params": params.to_dict()}, residual,
                              symmetric=poly.is_hyperoctahedral_symmetric(),
                              monic=poly.leading_coefficient(lam) == 1,
                              dominated=poly.is_dominated_by(lam))
    report.passed = report.passed and report.detail["symmetric"] and report.detail["monic"]
    return report


def verify_askey_wilson_t_independence(m: int, params: ParameterPoint, other_t: Fraction) -> Report:
    first = askey_wilson(m, params)
    moved = ParameterPoint(params.q, other_t, params.t0, params.t1, params.t2, params.t3)
    residual = first - askey_wilson(m, moved)
    monic = first.coefficient((m,)) == 1 and first.degree(0) == m
    report = _residual_report("askey-wilson", {"m": m, "params": params.to_dict(), "other_t": str(other_t)},
                              residual, monic=monic)
    report.passed = report.passed and monic
    return report


def verify_special_values(lam: Sequence[int], mu: Sequence[int], params: ParameterPoint) -> Report:
    """At x = t0 the branching polynomial is B^0; at x = t0 q^h the basis truncates at k = h."""
    bc = branching_coeffs(lam, mu, params)
    poly = branching_poly(lam, mu, params)
    at_t0 = poly.evaluate([params.t0]) == bc.B[0]
    truncation = []
    for h in range(bc.d + 1):
        x = params.t0 * params.q ** h
        vanish = all(not one_var_basis(k, params.q, params.t0).evaluate([x])
                     for k in range(h + 1, bc.d + 2))
        partial = sum((b * one_var_basis(k, params.q, params.t0).evaluate([x])
                       for k, b in enumerate(bc.B[:h + 1])), FieldElement(0))
        truncation.append(vanish and poly.evaluate([x]) == partial)
    return Report("special-values", {"lambda": list(lam), "mu": list(mu), "params": params.to_dict()},
                  at_t0 and all(truncation), detail={"at_t0": at_t0, "truncation": truncation})


def strip_relation_holds(lam: Sequence[int], mu: Sequence[int], m: int, r: int) -> bool:
    """Both sides of the strip-relation equivalence agree."""
    n = len(mu)
    left = proximity_r(complement(conjugate(mu, m), n), complement(conjugate(lam, m), n + 1), r)
    right = double_strip_leq(mu, lam) and m - strip_degree(lam, mu, m) <= r <= m
    return left == right


def verify_strip_relation(max_m: int = 3, max_n: int = 3) -> Report:
    failures = []
    checked = 0
    for m in range(0, max_m + 1):
        for n in range(0, max_n + 1):
            for lam in partitions_in_box(n + 1, m):
                for mu in partitions_in_box(n, m):
                    for r in range(m + 1):
                        checked += 1
                        if not strip_relation_holds(lam, mu, m, r):
                            failures.append([list(lam), list(mu), m, r])
    return Report("strip-relation", {"max_m": max_m, "max_n": max_n}, not failures,
                  detail={"checked": checked, "failures": failures[:MAX_OFFENDERS]})


# -- numerical orthogonality ---------------------------------------------------------------

@dataclass(frozen=True)
class QuadratureConfig:
    grid_points: int = 512
    pochhammer_truncation: int = 200
    tolerance: float = 1e-8

    @classmethod
    def default(cls, n: int) -> "QuadratureConfig":
        return cls(512 if n <= 1 else 128, 200, 1e-8)


def _check_domain(params: ParameterPoint):
    q = params.q
    if not 0 < q < 1:
        raise ValueError(f"orthogonality needs 0 < q < 1, got {q}")
    for name, value in (("t", params.t),) + tuple(zip(("t0", "t1", "t2", "t3"), params.tl)):
        if not 0 < abs(value) < 1:
            raise ValueError(f"orthogonality needs 0 < |{name}| < 1, got {value}")


def _qpoch_inf(a: np.ndarray, q: float, M: int) -> np.ndarray:
    out = np.ones(np.shape(a), dtype=complex)
    qk = 1.0
    for _ in range(M):
        out *= 1 - a * qk
        qk *= q
    return out


def density(zs: Sequence, params: ParameterPoint, M: int = 200) -> np.ndarray:
    """Gustafson's weight with every ``(a;q)_inf`` replaced by ``(a;q)_M``."""
    _check_domain(params)
    q, t = float(params.q), float(params.t)
    tl = [float(x) for x in params.tl]
    zs = [np.asarray(z, dtype=complex) for z in zs]
    shape = np.broadcast_shapes(*(z.shape for z in zs)) if zs else ()
    value = np.ones(shape, dtype=complex)
    for z in zs:
        value = value * _qpoch_inf(z ** 2, q, M) * _qpoch_inf(z ** -2, q, M)
        for a in tl:
            value = value / (_qpoch_inf(a * z, q, M) * _qpoch_inf(a / z, q, M))
    for zj, zk in itertools.combinations(zs, 2):
        for w in (zj * zk, zj / zk, zk / zj, 1 / (zj * zk)):
            value = value * _qpoch_inf(w, q, M) / _qpoch_inf(t * w, q, M)
    return value


def truncation_bound(params: ParameterPoint, n: int, M: int) -> float:
    """Relative error bound of the truncated density.

    For ``|a| <= A`` one has ``|(a;q)_inf / (a;q)_M - 1| <= exp(A q^M / (1-q)) - 1``;
    the bounds of all factors (and their reciprocals) add up in the exponent.
    """
    q = float(params.q)
    amplitudes = n * (2 + sum(2 * abs(float(a)) for a in params.tl))
    amplitudes += math.comb(n, 2) * 4 * (1 + abs(float(params.t)))
    return math.expm1(amplitudes * q ** M / (1 - q))


def _torus_grid(n: int, N: int):
    angles = 2 * np.pi * np.arange(N) / N
    axes = np.meshgrid(*([np.exp(1j * angles)] * n), indexing="ij")
    return axes


def inner_product(f: LaurentPoly, g: LaurentPoly, params: ParameterPoint,
                  cfg: QuadratureConfig | None = None) -> complex:
    """Haar-normalized ``∫ f(z) conj(g(z)) Δ(z)`` over the n-torus."""
    if f.nvars != g.nvars:
        raise ValueError("inner product needs polynomials in the same variables")
    n = f.nvars
    cfg = cfg or QuadratureConfig.default(n)
    grid = _torus_grid(n, cfg.grid_points)
    weight_values = density(grid, params, cfg.pochhammer_truncation)
    values = f.evaluate_complex(grid) * np.conj(g.evaluate_complex(grid)) * weight_values
    return complex(values.mean())


def verify_orthogonality(partitions: Sequence[Sequence[int]], params: ParameterPoint,
                         cfg: QuadratureConfig | None = None) -> Report:
    partitions = [tuple(p) for p in partitions]
    n = len(partitions[0])
    cfg = cfg or QuadratureConfig.default(n)
    family = mk_family(params)
    polys = {lam: family(lam) for lam in partitions}
    grid = _torus_grid(n, cfg.grid_points)
    weight_values = density(grid, params, cfg.pochhammer_truncation)
    values = {lam: p.evaluate_complex(grid) for lam, p in polys.items()}

    def ip(a, b):
        return complex((values[a] * np.conj(values[b]) * weight_values).mean())

    norms = {lam: ip(lam, lam) for lam in partitions}
    positive = all(v.real > 0 and abs(v.imag) <= 1e-12 * v.real for v in norms.values())
    worst = 0.0
    pairs = []
    for a, b in itertools.combinations(partitions, 2):
        rel = abs(ip(a, b)) / math.sqrt(norms[a].real * norms[b].real) if positive else math.inf
        pairs.append({"lambda": list(a), "mu": list(b), "relative": rel})
        worst = max(worst, rel)
    return Report("orthogonality", {"n": n, "partitions": [list(p) for p in partitions],
                                    "params": params.to_dict()},
                  positive and worst < cfg.tolerance,
                  detail={"max_relative": worst, "pairs": pairs,
                          "grid_points": cfg.grid_points, "truncation": cfg.pochhammer_truncation,
                          "truncation_bound": truncation_bound(params, n, cfg.pochhammer_truncation)})


# -- suites ------------------------------------------------------------------------------------

def _threads() -> int:
    try:
        return max(1, int(os.environ.get("MK_THREADS", "1")))
    except ValueError:
        return 1


def _map(fn, items: Iterable) -> list:
    items = list(items)
    workers = min(_threads(), len(items))
    if workers <= 1:
        return [fn(item) for item in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _pieri_at_point(job) -> list:
    params, instances = job
    family = mk_family(params)
    return [verify_pieri(lam, n, r, params, family) for lam, n, r in instances]


def pieri_instances(max_size: int = 3, sizes: Sequence[int] | None = None) -> list:
    sizes = sizes if sizes is not None else range(1, max_size + 1)
    return [(lam, n, r) for n in sizes for lam in partitions_in_box(n, max_size)
            for r in range(1, n + 1)]


def _probe_pieri(instances):
    def probe(params):
        family = mk_family(params)
        for lam, n, r in instances:
            for mu in enumerate_pieri_targets(lam, n, r):
                pieri_coeff(lam, mu, r, n, params)
                family(mu)
    return probe


def run_pieri(max_size: int = 3, seed: int = 0, points: int = 3, sizes=None) -> list:
    instances = pieri_instances(max_size, sizes)
    chosen = nonresonant_points(seed, points, _probe_pieri(instances))
    return [r for batch in _map(_pieri_at_point, [(p, instances) for p in chosen]) for r in batch]


def _mimachi_job(job):
    params, pairs = job
    return [verify_mimachi_cauchy(m, n, params) for m, n in pairs]


def run_mimachi(max_size: int = 2, seed: int = 0, points: int = 3) -> list:
    pairs = [(m, n) for m in range(1, max_size + 1) for n in range(1, max_size + 1)]

    def probe(params):
        for m, n in pairs:
            for lam in partitions_in_box(m, n):
                mk_family(params)(lam)
            for mu in partitions_in_box(n, m):
                mk_family(params.swapped())(mu)

    chosen = nonresonant_points(seed, points, probe)
    return [r for batch in _map(_mimachi_job, [(p, pairs) for p in chosen]) for r in batch]


def run_okounkov(max_size: int = 4, seed: int = 0, points: int = 3) -> list:
    chosen = nonresonant_points(seed, points)
    return [verify_okounkov_column_row(m, p) for p in chosen for m in range(1, max_size + 1)]


def m_independence_instances(max_size: int = 3) -> list:
    out = []
    for size in range(1, max_size + 1):
        for lam in partitions_in_box(size, max_size):
            out.extend((lam, mu) for mu in enumerate_branch_sources(lam))
    return out


def run_m_independence(max_size: int = 3, seed: int = 0, points: int = 1) -> list:
    instances = m_independence_instances(max_size)

    def probe(params):
        for lam, mu in instances:
            for m in range(lam[0], lam[0] + 3):
                branching_coeffs(lam, mu, params, m)

    chosen = nonresonant_points(seed, points, probe)
    return [verify_m_independence(lam, mu, p) for p in chosen for lam, mu in instances]


def run_branching(max_size: int = 3, seed: int = 0, points: int = 1, sizes=None) -> list:
    sizes = sizes if sizes is not None else range(1, max_size + 1)
    lams = [lam for n in sizes for lam in partitions_in_box(n, max_size)]

    def probe(params):
        family = mk_family(params)
        for lam in lams:
            family(lam)

    chosen = nonresonant_points(seed, points, probe)
    out = []
    for p in chosen:
        family = mk_family(p)
        out.extend(verify_branching_consistency(lam, p, family) for lam in lams)
    return out


def run_askey_wilson(max_size: int = 4, seed: int = 0, points: int = 1) -> list:
    rng = random.Random(seed + 1)

    def probe(params):
        for m in range(max_size + 1):
            askey_wilson(m, params)

    out = []
    for p in nonresonant_points(seed, points, probe):
        while True:
            other = Fraction(rng.randint(1, 40), rng.randint(1, 40))
            if other not in (1, p.t):
                try:
                    probe(ParameterPoint(p.q, other, *p.tl))
                except ResonantParameterError:
                    continue
                break
        out.extend(verify_askey_wilson_t_independence(m, p, other) for m in range(max_size + 1))
    return out


def run_special_values(max_size: int = 3, seed: int = 0, points: int = 1) -> list:
    instances = m_independence_instances(max_size)

    def probe(params):
        for lam, mu in instances:
            branching_coeffs(lam, mu, params)

    return [verify_special_values(lam, mu, p)
            for p in nonresonant_points(seed, points, probe) for lam, mu in instances]


ORTHOGONALITY_N2 = [(0, 0), (1, 0), (1, 1), (2, 0)]


def run_orthogonality(max_size: int = 3, seed: int = 0, points: int = 1) -> list:
    def probe(params):
        for m in range(max_size + 1):
            mk_family(params)((m,))
        for lam in ORTHOGONALITY_N2:
            mk_family(params)(lam)

    out = []
    for p in nonresonant_points(seed, points, probe, upper=Fraction(3, 4)):
        out.append(verify_orthogonality([(m,) for m in range(max_size + 1)], p))
        out.append(verify_orthogonality(ORTHOGONALITY_N2, p))
    return out


SUITES = {
    "pieri": run_pieri,
    "cauchy-mimachi": run_mimachi,
    "cauchy-okounkov": run_okounkov,
    "m-indep": run_m_independence,
    "orthogonality": run_orthogonality,
    "branching": run_branching,
    "askey-wilson": run_askey_wilson,
    "special-values": run_special_values,
    "strip-relation": lambda max_size=3, seed=0, points=1: [verify_strip_relation(max_size, max_size)],
}

DEFAULT_SIZES = {
    "pieri": 3,
    "cauchy-mimachi": 2,
    "cauchy-okounkov": 4,
    "m-indep": 3,
    "orthogonality": 3,
    "branching": 3,
    "askey-wilson": 4,
    "special-values": 3,
    "strip-relation": 3,
}

