"""Partition and Young-diagram combinatorics.

Partitions are plain tuples of nonnegative ints in weakly decreasing order.
The tuple length is the number of variables ``n``; trailing zeros matter.
Predicates comparing two partitions of different lengths pad the shorter one
with zeros (the natural embedding of Lambda_n into Lambda_{n+1}).
"""
from __future__ import annotations

import itertools
from typing import Iterator, Sequence

Partition = tuple


def as_partition(parts: Sequence[int], n: int | None = None) -> Partition:
    """Validate ``parts`` and optionally pad with zeros to length ``n``."""
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"{parts} is not weakly decreasing")
    if n is not None:
        if n < len(parts):
            if any(parts[n:]):
                raise ValueError(f"{parts} has more than {n} nonzero parts")
            parts = parts[:n]
        parts = parts + (0,) * (n - len(parts))
    return parts


def pad(lam: Sequence[int], n: int) -> Partition:
    return tuple(lam) + (0,) * (n - len(lam))


def weight(lam: Sequence[int]) -> int:
    return sum(lam)


def graded_key(lam: Sequence[int]):
    return (sum(lam), tuple(lam))


def conjugate(lam: Sequence[int], m: int) -> Partition:
    """The conjugate partition as an element of Lambda_m (requires ``m >= lam_1``)."""
    first = lam[0] if lam else 0
    if m < first:
        raise ValueError(f"conjugate length m={m} smaller than largest part {first}")
    return tuple(sum(1 for p in lam if p >= i) for i in range(1, m + 1))


def complement(mu: Sequence[int], m: int) -> Partition:
    """``m^n - mu``: the complement of ``mu`` inside the ``n x m`` rectangle, rotated."""
    if mu and mu[0] > m:
        raise ValueError(f"{tuple(mu)} does not fit in width {m}")
    return tuple(m - p for p in reversed(mu))


def contains(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """``mu ⊂ lam`` after zero padding."""
    n = max(len(lam), len(mu))
    return all(a >= b for a, b in zip(pad(lam, n), pad(mu, n)))


def is_horizontal_strip(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """``lam/mu`` is a horizontal strip: lam_1 >= mu_1 >= lam_2 >= mu_2 >= ..."""
    n = max(len(lam), len(mu))
    lam, mu = pad(lam, n), pad(mu, n)
    for j in range(n):
        if mu[j] > lam[j]:
            return False
        if j + 1 < n and lam[j + 1] > mu[j]:
            return False
    return True


def is_vertical_strip(lam: Sequence[int], nu: Sequence[int]) -> bool:
    """``lam/nu`` is a vertical strip: nu_j <= lam_j <= nu_j + 1."""
    n = max(len(lam), len(nu))
    return all(b <= a <= b + 1 for a, b in zip(pad(lam, n), pad(nu, n)))


def proximity_r(mu: Sequence[int], lam: Sequence[int], r: int) -> bool:
    """``mu ~_r lam``.

    The cheapest common ``nu`` is the componentwise minimum, which works iff
    no row differs by more than one box; the cost is then the l1 distance.
    """
    if r < 0:
        raise ValueError(f"r must be nonnegative, got {r}")
    n = max(len(lam), len(mu))
    total = 0
    for a, b in zip(pad(lam, n), pad(mu, n)):
        diff = abs(a - b)
        if diff > 1:
            return False
        total += diff
    return total <= r


def _interlacing_bounds(mu: Sequence[int], lam: Sequence[int]):
    n = max(len(lam), len(mu))
    lam, mu = pad(lam, n), pad(mu, n)
    for j in range(n):
        lo = max(lam[j + 1] if j + 1 < n else 0, mu[j])
        hi = min(lam[j], mu[j - 1]) if j > 0 else lam[j]
        yield lo, hi


def double_strip_leq(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """``mu ⪯ lam``: lam is obtained from mu by adding two horizontal strips.

    Both interlacing chains constrain each ``nu_j`` to an interval that does not
    depend on the other rows, so feasibility is a row-by-row check.
    """
    return all(lo <= hi for lo, hi in _interlacing_bounds(mu, lam))


def interpolating_partition(mu: Sequence[int], lam: Sequence[int]) -> Partition | None:
    """A ``nu`` witnessing ``mu ⪯ lam`` (the smallest one), or None."""
    nu = []
    for lo, hi in _interlacing_bounds(mu, lam):
        if lo > hi:
            return None
        nu.append(lo)
    return tuple(nu)


def strip_degree(lam: Sequence[int], mu: Sequence[int], m: int) -> int:
    """Number of columns ``j <= m`` where ``lam'_j = mu'_j + 1``."""
    lc, mc = conjugate(lam, m), conjugate(mu, m)
    return sum(1 for a, b in zip(lc, mc) if a == b + 1)


def partitions_in_box(n: int, m: int) -> list:
    """All of Lambda_n with largest part at most ``m``, graded-lex ordered."""
    out = [tuple(sorted(c, reverse=True))
           for c in itertools.combinations_with_replacement(range(m + 1), n)]
    return sorted(out, key=graded_key)


def enumerate_pieri_targets(lam: Sequence[int], n: int, r: int) -> list:
    """All ``mu`` in Lambda_n with ``mu ~_r lam``."""
    lam = as_partition(lam, n)
    if not 0 <= r:
        raise ValueError(f"r must be nonnegative, got {r}")
    found = []
    for shift in itertools.product((-1, 0, 1), repeat=n):
        if sum(abs(x) for x in shift) > r:
            continue
        mu = tuple(a + b for a, b in zip(lam, shift))
        if any(p < 0 for p in mu) or any(a < b for a, b in zip(mu, mu[1:])):
            continue
        found.append(mu)
    return sorted(found, key=graded_key)


def enumerate_branch_sources(lam: Sequence[int]) -> list:
    """All ``mu`` in Lambda_n with ``mu ⪯ lam``, for ``lam`` in Lambda_{n+1}."""
    lam = as_partition(lam)
    n = len(lam) - 1
    if n < 0:
        raise ValueError("branching needs at least one variable")
    ranges = [range(lam[j + 2] if j + 2 <= n else 0, lam[j] + 1) for j in range(n)]
    found = []
    for mu in itertools.product(*ranges):
        if any(a < b for a, b in zip(mu, mu[1:])):
            continue
        if double_strip_leq(mu, lam):
            found.append(tuple(mu))
    return sorted(found, key=graded_key)


def enumerate_chains(lam: Sequence[int]) -> Iterator[tuple]:
    """Lazily yield chains ``(mu1, ..., mun = lam)`` with ``mu_i`` in Lambda_i."""
    lam = as_partition(lam)
    if not lam:
        yield ()
        return
    for mu in enumerate_branch_sources(lam):
        for chain in enumerate_chains(mu):
            yield chain + (lam,)
