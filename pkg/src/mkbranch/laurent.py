"""Sparse multivariate Laurent polynomials over :class:`FieldElement`."""
from __future__ import annotations

from collections import Counter
from math import factorial
from typing import Iterable, Mapping, Sequence

from .field import RATIONAL_TYPES, FieldElement


def _coef(c) -> FieldElement:
    return c if isinstance(c, FieldElement) else FieldElement.coerce(c)


class LaurentPoly:
    """Immutable sparse Laurent polynomial in ``nvars`` variables.

    ``terms`` maps exponent tuples (possibly negative entries) to nonzero
    coefficients.  A polynomial in zero variables is a constant.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple, object] | None = None):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        self.nvars = nvars
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} has wrong length for {nvars} variables")
            c = _coef(c)
            if c:
                clean[exp] = c
        self.terms = clean

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "LaurentPoly":
        # terms already canonical
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        return obj

    # -- constructors -------------------------------------------------------
    @classmethod
    def zero(cls, nvars: int) -> "LaurentPoly":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c=1) -> "LaurentPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exp: Sequence[int], c=1) -> "LaurentPoly":
        return cls(len(exp), {tuple(exp): c})

    @classmethod
    def variable(cls, nvars: int, i: int, power: int = 1) -> "LaurentPoly":
        if not 0 <= i < nvars:
            raise ValueError(f"variable index {i} out of range for {nvars} variables")
        exp = [0] * nvars
        exp[i] = power
        return cls(nvars, {tuple(exp): 1})

    # -- basic queries --------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coefficient(self, exp: Sequence[int]) -> FieldElement:
        return self.terms.get(tuple(exp), FieldElement(0))

    def is_rational(self) -> bool:
        return all(not c.b for c in self.terms.values())

    def degree(self, var: int) -> int:
        """Largest exponent of variable ``var``; None for the zero polynomial."""
        if not self.terms:
            return None
        return max(e[var] for e in self.terms)

    def __repr__(self):
        if not self.terms:
            return f"LaurentPoly({self.nvars}, 0)"
        parts = [f"{c!r}*z^{e}" for e, c in sorted(self.terms.items())]
        return f"LaurentPoly({self.nvars}, " + " + ".join(parts) + ")"

    # -- ring operations --------------------------------------------------------
    def _check(self, other: "LaurentPoly"):
        if self.nvars != other.nvars:
            raise ValueError(f"nvars mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            return self + LaurentPoly.constant(self.nvars, other)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            v = c if v is None else v + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "LaurentPoly":
        c = _coef(c)
        if not c:
            return LaurentPoly.zero(self.nvars)
        return LaurentPoly._raw(self.nvars, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            return self.scale(other)
        self._check(other)
        if self.is_rational() and other.is_rational():
            acc = {}
            right = [(e, c.a) for e, c in other.terms.items()]
            for e1, c1 in self.terms.items():
                a1 = c1.a
                for e2, a2 in right:
                    e = tuple([x + y for x, y in zip(e1, e2)])
                    acc[e] = acc.get(e, 0) + a1 * a2
            return LaurentPoly._raw(self.nvars, {e: FieldElement(v) for e, v in acc.items() if v})
        acc = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple([x + y for x, y in zip(e1, e2)])
                v = acc.get(e)
                acc[e] = c1 * c2 if v is None else v + c1 * c2
        return LaurentPoly._raw(self.nvars, {e: v for e, v in acc.items() if v})

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers of polynomials are not Laurent polynomials")
        result = LaurentPoly.constant(self.nvars)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, RATIONAL_TYPES + (FieldElement,)):
            return self == LaurentPoly.constant(self.nvars, other)
        return NotImplemented

    __hash__ = None

    # -- variable maps ------------------------------------------------------------
    def embed(self, nvars: int, positions: Sequence[int]) -> "LaurentPoly":
        """Rename variable ``i`` to ``positions[i]`` inside ``nvars`` variables."""
        if len(positions) != self.nvars:
            raise ValueError("one target position per variable required")
        out = {}
        for e, c in self.terms.items():
            new = [0] * nvars
            for i, p in enumerate(positions):
                new[p] += e[i]
            out[tuple(new)] = c
        return LaurentPoly(nvars, out)

    def evaluate(self, point: Sequence) -> FieldElement:
        """Exact value at ``point`` (nonzero coordinates)."""
        point = [FieldElement.coerce(x) for x in point]
        if len(point) != self.nvars:
            raise ValueError(f"expected {self.nvars} coordinates, got {len(point)}")
        if any(not x for x in point):
            raise ValueError("Laurent polynomials cannot be evaluated at a zero coordinate")
        inverses = [x.inverse() for x in point]
        cache = {}

        def power(i, k):
            key = (i, k)
            if key not in cache:
                cache[key] = point[i] ** k if k >= 0 else inverses[i] ** (-k)
            return cache[key]

        total = FieldElement(0)
        for e, c in self.terms.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            total = total + term
        return total

    def evaluate_complex(self, grids: Sequence) -> "object":
        """Floating-point evaluation on numpy arrays of complex coordinates."""
        import numpy as np

        shape = np.broadcast_shapes(*(np.shape(g) for g in grids)) if grids else ()
        total = np.zeros(shape, dtype=complex)
        for e, c in self.terms.items():
            term = np.full(shape, complex(c))
            for g, k in zip(grids, e):
                if k:
                    term = term * g ** k
            total = total + term
        return total

    # -- symmetry and leading terms -------------------------------------------------
    def is_hyperoctahedral_symmetric(self) -> bool:
        """Invariance under permutations and inversions of the variables."""
        orbits = {}
        for e, c in self.terms.items():
            key = orbit_key(e)
            seen = orbits.get(key)
            if seen is None:
                orbits[key] = [c, 1]
            elif seen[0] != c:
                return False
            else:
                seen[1] += 1
        return all(count == orbit_size(key) for key, (_, count) in orbits.items())

    def leading_coefficient(self, lam: Sequence[int]) -> FieldElement:
        return self.coefficient(tuple(lam) + (0,) * (self.nvars - len(lam)))

    def is_dominated_by(self, lam: Sequence[int]) -> bool:
        """Every monomial's sorted absolute exponent is dominated by ``lam``."""
        lam = tuple(lam) + (0,) * (self.nvars - len(lam))
        for e in self.terms:
            key = orbit_key(e)
            a = b = 0
            for x, y in zip(key, lam):
                a += x
                b += y
                if a > b:
                    return False
        return True

    # -- serialization -----------------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "nvars": self.nvars,
            "terms": [{"exp": list(e), "coef": c.to_json()} for e, c in sorted(self.terms.items())],
        }

    @classmethod
    def from_json(cls, data: dict, s=None) -> "LaurentPoly":
        terms = {tuple(t["exp"]): FieldElement.from_json(t["coef"], s) for t in data["terms"]}
        return cls(int(data["nvars"]), terms)


def orbit_key(exp: Iterable[int]) -> tuple:
    """Canonical representative of the hyperoctahedral orbit of an exponent."""
    return tuple(sorted((abs(e) for e in exp), reverse=True))


def orbit_size(key: Sequence[int]) -> int:
    size = factorial(len(key))
    for mult in Counter(key).values():
        size //= factorial(mult)
    return size * 2 ** sum(1 for k in key if k)


def bracket(nvars: int, var_index: int, x) -> LaurentPoly:
    """``<z_i; x> = z_i + 1/z_i - x - 1/x`` as a polynomial in ``nvars`` variables."""
    x = FieldElement.coerce(x)
    if not x:
        raise ValueError("bracket parameter must be nonzero")
    z = LaurentPoly.variable(nvars, var_index)
    zinv = LaurentPoly.variable(nvars, var_index, -1)
    return z + zinv - (x + x.inverse())


def sum_polys(polys: Iterable[LaurentPoly], nvars: int) -> LaurentPoly:
    """Sum with in-place accumulation (avoids quadratic copying)."""
    acc = {}
    for p in polys:
        if p.nvars != nvars:
            raise ValueError(f"nvars mismatch: {p.nvars} vs {nvars}")
        for e, c in p.terms.items():
            v = acc.get(e)
            acc[e] = c if v is None else v + c
    return LaurentPoly._raw(nvars, {e: c for e, c in acc.items() if c})
