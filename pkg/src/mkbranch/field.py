"""Exact coefficient arithmetic.

Rationals are GMP rationals (``gmpy2.mpq``).  Elements of the quadratic
extension Q(sqrt(s)) are :class:`FieldElement` values ``a + b*sqrt(s)``; the
radicand ``s`` travels with the element so that values coming from different
parameter points (e.g. with q and t exchanged) never get mixed silently.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction

import gmpy2

Rational = type(gmpy2.mpq())
RATIONAL_TYPES = (int, Rational, Fraction)


class ResonantParameterError(ZeroDivisionError):
    """A denominator factor of a coefficient formula vanishes at this parameter point."""

    def __init__(self, factor: str):
        super().__init__(f"resonant parameter point: factor {factor} vanishes")
        self.factor = factor


def as_rational(x) -> Rational:
    """Parse ``x`` (int, Fraction, mpq or a string such as ``"3/7"``) into an mpq."""
    if isinstance(x, Rational):
        return x
    if isinstance(x, (int, Fraction)):
        return gmpy2.mpq(x)
    if isinstance(x, str):
        text = x.strip()
        if not text or any(ch in text for ch in ".eE"):
            raise ValueError(f"expected an exact rational like '3/7', got {x!r}")
        return gmpy2.mpq(text)
    if isinstance(x, FieldElement):
        return x.to_rational()
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def rational_str(x) -> str:
    return str(as_rational(x))


class FieldElement:
    """``a + b*sqrt(s)`` with rational ``a``, ``b`` and radicand ``s``.

    ``s`` may be ``None`` for elements known to be rational.  Binary operations
    between two irrational elements require identical radicands.
    """

    __slots__ = ("a", "b", "s")

    def __init__(self, a=0, b=0, s=None):
        self.a = a if type(a) is Rational else as_rational(a)
        self.b = b if type(b) is Rational else as_rational(b)
        self.s = None if s is None else (s if type(s) is Rational else as_rational(s))
        if self.b and self.s is None:
            raise ValueError("irrational FieldElement needs a radicand")

    @classmethod
    def coerce(cls, x) -> "FieldElement":
        if isinstance(x, FieldElement):
            return x
        return cls(as_rational(x))

    # -- structure --------------------------------------------------------
    def _radicand(self, other: "FieldElement"):
        if self.b and other.b and self.s != other.s:
            raise ValueError(f"radicand mismatch: {self.s} vs {other.s}")
        if other.b or self.s is None:
            return other.s if other.s is not None else self.s
        return self.s

    def is_rational(self) -> bool:
        return self.b == 0

    def to_rational(self) -> Rational:
        if self.b:
            raise ValueError(f"{self!r} is not rational")
        return self.a

    def norm(self) -> Rational:
        if not self.b:
            return self.a * self.a
        return self.a * self.a - self.b * self.b * self.s

    def conjugate(self) -> "FieldElement":
        return FieldElement(self.a, -self.b, self.s)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, FieldElement):
            if isinstance(other, RATIONAL_TYPES):
                return FieldElement(self.a + other, self.b, self.s)
            return NotImplemented
        return FieldElement(self.a + other.a, self.b + other.b, self._radicand(other))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(-self.a, -self.b, self.s)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if not isinstance(other, FieldElement):
            if isinstance(other, RATIONAL_TYPES):
                return FieldElement(self.a - other, self.b, self.s)
            return NotImplemented
        return FieldElement(self.a - other.a, self.b - other.b, self._radicand(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, FieldElement):
            if isinstance(other, RATIONAL_TYPES):
                return FieldElement(self.a * other, self.b * other, self.s)
            return NotImplemented
        if not self.b and not other.b:
            return FieldElement(self.a * other.a, 0, self.s if self.s is not None else other.s)
        s = self._radicand(other)
        a, b, c, d = self.a, self.b, other.a, other.b
        return FieldElement(a * c + b * d * s, a * d + b * c, s)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError(f"{self!r} is not invertible")
        return FieldElement(self.a / n, -self.b / n, self.s)

    def __truediv__(self, other):
        if not isinstance(other, FieldElement):
            if isinstance(other, RATIONAL_TYPES):
                if other == 0:
                    raise ZeroDivisionError("division by zero")
                return FieldElement(self.a / other, self.b / other, self.s)
            return NotImplemented
        if not other.b:
            if other.a == 0:
                raise ZeroDivisionError("division by zero")
            return FieldElement(self.a / other.a, self.b / other.a, self.s if self.s is not None else other.s)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return FieldElement.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = FieldElement(1, 0, self.s)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison / conversion -------------------------------------------
    def __eq__(self, other):
        if isinstance(other, RATIONAL_TYPES):
            return not self.b and self.a == other
        if not isinstance(other, FieldElement):
            return NotImplemented
        if self.b != other.b or self.a != other.a:
            return False
        return not self.b or self.s == other.s

    def __hash__(self):
        if not self.b:
            return hash(self.a)
        return hash((self.a, self.b, self.s))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __complex__(self):
        if not self.b:
            return complex(float(self.a))
        return float(self.a) + float(self.b) * cmath.sqrt(float(self.s))

    def __repr__(self):
        if not self.b:
            return f"FieldElement({self.a})"
        return f"FieldElement({self.a} + {self.b}*sqrt({self.s}))"

    def to_json(self) -> dict:
        return {"a": rational_str(self.a), "b": rational_str(self.b)}

    @classmethod
    def from_json(cls, data: dict, s=None) -> "FieldElement":
        b = as_rational(data.get("b", "0"))
        return cls(as_rational(data["a"]), b, s if b else None)


ONE = FieldElement(1)
ZERO = FieldElement(0)


def qpochhammer(a, q, k: int) -> FieldElement:
    """Finite q-Pochhammer symbol ``(a;q)_k = (1-a)(1-aq)...(1-aq^(k-1))``."""
    if k < 0:
        raise ValueError(f"negative Pochhammer length {k}")
    a = FieldElement.coerce(a)
    q = as_rational(q)
    result = FieldElement(1, 0, a.s)
    term = a
    for _ in range(k):
        result = result * (1 - term)
        term = term * q
    return result


_PARAM_NAMES = ("q", "t", "t0", "t1", "t2", "t3")


@dataclass(frozen=True)
class ParameterPoint:
    """Exact rational values of ``(q, t, t0, t1, t2, t3)``."""

    q: Rational
    t: Rational
    t0: Rational
    t1: Rational
    t2: Rational
    t3: Rational

    def __post_init__(self):
        for name in _PARAM_NAMES:
            value = as_rational(getattr(self, name))
            if value == 0:
                raise ValueError(f"parameter {name} must be nonzero")
            object.__setattr__(self, name, value)

    @classmethod
    def parse(cls, text: str) -> "ParameterPoint":
        """Parse ``"q=1/3,t=1/2,t0=1/5,t1=2/7,t2=1/4,t3=3/8"``."""
        values = {}
        for item in text.split(","):
            if not item.strip():
                continue
            key, _, value = item.partition("=")
            key = key.strip()
            if key not in _PARAM_NAMES:
                raise ValueError(f"unknown parameter {key!r}")
            values[key] = as_rational(value)
        missing = [k for k in _PARAM_NAMES if k not in values]
        if missing:
            raise ValueError(f"missing parameters: {', '.join(missing)}")
        return cls(**values)

    def to_dict(self) -> dict:
        return {name: rational_str(getattr(self, name)) for name in _PARAM_NAMES}

    def __str__(self):
        return ",".join(f"{k}={v}" for k, v in self.to_dict().items())

    @property
    def tl(self) -> tuple:
        return (self.t0, self.t1, self.t2, self.t3)

    def swapped(self) -> "ParameterPoint":
        """The point with q and t exchanged."""
        return ParameterPoint(self.t, self.q, self.t0, self.t1, self.t2, self.t3)

    @property
    def s(self) -> Rational:
        return self.t0 * self.t1 * self.t2 * self.t3 / self.q

    @property
    def hat_t0(self) -> FieldElement:
        return FieldElement(0, 1, self.s)

    def hat_t(self, l: int) -> FieldElement:
        """Dual parameter: sqrt(s) for l = 0, t0*t_l/sqrt(s) otherwise."""
        if l == 0:
            return self.hat_t0
        if l not in (1, 2, 3):
            raise ValueError(f"hatted index {l} not in 0..3")
        s = self.s
        return FieldElement(0, self.t0 * self.tl[l] / s, s)

    def tau(self, n: int, j: int) -> Rational:
        return self.t ** (n - j) * self.t0

    def tau_hat(self, n: int, j: int) -> FieldElement:
        return FieldElement(0, self.t ** (n - j), self.s)


def hatted(params: ParameterPoint, n: int, j: int) -> tuple:
    """``(tau_j, tau_hat_j)`` for the spectral point of ``n`` variables."""
    if not 1 <= j <= n:
        raise ValueError(f"index j={j} outside 1..{n}")
    return params.tau(n, j), params.tau_hat(n, j)
