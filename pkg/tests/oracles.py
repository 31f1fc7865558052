"""Slow, independent reference implementations used only by the tests."""
import itertools
from fractions import Fraction

from mkbranch.laurent import LaurentPoly, bracket


def boxed(n, m):
    """All weakly decreasing n-tuples with entries in 0..m (no ordering promise)."""
    return [p for p in itertools.product(range(m + 1), repeat=n)
            if all(a >= b for a, b in zip(p, p[1:]))]


def padded(p, n):
    return tuple(p) + (0,) * (n - len(p))


def proximity_bruteforce(mu, lam, r):
    n = max(len(mu), len(lam))
    mu, lam = padded(mu, n), padded(lam, n)
    top = max(max(mu, default=0), max(lam, default=0))
    for nu in boxed(n, top):
        if all(a <= b and a <= c for a, b, c in zip(nu, lam, mu)) \
                and all(c - a <= 1 for a, c in zip(nu, lam)) \
                and all(c - a <= 1 for a, c in zip(nu, mu)) \
                and (sum(lam) - sum(nu)) + (sum(mu) - sum(nu)) <= r:
            return True
    return False


def horizontal(big, small):
    n = len(big)
    return all(small[j] <= big[j] for j in range(n)) and \
        all(big[j + 1] <= small[j] for j in range(n - 1))


def double_strip_bruteforce(mu, lam):
    n = max(len(mu), len(lam))
    mu, lam = padded(mu, n), padded(lam, n)
    top = max(lam, default=0)
    return any(horizontal(lam, nu) and horizontal(nu, mu) for nu in boxed(n, top))


def e_r_subsets(n, r, t, t0):
    """E_r by listing every r-subset; the i-th chosen index j carries t^(j-i) t0."""
    total = LaurentPoly.zero(n)
    for subset in itertools.combinations(range(1, n + 1), r):
        term = LaurentPoly.constant(n)
        for i, j in enumerate(subset, start=1):
            term = term * bracket(n, j - 1, Fraction(t) ** (j - i) * Fraction(t0))
        total = total + term
    return total


class ScratchPieri:
    """Rational-only transcription of the V- and U-factors.

    Every hatted product is rewritten by hand as a rational expression in
    q, t, t0..t3, so no quadratic extension is involved.
    """

    def __init__(self, params, n):
        self.q = Fraction(str(params.q))
        self.t = Fraction(str(params.t))
        self.tl = [Fraction(str(x)) for x in params.tl]
        self.s = self.tl[0] * self.tl[1] * self.tl[2] * self.tl[3] / self.q
        self.n = n

    def hat_t_times_tau(self, l, j, e):
        """t_hat_l * tau_hat_j^e."""
        k = self.n - j
        t, t0 = self.t, self.tl[0]
        if e == 1:
            return t ** k * (self.s if l == 0 else t0 * self.tl[l])
        return t ** (-k) * (1 if l == 0 else t0 * self.tl[l] / self.s)

    def tau_tau(self, j, e, k, f):
        """tau_hat_j^e * tau_hat_k^f."""
        power = e * (self.n - j) + f * (self.n - k)
        return self.t ** power * self.s ** ((e + f) // 2)

    def single(self, lam, j, e):
        q, t0 = self.q, self.tl[0]
        num = 1
        for l in range(4):
            num *= 1 - self.hat_t_times_tau(l, j, e) * q ** (e * lam[j - 1])
        sq = self.tau_tau(j, e, j, e) * q ** (2 * e * lam[j - 1])
        return num / (t0 * (1 - sq) * (1 - sq * q))

    def pair(self, lam, j, e, k, f, mixed):
        q, t = self.q, self.t
        x = self.tau_tau(j, e, k, f) * q ** (e * lam[j - 1] + f * lam[k - 1])
        if mixed:
            return (1 - t * x) * (1 - x * q / t) / ((1 - x) * (1 - x * q))
        return (1 - t * x) * (1 - t * x * q) / (t * (1 - x) * (1 - x * q))

    def cross(self, lam, j, e, k):
        q, t = self.q, self.t
        a = self.tau_tau(j, e, k, 1) * q ** (e * lam[j - 1] + lam[k - 1])
        b = self.tau_tau(j, e, k, -1) * q ** (e * lam[j - 1] - lam[k - 1])
        return (1 - t * a) * (1 - t * b) / (t * (1 - a) * (1 - b))

    def blocks(self, lam, signed, others, mixed):
        value = Fraction(1)
        idx = sorted(signed)
        for j in idx:
            value *= self.single(lam, j, signed[j])
        for a, b in itertools.combinations(idx, 2):
            value *= self.pair(lam, a, signed[a], b, signed[b], mixed)
        for j in idx:
            for k in others:
                value *= self.cross(lam, j, signed[j], k)
        return value

    def v(self, lam, signed):
        others = [k for k in range(1, self.n + 1) if k not in signed]
        return self.blocks(lam, signed, others, False) if signed else Fraction(1)

    def u(self, lam, K, p):
        if p == 0:
            return Fraction(1)
        total = Fraction(0)
        for I in itertools.combinations(sorted(K), p):
            for signs in itertools.product((1, -1), repeat=p):
                signed = dict(zip(I, signs))
                total += self.blocks(lam, signed, [k for k in K if k not in signed], True)
        return (-1) ** p * total


def askey_wilson_recurrence(degree, params):
    """Monic Askey-Wilson polynomials in z + 1/z from the classical three-term recurrence."""
    a, b, c, d = (Fraction(str(x)) for x in params.tl)
    q = Fraction(str(params.q))
    abcd = a * b * c * d

    def A(n):
        return ((1 - a * b * q ** n) * (1 - a * c * q ** n) * (1 - a * d * q ** n)
                * (1 - abcd * q ** (n - 1)) / (a * (1 - abcd * q ** (2 * n - 1)) * (1 - abcd * q ** (2 * n))))

    def C(n):
        return (a * (1 - q ** n) * (1 - b * c * q ** (n - 1)) * (1 - b * d * q ** (n - 1))
                * (1 - c * d * q ** (n - 1)) / ((1 - abcd * q ** (2 * n - 2)) * (1 - abcd * q ** (2 * n - 1))))

    x = LaurentPoly.variable(1, 0) + LaurentPoly.variable(1, 0, -1)
    polys = [LaurentPoly.constant(1), x - (a + 1 / a - A(0) - C(0))]
    for n in range(1, degree):
        polys.append(x * polys[n] - polys[n].scale(a + 1 / a - A(n) - C(n))
                     - polys[n - 1].scale(A(n - 1) * C(n)))
    return polys[: degree + 1]
