"""Exact arithmetic in cyclotomic fields Q(zeta_M).

Scalars are elements of Q(zeta_M) stored on the power basis
1, zeta, ..., zeta^(d-1) with d = phi(M), always reduced modulo the
M-th cyclotomic polynomial.  Coefficients are exact rationals
(gmpy2.mpq), so equality, rank and invertibility tests are exact.
"""

from __future__ import annotations

import functools
from math import gcd

from gmpy2 import mpq, mpz

from .errors import DivisionByZero, OrderUnavailable, RootUnavailable

__all__ = ["Field", "Scalar", "field"]

_ZERO = mpq(0)
_ONE = mpq(1)


def _poly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(num, den):
    """Exact division of rational coefficient lists; den need not be monic."""
    num = list(num)
    q = [mpq(0)] * max(0, len(num) - len(den) + 1)
    lead = den[-1]
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1] / lead
        if c:
            q[k] = c
            for i, d in enumerate(den):
                num[k + i] -= c * d
    return q, _poly_trim(num)


@functools.cache
def cyclotomic_polynomial(m):
    """Integer coefficient list of the m-th cyclotomic polynomial."""
    if m < 1:
        raise ValueError("conductor must be positive")
    if m == 1:
        return (mpz(-1), mpz(1))
    # divide x^m - 1 by the product of cyclotomic polynomials of proper divisors
    num = [mpq(0)] * (m + 1)
    num[0], num[m] = mpq(-1), mpq(1)
    for d in range(1, m):
        if m % d == 0:
            num, rem = _poly_divmod(num, [mpq(c) for c in cyclotomic_polynomial(d)])
            assert not rem
    return tuple(mpz(c) for c in num)


def _euler_phi(m):
    n, result, p = m, m, 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


class Field:
    """The cyclotomic field Q(zeta_M), a Scalar factory.

    Instances are interned per conductor; obtain them through field(M).
    """

    def __init__(self, conductor):
        self.conductor = conductor
        self.minimal_polynomial = cyclotomic_polynomial(conductor)
        self.degree = len(self.minimal_polynomial) - 1
        assert self.degree == _euler_phi(conductor)
        d = self.degree
        # rem[k - d] = x^k mod Phi_M for d <= k <= 2d - 2
        phi = [mpq(c) for c in self.minimal_polynomial[:-1]]
        cur = [-c for c in phi]  # x^d
        rem = []
        for _ in range(d - 1):
            rem.append(tuple(cur))
            top = cur[-1]
            cur = [mpq(0)] + cur[:-1]
            if top:
                for i in range(d):
                    cur[i] -= top * phi[i]
        rem.append(tuple(cur))
        self._rem = rem
        self.zero = Scalar(self, (_ZERO,) * d)
        self.one = Scalar(self, (_ONE,) + (_ZERO,) * (d - 1))
        # power basis images of zeta^k for 0 <= k < M
        powers = []
        cur = [_ONE] + [_ZERO] * (d - 1)
        for _ in range(conductor):
            powers.append(Scalar(self, tuple(cur)))
            nxt = [_ZERO] + cur[:-1]
            top = cur[-1]
            if top:
                for i in range(d):
                    nxt[i] -= top * phi[i]
            cur = nxt
        self._zeta_powers = powers

    def __repr__(self):
        return f"Field(conductor={self.conductor})"

    def __eq__(self, other):
        return isinstance(other, Field) and other.conductor == self.conductor

    def __hash__(self):
        return hash(("Field", self.conductor))

    def scalar(self, value):
        """Coerce an int, rational, "p/q" string or coefficient list to a Scalar."""
        if isinstance(value, Scalar):
            if value.field is not self:
                raise ValueError("scalar from a different field")
            return value
        if isinstance(value, (list, tuple)):
            coeffs = [mpq(v) for v in value]
            if len(coeffs) > self.degree:
                raise ValueError("too many power basis coefficients")
            coeffs += [_ZERO] * (self.degree - len(coeffs))
            return Scalar(self, tuple(coeffs))
        return Scalar(self, (mpq(value),) + (_ZERO,) * (self.degree - 1))

    def zeta(self, k=1):
        """The root of unity zeta_M^k."""
        return self._zeta_powers[k % self.conductor]

    def root_of_unity(self, order, k=1):
        """A primitive root of unity of the given order, raised to the k-th power.

        Requires order | M; raises OrderUnavailable otherwise.
        """
        if order < 1 or self.conductor % order != 0:
            raise OrderUnavailable(
                f"field Q(zeta_{self.conductor}) has no primitive root of order {order}"
            )
        return self.zeta((self.conductor // order) * k)

    def roots_of_unity(self, order):
        """All solutions of z^order = 1 in the field, in deterministic order."""
        n = gcd(order, self.conductor)
        step = self.conductor // n
        return [self.zeta(step * k) for k in range(n)]

    def _reduce(self, conv):
        """Reduce a length <= 2d-1 coefficient list modulo Phi_M."""
        d = self.degree
        out = list(conv[:d]) + [_ZERO] * (d - len(conv))
        for k in range(len(conv) - 1, d - 1, -1):
            c = conv[k]
            if c:
                row = self._rem[k - d]
                for i in range(d):
                    if row[i]:
                        out[i] += c * row[i]
        return tuple(out)

    def nth_root(self, value, n):
        """A deterministic n-th root of value inside the field, when one exists.

        Only values of the shape (rational) * zeta^t are handled; this covers
        all unit values arising from finite-order data.  Raises RootUnavailable
        if no root of that shape exists in the field.
        """
        value = self.scalar(value)
        if n < 1:
            raise ValueError("root order must be positive")
        if not value:
            return self.zero
        m = self.conductor
        for t in range(m):
            cand = value * self.zeta(-t)
            rat = cand.rational_part()
            if rat is None:
                continue
            root = _rational_nth_root(rat, n)
            if root is not None:
                u = _solve_mod(n, t, m)
                if u is not None:
                    return self.scalar(root) * self.zeta(u)
            if n % 2 == 0 and m % 2 == 0 and rat < 0:
                # absorb the sign into a root of unity: rat*zeta^t = |rat|*zeta^(t+M/2)
                root = _rational_nth_root(-rat, n)
                if root is not None:
                    u = _solve_mod(n, (t + m // 2) % m, m)
                    if u is not None:
                        return self.scalar(root) * self.zeta(u)
        raise RootUnavailable(
            f"no {n}-th root of {value} in Q(zeta_{self.conductor})"
        )


def _solve_mod(a, b, m):
    """Smallest non-negative u with a*u = b (mod m), or None."""
    g = gcd(a, m)
    if b % g:
        return None
    a, b, m = a // g, b // g, m // g
    return (b * pow(a, -1, m)) % m


def _rational_nth_root(rat, n):
    """Exact n-th root of a rational, or None."""
    if rat < 0 and n % 2 == 0:
        return None
    sign = -1 if rat < 0 else 1
    num, den = abs(rat.numerator), rat.denominator
    rn = _int_nth_root(num, n)
    rd = _int_nth_root(den, n)
    if rn is None or rd is None:
        return None
    return mpq(sign * rn, rd)


def _int_nth_root(x, n):
    r = round(x ** (1.0 / n))
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand**n == x:
            return cand
    return None


class Scalar:
    """An element of Q(zeta_M) in canonical reduced form."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field is other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, type(mpq(0)))):
            return self == self.field.scalar(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = self.field.scalar(other)
        return Scalar(self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self.field.scalar(other)
        return Scalar(self.field, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return self.field.scalar(other) - self

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            other = self.field.scalar(other)
        a, b = self.coeffs, other.coeffs
        d = len(a)
        conv = [_ZERO] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        return Scalar(self.field, self.field._reduce(conv))

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse; raises DivisionByZero on 0."""
        if not self:
            raise DivisionByZero("inverse of zero")
        # extended Euclid of the representative against Phi_M
        phi = [mpq(c) for c in self.field.minimal_polynomial]
        r0, r1 = phi, _poly_trim(list(self.coeffs))
        s0, s1 = [], [_ONE]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            s = list(s0)
            s += [_ZERO] * (len(q) + len(s1) - 1 - len(s))
            for i, qi in enumerate(q):
                if qi:
                    for j, sj in enumerate(s1):
                        s[i + j] -= qi * sj
            r0, r1, s0, s1 = r1, r, s1, _poly_trim(s)
        c = r1[0]
        return self.field.scalar([x / c for x in s1])

    def __truediv__(self, other):
        if not isinstance(other, Scalar):
            other = self.field.scalar(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.field.scalar(other) / self

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def rational_part(self):
        """The value as an mpq if it lies in Q, else None."""
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def to_json(self):
        """Power basis coefficients as "p/q" strings, lowest degree first."""
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                z = "z" if i == 1 else f"z^{i}"
                terms.append(z if c == 1 else f"{c}*{z}")
        return " + ".join(terms) if terms else "0"


@functools.cache
def field(conductor):
    """The interned cyclotomic field of the given conductor."""
    return Field(conductor)


def scalar_from_json(fld, data):
    """Inverse of Scalar.to_json."""
    return fld.scalar([mpq(part) for part in data])
