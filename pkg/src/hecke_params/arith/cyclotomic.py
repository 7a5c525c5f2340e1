"""
Exact arithmetic in the cyclotomic field Q(zeta_N).

An element is stored in the power basis 1, zeta, ..., zeta^(phi(N)-1), reduced
modulo the N-th cyclotomic polynomial, with `fractions.Fraction` coefficients.

>>> z = CycScalar.zeta(4)
>>> z * z
CycScalar(-1)
>>> (1 + CycScalar.zeta(3)).inverse() == -CycScalar.zeta(3)
True
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational

__all__ = ["cyclotomic_poly", "totient", "CycScalar", "as_scalar"]


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _int_poly_divide(num: list[int], den: tuple[int, ...]) -> list[int]:
    # exact division of integer polynomials, den monic; constant term first
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        out[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] -= c * d
    assert not any(num), "inexact cyclotomic division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """
    The n-th cyclotomic polynomial as integer coefficients, constant term first.

    >>> cyclotomic_poly(1)
    (-1, 1)
    >>> cyclotomic_poly(6)
    (1, -1, 1)
    """
    if n < 1:
        raise ValueError(f"cyclotomic_poly needs n >= 1, got {n}")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        poly = _int_poly_divide(poly, cyclotomic_poly(d))
    return tuple(poly)


def totient(n: int) -> int:
    return len(cyclotomic_poly(n)) - 1


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[Fraction, ...], ...]:
    # zeta_n^k in the power basis, for k = 0..n-1
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    table = []
    vec = [Fraction(0)] * deg
    vec[0] = Fraction(1)
    for _ in range(n):
        table.append(tuple(vec))
        # multiply by x, then reduce x^deg = -sum phi_i x^i
        top = vec[-1]
        vec = [Fraction(0)] + vec[:-1]
        if top:
            vec = [c - top * p for c, p in zip(vec, phi)]
    return tuple(table)


@lru_cache(maxsize=None)
def _normalized_traces(n: int) -> tuple[Fraction, ...]:
    # Tr(zeta_n^k) / phi(n), the Ramanujan sum normalized; embedding-invariant
    out = []
    for k in range(totient(n)):
        m = n // gcd(k, n)
        out.append(Fraction(_mobius(m), totient(m)))
    return tuple(out)


def _mobius(n: int) -> int:
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


class CycScalar:
    """An element of Q(zeta_N); immutable."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, coeffs=0, conductor: int = 1):
        if isinstance(coeffs, (int, Rational)):
            coeffs = (Fraction(coeffs),) + (Fraction(0),) * (totient(conductor) - 1)
        else:
            coeffs = tuple(Fraction(c) for c in coeffs)
            if len(coeffs) != totient(conductor):
                raise ValueError(
                    f"Q(zeta_{conductor}) needs {totient(conductor)} coefficients, got {len(coeffs)}"
                )
        self.conductor = conductor
        self.coeffs = coeffs

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> CycScalar:
        """zeta_n^k."""
        return _zeta_power(n, k % n)

    # -- structure --------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def embed(self, m: int) -> CycScalar:
        """Image in Q(zeta_m) for a multiple m of the conductor."""
        n = self.conductor
        if m == n:
            return self
        if m % n:
            raise ValueError(f"cannot embed Q(zeta_{n}) into Q(zeta_{m})")
        table = _power_table(m)
        step = m // n
        out = [Fraction(0)] * totient(m)
        for k, c in enumerate(self.coeffs):
            if c:
                for i, z in enumerate(table[(k * step) % m]):
                    if z:
                        out[i] += c * z
        return CycScalar(out, m)

    def _common(self, other) -> tuple[CycScalar, CycScalar]:
        if not isinstance(other, CycScalar):
            other = CycScalar(other, self.conductor)
        if other.conductor == self.conductor:
            return self, other
        if self.is_rational():
            return CycScalar(self.coeffs[0], other.conductor), other
        if other.is_rational():
            return self, CycScalar(other.coeffs[0], self.conductor)
        m = self.conductor * other.conductor // gcd(self.conductor, other.conductor)
        return self.embed(m), other.embed(m)

    # -- field operations -------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, (CycScalar, int, Rational)):
            return NotImplemented
        a, b = self._common(other)
        return CycScalar._raw(tuple(x + y for x, y in zip(a.coeffs, b.coeffs)), a.conductor)

    __radd__ = __add__

    def __neg__(self):
        return CycScalar._raw(tuple(-x for x in self.coeffs), self.conductor)

    def __sub__(self, other):
        if not isinstance(other, (CycScalar, int, Rational)):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            c = Fraction(other)
            return CycScalar._raw(tuple(x * c for x in self.coeffs), self.conductor)
        if not isinstance(other, CycScalar):
            return NotImplemented
        a, b = self._common(other)
        n = a.conductor
        if len(a.coeffs) == 1:
            return CycScalar._raw((a.coeffs[0] * b.coeffs[0],), n)
        table = _power_table(n)
        out = [Fraction(0)] * len(a.coeffs)
        for i, x in enumerate(a.coeffs):
            if not x:
                continue
            for j, y in enumerate(b.coeffs):
                if not y:
                    continue
                xy = x * y
                for k, z in enumerate(table[(i + j) % n]):
                    if z:
                        out[k] += xy * z
        return CycScalar._raw(tuple(out), n)

    __rmul__ = __mul__

    def inverse(self) -> CycScalar:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if len(self.coeffs) == 1:
            return CycScalar._raw((1 / self.coeffs[0],), self.conductor)
        # solve (multiplication-by-self matrix) x = e_0 by Gauss-Jordan
        n = self.conductor
        deg = len(self.coeffs)
        cols = [(self * CycScalar.zeta(n, k)).coeffs for k in range(deg)]
        rows = [[cols[j][i] for j in range(deg)] + [Fraction(int(i == 0))] for i in range(deg)]
        for c in range(deg):
            piv = next(r for r in range(c, deg) if rows[r][c])
            rows[c], rows[piv] = rows[piv], rows[c]
            p = rows[c][c]
            rows[c] = [x / p for x in rows[c]]
            for r in range(deg):
                if r != c and rows[r][c]:
                    f = rows[r][c]
                    rows[r] = [x - f * y for x, y in zip(rows[r], rows[c])]
        return CycScalar._raw(tuple(row[-1] for row in rows), n)

    def __truediv__(self, other):
        if not isinstance(other, CycScalar):
            other = CycScalar(other, self.conductor)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return CycScalar(other, self.conductor) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CycScalar(1, self.conductor)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, (CycScalar, int, Rational)):
            return NotImplemented
        a, b = self._common(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        tr = sum(c * t for c, t in zip(self.coeffs, _normalized_traces(self.conductor)))
        return hash(("cyc", tr))

    def __bool__(self):
        return not self.is_zero()

    def conjugate_power(self, k: int) -> CycScalar:
        """Galois action zeta -> zeta^k (k coprime to the conductor)."""
        n = self.conductor
        out = CycScalar(0, n)
        for i, c in enumerate(self.coeffs):
            if c:
                out = out + CycScalar.zeta(n, i * k) * c
        return out

    def __repr__(self):
        return f"CycScalar({self})"

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                z = "zeta" if k == 1 else f"zeta^{k}"
                parts.append(z if c == 1 else f"-{z}" if c == -1 else f"{c}*{z}")
        if not parts:
            return "0"
        if len(parts) == 1:
            return parts[0]
        return "(" + " + ".join(parts).replace("+ -", "- ") + ")"

    @staticmethod
    def _raw(coeffs, conductor):
        obj = object.__new__(CycScalar)
        obj.conductor = conductor
        obj.coeffs = coeffs
        return obj


@lru_cache(maxsize=None)
def _zeta_power(n: int, k: int) -> CycScalar:
    return CycScalar._raw(_power_table(n)[k], n)


def as_scalar(x, conductor: int = 1) -> CycScalar:
    """Coerce an int, Fraction or CycScalar to a CycScalar."""
    if isinstance(x, CycScalar):
        return x
    if isinstance(x, (int, Rational)):
        return CycScalar(x, conductor)
    raise TypeError(f"cannot interpret {x!r} as a cyclotomic scalar")
