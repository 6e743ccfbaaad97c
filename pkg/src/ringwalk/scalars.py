"""Exact arithmetic in real multiquadratic extensions of the rationals.

A :class:`Surd` is a finite sum ``q0 + q1*sqrt(d1) + q2*sqrt(d2) + ...``
with rational coefficients and pairwise distinct squarefree radicands
``di > 1``.  Radicands are stored as frozensets of their prime factors, so
``sqrt(12)`` normalises to ``2*sqrt(3)`` and products reduce by cancelling
repeated primes (symmetric difference of the prime sets).  Every value has a
unique normal form: zero coefficients are dropped, and a Surd with no radical
terms is interchangeable with a plain :class:`~fractions.Fraction`.

This is all the field arithmetic the walk machinery needs: eigenvalues of
the graphs under study are rational or quadratic, and the closed-form
spectra of product rings live in multiquadratic fields.  Division is exact
(iterated conjugation), so Gaussian elimination over these values works.
"""

from __future__ import annotations

from fractions import Fraction
from math import sqrt
from typing import Union

Rational = Union[int, Fraction]

_RAT = frozenset()  # key of the rational term


def _factor_squarefree(n: int) -> tuple[int, frozenset[int]]:
    """Write n > 0 as f*f*d with d squarefree; return (f, primes of d)."""
    if n <= 0:
        raise ValueError("radicand must be positive")
    f = 1
    primes = set()
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            f *= d ** (e // 2)
            if e % 2:
                primes.add(d)
        d += 1 if d == 2 else 2
    if n > 1:
        primes.add(n)
    return f, frozenset(primes)


def _prod(items) -> int:
    out = 1
    for x in items:
        out *= x
    return out


class Surd:
    """Immutable exact value in a real multiquadratic field."""

    __slots__ = ("_terms",)

    def __init__(self, value: Rational = 0, _terms: dict | None = None):
        if _terms is not None:
            self._terms = {k: v for k, v in _terms.items() if v}
        else:
            self._terms = {}
            q = Fraction(value)
            if q:
                self._terms[_RAT] = q

    @classmethod
    def sqrt(cls, n: int) -> "Surd":
        """Exact square root of a positive integer."""
        f, primes = _factor_squarefree(n)
        if not primes:
            return cls(f)
        return cls(_terms={primes: Fraction(f)})

    # -- inspection --------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return all(k == _RAT for k in self._terms)

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        return self._terms.get(_RAT, Fraction(0))

    @property
    def degree_bound(self) -> int:
        """2**(number of independent radicals touched); 1 for rationals."""
        primes = set()
        for k in self._terms:
            primes |= k
        return 2 ** len(primes)

    def discriminant(self) -> int | None:
        """For a value a + b*sqrt(d) (b != 0), the squarefree d; else None."""
        rads = [k for k in self._terms if k != _RAT]
        if len(rads) != 1:
            return None
        return _prod(sorted(rads[0]))

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Surd | None":
        if isinstance(other, Surd):
            return other
        if isinstance(other, (int, Fraction)):
            return Surd(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = dict(self._terms)
        for k, v in o._terms.items():
            terms[k] = terms.get(k, Fraction(0)) + v
        return Surd(_terms=terms)

    __radd__ = __add__

    def __neg__(self):
        return Surd(_terms={k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms: dict = {}
        for ka, va in self._terms.items():
            for kb, vb in o._terms.items():
                key = ka ^ kb
                coeff = va * vb * _prod(ka & kb)
                terms[key] = terms.get(key, Fraction(0)) + coeff
        return Surd(_terms=terms)

    __rmul__ = __mul__

    def _conjugate(self, p: int) -> "Surd":
        # flip the sign of sqrt(p)
        return Surd(_terms={k: (-v if p in k else v) for k, v in self._terms.items()})

    def inverse(self) -> "Surd":
        if not self._terms:
            raise ZeroDivisionError("division by zero Surd")
        # Multiply by conjugates until the denominator is rational.
        num = Surd(1)
        den = self
        while not den.is_rational:
            p = min(min(k) for k in den._terms if k != _RAT)
            conj = den._conjugate(p)
            num = num * conj
            den = den * conj
            # den now has no sqrt(p); the loop strictly shrinks the radical set
        return num * Surd(1 / den.as_fraction())

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_rational:
            q = o.as_fraction()
            return Surd(_terms={k: v / q for k, v in self._terms.items()})
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    # -- comparison / hashing ---------------------------------------------

    def _key(self):
        return tuple(sorted((tuple(sorted(k)), v) for k, v in self._terms.items()))

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self):
        return hash(self._key())

    def __bool__(self):
        return bool(self._terms)

    def __float__(self):
        return float(sum(v * sqrt(_prod(k)) for k, v in self._terms.items()))

    # -- formatting --------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        # common denominator, terms ordered: rational part, then radicands
        keys = sorted(self._terms, key=lambda k: _prod(sorted(k)))
        den = 1
        for v in self._terms.values():
            den = den * v.denominator // _gcd(den, v.denominator)
        parts = []
        for k in keys:
            c = self._terms[k] * den
            assert c.denominator == 1
            c = c.numerator
            if k == _RAT:
                parts.append((c, None))
            else:
                parts.append((c, _prod(sorted(k))))
        out = ""
        for i, (c, rad) in enumerate(parts):
            sign = "-" if c < 0 else ("+" if i else "")
            mag = abs(c)
            if rad is None:
                body = str(mag)
            elif mag == 1:
                body = f"sqrt({rad})"
            else:
                body = f"{mag}*sqrt({rad})"
            out += sign + body
        if den == 1:
            return out
        if len(parts) > 1:
            return f"({out})/{den}"
        return f"{out}/{den}"

    def __repr__(self):
        return f"Surd({self})"


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def exact_str(value) -> str:
    """Canonical string for a Fraction, int, or Surd."""
    if isinstance(value, Surd):
        return str(value)
    return str(Fraction(value))


def sort_key(value):
    """Deterministic ordering key (descending numeric) for exact values."""
    return (-float(as_surd(value)), exact_str(value))


def as_surd(value) -> Surd:
    return value if isinstance(value, Surd) else Surd(value)
