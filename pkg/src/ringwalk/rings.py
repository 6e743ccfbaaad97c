"""Finite commutative rings with identity, given as products of local rings.

Every ring here is a product ``R = R_1 x ... x R_s`` of local factors drawn
from three families:

* ``ResidueRing(p, k)``       -- Z_{p^k}, integers modulo a prime power;
* ``TruncatedPolynomialRing(p, k)`` -- Z_p[x]/(x^k), k >= 2; for k = 2 this
  is the nilpotent-extension ring with elements written ``c*a + d*b`` where
  a = x (a^2 = 0) and b = 1 is the unity;
* ``GaloisField(p, n)``       -- F_{p^n} with the smallest monic irreducible
  modulus (coefficients compared from the leading power down).

Products are kept in a canonical order (residue field size descending, then
factor order descending, then token), and a ring spelled ``Z12`` is
factored into ``Z3 x Z4`` on construction, so equal rings always have equal
canonical forms.  Elements are tuples of per-factor encodings; rings whose
factors are Z_{p^k} with distinct p display elements as the CRT integer.

The spec string grammar:  ``SPEC := FACTOR (" x " FACTOR)*`` with
``FACTOR := Z<n> | GF(<prime power>) | G(<prime>) | Zp[<prime>,<k>]``.
"""

from __future__ import annotations

import itertools
import re
from math import isqrt

from .errors import SizeCapExceeded

DEFAULT_ORDER_CAP = 36

__all__ = [
    "DEFAULT_ORDER_CAP", "ProductRing", "RingElement", "ConnectionSet",
    "ResidueRing", "TruncatedPolynomialRing", "GaloisField", "make_ring",
    "enumerate_rings", "units", "square_units", "quadratic_connection",
    "is_s_ring", "local_catalog",
]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, isqrt(n) + 1):
        if n % d == 0:
            return False
    return True


def _factorize(n: int) -> list[tuple[int, int]]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def _prime_power(n: int) -> tuple[int, int] | None:
    f = _factorize(n)
    return f[0] if len(f) == 1 else None


# -- polynomial helpers over Z_p (dense lists, constant first) -------------

def _pmul_mod(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def _prem_mod(a, mod, p):
    """Remainder of a modulo the monic polynomial mod, over Z_p."""
    a = list(a)
    dm = len(mod) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * mod[j]) % p
    return a[:dm]


def _monic_polys(deg, p):
    for tail in itertools.product(range(p), repeat=deg):
        yield list(tail) + [1]


def _is_irreducible(poly, p) -> bool:
    n = len(poly) - 1
    for d in range(1, n // 2 + 1):
        for g in _monic_polys(d, p):
            r = _prem_mod(poly, g, p)
            if not any(r):
                return False
    return True


def _poly_elt_str(coeffs, var: str) -> str:
    if not any(coeffs):
        return "0"
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        if i == 0:
            body = str(c)
        else:
            xp = var if i == 1 else f"{var}^{i}"
            body = xp if c == 1 else f"{c}{xp}"
        parts.append(body)
    return "+".join(parts)


# -- local factors ---------------------------------------------------------

class ResidueRing:
    """Z_{p^k}.  Elements are ints in [0, p^k)."""

    kind = "Z"

    def __init__(self, p: int, k: int):
        if not _is_prime(p) or k < 1:
            raise ValueError(f"Z_(p^k) needs a prime p and k >= 1, got {p}^{k}")
        self.p, self.k = p, k
        self.order = p ** k
        self.residue_size = p
        self.ideal_size = p ** (k - 1)
        self.token = f"Z{self.order}"
        self.signature = ("Z", p, k)

    def elements(self):
        return range(self.order)

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def add(self, x, y):
        return (x + y) % self.order

    def neg(self, x):
        return -x % self.order

    def mul(self, x, y):
        return x * y % self.order

    def is_unit(self, x) -> bool:
        return x % self.p != 0

    def elt_str(self, x) -> str:
        return str(x)

    def sort_key(self, x):
        return x

    def residue_field(self):
        return ResidueRing(self.p, 1)

    def __repr__(self):
        return self.token


class TruncatedPolynomialRing:
    """Z_p[x]/(x^k) for k >= 2.  Elements are coefficient tuples (low first).

    The k = 2 case prints elements in the a/b presentation: a = x is the
    nilpotent generator, b = 1 the unity, so the units of G(2) are b, a+b.
    """

    kind = "P"

    def __init__(self, p: int, k: int):
        if not _is_prime(p) or k < 2:
            raise ValueError(f"Z_p[x]/(x^k) needs a prime p and k >= 2, got {p},{k}")
        self.p, self.k = p, k
        self.order = p ** k
        self.residue_size = p
        self.ideal_size = p ** (k - 1)
        self.token = f"G({p})" if k == 2 else f"Zp[{p},{k}]"
        self.signature = ("P", p, k)

    def elements(self):
        p, k = self.p, self.k
        for val in range(self.order):
            yield tuple((val // p ** i) % p for i in range(k))

    @property
    def zero(self):
        return (0,) * self.k

    @property
    def one(self):
        return (1,) + (0,) * (self.k - 1)

    def add(self, x, y):
        return tuple((a + b) % self.p for a, b in zip(x, y))

    def neg(self, x):
        return tuple(-a % self.p for a in x)

    def mul(self, x, y):
        out = [0] * self.k
        for i, a in enumerate(x):
            if a:
                for j, b in enumerate(y):
                    if i + j >= self.k:
                        break
                    out[i + j] = (out[i + j] + a * b) % self.p
        return tuple(out)

    def is_unit(self, x) -> bool:
        return x[0] != 0

    def elt_str(self, x) -> str:
        if self.k == 2:
            b, a = x
            if not a and not b:
                return "0"
            parts = []
            if a:
                parts.append("a" if a == 1 else f"{a}a")
            if b:
                parts.append("b" if b == 1 else f"{b}b")
            return "+".join(parts)
        return _poly_elt_str(x, "x")

    def sort_key(self, x):
        return sum(c * self.p ** i for i, c in enumerate(x))

    def residue_field(self):
        return ResidueRing(self.p, 1)

    def __repr__(self):
        return self.token


class GaloisField:
    """F_{p^n}, n >= 2.  Elements are coefficient tuples in t (low first)."""

    kind = "GF"

    def __init__(self, p: int, n: int, modulus=None):
        if not _is_prime(p) or n < 2:
            raise ValueError(f"GF needs a prime p and n >= 2, got {p}^{n}")
        self.p, self.n = p, n
        self.order = p ** n
        self.residue_size = self.order
        self.ideal_size = 1
        if modulus is None:
            modulus = self._smallest_irreducible(p, n)
        else:
            modulus = [c % p for c in modulus]
            if len(modulus) != n + 1 or modulus[-1] != 1:
                raise ValueError("modulus must be monic of degree n")
            if not _is_irreducible(modulus, p):
                raise ValueError(f"modulus {modulus} is reducible over Z_{p}")
        self.modulus = tuple(modulus)
        self.token = f"GF({self.order})"
        self.signature = ("GF", p, n, self.modulus)

    @staticmethod
    def _smallest_irreducible(p, n):
        for val in range(p ** n):
            cand = [(val // p ** i) % p for i in range(n)] + [1]
            if _is_irreducible(cand, p):
                return cand
        raise AssertionError("no irreducible polynomial found")

    def elements(self):
        p, n = self.p, self.n
        for val in range(self.order):
            yield tuple((val // p ** i) % p for i in range(n))

    @property
    def zero(self):
        return (0,) * self.n

    @property
    def one(self):
        return (1,) + (0,) * (self.n - 1)

    def add(self, x, y):
        return tuple((a + b) % self.p for a, b in zip(x, y))

    def neg(self, x):
        return tuple(-a % self.p for a in x)

    def mul(self, x, y):
        prod = _pmul_mod(list(x), list(y), self.p)
        return tuple(_prem_mod(prod, self.modulus, self.p))

    def is_unit(self, x) -> bool:
        return any(x)

    def elt_str(self, x) -> str:
        return _poly_elt_str(x, "t")

    def sort_key(self, x):
        return sum(c * self.p ** i for i, c in enumerate(x))

    def residue_field(self):
        return self

    def __repr__(self):
        return self.token


def _factor_sort_key(f):
    return (-f.residue_size, -f.order, f.token)


# -- product rings ---------------------------------------------------------

class RingElement:
    """An element of a ProductRing: a tuple of per-factor encodings."""

    __slots__ = ("ring", "comps")

    def __init__(self, ring: "ProductRing", comps: tuple):
        self.ring = ring
        self.comps = comps

    def _check(self, other):
        if not isinstance(other, RingElement) or other.ring.signature != self.ring.signature:
            raise ValueError("elements belong to different rings")

    def __add__(self, other):
        self._check(other)
        return RingElement(self.ring, tuple(
            f.add(a, b) for f, a, b in zip(self.ring.factors, self.comps, other.comps)))

    def __neg__(self):
        return RingElement(self.ring, tuple(
            f.neg(a) for f, a in zip(self.ring.factors, self.comps)))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        return RingElement(self.ring, tuple(
            f.mul(a, b) for f, a, b in zip(self.ring.factors, self.comps, other.comps)))

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not defined")
        out = self.ring.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def is_unit(self) -> bool:
        return all(f.is_unit(a) for f, a in zip(self.ring.factors, self.comps))

    def sort_key(self):
        if self.ring.crt_display:
            return self.ring.to_integer(self)
        return tuple(f.sort_key(a) for f, a in zip(self.ring.factors, self.comps))

    def __eq__(self, other):
        return (isinstance(other, RingElement)
                and self.ring.signature == other.ring.signature
                and self.comps == other.comps)

    def __hash__(self):
        return hash((self.ring.signature, self.comps))

    def __lt__(self, other):
        self._check(other)
        return self.sort_key() < other.sort_key()

    def __str__(self):
        if self.ring.crt_display:
            return str(self.ring.to_integer(self))
        parts = [f.elt_str(a) for f, a in zip(self.ring.factors, self.comps)]
        if len(parts) == 1:
            return parts[0]
        return "(" + ", ".join(parts) + ")"

    def __repr__(self):
        return f"<{self} in {self.ring.token}>"


class ProductRing:
    """A finite commutative ring with identity in canonical product form."""

    def __init__(self, factors):
        factors = sorted(factors, key=_factor_sort_key)
        if not factors:
            raise ValueError("a ring needs at least one local factor")
        self.factors = tuple(factors)
        self.signature = tuple(f.signature for f in self.factors)
        self.token = " x ".join(f.token for f in self.factors)
        self.order = 1
        for f in self.factors:
            self.order *= f.order
        self.residues = tuple(f.residue_size for f in self.factors)
        self.ideal_sizes = tuple(f.ideal_size for f in self.factors)
        # CRT integer labels need pairwise coprime Z_{p^k} factors
        primes = [f.p for f in self.factors]
        self.crt_display = (all(f.kind == "Z" for f in self.factors)
                            and len(set(primes)) == len(primes))
        self._elements = None
        self._units = None

    # -- structure ---------------------------------------------------------

    @property
    def is_local(self) -> bool:
        return len(self.factors) == 1

    def unit_count(self) -> int:
        out = 1
        for f in self.factors:
            out *= f.order - f.ideal_size
        return out

    def residue_ring(self) -> "ProductRing":
        return ProductRing([f.residue_field() for f in self.factors])

    # -- elements ----------------------------------------------------------

    def element(self, comps) -> RingElement:
        return RingElement(self, tuple(comps))

    def zero(self) -> RingElement:
        return self.element(f.zero for f in self.factors)

    def one(self) -> RingElement:
        return self.element(f.one for f in self.factors)

    def elements(self) -> tuple:
        if self._elements is None:
            elts = [self.element(c) for c in
                    itertools.product(*(f.elements() for f in self.factors))]
            elts.sort(key=RingElement.sort_key)
            self._elements = tuple(elts)
        return self._elements

    def units_list(self) -> tuple:
        if self._units is None:
            self._units = tuple(e for e in self.elements() if e.is_unit())
        return self._units

    def to_integer(self, elt: RingElement) -> int:
        """CRT integer label; defined when factors are coprime Z_{p^k}."""
        if not self.crt_display:
            raise ValueError("no CRT integer labels for this ring")
        x, mod = 0, 1
        for f, c in zip(self.factors, elt.comps):
            # solve x' = x (mod mod), x' = c (mod f.order)
            t = (c - x) * pow(mod, -1, f.order) % f.order
            x += mod * t
            mod *= f.order
        return x

    def from_integer(self, n: int) -> RingElement:
        if not self.crt_display:
            raise ValueError("no CRT integer labels for this ring")
        return self.element(n % f.order for f in self.factors)

    def __eq__(self, other):
        return isinstance(other, ProductRing) and self.signature == other.signature

    def __hash__(self):
        return hash(self.signature)

    def __repr__(self):
        return f"ProductRing({self.token})"


# -- connection sets -------------------------------------------------------

class ConnectionSet:
    """A symmetric, zero-free subset of a ring, used to build Cayley graphs."""

    def __init__(self, ring: ProductRing, label: str, elements):
        elements = sorted(elements, key=RingElement.sort_key)
        self.ring = ring
        self.label = label
        self.elements = tuple(elements)
        self._comps = frozenset(e.comps for e in elements)
        zero = ring.zero()
        if zero.comps in self._comps:
            raise ValueError("connection set contains zero")
        for e in self.elements:
            if (-e).comps not in self._comps:
                raise ValueError(f"connection set is not symmetric at {e}")

    def __contains__(self, elt: RingElement) -> bool:
        return elt.comps in self._comps

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"ConnectionSet({self.ring.token}, {self.label}, size {len(self)})"


def units(ring: ProductRing) -> ConnectionSet:
    """The unit group R^x as a connection set (units come in +/- pairs)."""
    return ConnectionSet(ring, "units", ring.units_list())


def square_units(ring: ProductRing) -> tuple:
    """Q_R: the squares of the units, sorted."""
    out = {u * u for u in ring.units_list()}
    return tuple(sorted(out, key=RingElement.sort_key))


def quadratic_connection(ring: ProductRing) -> ConnectionSet:
    """T_R = Q_R union -Q_R, the symmetrized square-units connection set."""
    q = square_units(ring)
    sym = {e for e in q} | {-e for e in q}
    return ConnectionSet(ring, "quadratic-units", sym)


def is_s_ring(ring: ProductRing) -> bool:
    """True iff at most one local factor has residue field of size 2.

    Equivalent to the unitary Cayley graph being connected (cross-checked
    in the test suite).
    """
    return sum(1 for q in ring.residues if q == 2) <= 1


# -- construction ----------------------------------------------------------

_FACTOR_RE = re.compile(
    r"^(?:Z(?P<zn>\d+)|GF\((?P<gf>\d+)\)|G\((?P<gp>\d+)\)|Zp\[(?P<pp>\d+),(?P<pk>\d+)\])$")


def _parse_factor(text: str) -> list:
    m = _FACTOR_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse ring factor {text!r}")
    if m.group("zn") is not None:
        n = int(m.group("zn"))
        if n < 2:
            raise ValueError(f"Z{n} is not a ring with identity of order >= 2")
        return [ResidueRing(p, k) for p, k in _factorize(n)]
    if m.group("gf") is not None:
        q = int(m.group("gf"))
        pw = _prime_power(q)
        if pw is None:
            raise ValueError(f"GF({q}) needs a prime power")
        p, n = pw
        return [ResidueRing(p, 1) if n == 1 else GaloisField(p, n)]
    if m.group("gp") is not None:
        p = int(m.group("gp"))
        if not _is_prime(p):
            raise ValueError(f"G({p}) needs a prime")
        return [TruncatedPolynomialRing(p, 2)]
    p, k = int(m.group("pp")), int(m.group("pk"))
    if not _is_prime(p):
        raise ValueError(f"Zp[{p},{k}] needs a prime")
    if k < 1:
        raise ValueError("Zp[p,k] needs k >= 1")
    return [ResidueRing(p, 1) if k == 1 else TruncatedPolynomialRing(p, k)]


def make_ring(spec: str) -> ProductRing:
    """Build a ring from its spec string, e.g. "Z12", "GF(4) x Z3", "G(2)"."""
    factors = []
    for part in spec.split("x"):
        part = part.strip()
        if not part:
            raise ValueError(f"empty factor in ring spec {spec!r}")
        factors.extend(_parse_factor(part))
    return ProductRing(factors)


def local_catalog(order: int) -> list:
    """The catalog of local rings of a given prime-power order."""
    pw = _prime_power(order)
    if pw is None:
        return []
    p, k = pw
    if k == 1:
        return [ResidueRing(p, 1)]
    return [ResidueRing(p, k), TruncatedPolynomialRing(p, k), GaloisField(p, k)]


def enumerate_rings(max_order: int, cap: int | None = None) -> list[ProductRing]:
    """All rings in the catalog with order in [2, max_order], sorted.

    Rings are products of catalog local factors; CRT-equal spellings appear
    once.  Sorted by (order, canonical token).
    """
    if cap is None:
        cap = DEFAULT_ORDER_CAP
    if max_order > cap:
        raise SizeCapExceeded(f"max_order {max_order} exceeds cap {cap}")
    pools = []
    for n in range(2, max_order + 1):
        for f in local_catalog(n):
            pools.append(f)
    pools.sort(key=lambda f: (f.order, f.token))
    found = {}

    def extend(start: int, chosen: list, order: int):
        if chosen:
            ring = ProductRing(list(chosen))
            found.setdefault(ring.signature, ring)
        for i in range(start, len(pools)):
            f = pools[i]
            if order * f.order > max_order:
                continue
            chosen.append(f)
            extend(i, chosen, order * f.order)
            chosen.pop()

    extend(0, [], 1)
    return sorted(found.values(), key=lambda r: (r.order, r.token))
