"""Exact Grover walk machinery on the arc space of a graph.

Every edge {u, v} contributes the two arcs (u, v) and (v, u).  With o(a)
and t(a) the origin and head of an arc, the boundary operator N has
N[v][a] = 1/sqrt(deg v) iff v = t(a), the shift S maps each arc to its
reverse, and the evolution U = S(2 N*N - I) has the rational entries

    U[a][b] = 2/deg(o(a)) * [t(b) = o(a)]  -  [b = a^(-1)].

N itself is never materialised (its entries are irrational); everything
that needs it analytically (N N* = I, the discriminant P = N S N*, the
compressed powers N U^tau N*) is computed structurally in closed form.

Scaling U by D = lcm(degrees) makes the evolution integer-valued, so long
products are exact integer arithmetic; periodicity certificates and the
perfect-state-transfer search run on that scaled form.  The spectral
classifier factors the characteristic polynomial of A over the integers
and recognises every eigenvalue mu = lambda/k that is twice-a-cosine of a
rational angle: those are the only spectra a periodic walk can have.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction
from math import gcd, isqrt

from . import intpoly
from .errors import SizeCapExceeded
from .graphs import Graph
from .intpoly import two_cos_minimal_poly
from .scalars import Surd, exact_str, sort_key

TAU_CAP = 100_000

__all__ = [
    "RationalMatrix", "SpectralLine", "SpectralReport", "PSTPair", "PSTReport",
    "time_evolution", "discriminant", "chebyshev_apply", "chebyshev_matrix",
    "vertex_transfer_matrix", "evolution_power", "classify_spectrum", "period",
    "bruteforce_period", "is_periodic_bruteforce", "find_pst", "eigen_support",
    "eigenprojector_vector", "two_cos_minimal_poly", "TAU_CAP",
]


@dataclasses.dataclass(frozen=True)
class RationalMatrix:
    """A dense matrix of Fractions with row/column labels."""

    entries: tuple
    index: tuple

    @property
    def n(self) -> int:
        return len(self.entries)

    def matmul(self, other: "RationalMatrix") -> "RationalMatrix":
        n = self.n
        bt = list(zip(*other.entries))
        rows = tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in bt)
                     for row in self.entries)
        return RationalMatrix(rows, self.index)

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(tuple(zip(*self.entries)), self.index)

    def apply(self, vec):
        return tuple(sum(a * x for a, x in zip(row, vec)) for row in self.entries)

    @property
    def is_identity(self) -> bool:
        return all(x == (1 if i == j else 0)
                   for i, row in enumerate(self.entries)
                   for j, x in enumerate(row))

    @classmethod
    def identity(cls, index) -> "RationalMatrix":
        n = len(index)
        return cls(tuple(tuple(Fraction(int(i == j)) for j in range(n))
                         for i in range(n)), tuple(index))


class _ArcSpace:
    """Arc bookkeeping plus the integer-scaled evolution D*U."""

    def __init__(self, g: Graph):
        if any(g.has_loop(v) for v in range(g.n)):
            raise ValueError("the walk needs a loopless graph")
        if g.n < 2 or not g.is_connected():
            raise ValueError("the walk needs a connected graph on >= 2 vertices")
        self.graph = g
        self.arcs = tuple(sorted((u, v) for u, w in g.edges for (u, v) in ((u, w), (w, u))))
        self.arc_index = {a: i for i, a in enumerate(self.arcs)}
        self.inv = tuple(self.arc_index[(t, o)] for o, t in self.arcs)
        self.origin = tuple(o for o, _ in self.arcs)
        heads = [[] for _ in range(g.n)]
        for i, (o, t) in enumerate(self.arcs):
            heads[t].append(i)
        self.heads_at = tuple(tuple(h) for h in heads)
        d = 1
        for deg in g.degrees:
            d = d * deg // gcd(d, deg)
        self.scale = d
        self.coef = tuple(2 * d // g.degrees[v] for v in range(g.n))
        self.size = len(self.arcs)

    def apply_scaled(self, x):
        """y = scale * U * x for an integer (or Fraction) vector x."""
        g = self.graph
        sums = [0] * g.n
        for v in range(g.n):
            s = 0
            for a in self.heads_at[v]:
                s += x[a]
            sums[v] = s
        return [self.coef[o] * sums[o] - self.scale * x[self.inv[i]]
                for i, o in enumerate(self.origin)]


def _arcspace(g: Graph) -> _ArcSpace:
    cache = getattr(g, "_arcspace", None)
    if cache is None:
        cache = _ArcSpace(g)
        g._arcspace = cache
    return cache


def time_evolution(g: Graph) -> RationalMatrix:
    """The Grover evolution U as an arc-indexed rational matrix."""
    ar = _arcspace(g)
    rows = []
    for a, (o, _) in enumerate(ar.arcs):
        two_over = Fraction(2, g.degrees[o])
        row = []
        for b, (_, tb) in enumerate(ar.arcs):
            val = two_over if tb == o else Fraction(0)
            if b == ar.inv[a]:
                val -= 1
            row.append(val)
        rows.append(tuple(row))
    return RationalMatrix(tuple(rows), ar.arcs)


def evolution_power(g: Graph, tau: int) -> RationalMatrix:
    """U^tau, exactly, via the integer-scaled column recurrence."""
    ar = _arcspace(g)
    denom = ar.scale ** tau
    cols = []
    for j in range(ar.size):
        x = [0] * ar.size
        x[j] = 1
        for _ in range(tau):
            x = ar.apply_scaled(x)
        cols.append([Fraction(v, denom) for v in x])
    return RationalMatrix(tuple(zip(*cols)), ar.arcs)


def discriminant(g: Graph) -> RationalMatrix:
    """P = N S N* = A/k for a k-regular graph."""
    if not g.is_regular:
        raise ValueError("the discriminant P = A/k needs a regular graph")
    k = g.regularity
    if not k:
        raise ValueError("the graph has no edges")
    rows = tuple(tuple(Fraction(int(g.adjacent(u, v)), k) for v in range(g.n))
                 for u in range(g.n))
    return RationalMatrix(rows, tuple(range(g.n)))


def chebyshev_apply(p: RationalMatrix, u: int, tau: int):
    """T_tau(P) e_u by the three-term recurrence, exact."""
    if tau < 0:
        raise ValueError("tau must be nonnegative")
    prev = tuple(Fraction(int(i == u)) for i in range(p.n))
    if tau == 0:
        return prev
    cur = p.apply(prev)
    for _ in range(tau - 1):
        nxt = tuple(2 * a - b for a, b in zip(p.apply(cur), prev))
        prev, cur = cur, nxt
    return tuple(cur)


def chebyshev_matrix(p: RationalMatrix, tau: int) -> RationalMatrix:
    """T_tau(P) as a matrix."""
    cols = [chebyshev_apply(p, u, tau) for u in range(p.n)]
    return RationalMatrix(tuple(zip(*cols)), p.index)


def vertex_transfer_matrix(g: Graph, tau: int) -> RationalMatrix:
    """N U^tau N* for a regular graph (equals T_tau(P), checked in tests)."""
    if not g.is_regular:
        raise ValueError("the compressed power needs a regular graph")
    ar = _arcspace(g)
    k = g.regularity
    denom = k * ar.scale ** tau
    cols = []
    for v in range(g.n):
        # X e-block: sum of scaled-U^tau columns over arcs with head v
        x = [0] * ar.size
        for b in ar.heads_at[v]:
            x[b] = 1
        for _ in range(tau):
            x = ar.apply_scaled(x)
        col = []
        for u in range(g.n):
            col.append(Fraction(sum(x[a] for a in ar.heads_at[u]), denom))
        cols.append(col)
    return RationalMatrix(tuple(zip(*cols)), tuple(range(g.n)))


# -- periodicity by brute force -------------------------------------------

def bruteforce_period(g: Graph, tau_max: int):
    """Least tau <= tau_max with U^tau = I, or None.

    Walks a single probe vector through the scaled evolution; a mismatch at
    tau certifies U^tau != I, and probe coincidences are confirmed
    column-by-column before being reported.
    """
    if tau_max > TAU_CAP:
        raise SizeCapExceeded(f"tau_max {tau_max} exceeds cap {TAU_CAP}")
    ar = _arcspace(g)
    probe = list(range(1, ar.size + 1))
    x = probe[:]
    factor = 1
    for tau in range(1, tau_max + 1):
        x = ar.apply_scaled(x)
        factor *= ar.scale
        if all(a == factor * b for a, b in zip(x, probe)):
            if _power_is_identity(ar, tau):
                return tau
    return None


def _power_is_identity(ar: _ArcSpace, tau: int) -> bool:
    target = ar.scale ** tau
    for j in range(ar.size):
        x = [0] * ar.size
        x[j] = 1
        for _ in range(tau):
            x = ar.apply_scaled(x)
        for i, v in enumerate(x):
            if v != (target if i == j else 0):
                return False
    return True


def is_periodic_bruteforce(g: Graph, tau_max: int) -> bool:
    """Does U^tau = I hold for some tau <= tau_max?  Independent oracle."""
    return bruteforce_period(g, tau_max) is not None


# -- spectral classification ----------------------------------------------

_ALLOWED_RATIONAL = {
    Fraction(1): 1,
    Fraction(-1): 2,
    Fraction(1, 2): 6,
    Fraction(-1, 2): 3,
    Fraction(0): 4,
}

_ALLOWED_QUADRATIC = {
    Surd.sqrt(3) / 2: 12,
    -Surd.sqrt(3) / 2: 12,
    Surd.sqrt(2) / 2: 8,
    -Surd.sqrt(2) / 2: 8,
    (Surd.sqrt(5) - 1) / 4: 5,
    (-Surd.sqrt(5) - 1) / 4: 5,
    (Surd.sqrt(5) + 1) / 4: 10,
    (1 - Surd.sqrt(5)) / 4: 10,
}


@dataclasses.dataclass(frozen=True)
class SpectralLine:
    """One chunk of the discriminant spectrum.

    Degree 1 and 2 lines carry the eigenvalue mu itself (Fraction or Surd)
    with its multiplicity.  Higher-degree lines stand for a full Galois
    orbit 2cos(2 pi j/n)*k/2 / k and carry the orbit's minimal polynomial in
    lambda = k mu instead; multiplicity counts repetitions of the factor.
    """

    mu: object
    multiplicity: int
    degree: int
    allowed: bool
    angle_order: int | None
    lam_poly: tuple | None = None

    def mu_str(self) -> str:
        if self.mu is not None:
            return exact_str(self.mu)
        return f"roots of {intpoly.poly_str(self.lam_poly)} (in lambda)"


@dataclasses.dataclass(frozen=True)
class SpectralReport:
    """Exact eigenvalue classification of P = A/k."""

    n: int
    k: int
    charpoly: tuple
    lines: tuple
    unfactored: tuple | None

    @property
    def periodic(self) -> bool:
        return self.unfactored is None and all(l.allowed for l in self.lines)

    @property
    def period_bound(self):
        if not self.periodic:
            return None
        out = 2
        for line in self.lines:
            out = out * line.angle_order // gcd(out, line.angle_order)
        return out

    def eigenvalues(self):
        """Distinct (mu, multiplicity) pairs; degree > 2 lines raise."""
        out = []
        for line in self.lines:
            if line.mu is None:
                raise ValueError("spectrum has an eigenvalue of degree > 2")
            out.append((line.mu, line.multiplicity))
        return out


def _is_square(n: int) -> bool:
    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n


def _scaled_cos_poly(n: int, k: int):
    """Minimal poly of k*cos(2 pi/n) in lambda, or None if not integral."""
    psi = two_cos_minimal_poly(n)
    d = len(psi) - 1
    out = []
    for i, c in enumerate(psi):
        num = c * 2 ** i * k ** (d - i)
        if num % 2 ** d:
            return None
        out.append(num // 2 ** d)
    return tuple(out)


def classify_spectrum(g: Graph) -> SpectralReport:
    """Factor char(A) exactly and classify every mu = lambda/k.

    The verdict `periodic` is complete: the walk is periodic iff every
    eigenvalue is twice a rational cosine (rational values in
    {0, +-1, +-1/2}, quadratic values among +-sqrt(3)/2, +-sqrt(2)/2,
    (+-1+-sqrt(5))/4, higher-degree Galois orbits of 2cos(2 pi j/n)), and
    the classifier extracts exactly those factors, leaving anything else in
    `unfactored`.
    """
    if not g.is_regular:
        raise ValueError("spectral classification needs a regular graph")
    if any(g.has_loop(v) for v in range(g.n)):
        raise ValueError("spectral classification needs a loopless graph")
    k = g.regularity
    if not k:
        raise ValueError("the graph has no edges")
    cp = intpoly.charpoly(g.adjacency_matrix().tolist())
    lines = []
    residual = cp
    zeros = 0
    while residual[0] == 0:
        residual = residual[1:]
        zeros += 1
    if zeros:
        lines.append(SpectralLine(Fraction(0), zeros, 1, True, 4))
    for r in range(k, -k - 1, -1):
        if r == 0:
            continue
        mult = 0
        while True:
            q = intpoly.try_divide(residual, (-r, 1))
            if q is None:
                break
            residual = q
            mult += 1
        if mult:
            mu = Fraction(r, k)
            order = _ALLOWED_RATIONAL.get(mu)
            lines.append(SpectralLine(mu, mult, 1, order is not None, order))
    if intpoly.degree(residual) >= 2:
        c0 = abs(residual[0])
        for t in range(2 * k, -2 * k - 1, -1):
            for s in range(-k * k, k * k + 1):
                if s == 0 or c0 % abs(s):
                    continue
                disc = t * t - 4 * s
                if disc <= 0 or _is_square(disc):
                    continue
                mult = 0
                while True:
                    q = intpoly.try_divide(residual, (s, -t, 1))
                    if q is None:
                        break
                    residual = q
                    mult += 1
                if mult:
                    root = Surd.sqrt(disc)
                    for lam in ((t + root) / 2, (t - root) / 2):
                        mu = lam / k
                        order = _ALLOWED_QUADRATIC.get(mu)
                        lines.append(SpectralLine(mu, mult, 2,
                                                  order is not None, order))
                    c0 = abs(residual[0]) if residual and residual[0] else 1
                    if intpoly.degree(residual) < 2:
                        break
            if intpoly.degree(residual) < 2:
                break
    d = intpoly.degree(residual)
    if d >= 3:
        n_cand = 7
        while d >= 3 and n_cand <= 4 * d * d:
            deg_n = intpoly.euler_phi(n_cand) // 2
            if 3 <= deg_n <= d:
                scaled = _scaled_cos_poly(n_cand, k)
                if scaled is not None:
                    mult = 0
                    while True:
                        q = intpoly.try_divide(residual, scaled)
                        if q is None:
                            break
                        residual = q
                        mult += 1
                    if mult:
                        lines.append(SpectralLine(None, mult, deg_n, True,
                                                  n_cand, scaled))
                        d = intpoly.degree(residual)
            n_cand += 1
    unfactored = None if intpoly.degree(residual) < 1 else residual
    if unfactored is None:
        assert residual == (1,), residual
    lines.sort(key=lambda l: sort_key(l.mu) if l.mu is not None
               else (float("inf"), str(l.lam_poly)))
    return SpectralReport(g.n, k, cp, tuple(lines), unfactored)


def period(g: Graph, bound_cap: int | None = None):
    """The exact least period of U, or None if the walk is not periodic.

    The classifier supplies the divisor bound (lcm of the root-of-unity
    orders), then the least tau is confirmed by exact powering.
    """
    report = classify_spectrum(g)
    if not report.periodic:
        return None
    bound = report.period_bound
    if bound_cap is not None and bound > bound_cap:
        raise SizeCapExceeded(f"period bound {bound} exceeds cap {bound_cap}")
    tau = bruteforce_period(g, bound)
    assert tau is not None and bound % tau == 0, (tau, bound)
    return tau


# -- perfect state transfer ------------------------------------------------

@dataclasses.dataclass(frozen=True)
class PSTPair:
    """T_tau(P) e_u = phase * e_v with phase in {+1, -1} and v != u."""

    source: int
    target: int
    time: int
    phase: int


@dataclasses.dataclass(frozen=True)
class PSTReport:
    """Outcome of a perfect state transfer search."""

    pairs: tuple
    periodic: bool
    period: int | None
    bound: int
    sources: tuple
    pruned_by_transitivity: bool = False

    @property
    def has_pst(self) -> bool:
        return bool(self.pairs)


def find_pst(g: Graph, tau_max: int | None = None, sources=None) -> PSTReport:
    """Every exact transfer T_tau(P) e_u = +-e_v within the search bound.

    Periodic walks are searched completely (tau < period).  A connected
    vertex-transitive non-periodic graph admits no transfer at all, so the
    search is pruned; otherwise tau_max is mandatory.  Entries with a
    single +-1 amplitude but any other nonzero amplitude are not transfers
    and are never reported.
    """
    if not g.is_regular or not g.is_connected():
        raise ValueError("the transfer search needs a connected regular graph")
    report = classify_spectrum(g)
    per = period(g) if report.periodic else None
    if report.periodic:
        bound = per - 1
    elif g.vertex_transitive:
        return PSTReport((), False, None, 0, (), pruned_by_transitivity=True)
    else:
        if tau_max is None:
            raise ValueError("tau_max is required when the walk is not periodic "
                             "and the graph is not known vertex-transitive")
        if tau_max > TAU_CAP:
            raise SizeCapExceeded(f"tau_max {tau_max} exceeds cap {TAU_CAP}")
        bound = tau_max
    if sources is None:
        sources = (0,) if g.vertex_transitive else tuple(range(g.n))
    else:
        sources = tuple(sources)
    k = g.regularity
    a = g.adjacency_matrix().tolist()
    hits = set()
    for u in sources:
        prev = [0] * g.n
        prev[u] = 1
        cur = [sum(a[i][j] * prev[j] for j in range(g.n)) for i in range(g.n)]
        target = k
        for tau in range(1, bound + 1):
            if tau > 1:
                nxt = [2 * sum(a[i][j] * cur[j] for j in range(g.n)) - k * k * prev[i]
                       for i in range(g.n)]
                prev, cur = cur, nxt
                target *= k
            nz = [i for i, x in enumerate(cur) if x]
            if len(nz) == 1 and nz[0] != u and abs(cur[nz[0]]) == target:
                v = nz[0]
                phase = 1 if cur[v] > 0 else -1
                hits.add(PSTPair(u, v, tau, phase))
                hits.add(PSTPair(v, u, tau, phase))  # T_tau(P) is symmetric
    pairs = tuple(sorted(hits, key=lambda h: (h.time, h.source, h.target)))
    return PSTReport(pairs, report.periodic, per, bound, sources)


# -- eigenprojections ------------------------------------------------------

def _field_nullspace(rows):
    """Basis of the nullspace of a matrix of Fractions/Surds (row vectors)."""
    m = [list(r) for r in rows]
    ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv_head = m[r][c]
        m[r] = [x / inv_head for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for i, c in enumerate(pivots):
            vec[c] = -m[i][f]
        basis.append(vec)
    return basis


def _eigenbasis(g: Graph, lam):
    """Nullspace basis of A - lam*I over Q or Q(sqrt(d))."""
    a = g.adjacency_matrix().tolist()
    rows = [[(Surd(x) if isinstance(lam, Surd) else Fraction(x)) - (lam if i == j else 0)
             for j, x in enumerate(row)] for i, row in enumerate(a)]
    return _field_nullspace(rows)


def eigen_support(g: Graph, u: int):
    """The distinct discriminant eigenvalues mu whose eigenprojection sees u.

    E_mu e_u = 0 iff the u-th coordinate of every basis vector of the
    eigenspace vanishes, so support is read off an exact eigenbasis.
    Raises if any eigenvalue has degree > 2.
    """
    report = classify_spectrum(g)
    k = g.regularity
    out = []
    total = 0
    for mu, mult in report.eigenvalues():
        lam = mu * k
        if isinstance(lam, Fraction):
            assert lam.denominator == 1
            lam = int(lam)
        basis = _eigenbasis(g, lam)
        assert len(basis) == mult, (mu, len(basis), mult)
        total += mult
        if any(vec[u] for vec in basis):
            out.append(mu)
    assert total == g.n
    return tuple(sorted(out, key=sort_key))


def eigenprojector_vector(g: Graph, mu, vec):
    """E_mu vec, exactly: solve (B^T B) y = B^T vec and return B y."""
    k = g.regularity
    lam = mu * k
    if isinstance(lam, Fraction) and lam.denominator == 1:
        lam = int(lam)
    basis = _eigenbasis(g, lam)
    if not basis:
        raise ValueError(f"{mu} is not an eigenvalue")
    m = len(basis)
    gram = [[sum(basis[i][t] * basis[j][t] for t in range(g.n)) for j in range(m)]
            for i in range(m)]
    rhs = [sum(basis[i][t] * vec[t] for t in range(g.n)) for i in range(m)]
    y = _field_solve(gram, rhs)
    return tuple(sum(basis[i][t] * y[i] for i in range(m)) for t in range(g.n))


def _field_solve(mat, rhs):
    """Solve a nonsingular system over Fractions/Surds by elimination."""
    n = len(mat)
    m = [list(row) + [rhs[i]] for i, row in enumerate(mat)]
    for c in range(n):
        piv = next(i for i in range(c, n) if m[i][c])
        m[c], m[piv] = m[piv], m[c]
        head = m[c][c]
        m[c] = [x / head for x in m[c]]
        for i in range(n):
            if i != c and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return [m[i][n] for i in range(n)]
