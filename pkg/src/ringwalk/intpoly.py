"""Dense integer polynomials and exact characteristic polynomials.

Polynomials are tuples of Python ints, constant term first.  Everything here
is exact integer arithmetic; the characteristic polynomial is computed
modulo a batch of word-size primes (Hessenberg reduction, then the standard
minor recurrence) and recombined by CRT under a rigorous coefficient bound,
so no floating point and no rational blow-up.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

IntPoly = tuple  # tuple of ints, constant first


# -- basic ops -------------------------------------------------------------

def trim(p) -> IntPoly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def degree(p) -> int:
    # degree of the zero polynomial is -1
    return len(trim(p)) - 1


def add(p, q) -> IntPoly:
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0)
                 for i in range(n)])


def neg(p) -> IntPoly:
    return tuple(-c for c in p)


def sub(p, q) -> IntPoly:
    return add(p, neg(q))


def mul(p, q) -> IntPoly:
    p, q = trim(p), trim(q)
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return tuple(out)


def scale(p, c: int) -> IntPoly:
    return trim([c * a for a in p])


def evaluate(p, x):
    out = 0
    for c in reversed(p):
        out = out * x + c
    return out


def divmod_monic(p, g) -> tuple[IntPoly, IntPoly]:
    """Divide by a monic g; quotient and remainder are integer polynomials."""
    g = trim(g)
    if not g or g[-1] != 1:
        raise ValueError("divisor must be monic")
    r = list(p)
    dq = len(r) - len(g)
    if dq < 0:
        return (), trim(r)
    q = [0] * (dq + 1)
    for i in range(dq, -1, -1):
        c = r[i + len(g) - 1]
        if c:
            q[i] = c
            for j, b in enumerate(g):
                r[i + j] -= c * b
    return trim(q), trim(r)


def try_divide(p, g):
    """Quotient p/g if g (monic) divides p exactly, else None."""
    q, r = divmod_monic(p, g)
    return q if not r else None


def poly_str(p, var: str = "x") -> str:
    p = trim(p)
    if not p:
        return "0"
    parts = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if not c:
            continue
        sign = "-" if c < 0 else ("+" if parts else "")
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            xp = var if i == 1 else f"{var}^{i}"
            body = xp if mag == 1 else f"{mag}*{xp}"
        parts.append(sign + body)
    return "".join(parts)


# -- cyclotomic and cosine minimal polynomials -----------------------------

@lru_cache(maxsize=None)
def cyclotomic(n: int) -> IntPoly:
    """The n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("n must be positive")
    p = tuple([-1] + [0] * (n - 1) + [1])  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            q, r = divmod_monic(p, cyclotomic(d))
            assert not r
            p = q
    return p


@lru_cache(maxsize=None)
def two_cos_minimal_poly(n: int) -> IntPoly:
    """Minimal polynomial of 2*cos(2*pi/n) over Q (monic, integer).

    Degree phi(n)/2 for n >= 3; the n = 1, 2 cases are x - 2 and x + 2.
    Derived from the palindromic cyclotomic polynomial by rewriting in
    y = z + 1/z via the Dickson-style basis p_k(y) = z^k + z^(-k).
    """
    if n == 1:
        return (-2, 1)
    if n == 2:
        return (2, 1)
    c = cyclotomic(n)
    d = len(c) - 1
    assert d % 2 == 0 and c == tuple(reversed(c)), "cyclotomic not palindromic"
    half = d // 2
    # z^-half * Phi_n(z) = a_half + sum_{k>=1} a_{half+k} (z^k + z^-k)
    pk_prev, pk = (2,), (0, 1)
    out = add(scale((1,), c[half]), scale(pk, c[half + 1]) if half >= 1 else ())
    for k in range(2, half + 1):
        pk_prev, pk = pk, sub(mul((0, 1), pk), pk_prev)
        out = add(out, scale(pk, c[half + k]))
    return out


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    out = n
    d = 2
    m = n
    while d * d <= m:
        if m % d == 0:
            out -= out // d
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out -= out // m
    return out


# -- characteristic polynomial ---------------------------------------------

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    # deterministic Miller-Rabin for n < 3.3e24
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


_prime_pool: list[int] = []


def _primes_with_product_above(bound: int) -> list[int]:
    out = []
    prod = 1
    i = 0
    while prod <= bound:
        if i == len(_prime_pool):
            candidate = (_prime_pool[-1] - 2) if _prime_pool else ((1 << 62) - 1)
            while not _is_prime(candidate):
                candidate -= 2
            _prime_pool.append(candidate)
        p = _prime_pool[i]
        out.append(p)
        prod *= p
        i += 1
    return out


def _charpoly_mod(mat, p: int) -> list[int]:
    """det(xI - M) mod p, coefficients constant-first."""
    n = len(mat)
    a = [[x % p for x in row] for row in mat]
    # similarity reduction to upper Hessenberg form
    for j in range(n - 2):
        piv = None
        for i in range(j + 1, n):
            if a[i][j]:
                piv = i
                break
        if piv is None:
            continue
        if piv != j + 1:
            a[j + 1], a[piv] = a[piv], a[j + 1]
            for row in a:
                row[j + 1], row[piv] = row[piv], row[j + 1]
        inv = pow(a[j + 1][j], -1, p)
        for i in range(j + 2, n):
            f = a[i][j] * inv % p
            if not f:
                continue
            ai, aj = a[i], a[j + 1]
            for cidx in range(j, n):
                ai[cidx] = (ai[cidx] - f * aj[cidx]) % p
            for row in a:
                row[j + 1] = (row[j + 1] + f * row[i]) % p
    # charpoly of a Hessenberg matrix by expanding leading principal minors:
    # D_m = (x - a[m-1][m-1]) D_{m-1}
    #       - sum_i a[i-1][m-1] (prod_{k=i..m-1} a[k][k-1]) D_{i-1}
    minors = [[1]]
    for m in range(1, n + 1):
        prev = minors[m - 1]
        cur = [0] + prev  # x * D_{m-1}
        d = a[m - 1][m - 1]
        for idx in range(len(prev)):
            cur[idx] = (cur[idx] - d * prev[idx]) % p
        prodsub = 1
        for i in range(m - 1, 0, -1):
            prodsub = prodsub * a[i][i - 1] % p
            if not prodsub:
                break
            coeff = a[i - 1][m - 1] * prodsub % p
            if coeff:
                before = minors[i - 1]
                for idx in range(len(before)):
                    cur[idx] = (cur[idx] - coeff * before[idx]) % p
        minors.append(cur)
    return [c % p for c in minors[n]]


def charpoly(mat) -> IntPoly:
    """Characteristic polynomial det(xI - M) of an integer matrix, exact."""
    n = len(mat)
    if n == 0:
        return (1,)
    rows = [[int(x) for x in row] for row in mat]
    if any(len(row) != n for row in rows):
        raise ValueError("matrix must be square")
    radius = max(sum(abs(x) for x in row) for row in rows)
    # |c_i| <= C(n, i) * radius^(n-i) <= (1+radius)^n  (Gershgorin + Vieta)
    bound = 2 * (1 + radius) ** n
    primes = _primes_with_product_above(bound)
    residues = [_charpoly_mod(rows, p) for p in primes]
    # CRT fold, then lift to the symmetric range
    mod = 1
    combined = [0] * (n + 1)
    for p, res in zip(primes, residues):
        if mod == 1:
            combined = list(res)
            mod = p
            continue
        inv = pow(mod % p, -1, p)
        for i in range(n + 1):
            t = (res[i] - combined[i]) % p * inv % p
            combined[i] = combined[i] + mod * t
        mod *= p
    half = mod // 2
    return tuple(c - mod if c > half else c for c in combined)


def charpoly_reference(mat) -> IntPoly:
    """Faddeev-LeVerrier charpoly; slower, kept as an independent route."""
    n = len(mat)
    rows = [[int(x) for x in row] for row in mat]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    work = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        if k > 1:
            # work = rows @ (work + c * I)
            for i in range(n):
                work[i][i] += c
            work = [[sum(rows[i][t] * work[t][j] for t in range(n))
                     for j in range(n)] for i in range(n)]
        else:
            work = [row[:] for row in rows]
        tr = sum(work[i][i] for i in range(n))
        assert tr % k == 0
        c = -tr // k
        coeffs[n - k] = c
    return tuple(coeffs)
