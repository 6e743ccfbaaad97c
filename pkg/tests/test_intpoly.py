"""Integer polynomial helpers and characteristic polynomials."""

import random

import sympy
from hypothesis import given, settings, strategies as st

from ringwalk import intpoly


def test_arithmetic_basics():
    p = (1, 2)        # 1 + 2x
    q = (-1, 0, 1)    # x^2 - 1
    assert intpoly.add(p, q) == (0, 2, 1)
    assert intpoly.sub(q, q) == ()
    assert intpoly.mul(p, q) == (-1, -2, 1, 2)
    assert intpoly.degree(q) == 2
    assert intpoly.evaluate(q, 3) == 8
    assert intpoly.scale(p, -3) == (-3, -6)


def test_division_by_monic():
    p = (-1, -2, 1, 2)
    quot, rem = intpoly.divmod_monic(p, (-1, 0, 1))
    assert quot == (1, 2)
    assert rem == ()
    assert intpoly.try_divide(p, (-1, 0, 1)) == (1, 2)
    assert intpoly.try_divide((1, 1), (-1, 0, 1)) is None


def test_poly_str():
    assert intpoly.poly_str((-3, 0, 1)) == "x^2-3"
    assert intpoly.poly_str((0, 1)) == "x"
    assert intpoly.poly_str(()) == "0"
    assert intpoly.poly_str((2,)) == "2"
    assert intpoly.poly_str((-1, 1, 1), "y") == "y^2+y-1"


def test_cyclotomic_matches_sympy():
    x = sympy.Symbol("x")
    for n in range(1, 31):
        ours = sympy.Poly(list(reversed(intpoly.cyclotomic(n))), x)
        assert ours == sympy.Poly(sympy.cyclotomic_poly(n, x), x)


def test_two_cos_minimal_polys():
    # Minimal polynomials of 2*cos(2*pi/n), low-order coefficient first.
    assert intpoly.two_cos_minimal_poly(1) == (-2, 1)
    assert intpoly.two_cos_minimal_poly(2) == (2, 1)
    assert intpoly.two_cos_minimal_poly(3) == (1, 1)
    assert intpoly.two_cos_minimal_poly(4) == (0, 1)
    assert intpoly.two_cos_minimal_poly(5) == (-1, 1, 1)
    assert intpoly.two_cos_minimal_poly(6) == (-1, 1)
    assert intpoly.two_cos_minimal_poly(7) == (-1, -2, 1, 1)
    assert intpoly.two_cos_minimal_poly(8) == (-2, 0, 1)
    assert intpoly.two_cos_minimal_poly(12) == (-3, 0, 1)


def test_two_cos_root_numerically():
    import math
    for n in range(1, 40):
        p = intpoly.two_cos_minimal_poly(n)
        x = 2 * math.cos(2 * math.pi / n)
        value = sum(c * x ** i for i, c in enumerate(p))
        assert abs(value) < 1e-8


def test_euler_phi_matches_sympy():
    for n in range(1, 200):
        assert intpoly.euler_phi(n) == sympy.totient(n)


def test_charpoly_known_matrices():
    assert intpoly.charpoly(((0, 1), (1, 0))) == (-1, 0, 1)
    assert intpoly.charpoly(((2,),)) == (-2, 1)
    # 3-cycle adjacency: x^3 - 3x - 2.
    c3 = ((0, 1, 1), (1, 0, 1), (1, 1, 0))
    assert intpoly.charpoly(c3) == (-2, -3, 0, 1)


def test_charpoly_routes_agree_random():
    rng = random.Random(7)
    for _ in range(25):
        n = rng.randrange(1, 7)
        mat = tuple(tuple(rng.randrange(-9, 10) for _ in range(n))
                    for _ in range(n))
        assert intpoly.charpoly(mat) == intpoly.charpoly_reference(mat)


def test_charpoly_matches_sympy_on_larger_matrix():
    rng = random.Random(19)
    n = 9
    mat = tuple(tuple(rng.randrange(-4, 5) for _ in range(n)) for _ in range(n))
    ours = intpoly.charpoly(mat)
    expected = sympy.Matrix(mat).charpoly().all_coeffs()
    assert list(reversed(ours)) == [int(c) for c in expected]


_small = st.integers(min_value=-6, max_value=6)
_polys = st.lists(_small, max_size=5).map(tuple)


@given(_polys, _polys, _polys)
@settings(max_examples=60)
def test_poly_ring_axioms(p, q, r):
    assert intpoly.add(p, q) == intpoly.add(q, p)
    assert intpoly.mul(p, q) == intpoly.mul(q, p)
    assert intpoly.mul(p, intpoly.add(q, r)) == intpoly.add(
        intpoly.mul(p, q), intpoly.mul(p, r))


@given(_polys, _polys)
@settings(max_examples=60)
def test_evaluation_is_a_homomorphism(p, q):
    at = 3
    assert intpoly.evaluate(intpoly.mul(p, q), at) == (
        intpoly.evaluate(p, at) * intpoly.evaluate(q, at))
