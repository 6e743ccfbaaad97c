"""Finite commutative ring catalog and connection sets."""

import pytest
from hypothesis import given, settings, strategies as st

from ringwalk import errors, rings
from ringwalk.rings import (
    enumerate_rings,
    is_s_ring,
    make_ring,
    quadratic_connection,
    square_units,
    units,
)


def test_parse_and_canonical_tokens():
    assert make_ring("Z12").token == "Z3 x Z4"
    assert make_ring("Z4 x Z3").token == "Z3 x Z4"
    assert make_ring("GF(4) x Z3").token == "GF(4) x Z3"
    assert make_ring("G(2)").token == "G(2)"
    assert make_ring("Zp[2,3]").token == "Zp[2,3]"


def test_parse_rejects_garbage():
    for bad in ("", "Z0", "Z1", "Zx", "GF(6)", "G(4)", "Zp[4,2]", "Zp[2,0]",
                "K3", "Z4 y Z3"):
        with pytest.raises(ValueError):
            make_ring(bad)


def test_factor_normalization_orders_residues_descending():
    ring = make_ring("Z2 x Z9 x Z5")
    assert ring.residues == (5, 3, 2)
    ring = make_ring("Z4 x G(3)")
    assert [f.token for f in ring.factors] == ["G(3)", "Z4"]


def test_order_and_structure():
    ring = make_ring("Z12")
    assert ring.order == 12
    assert ring.unit_count() == 4
    assert ring.ideal_sizes == (1, 2)
    assert not ring.is_local
    assert make_ring("Z9").is_local
    assert make_ring("Z9").ideal_sizes == (3,)
    assert make_ring("GF(9)").ideal_sizes == (1,)


def test_crt_integer_labels_roundtrip():
    ring = make_ring("Z12")
    seen = set()
    for elt in ring.elements():
        n = ring.to_integer(elt)
        assert ring.from_integer(n) == elt
        seen.add(n)
    assert seen == set(range(12))
    assert str(ring.from_integer(7)) == "7"


def test_element_arithmetic():
    ring = make_ring("Z12")
    a = ring.from_integer(7)
    b = ring.from_integer(8)
    assert ring.to_integer(a + b) == 3
    assert ring.to_integer(a * b) == 8
    assert ring.to_integer(-a) == 5
    assert ring.to_integer(a ** 2) == 1
    assert a.is_unit() and not b.is_unit()


def test_units_of_z12():
    ring = make_ring("Z12")
    labels = sorted(ring.to_integer(u) for u in units(ring).elements)
    assert labels == [1, 5, 7, 11]


def test_units_of_truncated_polynomial_ring():
    ring = make_ring("G(2)")
    names = sorted(str(u) for u in units(ring).elements)
    assert names == ["a+b", "b"]
    assert ring.unit_count() == 2


def test_square_units_examples():
    gf9 = make_ring("GF(9)")
    assert len(square_units(gf9)) == 4
    z5 = make_ring("Z5")
    labels = sorted(z5.to_integer(u) for u in square_units(z5))
    assert labels == [1, 4]
    z8 = make_ring("Z8")
    assert len(square_units(z8)) == 1


def test_quadratic_connection_z9_is_all_units():
    ring = make_ring("Z9")
    assert set(quadratic_connection(ring).elements) == set(units(ring).elements)


def test_quadratic_connection_symmetry():
    for spec in ("Z5", "Z13", "GF(9)", "Z9", "Z5 x Z13"):
        ring = make_ring(spec)
        conn = set(quadratic_connection(ring).elements)
        assert all(-x in conn for x in conn)
        assert ring.zero() not in conn


def test_unit_connection_closed_under_negation():
    for spec in ("Z12", "G(2)", "GF(4) x Z3"):
        ring = make_ring(spec)
        conn = set(units(ring).elements)
        assert all(-x in conn for x in conn)


def test_s_ring_predicate():
    # The unit graph is connected exactly when no Z2 x Z2-like pair occurs.
    assert is_s_ring(make_ring("Z12"))
    assert is_s_ring(make_ring("Z2"))
    assert not is_s_ring(make_ring("Z2 x Z2"))
    assert not is_s_ring(make_ring("Z2 x Z4"))
    assert is_s_ring(make_ring("Z2 x Z3"))
    assert not is_s_ring(make_ring("G(2) x Z2"))
    assert is_s_ring(make_ring("GF(4) x Z2"))


def test_catalog_counts():
    assert len(enumerate_rings(6)) == 8
    assert len(enumerate_rings(16)) == 45
    assert len(enumerate_rings(36)) == 131


def test_catalog_has_no_duplicates_and_is_sorted():
    cat = enumerate_rings(16)
    tokens = [r.token for r in cat]
    assert len(set(tokens)) == len(tokens)
    orders = [r.order for r in cat]
    assert orders == sorted(orders)


def test_catalog_contains_expected_rings():
    tokens = {r.token for r in enumerate_rings(16)}
    for expected in ("Z2", "Z4", "G(2)", "GF(4)", "Z3 x Z4", "Z3 x G(2)",
                     "GF(4) x Z3", "Z13", "Zp[2,3]", "GF(16)"):
        assert expected in tokens


def test_catalog_cap():
    with pytest.raises(errors.SizeCapExceeded):
        enumerate_rings(50, cap=36)


def test_galois_field_is_a_field():
    gf = make_ring("GF(8)")
    for x in gf.elements():
        if x != gf.zero():
            assert x.is_unit()
    assert gf.unit_count() == 7


def test_truncated_ring_nilpotents():
    ring = make_ring("G(3)")
    # One local factor; the maximal ideal squares to zero.
    zero = ring.zero()
    nonunits = [x for x in ring.elements() if not x.is_unit()]
    assert len(nonunits) == 3
    for x in nonunits:
        for y in nonunits:
            assert x * y == zero


_specs = st.sampled_from(
    ["Z4", "Z12", "G(2)", "GF(9)", "Z5 x Z13", "Z9", "GF(4) x Z3"])


@given(_specs, st.integers(0, 10 ** 6), st.integers(0, 10 ** 6),
       st.integers(0, 10 ** 6))
@settings(max_examples=80)
def test_ring_axioms(spec, i, j, k):
    ring = make_ring(spec)
    elts = ring.elements()
    a, b, c = elts[i % len(elts)], elts[j % len(elts)], elts[k % len(elts)]
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ring.zero() == a
    assert a * ring.one() == a
    assert a - a == ring.zero()


@given(_specs)
def test_units_form_a_group(spec):
    ring = make_ring(spec)
    group = set(units(ring).elements)
    assert ring.one() in group
    for a in group:
        assert any(a * b == ring.one() for b in group)
