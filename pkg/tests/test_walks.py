"""Exact Grover walk simulation, periodicity, and transfer search."""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ringwalk import errors, walks
from ringwalk.graphs import Graph, quadratic_unitary_cayley_graph, unitary_cayley_graph
from ringwalk.rings import make_ring
from ringwalk.scalars import Surd


def _petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph(10, outer + inner + spokes)


def test_time_evolution_rows():
    g = Graph.cycle(4)
    u = walks.time_evolution(g)
    # Arcs are sorted pairs; each row has the 2/deg block minus the flip.
    size = len(u.index)
    assert size == 8
    for a, (origin, _) in enumerate(u.index):
        row = u.entries[a]
        total = sum(row)
        # Row sums of S(2N*N - I) equal 2 - 1 = 1 on a cycle.
        assert total == 1
        assert all(x in (Fraction(0), Fraction(1), Fraction(-1), Fraction(2, 2))
                   for x in row)


def test_evolution_is_unitary():
    for g in (Graph.cycle(5), Graph.complete(4), _petersen()):
        u = walks.time_evolution(g)
        assert u.transpose().matmul(u).is_identity


def test_evolution_power_matches_repeated_product():
    g = Graph.complete(4)
    u = walks.time_evolution(g)
    u3 = u.matmul(u).matmul(u)
    assert walks.evolution_power(g, 3).entries == u3.entries


def test_transfer_matrix_equals_chebyshev():
    for g in (Graph.cycle(6), Graph.complete(5), _petersen()):
        p = walks.discriminant(g)
        for tau in (0, 1, 2, 3, 7):
            lhs = walks.vertex_transfer_matrix(g, tau)
            rhs = walks.chebyshev_matrix(p, tau)
            assert lhs.entries == rhs.entries


def test_discriminant_requires_regular():
    path = Graph(3, [(0, 1), (1, 2)])
    with pytest.raises(ValueError):
        walks.discriminant(path)
    with pytest.raises(ValueError):
        walks.vertex_transfer_matrix(path, 2)


def test_periods_of_small_graphs():
    assert walks.period(Graph.complete(2)) == 2
    assert walks.period(Graph.cycle(4)) == 4
    assert walks.period(Graph.cycle(5)) == 5
    assert walks.period(Graph.cycle(6)) == 6
    assert walks.period(Graph.cycle(7)) == 7
    assert walks.period(Graph.complete(3)) == 3


def test_period_of_unitary_graph_z12():
    g = unitary_cayley_graph(make_ring("Z12"))
    assert walks.period(g) == 12


def test_period_of_quadratic_graph_z9():
    g = quadratic_unitary_cayley_graph(make_ring("Z9"))
    assert walks.period(g) == 12


def test_nonperiodic_graphs():
    assert walks.period(_petersen()) is None
    for spec in ("Z13", "Z7"):
        g = quadratic_unitary_cayley_graph(make_ring(spec))
        assert walks.period(g) is None
        assert not walks.is_periodic_bruteforce(g, 120)


def test_classifier_on_cycles():
    rep = walks.classify_spectrum(Graph.cycle(5))
    assert rep.periodic and rep.period_bound == 5 * 2
    values = {walks.exact_str(mu) for mu, _ in rep.eigenvalues()}
    assert "(-1+sqrt(5))/4" in values and "(-1-sqrt(5))/4" in values


def test_classifier_degree_three_orbit():
    # C7 spectrum needs a cubic factor: cos(2 pi j/7) values.
    rep = walks.classify_spectrum(Graph.cycle(7))
    assert rep.periodic
    assert rep.period_bound == 14
    assert any(line.degree == 3 and line.angle_order == 7 for line in rep.lines)
    with pytest.raises(ValueError):
        rep.eigenvalues()


def test_classifier_quadratic_disallowed():
    g = quadratic_unitary_cayley_graph(make_ring("Z13"))
    rep = walks.classify_spectrum(g)
    assert not rep.periodic
    mus = {walks.exact_str(mu): m for mu, m in rep.eigenvalues()}
    assert mus == {"1": 1, "(-1+sqrt(13))/12": 6, "(-1-sqrt(13))/12": 6}


def test_classifier_leaves_higher_degree_unfactored():
    g = quadratic_unitary_cayley_graph(make_ring("Z5 x Z13"))
    rep = walks.classify_spectrum(g)
    assert not rep.periodic
    assert rep.unfactored is not None


def test_classifier_agrees_with_numpy_spectrum():
    for g in (Graph.cycle(6), Graph.complete(5), _petersen(),
              unitary_cayley_graph(make_ring("Z12"))):
        rep = walks.classify_spectrum(g)
        if rep.unfactored is not None:
            continue
        try:
            pairs = rep.eigenvalues()
        except ValueError:
            continue
        ours = sorted(float(mu) for mu, mult in pairs for _ in range(mult))
        k = g.regularity
        theirs = sorted(np.linalg.eigvalsh(g.adjacency_matrix() / k))
        assert np.allclose(ours, theirs, atol=1e-9)


def test_pst_on_even_cycles():
    rep = walks.find_pst(Graph.cycle(4))
    assert rep.periodic and rep.period == 4
    assert [(p.source, p.target, p.time, p.phase) for p in rep.pairs] == [
        (0, 2, 2, 1), (2, 0, 2, 1)]
    rep = walks.find_pst(Graph.cycle(6))
    assert [(p.source, p.target, p.time, p.phase) for p in rep.pairs] == [
        (0, 3, 3, 1), (3, 0, 3, 1)]
    rep = walks.find_pst(Graph.cycle(10))
    assert [(p.source, p.target, p.time, p.phase) for p in rep.pairs] == [
        (0, 5, 5, 1), (5, 0, 5, 1)]


def test_pst_on_unitary_graph_z12():
    g = unitary_cayley_graph(make_ring("Z12"))
    rep = walks.find_pst(g)
    assert rep.period == 12
    assert [(p.source, p.target, p.time, p.phase) for p in rep.pairs] == [
        (0, 6, 6, 1), (6, 0, 6, 1)]


def test_no_pst_on_odd_cycles():
    for n in (3, 5, 7):
        rep = walks.find_pst(Graph.cycle(n))
        assert rep.periodic and not rep.has_pst


def test_pst_pruned_on_vertex_transitive_nonperiodic():
    g = quadratic_unitary_cayley_graph(make_ring("Z13"))
    rep = walks.find_pst(g)
    assert rep.pruned_by_transitivity and not rep.has_pst


def test_pst_requires_tau_max_when_not_pruned():
    pet = _petersen()
    with pytest.raises(ValueError):
        walks.find_pst(pet)
    rep = walks.find_pst(pet, tau_max=30)
    assert not rep.has_pst and rep.bound == 30


def test_pst_tau_cap():
    with pytest.raises(errors.SizeCapExceeded):
        walks.find_pst(_petersen(), tau_max=walks.TAU_CAP + 1)


def test_transfer_matrix_certifies_pst():
    g = Graph.cycle(6)
    t = walks.vertex_transfer_matrix(g, 3)
    col = [t.entries[i][0] for i in range(6)]
    assert col == [0, 0, 0, 1, 0, 0]


def test_eigen_support_sees_every_eigenvalue_on_transitive_graphs():
    g = unitary_cayley_graph(make_ring("Z12"))
    support = set(walks.eigen_support(g, 0))
    spectrum = {mu for mu, _ in walks.classify_spectrum(g).eigenvalues()}
    assert support == spectrum


def test_eigenprojector_vectors_resolve_identity():
    g = Graph.cycle(5)
    rep = walks.classify_spectrum(g)
    e0 = [Fraction(0)] * 5
    e0[0] = Fraction(1)
    acc = [Surd(0)] * 5
    for mu, _ in rep.eigenvalues():
        proj = walks.eigenprojector_vector(g, mu, e0)
        acc = [a + p for a, p in zip(acc, proj)]
    assert [Surd(x) if isinstance(x, Fraction) else x for x in acc] == [
        Surd(1), Surd(0), Surd(0), Surd(0), Surd(0)]


def test_arcspace_rejects_bad_graphs():
    with pytest.raises(ValueError):
        walks.time_evolution(Graph(3, [(0, 1)]))  # disconnected
    with pytest.raises(ValueError):
        walks.time_evolution(Graph.complete_pseudograph(3))  # loops


@given(st.sampled_from([3, 4, 5, 6, 8]), st.integers(1, 6))
@settings(max_examples=30, deadline=None)
def test_compressed_power_matches_chebyshev_on_cycles(n, tau):
    g = Graph.cycle(n)
    p = walks.discriminant(g)
    assert walks.vertex_transfer_matrix(g, tau).entries == (
        walks.chebyshev_matrix(p, tau).entries)
