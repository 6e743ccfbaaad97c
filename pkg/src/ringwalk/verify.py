"""Closed-form spectra and walk predictions for ring graph families.

A finite commutative unital ring splits uniquely into local factors; every
prediction here is a function of the local invariants (residue field sizes
q_i and maximal ideal sizes m_i).  The unit-connection graph always has a
product formula for its spectrum.  The square-connection graph has one in
two regimes: all residue sizes 1 mod 4 (the connection is exactly the
square units), or exactly one residue size 3 mod 4 (the odd factor's
connection closes up to its full unit group).  Outside those regimes no
closed form is claimed and the predicates answer "not applicable".

verify_ring runs every applicable prediction against the walk engine's
ground truth: predicted characteristic polynomial vs the one computed from
the adjacency matrix, predicted periodicity vs the spectral classifier vs
the brute-force power oracle, predicted transfer vs the exact search.
Disconnected graphs are analyzed on the component of the zero element;
translation by any vertex is a graph isomorphism carrying component to
component, so that component represents them all, and a transfer can never
cross components.  Ring-level transfer positivity therefore means:
connected and the component search found a pair.
"""

from __future__ import annotations

import dataclasses
import itertools
import math
from fractions import Fraction

from . import intpoly, walks
from .errors import FormulaNotApplicable
from .graphs import (Graph, Permutation, is_isomorphic, tensor_product,
                     quadratic_unitary_cayley_graph, unitary_cayley_graph)
from .rings import ProductRing, enumerate_rings, is_s_ring, make_ring
from .scalars import Surd, sort_key

__all__ = [
    "PredictedSpectrum", "VerificationRecord", "predicted_unitary_spectrum",
    "quadratic_regime", "predicted_quadratic_spectrum",
    "predicted_periodic_unitary", "predicted_pst_unitary",
    "predicted_periodic_quadratic", "predicted_pst_quadratic",
    "ideal_product", "local_quadratic_splitting", "verify_ring", "sweep",
]


def _canon(value):
    """Normalize spectrum values so equal numbers collide as dict keys."""
    if isinstance(value, Surd):
        return value.as_fraction() if value.is_rational else value
    return Fraction(value)


@dataclasses.dataclass(frozen=True)
class PredictedSpectrum:
    """Eigenvalues of an adjacency matrix as (value, multiplicity) pairs."""

    pairs: tuple
    regularity: int
    n: int
    formula: str

    def charpoly(self):
        """Expand prod (x - value)^mult; coefficients must come out integral."""
        poly = [Surd(1)]
        for value, mult in self.pairs:
            root = value if isinstance(value, Surd) else Surd(value)
            for _ in range(mult):
                nxt = [-root * poly[0]]
                for i in range(1, len(poly)):
                    nxt.append(poly[i - 1] - root * poly[i])
                nxt.append(poly[-1])
                poly = nxt
        out = []
        for c in poly:
            assert c.is_rational, c
            f = c.as_fraction()
            assert f.denominator == 1, f
            out.append(int(f))
        assert len(out) == self.n + 1
        return tuple(out)


def _merge(values, regularity, n, formula):
    acc = {}
    for value, mult in values:
        if mult:
            key = _canon(value)
            acc[key] = acc.get(key, 0) + mult
    pairs = tuple(sorted(acc.items(), key=lambda p: sort_key(p[0])))
    assert sum(m for _, m in pairs) == n
    return PredictedSpectrum(pairs, regularity, n, formula)


def predicted_unitary_spectrum(ring: ProductRing) -> PredictedSpectrum:
    """Spectrum of the unit-connection graph from the local residue data.

    The graph is the tensor product over local factors, each factor a
    complete multipartite graph with parts the cosets of the maximal
    ideal; eigenvalue (-1)^|C| |units| / prod_{j in C} (q_j - 1) appears
    with multiplicity prod_{j in C} (q_j - 1), and 0 fills the rest.
    """
    qs = ring.residues
    units = ring.unit_count()
    values = []
    for picks in itertools.product((0, 1), repeat=len(qs)):
        chosen = [q - 1 for q, i in zip(qs, picks) if i]
        denom = math.prod(chosen)
        sign = -1 if len(chosen) % 2 else 1
        values.append((Fraction(sign * units, denom), denom))
    values.append((Fraction(0), ring.order - math.prod(qs)))
    return _merge(values, units, ring.order, "unit-tensor")


def quadratic_regime(ring: ProductRing):
    """Which closed-form regime the square-connection graph falls in.

    "all-1-mod-4" when every residue size is 1 mod 4 (then -1 is a square
    unit in every factor and the connection is the square units alone);
    "one-3-mod-4" when exactly one residue size is 3 mod 4 and the rest
    are 1 mod 4 (the odd-one-out factor contributes its whole unit group);
    None otherwise (some even residue size, or two factors 3 mod 4).
    """
    qs = ring.residues
    if any(q % 2 == 0 for q in qs):
        return None
    threes = sum(1 for q in qs if q % 4 == 3)
    if threes == 0:
        return "all-1-mod-4"
    if threes == 1:
        return "one-3-mod-4"
    return None


def _paley_tensor_values(qs, ms):
    """(value, mult) pairs for the all-1-mod-4 square-connection product.

    Each local factor contributes k_i = (q_i-1) m_i / 2 once, and the two
    conjugate Paley branches k_i/(sqrt(q_i)+1) and -k_i/(sqrt(q_i)-1) with
    multiplicity (q_i-1)/2 each; factor eigenvalues multiply across the
    product.  Zero is NOT included here: the caller fills it.
    """
    s = len(qs)
    units = math.prod((q - 1) * m for q, m in zip(qs, ms))
    top = Fraction(units, 2 ** s)
    values = []
    for assign in itertools.product((0, 1, 2), repeat=s):
        val = Surd(top)
        mult = 1
        for q, a in zip(qs, assign):
            if a == 1:
                val = val / (Surd.sqrt(q) + 1)
                mult *= (q - 1) // 2
            elif a == 2:
                val = val / (1 - Surd.sqrt(q))
                mult *= (q - 1) // 2
        values.append((val, mult))
    return values


def predicted_quadratic_spectrum(ring: ProductRing) -> PredictedSpectrum:
    """Spectrum of the square-connection graph in the two covered regimes."""
    regime = quadratic_regime(ring)
    qs = ring.residues
    ms = ring.ideal_sizes
    if regime == "all-1-mod-4":
        s = len(qs)
        values = _paley_tensor_values(qs, ms)
        values.append((Fraction(0), ring.order - math.prod(qs)))
        k = ring.unit_count() // 2 ** s
        return _merge(values, k, ring.order, "paley-tensor")
    if regime == "one-3-mod-4":
        i0 = next(i for i, q in enumerate(qs) if q % 4 == 3)
        q0, m0 = qs[i0], ms[i0]
        rest_q = [q for i, q in enumerate(qs) if i != i0]
        rest_m = [m for i, m in enumerate(ms) if i != i0]
        u0 = (q0 - 1) * m0
        inner = _paley_tensor_values(rest_q, rest_m) if rest_q else [(Surd(1), 1)]
        values = []
        for val, mult in inner:
            values.append((u0 * val, mult))
            values.append((val * Fraction(-u0, q0 - 1), (q0 - 1) * mult))
        values.append((Fraction(0), ring.order - math.prod(qs)))
        k = u0 * (math.prod((q - 1) * m for q, m in zip(rest_q, rest_m))
                  // 2 ** len(rest_q))
        return _merge(values, k, ring.order, "units-times-paley-tensor")
    raise FormulaNotApplicable(
        f"no closed-form spectrum for {ring.token}: residue sizes {qs}")


def predicted_periodic_unitary(ring: ProductRing) -> bool:
    """Periodicity of the unit-connection walk from residue sizes alone.

    With residue sizes sorted descending (the ring normalization does
    that), the walk is periodic iff the largest is 2 or 3 and every other
    one is 2.
    """
    qs = ring.residues
    return qs[0] in (2, 3) and all(q == 2 for q in qs[1:])


_PST_UNITARY_SPECS = ("Z2", "Z4", "G(2)", "Z6", "Z12", "Z3 x G(2)")
_pst_unitary_rings = None


def predicted_pst_unitary(ring: ProductRing) -> bool:
    """Whether the unit-connection graph exhibits perfect state transfer.

    Exactly six rings do (their graphs are K2, C4, C4, C6, and twice the
    12-vertex crown); every one of them is connected, and a disconnected
    graph's component transfers are attributed to the smaller ring its
    component realizes, so this stays an equality test on the ring.
    """
    global _pst_unitary_rings
    if _pst_unitary_rings is None:
        _pst_unitary_rings = tuple(make_ring(s) for s in _PST_UNITARY_SPECS)
    return any(ring == r for r in _pst_unitary_rings)


def predicted_periodic_quadratic(ring: ProductRing):
    """Periodicity of the square-connection walk, None outside the regimes.

    All-1-mod-4 regime: periodic iff local with residue size 5 (the graph
    is the 5-cycle blown up by a loop-complete block).  One-3-mod-4
    regime: periodic iff that factor is alone and has residue size 3.
    """
    regime = quadratic_regime(ring)
    if regime is None:
        return None
    qs = ring.residues
    if regime == "all-1-mod-4":
        return len(qs) == 1 and qs[0] == 5
    return len(qs) == 1 and qs[0] == 3


_pst_quadratic_rings = None


def predicted_pst_quadratic(ring: ProductRing):
    """Transfer prediction for the square-connection graph.

    The two positive answers are the 10-element and 6-element cyclic
    rings, whose graphs are the even cycles C10 and C6 (transfer at half
    the cycle length).  Both sit outside the closed-form regimes (each has
    a residue size 2), so they are designated answers; strictly inside a
    regime nothing admits transfer, and other out-of-regime rings get None.
    """
    global _pst_quadratic_rings
    if _pst_quadratic_rings is None:
        _pst_quadratic_rings = (make_ring("Z10"), make_ring("Z6"))
    if any(ring == r for r in _pst_quadratic_rings):
        return True
    if quadratic_regime(ring) is None:
        return None
    return False


def ideal_product(ring: ProductRing) -> int:
    """Product of the maximal ideal sizes over the local factors."""
    return math.prod(ring.ideal_sizes)


def local_quadratic_splitting(ring: ProductRing):
    """Witness that a local ring's square-connection graph splits.

    For a local ring with odd residue size, the graph is isomorphic to the
    residue field's graph tensored with the loop-complete block on the
    ideal.  Returns (graph, model, permutation) with the explicit witness;
    raises if the search fails (it must not) or the ring is out of scope.
    """
    if not ring.is_local:
        raise ValueError(f"{ring.token} is not local")
    q = ring.residues[0]
    if q % 2 == 0:
        raise ValueError("the splitting needs an odd residue size")
    m = ring.ideal_sizes[0]
    g = quadratic_unitary_cayley_graph(ring)
    base = quadratic_unitary_cayley_graph(ring.residue_ring())
    model = tensor_product(base, Graph.complete_pseudograph(m))
    perm = is_isomorphic(g, model)
    if perm is None:
        raise AssertionError(f"splitting isomorphism not found for {ring.token}")
    return g, model, perm


@dataclasses.dataclass(frozen=True)
class VerificationRecord:
    """Everything checked for one ring and family, mismatches included."""

    token: str
    family: str
    order: int
    regularity: int
    connected: bool
    sum_of_units_ring: bool
    formula: str | None
    spectrum_verified: bool | None
    predicted_periodic: bool | None
    classifier_periodic: bool
    brute_periodic: bool
    period: int | None
    predicted_pst: bool | None
    pst_positive: bool
    pst_pairs: tuple
    failures: tuple

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def status(self) -> str:
        if self.failures:
            return "fail"
        if self.spectrum_verified is None and self.predicted_periodic is None \
                and self.predicted_pst is None:
            return "not-applicable"
        return "pass"


def _component_of_zero(graph: Graph) -> Graph:
    comps = graph.connected_components()
    comp = next(c for c in comps if 0 in c)
    return graph.induced_subgraph(comp, vertex_transitive=True)


def verify_ring(ring: ProductRing, family: str = "unitary",
                tau_max: int = 120) -> VerificationRecord:
    """Run every applicable prediction for one ring against the walk engine."""
    if family == "unitary":
        graph = unitary_cayley_graph(ring)
        predicted_spectrum = predicted_unitary_spectrum
        predicted_periodic = predicted_periodic_unitary(ring)
        predicted_pst = predicted_pst_unitary(ring)
    elif family == "quadratic":
        graph = quadratic_unitary_cayley_graph(ring)
        predicted_spectrum = predicted_quadratic_spectrum
        predicted_periodic = predicted_periodic_quadratic(ring)
        predicted_pst = predicted_pst_quadratic(ring)
    else:
        raise ValueError(f"unknown family {family!r}")

    failures = []
    connected = graph.is_connected()
    s_ring = is_s_ring(ring)
    if family == "unitary" and connected != s_ring:
        failures.append("connectivity does not match the sum-of-units test")
    k = graph.regularity
    if k is None:
        failures.append("graph is not regular")
        k = -1

    formula = None
    spectrum_verified = None
    try:
        spec = predicted_spectrum(ring)
        formula = spec.formula
        spectrum_verified = True
        if spec.regularity != k:
            spectrum_verified = False
            failures.append(
                f"predicted regularity {spec.regularity} != computed {k}")
        computed = intpoly.charpoly(graph.adjacency_matrix().tolist())
        if spec.charpoly() != computed:
            spectrum_verified = False
            failures.append("predicted spectrum != computed spectrum")
    except FormulaNotApplicable:
        pass

    report = walks.classify_spectrum(graph)
    classifier_periodic = report.periodic
    if predicted_periodic is not None and predicted_periodic != classifier_periodic:
        failures.append(
            f"predicted periodic={predicted_periodic}, classifier says "
            f"{classifier_periodic}")

    component = _component_of_zero(graph) if not connected else graph
    brute = walks.bruteforce_period(component, tau_max)
    brute_periodic = brute is not None
    if brute_periodic != classifier_periodic:
        failures.append(
            f"brute-force oracle (tau_max={tau_max}) says periodic="
            f"{brute_periodic}, classifier says {classifier_periodic}")
    exact_period = None
    if classifier_periodic:
        exact_period = walks.period(component)
        if exact_period != brute:
            failures.append(f"period {exact_period} != brute-force {brute}")

    pst_report = walks.find_pst(component)
    pst_positive = connected and pst_report.has_pst
    if predicted_pst is not None and predicted_pst != pst_positive:
        failures.append(
            f"predicted transfer={predicted_pst}, search found "
            f"{pst_report.has_pst} (connected={connected})")

    return VerificationRecord(
        token=ring.token, family=family, order=ring.order, regularity=k,
        connected=connected, sum_of_units_ring=s_ring, formula=formula,
        spectrum_verified=spectrum_verified,
        predicted_periodic=predicted_periodic,
        classifier_periodic=classifier_periodic, brute_periodic=brute_periodic,
        period=exact_period, predicted_pst=predicted_pst,
        pst_positive=pst_positive, pst_pairs=pst_report.pairs,
        failures=tuple(failures))


def sweep(max_order: int, family: str = "unitary", tau_max: int = 120,
          cap: int | None = None):
    """verify_ring over every catalog ring of order <= max_order, sorted."""
    return [verify_ring(ring, family, tau_max)
            for ring in enumerate_rings(max_order, cap=cap)]
