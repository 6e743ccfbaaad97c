"""Exact Grover walks on unitary and quadratic unitary Cayley graphs.

Rings are finite commutative with unity, given as products of local
factors (integers mod p^k, truncated polynomial rings, Galois fields).
Graphs connect elements differing by a unit, or by a square unit up to
sign.  The walk engine is exact end to end: rational arc matrices,
integer-scaled powering, characteristic polynomials over the integers,
eigenvalues as quadratic (or multiquadratic) irrationals, and
perfect-state-transfer certificates with explicit times and phases.
"""

from .errors import FormulaNotApplicable, SizeCapExceeded
from .graphs import (Graph, Permutation, automorphism_group, cayley_graph,
                     graph_json, is_isomorphic, quadratic_unitary_cayley_graph,
                     tensor_product, to_dot, unitary_cayley_graph)
from .intpoly import charpoly, charpoly_reference, cyclotomic, euler_phi, \
    two_cos_minimal_poly
from .rings import (ConnectionSet, ProductRing, RingElement, enumerate_rings,
                    is_s_ring, local_catalog, make_ring, quadratic_connection,
                    square_units, units)
from .scalars import Surd, exact_str
from .verify import (PredictedSpectrum, VerificationRecord, ideal_product,
                     local_quadratic_splitting, predicted_periodic_quadratic,
                     predicted_periodic_unitary, predicted_pst_quadratic,
                     predicted_pst_unitary, predicted_quadratic_spectrum,
                     predicted_unitary_spectrum, quadratic_regime, sweep,
                     verify_ring)
from .walks import (PSTPair, PSTReport, RationalMatrix, SpectralLine,
                    SpectralReport, bruteforce_period, chebyshev_apply,
                    chebyshev_matrix, classify_spectrum, discriminant,
                    eigen_support, eigenprojector_vector, evolution_power,
                    find_pst, is_periodic_bruteforce, period, time_evolution,
                    vertex_transfer_matrix)

__version__ = "0.1.0"

__all__ = [
    "FormulaNotApplicable", "SizeCapExceeded",
    "Graph", "Permutation", "automorphism_group", "cayley_graph", "graph_json",
    "is_isomorphic", "quadratic_unitary_cayley_graph", "tensor_product",
    "to_dot", "unitary_cayley_graph",
    "charpoly", "charpoly_reference", "cyclotomic", "euler_phi",
    "two_cos_minimal_poly",
    "ConnectionSet", "ProductRing", "RingElement", "enumerate_rings",
    "is_s_ring", "local_catalog", "make_ring", "quadratic_connection",
    "square_units", "units",
    "Surd", "exact_str",
    "PredictedSpectrum", "VerificationRecord", "ideal_product",
    "local_quadratic_splitting", "predicted_periodic_quadratic",
    "predicted_periodic_unitary", "predicted_pst_quadratic",
    "predicted_pst_unitary", "predicted_quadratic_spectrum",
    "predicted_unitary_spectrum", "quadratic_regime", "sweep", "verify_ring",
    "PSTPair", "PSTReport", "RationalMatrix", "SpectralLine", "SpectralReport",
    "bruteforce_period", "chebyshev_apply", "chebyshev_matrix",
    "classify_spectrum", "discriminant", "eigen_support",
    "eigenprojector_vector", "evolution_power", "find_pst",
    "is_periodic_bruteforce", "period", "time_evolution",
    "vertex_transfer_matrix",
    "__version__",
]
