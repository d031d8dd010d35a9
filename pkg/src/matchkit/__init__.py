"""Matching polynomials, matching energy and extremal tricyclic graphs."""

from .energy import EnergyResult, me_difference, me_quadrature, me_roots
from .families import FamilyId, family_graph, family_id, family_me, family_mvector
from .graph import (
    CapacityError, Graph, Graph6Error, GraphError, canonical_form, from_graph6, subdivide,
    to_graph6,
)
from .matching import (
    MatchingPolynomial, MatchVector, Order, QuasiOrdering, backward_recurrence,
    insert_recurrence, match_vector, matching_polynomial, parse_mvector, quasi_compare,
)
from .quadrature import ConvergenceError, QuadratureSettings
from .roots import RootError
from .search import ClassReport, CorpusSpec, class_report, enumerate_graphs, verify_claim

__version__ = "0.1.0"
