"""Degree-sequence bounds on spectral radii of uniform hypergraphs, and the tools to check them."""

from .bounds import BoundReport, adjacency_bound, corollary_q, corollary_rho, phi, psi, signless_bound
from .combinatorics import a1, a2, binom, check_identity_eq2, check_identity_eq3
from .hypergraph import (
    ComponentPartition,
    DegreeSequence,
    Hypergraph,
    HypergraphError,
    components,
    degree_sequence,
    generate,
    parse,
    serialize,
)
from .spectral import SpectralConfig, SpectralEstimate, matrix_oracle, power_iteration, spectral_radius

__version__ = "0.1.0"
