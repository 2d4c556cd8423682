"""Hypergraphs, their 2-step nilpotent L-infinity algebras, and L-infinity cohomology."""

from .hypergraph import (
    EdgeProfile,
    Hypergraph,
    HypergraphError,
    complete_uniform,
    delete_vertex,
    disjoint_union,
    parse,
    random_hypergraph,
    relabel,
    serialize,
)
from .linfty import (
    BasisElement,
    Element,
    LInftyAlgebra,
    bracket,
    build_linfty,
    check_2step,
    commutator_dims,
    lower_central_filtration,
)
from .mcalg import (
    Generator,
    MCAlgebra,
    Polynomial,
    check_d_squared,
    dim_series,
    enumerate_basis,
    koszul_reduce,
    maurer_cartan,
    mc_algebra,
    reduce_algebra,
)
from .cohomology import (
    BettiTable,
    PoincareSeries,
    ResourceLimitError,
    betti,
    betti_table,
    closed_form_bN,
    closed_form_low,
    poincare,
)
from .sparse import SparseIntMatrix, determinant, rank
from .symplectic import (
    SDR,
    HallViolator,
    SymplecticForm,
    build_omega,
    find_sdr,
    is_symplectic,
    verify_symplectic,
)
from .isomorphism import Fingerprint, SizeLimitError, are_isomorphic, fingerprint

__version__ = "0.1.0"

__all__ = [
    "EdgeProfile",
    "Hypergraph",
    "HypergraphError",
    "complete_uniform",
    "delete_vertex",
    "disjoint_union",
    "parse",
    "random_hypergraph",
    "relabel",
    "serialize",
    "BasisElement",
    "Element",
    "LInftyAlgebra",
    "bracket",
    "build_linfty",
    "check_2step",
    "commutator_dims",
    "lower_central_filtration",
    "Generator",
    "MCAlgebra",
    "Polynomial",
    "check_d_squared",
    "dim_series",
    "enumerate_basis",
    "koszul_reduce",
    "maurer_cartan",
    "mc_algebra",
    "reduce_algebra",
    "BettiTable",
    "PoincareSeries",
    "ResourceLimitError",
    "betti",
    "betti_table",
    "closed_form_bN",
    "closed_form_low",
    "poincare",
    "SDR",
    "HallViolator",
    "SymplecticForm",
    "build_omega",
    "find_sdr",
    "is_symplectic",
    "verify_symplectic",
    "SparseIntMatrix",
    "determinant",
    "rank",
    "Fingerprint",
    "SizeLimitError",
    "are_isomorphic",
    "fingerprint",
]
