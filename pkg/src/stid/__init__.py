"""Exact tropical and supertropical matrix identities.

Decide two-letter semigroup identities of tropical matrix monoids through
Newton-polytope vertex sets, extract counterexamples from separating
directions, and compose certified identities into supertropical ones.
"""

from .semiring import (
    NEG_INF,
    ST_ONE,
    TROP_ONE,
    ZERO,
    SupertropScalar,
    TropScalar,
    ghost,
    hat,
    nu,
    nu_equiv,
    parse_scalar,
    real,
    st_add,
    st_mul,
    trop,
)
from .matrix import Matrix, format_matrix, mat_mul, parse_matrix
from .words import Identity, Word, compose_identity, evaluate, parse_identity, parse_word, substitute
from .digraph import LwDigraph, Multigraph, corollary_walk_check, digraph_of, max_walk_value
from .polytope import ConfigSet, hull_equal, separating_witness, vertices
from .verifier import (
    HOLDS,
    REFUTED,
    TRIVIAL_PAIR,
    Certificate,
    check_lemma_nu_equiv,
    check_lemma_nu_pair,
    config_sets,
    fuzz_check,
    lift_to_supertropical,
    search_identities,
    verify_trop,
    walk_correspondence,
)

__version__ = "0.1.0"
