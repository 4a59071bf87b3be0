"""Representation combinatorics of the exceptional Lie superalgebras
D(2,1;a), F4 and G3 in exact arithmetic.

Submodules
----------
root_data   roots, invariant form, rho, Weyl groups
weights     integrality, dominance, typicality, dominant representatives
blocks      the chains atp1/atp2 of integral atypical weights
verma       primitive weight graphs, Loewy layers, Jantzen polynomials
characters  truncated characters, g_0-decompositions, dimensions
klhom       u^- homology, KL polynomials and their inverses, cohomology
cli         command line front end
"""
from .root_data import (
    AlgebraKind,
    Algebra,
    Scalar,
    Weight,
    WeylElement,
    bilinear,
    build_algebra,
    dot_action,
    parse_a,
    parse_weight,
    weyl_action,
)
from .weights import (
    atypical_roots,
    is_g0_dominant,
    is_g0_integral,
    is_g_integral,
    is_integral_dominant,
    lambda_bar0,
    make_dominant,
    rho_shift,
)
from .blocks import (
    Block,
    BlockPosition,
    chain_weight,
    classify,
    down_move,
    has_tail_root,
    sigma0_partner,
    up_move,
)
from .qpoly import QPolynomial
from .verma import (
    PrimitiveGraph,
    composition_factors,
    jantzen_polynomials,
    kac_factors,
    loewy_layers,
    primitive_weight_graph,
)
from .characters import (
    char_kac,
    char_simple_g0,
    char_simple_truncated,
    char_verma_truncated,
    dim_kac,
    dim_simple,
    g0_multiplicity,
    weyl_numerator_reduce,
)
from .klhom import (
    cohomology_table,
    homology,
    inverse_kl,
    kl_polynomial,
    verify_euler,
    verify_grothendieck_cancellation,
    verify_kl_identity,
)

__version__ = "0.1.0"
