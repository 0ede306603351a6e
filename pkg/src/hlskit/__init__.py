"""hlskit: exact tableau-order poset combinatorics and their generating series."""

from .exactalg import (
    ExactDivisionError,
    LaurentPoly,
    VarTable,
    exact_div,
    y_binomial,
    y_factorial,
    y_integer,
    y_multinomial,
)
from .poset import (
    CapExceededError,
    DegenerateSpecError,
    PosetSpec,
    complement,
    cover_relations,
    delta,
    enumerate_chains,
    enumerate_elements,
    enumerate_multichains,
    hasse_dot,
    interval_elements,
    iso_n1_to_np1,
    leq_t,
    parse_chain,
    parse_element,
    render_element,
    s_vector,
)
from .series import (
    HlsRational,
    TruncatedSeries,
    classical_igusa,
    expand_multichain,
    expand_rational,
    generalized_igusa,
    hls,
    hls_modified,
    make_context,
    mv_hls,
    relation_check,
    substitute,
    weak_order_igusa,
)
from .verify import (
    K_and_N,
    PolyMatrix,
    ReciprocityCertificate,
    kron,
    is_identity,
    matmul,
    mobius_matrix,
    mobius_via_chains,
    verify_order_complex,
    verify_reciprocity,
    zeta_matrix,
)
from .weight import (
    SkewTableau,
    chain_weight,
    pair_weight,
    phi_tableau,
    project,
    refined_leg_pair,
    theta,
    theta_tableau,
)

__all__ = [
    "CapExceededError",
    "DegenerateSpecError",
    "ExactDivisionError",
    "HlsRational",
    "K_and_N",
    "LaurentPoly",
    "PolyMatrix",
    "PosetSpec",
    "ReciprocityCertificate",
    "SkewTableau",
    "TruncatedSeries",
    "VarTable",
    "chain_weight",
    "classical_igusa",
    "complement",
    "cover_relations",
    "delta",
    "enumerate_chains",
    "enumerate_elements",
    "enumerate_multichains",
    "exact_div",
    "expand_multichain",
    "expand_rational",
    "generalized_igusa",
    "hasse_dot",
    "hls",
    "hls_modified",
    "interval_elements",
    "is_identity",
    "iso_n1_to_np1",
    "kron",
    "leq_t",
    "make_context",
    "matmul",
    "mobius_matrix",
    "mobius_via_chains",
    "mv_hls",
    "pair_weight",
    "parse_chain",
    "parse_element",
    "phi_tableau",
    "project",
    "refined_leg_pair",
    "relation_check",
    "render_element",
    "s_vector",
    "substitute",
    "theta",
    "theta_tableau",
    "verify_order_complex",
    "verify_reciprocity",
    "weak_order_igusa",
    "y_binomial",
    "y_factorial",
    "y_integer",
    "y_multinomial",
    "zeta_matrix",
]
