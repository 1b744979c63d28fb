"""Workbench for finite residuated lattices.

Construct algebras as operation tables (ordinal sums, partial gluings,
generalized rotations), validate axioms, evaluate identities, compute the
filter/congruence correspondence, enumerate residuated chains, and decide
or refute amalgamation questions for V-formations of finite chains by
obstruction certificates and bounded exhaustive search.
"""

from .algebra import (
    CHAIN,
    EMBEDDING,
    HOM,
    RL_FLAGS,
    VALIDATE_FLAGS,
    BudgetExceededError,
    CongruenceFilter,
    FiniteRL,
    FormatError,
    Morphism,
    NotCongruenceError,
    NotResiduatedError,
    PartialIRL,
    PreconditionError,
    ReslatError,
    UnsupportedError,
    UnsupportedSymbolError,
    ValidationReport,
    congruence_filters,
    congruence_to_filter,
    filter_to_congruence,
    make_algebra,
    make_partial,
    partial_from_total,
    quotient,
    relabel,
    residuals_from_product,
    subalgebra_generated,
    tables_equal,
    validate,
    validate_morphism,
    validate_partial,
    with_zero,
)
from .amalgamation import (
    ObstructionWitness,
    SearchFlags,
    SearchReport,
    VFormation,
    bounded_amalgam_search,
    bounded_one_amalgam_search,
    check_obstruction,
    check_vformation,
    find_embeddings,
    find_homomorphisms,
    find_obstruction,
    injectivity_reduction,
    make_vformation,
    pointed_vformation,
    rotated_vformation,
    vs_formation,
)
from .completion import (
    Budget,
    ChainFlags,
    CompletionProblem,
    complete_table,
    count_chains,
    enumerate_chains,
    iter_completions,
)
from .constructions import (
    LowerCompatibleTriple,
    Nucleus,
    builtin,
    constant_one_nucleus,
    disconnected_rotation,
    generalized_rotation,
    godel,
    identity_nucleus,
    identity_triple,
    lukasiewicz,
    nucleus_image,
    ordinal_sum,
    partial_gluing,
    trivial,
    two,
    validate_nucleus,
    validate_triple,
    vs_a,
    vs_b,
    vs_c,
    vs_k_triple,
)
from .documents import (
    algebra_to_document,
    canonical_tables_json,
    document_to_algebra,
    document_to_vformation,
    dumps_canonical,
    vformation_to_document,
)
from .identities import (
    Identity,
    IdentityResult,
    check_identity,
    format_identity,
    parse_identity,
)

__version__ = "0.1.0"
