"""Exact computation in complex-base numeration systems with base -n+i."""

from .arith import GI_ONE, GI_ZERO, QI, GaussianInt, gi_mul, norm, parse_gaussian, parse_qi, qi_arith
from .dimension import (
    Config,
    DimensionReport,
    DimValue,
    HypothesisError,
    admissible_digits,
    attractor_dimension,
    build_translation,
    dimension,
    in_fundamental_translations,
    lambda_target,
    m_k,
    validate,
)
from .neighbours import (
    NeighbourSet,
    extended_alphabet,
    fundamental_alphabet,
    is_neighbour,
    neighbour_set,
    real_neighbours,
    reimbound_check,
    witness_digits,
)
from .radix import (
    Base,
    DigitSeq,
    DigitSet,
    EventuallyPeriodic,
    combine,
    digit_polynomial,
    encode_integer,
    evaluate,
    find_expansion,
    format_seq,
    has_unique_expansion,
    member,
    parse_seq,
)
from .selfsim import (
    IFS,
    GeneralClassification,
    SimilarityMap,
    TwoDigitClassification,
    admissible_words,
    classify_general,
    classify_two_digit,
    ifs_cylinder_words,
    ifs_dimension,
    intersection_cylinder_sets,
    minimal_digits,
    minimal_element,
    ssc_check,
    translate_ifs,
)
from .sep import (
    SepDecomposition,
    SetSeq,
    format_set_seq,
    max_additive_set,
    mono_sep_check,
    parse_set_seq,
    reconstruct,
    sep_decide_int,
    sep_decide_sets,
    sumset,
)
from .tiles import (
    KTile,
    admissible_tiles,
    cylinder_cover_bound,
    pairwise_disjoint,
    tiles_intersect,
    witness_point,
)

__version__ = "0.1.0"
