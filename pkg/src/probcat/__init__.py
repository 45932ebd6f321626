"""Exact finite probability spaces organised as a category.

Arrows ``X -> Y`` are named by null-preserving measurable functions ``Y -> X``.
Conditional expectation along an arrow is a contravariant functor on
almost-sure classes; measurability, independence and completion are defined
relative to arrows.  Carriers are finite and every number is a Fraction, so
all the laws hold with exact equality.
"""

from .binomial import (
    GeneralizedFiltration,
    asset_price,
    backward_induction_oracle,
    binomial_cond_exp,
    count_ones,
    risk_neutral_p,
    space_at,
    truncation_arrow,
)
from .category import (
    ZERO,
    ProbArrow,
    ae_equal_arrows,
    boundedness,
    chi_embed,
    compose,
    compose_rv,
    identity,
    initial_arrow,
    is_measure_preserving,
    mk_arrow,
    pushforward,
    split,
)
from .completion import complete_arrow, complete_space
from .errors import (
    BadIndices,
    HorizonExceeded,
    InvalidGenerator,
    InvalidP,
    InvalidSpace,
    NotCoarser,
    NotMeasurable,
    NullViolation,
    ProbCatError,
    SpaceMismatch,
)
from .expectation import (
    cond_exp,
    functor_E_map,
    functor_L_map,
    stabilization_index,
    unconditional,
)
from .independence import (
    ProductSpace,
    ValueSpace,
    are_independent,
    factorizes,
    independence_witness,
    is_independent_of,
    product,
    value_space,
)
from .measurability import is_f_measurable
from .spaces import (
    AeClass,
    Partition,
    ProbabilitySpace,
    RandomVariable,
    ae_equal,
    ae_le,
    as_rational,
    canonical,
    expectation,
    generate_sigma,
    integrate,
    is_measurable_set,
)

__version__ = "0.1.0"
