"""Signed linear-extension counts, lexicographic sums, and order-chromatic polynomials."""

from ._accel import backend_name
from .errors import (
    CycleError, DefectError, DuplicateAbscissa, LabelCollision, NonPolynomial,
    NotAChain, NotIncomparable, Overflow, ParseError, PosetError,
    PreconditionViolated, UnknownElement,
)
from .hochschild import (
    FreeExpression, FreeMonomial, ad_ar_power, coefficient_cross_check,
    expand_ar_power, hochschild_residual, verify_lemma_gph,
)
from .lexsum import (
    AntichainSum, ChainSizesQuery, ChainSum, Leaf, LexSumSpec, L_chain_substitution,
    antichain_L_minus, antichain_L_plus, factor_L, floor_theorem_L_minus,
    is_series_parallel, lex_sum, parse_sp, pascal_arrays, sp_evaluate, sp_to_poset,
)
from .linearization import (
    GroupRingElement, Linearization, enumerate_linearizations, group_ring_L,
    group_ring_multiply, imbalance_via_bicoloring, stanley_balance_test,
)
from .orderchrom import (
    OrderChromResult, chromatic_number, count_maps, order_chromatic_polynomial,
    verify_divisibility,
)
from .polynomials import MultiPoly, UniPoly, interpolate, multi_fit, parity_split_fit
from .poset import (
    ConstraintSystem, Poset, antichain_poset, bicolorings, chain_poset,
    connected_components, leq, maximal_chains, poset_from_covers,
)
from .strengthen import (
    StrengtheningResult, criterion_c, strengthen_felsner, strengthen_iterative,
    strengthen_pair,
)

__version__ = "0.1.0"
