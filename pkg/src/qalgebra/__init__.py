"""Mod-2 free algebra on Q^i and its Steenrod and Dyer-Lashof quotients."""
from .errors import DomainError, GuardError, ParseError
from .expr import format_element, parse_element
from .freealg import (
    ONE,
    ZERO,
    append_right,
    augmentation,
    component_split,
    coproduct,
    element,
    is_primitive,
    iterated_coproduct,
    multiply,
    pad_left,
    primitive_x,
)
from .limitmaps import (
    LimitClass,
    lift,
    limit_inject,
    phi_R,
    phi_R_fast,
    phi_U_to_A2,
    pi,
    sq_claim_witnesses,
    stabilize,
)
from .nishida import DualGeneratorPower, sq_act, sq_act_dual
from .quotients import (
    Algebra,
    basis,
    basis_vector_I,
    basis_vector_J,
    is_admissible,
    madsen_compose,
    madsen_decompose,
    milnor_compose,
    milnor_decompose,
    milnor_primitive,
    normalize,
    u_decompose,
)
from .seqcore import INFINITE_EXCESS, binom_mod2, compare, compositions, excess, suffix
from .duality import DualMonomial, dual_coproduct_y, lambda_sequence, pair, pairing_matrix, poincare_series

__version__ = "0.1.0"
