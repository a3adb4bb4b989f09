"""Exact algebra for the output feedback Hopf algebra and Devlin's polynomials."""

from .abel import (
    BlowUpError,
    InputPair,
    PolyFunction,
    abel_numeric,
    fliess_eval,
    fliess_polynomial,
    iterated_integral,
    return_map_coeffs,
)
from .antipode import (
    antipode,
    antipode_direct,
    antipode_generator,
    antipode_left,
    antipode_right,
    compose,
    evaluate,
    feedback,
    feedback_fixpoint,
    group_inverse,
    group_inverse_fixpoint,
    group_product,
    mod_compose,
    unity_feedback,
)
from .devlin import (
    DevlinPolynomial,
    check_degree_scaling,
    devlin_antipode,
    devlin_antipode_recursion,
    devlin_closed,
    devlin_coeff_closed,
    devlin_recursive,
    lie_coeff,
    theta_hat,
)
from .hopf import (
    HElement,
    TensorElement,
    big_theta_coproduct,
    coproduct,
    deshuffle,
    full_coproduct,
    reduced_coproduct,
    tilde_coproduct,
)
from .parsing import ParseError, parse_h, parse_poly, parse_series, parse_word
from .series import Series, cat, ferfera, shuffle, shuffle_series
from .words import EMPTY, X0, X1, Word, degree, format_word, words_of_degree, words_up_to_degree

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
