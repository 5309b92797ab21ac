"""Nonlinearity of Boolean functions by three independent methods.

The distance from a function to the set of affine functions is computed
via the integer nonlinearity polynomial with fast evaluation, via the
fast Walsh transform, and via exhaustive affine search; the polynomial
ideals whose varieties encode these distances can be constructed, checked
for variety emptiness, and exported for external computer-algebra
systems.

Hot kernels run in a compiled extension when available, with a NumPy
fallback selected at import (see :mod:`boolnl._kernels`).
"""

from ._kernels import active_name as active_backend, available as available_backends, use as use_backend
from .bitfn import (
    N_MAX,
    AffineFunction,
    AnfForm,
    BooleanFunction,
    affine_anf,
    affine_from_anf,
    affine_table,
    anf_to_text,
    distance,
    evaluate,
    from_truth_table,
    index_to_point,
    parse_anf,
    parse_truth_table,
    point_to_index,
    truth_table_bits,
    truth_table_hex,
    weight,
)
from .errors import (
    BoolnlError,
    CapExceeded,
    DimensionMismatch,
    LimitExceeded,
    NotBooleanValued,
    NotPowerOfTwo,
    OutOfRange,
    ParseError,
    TooLarge,
    VariableOutOfRange,
)
from .ideals import (
    IdealSpec,
    build_J_ideal,
    build_N_ideal,
    enumerate_J_generators,
    export_ideal,
    nonlinearity_via_J,
    nonlinearity_via_N,
    variety_nonempty_J,
    variety_nonempty_N,
)
from .nlpoly import (
    DistanceVector,
    NlPolynomial,
    complement_nlp,
    eval_multilinear,
    evaluate_all,
    nl_polynomial_direct,
    nl_polynomial_fast,
    nlp_to_text,
    xor_expand,
)
from .nonlinearity import (
    BRUTE_N_MAX,
    NlReport,
    covering_bound,
    nonlinearity_brute,
    nonlinearity_nlp,
    nonlinearity_walsh,
)
from .transforms import (
    NnfForm,
    WalshSpectrum,
    from_anf,
    nnf_to_table,
    nnf_to_text,
    to_anf,
    to_nnf,
    walsh,
)

__version__ = "0.1.0"
