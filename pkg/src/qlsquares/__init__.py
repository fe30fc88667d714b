"""Exact construction, verification and search of quantum Latin squares."""
from .constructions import (
    FIXTURES,
    DirectSumLayout,
    build_direct_sum,
    build_from_classical,
    build_phi13,
    build_phi15,
    build_phi17,
    hadamard_pair,
    phi13_alphabet,
    phi13_layout,
)
from .errors import QLSError
from .linalg import (
    PhaseKey,
    StateVec,
    basis_vector,
    hadamard_rotate,
    inner_product,
    is_orthonormal_set,
    phase_equivalent,
    phase_key,
)
from .scalar import Scalar, format_scalar, parse_scalar
from .search import Dictionary, SearchConfig, SearchStats, dictionary_from_pairs, enumerate_qls
from .square import QLSquare, cardinality, is_classical, line_decomposition, verify

__version__ = "0.1.0"
