"""cwlpowers: componentwise linear powers through d-sequences on the Rees algebra."""

__version__ = "0.1.0"

from .polycore import MonomialOrder, ParseError, Poly, RingCtx, parse_poly  # noqa: E402
from .groebner import GroebnerBasis, Ideal, ResourceLimitExceeded, resource_limits  # noqa: E402
from .monomial import MonomialIdeal  # noqa: E402
from .rees import rees_ideal, x_condition  # noqa: E402
from .dseq import generic_d_sequence, is_d_sequence_on_rees  # noqa: E402
from .graphs import Graph, cover_ideal, is_chordal, is_cm_chordal  # noqa: E402
from .betti import betti_numbers, is_componentwise_linear  # noqa: E402

__all__ = [
    "MonomialOrder", "ParseError", "Poly", "RingCtx", "parse_poly",
    "GroebnerBasis", "Ideal", "ResourceLimitExceeded", "resource_limits",
    "MonomialIdeal", "rees_ideal", "x_condition",
    "generic_d_sequence", "is_d_sequence_on_rees",
    "Graph", "cover_ideal", "is_chordal", "is_cm_chordal",
    "betti_numbers", "is_componentwise_linear",
]
