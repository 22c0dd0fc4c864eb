"""spl: exact computations with symbolic powers of line and point configuration ideals."""

__version__ = "0.1.0"

from .errors import SplError  # noqa: F401
from .polyring import MonomialOrder, Polynomial, RingSpec  # noqa: F401
from .polyexpr import parse_poly, print_poly  # noqa: F401
