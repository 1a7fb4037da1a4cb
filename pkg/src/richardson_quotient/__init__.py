"""Exact symbolic checks for torus quotients of Richardson varieties in G(r, qr+1)."""

from .errors import (CertificateError, DimensionError, DomainError,
                     NotDivisibleError, SearchLimitExceeded, ShapeError)
from .polynomial import SparsePoly, divide_exact, parse, to_text, var
from .quotient import (build_coordinates, identify_quotient, independence_check,
                       realize_product, segre_consistency)
from .tableau import YoungTableau, build_gamma, enumerate_A, sequences_of_gamma
from .weyl import GrassmannianContext

__version__ = "0.1.0"
