"""Cartier operators, a-numbers and kernel bounds for Artin-Schreier curves over F_p."""

__version__ = "0.1.0"

from .ascurve import ASCover, as_reduce, build_cover, g_minus_s  # noqa: E402
from .bounds import bounds_table, lower_bound_combined, sigma_p, upper_bound  # noqa: E402
from .cartier import build_matrix, cartier_Y, cover_profile, kernel_profile  # noqa: E402
from .regdiff import regular_basis, verify_regular  # noqa: E402
