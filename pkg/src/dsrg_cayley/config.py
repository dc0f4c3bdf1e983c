"""Size caps and tolerance policy shared across the package.

Every exactness-critical decision in this package is made with integer
arithmetic; the tolerances below only govern numeric character/eigenvalue
reporting and the screening rules that are allowed to be numeric.
"""

from __future__ import annotations

import math
import os

# Ceiling on |A| for elementwise enumeration. Overridable through the
# DSRG_MAX_ORDER environment variable.
DEFAULT_MAX_ORDER = 1 << 20

# Dense matrix work (adjacency oracle, cached multiplication tables, numeric
# spectra) is refused above this graph order.
MATRIX_CAP = 4096

# Group-algebra vectors are dense numpy arrays up to this carrier order and
# sparse maps above it.
DENSE_ALGEBRA_CAP = 4096

# The brute census refuses candidate spaces larger than this many (X, Y)
# pairs.
DEFAULT_PAIR_CAP = 1 << 26

# Numeric character comparisons use CHAR_TOL_SCALE * |A| unless overridden.
CHAR_TOL_SCALE = 1e-8

# Eigenvalue multiplicities are grouped at this absolute tolerance after
# sorting by real then imaginary part.
EIG_GROUP_TOL = 1e-6


def max_order() -> int:
    """Element-enumeration order cap; DSRG_MAX_ORDER overrides the default."""
    raw = os.environ.get("DSRG_MAX_ORDER")
    if raw is None:
        return DEFAULT_MAX_ORDER
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"DSRG_MAX_ORDER must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ValueError(f"DSRG_MAX_ORDER must be positive, got {value}")
    return value


def char_tolerance(order: int, override: float | None = None) -> float:
    """Tolerance for character-sum comparisons on a group of a given order."""
    return CHAR_TOL_SCALE * order if override is None else float(override)


def coefficient_bound(order: int) -> int:
    """Largest |coefficient| whose convolutions stay inside int64.

    A convolution coefficient is a sum of at most ``order`` products of two
    input coefficients, so ``order * bound**2 <= 2**63 - 1`` guarantees no
    overflow.
    """
    return math.isqrt((2**63 - 1) // max(order, 1))
