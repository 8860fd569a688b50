# ABOUTME: Euler Gamma function for complex arguments.
# ABOUTME: Lanczos approximation (g=7, 9 terms) with reflection for Re z < 1/2.

import cmath
import math
from typing import TypeAlias

from autobots_graph_entropy.common.errors import PoleError, PrecisionError
from autobots_graph_entropy.configs.constants import POLE_GUARD

ComplexValue: TypeAlias = complex

_LANCZOS_G = 7.0
_LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_TWO_PI = 0.5 * math.log(2.0 * math.pi)


def sin_pi(z: complex) -> complex:
    """sin(pi*z) with the argument reduced by the nearest integer first.

    Keeps full relative precision next to the integers, where the reflection
    formula divides by this value.
    """
    n = round(z.real)
    value = cmath.sin(math.pi * (z - n))
    return -value if n % 2 else value


def _check_pole(z: complex) -> None:
    n = round(z.real)
    if n <= 0 and abs(z - n) < POLE_GUARD:
        raise PoleError(f"Gamma has a pole at {n}; argument {z} is within {POLE_GUARD:g}")


def _ensure_finite(value: complex, z: complex) -> complex:
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise PrecisionError(f"Gamma({z}) is not representable in double precision")
    return value


def _lanczos_log(z: complex) -> complex:
    # Not the principal branch of log Gamma; only ever exponentiated.
    z -= 1.0
    series = _LANCZOS_COEFFS[0]
    for k, coeff in enumerate(_LANCZOS_COEFFS[1:], start=1):
        series += coeff / (z + k)
    t = z + _LANCZOS_G + 0.5
    return _HALF_LOG_TWO_PI + (z + 0.5) * cmath.log(t) - t + cmath.log(series)


def gamma_complex(z: ComplexValue) -> ComplexValue:
    """Euler Gamma function.

    Relative error stays below 1e-10 for |Im z| <= 40 and 0.1 <= |z| <= 50.

    Raises:
        PoleError: z lies within 1e-12 of a non-positive integer.
    """
    z = complex(z)
    _check_pole(z)
    if z.real < 0.5:
        value = math.pi / (sin_pi(z) * gamma_complex(1.0 - z))
    else:
        try:
            value = cmath.exp(_lanczos_log(z))
        except OverflowError as exc:
            raise PrecisionError(f"Gamma({z}) overflows double precision") from exc
    return _ensure_finite(value, z)
