# ABOUTME: Independent high-precision oracles (mpmath) shared by the test suites.

import math

import mpmath


_DPS = 40


def relative_error(value: complex, expected: complex) -> float:
    return abs(value - expected) / abs(expected)


def mp_zeta_closed(decimation: int, s: complex) -> complex:
    """2 zeta_R(2s) pi^-2s (1 - l^(1-2s)) / (1 - 2 l^(1-2s)) at 40 digits."""
    with mpmath.workdps(_DPS):
        s_mp = mpmath.mpc(s)
        x = mpmath.power(decimation, 1 - 2 * s_mp)
        value = (
            2 * mpmath.zeta(2 * s_mp) * mpmath.power(mpmath.pi, -2 * s_mp) * (1 - x) / (1 - 2 * x)
        )
        return complex(value)


def mp_spectral_dimension(decimation: int) -> mpmath.mpf:
    return mpmath.log(2 * decimation) / mpmath.log(decimation)


def mp_spectral_area(decimation: int) -> float:
    with mpmath.workdps(_DPS):
        d_s = mp_spectral_dimension(decimation)
        value = (
            mpmath.zeta(d_s)
            * mpmath.gamma(d_s / 2)
            * mpmath.power(mpmath.pi, -d_s)
            / (2 * mpmath.log(decimation))
        )
        return float(value)


def mp_residue_ratio(decimation: int, n: int) -> complex:
    """2 Res_n / Res_0 of zeta(s) Gamma(s) at the poles s_n."""
    with mpmath.workdps(_DPS):
        d_s = mp_spectral_dimension(decimation)

        def residue(k: int) -> mpmath.mpc:
            s_k = mpmath.mpc(d_s / 2, mpmath.pi * k / mpmath.log(decimation))
            return mpmath.zeta(2 * s_k) * mpmath.gamma(s_k) * mpmath.power(mpmath.pi, -2 * s_k)

        return complex(2 * residue(n) / residue(0))


def mp_theta(t: float) -> float:
    """Plain summation until the terms drop below 1e-45."""
    with mpmath.workdps(_DPS):
        rate = mpmath.pi**2 * mpmath.mpf(t)
        terms = []
        n = 1
        while True:
            term = mpmath.exp(-rate * n * n)
            if term < mpmath.mpf("1e-45"):
                break
            terms.append(term)
            n += 1
        return float(mpmath.fsum(terms))


def mp_heat_trace(decimation: int, t: float) -> float:
    """sum_k m_k theta(t l^2k) with m_0 = 2, m_k = (2l)^k."""
    with mpmath.workdps(_DPS):
        total = mpmath.mpf(0)
        level = 0
        while True:
            multiplicity = 2 if level == 0 else (2 * decimation) ** level
            scaled = mpmath.mpf(t) * mpmath.mpf(decimation) ** (2 * level)
            if mpmath.log(multiplicity) - mpmath.pi**2 * scaled < -110:
                break
            total += multiplicity * mpmath.mpf(mp_theta(float(scaled)))
            level += 1
        return float(total)


def smooth_limit_tilde() -> float:
    return math.sqrt(math.pi) / (2.0 * math.log(2.0))
