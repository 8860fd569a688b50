# ABOUTME: Figure-reproduction and smooth-limit checks over wide parameter ranges.
# ABOUTME: Marked sanity; deselect with -m "not sanity".

import math

import numpy as np
import pytest

from autobots_graph_entropy.common.utils.grids import decimation_grid, log_grid
from autobots_graph_entropy.configs.constants import SMOOTH_LIMIT_AREA, SMOOTH_LIMIT_TILDE
from autobots_graph_entropy.domains.entropy import (
    correction_coefficients,
    correction_terms,
    entropy_tilde,
    oscillation_amplitude,
)
from autobots_graph_entropy.domains.graph_model import make_graph
from autobots_graph_entropy.domains.heat_kernel import trace_direct
from autobots_graph_entropy.domains.spectral_zeta import (
    line_segment_zeta,
    pole_tower,
    residue_ratio,
    smooth_limit_bracket,
    spectral_area,
    zeta_bracket,
    zeta_closed,
    zeta_zero,
)

pytestmark = pytest.mark.sanity


def test_entropy_prefactor_increases_over_main_panel():
    """Test the dimensionless entropy rises strictly for every l in [3, 10^4]."""
    values = [entropy_tilde(make_graph(decimation)) for decimation in decimation_grid(3, 10**4)]
    assert all(a < b for a, b in zip(values, values[1:], strict=False))
    assert values[0] == pytest.approx(0.71, abs=0.02)
    assert values[-1] < SMOOTH_LIMIT_TILDE


def test_entropy_prefactor_inset_approaches_asymptote():
    """Test the log-spaced inset range keeps rising towards sqrt(pi)/(2 ln 2)."""
    grid = decimation_grid(10**3, 10**8, 40)
    values = [entropy_tilde(make_graph(decimation)) for decimation in grid]
    assert all(a < b for a, b in zip(values, values[1:], strict=False))
    assert SMOOTH_LIMIT_TILDE - values[-1] < SMOOTH_LIMIT_TILDE - values[0]
    assert abs(SMOOTH_LIMIT_TILDE - 1.28) < 5e-3


def test_correction_prefactors_fall_with_order():
    """Test the oscillation amplitude decreases with n at every l in [3, 200]."""
    for decimation in decimation_grid(3, 200):
        graph = make_graph(decimation)
        amplitudes = [oscillation_amplitude(graph, n) for n in (1, 2, 3, 4)]
        assert all(a > b for a, b in zip(amplitudes, amplitudes[1:], strict=False)), decimation


def test_peak_prefactors_fall_with_order():
    """Test max over l in [3, 200] of |Pi_c(n)| and |Pi_s(n)| decreases from n = 1 to 4."""
    graphs = [make_graph(decimation) for decimation in decimation_grid(3, 200)]
    peaks_c = []
    peaks_s = []
    for n in (1, 2, 3, 4):
        coefficients = [correction_coefficients(graph, n) for graph in graphs]
        peaks_c.append(max(abs(c.pi_c) for c in coefficients))
        peaks_s.append(max(abs(c.pi_s) for c in coefficients))
    assert all(a > b for a, b in zip(peaks_c, peaks_c[1:], strict=False))
    assert all(a > b for a, b in zip(peaks_s, peaks_s[1:], strict=False))


def test_first_residue_ratio_from_trace_oscillation(graph3):
    """Test Delta_1 recovered by fitting the direct trace's log-periodic wiggle."""
    times = np.asarray(log_grid(1e-5, 1e-2, 40))
    tower = pole_tower(graph3, 3)
    direct = np.asarray([trace_direct(graph3, float(t)).value for t in times])
    envelope = tower.spectral_area * times ** (-graph3.d_s / 2.0)
    wiggle = (direct - tower.zeta0) / envelope - 1.0
    log_t = np.log(times)
    columns = []
    for n in (1, 2, 3):
        phase = tower.frequency(n) * log_t
        columns.extend((np.cos(phase), np.sin(phase)))
    fit, *_ = np.linalg.lstsq(np.column_stack(columns), wiggle, rcond=None)
    expected = residue_ratio(graph3, 1)
    assert abs(complex(fit[0], fit[1]) - expected) <= 1e-4 * abs(expected)


def test_spectral_area_smooth_limit():
    """Test A_s creeps up to the limiting area."""
    gaps = [
        (SMOOTH_LIMIT_AREA - spectral_area(make_graph(decimation))) / SMOOTH_LIMIT_AREA
        for decimation in (10**4, 10**8, 10**12, 10**50)
    ]
    assert all(gap > 0.0 for gap in gaps)
    assert all(a > b for a, b in zip(gaps, gaps[1:], strict=False))
    assert gaps[2] < 0.05


def test_zeta_smooth_limit_regimes():
    """Test the bracket tends to 1/2 below Re s = 1/2 and to 1 above it."""
    graph = make_graph(10**12)
    for s in (0.2, 0.3 + 1j):
        ratio = zeta_closed(graph, s) / (2.0 * line_segment_zeta(s))
        assert abs(ratio - smooth_limit_bracket(s)) < 1e-3
    for s in (0.8, 1.5 - 2j):
        assert abs(zeta_bracket(graph, s) - smooth_limit_bracket(s)) < 1e-3
    assert zeta_zero(graph) == pytest.approx(-0.5, abs=1e-12)
    assert graph.d_s == pytest.approx(1.0, abs=0.03)


def test_cutoff_dependence_weakens_at_large_l():
    """Test the n = 1 correction varies less over eps in [0.01, 0.1] at huge l than at l = 3."""
    cutoffs = log_grid(0.01, 0.1, 25)

    def spread(decimation: int) -> float:
        graph = make_graph(decimation)
        values = [correction_terms(graph, epsilon, 1)[0].value for epsilon in cutoffs]
        return max(values) - min(values)

    small, huge = spread(3), spread(10**300)
    assert huge < small
    assert huge == pytest.approx(0.0046, rel=0.1)
    assert small == pytest.approx(2.0 * oscillation_amplitude(make_graph(3), 1), rel=0.05)


def test_residue_ratio_keeps_finite_limit():
    """Test Delta_1 does not vanish as l grows."""
    limit = 2.0 * math.log(2.0) / complex(math.log(2.0), 2.0 * math.pi)
    magnitudes = [
        abs(residue_ratio(make_graph(decimation), 1)) for decimation in (10**50, 10**300)
    ]
    assert all(value == pytest.approx(abs(limit), rel=0.1) for value in magnitudes)
