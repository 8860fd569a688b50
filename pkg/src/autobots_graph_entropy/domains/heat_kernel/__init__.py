# ABOUTME: Heat-kernel trace of the diamond graph: direct level summation and pole-expansion asymptotics.

from autobots_graph_entropy.domains.heat_kernel.theta import theta_segment, theta_with_bound
from autobots_graph_entropy.domains.heat_kernel.trace import (
    HeatTraceResult,
    TraceMethod,
    decimation_residual,
    smooth_limit_trace,
    trace_asymptotic,
    trace_direct,
)

__all__ = [
    "HeatTraceResult",
    "TraceMethod",
    "decimation_residual",
    "smooth_limit_trace",
    "theta_segment",
    "theta_with_bound",
    "trace_asymptotic",
    "trace_direct",
]
