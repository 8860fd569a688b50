# ABOUTME: autobots-graph-entropy package root.
# ABOUTME: Spectral zeta, heat-trace and replica entropy computations on diamond-graph boundaries.

__version__ = "0.1.0"
