# ABOUTME: Shared helpers for CSV formatting and parameter grids.
