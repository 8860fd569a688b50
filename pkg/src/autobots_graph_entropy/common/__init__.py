# ABOUTME: Shared code used across all domains (errors, formatting, grids).
