# ABOUTME: Command-line surface: deterministic CSV tables and SVG figures for every computation.
