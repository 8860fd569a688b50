# ABOUTME: Configuration package - settings and shared constants.
