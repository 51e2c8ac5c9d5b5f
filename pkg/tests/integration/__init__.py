"""Integration tests for jlkdist."""
