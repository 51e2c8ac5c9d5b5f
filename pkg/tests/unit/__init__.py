"""Unit tests for jlkdist."""
