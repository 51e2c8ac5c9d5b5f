"""Tests for jlkdist."""
