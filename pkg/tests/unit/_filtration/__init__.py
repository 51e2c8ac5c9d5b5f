"""Unit tests for the filtration module."""
