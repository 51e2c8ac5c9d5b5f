"""Unit tests for the geometry module."""
