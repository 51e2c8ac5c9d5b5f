"""Unit tests for the persistence module."""
