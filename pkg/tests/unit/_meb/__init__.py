"""Unit tests for the meb module."""
