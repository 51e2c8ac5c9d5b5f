"""Unit tests for the projection module."""
