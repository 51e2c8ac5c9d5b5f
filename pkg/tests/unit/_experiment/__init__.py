"""Unit tests for the experiment module."""
