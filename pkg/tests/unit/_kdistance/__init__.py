"""Unit tests for the kdistance module."""
