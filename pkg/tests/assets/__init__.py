"""Test assets for jlkdist tests."""
