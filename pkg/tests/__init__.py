"""Test suite for Perfect Solve."""
