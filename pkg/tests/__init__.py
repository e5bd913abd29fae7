"""Tests for the fuzzysoft package."""
