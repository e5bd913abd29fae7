"""Module for fuzzy soft set database."""
