"""Module for mapping database."""
