"""Mapping instances.

Mappings:
    - MAP_4_22: identity object map h_i -> k_i; parameters e1, e3 -> e2' and e2 -> e1'.
    - MAP_4_23: same parameter map with the objects scrambled
      (h1 -> k3, h2 -> k5, h3 -> k1, h4 -> k2, h5 -> k4), which does not keep
      fuzzy soft numbers convex.

Attributes
----------
    MAPPINGS (dict): Mapping name to MappingSpec.
"""
import os

from fuzzysoft.analysis import MappingSpec
from fuzzysoft.core import read_json


def mapping_path(name):
    """Path of the JSON file holding the named mapping."""
    return os.path.join(os.path.dirname(__file__), f"{name}.json")


def load_mapping(name):
    """Load a named mapping from the database."""
    return MappingSpec.from_document(read_json(mapping_path(name)))


MAP_4_22 = load_mapping("map_4_22")
MAP_4_23 = load_mapping("map_4_23")

MAPPINGS = {
    "map_4_22": MAP_4_22,
    "map_4_23": MAP_4_23,
}
