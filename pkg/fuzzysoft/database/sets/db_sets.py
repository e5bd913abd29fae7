"""Fuzzy soft set instances.

This module contains the named fuzzy soft sets of the worked examples, loaded
from the JSON interchange files stored next to it.

Sets:
    - P_A (convex)
    - N_A (concave)
    - K_A (normalized, three objects)
    - F_A, G_A (fuzzy soft numbers used by the arithmetic tables)
    - L_A, M_A, H_A_prime (the chain H_A_prime <= M_A <= L_A)
    - H_A, Q_A (three parameters, source side of MAP_4_22)
    - H_B_prime (target side of MAP_4_22)

Attributes
----------
    SETS (dict): Set name to FuzzySoftSet, in the order above.
"""
import os

from fuzzysoft.core import load


def set_path(name):
    """Path of the JSON file holding the named set."""
    return os.path.join(os.path.dirname(__file__), f"{name}.json")


def load_set(name):
    """Load a named set from the database."""
    return load(set_path(name))


P_A = load_set("P_A")
N_A = load_set("N_A")
K_A = load_set("K_A")
F_A = load_set("F_A")
G_A = load_set("G_A")
L_A = load_set("L_A")
M_A = load_set("M_A")
H_A_prime = load_set("H_A_prime")
H_A = load_set("H_A")
H_B_prime = load_set("H_B_prime")
Q_A = load_set("Q_A")

SETS = {
    "P_A": P_A,
    "N_A": N_A,
    "K_A": K_A,
    "F_A": F_A,
    "G_A": G_A,
    "L_A": L_A,
    "M_A": M_A,
    "H_A_prime": H_A_prime,
    "H_A": H_A,
    "H_B_prime": H_B_prime,
    "Q_A": Q_A,
}
