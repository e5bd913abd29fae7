"""Printed result tables of the worked examples.

The tables are kept as printed, with two decimals, so that computed values
can be compared against them. Where a printed cell disagrees with the formula
it is listed as an erratum by :mod:`fuzzysoft.propcheck.errata`.

Attributes
----------
    PRINTED_ARITH (dict): Operation name to the printed F_A (op) G_A grid.
    PRINTED_IMAGE (list): Printed image of H_A under MAP_4_22.
    PRINTED_PREIMAGE (list): Printed preimage of H_B_prime under MAP_4_22.
"""

PRINTED_ARITH = {
    "add": [
        [0.10, 0.92, 1.00, 0.92, 0.10],
        [0.37, 0.97, 1.00, 0.96, 0.10],
    ],
    "sub": [
        [0.00, 0.48, 1.00, 0.48, 0.00],
        [0.03, 0.63, 1.00, 0.64, 0.00],
    ],
    "mul": [
        [0.00, 0.60, 1.00, 0.60, 0.00],
        [0.10, 0.70, 1.00, 0.80, 0.00],
    ],
    "div": [
        [0.00, 0.75, 1.00, 1.00, 1.00],
        [0.34, 0.78, 1.00, 1.00, 1.00],
    ],
}

PRINTED_IMAGE = [
    [0.1, 0.7, 1.0, 0.8, 0.0],
    [0.3, 0.9, 1.0, 0.8, 0.2],
]

PRINTED_PREIMAGE = [
    [0.1, 0.6, 1.0, 0.7, 0.0],
    [0.2, 0.8, 1.0, 0.8, 0.0],
    [0.1, 0.6, 1.0, 0.7, 0.0],
]
