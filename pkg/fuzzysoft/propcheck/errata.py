"""Cells of the printed worked-example tables that disagree with the formulas."""

import logging

import numpy as np

from ..analysis import image, preimage
from ..arith import OPERATIONS, apply
from ..core import PRINTED_TOLERANCE
from ..database.db_tables import PRINTED_ARITH, PRINTED_IMAGE, PRINTED_PREIMAGE
from ..database.mappings.db_mappings import MAP_4_22
from ..database.sets.db_sets import F_A, G_A, H_A, H_B_prime

logger = logging.getLogger(__name__)

#: Disagreements below this are attributed to two-decimal rounding.
ROUNDING_LIMIT = 2 * PRINTED_TOLERANCE


def compare_table(table, printed, computed, universe, parameters, operation=None):
    """Errata entries for every cell where ``printed`` and ``computed`` differ by more than 5e-3."""
    printed = np.asarray(printed, dtype=float)
    computed = np.asarray(computed, dtype=float)
    entries = []
    for i, t in np.argwhere(np.abs(printed - computed) > PRINTED_TOLERANCE):
        difference = abs(printed[i, t] - computed[i, t])
        entry = {
            "table": table,
            "parameter": parameters[i],
            "object": universe[t],
            "printed": float(printed[i, t]),
            "computed": round(float(computed[i, t]), 4),
            "kind": "rounding" if difference < ROUNDING_LIMIT else "typo",
        }
        if operation is not None:
            entry["operation"] = operation
        entries.append(entry)
    return entries


def errata():
    """All errata of the arithmetic, image and preimage tables, in table order."""
    entries = []
    for op in OPERATIONS:
        result = apply(op, F_A, G_A)
        entries += compare_table("arith", PRINTED_ARITH[op], result.grid,
                                 result.universe, result.parameters, operation=op)
    mapped = image(MAP_4_22, H_A)
    entries += compare_table("image", PRINTED_IMAGE, mapped.grid, mapped.universe, mapped.parameters)
    pulled = preimage(MAP_4_22, H_B_prime)
    entries += compare_table("preimage", PRINTED_PREIMAGE, pulled.grid, pulled.universe, pulled.parameters)
    logger.debug("found %d errata", len(entries))
    return entries
