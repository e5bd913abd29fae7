"""Convexity, concavity, normalization and the fuzzy-soft-number predicate.

Convexity is discrete quasiconcavity over object positions: a row ``v`` is
convex if ``v[t] >= min(v[t1], v[t2])`` for every ``t1 < t < t2``. A set is
convex when every parameter row and its intersection profile are convex.
Failing predicates return the lexicographically first violation as a witness.

.. autosummary::
    :toctree: classify

    ClassificationResult
    Classification
    is_convex
    is_concave
    is_normalized
    is_fuzzy_soft_number
    classify
"""

import logging
from functools import cache

import numpy as np
from traitlets import Bool, Instance, List, Tuple, Unicode

from .abstract_traits import FrozenHasTraits
from .core import PROFILE_LABEL, TOLERANCE, FuzzySoftSet

logger = logging.getLogger(__name__)

FINITE_UNIVERSE_NOTES = (
    "upper semi-continuity: trivially satisfied (finite universe)",
    "compact support: trivially satisfied (finite universe)",
)


class ClassificationResult(FrozenHasTraits):
    """Verdict of one classification predicate.

    Attributes
    ----------
    predicate : str
        ``"convex"``, ``"concave"``, ``"normalized"`` or ``"number"``.
    verdict : bool
        Outcome of the predicate.
    row : str or None
        Parameter label or ``"∩-profile"`` holding the violation.
    indices : tuple of int
        0-based object positions of the violation: ``(t1, t, t2)`` for
        convexity and concavity, ``(t,)`` (the row maximum) for normalization.
    objects : tuple of str
        Object labels at ``indices``.
    values : tuple of float
        Memberships at ``indices``; re-evaluating them reproduces the violation.
    peaks : tuple of int
        Object positions where the intersection profile attains 1 (numbers only).
    notes : list of str
        Free-form remarks for verbose output.
    """

    predicate = Unicode()
    verdict = Bool()
    row = Unicode(allow_none=True, default_value=None)
    indices = Tuple()
    objects = Tuple()
    values = Tuple()
    peaks = Tuple()
    notes = List(Unicode())

    def __init__(self, **kwargs):
        super().__init__(**kwargs)
        if not self.verdict and self.row is None:
            msg = f"a failing {self.predicate!r} result needs a witness"
            raise ValueError(msg)
        self._freeze()

    def __bool__(self):
        return self.verdict

    @property
    def witness(self):
        """Witness as a dictionary, or None for a passing result."""
        if self.row is None:
            return None
        return {
            "row": self.row,
            "indices": list(self.indices),
            "objects": list(self.objects),
            "values": list(self.values),
        }

    def to_document(self):
        doc = {"predicate": self.predicate, "verdict": self.verdict}
        if self.row is not None:
            doc["witness"] = self.witness
        if self.predicate == "number" and self.verdict:
            doc["peaks"] = list(self.peaks)
        if self.notes:
            doc["notes"] = list(self.notes)
        return doc


class Classification(FrozenHasTraits):
    """All four verdicts for one fuzzy soft set."""

    convex = Instance(ClassificationResult)
    concave = Instance(ClassificationResult)
    normalized = Instance(ClassificationResult)
    number = Instance(ClassificationResult)

    def __init__(self, **kwargs):
        super().__init__(**kwargs)
        self._freeze()

    def to_document(self):
        return {name: getattr(self, name).to_document()
                for name in ("convex", "concave", "normalized", "number")}


def quasiconcave_violation(values, tol=TOLERANCE):
    """Return the first ``(t1, t, t2)`` with ``v[t] < min(v[t1], v[t2]) - tol``, or None.

    Triples are ordered lexicographically.
    """
    v = np.asarray(values, dtype=float)
    if v.size < 3:
        return None
    # prefix/suffix maxima decide existence in linear time
    left = np.maximum.accumulate(v)[:-2]
    right = np.maximum.accumulate(v[::-1])[::-1][2:]
    if not np.any(v[1:-1] < np.minimum(left, right) - tol):
        return None
    m = v.size
    for t1 in range(m - 2):
        for t in range(t1 + 1, m - 1):
            if v[t] >= v[t1] - tol:
                continue
            for t2 in range(t + 1, m):
                if v[t] < v[t2] - tol:
                    return t1, t, t2
    return None


def quasiconvex_violation(values, tol=TOLERANCE):
    """Return the first ``(t1, t, t2)`` with ``v[t] > max(v[t1], v[t2]) + tol``, or None."""
    return quasiconcave_violation(-np.asarray(values, dtype=float), tol)


@cache
def _passed(predicate):
    return ClassificationResult(predicate=predicate, verdict=True)


def _rows_with_profile(F):
    yield from zip(F.parameters, F.grid, strict=True)
    yield PROFILE_LABEL, F.grid.min(axis=0)


def _triple_predicate(F, name, find, tol):
    for label, row in _rows_with_profile(F):
        triple = find(row, tol)
        if triple is not None:
            logger.debug("%s fails on %s at %s", name, label, triple)
            return ClassificationResult(
                predicate=name,
                verdict=False,
                row=label,
                indices=triple,
                objects=tuple(F.universe[t] for t in triple),
                values=tuple(float(row[t]) for t in triple),
            )
    return _passed(name)


def is_convex(F: FuzzySoftSet, tol=TOLERANCE):
    """Decide whether every row and the intersection profile of ``F`` are quasiconcave.

    Sets with one or two objects are always convex.

    Returns
    -------
    ClassificationResult
        Witness ``(t1, t, t2)`` with ``values[1] < min(values[0], values[2])``
        on failure.
    """
    return _triple_predicate(F, "convex", quasiconcave_violation, tol)


def is_concave(F: FuzzySoftSet, tol=TOLERANCE):
    """Dual of :func:`is_convex`: rows and profile must be quasiconvex."""
    return _triple_predicate(F, "concave", quasiconvex_violation, tol)


def is_normalized(F: FuzzySoftSet, tol=TOLERANCE):
    """Decide whether every row and the intersection profile attain membership 1.

    The witness of a failure is the first row lacking a 1, reported at its
    maximum.
    """
    for label, row in _rows_with_profile(F):
        t = int(np.argmax(row))
        if row[t] < 1.0 - tol:
            return ClassificationResult(
                predicate="normalized",
                verdict=False,
                row=label,
                indices=(t,),
                objects=(F.universe[t],),
                values=(float(row[t]),),
            )
    return _passed("normalized")


def peak_indices(F: FuzzySoftSet, tol=TOLERANCE):
    """Object positions where the intersection profile of ``F`` attains 1."""
    return tuple(int(t) for t in np.flatnonzero(F.grid.min(axis=0) >= 1.0 - tol))


def is_fuzzy_soft_number(F: FuzzySoftSet, tol=TOLERANCE):
    """Decide whether ``F`` is a fuzzy soft number (convex and normalized).

    Upper semi-continuity and compact support hold for every set over a finite
    universe and are only reported in ``notes``. A passing result lists the
    common peak positions in ``peaks``.
    """
    for check in (is_convex, is_normalized):
        result = check(F, tol)
        if not result:
            return ClassificationResult(
                predicate="number",
                verdict=False,
                row=result.row,
                indices=result.indices,
                objects=result.objects,
                values=result.values,
                notes=[f"not {result.predicate}", *FINITE_UNIVERSE_NOTES],
            )
    return ClassificationResult(
        predicate="number",
        verdict=True,
        peaks=peak_indices(F, tol),
        notes=list(FINITE_UNIVERSE_NOTES),
    )


def classify(F: FuzzySoftSet, tol=TOLERANCE):
    """Evaluate all four predicates on ``F``."""
    return Classification(
        convex=is_convex(F, tol),
        concave=is_concave(F, tol),
        normalized=is_normalized(F, tol),
        number=is_fuzzy_soft_number(F, tol),
    )
