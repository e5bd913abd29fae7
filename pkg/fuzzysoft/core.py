"""Fuzzy soft sets over finite universes, their lattice operations and the interchange format.

A fuzzy soft set is stored as a membership grid with one row per parameter and
one column per object. Object order is significant: the position of an object
is the integer used by the convexity predicates of :mod:`fuzzysoft.classify`.

.. autosummary::
    :toctree: core

    FuzzySoftSet
    SoftPoint
    ObjectProfile
    parse
    serialize
    load
    dump
    decode_json
    read_json
    union
    intersection
    complement
    profile
    soft_point
    subset_of
"""

import json
import logging
from collections.abc import Mapping
from functools import reduce
from pathlib import Path

import numpy as np
from traitlets import Tuple, Unicode
from traittypes import Array

from .abstract_traits import FrozenHasTraits

logger = logging.getLogger(__name__)

#: Two membership values are equal iff they differ by at most this amount.
TOLERANCE = 1e-9

#: Tolerance for comparisons against tables printed with two decimals.
PRINTED_TOLERANCE = 5e-3

#: Row label used for the per-object minimum in witnesses and reports.
PROFILE_LABEL = "∩-profile"


class FuzzySoftError(ValueError):
    """Base class of all domain errors raised by :mod:`fuzzysoft`."""


class MembershipError(FuzzySoftError):
    """Membership value outside [0, 1] or a grid of the wrong shape."""


class LabelError(FuzzySoftError):
    """Duplicate, unknown or mismatched object or parameter labels."""


class DocumentError(FuzzySoftError):
    """Malformed interchange document."""


def _labels(labels, kind):
    if isinstance(labels, str) or not all(isinstance(label, str) for label in labels):
        msg = f"{kind} labels must be a list of strings"
        raise LabelError(msg)
    labels = tuple(labels)
    if len(set(labels)) != len(labels):
        duplicates = sorted({label for label in labels if labels.count(label) > 1})
        msg = f"duplicate {kind} labels: {', '.join(duplicates)}"
        raise LabelError(msg)
    return labels


def _membership_array(values, shape=None):
    try:
        arr = np.array(values, dtype=float)
    except (TypeError, ValueError) as err:
        msg = f"membership grid is ragged or not numeric: {err}"
        raise MembershipError(msg) from err
    if shape is not None and arr.shape != shape:
        msg = f"membership grid has shape {arr.shape}, expected {shape}"
        raise MembershipError(msg)
    if not np.all(np.isfinite(arr)) or np.any(arr < 0.0) or np.any(arr > 1.0):
        bad = arr[~(np.isfinite(arr) & (arr >= 0.0) & (arr <= 1.0))]
        msg = f"membership values must lie in [0, 1], got {bad.tolist()}"
        raise MembershipError(msg)
    arr.flags.writeable = False
    return arr


class FuzzySoftSet(FrozenHasTraits):
    r"""Fuzzy soft set over a finite universe.

    Instances are immutable values; equal labels and equal grids compare equal
    and hash alike.

    Attributes
    ----------
    universe : tuple of str
        Ordered object labels :math:`h_1, \dots, h_m`.
    parameters : tuple of str
        Ordered parameter labels :math:`e_1, \dots, e_n`.
    grid : numpy.ndarray
        Read-only :math:`n \times m` membership grid,
        ``grid[i, t]`` :math:`= \mu_{F(e_i)}(h_t)`.

    Example
    --------
    >>> from fuzzysoft import FuzzySoftSet
    >>> K_A = FuzzySoftSet(
    ...     universe=["h1", "h2", "h3"],
    ...     parameters=["e1", "e2"],
    ...     grid=[[0.2, 1.0, 0.3], [0.1, 1.0, 0.2]])
    >>> K_A.shape
    (2, 3)
    """

    universe = Tuple()
    parameters = Tuple()
    grid = Array(dtype=float)

    def __init__(self, universe, parameters, grid):
        super().__init__()
        universe = _labels(universe, "object")
        parameters = _labels(parameters, "parameter")
        if not universe or not parameters:
            msg = "a fuzzy soft set needs at least one object and one parameter"
            raise MembershipError(msg)
        self.universe = universe
        self.parameters = parameters
        self.grid = _membership_array(grid, shape=(len(parameters), len(universe)))
        self._freeze()

    @property
    def shape(self):
        """Grid shape ``(parameters, objects)``."""
        return self.grid.shape

    def parameter_index(self, parameter):
        """Return the row index of ``parameter``."""
        try:
            return self.parameters.index(parameter)
        except ValueError:
            msg = f"unknown parameter {parameter!r}; known: {', '.join(self.parameters)}"
            raise LabelError(msg) from None

    def same_labels(self, other):
        """True if ``other`` has identical universe and parameter lists."""
        return self.universe == other.universe and self.parameters == other.parameters

    def like(self, grid):
        """Return a set with the labels of ``self`` and a new grid."""
        return FuzzySoftSet(self.universe, self.parameters, grid)

    def _derived(self, grid):
        """Like :meth:`like` for a grid computed from validated grids, known to lie in [0, 1]."""
        return FuzzySoftSet._trusted(self.universe, self.parameters, grid)

    @classmethod
    def _trusted(cls, universe, parameters, grid):
        """Build a set from label tuples and a grid in [0, 1] without validating them."""
        grid = np.array(grid, dtype=float)
        grid.flags.writeable = False
        return cls._from_validated(universe=universe, parameters=parameters, grid=grid)

    @classmethod
    def null(cls, universe, parameters):
        r"""Null fuzzy soft set :math:`\tilde{\phi}` (all memberships 0)."""
        return cls(universe, parameters, np.zeros((len(parameters), len(universe))))

    @classmethod
    def absolute(cls, universe, parameters):
        r"""Absolute fuzzy soft set :math:`\tilde{E}` (all memberships 1)."""
        return cls(universe, parameters, np.ones((len(parameters), len(universe))))

    def to_document(self):
        """Return the interchange document as a plain dictionary."""
        return {
            "universe": list(self.universe),
            "parameters": list(self.parameters),
            "memberships": self.grid.tolist(),
        }

    @classmethod
    def from_document(cls, document):
        """Build a set from an interchange document (a mapping)."""
        if not isinstance(document, Mapping):
            msg = "document must be a JSON object"
            raise DocumentError(msg)
        missing = [key for key in ("universe", "parameters", "memberships") if key not in document]
        if missing:
            msg = f"document lacks field(s): {', '.join(missing)}"
            raise DocumentError(msg)
        rows = document["memberships"]
        if not isinstance(rows, list) or not all(isinstance(row, list) for row in rows):
            msg = "'memberships' must be an array of rows"
            raise DocumentError(msg)
        for row in rows:
            for value in row:
                if isinstance(value, bool) or not isinstance(value, int | float):
                    msg = f"membership {value!r} is not a number"
                    raise DocumentError(msg)
        if len({len(row) for row in rows}) > 1:
            msg = f"ragged membership rows: lengths {[len(row) for row in rows]}"
            raise MembershipError(msg)
        for key in ("universe", "parameters"):
            if not isinstance(document[key], list):
                msg = f"'{key}' must be an array of strings"
                raise DocumentError(msg)
        return cls(document["universe"], document["parameters"], rows)

    def __eq__(self, other):
        if not isinstance(other, FuzzySoftSet):
            return NotImplemented
        return self.same_labels(other) and np.array_equal(self.grid, other.grid)

    def __hash__(self):
        return hash((self.universe, self.parameters, self.grid.tobytes()))

    def __repr__(self):
        rows = "; ".join(
            f"{e}: {[round(v, 4) for v in row]}"
            for e, row in zip(self.parameters, self.grid.tolist(), strict=True))
        return f"FuzzySoftSet({rows})"


class SoftPoint(FrozenHasTraits):
    r"""Single parameter row :math:`e_i(F_A)` of a fuzzy soft set.

    Attributes
    ----------
    parameter : str
        Label of the parameter the row belongs to.
    universe : tuple of str
        Object labels of the parent set.
    row : numpy.ndarray
        Read-only membership row.
    """

    parameter = Unicode()
    universe = Tuple()
    row = Array(dtype=float)

    def __init__(self, parameter, universe, row):
        super().__init__()
        self.parameter = parameter
        self.universe = _labels(universe, "object")
        self.row = _membership_array(row, shape=(len(self.universe),))
        self._freeze()


class ObjectProfile(FrozenHasTraits):
    r"""Per-object minimum over all parameter rows, :math:`\mu_{F(\cap_i e_i)}`.

    Attributes
    ----------
    universe : tuple of str
        Object labels.
    values : numpy.ndarray
        Read-only vector, ``values[t] = min_i grid[i, t]``.
    """

    universe = Tuple()
    values = Array(dtype=float)

    def __init__(self, universe, values):
        super().__init__()
        self.universe = _labels(universe, "object")
        self.values = _membership_array(values, shape=(len(self.universe),))
        self._freeze()


def _require_same_labels(*sets):
    first = sets[0]
    for other in sets[1:]:
        if other.universe != first.universe:
            msg = f"universes differ: {list(first.universe)} vs {list(other.universe)}"
            raise LabelError(msg)
        if other.parameters != first.parameters:
            msg = f"parameters differ: {list(first.parameters)} vs {list(other.parameters)}"
            raise LabelError(msg)


def parse(document):
    """Parse an interchange document (JSON text or mapping) into a :class:`FuzzySoftSet`.

    Parameters
    ----------
    document : str, bytes or mapping
        JSON object with fields ``universe``, ``parameters`` and ``memberships``.

    Returns
    -------
    FuzzySoftSet
    """
    if isinstance(document, str | bytes):
        document = decode_json(document)
    return FuzzySoftSet.from_document(document)


def decode_json(text):
    """Decode JSON text, raising :class:`DocumentError` when it is malformed."""
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        msg = f"not a JSON document: {err}"
        raise DocumentError(msg) from err


def read_json(path):
    """Read and decode a JSON file; see :func:`decode_json`."""
    path = Path(path)
    logger.debug("reading %s", path)
    try:
        return decode_json(path.read_text(encoding="utf-8"))
    except DocumentError as err:
        msg = f"{path.name}: {err}"
        raise DocumentError(msg) from err


def serialize(fs):
    """Return the JSON interchange text of ``fs``; :func:`parse` reverses it exactly."""
    return json.dumps(fs.to_document(), indent=2) + "\n"


def load(path):
    """Read a fuzzy soft set from a JSON file."""
    path = Path(path)
    logger.debug("loading fuzzy soft set from %s", path)
    return FuzzySoftSet.from_document(read_json(path))


def dump(fs, path):
    """Write ``fs`` as a JSON file, replacing any existing file."""
    Path(path).write_text(serialize(fs), encoding="utf-8")


def union(F, G):
    """Cell-wise maximum of two sets sharing universe and parameters."""
    _require_same_labels(F, G)
    return F._derived(np.maximum(F.grid, G.grid))


def intersection(F, G):
    """Cell-wise minimum of two sets sharing universe and parameters."""
    _require_same_labels(F, G)
    return F._derived(np.minimum(F.grid, G.grid))


def union_all(sets):
    """Union of a nonempty family of sets."""
    sets = list(sets)
    if not sets:
        msg = "union of an empty family"
        raise FuzzySoftError(msg)
    _require_same_labels(*sets)
    return reduce(union, sets)


def intersection_all(sets):
    """Intersection of a nonempty family of sets."""
    sets = list(sets)
    if not sets:
        msg = "intersection of an empty family"
        raise FuzzySoftError(msg)
    _require_same_labels(*sets)
    return reduce(intersection, sets)


def complement(F):
    """Cell-wise complement ``1 - value``."""
    return F._derived(1.0 - F.grid)


def profile(F):
    """Return the :class:`ObjectProfile` (column-wise minimum) of ``F``."""
    values = F.grid.min(axis=0)
    values.flags.writeable = False
    return ObjectProfile._from_validated(universe=F.universe, values=values)


def soft_point(F, parameter):
    """Return the :class:`SoftPoint` of ``F`` for ``parameter``."""
    return SoftPoint(parameter, F.universe, F.grid[F.parameter_index(parameter)])


def subset_of(F, G, tol=TOLERANCE):
    """True iff every cell of ``F`` is at most the matching cell of ``G``."""
    _require_same_labels(F, G)
    return bool(np.all(F.grid <= G.grid + tol))


def isclose(F, G, tol=TOLERANCE):
    """True iff ``F`` and ``G`` share labels and agree cell-wise within ``tol``."""
    return F.same_labels(G) and bool(np.all(np.abs(F.grid - G.grid) <= tol))
