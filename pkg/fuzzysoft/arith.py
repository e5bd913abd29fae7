"""Addition, subtraction, multiplication and division of fuzzy soft sets.

The four operations act cell by cell on two sets sharing universe and
parameters::

    add  a + b - a*b
    sub  a * b
    mul  a * b / max(a, b)
    div  a / max(a, b)

Multiplication and division are undefined where ``max(a, b) == 0``. Such
cells are tracked by the ``defined`` mask of :class:`ArithResult` and hold
``nan`` in its grid. Operands may be fuzzy soft sets or earlier results; a
cell undefined in an operand stays undefined.

.. autosummary::
    :toctree: arith

    ArithResult
    add
    sub
    mul
    div
    to_fuzzy_soft_set
    union_results
    intersection_results
    first_disagreement
"""

import logging

import numpy as np
from traitlets import Tuple, Unicode
from traittypes import Array

from .abstract_traits import FrozenHasTraits
from .core import TOLERANCE, FuzzySoftError, FuzzySoftSet, LabelError, MembershipError

logger = logging.getLogger(__name__)

OPERATIONS = ("add", "sub", "mul", "div")


class UndefinedCellError(FuzzySoftError):
    """A result with undefined cells was used where a full set is required."""


class ArithResult(FrozenHasTraits):
    r"""Membership grid with a per-cell definedness mask.

    Attributes
    ----------
    operation : str
        Name of the producing operation, or ``"set"`` for a lifted set.
    universe : tuple of str
        Object labels.
    parameters : tuple of str
        Parameter labels.
    grid : numpy.ndarray
        Read-only membership grid; ``nan`` where undefined.
    defined : numpy.ndarray
        Read-only boolean mask of the same shape.
    """

    operation = Unicode()
    universe = Tuple()
    parameters = Tuple()
    grid = Array(dtype=float)
    defined = Array(dtype=bool)

    def __init__(self, operation, universe, parameters, grid, defined):
        super().__init__()
        grid = np.array(grid, dtype=float)
        defined = np.array(defined, dtype=bool)
        if grid.shape != (len(parameters), len(universe)) or defined.shape != grid.shape:
            msg = (f"result grid {grid.shape} and mask {defined.shape} do not match "
                   f"{len(parameters)} parameters x {len(universe)} objects")
            raise MembershipError(msg)
        grid[~defined] = np.nan
        grid.flags.writeable = False
        defined.flags.writeable = False
        self.operation = operation
        self.universe = tuple(universe)
        self.parameters = tuple(parameters)
        self.grid = grid
        self.defined = defined
        self._freeze()

    @classmethod
    def _trusted(cls, operation, universe, parameters, grid, defined):
        grid = np.where(defined, grid, np.nan)
        defined = np.array(defined, dtype=bool)
        grid.flags.writeable = False
        defined.flags.writeable = False
        return cls._from_validated(operation=operation, universe=universe, parameters=parameters,
                                   grid=grid, defined=defined)

    @classmethod
    def from_set(cls, F: FuzzySoftSet):
        """Lift a fuzzy soft set to a fully defined result."""
        return cls._trusted("set", F.universe, F.parameters, F.grid, np.ones(F.shape, dtype=bool))

    @property
    def all_defined(self):
        return bool(self.defined.all())

    def first_undefined(self):
        """``(parameter, object)`` of the first undefined cell in row-major order, or None."""
        cells = np.argwhere(~self.defined)
        if cells.size == 0:
            return None
        i, t = cells[0]
        return self.parameters[i], self.universe[t]

    def to_document(self):
        """Grid with ``null`` in undefined cells plus the mask."""
        return {
            "operation": self.operation,
            "universe": list(self.universe),
            "parameters": list(self.parameters),
            "memberships": [[float(v) if ok else None for v, ok in zip(row, mask, strict=True)]
                            for row, mask in zip(self.grid, self.defined, strict=True)],
            "defined": self.defined.tolist(),
        }


def _lift(X):
    if isinstance(X, ArithResult):
        return X
    if isinstance(X, FuzzySoftSet):
        return ArithResult.from_set(X)
    msg = f"expected a FuzzySoftSet or ArithResult, got {type(X).__name__}"
    raise TypeError(msg)


def _operands(X, Y):
    X, Y = _lift(X), _lift(Y)
    if X.universe != Y.universe:
        msg = f"universes differ: {list(X.universe)} vs {list(Y.universe)}"
        raise LabelError(msg)
    if X.parameters != Y.parameters:
        msg = f"parameters differ: {list(X.parameters)} vs {list(Y.parameters)}"
        raise LabelError(msg)
    defined = X.defined & Y.defined
    # zero-fill undefined operand cells so no nan reaches the arithmetic
    a = np.where(defined, X.grid, 0.0)
    b = np.where(defined, Y.grid, 0.0)
    return X, a, b, defined


def _result(operation, X, grid, defined):
    bad = defined & ((grid < -TOLERANCE) | (grid > 1.0 + TOLERANCE))
    if np.any(bad):
        msg = f"{operation} produced memberships outside [0, 1]: {grid[bad].tolist()}"
        raise MembershipError(msg)
    return ArithResult._trusted(operation, X.universe, X.parameters, np.clip(grid, 0.0, 1.0), defined)


def _quotient(numerator, a, b, defined):
    denominator = np.maximum(a, b)
    defined = defined & (denominator > 0.0)
    out = np.full(a.shape, np.nan)
    np.divide(numerator, denominator, out=out, where=defined)
    return out, defined


def add(F, G):
    """Probabilistic sum ``a + b - a*b``; defined wherever both operands are."""
    X, a, b, defined = _operands(F, G)
    return _result("add", X, a + b - a * b, defined)


def sub(F, G):
    """Product ``a * b``; defined wherever both operands are."""
    X, a, b, defined = _operands(F, G)
    return _result("sub", X, a * b, defined)


def mul(F, G):
    """Quotient ``a*b / max(a, b)``; undefined where both memberships are 0.

    Computed in quotient form. It agrees with ``min(a, b)`` on defined cells.
    """
    X, a, b, defined = _operands(F, G)
    grid, defined = _quotient(a * b, a, b, defined)
    return _result("mul", X, grid, defined)


def div(F, G):
    """Quotient ``a / max(a, b)``; undefined where both memberships are 0."""
    X, a, b, defined = _operands(F, G)
    grid, defined = _quotient(a, a, b, defined)
    return _result("div", X, grid, defined)


def apply(operation, F, G):
    """Dispatch to :func:`add`, :func:`sub`, :func:`mul` or :func:`div` by name."""
    try:
        func = {"add": add, "sub": sub, "mul": mul, "div": div}[operation]
    except KeyError:
        msg = f"unknown operation {operation!r}; expected one of {', '.join(OPERATIONS)}"
        raise ValueError(msg) from None
    return func(F, G)


def to_fuzzy_soft_set(r: ArithResult):
    """Strip the mask of a fully defined result.

    Raises
    ------
    UndefinedCellError
        Naming the first undefined ``(parameter, object)`` cell.
    """
    cell = r.first_undefined()
    if cell is not None:
        msg = f"{r.operation} result is undefined at ({cell[0]}, {cell[1]})"
        raise UndefinedCellError(msg)
    return FuzzySoftSet(r.universe, r.parameters, r.grid)


def union_results(X, Y):
    """Cell-wise maximum of two (partial) results; defined where both are."""
    R, a, b, defined = _operands(X, Y)
    return _result("union", R, np.maximum(a, b), defined)


def intersection_results(X, Y):
    """Cell-wise minimum of two (partial) results; defined where both are."""
    R, a, b, defined = _operands(X, Y)
    return _result("intersection", R, np.minimum(a, b), defined)


def first_disagreement(X, Y, tol=TOLERANCE):
    """First mutually defined cell where ``X`` and ``Y`` differ by more than ``tol``.

    Returns
    -------
    dict or None
        ``{"parameter", "object", "left", "right"}`` for the first differing
        cell in row-major order.
    """
    R, a, b, defined = _operands(X, Y)
    cells = np.argwhere(defined & (np.abs(a - b) > tol))
    if cells.size == 0:
        return None
    i, t = cells[0]
    return {
        "parameter": R.parameters[i],
        "object": R.universe[t],
        "left": float(a[i, t]),
        "right": float(b[i, t]),
    }
