"""Distance between fuzzy soft sets and the metric notions built on it.

The distance of two sets is the Chebyshev distance between their intersection
profiles. It only sees profiles, so distinct sets may lie at distance 0: it is
a pseudometric on sets and a metric on profiles.

.. autosummary::
    :toctree: metric

    distance
    distances_to
    distance_matrix
    point_set_distance
    point_point_distance
    diameter
    distance_to_complement
    open_sphere
    closed_sphere
    is_neighborhood
    is_open
    check_metric_axioms
    AxiomReport
"""

import logging
from itertools import combinations

import numpy as np
from scipy.spatial.distance import cdist, chebyshev, pdist
from traitlets import Bool, Float, Instance, Integer, Tuple, Unicode

from .abstract_traits import FrozenHasTraits
from .core import TOLERANCE, FuzzySoftSet, LabelError, SoftPoint, complement

logger = logging.getLogger(__name__)

PSEUDOMETRIC = "pseudometric on sets / metric on profiles"


def _require_same_labels(F, G):
    if F.universe != G.universe or F.parameters != G.parameters:
        msg = (f"sets do not share labels: {list(F.universe)}/{list(F.parameters)} vs "
               f"{list(G.universe)}/{list(G.parameters)}")
        raise LabelError(msg)


def _require_same_universe(a, b):
    if a.universe != b.universe:
        msg = f"universes differ: {list(a.universe)} vs {list(b.universe)}"
        raise LabelError(msg)


def distance(F: FuzzySoftSet, G: FuzzySoftSet):
    """Chebyshev distance between the intersection profiles of ``F`` and ``G``."""
    _require_same_labels(F, G)
    return float(np.abs(F.grid.min(axis=0) - G.grid.min(axis=0)).max())


def _profile_stack(collection, like):
    for G in collection:
        _require_same_labels(like, G)
    return np.array([G.grid.min(axis=0) for G in collection]).reshape(len(collection), -1)


def distances_to(F: FuzzySoftSet, collection):
    """Distances from ``F`` to every member of ``collection``, as an array in collection order."""
    collection = list(collection)
    if not collection:
        return np.zeros(0)
    return cdist(F.grid.min(axis=0)[None, :], _profile_stack(collection, F), "chebyshev")[0]


def distance_matrix(collection):
    """Pairwise distances of a collection of sets sharing labels."""
    collection = list(collection)
    if not collection:
        return np.zeros((0, 0))
    P = _profile_stack(collection, collection[0])
    return cdist(P, P, "chebyshev")


def point_set_distance(pt: SoftPoint, G: FuzzySoftSet):
    """Chebyshev distance between a soft point row and the profile of ``G``."""
    _require_same_universe(pt, G)
    return float(np.abs(pt.row - G.grid.min(axis=0)).max())


def point_point_distance(p: SoftPoint, q: SoftPoint):
    """Chebyshev distance between two soft point rows."""
    _require_same_universe(p, q)
    return float(chebyshev(p.row, q.row))


def diameter(F: FuzzySoftSet):
    """Largest distance between two parameter rows of ``F``; 0 for one row."""
    if F.shape[0] < 2:
        return 0.0
    return float(pdist(F.grid, "chebyshev").max())


def distance_to_complement(F: FuzzySoftSet):
    """Distance between ``F`` and its complement.

    Equals 1 for every normalized set; other sets may be closer.
    """
    return distance(F, complement(F))


def _check_radius(r):
    if not 0.0 < r < 1.0:
        msg = f"radius must lie in (0, 1), got {r}"
        raise ValueError(msg)


def open_sphere(center: FuzzySoftSet, r, collection):
    """Members of ``collection`` strictly closer than ``r`` to ``center``, in collection order."""
    _check_radius(r)
    collection = list(collection)
    d = distances_to(center, collection)
    return [G for G, dG in zip(collection, d, strict=True) if dG < r - TOLERANCE]


def closed_sphere(center: FuzzySoftSet, r, collection):
    """Members of ``collection`` at distance at most ``r`` from ``center``."""
    _check_radius(r)
    collection = list(collection)
    d = distances_to(center, collection)
    return [G for G, dG in zip(collection, d, strict=True) if dG <= r + TOLERANCE]


class NeighborhoodResult(FrozenHasTraits):
    """Outcome of :func:`is_neighborhood`.

    Attributes
    ----------
    verdict : bool
        Whether some open sphere around the center lies inside the candidate.
    radius : float or None
        Largest scanned radius whose open sphere fits.
    """

    verdict = Bool()
    radius = Float(allow_none=True, default_value=None)

    def __init__(self, **kwargs):
        super().__init__(**kwargs)
        self._freeze()

    def __bool__(self):
        return self.verdict


def candidate_radii(values):
    """Radii in (0, 1) that realize every distinct open sphere over a distance spectrum.

    Open spheres only change at spectrum values, so the positive spectrum
    values below 1 plus the midpoints between consecutive values (and 0, 1)
    cover every case. Returned in decreasing order.
    """
    points = np.unique(np.concatenate([[0.0, 1.0], np.asarray(values, dtype=float)]))
    inner = points[(points > TOLERANCE) & (points < 1.0 - TOLERANCE)]
    midpoints = (points[:-1] + points[1:]) / 2.0
    midpoints = midpoints[(midpoints > 0.0) & (midpoints < 1.0)]
    return np.unique(np.concatenate([inner, midpoints]))[::-1]


def is_neighborhood(sub, center: FuzzySoftSet, collection):
    """Decide whether ``sub`` contains some open sphere around ``center``.

    Parameters
    ----------
    sub : list of FuzzySoftSet
        Candidate neighbourhood, a part of ``collection``.
    center : FuzzySoftSet
        Member of ``collection``.
    collection : list of FuzzySoftSet
        The finite space the spheres are taken in.

    Returns
    -------
    NeighborhoodResult
        With the largest scanned radius that works.
    """
    collection = list(collection)
    if center not in collection:
        msg = "center is not a member of the collection"
        raise ValueError(msg)
    members = set(sub)
    radii = candidate_radii(distances_to(center, collection))
    for r in radii:
        if all(G in members for G in open_sphere(center, r, collection)):
            logger.debug("open sphere of radius %.4f fits", r)
            return NeighborhoodResult(verdict=True, radius=float(r))
    return NeighborhoodResult(verdict=False)


def is_open(sub, collection):
    """True iff ``sub`` is a neighbourhood of each of its members."""
    collection = list(collection)
    return all(is_neighborhood(sub, F, collection) for F in sub)


class AxiomCheck(FrozenHasTraits):
    """Verdict of one metric axiom with the indices that break it.

    Attributes
    ----------
    name : str
        Axiom name.
    passed : bool
        Whether the axiom holds over the whole collection.
    witness : tuple of int
        Collection indices of the first violation (pair or triple).
    values : tuple of float
        Distances involved in the violation.
    """

    name = Unicode()
    passed = Bool()
    witness = Tuple()
    values = Tuple()

    def __init__(self, **kwargs):
        super().__init__(**kwargs)
        self._freeze()

    def __bool__(self):
        return self.passed

    def to_document(self, names=None):
        doc = {"passed": self.passed}
        if not self.passed:
            doc["witness"] = [names[i] if names else i for i in self.witness]
            doc["values"] = list(self.values)
        return doc


class AxiomReport(FrozenHasTraits):
    """Metric axioms evaluated over a finite collection.

    Identity is checked twice: at profile granularity, which the distance
    satisfies, and at set granularity, which it generally does not.

    Attributes
    ----------
    size : int
        Number of collection members.
    structure : str
        ``"metric"``, ``"pseudometric on sets / metric on profiles"`` or
        ``"not a metric"``.
    """

    nonnegativity = Instance(AxiomCheck)
    identity_on_profiles = Instance(AxiomCheck)
    identity_on_sets = Instance(AxiomCheck)
    symmetry = Instance(AxiomCheck)
    triangle = Instance(AxiomCheck)
    size = Integer()
    structure = Unicode()

    def __init__(self, **kwargs):
        super().__init__(**kwargs)
        self._freeze()

    def to_document(self, names=None):
        doc = {name: getattr(self, name).to_document(names) for name in AXIOMS}
        doc["size"] = self.size
        doc["structure"] = self.structure
        return doc


AXIOMS = ("nonnegativity", "identity_on_profiles", "identity_on_sets", "symmetry", "triangle")


def _pair_check(name, D, fails):
    for i, j in combinations(range(D.shape[0]), 2):
        if fails(i, j):
            return AxiomCheck(name=name, passed=False, witness=(i, j),
                              values=(float(D[i, j]), float(D[j, i])))
    return AxiomCheck(name=name, passed=True)


def check_metric_axioms(collection):
    """Evaluate the metric axioms over all pairs and triples of ``collection``.

    The triangle inequality is checked in its standard form
    ``d(F, H) <= d(F, G) + d(G, H)``.

    Returns
    -------
    AxiomReport
    """
    collection = list(collection)
    for G in collection[1:]:
        _require_same_labels(collection[0], G)
    n = len(collection)
    if n == 0:
        passed = {name: AxiomCheck(name=name, passed=True) for name in AXIOMS}
        return AxiomReport(**passed, size=0, structure="metric")
    profiles = np.array([F.grid.min(axis=0) for F in collection])
    grids = np.array([F.grid.ravel() for F in collection])
    D = cdist(profiles, profiles, "chebyshev")
    zero = D <= TOLERANCE
    same_profile = np.all(np.abs(profiles[:, None, :] - profiles[None, :, :]) <= TOLERANCE, axis=2)
    same_set = np.all(np.abs(grids[:, None, :] - grids[None, :, :]) <= TOLERANCE, axis=2)

    negative = np.argwhere(D < 0.0)
    if negative.size:
        i, j = negative[0]
        nonnegativity = AxiomCheck(name="nonnegativity", passed=False, witness=(int(i), int(j)),
                                   values=(float(D[i, j]),))
    else:
        nonnegativity = AxiomCheck(name="nonnegativity", passed=True)
    symmetry = _pair_check("symmetry", D, lambda i, j: abs(D[i, j] - D[j, i]) > TOLERANCE)
    identity_on_profiles = _pair_check(
        "identity_on_profiles", D, lambda i, j: zero[i, j] != same_profile[i, j])
    identity_on_sets = _pair_check(
        "identity_on_sets", D, lambda i, j: zero[i, j] != same_set[i, j])
    # d[i, k] <= d[i, j] + d[j, k] for all i, j, k
    slack = D[:, None, :] - (D[:, :, None] + D[None, :, :])
    broken = np.argwhere(slack > TOLERANCE)
    if broken.size:
        i, j, k = (int(x) for x in broken[0])
        triangle = AxiomCheck(name="triangle", passed=False, witness=(i, j, k),
                              values=(float(D[i, k]), float(D[i, j]), float(D[j, k])))
    else:
        triangle = AxiomCheck(name="triangle", passed=True)

    if not (nonnegativity and symmetry and triangle and identity_on_profiles):
        structure = "not a metric"
    elif identity_on_sets:
        structure = "metric"
    else:
        structure = PSEUDOMETRIC
    logger.info("checked metric axioms over %d sets: %s", n, structure)
    return AxiomReport(
        nonnegativity=nonnegativity,
        identity_on_profiles=identity_on_profiles,
        identity_on_sets=identity_on_sets,
        symmetry=symmetry,
        triangle=triangle,
        size=n,
        structure=structure,
    )
