"""Mappings between fuzzy soft classes and sequences of fuzzy soft numbers.

A mapping ``f = (p, q)`` pairs an object map ``p`` with a parameter map ``q``.
The image of a set takes, for each target cell, the maximum over all source
cells mapped onto it (0 if none is); the preimage substitutes
``f^-1(G)(e)(h) = G(q(e))(p(h))``.

Continuity checks are decided over the finite collection they are given: the
candidate deltas are the distance spectrum of that collection, the midpoints
between spectrum values, and epsilon itself. Sequence verdicts are relative
to the supplied prefix.

.. autosummary::
    :toctree: analysis

    MappingSpec
    image
    preimage
    is_number_preserving
    check_isometry
    check_continuity_at
    check_continuity
    check_uniform_continuity
    is_homeomorphism
    SequenceReport
    analyze_sequence
"""

import logging
import math
from collections.abc import Mapping

import numpy as np
from traitlets import Bool, Dict, Float, Integer, List, Tuple, Unicode

from .abstract_traits import FrozenHasTraits
from .classify import is_fuzzy_soft_number
from .core import TOLERANCE, DocumentError, FuzzySoftError, FuzzySoftSet, LabelError
from .metric import distance_matrix, distances_to

logger = logging.getLogger(__name__)


def _unique(values):
    return tuple(dict.fromkeys(values))


def _check_map(name, table, domain, codomain):
    if set(table) != set(domain):
        missing = [x for x in domain if x not in table]
        extra = [x for x in table if x not in domain]
        msg = f"{name} must be total on its source: missing {missing}, unexpected {extra}"
        raise LabelError(msg)
    outside = [y for y in table.values() if y not in codomain]
    if outside:
        msg = f"{name} maps outside its declared target: {outside}"
        raise LabelError(msg)


class MappingSpec(FrozenHasTraits):
    """Object map ``p`` and parameter map ``q`` between two fuzzy soft classes.

    Source labels default to the key order of ``p`` and ``q``; target labels
    default to their values in first-seen order.

    Attributes
    ----------
    p : dict
        Source object label to target object label.
    q : dict
        Source parameter label to target parameter label.
    source_universe, source_parameters : tuple of str
        Source labels, in grid order.
    target_universe, target_parameters : tuple of str
        Target labels, in grid order.
    p_injective, p_surjective, p_bijective, p_constant : bool
        Properties of ``p`` with respect to the declared target universe.
    p_order_preserving : bool
        ``p`` is a bijection that keeps object positions in increasing order.
    q_injective, q_surjective, q_bijective, q_constant : bool
        Properties of ``q`` with respect to the declared target parameters.
    is_number_mapping : bool
        ``p`` is an order preserving bijection, the reading used for mappings
        between classes of fuzzy soft numbers.
    """

    p = Dict()
    q = Dict()
    source_universe = Tuple()
    source_parameters = Tuple()
    target_universe = Tuple()
    target_parameters = Tuple()
    p_injective = Bool()
    p_surjective = Bool()
    p_bijective = Bool()
    p_constant = Bool()
    p_order_preserving = Bool()
    q_injective = Bool()
    q_surjective = Bool()
    q_bijective = Bool()
    q_constant = Bool()
    is_number_mapping = Bool()

    def __init__(self, p, q, source_universe=None, source_parameters=None,
                 target_universe=None, target_parameters=None):
        super().__init__()
        p, q = dict(p), dict(q)
        source_universe = tuple(source_universe or p)
        source_parameters = tuple(source_parameters or q)
        target_universe = tuple(target_universe or _unique(p[x] for x in source_universe if x in p))
        target_parameters = tuple(
            target_parameters or _unique(q[e] for e in source_parameters if e in q))
        _check_map("p", p, source_universe, target_universe)
        _check_map("q", q, source_parameters, target_parameters)
        self.p, self.q = p, q
        self.source_universe, self.source_parameters = source_universe, source_parameters
        self.target_universe, self.target_parameters = target_universe, target_parameters

        p_values = [p[x] for x in source_universe]
        q_values = [q[e] for e in source_parameters]
        self.p_injective = len(set(p_values)) == len(p_values)
        self.p_surjective = set(p_values) == set(target_universe)
        self.p_bijective = self.p_injective and self.p_surjective
        self.p_constant = len(set(p_values)) == 1
        positions = [target_universe.index(y) for y in p_values]
        self.p_order_preserving = self.p_bijective and positions == sorted(positions)
        self.q_injective = len(set(q_values)) == len(q_values)
        self.q_surjective = set(q_values) == set(target_parameters)
        self.q_bijective = self.q_injective and self.q_surjective
        self.q_constant = len(set(q_values)) == 1
        self.is_number_mapping = self.p_order_preserving
        self._freeze()

    @classmethod
    def identity(cls, universe, parameters):
        """Identity mapping on the given labels."""
        return cls({x: x for x in universe}, {e: e for e in parameters})

    @classmethod
    def from_document(cls, document):
        """Build a mapping from a ``map.json`` document.

        The document holds ``p`` and ``q`` label tables and may list
        ``source_universe``, ``source_parameters``, ``target_universe`` and
        ``target_parameters``.
        """
        if not isinstance(document, Mapping) or "p" not in document or "q" not in document:
            msg = "mapping document must be an object with 'p' and 'q' tables"
            raise DocumentError(msg)
        for key in ("p", "q"):
            table = document[key]
            if not isinstance(table, Mapping) or not all(
                    isinstance(k, str) and isinstance(v, str) for k, v in table.items()):
                msg = f"'{key}' must map labels to labels"
                raise DocumentError(msg)
        return cls(document["p"], document["q"],
                   source_universe=document.get("source_universe"),
                   source_parameters=document.get("source_parameters"),
                   target_universe=document.get("target_universe"),
                   target_parameters=document.get("target_parameters"))

    def to_document(self):
        return {
            "p": dict(self.p),
            "q": dict(self.q),
            "source_universe": list(self.source_universe),
            "source_parameters": list(self.source_parameters),
            "target_universe": list(self.target_universe),
            "target_parameters": list(self.target_parameters),
        }

    def flags(self):
        """All computed properties as a dictionary."""
        names = ("p_injective", "p_surjective", "p_bijective", "p_constant", "p_order_preserving",
                 "q_injective", "q_surjective", "q_bijective", "q_constant", "is_number_mapping")
        return {name: getattr(self, name) for name in names}


def _positions(labels, among, kind):
    try:
        return np.array([among.index(label) for label in labels], dtype=int)
    except ValueError:
        unknown = [label for label in labels if label not in among]
        msg = f"{kind} labels {unknown} are not in {list(among)}"
        raise LabelError(msg) from None


def image(f: MappingSpec, F: FuzzySoftSet, target_universe=None, target_parameters=None):
    """Image ``f(F)``: each target cell is the maximum over its preimage cells.

    Target cells with an empty preimage get membership 0.
    """
    target_universe = tuple(target_universe or f.target_universe)
    target_parameters = tuple(target_parameters or f.target_parameters)
    unmapped = [x for x in F.universe if x not in f.p] + [e for e in F.parameters if e not in f.q]
    if unmapped:
        msg = f"mapping does not cover labels {unmapped}"
        raise LabelError(msg)
    rows = _positions([f.q[e] for e in F.parameters], target_parameters, "target parameter")
    cols = _positions([f.p[x] for x in F.universe], target_universe, "target object")
    grid = np.zeros((len(target_parameters), len(target_universe)))
    np.maximum.at(grid, (rows[:, None], cols[None, :]), F.grid)
    return FuzzySoftSet(target_universe, target_parameters, grid)


def preimage(f: MappingSpec, G: FuzzySoftSet):
    """Inverse image ``f^-1(G)``, cell ``(e, h)`` taken from ``G`` at ``(q(e), p(h))``."""
    rows = _positions([f.q[e] for e in f.source_parameters], G.parameters, "parameter")
    cols = _positions([f.p[x] for x in f.source_universe], G.universe, "object")
    return FuzzySoftSet(f.source_universe, f.source_parameters, G.grid[np.ix_(rows, cols)])


class MappingReport(FrozenHasTraits):
    """Verdict of a mapping check over a finite collection.

    Attributes
    ----------
    check : str
        Name of the check.
    verdict : bool
        Whether the mapping passed.
    witness : dict
        Evidence of the first failure; empty on success.
    deltas : dict
        For continuity checks, the largest working delta per epsilon
        (``None`` if none works).
    collection_size : int
        Number of sets the verdict was decided over.
    notes : list of str
        Remarks such as skipped samples.
    """

    check = Unicode()
    verdict = Bool()
    witness = Dict()
    deltas = Dict()
    collection_size = Integer()
    notes = List(Unicode())

    def __init__(self, **kwargs):
        super().__init__(**kwargs)
        self._freeze()

    def __bool__(self):
        return self.verdict

    def to_document(self):
        doc = {"check": self.check, "verdict": self.verdict,
               "collection_size": self.collection_size}
        if self.witness:
            doc["witness"] = dict(self.witness)
        if self.deltas:
            doc["deltas"] = {f"{eps:g}": delta for eps, delta in self.deltas.items()}
        if self.notes:
            doc["notes"] = list(self.notes)
        return doc


def is_number_preserving(f: MappingSpec, samples):
    """Check that the image of every fuzzy soft number sample is a fuzzy soft number.

    Samples that are not fuzzy soft numbers are skipped and counted in the notes.
    """
    samples = list(samples)
    skipped = 0
    for index, F in enumerate(samples):
        if not is_fuzzy_soft_number(F):
            skipped += 1
            continue
        result = is_fuzzy_soft_number(image(f, F))
        if not result:
            return MappingReport(check="number_preserving", verdict=False,
                                 collection_size=len(samples),
                                 witness={"sample": index, **result.to_document()})
    notes = [f"skipped {skipped} sample(s) that are not fuzzy soft numbers"] if skipped else []
    return MappingReport(check="number_preserving", verdict=True,
                         collection_size=len(samples), notes=notes)


def check_isometry(f: MappingSpec, samples, tol=TOLERANCE):
    """Compare every pairwise source distance with the distance of the images."""
    samples = list(samples)
    if len(samples) > 1:
        D1 = distance_matrix(samples)
        D2 = distance_matrix([image(f, F) for F in samples])
        broken = np.argwhere(np.triu(np.abs(D1 - D2) > tol, k=1))
        if broken.size:
            i, j = (int(x) for x in broken[0])
            return MappingReport(check="isometry", verdict=False, collection_size=len(samples),
                                 witness={"pair": [i, j], "source": float(D1[i, j]),
                                          "image": float(D2[i, j])})
    return MappingReport(check="isometry", verdict=True, collection_size=len(samples))


def _transform(f, inverse):
    if inverse:
        return lambda G: preimage(f, G)
    return lambda F: image(f, F)


def _check_epsilons(epsilons):
    epsilons = [float(eps) for eps in epsilons]
    if not epsilons or any(eps <= 0.0 for eps in epsilons):
        msg = f"epsilons must be a nonempty list of positive numbers, got {epsilons}"
        raise ValueError(msg)
    return epsilons


def _candidate_deltas(spectrum, epsilon):
    points = np.unique(np.concatenate([[0.0], np.asarray(spectrum, dtype=float)]))
    midpoints = (points[:-1] + points[1:]) / 2.0
    candidates = np.concatenate([points, midpoints, [epsilon]])
    return np.unique(candidates[candidates > TOLERANCE])[::-1]


def _largest_delta(d1, d2, epsilon):
    """Largest candidate delta with ``d2 <= epsilon`` wherever ``d1 <= delta``."""
    for delta in _candidate_deltas(d1, epsilon):
        if np.all(d2[d1 <= delta + TOLERANCE] <= epsilon + TOLERANCE):
            return float(delta)
    if np.all(d2 <= epsilon + TOLERANCE):
        # no candidate above tolerance, any delta serves
        return float(epsilon)
    return None


def _deltas(d1, d2, epsilons):
    """Delta per epsilon and ``(epsilon, index)`` of the first failure, or None."""
    deltas, failure = {}, None
    for eps in epsilons:
        deltas[eps] = _largest_delta(d1, d2, eps)
        if deltas[eps] is None and failure is None:
            # the closest offending entry breaks every delta
            offending = np.flatnonzero(d2 > eps + TOLERANCE)
            if offending.size:
                failure = eps, int(offending[np.argmin(d1[offending])])
    return deltas, failure


def _continuity_report(name, d1, d2, epsilons, size):
    deltas, failure = _deltas(d1, d2, epsilons)
    witness = {}
    if failure is not None:
        eps, k = failure
        witness = {"epsilon": eps, "member": k,
                   "source_distance": float(d1[k]), "image_distance": float(d2[k])}
    return MappingReport(check=name, verdict=not witness, witness=witness, deltas=deltas,
                         collection_size=size)


def check_continuity_at(f: MappingSpec, F0: FuzzySoftSet, collection, epsilons, inverse=False):
    """Epsilon-delta continuity of ``f`` at ``F0`` over a finite collection.

    Parameters
    ----------
    f : MappingSpec
        The mapping.
    F0 : FuzzySoftSet
        Point of continuity, a member of ``collection``.
    collection : list of FuzzySoftSet
        Sets the quantifier over ``F`` ranges over.
    epsilons : list of float
        Positive tolerances to find a delta for.
    inverse : bool, optional
        Check the inverse-image transform ``G -> f^-1(G)`` instead of the image;
        ``F0`` and ``collection`` are then target-side sets.
    """
    collection = list(collection)
    if F0 not in collection:
        msg = "F0 is not a member of the collection"
        raise ValueError(msg)
    epsilons = _check_epsilons(epsilons)
    mapped = [_transform(f, inverse)(F) for F in collection]
    k0 = collection.index(F0)
    name = "inverse_continuity_at" if inverse else "continuity_at"
    return _continuity_report(name, distances_to(F0, collection), distances_to(mapped[k0], mapped),
                              epsilons, len(collection))


def check_continuity(f: MappingSpec, collection, epsilons, inverse=False):
    """Continuity of ``f`` at every member of ``collection``."""
    collection = list(collection)
    epsilons = _check_epsilons(epsilons)
    if collection:
        D1 = distance_matrix(collection)
        D2 = distance_matrix([_transform(f, inverse)(F) for F in collection])
        name = "inverse_continuity_at" if inverse else "continuity_at"
        for index in range(len(collection)):
            report = _continuity_report(name, D1[index], D2[index], epsilons, len(collection))
            if not report:
                return MappingReport(check="continuity", verdict=False,
                                     witness={"at": index, **report.witness},
                                     collection_size=len(collection))
    return MappingReport(check="continuity", verdict=True, collection_size=len(collection))


def check_uniform_continuity(f: MappingSpec, collection, epsilons, inverse=False):
    """Uniform continuity: one delta per epsilon must serve every pair of the collection."""
    collection = list(collection)
    epsilons = _check_epsilons(epsilons)
    mapped = [_transform(f, inverse)(F) for F in collection]
    rows, cols = np.triu_indices(len(collection), k=1)
    d1 = distance_matrix(collection)[rows, cols] if collection else np.zeros(0)
    d2 = distance_matrix(mapped)[rows, cols] if collection else np.zeros(0)
    deltas, failure = _deltas(d1, d2, epsilons)
    witness = {}
    if failure is not None:
        eps, k = failure
        witness = {"epsilon": eps, "pair": [int(rows[k]), int(cols[k])],
                   "source_distance": float(d1[k]), "image_distance": float(d2[k])}
    name = "inverse_uniform_continuity" if inverse else "uniform_continuity"
    return MappingReport(check=name, verdict=not witness, witness=witness, deltas=deltas,
                         collection_size=len(collection))


def is_homeomorphism(f: MappingSpec):
    """True iff the parameter map ``q`` is one-one and onto."""
    return f.q_bijective


class SequenceReport(FrozenHasTraits):
    """Finite-prefix evidence about a sequence of fuzzy soft sets.

    Indices are 1-based sequence positions. A property is reported consistent
    when it holds on a tail of at least half the prefix (at least two members).

    Attributes
    ----------
    prefix_length : int
        Number of members examined.
    epsilon : float
        Tolerance the Cauchy and convergence verdicts were decided at.
    bounded : bool
        Always true on a finite prefix; ``bound`` is the realized bound.
    bound : float
        Largest pairwise distance in the prefix.
    cauchy : bool
        Some tail has all pairwise distances at most ``epsilon``.
    cauchy_from : int or None
        Smallest such tail start ``N``.
    cauchy_witness : dict
        First violating pair ``(n, m)`` of the shortest admissible tail.
    convergent : bool or None
        Some tail lies within ``epsilon`` of the candidate limit; None without one.
    convergent_from : int or None
        Smallest such tail start ``N``.
    convergent_witness : dict
        First violating member of the shortest admissible tail.
    """

    prefix_length = Integer()
    epsilon = Float()
    bounded = Bool()
    bound = Float()
    cauchy = Bool()
    cauchy_from = Integer(allow_none=True, default_value=None)
    cauchy_witness = Dict()
    convergent = Bool(allow_none=True, default_value=None)
    convergent_from = Integer(allow_none=True, default_value=None)
    convergent_witness = Dict()

    def __init__(self, **kwargs):
        super().__init__(**kwargs)
        self._freeze()

    def to_document(self):
        doc = {
            "prefix_length": self.prefix_length,
            "epsilon": self.epsilon,
            "bounded": {"verdict": self.bounded, "bound": self.bound},
            "cauchy": {"verdict": self.cauchy, "from": self.cauchy_from},
            "note": "verdicts are consistent with the finite prefix; they are not proofs",
        }
        if self.cauchy_witness:
            doc["cauchy"]["witness"] = dict(self.cauchy_witness)
        if self.convergent is not None:
            doc["convergent"] = {"verdict": self.convergent, "from": self.convergent_from}
            if self.convergent_witness:
                doc["convergent"]["witness"] = dict(self.convergent_witness)
        return doc


def minimum_tail(prefix_length):
    """Shortest tail a sequence verdict may rest on."""
    return min(prefix_length, max(2, math.ceil(prefix_length / 2)))


def analyze_sequence(prefix, candidate_limit=None, epsilon=0.05):
    """Check boundedness, the Cauchy property and convergence on a finite prefix.

    Parameters
    ----------
    prefix : list of FuzzySoftSet
        First members of the sequence, sharing labels.
    candidate_limit : FuzzySoftSet, optional
        Limit to test convergence against.
    epsilon : float, optional
        Tolerance for the Cauchy and convergence verdicts.

    Returns
    -------
    SequenceReport
    """
    prefix = list(prefix)
    if not prefix:
        msg = "cannot analyze an empty prefix"
        raise FuzzySoftError(msg)
    L = len(prefix)
    D = distance_matrix(prefix)
    last_start = L - minimum_tail(L)  # 0-based start of the shortest admissible tail

    cauchy_from, cauchy_witness = None, {}
    for N in range(last_start + 1):
        if np.all(D[N:, N:] <= epsilon + TOLERANCE):
            cauchy_from = N + 1
            break
    else:
        n, m = (int(x) for x in np.argwhere(D[last_start:, last_start:] > epsilon + TOLERANCE)[0])
        n, m = sorted((n + last_start, m + last_start))
        cauchy_witness = {"n": n + 1, "m": m + 1, "distance": float(D[n, m])}

    convergent = convergent_from = None
    convergent_witness = {}
    if candidate_limit is not None:
        d = distances_to(candidate_limit, prefix)
        convergent = False
        for N in range(last_start + 1):
            if np.all(d[N:] <= epsilon + TOLERANCE):
                convergent, convergent_from = True, N + 1
                break
        else:
            n = last_start + int(np.argmax(d[last_start:] > epsilon + TOLERANCE))
            convergent_witness = {"n": n + 1, "distance": float(d[n])}

    logger.debug("analyzed prefix of %d sets at epsilon %g", L, epsilon)
    return SequenceReport(
        prefix_length=L,
        epsilon=float(epsilon),
        bounded=True,
        bound=float(D.max()),
        cauchy=cauchy_from is not None,
        cauchy_from=cauchy_from,
        cauchy_witness=cauchy_witness,
        convergent=convergent,
        convergent_from=convergent_from,
        convergent_witness=convergent_witness,
    )
