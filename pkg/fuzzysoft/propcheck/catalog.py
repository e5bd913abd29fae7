"""Catalog of the numbered claims about fuzzy soft sets and numbers.

Each claim is a :class:`PropositionSpec`: a statement, the outcome it is
expected to have, a sampler producing inputs and a predicate deciding one
trial. Predicates are called as ``predicate(ctx, *inputs)`` and return None
when the trial agrees with the claim, :data:`SKIP` when the inputs do not meet
its hypothesis, or a short description of the violation.

Existence claims ("... is not necessarily ...") are stored as the universal
statement they refute and flagged ``existential``; a witness proves them.

.. autosummary::
    :toctree: catalog

    Expected
    PropositionSpec
    TrialContext
    catalog
    get
"""

import enum
import logging

import numpy as np
from traitlets import Bool, Callable, HasTraits, Instance, Unicode, UseEnum

from .. import arith
from ..analysis import (
    analyze_sequence,
    check_continuity,
    check_continuity_at,
    check_isometry,
    check_uniform_continuity,
    image,
    is_homeomorphism,
    is_number_preserving,
)
from ..arith import ArithResult, first_disagreement
from ..classify import is_concave, is_convex, is_fuzzy_soft_number, is_normalized, peak_indices
from ..core import TOLERANCE, FuzzySoftSet, complement, intersection, union
from ..database.mappings.db_mappings import MAP_4_22, MAP_4_23
from ..database.sets.db_sets import H_A, Q_A
from ..metric import diameter, distance, distance_to_complement
from .samplers import (
    ChainSampler,
    ConvexUnderConcaveSampler,
    MappingSampler,
    Sampler,
    SequenceSampler,
    SetSampler,
    sample_numbers,
)

logger = logging.getLogger(__name__)

#: Returned by a predicate whose hypothesis the inputs do not meet.
SKIP = object()

#: Epsilons for the continuity claims.
EPSILONS = (0.05, 0.1, 0.2, 0.4)


class Expected(enum.Enum):
    VERIFIED = "VERIFIED"
    FALSIFIABLE = "FALSIFIABLE"
    HOLDS_ON_DEFINED_CELLS = "HOLDS-ON-DEFINED-CELLS"
    HOLDS_WITH_RESTRICTION = "HOLDS-WITH-RESTRICTION"


class PropositionSpec(HasTraits):
    """One cataloged claim and the way it is checked.

    Attributes
    ----------
    id : str
        Stable identifier such as ``"P3.21.v"``.
    statement : str
        The claim in words.
    expected : Expected
        Outcome the claim is expected to have.
    restriction : str or None
        Name of the precondition under which a falsifiable claim still holds.
    sampler, predicate :
        Unrestricted inputs and their trial predicate.
    restricted_sampler, restricted_predicate :
        Inputs and predicate of the restricted claim.
    existential : bool
        The claim asserts existence; ``predicate`` tests its negation.
    seeds : callable or None
        Returns worked-example inputs tried before any search.
    """

    id = Unicode()
    statement = Unicode()
    expected = UseEnum(Expected)
    restriction = Unicode(allow_none=True, default_value=None)
    sampler = Instance(Sampler)
    predicate = Callable()
    restricted_sampler = Instance(Sampler, allow_none=True)
    restricted_predicate = Callable(allow_none=True, default_value=None)
    existential = Bool(default_value=False)
    seeds = Callable(allow_none=True, default_value=None)

    def seed_inputs(self):
        return list(self.seeds()) if self.seeds is not None else []


class TrialContext:
    """Per-trial state shared with a predicate.

    ``partial`` is set when a comparison had to skip cells that are defined on
    one side only, or when a result with undefined cells was used as a set.
    """

    def __init__(self):
        self.partial = False

    def compare(self, left, right, what):
        """Compare two sets or results on their mutually defined cells."""
        left = left if isinstance(left, ArithResult) else ArithResult.from_set(left)
        right = right if isinstance(right, ArithResult) else ArithResult.from_set(right)
        if not np.array_equal(left.defined, right.defined):
            self.partial = True
        cell = first_disagreement(left, right)
        if cell is None:
            return None
        return (f"{what}: {cell['left']:.4g} != {cell['right']:.4g} "
                f"at ({cell['parameter']}, {cell['object']})")

    def as_set(self, result):
        """Fill undefined cells of ``result`` with 0."""
        if not result.all_defined:
            self.partial = True
        return FuzzySoftSet._trusted(result.universe, result.parameters,
                                     np.where(result.defined, result.grid, 0.0))


def _null(F):
    return FuzzySoftSet.null(F.universe, F.parameters)


def _absolute(F):
    return FuzzySoftSet.absolute(F.universe, F.parameters)


def _failure(result, what):
    if result:
        return None
    return f"{what} is not {result.predicate}: {result.witness}"


def _numbers(*sets):
    return all(is_fuzzy_soft_number(F) for F in sets)


# closures under the lattice operations

def _intersection_of_convex(ctx, F, G):
    return _failure(is_convex(intersection(F, G)), "F ∩ G")


def _convex_chain(ctx, F, G):
    return (_failure(is_convex(union(F, G)), "F ∪ G")
            or _failure(is_convex(intersection(F, G)), "F ∩ G"))


def _union_of_convex(ctx, F, G):
    return _failure(is_convex(union(F, G)), "F ∪ G")


def _concave_closure(ctx, F, G):
    return (_failure(is_concave(intersection(F, G)), "F ∩ G")
            or _failure(is_concave(union(F, G)), "F ∪ G"))


def _complement_of_convex(ctx, F):
    return _failure(is_concave(complement(F)), "complement")


def _complement_of_number(ctx, F):
    if not is_fuzzy_soft_number(F):
        return SKIP
    return _failure(is_concave(complement(F)), "complement")


def _convex_under_concave(ctx, F, G):
    return (ctx.compare(union(F, G), G, "F ∪ G vs G")
            or ctx.compare(intersection(F, G), F, "F ∩ G vs F")
            or _failure(is_concave(union(F, G)), "F ∪ G")
            or _failure(is_convex(intersection(F, G)), "F ∩ G"))


def _common_peak(ctx, F):
    if not peak_indices(F):
        return "fuzzy soft number without a common peak object"
    return None


# arithmetic

def _undefined_where_both_zero(ctx, F, G):
    zero = np.maximum(F.grid, G.grid) <= 0.0
    for result in (arith.mul(F, G), arith.div(F, G)):
        if not np.array_equal(result.defined, ~zero):
            return f"{result.operation} mask does not match the cells where both memberships are 0"
    return None


def _closed_numbers(ctx, F, G):
    for op in ("add", "sub", "mul"):
        result = is_fuzzy_soft_number(ctx.as_set(arith.apply(op, F, G)))
        if not result:
            return f"{op} result is not a fuzzy soft number: {result.witness}"
    return None


def _closed_numbers_with_common_peak(ctx, F, G):
    if not set(peak_indices(F)) & set(peak_indices(G)):
        return SKIP
    return _closed_numbers(ctx, F, G)


def _identity(build):
    def predicate(ctx, *sets):
        left, right, what = build(*sets)
        return ctx.compare(left, right, what)
    return predicate


IDENTITIES_3_20 = {
    "i": ("F + G = G + F",
          lambda F, G: (arith.add(F, G), arith.add(G, F), "F + G vs G + F"), 2),
    "ii": ("F × G = G × F",
           lambda F, G: (arith.mul(F, G), arith.mul(G, F), "F × G vs G × F"), 2),
    "iii": ("F + φ = F",
            lambda F: (arith.add(F, _null(F)), F, "F + φ vs F"), 1),
    "iv": ("F × E = F",
           lambda F: (arith.mul(F, _absolute(F)), F, "F × E vs F"), 1),
    "v": ("F × φ = φ",
          lambda F: (arith.mul(F, _null(F)), _null(F), "F × φ vs φ"), 1),
    "vi": ("φ ÷ F = φ",
           lambda F: (arith.div(_null(F), F), _null(F), "φ ÷ F vs φ"), 1),
    "vii": ("F ÷ φ = E",
            lambda F: (arith.div(F, _null(F)), _absolute(F), "F ÷ φ vs E"), 1),
    "viii": ("F ÷ F = E",
             lambda F: (arith.div(F, F), _absolute(F), "F ÷ F vs E"), 1),
}

_U, _I = arith.union_results, arith.intersection_results

IDENTITIES_3_21 = {
    "i": ("(F + G) + H = F + (G + H)",
          lambda F, G, H: (arith.add(arith.add(F, G), H), arith.add(F, arith.add(G, H)), "associativity of +")),
    "ii": ("(F × G) × H = F × (G × H)",
           lambda F, G, H: (arith.mul(arith.mul(F, G), H), arith.mul(F, arith.mul(G, H)), "associativity of ×")),
    "iii": ("F + (G ∪ H) = (F + G) ∪ (F + H)",
            lambda F, G, H: (arith.add(F, union(G, H)), _U(arith.add(F, G), arith.add(F, H)), "+ over ∪")),
    "iv": ("F + (G ∩ H) = (F + G) ∩ (F + H)",
           lambda F, G, H: (arith.add(F, intersection(G, H)), _I(arith.add(F, G), arith.add(F, H)), "+ over ∩")),
    "v": ("F − (G ∪ H) = (F − G) ∩ (F − H)",
          lambda F, G, H: (arith.sub(F, union(G, H)), _I(arith.sub(F, G), arith.sub(F, H)), "− over ∪")),
    "vi": ("F − (G ∩ H) = (F − G) ∪ (F − H)",
           lambda F, G, H: (arith.sub(F, intersection(G, H)), _U(arith.sub(F, G), arith.sub(F, H)), "− over ∩")),
    "vii": ("(G ∪ H) − F = (G − F) ∪ (H − F)",
            lambda F, G, H: (arith.sub(union(G, H), F), _U(arith.sub(G, F), arith.sub(H, F)), "∪ under −")),
    "viii": ("(G ∩ H) − F = (G − F) ∩ (H − F)",
             lambda F, G, H: (arith.sub(intersection(G, H), F), _I(arith.sub(G, F), arith.sub(H, F)), "∩ under −")),
    "ix": ("F × (G ∪ H) = (F × G) ∪ (F × H)",
           lambda F, G, H: (arith.mul(F, union(G, H)), _U(arith.mul(F, G), arith.mul(F, H)), "× over ∪")),
    "x": ("F × (G ∩ H) = (F × G) ∩ (F × H)",
          lambda F, G, H: (arith.mul(F, intersection(G, H)), _I(arith.mul(F, G), arith.mul(F, H)), "× over ∩")),
    "xi": ("F ÷ (G ∪ H) = (F ÷ G) ∩ (F ÷ H)",
           lambda F, G, H: (arith.div(F, union(G, H)), _I(arith.div(F, G), arith.div(F, H)), "÷ over ∪")),
    "xii": ("F ÷ (G ∩ H) = (F ÷ G) ∪ (F ÷ H)",
            lambda F, G, H: (arith.div(F, intersection(G, H)), _U(arith.div(F, G), arith.div(F, H)), "÷ over ∩")),
    "xiii": ("(G ∪ H) ÷ F = (G ÷ F) ∪ (H ÷ F)",
             lambda F, G, H: (arith.div(union(G, H), F), _U(arith.div(G, F), arith.div(H, F)), "∪ under ÷")),
    "xiv": ("(G ∩ H) ÷ F = (G ÷ F) ∩ (H ÷ F)",
            lambda F, G, H: (arith.div(intersection(G, H), F), _I(arith.div(G, F), arith.div(H, F)), "∩ under ÷")),
}

EXPECTED_3_20 = dict.fromkeys(("i", "ii", "iii", "iv"), Expected.VERIFIED) | dict.fromkeys(
    ("v", "vi", "vii", "viii"), Expected.HOLDS_ON_DEFINED_CELLS)

EXPECTED_3_21 = dict.fromkeys(IDENTITIES_3_21, Expected.VERIFIED) | {
    "v": Expected.FALSIFIABLE,
    "vi": Expected.FALSIFIABLE,
    "ix": Expected.HOLDS_ON_DEFINED_CELLS,
    "xi": Expected.HOLDS_ON_DEFINED_CELLS,
    "xiii": Expected.HOLDS_ON_DEFINED_CELLS,
}


# distances and diameters

def _complement_at_distance_one(ctx, F):
    d = distance_to_complement(F)
    if abs(d - 1.0) > TOLERANCE:
        return f"distance to the complement is {d:.4g}"
    return None


def _normalized_complement_at_distance_one(ctx, F):
    if not is_normalized(F):
        return SKIP
    return _complement_at_distance_one(ctx, F)


def _chain_distances(ctx, H, M, L):
    d_lm, d_lh, d_mh = distance(L, M), distance(L, H), distance(M, H)
    if d_lm > d_lh + TOLERANCE or d_mh > d_lh + TOLERANCE:
        return f"d(L, M) = {d_lm:.4g}, d(M, H) = {d_mh:.4g} exceed d(L, H) = {d_lh:.4g}"
    return None


def _single_point_diameter(ctx, F):
    for i, e in enumerate(F.parameters):
        d = diameter(FuzzySoftSet._trusted(F.universe, (e,), F.grid[i:i + 1]))
        if d != 0.0:
            return f"soft point {e} has diameter {d:.4g}"
    return None


def _diameter_monotone(ctx, F, G):
    dF, dG = diameter(F), diameter(G)
    if dF > dG + TOLERANCE:
        return f"diameter {dF:.4g} of the subset exceeds {dG:.4g}"
    return None


def _diameter_of_union(ctx, F, G):
    if not np.any(intersection(F, G).grid > 0.0):
        return SKIP
    dF, dG, dU = diameter(F), diameter(G), diameter(union(F, G))
    if dU > max(dF, dG) + TOLERANCE:
        return f"diameter {dU:.4g} of the union exceeds max({dF:.4g}, {dG:.4g})"
    return None


# sequences

def _convergent_is_cauchy(ctx, prefix, limit, epsilon):
    report = analyze_sequence(prefix, limit, epsilon)
    if not report.convergent:
        return SKIP
    if not analyze_sequence(prefix, None, 2 * epsilon).cauchy:
        return f"convergent at {epsilon:g} from {report.convergent_from} but not Cauchy at {2 * epsilon:g}"
    return None


def _continuous_image_converges(ctx, prefix, limit, epsilon, f):
    continuity = check_continuity_at(f, limit, [*prefix, limit], [epsilon])
    delta = continuity.deltas[epsilon]
    if delta is None or not analyze_sequence(prefix, limit, delta).convergent:
        return SKIP
    mapped = analyze_sequence([image(f, F) for F in prefix], image(f, limit), epsilon)
    if not mapped.convergent:
        return f"image sequence does not converge at {epsilon:g}: {mapped.convergent_witness}"
    return None


def _uniform_image_is_cauchy(ctx, prefix, limit, epsilon, f):
    uniform = check_uniform_continuity(f, prefix, [epsilon])
    delta = uniform.deltas[epsilon]
    if delta is None or not analyze_sequence(prefix, None, delta).cauchy:
        return SKIP
    mapped = analyze_sequence([image(f, F) for F in prefix], None, epsilon)
    if not mapped.cauchy:
        return f"image sequence is not Cauchy at {epsilon:g}: {mapped.cauchy_witness}"
    return None


# mappings

def _non_number_mapping_breaks_numbers(ctx, f):
    if f.is_number_mapping:
        return SKIP
    numbers = sample_numbers(f)
    if is_number_preserving(f, numbers):
        return f"preserves all {len(numbers)} sample numbers although p is not an order preserving bijection"
    return None


def _bijection_is_isometry(ctx, f, F, G):
    if not (f.p_bijective and f.q_bijective):
        return SKIP
    report = check_isometry(f, [F, G])
    return None if report else f"distances change: {report.witness}"


def _inverse_image_continuous(ctx, f, G, twin):
    report = check_continuity_at(f, G, [G, twin], EPSILONS, inverse=True)
    return None if report else f"inverse image is not continuous: {report.witness}"


def _uniformly_continuous(ctx, f, F, twin):
    report = check_uniform_continuity(f, [F, twin], EPSILONS)
    return None if report else f"image is not uniformly continuous: {report.witness}"


def _uniform_implies_continuous(ctx, f, *sets):
    if not check_uniform_continuity(f, sets, EPSILONS):
        return SKIP
    report = check_continuity(f, sets, EPSILONS)
    return None if report else f"uniformly continuous but not continuous: {report.witness}"


def _bijection_is_homeomorphism(ctx, f):
    if not f.q_bijective:
        return SKIP
    return None if is_homeomorphism(f) else "one-one onto mapping is not a homeomorphism"


def _isometry_is_bijective(ctx, f, F, G):
    if not check_isometry(f, [F, G]):
        return SKIP
    return None if f.q_bijective else "isometry on the pair whose parameter map is not one-one onto"


def _isometry_is_homeomorphism(ctx, f, F, G):
    if not check_isometry(f, [F, G]):
        return SKIP
    return None if is_homeomorphism(f) else "isometry on the pair that is not a homeomorphism"


def _worked_isometry():
    return [(MAP_4_22, H_A, Q_A)]


def _worked_number_mappings():
    return [(MAP_4_22,), (MAP_4_23,)]


def _claims():
    yield PropositionSpec(
        id="T3.3", statement="the intersection of two convex fuzzy soft sets is convex",
        expected=Expected.VERIFIED,
        sampler=SetSampler(kind="convex", arity=2), predicate=_intersection_of_convex)
    yield PropositionSpec(
        id="T3.4", statement="for convex F ⊆ G, both F ∪ G and F ∩ G are convex",
        expected=Expected.VERIFIED,
        sampler=ChainSampler(kind="convex"), predicate=_convex_chain)
    yield PropositionSpec(
        id="T3.5", statement="a union of convex fuzzy soft sets need not be convex",
        expected=Expected.FALSIFIABLE, existential=True,
        sampler=SetSampler(kind="convex", arity=2), predicate=_union_of_convex)
    yield PropositionSpec(
        id="P3.8", statement="intersection and union of concave fuzzy soft sets are concave",
        expected=Expected.FALSIFIABLE,
        sampler=SetSampler(kind="concave", arity=2), predicate=_concave_closure)
    yield PropositionSpec(
        id="P3.9", statement="the complement of a convex fuzzy soft set is concave",
        expected=Expected.HOLDS_WITH_RESTRICTION, restriction="fuzzy soft number",
        sampler=SetSampler(kind="convex"), predicate=_complement_of_convex,
        restricted_sampler=SetSampler(kind="number"), restricted_predicate=_complement_of_number)
    yield PropositionSpec(
        id="P3.10", statement="for convex F ⊆ concave G, F ∪ G = G is concave and F ∩ G = F is convex",
        expected=Expected.VERIFIED,
        sampler=ConvexUnderConcaveSampler(), predicate=_convex_under_concave)
    yield PropositionSpec(
        id="P3.14", statement="a fuzzy soft number is normalized at a common object",
        expected=Expected.VERIFIED,
        sampler=SetSampler(kind="number"), predicate=_common_peak)
    yield PropositionSpec(
        id="P3.15", statement="the complement of a fuzzy soft number is concave",
        expected=Expected.VERIFIED,
        sampler=SetSampler(kind="number"), predicate=_complement_of_number)
    yield PropositionSpec(
        id="P3.18", statement="multiplication and division are undefined where both memberships are 0",
        expected=Expected.VERIFIED,
        sampler=SetSampler(kind="number", arity=2), predicate=_undefined_where_both_zero)
    yield PropositionSpec(
        id="P3.19", statement="sum, difference and product of fuzzy soft numbers are fuzzy soft numbers",
        expected=Expected.HOLDS_WITH_RESTRICTION, restriction="common peak",
        sampler=SetSampler(kind="number", arity=2), predicate=_closed_numbers,
        restricted_sampler=SetSampler(kind="number", arity=2, shared_peak=True),
        restricted_predicate=_closed_numbers_with_common_peak)
    for item, (statement, build, arity) in IDENTITIES_3_20.items():
        yield PropositionSpec(
            id=f"P3.20.{item}", statement=f"for fuzzy soft numbers, {statement}",
            expected=EXPECTED_3_20[item],
            sampler=SetSampler(kind="number", arity=arity), predicate=_identity(build))
    for item, (statement, build) in IDENTITIES_3_21.items():
        yield PropositionSpec(
            id=f"P3.21.{item}", statement=f"for fuzzy soft numbers, {statement}",
            expected=EXPECTED_3_21[item],
            sampler=SetSampler(kind="number", arity=3), predicate=_identity(build))
    yield PropositionSpec(
        id="P4.5", statement="a fuzzy soft number lies at distance 1 from its complement",
        expected=Expected.HOLDS_WITH_RESTRICTION, restriction="normalized",
        sampler=SetSampler(kind="any"), predicate=_complement_at_distance_one,
        restricted_sampler=SetSampler(kind="normalized"),
        restricted_predicate=_normalized_complement_at_distance_one)
    yield PropositionSpec(
        id="T4.6", statement="for H ⊆ M ⊆ L, d(L, M) and d(M, H) are at most d(L, H)",
        expected=Expected.VERIFIED,
        sampler=ChainSampler(arity=3), predicate=_chain_distances)
    yield PropositionSpec(
        id="P4.9", statement="the diameter of a soft point is 0",
        expected=Expected.VERIFIED,
        sampler=SetSampler(kind="any"), predicate=_single_point_diameter)
    yield PropositionSpec(
        id="T4.10", statement="F ⊆ G implies diameter(F) ≤ diameter(G)",
        expected=Expected.FALSIFIABLE,
        sampler=ChainSampler(), predicate=_diameter_monotone)
    yield PropositionSpec(
        id="T4.11", statement="for overlapping F, G the diameter of F ∪ G is at most max(diameter(F), diameter(G))",
        expected=Expected.VERIFIED,
        sampler=SetSampler(arity=2), predicate=_diameter_of_union)
    yield PropositionSpec(
        id="T4.19", statement="a convergent sequence of fuzzy soft numbers is Cauchy",
        expected=Expected.VERIFIED,
        sampler=SequenceSampler(), predicate=_convergent_is_cauchy)
    yield PropositionSpec(
        id="P4.23",
        statement="a mapping whose object map is not an order preserving bijection breaks some fuzzy soft number",
        expected=Expected.FALSIFIABLE,
        sampler=MappingSampler(), predicate=_non_number_mapping_breaks_numbers,
        seeds=_worked_number_mappings)
    yield PropositionSpec(
        id="T4.25", statement="a one-one onto mapping preserves distances",
        expected=Expected.VERIFIED,
        sampler=MappingSampler(arity=2, bijective=True), predicate=_bijection_is_isometry)
    yield PropositionSpec(
        id="P4.28", statement="the inverse image transform of a mapping is continuous",
        expected=Expected.FALSIFIABLE,
        sampler=MappingSampler(arity=2, side="target", twins=True), predicate=_inverse_image_continuous)
    yield PropositionSpec(
        id="T4.29", statement="a mapping continuous at the limit sends a convergent sequence to a convergent one",
        expected=Expected.VERIFIED,
        sampler=SequenceSampler(with_mapping=True), predicate=_continuous_image_converges)
    yield PropositionSpec(
        id="P4.32", statement="every mapping is uniformly continuous",
        expected=Expected.FALSIFIABLE,
        sampler=MappingSampler(arity=2, twins=True), predicate=_uniformly_continuous)
    yield PropositionSpec(
        id="T4.33", statement="a uniformly continuous mapping is continuous",
        expected=Expected.VERIFIED,
        sampler=MappingSampler(arity=3), predicate=_uniform_implies_continuous)
    yield PropositionSpec(
        id="T4.34", statement="a uniformly continuous mapping sends a Cauchy sequence to a Cauchy sequence",
        expected=Expected.VERIFIED,
        sampler=SequenceSampler(with_mapping=True), predicate=_uniform_image_is_cauchy)
    yield PropositionSpec(
        id="T4.36", statement="a one-one onto mapping is a homeomorphism",
        expected=Expected.VERIFIED,
        sampler=MappingSampler(), predicate=_bijection_is_homeomorphism)
    yield PropositionSpec(
        id="T4.38", statement="an isometry need not be one-one onto",
        expected=Expected.FALSIFIABLE, existential=True,
        sampler=MappingSampler(arity=2, kind="number"), predicate=_isometry_is_bijective,
        seeds=_worked_isometry)
    yield PropositionSpec(
        id="T4.39", statement="an isometry need not be a homeomorphism",
        expected=Expected.FALSIFIABLE, existential=True,
        sampler=MappingSampler(arity=2, kind="number"), predicate=_isometry_is_homeomorphism,
        seeds=_worked_isometry)


_CATALOG = None


def catalog():
    """All cataloged claims in a stable order."""
    global _CATALOG
    if _CATALOG is None:
        _CATALOG = tuple(_claims())
        ids = [spec.id for spec in _CATALOG]
        if len(set(ids)) != len(ids):
            msg = f"duplicate claim ids in catalog: {ids}"
            raise RuntimeError(msg)
    return list(_CATALOG)


def get(claim_id):
    """Look up one claim by id."""
    for spec in catalog():
        if spec.id == claim_id:
            return spec
    msg = f"unknown claim id {claim_id!r}"
    raise KeyError(msg)
