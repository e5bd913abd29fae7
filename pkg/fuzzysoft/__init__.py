# ------------------------------------------------------------------------------
# fuzzysoft
# ------------------------------------------------------------------------------

"""The fuzzysoft library: fuzzy soft sets, fuzzy soft numbers and their metric analysis."""

from .abstract_traits import ABCHasTraits, FrozenHasTraits
from .analysis import (
                       MappingReport,
                       MappingSpec,
                       SequenceReport,
                       analyze_sequence,
                       check_continuity,
                       check_continuity_at,
                       check_isometry,
                       check_uniform_continuity,
                       image,
                       is_homeomorphism,
                       is_number_preserving,
                       preimage,
)
from .arith import ArithResult, UndefinedCellError, add, div, mul, sub, to_fuzzy_soft_set
from .classify import (
                       Classification,
                       ClassificationResult,
                       classify,
                       is_concave,
                       is_convex,
                       is_fuzzy_soft_number,
                       is_normalized,
)
from .core import (
                   DocumentError,
                   FuzzySoftError,
                   FuzzySoftSet,
                   LabelError,
                   MembershipError,
                   ObjectProfile,
                   SoftPoint,
                   complement,
                   intersection,
                   parse,
                   profile,
                   serialize,
                   soft_point,
                   subset_of,
                   union,
)
from .metric import (
                     AxiomReport,
                     check_metric_axioms,
                     closed_sphere,
                     diameter,
                     distance,
                     distance_matrix,
                     distance_to_complement,
                     distances_to,
                     is_neighborhood,
                     is_open,
                     open_sphere,
                     point_point_distance,
                     point_set_distance,
)

__all__ = ["ABCHasTraits",
           "FrozenHasTraits",
           "FuzzySoftSet",
           "SoftPoint",
           "ObjectProfile",
           "FuzzySoftError",
           "MembershipError",
           "LabelError",
           "DocumentError",
           "UndefinedCellError",
           "parse",
           "serialize",
           "union",
           "intersection",
           "complement",
           "profile",
           "soft_point",
           "subset_of",
           "Classification",
           "ClassificationResult",
           "classify",
           "is_convex",
           "is_concave",
           "is_normalized",
           "is_fuzzy_soft_number",
           "ArithResult",
           "add",
           "sub",
           "mul",
           "div",
           "to_fuzzy_soft_set",
           "AxiomReport",
           "distance",
           "distances_to",
           "distance_matrix",
           "point_set_distance",
           "point_point_distance",
           "diameter",
           "distance_to_complement",
           "open_sphere",
           "closed_sphere",
           "is_neighborhood",
           "is_open",
           "check_metric_axioms",
           "MappingSpec",
           "MappingReport",
           "SequenceReport",
           "image",
           "preimage",
           "is_number_preserving",
           "check_isometry",
           "check_continuity_at",
           "check_continuity",
           "check_uniform_continuity",
           "is_homeomorphism",
           "analyze_sequence",
           ]
