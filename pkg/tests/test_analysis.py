"""Tests for mappings, continuity checks and the sequence analyzer."""

import numpy as np
import pytest

from fuzzysoft import (
    DocumentError,
    FuzzySoftError,
    FuzzySoftSet,
    LabelError,
    MappingSpec,
    analyze_sequence,
    check_continuity,
    check_continuity_at,
    check_isometry,
    check_uniform_continuity,
    distance,
    image,
    is_convex,
    is_homeomorphism,
    is_number_preserving,
    preimage,
)
from fuzzysoft.analysis import minimum_tail
from fuzzysoft.database.db_tables import PRINTED_IMAGE
from fuzzysoft.database.mappings.db_mappings import MAP_4_22, MAP_4_23
from fuzzysoft.database.sets.db_sets import F_A, G_A, H_A, H_B_prime, Q_A
from tests.golden import assert_documents_close, read_golden

TOLERANCE = 1e-9


def two_object(values):
    return FuzzySoftSet(["h1", "h2"], ["e1"], [values])


@pytest.fixture(scope="module")
def collapsing():
    """Constant object map on two objects, identity on the single parameter."""
    return MappingSpec({"h1": "k1", "h2": "k1"}, {"e1": "e1'"})


def test_worked_mapping_flags():
    assert MAP_4_22.p_bijective and MAP_4_22.p_order_preserving
    assert MAP_4_22.is_number_mapping
    assert MAP_4_22.q_surjective and not MAP_4_22.q_injective
    assert MAP_4_23.p_bijective and not MAP_4_23.p_order_preserving
    assert not MAP_4_23.is_number_mapping
    assert not is_homeomorphism(MAP_4_22)


def test_worked_image_and_preimage():
    mapped = image(MAP_4_22, H_A)
    np.testing.assert_allclose(mapped.grid, PRINTED_IMAGE)
    document = {"mapping": MAP_4_22.flags(), "image": mapped.to_document(),
                "preimage": preimage(MAP_4_22, H_B_prime).to_document()}
    assert_documents_close(document, read_golden("map_4_22_H_A.json"))


def test_scrambled_objects_break_convexity():
    mapped = image(MAP_4_23, H_A)
    assert_documents_close(mapped.to_document(), read_golden("image_map_4_23_H_A.json"))
    result = is_convex(mapped)
    assert not result
    assert result.row == "e1'"
    assert result.objects == ("k1", "k3", "k5")
    report = is_number_preserving(MAP_4_23, [H_A])
    assert not report
    assert report.witness["sample"] == 0


def test_order_preserving_mapping_keeps_numbers():
    assert is_number_preserving(MAP_4_22, [H_A, Q_A])
    report = is_number_preserving(MAP_4_22, [H_A, FuzzySoftSet(H_A.universe, H_A.parameters, 1.0 - H_A.grid)])
    assert report
    assert report.notes == ["skipped 1 sample(s) that are not fuzzy soft numbers"]


def test_image_takes_maximum_and_fills_zero():
    f = MappingSpec({"h1": "k1", "h2": "k1"}, {"e1": "e1'", "e2": "e1'"},
                    target_universe=["k1", "k2"], target_parameters=["e1'", "e2'"])
    F = FuzzySoftSet(["h1", "h2"], ["e1", "e2"], [[0.2, 0.5], [0.7, 0.1]])
    np.testing.assert_allclose(image(f, F).grid, [[0.7, 0.0], [0.0, 0.0]])
    assert not f.p_surjective and f.p_constant and f.q_constant


def test_preimage_of_image_contains_the_set():
    back = preimage(MAP_4_22, image(MAP_4_22, H_A))
    assert np.all(back.grid >= H_A.grid)


def test_isometry_of_worked_example():
    assert distance(image(MAP_4_22, H_A), image(MAP_4_22, Q_A)) == pytest.approx(0.1, abs=TOLERANCE)
    assert check_isometry(MAP_4_22, [H_A, Q_A])


def test_collapsing_map_shrinks_distances(collapsing):
    report = check_isometry(collapsing, [two_object([0.2, 0.9]), two_object([0.8, 0.9])])
    assert not report
    assert report.witness["pair"] == [0, 1]
    assert report.witness["source"] == pytest.approx(0.6)
    assert report.witness["image"] == 0.0


def test_isometry_is_continuous():
    collection = [H_A, Q_A, FuzzySoftSet.null(H_A.universe, H_A.parameters)]
    report = check_continuity_at(MAP_4_22, H_A, collection, [0.05, 0.2])
    assert report
    assert report.deltas[0.05] >= 0.05 - TOLERANCE
    assert check_continuity(MAP_4_22, collection, [0.05])
    assert check_uniform_continuity(MAP_4_22, collection, [0.05])


def test_inverse_image_breaks_continuity_on_profile_twins():
    f = MappingSpec({"h1": "k1"}, {"e1": "e1'", "e2": "e2'"})
    G = FuzzySoftSet(["k1"], ["e1'", "e2'"], [[0.2], [0.8]])
    twin = FuzzySoftSet(["k1"], ["e1'", "e2'"], [[0.2], [0.2]])
    assert distance(G, twin) == 0.0
    # q is one-one onto, so preimages keep the twin at distance 0
    report = check_continuity_at(f, G, [G, twin], [0.1], inverse=True)
    assert report
    g = MappingSpec({"h1": "k1"}, {"e1": "e2'"}, target_parameters=["e1'", "e2'"])
    report = check_continuity_at(g, G, [G, twin], [0.1], inverse=True)
    assert not report
    assert report.witness == {"epsilon": 0.1, "member": 1, "source_distance": 0.0,
                              "image_distance": pytest.approx(0.6)}
    assert report.deltas[0.1] is None


def test_uniform_continuity_failure():
    f = MappingSpec({"h1": "k1"}, {"e1": "e1'", "e2": "e1'"})
    F = FuzzySoftSet(["h1"], ["e1", "e2"], [[0.2], [0.8]])
    twin = FuzzySoftSet(["h1"], ["e1", "e2"], [[0.2], [0.2]])
    report = check_uniform_continuity(f, [F, twin], [0.1, 0.7])
    assert not report
    assert report.witness["pair"] == [0, 1]
    assert report.deltas[0.7] is not None
    assert not check_continuity(f, [F, twin], [0.1])


@pytest.mark.parametrize("epsilons", [[], [0.0], [-0.1]])
def test_epsilons_must_be_positive(epsilons):
    with pytest.raises(ValueError, match="epsilons"):
        check_uniform_continuity(MAP_4_22, [H_A], epsilons)


def test_continuity_point_must_be_member():
    with pytest.raises(ValueError, match="not a member"):
        check_continuity_at(MAP_4_22, H_A, [Q_A], [0.1])


def test_mapping_documents():
    document = MAP_4_22.to_document()
    assert MappingSpec.from_document(document).flags() == MAP_4_22.flags()
    with pytest.raises(DocumentError):
        MappingSpec.from_document({"p": {"h1": "k1"}})
    with pytest.raises(DocumentError):
        MappingSpec.from_document({"p": {"h1": 1}, "q": {"e1": "e1'"}})


def test_mapping_must_be_total():
    with pytest.raises(LabelError, match="total"):
        MappingSpec({"h1": "k1"}, {"e1": "e1'"}, source_universe=["h1", "h2"])
    with pytest.raises(LabelError, match="outside its declared target"):
        MappingSpec({"h1": "k9"}, {"e1": "e1'"}, target_universe=["k1"])
    with pytest.raises(LabelError, match="does not cover"):
        image(MAP_4_22, FuzzySoftSet(["x1"], ["e1"], [[0.5]]))


def test_identity_mapping():
    f = MappingSpec.identity(F_A.universe, F_A.parameters)
    assert image(f, F_A) == F_A
    assert preimage(f, F_A) == F_A
    assert is_homeomorphism(f)


@pytest.mark.parametrize("length, expected", [(1, 1), (2, 2), (3, 2), (10, 5), (11, 6), (20, 10)])
def test_minimum_tail(length, expected):
    assert minimum_tail(length) == expected


def test_geometric_sequence_converges():
    absolute = FuzzySoftSet.absolute(F_A.universe, F_A.parameters)
    prefix = [F_A.like(1.0 - (1.0 - F_A.grid) * 2.0 ** -n) for n in range(1, 21)]
    report = analyze_sequence(prefix, absolute, 0.05)
    assert report.cauchy and report.convergent
    assert report.cauchy_from <= 5
    assert report.convergent_from <= 5
    assert report.bounded
    assert report.to_document()["convergent"] == {"verdict": True, "from": report.convergent_from}


def test_alternating_sequence_is_not_cauchy():
    prefix = [F_A, G_A] * 5
    report = analyze_sequence(prefix, epsilon=0.1)
    assert not report.cauchy
    assert report.cauchy_from is None
    assert report.cauchy_witness["distance"] == pytest.approx(0.2, abs=TOLERANCE)
    assert report.cauchy_witness["n"] >= 6
    assert report.bound == pytest.approx(0.2, abs=TOLERANCE)
    assert report.convergent is None
    assert "convergent" not in report.to_document()


def test_sequence_not_converging_to_candidate():
    report = analyze_sequence([F_A, G_A] * 5, F_A, 0.1)
    assert report.convergent is False
    assert report.convergent_witness == {"n": 6, "distance": pytest.approx(0.2, abs=TOLERANCE)}


def test_empty_prefix():
    with pytest.raises(FuzzySoftError, match="empty prefix"):
        analyze_sequence([])


def test_continuity_below_tolerance():
    # no candidate delta above tolerance; nothing can offend either
    for collection in ([H_A], [H_A, H_A]):
        report = check_continuity_at(MAP_4_22, H_A, collection, [1e-12])
        assert report
        assert report.deltas[1e-12] == 1e-12
        assert check_continuity(MAP_4_22, collection, [1e-12])
        assert check_uniform_continuity(MAP_4_22, collection, [1e-12])


def test_isometry_matches_pairwise_distances():
    collection = [H_A, Q_A, FuzzySoftSet.null(H_A.universe, H_A.parameters)]
    report = check_isometry(MAP_4_22, collection)
    images = [image(MAP_4_22, F) for F in collection]
    expected = all(abs(distance(collection[i], collection[j]) - distance(images[i], images[j])) <= TOLERANCE
                   for i in range(3) for j in range(i + 1, 3))
    assert bool(report) == expected
