"""Tests for distances, diameters, spheres and the metric axioms."""

import numpy as np
import pytest

from fuzzysoft import (
    FuzzySoftSet,
    LabelError,
    check_metric_axioms,
    closed_sphere,
    complement,
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
    soft_point,
)
from fuzzysoft.database.sets.db_sets import F_A, G_A, H_A, H_A_prime, K_A, L_A, M_A, N_A, P_A, Q_A
from fuzzysoft.metric import PSEUDOMETRIC, candidate_radii

TOLERANCE = 1e-9


@pytest.mark.parametrize("F, G, expected", [
    (F_A, G_A, 0.2),
    (L_A, M_A, 0.1),
    (L_A, H_A_prime, 0.2),
    (M_A, H_A_prime, 0.1),
    (H_A, Q_A, 0.1),
    (F_A, F_A, 0.0),
])
def test_worked_distances(F, G, expected):
    assert distance(F, G) == pytest.approx(expected, abs=TOLERANCE)
    assert distance(G, F) == pytest.approx(expected, abs=TOLERANCE)


def test_soft_point_distances():
    pt = soft_point(F_A, "e1")
    assert point_set_distance(pt, F_A) == pytest.approx(0.1, abs=TOLERANCE)
    assert point_set_distance(pt, G_A) == pytest.approx(0.2, abs=TOLERANCE)
    assert point_point_distance(pt, soft_point(F_A, "e2")) == pytest.approx(0.1, abs=TOLERANCE)
    assert point_point_distance(pt, pt) == 0.0


def test_distance_requires_shared_labels():
    with pytest.raises(LabelError):
        distance(F_A, K_A)
    with pytest.raises(LabelError, match="universes differ"):
        point_set_distance(soft_point(K_A, "e1"), F_A)


def test_distance_only_sees_profiles():
    twin = F_A.like(np.tile(F_A.grid.min(axis=0), (2, 1)))
    assert twin != F_A
    assert distance(twin, F_A) == 0.0


def test_diameter():
    assert diameter(F_A) == pytest.approx(0.1, abs=TOLERANCE)
    assert diameter(FuzzySoftSet(["h1"], ["e1"], [[0.7]])) == 0.0
    G = FuzzySoftSet(["h1", "h2"], ["e1", "e2", "e3"], [[0.0, 0.1], [0.5, 0.1], [0.2, 0.9]])
    assert diameter(G) == pytest.approx(0.8)


def test_distance_to_complement():
    assert distance_to_complement(F_A) == pytest.approx(1.0)
    half = FuzzySoftSet(["h1", "h2"], ["e1"], [[0.5, 0.5]])
    assert distance_to_complement(half) == 0.0


def test_spheres():
    collection = [F_A, G_A, complement(F_A)]
    assert open_sphere(F_A, 0.25, collection) == [F_A, G_A]
    # G_A sits exactly on the boundary
    assert open_sphere(F_A, 0.2, collection) == [F_A]
    assert closed_sphere(F_A, 0.2, collection) == [F_A, G_A]


@pytest.mark.parametrize("radius", [0.0, 1.0, -0.5, 1.5])
def test_sphere_radius_range(radius):
    with pytest.raises(ValueError, match="radius must lie in"):
        open_sphere(F_A, radius, [F_A])


def test_candidate_radii():
    radii = candidate_radii([0.0, 0.2, 1.0])
    np.testing.assert_allclose(radii, [0.6, 0.2, 0.1])


def test_neighborhoods():
    collection = [F_A, G_A, complement(F_A)]
    result = is_neighborhood([F_A], F_A, collection)
    assert result
    assert result.radius == pytest.approx(0.2)
    assert is_neighborhood([F_A, G_A], F_A, collection).radius == pytest.approx(0.6)
    assert not is_neighborhood([G_A], F_A, collection)
    assert is_open([F_A, G_A], collection)
    assert is_open(collection, collection)
    with pytest.raises(ValueError, match="not a member"):
        is_neighborhood([F_A], K_A, collection)


def test_axioms_on_worked_sets():
    report = check_metric_axioms([F_A, G_A, L_A, M_A, H_A_prime, P_A, N_A])
    assert report.structure == "metric"
    assert report.size == 7
    for name in ("nonnegativity", "identity_on_profiles", "identity_on_sets", "symmetry", "triangle"):
        assert getattr(report, name).passed, name


def test_axioms_with_profile_twins():
    twin = F_A.like(np.tile(F_A.grid.min(axis=0), (2, 1)))
    report = check_metric_axioms([F_A, G_A, twin])
    assert report.structure == PSEUDOMETRIC
    assert report.identity_on_profiles
    assert not report.identity_on_sets
    assert report.identity_on_sets.witness == (0, 2)
    document = report.to_document(["F_A", "G_A", "twin"])
    assert document["identity_on_sets"] == {"passed": False, "witness": ["F_A", "twin"], "values": [0.0, 0.0]}
    assert document["triangle"] == {"passed": True}


def test_axioms_on_empty_and_mixed_collections():
    assert check_metric_axioms([]).structure == "metric"
    with pytest.raises(LabelError):
        check_metric_axioms([F_A, K_A])


def test_distance_matrix_matches_pairwise_distance():
    collection = [F_A, G_A, L_A, M_A]
    D = distance_matrix(collection)
    assert D.shape == (4, 4)
    for i, F in enumerate(collection):
        np.testing.assert_array_equal(distances_to(F, collection), D[i])
        for j, G in enumerate(collection):
            assert D[i, j] == distance(F, G)
    assert distances_to(F_A, []).shape == (0,)
    with pytest.raises(LabelError):
        distance_matrix([F_A, K_A])
