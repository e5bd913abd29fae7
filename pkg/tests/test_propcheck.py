"""Tests for the claim catalog, the search engine and the errata report."""

import json

import pytest
from traitlets import TraitError

from fuzzysoft.database.sets.db_sets import F_A, H_A
from fuzzysoft.propcheck import (
    SKIP,
    Expected,
    Outcome,
    PropositionChecker,
    PropositionReport,
    PropositionSpec,
    catalog,
    decode,
    dumps,
    encode,
    errata,
    get,
    replay,
)
from fuzzysoft.propcheck.samplers import SetSampler

SEED = 7

# Counterexamples the search must find within the default budget
REQUIRED_WITNESSES = ("T3.5", "P3.21.v", "P3.21.vi", "T4.10", "P3.19")


@pytest.fixture(scope="module")
def report():
    """Full report at the default budget."""
    return PropositionChecker(seed=SEED).run_all()


@pytest.fixture(scope="module")
def by_id(report):
    return {entry["id"]: entry for entry in report["propositions"]}


def test_catalog_covers_every_claim():
    ids = [spec.id for spec in catalog()]
    assert len(ids) == 48
    assert len(set(ids)) == 48
    assert ids[:3] == ["T3.3", "T3.4", "T3.5"]
    assert {f"P3.20.{item}" for item in ("i", "iv", "viii")} <= set(ids)
    assert {f"P3.21.{item}" for item in ("i", "v", "xiv")} <= set(ids)
    assert ids[-1] == "T4.39"


def test_unknown_claim():
    with pytest.raises(KeyError, match="unknown claim id 'X9.9'"):
        get("X9.9")


@pytest.mark.parametrize("claim_id", [spec.id for spec in catalog()])
def test_outcome_matches_expected_label(by_id, claim_id):
    entry = by_id[claim_id]
    assert entry["matched"], entry


def test_report_document(report):
    assert report["seed"] == SEED
    assert report["budget"] == 1000
    assert report["matched"] is True
    assert [entry["id"] for entry in report["propositions"]] == [spec.id for spec in catalog()]


@pytest.mark.parametrize("claim_id", REQUIRED_WITNESSES)
def test_required_witnesses_replay(by_id, claim_id):
    entry = by_id[claim_id]
    assert "witness" in entry
    assert replay(get(claim_id), entry["witness"]) is not None


def test_every_witness_replays(by_id):
    for claim_id, entry in by_id.items():
        if "witness" in entry:
            assert replay(get(claim_id), entry["witness"]) is not None, claim_id


def test_restricted_claims(by_id):
    for claim_id in ("P3.9", "P3.19", "P4.5"):
        entry = by_id[claim_id]
        assert entry["outcome"] == "HOLDS-WITH-RESTRICTION"
        assert entry["witness"]["phase"] == "unrestricted"
        assert entry["restricted_trials"]["random"] > 0


def test_partial_claims(by_id):
    for claim_id in ("P3.20.v", "P3.20.viii", "P3.21.ix", "P3.21.xi", "P3.21.xiii"):
        entry = by_id[claim_id]
        assert entry["outcome"] == "HOLDS-ON-DEFINED-CELLS"
        assert entry["trials"]["partial"] > 0


def test_existential_claims(by_id):
    for claim_id in ("T3.5", "T4.38", "T4.39"):
        assert by_id[claim_id]["existential"] is True
        assert by_id[claim_id]["outcome"] == "FALSIFIED"
    assert by_id["T4.38"]["witness"]["tier"] == "seeded"


def test_trial_counts(by_id):
    trials = by_id["T3.3"]["trials"]
    assert trials["random"] == 1000
    assert trials["exhaustive"] == sum(entry["count"] for entry in trials["bounds"])
    assert all(entry["count"] <= 1024 for entry in trials["bounds"])


def test_report_does_not_depend_on_claim_order(by_id):
    """Claims draw from their own generators, so a subset run reproduces the full run."""
    ids = ["T4.19", "P3.19", "T3.3"]
    subset = PropositionChecker(seed=SEED).run_all([get(claim_id) for claim_id in ids])
    for entry in subset["propositions"]:
        assert dumps(entry) == dumps(by_id[entry["id"]])


def test_full_report_is_byte_identical(report):
    again = PropositionChecker(seed=SEED, workers=2).run_all()
    assert dumps(again) == dumps(report)


def test_same_seed_same_bytes():
    specs = [get("T4.11"), get("T4.29"), get("P4.32")]
    first = dumps(PropositionChecker(seed=SEED, budget=200).run_all(specs))
    second = dumps(PropositionChecker(seed=SEED, budget=200, workers=3).run_all(specs))
    assert first == second
    json.loads(first)


def test_seed_from_environment(monkeypatch):
    monkeypatch.setenv("FUZZYSOFT_SEED", "42")
    assert PropositionChecker().seed == 42
    monkeypatch.setenv("FUZZYSOFT_SEED", "forty-two")
    with pytest.raises(TraitError, match="must be an integer"):
        PropositionChecker().seed  # noqa: B018
    monkeypatch.delenv("FUZZYSOFT_SEED")
    assert PropositionChecker().seed == 0


def test_undecided_when_every_trial_is_skipped():
    spec = PropositionSpec(id="X0", statement="vacuous", expected=Expected.VERIFIED,
                           sampler=SetSampler(), predicate=lambda ctx, F: SKIP)
    result = PropositionChecker(budget=5).check(spec)
    assert result.outcome is Outcome.UNDECIDED
    assert not result.matched
    assert result.trials["skipped"] > 0


def test_witness_inputs_round_trip():
    document = encode((F_A, H_A))
    assert decode(document) == (F_A, H_A)
    assert decode(encode(0.25)) == 0.25
    with pytest.raises(TypeError):
        encode(object())


def test_errata():
    entries = errata()
    cells = [(e["table"], e.get("operation"), e["parameter"], e["object"], e["kind"]) for e in entries]
    assert cells == [
        ("arith", "add", "e2", "h5", "typo"),
        ("arith", "div", "e2", "h1", "rounding"),
        ("arith", "div", "e2", "h5", "typo"),
        ("preimage", None, "e2", "h4", "typo"),
        ("preimage", None, "e2", "h5", "typo"),
    ]
    assert entries[0]["printed"] == 0.1
    assert entries[0]["computed"] == 0.2
    assert entries[1]["computed"] == 0.3333
    assert entries[2]["printed"] == 1.0
    assert entries[2]["computed"] == 0.0


def test_optional_fields_default_to_none():
    for spec in catalog():
        assert isinstance(spec.seed_inputs(), list)
        if spec.restriction is None:
            assert spec.restricted_predicate is None
    assert get("T3.3").seeds is None


def test_check_claim_without_seeds_or_restriction():
    result = PropositionChecker(seed=SEED, budget=50).check(get("T3.3"))
    assert result.outcome is Outcome.VERIFIED
    assert result.matched
    assert result.trials["seeded"] == 0
    assert result.restricted_trials == {}


def test_bounds_name_the_level_step(by_id):
    bounds = by_id["T3.3"]["trials"]["bounds"]
    assert all(entry["step"] in (0.1, 0.2, 0.5, 1.0) for entry in bounds)
    assert all(entry["count"] <= 1024 for entry in bounds)


def test_report_from_document(by_id):
    entry = by_id["T3.5"]
    rebuilt = PropositionReport.from_document(entry)
    assert dumps(rebuilt.to_document()) == dumps(entry)
