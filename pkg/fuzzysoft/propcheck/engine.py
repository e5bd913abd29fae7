"""Search engine deciding the cataloged claims.

Each claim is searched in three tiers: worked-example seeds, the exhaustive
small-grid family of its sampler, then ``budget`` random draws. The search
stops at the first violation. Random draws come from a generator seeded with
``(seed, crc32(id))``, so the outcome of a claim does not depend on the other
claims or on the order they run in.

.. autosummary::
    :toctree: engine

    Outcome
    Witness
    PropositionReport
    PropositionChecker
    check
    run_all
    replay
"""

import enum
import json
import logging
import os
import zlib
from concurrent.futures import ProcessPoolExecutor

import numpy as np
from traitlets import Bool, Dict, HasTraits, Instance, Integer, List, TraitError, Unicode, UseEnum, default

from ..abstract_traits import FrozenHasTraits
from ..analysis import MappingSpec
from ..core import DocumentError, FuzzySoftSet
from .catalog import SKIP, Expected, PropositionSpec, TrialContext, catalog, get
from .errata import errata

logger = logging.getLogger(__name__)

SEED_VARIABLE = "FUZZYSOFT_SEED"


class Outcome(enum.Enum):
    VERIFIED = "VERIFIED"
    FALSIFIED = "FALSIFIED"
    HOLDS_ON_DEFINED_CELLS = "HOLDS-ON-DEFINED-CELLS"
    HOLDS_WITH_RESTRICTION = "HOLDS-WITH-RESTRICTION"
    UNDECIDED = "UNDECIDED"


MATCHING_OUTCOME = {
    Expected.VERIFIED: Outcome.VERIFIED,
    Expected.FALSIFIABLE: Outcome.FALSIFIED,
    Expected.HOLDS_ON_DEFINED_CELLS: Outcome.HOLDS_ON_DEFINED_CELLS,
    Expected.HOLDS_WITH_RESTRICTION: Outcome.HOLDS_WITH_RESTRICTION,
}


def encode(value):
    """Encode one predicate input as a JSON-ready document."""
    if isinstance(value, FuzzySoftSet):
        return {"set": value.to_document()}
    if isinstance(value, MappingSpec):
        return {"mapping": value.to_document()}
    if isinstance(value, (tuple, list)):
        return {"sequence": [encode(v) for v in value]}
    if isinstance(value, (float, int, np.floating)):
        return {"number": float(value)}
    msg = f"cannot encode predicate input of type {type(value).__name__}"
    raise TypeError(msg)


def decode(document):
    """Inverse of :func:`encode`."""
    if not isinstance(document, dict) or len(document) != 1:
        msg = f"witness input must be a one-key object, got {document!r}"
        raise DocumentError(msg)
    (kind, body), = document.items()
    if kind == "set":
        return FuzzySoftSet.from_document(body)
    if kind == "mapping":
        return MappingSpec.from_document(body)
    if kind == "sequence":
        return tuple(decode(v) for v in body)
    if kind == "number":
        return float(body)
    msg = f"unknown witness input kind {kind!r}"
    raise DocumentError(msg)


class Witness(FrozenHasTraits):
    """Inputs on which a predicate reported a violation.

    Attributes
    ----------
    phase : str
        ``"unrestricted"`` or ``"restricted"``: which predicate failed.
    tier : str
        ``"seeded"``, ``"exhaustive"`` or ``"random"``.
    inputs : list
        Encoded predicate inputs, see :func:`encode`.
    detail : str
        The violation as described by the predicate.
    """

    phase = Unicode()
    tier = Unicode()
    inputs = List()
    detail = Unicode()

    def __init__(self, **kwargs):
        super().__init__(**kwargs)
        self._freeze()

    def to_document(self):
        return {"phase": self.phase, "tier": self.tier, "inputs": list(self.inputs),
                "detail": self.detail}


class PropositionReport(FrozenHasTraits):
    """Outcome of one claim.

    Attributes
    ----------
    id, anchor_quote : str
        Claim id and statement.
    expected : Expected
    outcome : Outcome
    witness : Witness or None
        First violation found, if any.
    trials : dict
        Evaluated trials per tier, skipped and partial counts, and the search
        bounds of the unrestricted phase.
    restricted_trials : dict
        Same for the restricted phase; empty when it did not run.
    """

    id = Unicode()
    anchor_quote = Unicode()
    expected = UseEnum(Expected)
    outcome = UseEnum(Outcome)
    restriction = Unicode(allow_none=True, default_value=None)
    existential = Bool(default_value=False)
    witness = Instance(Witness, allow_none=True)
    trials = Dict()
    restricted_trials = Dict()

    def __init__(self, **kwargs):
        super().__init__(**kwargs)
        self._freeze()

    @property
    def matched(self):
        return MATCHING_OUTCOME[self.expected] is self.outcome

    def to_document(self):
        doc = {
            "id": self.id,
            "anchor_quote": self.anchor_quote,
            "expected": self.expected.value,
            "outcome": self.outcome.value,
            "matched": self.matched,
            "existential": self.existential,
            "trials": dict(self.trials),
        }
        if self.restriction is not None:
            doc["restriction"] = self.restriction
        if self.restricted_trials:
            doc["restricted_trials"] = dict(self.restricted_trials)
        if self.witness is not None:
            doc["witness"] = self.witness.to_document()
        return doc

    @classmethod
    def from_document(cls, document):
        """Rebuild a report from :meth:`to_document` output."""
        witness = document.get("witness")
        return cls(
            id=document["id"],
            anchor_quote=document["anchor_quote"],
            expected=Expected(document["expected"]),
            outcome=Outcome(document["outcome"]),
            restriction=document.get("restriction"),
            existential=document["existential"],
            witness=None if witness is None else Witness(**witness),
            trials=document["trials"],
            restricted_trials=document.get("restricted_trials", {}),
        )


def _search(sampler, predicate, rng, budget, cap, seeds, phase):
    counts = {"seeded": 0, "exhaustive": 0, "random": 0, "skipped": 0, "partial": 0}

    def run(tier, inputs):
        ctx = TrialContext()
        verdict = predicate(ctx, *inputs)
        if verdict is SKIP:
            counts["skipped"] += 1
            return None
        counts[tier] += 1
        counts["partial"] += ctx.partial
        if verdict is None:
            return None
        return Witness(phase=phase, tier=tier, inputs=[encode(v) for v in inputs], detail=verdict)

    def tiers():
        for inputs in seeds:
            yield "seeded", inputs
        for inputs in sampler.exhaustive(cap):
            yield "exhaustive", inputs
        for _ in range(budget):
            yield "random", sampler.draw(rng)

    witness = None
    for tier, inputs in tiers():
        witness = run(tier, inputs)
        if witness is not None:
            break
    trials = {**counts, "budget": budget, "bounds": sampler.plan(cap)}
    return trials, witness


def _evaluated(trials):
    return trials["seeded"] + trials["exhaustive"] + trials["random"]


class PropositionChecker(HasTraits):
    """Decide cataloged claims for one seed and budget.

    Attributes
    ----------
    seed : int
        Base seed; defaults to the ``FUZZYSOFT_SEED`` environment variable, else 0.
    budget : int
        Random trials per claim and phase.
    exhaustive_cap : int
        Largest exhaustive enumeration per shape.
    workers : int
        Claims checked concurrently.
    """

    seed = Integer(min=0)
    budget = Integer(default_value=1000, min=1)
    exhaustive_cap = Integer(default_value=1024, min=1)
    workers = Integer(default_value=1, min=1)

    @default("seed")
    def _default_seed(self):
        value = os.environ.get(SEED_VARIABLE)
        if value is None:
            return 0
        try:
            return int(value)
        except ValueError:
            msg = f"{SEED_VARIABLE} must be an integer, got {value!r}"
            raise TraitError(msg) from None

    def _rng(self, spec, phase):
        return np.random.default_rng([self.seed, zlib.crc32(spec.id.encode()), phase])

    def check(self, spec: PropositionSpec):
        """Search one claim and classify its outcome."""
        trials, witness = _search(spec.sampler, spec.predicate, self._rng(spec, 0), self.budget,
                                  self.exhaustive_cap, spec.seed_inputs(), "unrestricted")
        restricted_trials = {}
        if witness is not None:
            outcome = Outcome.FALSIFIED
            if spec.restricted_predicate is not None:
                sampler = spec.restricted_sampler or spec.sampler
                restricted_trials, restricted_witness = _search(
                    sampler, spec.restricted_predicate, self._rng(spec, 1), self.budget,
                    self.exhaustive_cap, [], "restricted")
                if restricted_witness is not None:
                    witness = restricted_witness
                elif _evaluated(restricted_trials):
                    outcome = Outcome.HOLDS_WITH_RESTRICTION
        elif not _evaluated(trials):
            outcome = Outcome.UNDECIDED
        elif trials["partial"]:
            outcome = Outcome.HOLDS_ON_DEFINED_CELLS
        else:
            outcome = Outcome.VERIFIED
        report = PropositionReport(
            id=spec.id,
            anchor_quote=spec.statement,
            expected=spec.expected,
            outcome=outcome,
            restriction=spec.restriction,
            existential=spec.existential,
            witness=witness,
            trials=trials,
            restricted_trials=restricted_trials,
        )
        log = logger.info if report.matched else logger.warning
        log("%s: %s (expected %s)", spec.id, outcome.value, spec.expected.value)
        return report

    def check_all(self, specs=None):
        """Reports for ``specs`` (default: the whole catalog), in the given order.

        With several workers, cataloged claims are checked in separate processes;
        other specs are checked in this one. Reports do not depend on ``workers``.
        """
        specs = catalog() if specs is None else list(specs)
        if self.workers == 1:
            return [self.check(spec) for spec in specs]
        cataloged = [_is_cataloged(spec) for spec in specs]
        ids = [spec.id for spec, known in zip(specs, cataloged, strict=True) if known]
        with ProcessPoolExecutor(max_workers=self.workers) as pool:
            documents = iter(pool.map(_check_cataloged, [self.settings()] * len(ids), ids))
            return [PropositionReport.from_document(next(documents)) if known else self.check(spec)
                    for spec, known in zip(specs, cataloged, strict=True)]

    def settings(self):
        """Seed, budget and cap, enough to rebuild an equivalent checker."""
        return {"seed": self.seed, "budget": self.budget, "exhaustive_cap": self.exhaustive_cap}

    def run_all(self, specs=None):
        """Full report document: one entry per claim plus the errata tables."""
        reports = self.check_all(specs)
        return {
            "seed": self.seed,
            "budget": self.budget,
            "propositions": [r.to_document() for r in reports],
            "errata": errata(),
            "matched": all(r.matched for r in reports),
        }


def _is_cataloged(spec):
    try:
        return get(spec.id) is spec
    except KeyError:
        return False


def _check_cataloged(settings, claim_id):
    return PropositionChecker(**settings).check(get(claim_id)).to_document()


def check(spec: PropositionSpec, seed=0, budget=1000):
    """Check one claim; see :meth:`PropositionChecker.check`."""
    return PropositionChecker(seed=seed, budget=budget).check(spec)


def run_all(seed=None, budget=1000, workers=1):
    """Check the whole catalog and return the report document."""
    checker = PropositionChecker(budget=budget, workers=workers)
    if seed is not None:
        checker.seed = seed
    return checker.run_all()


def dumps(report):
    """Serialize a report document with sorted keys."""
    return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def replay(spec: PropositionSpec, witness):
    """Re-run the predicate that produced ``witness`` on its decoded inputs.

    Parameters
    ----------
    witness : Witness or dict
        A witness or its document form.

    Returns
    -------
    str or None
        The violation found again, or None if the inputs no longer violate.
    """
    if isinstance(witness, Witness):
        witness = witness.to_document()
    predicate = spec.restricted_predicate if witness["phase"] == "restricted" else spec.predicate
    inputs = [decode(v) for v in witness["inputs"]]
    verdict = predicate(TrialContext(), *inputs)
    return None if verdict is SKIP else verdict
