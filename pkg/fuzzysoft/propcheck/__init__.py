"""Catalog of claims about fuzzy soft numbers and the engine that checks them."""

from .catalog import SKIP, Expected, PropositionSpec, TrialContext, catalog, get
from .engine import (
                     Outcome,
                     PropositionChecker,
                     PropositionReport,
                     Witness,
                     check,
                     decode,
                     dumps,
                     encode,
                     replay,
                     run_all,
)
from .errata import errata

__all__ = ["SKIP",
           "Expected",
           "Outcome",
           "PropositionSpec",
           "PropositionReport",
           "PropositionChecker",
           "TrialContext",
           "Witness",
           "catalog",
           "get",
           "check",
           "run_all",
           "replay",
           "encode",
           "decode",
           "dumps",
           "errata",
           ]
