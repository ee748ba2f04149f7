"""Verification suites, parameter sweeps, a content-addressed result store and the CLI."""

from .records import ResultRecord, Check
from .store import ResultStore
from .verify import VERIFIERS, verify
from .experiments import ExperimentSpec, run_point, sweep

__all__ = ["ResultRecord", "Check", "ResultStore", "VERIFIERS", "verify",
           "ExperimentSpec", "run_point", "sweep"]
