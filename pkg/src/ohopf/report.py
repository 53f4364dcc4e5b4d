"""Structured outcomes of verification suites.

A suite produces a VerificationReport: a list of named checks, each carrying
the mathematical statement it verified (``law``), a pass flag, and numeric
detail (residuals, ranks, witnesses).  Reports serialize to canonical JSON:
keys are sorted and wall-clock time is kept out of the canonical form, so two
runs with the same configuration and package version emit byte-identical
documents.

Randomized checks draw from generators derived from one root seed by a
counter scheme: check number k uses numpy's default_rng seeded with the pair
(root_seed, k), so suites stay reproducible even when checks run in
parallel or are reordered.
"""

from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

SCHEMA_VERSION = "1"
ARTIFACT_VERSION = "0.1.0"


def derived_rng(root_seed: int, stream: int) -> np.random.Generator:
    """Generator for check number ``stream`` under the given root seed."""
    return np.random.default_rng([int(root_seed), int(stream)])


def _jsonable(value):
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    if isinstance(value, float):
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.floating,)):
        return float(value)
    if isinstance(value, np.ndarray):
        return [_jsonable(v) for v in value.tolist()]
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return str(value)


@dataclass
class Check:
    """One verified statement: name, the law checked, outcome, detail."""

    name: str
    law: str
    passed: bool
    info: dict = field(default_factory=dict)

    def as_dict(self):
        return {
            "name": self.name,
            "law": self.law,
            "passed": bool(self.passed),
            "info": _jsonable(self.info),
        }


@dataclass
class VerificationReport:
    suite: str
    config: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)
    elapsed_s: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name, law, passed, **info):
        self.checks.append(Check(name, law, bool(passed), info))

    def extend(self, other: "VerificationReport"):
        self.checks.extend(other.checks)

    def as_dict(self):
        # elapsed_s deliberately omitted: the canonical form must be
        # byte-identical across runs of the same configuration.
        return {
            "schema_version": SCHEMA_VERSION,
            "version": ARTIFACT_VERSION,
            "suite": self.suite,
            "config": _jsonable(self.config),
            "passed": self.passed,
            "checks": [c.as_dict() for c in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, indent=2) + "\n"

    def to_text(self) -> str:
        lines = []
        header = "suite %s  (%s)" % (
            self.suite,
            ", ".join("%s=%s" % kv for kv in sorted(self.config.items())),
        )
        lines.append(header)
        lines.append("-" * len(header))
        width = max((len(c.name) for c in self.checks), default=4)
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            lines.append("%-*s  %s  %s" % (width, c.name, status, c.law))
        lines.append(
            "%d/%d checks passed in %.2fs"
            % (sum(c.passed for c in self.checks), len(self.checks), self.elapsed_s)
        )
        return "\n".join(lines) + "\n"


@contextmanager
def timed_report(suite: str, config: dict):
    """Context manager that stamps elapsed time on the report it yields."""
    report = VerificationReport(suite, config)
    start = time.perf_counter()
    try:
        yield report
    finally:
        report.elapsed_s = time.perf_counter() - start
