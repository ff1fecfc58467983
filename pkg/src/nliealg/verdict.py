"""PASS / counterexample verdicts shared by every checker."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckResult:
    """Outcome of an identity check over all relevant basis tuples.

    ``counterexample`` holds the first failing instance: the named basis
    tuples, both sides of the identity, and their difference, all exact.
    """

    check_name: str
    passed: bool
    counterexample: dict | None = field(default=None)

    def __bool__(self):
        return self.passed


def ok(name):
    return CheckResult(name, True)


def fail(name, where, lhs, rhs):
    diff = [a - b for a, b in zip(lhs, rhs)]
    return CheckResult(name, False, {"where": where, "lhs": lhs, "rhs": rhs, "difference": diff})
