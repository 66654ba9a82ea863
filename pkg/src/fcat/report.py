"""Validation reports and the error hierarchy shared by every checker.

Validators never raise on law violations: they return a :class:`Report`
whose failures carry machine-readable witnesses.  Exceptions are reserved
for misuse (non-composable inputs, wrong variance, search caps) and for
internal consistency traps that should be unreachable on validated input.
"""
from __future__ import annotations

from dataclasses import dataclass, field


class FcatError(Exception):
    """Base class for all errors raised by this package."""


class StructuralError(FcatError):
    """Malformed table: dangling identifier, missing or extra entry."""


class BoundaryError(FcatError):
    """Inputs do not compose (mismatched sources/targets or frames)."""


class VarianceError(FcatError):
    """Wrong orientation or an illegal variance combination."""


class CapExceeded(FcatError):
    """An enumeration would exceed the configured search cap."""


class UnsatisfiedHypothesis(FcatError):
    """A construction's hypothesis fails (e.g. the base lacks limits)."""


class ConsistencyError(FcatError):
    """Internal invariant broken on validated input; treated as a bug trap."""


class InvalidStructureError(FcatError):
    """An operation was handed an input whose validation report fails."""

    def __init__(self, report: "Report"):
        self.report = report
        lines = [f"{report.subject}: {len(report.failures)} failure(s)"]
        lines += [f"  [{f.code}] {f.message}" for f in report.failures[:5]]
        super().__init__("\n".join(lines))


STRUCTURAL = "structural"
LAW = "law"


@dataclass(frozen=True)
class Failure:
    code: str          # short dotted identifier of the violated law
    kind: str          # STRUCTURAL or LAW
    message: str
    witness: tuple = ()  # identifiers pinning down the violation


@dataclass
class Report:
    """Outcome of one validation run."""

    subject: str
    failures: list[Failure] = field(default_factory=list)
    flags: dict = field(default_factory=dict)
    certificates: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, code: str, kind: str, message: str, witness: tuple = ()) -> None:
        self.failures.append(Failure(code, kind, message, tuple(witness)))

    def merge(self, other: "Report", prefix: str = "") -> None:
        for f in other.failures:
            code = f"{prefix}{f.code}" if prefix else f.code
            self.failures.append(Failure(code, f.kind, f.message, f.witness))

    def structural_failures(self) -> list[Failure]:
        return [f for f in self.failures if f.kind == STRUCTURAL]

    def law_failures(self) -> list[Failure]:
        return [f for f in self.failures if f.kind == LAW]

    def as_dict(self) -> dict:
        return {
            "subject": self.subject,
            "ok": self.ok,
            "failures": [
                {
                    "code": f.code,
                    "kind": f.kind,
                    "message": f.message,
                    "witness": list(f.witness),
                }
                for f in self.failures
            ],
            "flags": dict(sorted(self.flags.items())),
            "certificates": dict(sorted(self.certificates.items())),
        }


def require(report: Report) -> Report:
    """Insist on a clean report; raise otherwise.  Used at operation entry."""
    if not report.ok:
        raise InvalidStructureError(report)
    return report
