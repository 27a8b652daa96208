"""Check reports and conversion of results into JSON-ready values."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exactlin import Fp, Matrix, Subspace


def jsonable(x):
    """Recursively turn exact scalars, matrices and subspaces into JSON values."""
    if isinstance(x, bool) or x is None or isinstance(x, (int, str, float)):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, Fp):
        return x.v
    if isinstance(x, Matrix):
        return jsonable(x.tolist())
    if isinstance(x, Subspace):
        return {"dim": x.dim, "basis": jsonable(x.basis)}
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, (set, frozenset)):
        return [jsonable(v) for v in sorted(x)]
    if hasattr(x, "to_json"):
        return x.to_json()
    raise TypeError(f"cannot serialize {type(x).__name__}")


@dataclass
class Report:
    """Outcome of a check: ``ok`` plus each failed identity with a witness."""

    name: str
    failures: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, identity: str, witness) -> None:
        self.failures.append({"identity": identity, "witness": witness})

    def failed(self, identity: str) -> bool:
        return any(f["identity"] == identity for f in self.failures)

    def witnesses(self, identity: str) -> list:
        return [f["witness"] for f in self.failures if f["identity"] == identity]

    def merge(self, other: "Report", prefix: str = "") -> None:
        for f in other.failures:
            self.failures.append({"identity": prefix + f["identity"], "witness": f["witness"]})
        for k, v in other.details.items():
            self.details[prefix + k] = v

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        return {
            "check": self.name,
            "status": "pass" if self.ok else "fail",
            "failures": jsonable(self.failures),
            "details": jsonable(self.details),
        }
