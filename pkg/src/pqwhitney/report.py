"""Structured outcome of a single identity check."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

from .laurent import LaurentPoly

CHECKED = "checked"
SKIPPED = "skipped"


@dataclass(frozen=True)
class VerificationReport:
    """Exact left side against one or more candidate right sides.

    ``equal_flags[i]`` and ``differences[i]`` refer to ``rhs_candidates[i]``;
    ``labels[i]`` names the candidate (e.g. which parse of a formula it is).
    A skipped report carries no values, only ``note``.
    """

    identity_id: str
    params: dict[str, Any]
    lhs: LaurentPoly | None
    rhs_candidates: tuple[LaurentPoly, ...] = ()
    labels: tuple[str, ...] = ()
    status: str = CHECKED
    note: str = ""
    equal_flags: tuple[bool, ...] = field(init=False)
    differences: tuple[LaurentPoly, ...] = field(init=False)

    def __post_init__(self):
        if self.status == CHECKED:
            if self.lhs is None or not self.rhs_candidates:
                raise ValueError("a checked report needs lhs and at least one rhs")
            diffs = tuple(self.lhs - rhs for rhs in self.rhs_candidates)
        else:
            diffs = ()
        labels = self.labels or tuple(f"rhs{i}" for i in range(len(self.rhs_candidates)))
        if len(labels) != len(self.rhs_candidates):
            raise ValueError("one label per rhs candidate")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "differences", diffs)
        object.__setattr__(self, "equal_flags", tuple(d.is_zero() for d in diffs))

    @classmethod
    def skipped(cls, identity_id: str, params: dict[str, Any], note: str) -> VerificationReport:
        return cls(identity_id, params, None, status=SKIPPED, note=note)

    @property
    def is_skipped(self) -> bool:
        return self.status == SKIPPED

    @property
    def rhs(self) -> LaurentPoly | None:
        return self.rhs_candidates[0] if self.rhs_candidates else None

    @property
    def difference(self) -> LaurentPoly | None:
        return self.differences[0] if self.differences else None

    @property
    def equal(self) -> bool:
        """True when the primary (first) candidate matches; False if skipped."""
        return bool(self.equal_flags) and self.equal_flags[0]

    def to_json(self) -> dict[str, Any]:
        return {
            "identity_id": self.identity_id,
            "params": dict(self.params),
            "status": self.status,
            "note": self.note,
            "lhs": None if self.lhs is None else self.lhs.canonical(),
            "labels": list(self.labels),
            "rhs_candidates": [r.canonical() for r in self.rhs_candidates],
            "equal_flags": list(self.equal_flags),
            "difference": [d.canonical() for d in self.differences],
        }

    def to_text(self) -> str:
        head = f"[{self.identity_id}] " + " ".join(f"{k}={v}" for k, v in self.params.items())
        if self.is_skipped:
            return f"{head}: SKIPPED ({self.note})\n"
        lines = [head, f"  lhs = {self.lhs}"]
        for label, rhs, ok, diff in zip(self.labels, self.rhs_candidates, self.equal_flags, self.differences):
            lines.append(f"  {label} = {rhs}")
            lines.append(f"    equal={ok}" + ("" if ok else f"  lhs-rhs = {diff}"))
        if self.note:
            lines.append(f"  note: {self.note}")
        return "\n".join(lines) + "\n"


def first_failure(reports: Iterable[VerificationReport]) -> VerificationReport | None:
    """First checked report whose primary candidate disagrees."""
    for rep in reports:
        if not rep.is_skipped and not rep.equal:
            return rep
    return None


def summarize(reports: Sequence[VerificationReport]) -> dict[str, int]:
    checked = [r for r in reports if not r.is_skipped]
    return {
        "total": len(reports),
        "checked": len(checked),
        "equal": sum(r.equal for r in checked),
        "failed": sum(not r.equal for r in checked),
        "skipped": len(reports) - len(checked),
    }
