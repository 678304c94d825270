"""Row sums of the Whitney triangles: (p,q)-analogues of r-Dowling numbers."""
from __future__ import annotations

from dataclasses import dataclass

from .laurent import LaurentPoly
from .whitney import Form, WhitneyParams, classical_whitney, triangle


@dataclass(frozen=True)
class DowlingSequence:
    params: WhitneyParams
    form: Form
    values: tuple[LaurentPoly, ...]

    @property
    def n_max(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n: int) -> LaurentPoly:
        return self.values[n]

    def to_json(self) -> dict:
        return {
            "params": self.params.as_dict(),
            "form": self.form.value,
            "n_max": self.n_max,
            "values": [v.canonical() for v in self.values],
        }

    def to_text(self) -> str:
        p = self.params
        lines = [f"D[n] form={self.form.value} m={p.m} r={p.r} t={p.t}"]
        lines += [f"{n} | {v}" for n, v in enumerate(self.values)]
        return "\n".join(lines) + "\n"


def dowling(params: WhitneyParams, form: Form | str = Form.SECOND, n_max: int = 0) -> DowlingSequence:
    form = Form(form)
    tri = triangle(params, n_max, form)
    return DowlingSequence(params, form, tuple(tri.row_sums()))


def classical_dowling(m: int, r: int, n_max: int) -> list[int]:
    return [sum(row) for row in classical_whitney(m, r, n_max)]
