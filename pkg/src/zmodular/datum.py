"""Labeled (S, T) pair over exact cyclotomic numbers."""

from __future__ import annotations

from dataclasses import dataclass, field

from .cyclo import CycNum


@dataclass
class ModularDatum:
    """A labeled square S-matrix with a diagonal T, all entries exact.

    labels: ordered label objects exposing ``serialize()``.
    normalization: "unnormalized" (S-matrix of the category, unit entry 1)
    or "renormalized" (global scalar applied).
    """

    labels: list
    s: list[list[CycNum]]
    t: list[CycNum]
    normalization: str
    params: dict = field(default_factory=dict)

    def size(self) -> int:
        return len(self.labels)

    def conductor(self) -> int:
        return self.s[0][0].conductor if self.s else 1

    def serialize(self) -> dict:
        return {
            "labels": [lab.serialize() for lab in self.labels],
            "S": [[entry.to_dict() for entry in row] for row in self.s],
            "T": [entry.to_dict() for entry in self.t],
            "normalization": self.normalization,
            "params": self.params,
        }
