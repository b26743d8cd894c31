"""Certificate types returned by the extractors."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union


@dataclass(frozen=True)
class RedCycle:
    vertices: tuple[int, ...]

    def to_json(self) -> dict:
        return {"type": "red_cycle", "vertices": list(self.vertices)}

    def relabel(self, labels: Sequence[int]) -> "RedCycle":
        return RedCycle(tuple(labels[v] for v in self.vertices))


@dataclass(frozen=True)
class BlueCopy:
    """``map[i]`` is the host vertex carrying vertex ``i`` of the target."""

    map: tuple[int, ...]

    def to_json(self) -> dict:
        return {"type": "blue_copy", "map": list(self.map)}

    def relabel(self, labels: Sequence[int]) -> "BlueCopy":
        return BlueCopy(tuple(labels[v] for v in self.map))


Witness = Union[RedCycle, BlueCopy]


@dataclass(frozen=True)
class RedPath:
    vertices: tuple[int, ...]

    def relabel(self, labels: Sequence[int]) -> "RedPath":
        return RedPath(tuple(labels[v] for v in self.vertices))


@dataclass(frozen=True)
class BluePartite:
    """Disjoint vertex sets with every pair across two different sets blue."""

    parts: tuple[tuple[int, ...], ...]

    def relabel(self, labels: Sequence[int]) -> "BluePartite":
        return BluePartite(tuple(tuple(labels[v] for v in p) for p in self.parts))


@dataclass(frozen=True)
class Exhausted:
    """The desk-scale pipeline gave up.  Never claims that no witness exists
    unless ``stage`` is ``"base"`` and the complete search came back empty.
    """

    stage: str
    reason: str

    def to_json(self) -> dict:
        return {"type": "exhausted", "stage": self.stage, "reason": self.reason}
