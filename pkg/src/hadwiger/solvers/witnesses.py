"""Certificate types returned by the solvers."""

from __future__ import annotations

from dataclasses import dataclass

from ..graph import Decomposition


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]

    @property
    def num_colors(self) -> int:
        return max(self.colors) + 1 if self.colors else 0

    def to_json(self) -> list[int]:
        return list(self.colors)


@dataclass(frozen=True)
class HomomorphismWitness:
    """``mapping[v]`` is the target vertex of source vertex ``v``."""

    mapping: tuple[int, ...]

    def to_json(self) -> list[int]:
        return list(self.mapping)


@dataclass(frozen=True)
class MinorWitness:
    """Branch sets in the host plus an injective map from minor vertices to parts."""

    decomposition: Decomposition
    embedding: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "parts": [sorted(p) for p in self.decomposition.parts],
            "embedding": list(self.embedding),
        }


@dataclass(frozen=True)
class CliqueMinorWitness:
    """``t`` pairwise-touching branch sets, i.e. a K_t minor."""

    decomposition: Decomposition

    @property
    def t(self) -> int:
        return len(self.decomposition.parts)

    def truncated(self, t: int) -> CliqueMinorWitness:
        """Any ``t`` of the parts still form a K_t minor."""
        d = self.decomposition
        return CliqueMinorWitness(Decomposition(d.host, d.parts[:t]))

    def to_json(self) -> list[list[int]]:
        return [sorted(p) for p in self.decomposition.parts]
