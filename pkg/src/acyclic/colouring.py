from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

UNSET = -1


@dataclass(frozen=True)
class Colouring:
    """Vertex colouring with palette ``range(k)``; ``UNSET`` marks uncoloured vertices."""

    assignment: tuple[int, ...]
    k: int

    def __post_init__(self):
        for v, c in enumerate(self.assignment):
            if c != UNSET and not 0 <= c < self.k:
                raise ValueError(f"colour {c} of vertex {v} outside palette of size {self.k}")

    @classmethod
    def of(cls, colours: Iterable[int], k: int | None = None) -> "Colouring":
        colours = tuple(colours)
        if k is None:
            k = max(colours, default=-1) + 1
        return cls(colours, k)

    def __len__(self) -> int:
        return len(self.assignment)

    def __getitem__(self, v: int) -> int:
        return self.assignment[v]

    def is_total(self) -> bool:
        return UNSET not in self.assignment

    def colours_used(self) -> int:
        return len({c for c in self.assignment if c != UNSET})

    def classes(self) -> list[list[int]]:
        """Colour classes indexed by colour; together they partition the coloured vertices."""
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.assignment):
            if c != UNSET:
                out[c].append(v)
        return out

    def relabel(self, perm: Sequence[int]) -> "Colouring":
        """Rename colour ``c`` to ``perm[c]``."""
        return Colouring(tuple(perm[c] if c != UNSET else UNSET for c in self.assignment), self.k)

    def to_lines(self) -> str:
        return "".join(f"{v} {c}\n" for v, c in enumerate(self.assignment) if c != UNSET)


def parse_colouring(text: str, n: int | None = None) -> Colouring:
    """Read ``v colour`` lines; ``#`` comments and JSON trailer lines are skipped."""
    pairs = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line or line.startswith("{"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'v colour', got {line!r}")
        v, c = int(parts[0]), int(parts[1])
        if v < 0 or c < 0:
            raise ValueError(f"line {lineno}: negative id")
        pairs[v] = c
    size = n if n is not None else max(pairs, default=-1) + 1
    colours = [UNSET] * size
    for v, c in pairs.items():
        if v >= size:
            raise ValueError(f"vertex {v} outside graph of order {size}")
        colours[v] = c
    return Colouring.of(colours)
