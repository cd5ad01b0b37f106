"""Packing-coloring value types shared by the constructors and the oracle."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class SPackingSpec:
    """A non-decreasing sequence of exclusion radii, one per color class."""

    radii: tuple[int, ...]

    def __post_init__(self):
        if not self.radii:
            raise ValueError("at least one radius required")
        if any(r < 1 for r in self.radii):
            raise ValueError("radii must be positive")
        if any(a > b for a, b in zip(self.radii, self.radii[1:])):
            raise ValueError("radii must be non-decreasing")

    @property
    def r(self) -> int:
        return len(self.radii)

    def labels(self) -> tuple[str, ...]:
        if self.radii == (1, 1, 2, 2):
            return ("1a", "1b", "2a", "2b")
        return tuple(f"c{i + 1}" for i in range(self.r))


SPEC_1122 = SPackingSpec((1, 1, 2, 2))

# class indices for the (1,1,2,2) instance
C1A, C1B, C2A, C2B = 0, 1, 2, 3


@dataclass(frozen=True)
class PackingColoring:
    """A total assignment of vertices to color-class indices."""

    spec: SPackingSpec
    assignment: dict[int, int]

    def label(self, v: int) -> str:
        return self.spec.labels()[self.assignment[v]]

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.spec.r)]
        for v in sorted(self.assignment):
            out[self.assignment[v]].append(v)
        return out

    def transposed(self, i: int, j: int) -> "PackingColoring":
        """Swap two color classes; valid for classes of equal radius."""
        if self.spec.radii[i] != self.spec.radii[j]:
            raise ValueError("only equal-radius classes may be transposed")
        swap = {i: j, j: i}
        return PackingColoring(
            self.spec,
            {v: swap.get(c, c) for v, c in self.assignment.items()},
        )

    def as_lines(self) -> str:
        labels = self.spec.labels()
        return "\n".join(
            f"{v} {labels[self.assignment[v]]}" for v in sorted(self.assignment)
        ) + "\n"


def parse_coloring_lines(text: str, spec: SPackingSpec) -> PackingColoring:
    """Parse "vertex label" lines into a coloring for the given spec."""
    label_to_idx = {lab: i for i, lab in enumerate(spec.labels())}
    assignment: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ValueError(f"line {lineno}: expected 'vertex label', got {line!r}")
        try:
            v = int(fields[0])
        except ValueError:
            raise ValueError(f"line {lineno}: bad vertex {fields[0]!r}") from None
        if fields[1] not in label_to_idx:
            raise ValueError(f"line {lineno}: unknown label {fields[1]!r}")
        assignment[v] = label_to_idx[fields[1]]
    return PackingColoring(spec, assignment)
