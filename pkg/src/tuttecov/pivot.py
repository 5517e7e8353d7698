"""Pivot strategies for choosing the non-degenerate element to split on."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from .errors import InvalidParameters
from .matroid import Matroid, _bits

Chooser = Callable[[Matroid, int], int]


@dataclass(frozen=True)
class PivotStrategy:
    """``min-index``, ``max-index`` or ``seeded``.

    Positions refer to the current ground order of the matroid being split,
    which always preserves the relative order of the original labels. A
    seeded strategy draws from ``random.Random(seed)`` in the order pivots
    are requested, so a fixed seed replays the same choices.
    """

    kind: str = "min-index"
    seed: int | None = None

    def __post_init__(self):
        if self.kind not in ("min-index", "max-index", "seeded"):
            raise InvalidParameters(f"unknown pivot strategy {self.kind!r}")
        if self.kind == "seeded" and self.seed is None:
            raise InvalidParameters("a seeded strategy needs a seed")

    def chooser(self) -> Chooser:
        """Fresh stateful chooser mapping (matroid, candidate mask) to a position."""
        if self.kind == "min-index":
            return lambda M, mask: (mask & -mask).bit_length() - 1
        if self.kind == "max-index":
            return lambda M, mask: mask.bit_length() - 1
        rng = random.Random(self.seed)
        return lambda M, mask: rng.choice(_bits(mask))

    def __str__(self):
        return f"seeded({self.seed})" if self.kind == "seeded" else self.kind


MIN_INDEX = PivotStrategy("min-index")
MAX_INDEX = PivotStrategy("max-index")


def seeded(seed: int) -> PivotStrategy:
    return PivotStrategy("seeded", seed)
