"""Shared knobs for every probabilistic or size-capped computation."""

from __future__ import annotations

import random
from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class SamplingConfig:
    """Parameters for randomized rank estimation and witness search.

    seed          -- RNG seed; every operation derives its own
                     ``random.Random(seed)``, so a report is a pure
                     function of (input, config).
    trials        -- number of sample points / candidate linear forms.
    sample_bound  -- coordinates are drawn uniformly from
                     [-sample_bound, sample_bound].
    symbolic_cap  -- largest square size for which symbolic determinant
                     expansion is attempted.
    """

    seed: int = 0
    trials: int = 12
    sample_bound: int = 10**6
    symbolic_cap: int = 12

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise ValueError("trials must be positive")
        if self.sample_bound < 1:
            raise ValueError("sample_bound must be positive")
        if self.symbolic_cap < 0:
            raise ValueError("symbolic_cap must be nonnegative")

    def rng(self, *tags: object) -> "random.Random":
        """A fresh generator for one named operation.

        Seeding with a string is deterministic across processes, so two
        runs with the same config and the same tags draw identical
        samples, while differently tagged operations are decorrelated.
        """
        label = ":".join(str(t) for t in (self.seed,) + tags)
        return random.Random(label)


DEFAULT_CONFIG = SamplingConfig()
