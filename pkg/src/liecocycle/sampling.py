"""Seeded random samples and the verification report shared by all checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .lie_core import GroupWord

DEFAULT_SEED = 0
MAX_WORD_LENGTH = 3


@dataclass
class VerificationReport:
    """Outcome of a sampled identity check.

    Passes iff ``max_residual <= tolerance`` and every entry of
    ``conditions`` holds.
    """

    max_residual: float
    samples: int
    tolerance: float
    details: dict[str, Any] = field(default_factory=dict)
    conditions: dict[str, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return bool(self.max_residual <= self.tolerance) and all(self.conditions.values())

    def __bool__(self) -> bool:
        return self.passed

    def to_json(self) -> dict:
        out = {
            "max_residual": float(self.max_residual),
            "samples": int(self.samples),
            "pass": self.passed,
            "tolerance": float(self.tolerance),
        }
        if self.details:
            out["details"] = self.details
        if self.conditions:
            out["conditions"] = {k: bool(v) for k, v in self.conditions.items()}
        return out


def make_rng(seed: int | np.random.Generator | None = DEFAULT_SEED) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(DEFAULT_SEED if seed is None else seed)


def split_rngs(seed: int, count: int) -> list[np.random.Generator]:
    """Independent deterministic streams for concurrent sampling loops."""
    return [np.random.default_rng(s) for s in np.random.SeedSequence(seed).spawn(count)]


def random_ball(rng: np.random.Generator, n: int, radius: float = 1.0) -> np.ndarray:
    """Uniform sample from the closed ball of the given radius in R^n."""
    d = rng.standard_normal(n)
    norm = np.linalg.norm(d)
    if norm == 0.0:
        return np.zeros(n)
    return radius * rng.random() ** (1.0 / n) * d / norm


def random_word(
    rng: np.random.Generator,
    n: int,
    max_length: int = MAX_WORD_LENGTH,
    radius: float = 1.0,
) -> GroupWord:
    """Word of 1 to ``max_length`` letters, each uniform in the ball."""
    k = int(rng.integers(1, max_length + 1))
    return GroupWord(np.array([random_ball(rng, n, radius) for _ in range(k)]))


def random_box(rng: np.random.Generator, n: int) -> np.ndarray:
    """Uniform sample from ``[-1, 1]^n``."""
    return rng.uniform(-1.0, 1.0, n)
