"""Run configuration: seeds, trial counts and resource caps.

Every randomized subsystem draws from one seeded generator configured here,
so identical (inputs, seed) always reproduce identical outputs.
"""

from __future__ import annotations

from dataclasses import dataclass

DEFAULT_SEED = 1729
DEFAULT_TRIALS = 3
DEFAULT_COORD_BOUND = 100

# largest n^|w| tensor power the Schur-functor builder will touch
DEFAULT_MAX_TENSOR_CELLS = 300_000
# largest matrix model dimension constructors will produce
DEFAULT_MAX_MODEL_DIM = 5_000
# largest number of W2 sub-multisets searched exhaustively before the
# greedy shortcut kicks in
DEFAULT_MAX_SPLIT_CANDIDATES = 1_000_000


class ResourceCapError(RuntimeError):
    """A constructor refused to build something above a configured cap."""

    def __init__(self, cap_name: str, needed, cap):
        self.cap_name = cap_name
        self.needed = needed
        self.cap = cap
        super().__init__(f"resource cap exceeded: {cap_name} needs {needed}, cap is {cap}")


class ModelInvariantError(RuntimeError):
    """A matrix model failed one of its defining relations."""

    def __init__(self, relation: str):
        self.relation = relation
        super().__init__(f"model invariant violated: {relation}")


@dataclass(frozen=True)
class RunConfig:
    seed: int = DEFAULT_SEED
    trials: int = DEFAULT_TRIALS
    coord_bound: int = DEFAULT_COORD_BOUND
    max_tensor_cells: int = DEFAULT_MAX_TENSOR_CELLS
    max_model_dim: int = DEFAULT_MAX_MODEL_DIM
    max_split_candidates: int = DEFAULT_MAX_SPLIT_CANDIDATES
    output_format: str = "text"

    def __post_init__(self):
        if self.trials < 1 or self.coord_bound < 1:
            raise ValueError("trials and coord_bound must be positive")
        if min(self.max_tensor_cells, self.max_model_dim, self.max_split_candidates) < 1:
            raise ValueError("resource caps must be positive")
        if self.output_format not in ("text", "json"):
            raise ValueError("output_format must be 'text' or 'json'")
