"""Run configuration shared by the oracles, the kernelizer and the CLI."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class RunConfig:
    rotation_budget: int = 10**6
    spr_budget: int = 10**5
    # smallness constant of the nice-kernel size condition; reported, not enforced
    smallness_c: float = 1.0
    seed: int = 0

    def __post_init__(self) -> None:
        if self.rotation_budget <= 0 or self.spr_budget <= 0:
            raise ValueError("budgets must be positive")


DEFAULT_CONFIG = RunConfig()
