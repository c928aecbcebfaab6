"""Sample sizes and budgets for the acceptance runs and experiment scripts."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Tuple


@dataclass(frozen=True)
class AcceptanceConfig:
    arithmetic_triples: int = 1000
    cofinality_samples: int = 1000
    refine_spaces: int = 200
    reembed_spaces: int = 100
    go5_spaces: int = 100
    convergence_triples: int = 500
    # seconds; reported next to each result, not enforced
    budgets: Tuple[float, ...] = (1.0, 1.0, 5.0, 1.0, 5.0, 5.0, 10.0, 1.0)
    golden_fixtures: Tuple[str, ...] = ("L-base", "E-successors", "long-segment")
    hash_seeds: Tuple[str, ...] = ("0", "12345")


@dataclass(frozen=True)
class SelftestConfig:
    seed: int = 0
    samples: int = 200


@dataclass(frozen=True)
class GoldenCommand:
    """One CLI invocation whose output is frozen under tests/golden."""
    fixture: str
    argv: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def filename(self) -> str:
        return f"{self.fixture}.{'-'.join(self.argv)}.json"


def golden_commands(cfg: AcceptanceConfig = AcceptanceConfig()) -> Tuple[GoldenCommand, ...]:
    out = []
    for name in cfg.golden_fixtures:
        out.append(GoldenCommand(name, ("space", "spectrum")))
        out.append(GoldenCommand(name, ("refine",)))
        if name == "E-successors":
            out.append(GoldenCommand(name, ("go5",)))
    return tuple(out)
