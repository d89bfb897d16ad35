"""Configuration system for swapdeck.

This module defines how callers specify search limits (caps on the
reconstruction and swap searches), which graphs may act as blockers, and
how a census run is executed.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import List

# Bound on the process-wide canonical-labeling memo (entries, not bytes).
CANONICAL_CACHE_SIZE = 1 << 16


class BlockerUniverse(Enum):
    """Which graphs may serve as blockers of a sub-deck."""
    ALL_SIMPLE = "all"            # any simple graph, disconnected allowed
    CONNECTED_ONLY = "connected"  # connected graphs only


@dataclass
class SearchConfig:
    """Limits for the exhaustive searches."""

    ern_cap: int = 5                                   # largest sub-deck size tried
    swap_cap: int = 2                                  # largest swap set size tried
    universe: BlockerUniverse = BlockerUniverse.ALL_SIMPLE

    def validate(self) -> List[str]:
        """Validate configuration for consistency.

        Returns:
            List of validation errors (empty if valid)
        """
        errors = []
        if self.ern_cap < 1:
            errors.append("ern_cap must be at least 1")
        if self.swap_cap < 1:
            errors.append("swap_cap must be at least 1")
        if not isinstance(self.universe, BlockerUniverse):
            errors.append(f"unknown blocker universe {self.universe!r}")
        return errors


@dataclass
class CensusConfig:
    """Complete configuration for a census run over a graph6 corpus."""

    search: SearchConfig = field(default_factory=SearchConfig)

    # Row filters
    regular_only: bool = False
    connected_only: bool = False

    # Execution
    jobs: int = 1                 # worker processes for the sync census
    max_concurrent: int = 8       # rows in flight for the async census
    progress: bool = False        # progress bar on stderr

    @classmethod
    def quick(cls) -> "CensusConfig":
        """Smallest caps that still decide ern >= 3 and 2-swappability."""
        return cls(search=SearchConfig(ern_cap=2, swap_cap=2))

    @classmethod
    def theorem1_sweep(cls, cap: int = 3) -> "CensusConfig":
        """Config for the ern >= 3 implies 2-swappable sweep.

        Args:
            cap: ern cap; values >= 2 decide whether ern >= 3
        """
        return cls(search=SearchConfig(ern_cap=cap, swap_cap=2), connected_only=True)

    def validate(self) -> List[str]:
        errors = list(self.search.validate())
        if self.jobs < 1:
            errors.append("jobs must be positive")
        if self.max_concurrent < 1:
            errors.append("max_concurrent must be positive")
        return errors
