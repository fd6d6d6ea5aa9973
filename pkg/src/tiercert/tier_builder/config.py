from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass


@dataclass(frozen=True)
class BuilderConfig:
    max_random_attempts: int = 64
    random_seed: int = 0
    degree_bound: int = 2  # cap for the polynomial-combination search
    primality_policy: str = "fail"  # "fail" | "assume"
    self_check: bool = False  # verify every emitted step while building

    def __post_init__(self):
        if self.primality_policy not in ("fail", "assume"):
            raise ValueError("primality_policy must be 'fail' or 'assume'")
        if self.max_random_attempts < 0 or self.degree_bound < 0:
            raise ValueError("search caps must be non-negative")

    def rng(self, task: str) -> random.Random:
        """A generator seeded by the config seed and the task's text, so results
        do not depend on the order in which tasks are visited."""
        digest = hashlib.sha256(f"{self.random_seed}:{task}".encode()).digest()
        return random.Random(int.from_bytes(digest[:8], "big"))
