"""SplitMix64 and secret sampling.

A fixed, documented generator keeps seeded benchmarks reproducible across
Python versions and across reimplementations in other languages, which
``random.Random`` does not promise.
"""

from __future__ import annotations

from .core import Code, GameParams

MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound), by rejection of the biased tail."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - (1 << 64) % bound
        while True:
            z = self.next_u64()
            if z < limit:
                return z % bound


def sample_secret(params: GameParams, rng: SplitMix64) -> Code:
    """Fisher-Yates over 1..k, stopped after the first n slots."""
    colors = list(range(1, params.k + 1))
    for i in range(params.n):
        j = i + rng.below(params.k - i)
        colors[i], colors[j] = colors[j], colors[i]
    return tuple(colors[:params.n])


def secret_for_seed(params: GameParams, seed: int) -> Code:
    return sample_secret(params, SplitMix64(seed))
