"""Seeded, portable randomness.

All sampling in this package flows through SplitMix64 so that a seed
fully determines every output, independent of platform and Python
version. The generator is the standard one:

    state <- (state + 0x9E3779B97F4A7C15) mod 2^64
    z <- state
    z <- ((z XOR (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2^64
    z <- ((z XOR (z >> 27)) * 0x94D049BB133111EB) mod 2^64
    output: z XOR (z >> 31)

Bounded draws use rejection sampling (exactly uniform, no modulo bias):
draw 64-bit words until one falls below 2^64 - (2^64 mod bound), then
reduce mod bound. Sampling without replacement is a partial
Fisher-Yates shuffle of the population list in its given order; the
first ``count`` slots are the sample. These procedures are part of the
package's reproducibility contract.
"""

from __future__ import annotations

from typing import Sequence, TypeVar

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15

T = TypeVar("T")


class SplitMix64:
    """Deterministic 64-bit generator with a single word of state."""

    __slots__ = ("_state",)

    def __init__(self, seed: int) -> None:
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound) via rejection sampling."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        threshold = (1 << 64) - ((1 << 64) % bound)
        while True:
            z = self.next_u64()
            if z < threshold:
                return z % bound

    def sample(self, population: Sequence[T], count: int) -> list[T]:
        """``count`` distinct items, via partial Fisher-Yates on a copy."""
        pool = list(population)
        if count > len(pool):
            raise ValueError("sample larger than population")
        for i in range(count):
            j = i + self.below(len(pool) - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:count]
