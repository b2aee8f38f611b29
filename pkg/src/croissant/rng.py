"""Portable seeded randomness.

All stochastic generators draw from SplitMix64 (Steele, Lea & Flood 2014),
a 64-bit add/xor-shift/multiply generator.  Only integer arithmetic is used,
so a seed reproduces the same stream on every platform.  Floats in [0, 1)
are built from the top 53 bits of each output.

Replicate seeds are derived by folding identifiers through the SplitMix64
finalizer, so a replicate's stream does not depend on how many draws any
other replicate made or on execution order.
"""

import numpy as np

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15
_M1 = 0xBF58476D1CE4E5B9
_M2 = 0x94D049BB133111EB
_TWO_M53 = 2.0 ** -53

MODEL_TAGS = {"er": 1, "ws": 2, "ba": 3}


def mix64(z: int) -> int:
    """SplitMix64 output finalizer (a bijection on 64-bit integers)."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * _M1) & MASK64
    z = ((z ^ (z >> 27)) * _M2) & MASK64
    return z ^ (z >> 31)


def derive_seed(base_seed: int, *parts: int) -> int:
    """Fold integer identifiers into a 64-bit seed.

    ``derive_seed(base, tag, grid_index, replicate)`` is what the sweep uses.
    """
    h = mix64(base_seed & MASK64)
    for part in parts:
        h = mix64((h ^ mix64((part + GAMMA) & MASK64)) + GAMMA)
    return h


class SplitMix64:
    """Counter-based SplitMix64 stream."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        if seed < 0 or seed > MASK64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
        self.state = seed

    def next_u64(self) -> int:
        self.state = (self.state + GAMMA) & MASK64
        return mix64(self.state)

    def random(self) -> float:
        return (self.next_u64() >> 11) * _TWO_M53

    def randbelow(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)`` by Lemire's multiply-shift with rejection."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        x = self.next_u64()
        prod = x * bound
        low = prod & MASK64
        if low < bound:
            threshold = ((1 << 64) - bound) % bound
            while low < threshold:
                x = self.next_u64()
                prod = x * bound
                low = prod & MASK64
        return prod >> 64

    def u64_array(self, count: int) -> np.ndarray:
        """The next ``count`` outputs, identical to ``count`` calls of ``next_u64``."""
        steps = np.arange(1, count + 1, dtype=np.uint64)
        z = np.uint64(self.state) + steps * np.uint64(GAMMA)
        self.state = (self.state + count * GAMMA) & MASK64
        z = (z ^ (z >> np.uint64(30))) * np.uint64(_M1)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(_M2)
        return z ^ (z >> np.uint64(31))

    def random_array(self, count: int) -> np.ndarray:
        return (self.u64_array(count) >> np.uint64(11)).astype(np.float64) * _TWO_M53
