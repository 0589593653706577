"""Deterministic 64-bit PRNG used for layout jitter and fixture generation.

SplitMix64: a fixed, dependency-free mixing sequence so that identical seeds
produce identical streams on every platform and Python version.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4BB7C9


class SplitMix64:
    """Tiny seeded generator with a frozen output sequence."""

    def __init__(self, seed: int) -> None:
        self._state = seed & _MASK

    def next_u64(self) -> int:
        """Return the next 64-bit unsigned integer of the stream."""
        self._state = (self._state + _GAMMA) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return (z ^ (z >> 31)) & _MASK

    def next_float(self) -> float:
        """Uniform float in [0, 1) with 53 bits of precision."""
        return (self.next_u64() >> 11) * (2.0 ** -53)

    def next_uniform(self, low: float, high: float) -> float:
        """Uniform float in [low, high)."""
        return low + (high - low) * self.next_float()

    def next_below(self, bound: int) -> int:
        """Integer in [0, bound). Modulo reduction; bias is irrelevant here."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        return self.next_u64() % bound
