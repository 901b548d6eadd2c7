"""Deterministic random numbers, identical on every platform.

A 64-bit linear congruential generator with Knuth's MMIX constants:

    state <- (6364136223846793005 * state + 1442695040888963407) mod 2^64

Doubles are taken from the top 53 bits of the state, so sequences depend only
on the seed, never on the host, the Python build, or library versions.
"""

from __future__ import annotations

_MULT = 6364136223846793005
_INC = 1442695040888963407
_MASK = (1 << 64) - 1


class Lcg:
    """Seeded generator; the same seed always yields the same stream."""

    def __init__(self, seed: int = 42):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (_MULT * self.state + _INC) & _MASK
        return self.state

    def uniform(self) -> float:
        """A double in [0, 1), from the top 53 bits."""
        return (self.next_u64() >> 11) / float(1 << 53)

    def symmetric(self) -> float:
        """A double in [-1, 1)."""
        return 2.0 * self.uniform() - 1.0

    def randrange(self, n: int) -> int:
        """An integer in [0, n)."""
        if n <= 0:
            raise ValueError("randrange needs a positive bound")
        return self.next_u64() % n

    def choice(self, seq):
        return seq[self.randrange(len(seq))]
