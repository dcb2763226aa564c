"""Portable seeded generator used for every randomized corpus.

The generator is a 64-bit linear congruential generator (Knuth's MMIX
constants) whose initial state is the seed passed once through the
SplitMix64 finalizer, so that neighbouring small seeds do not produce
correlated first draws.  ``next32`` advances the state and returns its high 32 bits;
``below(n)`` is ``next32() % n``.  Shuffles are Fisher-Yates from the last
index down.  Keeping this tiny and explicit makes corpora reproducible in any
language.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
MULTIPLIER = 6364136223846793005
INCREMENT = 1442695040888963407


def splitmix64(z: int) -> int:
    z = (z + 0x9E3779B97F4A7C15) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class Lcg64:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = splitmix64(seed & MASK64)

    def next32(self) -> int:
        self.state = (self.state * MULTIPLIER + INCREMENT) & MASK64
        return self.state >> 32

    def below(self, n: int) -> int:
        if n <= 0:
            raise ValueError("below() needs a positive bound")
        return self.next32() % n

    def choice(self, seq):
        return seq[self.below(len(seq))]

    def shuffle(self, items: list) -> list:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
        return items

    def permutation(self, n: int) -> list[int]:
        return self.shuffle(list(range(n)))
