"""SplitMix64: the one pseudorandom source used throughout the package.

Everything seeded (choice functions, sampled checks, random tables) goes
through here so results are reproducible bit for bit in any language.
"""

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def splitmix64_finalizer(z: int) -> int:
    z = (z + GOLDEN_GAMMA) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """Sequential SplitMix64 stream.

    The k-th output (k starting at 1) is ``splitmix64_finalizer(seed + (k-1)*gamma)``,
    matching the reference generator.
    """

    def __init__(self, seed: int = 0):
        if not 0 <= seed <= MASK64:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
        self.seed = seed
        self._state = seed

    def next_u64(self) -> int:
        out = splitmix64_finalizer(self._state)
        self._state = (self._state + GOLDEN_GAMMA) & MASK64
        return out

    def below(self, n: int) -> int:
        """Uniform integer in ``[0, n)`` by rejection, so no modulo bias."""
        if n <= 0:
            raise ValueError("n must be positive")
        limit = (1 << 64) - (1 << 64) % n
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def bits(self, width: int) -> int:
        """A uniformly random integer of ``width`` bits."""
        out, have = 0, 0
        while have < width:
            out |= self.next_u64() << have
            have += 64
        return out & ((1 << width) - 1)

    def permutation(self, n: int) -> list[int]:
        """Fisher-Yates shuffle of ``range(n)``."""
        perm = list(range(n))
        for i in range(n - 1, 0, -1):
            j = self.below(i + 1)
            perm[i], perm[j] = perm[j], perm[i]
        return perm
