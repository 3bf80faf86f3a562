"""SplitMix64: the package-wide deterministic random number generator.

Every source of randomness in an episode (initial conditions, random
policies, fuzzers) draws from this generator so that a 64-bit seed fully
determines behaviour on every platform.  The algorithm is Steele et al.'s
SplitMix64: state advances by the golden-gamma increment and each output
is finalized with two xor-multiply avalanche rounds.
"""

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """SplitMix64 finalizer: avalanche a 64-bit value."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & MASK64

    def next_u64(self) -> int:
        self._state = (self._state + GOLDEN_GAMMA) & MASK64
        return mix64(self._state)

    def uniform(self, lo: float = 0.0, hi: float = 1.0) -> float:
        """Uniform float in [lo, hi): 53 explicit mantissa bits."""
        u = (self.next_u64() >> 11) * 2.0**-53
        return lo + u * (hi - lo)

    def randint(self, n: int) -> int:
        """Integer in [0, n). Modulo reduction; the bias over a 64-bit
        draw is far below anything observable here."""
        if n < 1:
            raise ValueError("n must be >= 1")
        return self.next_u64() % n

    def split(self) -> "SplitMix64":
        """Fork an independent generator from this stream."""
        return SplitMix64(self.next_u64())
