"""Binomial expansions in a fixed base and the growth/shrink operators."""

from __future__ import annotations

from dataclasses import dataclass

from regrange import kernels

binomial = kernels.binomial
growth = kernels.growth
shrink = kernels.shrink


@dataclass(frozen=True)
class MacaulayRep:
    """Base-t binomial expansion a = C(k(t), t) + C(k(t-1), t-1) + ... + C(k(j), j).

    Tops are strictly decreasing and the trailing index j satisfies k(j) >= j;
    smaller contributions are dropped (they are null in the shortened form).
    """

    base: int
    tops: tuple

    def __post_init__(self):
        if self.base < 1:
            raise ValueError("base must be positive")
        if not self.tops:
            raise ValueError("empty representation")
        if len(self.tops) > self.base:
            raise ValueError("more tops than indices")
        for a, b in zip(self.tops, self.tops[1:]):
            if a <= b:
                raise ValueError("tops must be strictly decreasing")
        j = self.base - len(self.tops) + 1
        if j < 1 or self.tops[-1] < j:
            raise ValueError("trailing top below its index")

    @property
    def indices(self):
        """Lower indices t, t-1, ..., j matching the tops."""
        return tuple(range(self.base, self.base - len(self.tops), -1))

    def value(self):
        return sum(binomial(k, i) for k, i in zip(self.tops, self.indices))

    def grow(self):
        """Value of the expansion with every C(k, i) shifted to C(k+1, i+1)."""
        return sum(binomial(k + 1, i + 1) for k, i in zip(self.tops, self.indices))

    def shrunk(self):
        """Value of the expansion with every C(k, i) shifted to C(k-1, i-1)."""
        return sum(binomial(k - 1, i - 1) for k, i in zip(self.tops, self.indices))


def macaulay_rep(a, t):
    """The unique base-t binomial expansion of a >= 1, greedily maximal tops."""
    return MacaulayRep(t, kernels.macaulay_tops(a, t))
