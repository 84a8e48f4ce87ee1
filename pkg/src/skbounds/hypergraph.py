"""Weighted hypergraphs on the terminal set {1..m} and their entropies.

Vertex subsets are bitmasks (vertex i occupies bit i-1), so subset algebra
is plain integer arithmetic.  A hypergraph stores only hyperedges of
strictly positive weight: the edge set is exactly the support of the weight
function.  The weight of a hyperedge is the entropy of the independent
randomness shared by the terminals it contains, which yields the two closed
forms used throughout this package:

* the entropy of a group A is the total weight of hyperedges meeting A;
* the entropy of A given the remaining terminals is the total weight of
  hyperedges contained in A.

Hypergraphs are immutable after construction and all operations are pure,
so instances can be shared freely across concurrent work.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import CapExceededError

# Hyperedges are bitmasks; parsing rejects anything wider than this.
MAX_VERTICES = 20


def mask_of(vertices: Iterable[int]) -> int:
    """Bitmask of a vertex collection (vertices are 1-based)."""
    mask = 0
    for v in vertices:
        mask |= 1 << (v - 1)
    return mask


def vertices_of(mask: int) -> tuple[int, ...]:
    """Ascending vertex tuple of a bitmask."""
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def format_subset(mask: int) -> str:
    """Render a vertex subset as "{1,2}"."""
    return "{" + ",".join(str(v) for v in vertices_of(mask)) + "}"


def subset_weight_table(m: int, entries: Mapping[int, Fraction]) -> list[Fraction]:
    """table[B] = total value of entries on hyperedges e contained in B.

    Computed with a subset-sum (zeta) transform in O(2^m * m) additions.
    """
    zero = Fraction(0)
    table = [zero] * (1 << m)
    for mask, value in entries.items():
        table[mask] += value
    for bit in range(m):
        b = 1 << bit
        for s in range(1 << m):
            if s & b:
                table[s] += table[s ^ b]
    return table


@dataclass(frozen=True)
class WeightedHypergraph:
    """Terminal count plus a map from hyperedge bitmasks to positive weights.

    Zero-weight entries are dropped on construction (the edge set is the
    support of the weight function); negative weights are rejected.
    """

    m: int
    weights: dict[int, Fraction]

    def __post_init__(self):
        if self.m < 2:
            raise ValueError("a source needs at least 2 terminals")
        if self.m > MAX_VERTICES:
            raise CapExceededError(
                f"m = {self.m} exceeds the supported maximum of {MAX_VERTICES}"
            )
        full = (1 << self.m) - 1
        clean: dict[int, Fraction] = {}
        for mask, value in self.weights.items():
            if not isinstance(mask, int) or mask <= 0 or mask > full:
                raise ValueError(f"hyperedge mask {mask!r} is not a nonempty subset of {{1..{self.m}}}")
            value = Fraction(value)
            if value < 0:
                raise ValueError(f"negative weight {value} on hyperedge {format_subset(mask)}")
            if value > 0:
                clean[mask] = value
        object.__setattr__(self, "weights", clean)

    @property
    def full_mask(self) -> int:
        return (1 << self.m) - 1

    @property
    def edges(self) -> tuple[int, ...]:
        """Hyperedge masks in canonical order (sorted by vertex tuple)."""
        return tuple(sorted(self.weights, key=vertices_of))

    @property
    def total_entropy(self) -> Fraction:
        return sum(self.weights.values(), Fraction(0))

    @property
    def is_graphical(self) -> bool:
        """True when every hyperedge has at most two vertices."""
        return all(mask.bit_count() <= 2 for mask in self.weights)

    @property
    def has_singletons(self) -> bool:
        return any(mask.bit_count() == 1 for mask in self.weights)

    def _check_subset(self, subset: int) -> None:
        if subset < 0 or subset > self.full_mask:
            raise ValueError(f"subset mask {subset} out of range for m = {self.m}")

    def entropy(self, subset: int) -> Fraction:
        """Entropy of the group of terminals in `subset`.

        Equals the total weight of hyperedges intersecting the subset;
        the empty group has entropy 0.
        """
        self._check_subset(subset)
        return sum((w for mask, w in self.weights.items() if mask & subset), Fraction(0))

    def conditional_entropy(self, subset: int) -> Fraction:
        """Entropy of `subset` given the remaining terminals.

        Equals the total weight of hyperedges fully contained in the subset,
        which is also entropy(M) - entropy(complement).
        """
        self._check_subset(subset)
        return sum(
            (w for mask, w in self.weights.items() if mask & ~subset == 0),
            Fraction(0),
        )

    def entropy_table(self) -> list[Fraction]:
        """entropy(A) for every subset mask A, as a list indexed by mask."""
        cond = self.conditional_entropy_table()
        total = self.total_entropy
        full = self.full_mask
        return [total - cond[full ^ a] for a in range(full + 1)]

    def conditional_entropy_table(self) -> list[Fraction]:
        """conditional_entropy(A) for every subset mask A."""
        return subset_weight_table(self.m, self.weights)

    def restrict(self, packing: Mapping[int, Fraction]) -> "WeightedHypergraph":
        """Source left after partially removing hyperedge randomness.

        `packing` must assign a value 0 <= x(e) <= w(e) to every hyperedge;
        hyperedges reduced to zero drop out of the new support.
        """
        if set(packing) != set(self.weights):
            raise ValueError("packing must assign a value to exactly the hyperedges of the source")
        for mask, value in packing.items():
            if value < 0:
                raise ValueError(f"negative packing entry on {format_subset(mask)}")
            if value > self.weights[mask]:
                raise ValueError(
                    f"packing entry {value} exceeds weight {self.weights[mask]} on {format_subset(mask)}"
                )
        return WeightedHypergraph(self.m, {mask: Fraction(v) for mask, v in packing.items()})
