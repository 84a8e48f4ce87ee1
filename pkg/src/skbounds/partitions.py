"""Partitions of the terminal set and the multivariate mutual information.

The shared-information rate of a source is the minimum, over all partitions
of the terminals into at least two cells, of

    ( sum of cell entropies - total entropy ) / (number of cells - 1).

The unique finest minimizer is the fundamental partition; a source whose
fundamental partition consists of singletons is called Type S.  The search
is an exhaustive scan of the partition lattice via restricted growth
strings, which is the verifiable choice at desk scale (the cap below keeps
the count at Bell(12), about 4.2M).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import CapExceededError, InternalInvariantError
from .hypergraph import WeightedHypergraph, format_subset, mask_of, vertices_of

PARTITION_CAP = 12


@dataclass(frozen=True)
class Partition:
    """Disjoint nonempty cells (bitmasks) covering {1..m}.

    Cells are kept in canonical order: sorted by smallest member.
    """

    m: int
    cells: tuple[int, ...]

    def __post_init__(self):
        full = (1 << self.m) - 1
        seen = 0
        for cell in self.cells:
            if cell == 0:
                raise ValueError("empty cell in partition")
            if cell & ~full:
                raise ValueError("cell contains a vertex outside {1..m}")
            if cell & seen:
                raise ValueError("cells are not disjoint")
            seen |= cell
        if seen != full:
            raise ValueError("cells do not cover the vertex set")
        ordered = tuple(sorted(self.cells, key=lambda c: c & -c))
        object.__setattr__(self, "cells", ordered)

    @classmethod
    def from_vertex_cells(cls, m: int, cells: Iterable[Iterable[int]]) -> "Partition":
        return cls(m, tuple(mask_of(cell) for cell in cells))

    @property
    def size(self) -> int:
        return len(self.cells)

    def vertex_cells(self) -> tuple[tuple[int, ...], ...]:
        return tuple(vertices_of(cell) for cell in self.cells)

    def is_refinement_of(self, other: "Partition") -> bool:
        """True when every cell of self sits inside a cell of other."""
        return all(any(cell & ~big == 0 for big in other.cells) for cell in self.cells)

    def __str__(self) -> str:
        return "{" + ",".join(format_subset(cell) for cell in self.cells) + "}"


def _raw_partitions(m: int, min_cells: int) -> Iterator[tuple[int, ...]]:
    # Restricted growth strings: label[0] = 0, label[i] <= max(label[:i]) + 1.
    labels = [0] * m

    def rec(i: int, used: int) -> Iterator[tuple[int, ...]]:
        if i == m:
            if used >= min_cells:
                cells = [0] * used
                for idx, lab in enumerate(labels):
                    cells[lab] |= 1 << idx
                yield tuple(cells)
            return
        for lab in range(used):
            labels[i] = lab
            yield from rec(i + 1, used)
        labels[i] = used
        yield from rec(i + 1, used + 1)

    yield from rec(1, 1)


def _check_enumeration_size(m: int) -> None:
    if m < 2:
        raise ValueError("partition enumeration needs m >= 2")
    if m > PARTITION_CAP:
        raise CapExceededError(
            f"m = {m} exceeds the partition enumeration cap of {PARTITION_CAP}"
        )


def enumerate_partitions(m: int) -> Iterator[Partition]:
    """All partitions of {1..m} with at least two cells, each exactly once.

    Yields Bell(m) - 1 partitions, in restricted-growth-string order (cells
    already canonical: ordered by smallest member).
    """
    _check_enumeration_size(m)
    for cells in _raw_partitions(m, min_cells=2):
        yield Partition(m, cells)


def partition_mi(hg: WeightedHypergraph, partition: Partition) -> Fraction:
    """Shared-information value of one partition (at least two cells)."""
    if partition.m != hg.m:
        raise ValueError("partition and hypergraph disagree on m")
    if partition.size < 2:
        raise ValueError("partition value needs at least two cells")
    total = hg.total_entropy
    acc = -total
    for cell in partition.cells:
        acc += hg.entropy(cell)
    return acc / (partition.size - 1)


def cross_edges(hg: WeightedHypergraph, partition: Partition) -> tuple[tuple[int, ...], Fraction]:
    """Hyperedges not contained in any single cell, with their weight sum."""
    if partition.m != hg.m:
        raise ValueError("partition and hypergraph disagree on m")
    crossing = tuple(
        e for e in hg.edges
        if not any(e & ~cell == 0 for cell in partition.cells)
    )
    weight = sum((hg.weights[e] for e in crossing), Fraction(0))
    return crossing, weight


@dataclass(frozen=True)
class MmiResult:
    """Minimum shared-information value with every minimizing partition.

    `fundamental` is the unique finest minimizer; every other minimizer is a
    coarsening of it.
    """

    value: Fraction
    fundamental: Partition
    all_minimizers: tuple[Partition, ...]


def mmi(hg: WeightedHypergraph) -> MmiResult:
    """Minimize the partition value over all partitions with >= 2 cells.

    Returns the minimum, the finest minimizer, and all minimizers.  The
    finest minimizer is guaranteed unique, and all other minimizers must
    coarsen it; a violation of either fact is reported as an internal error
    because it cannot happen for hypergraphical sources.
    """
    _check_enumeration_size(hg.m)
    ent = hg.entropy_table()
    total = ent[hg.full_mask]

    best: Fraction | None = None
    minimizers: list[tuple[int, ...]] = []
    for cells in _raw_partitions(hg.m, min_cells=2):
        acc = -total
        for cell in cells:
            acc += ent[cell]
        value = acc / (len(cells) - 1)
        if best is None or value < best:
            best = value
            minimizers = [cells]
        elif value == best:
            minimizers.append(cells)

    assert best is not None and minimizers
    max_cells = max(len(cells) for cells in minimizers)
    finest = [cells for cells in minimizers if len(cells) == max_cells]
    if len(finest) != 1:
        raise InternalInvariantError(
            f"finest minimizer is not unique: {len(finest)} partitions with {max_cells} cells"
        )
    fundamental = Partition(hg.m, finest[0])
    all_parts = tuple(Partition(hg.m, cells) for cells in minimizers)
    for part in all_parts:
        if not fundamental.is_refinement_of(part):
            raise InternalInvariantError(
                f"minimizer {part} is not a coarsening of the fundamental partition {fundamental}"
            )
    return MmiResult(value=best, fundamental=fundamental, all_minimizers=all_parts)


def is_type_s(hg: WeightedHypergraph) -> bool:
    """True when the fundamental partition is the singleton partition."""
    return mmi(hg).fundamental.size == hg.m
