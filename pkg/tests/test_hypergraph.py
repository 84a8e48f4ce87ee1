import random
from fractions import Fraction

import pytest

from skbounds import (
    CapExceededError,
    WeightedHypergraph,
    mask_of,
    subset_weight_table,
    vertices_of,
)

EXAMPLE1 = {
    mask_of((1, 2)): Fraction(2),
    mask_of((1, 4)): Fraction(1),
    mask_of((2, 3)): Fraction(1),
    mask_of((3, 4)): Fraction(1),
}


@pytest.fixture
def example1():
    return WeightedHypergraph(4, dict(EXAMPLE1))


def test_mask_round_trip():
    assert vertices_of(mask_of((3, 1))) == (1, 3)
    assert mask_of(()) == 0


def test_rejects_tiny_and_huge_m():
    with pytest.raises(ValueError):
        WeightedHypergraph(1, {1: Fraction(1)})
    with pytest.raises(CapExceededError):
        WeightedHypergraph(21, {1: Fraction(1)})


def test_rejects_bad_edges():
    with pytest.raises(ValueError):
        WeightedHypergraph(3, {0: Fraction(1)})
    with pytest.raises(ValueError):
        WeightedHypergraph(3, {1 << 3: Fraction(1)})
    with pytest.raises(ValueError):
        WeightedHypergraph(3, {3: Fraction(-1)})


def test_zero_weight_edges_are_dropped():
    hg = WeightedHypergraph(3, {3: Fraction(0), 6: Fraction(1)})
    assert hg.edges == (6,)


def test_entropy_example1(example1):
    assert example1.entropy(example1.full_mask) == 5
    assert example1.entropy(0) == 0
    # edges {2,3} and {3,4} are the ones meeting vertex 3
    assert example1.entropy(mask_of((3,))) == 2


def test_conditional_entropy_example1(example1):
    # only edge {1,2} fits inside {1,2}
    assert example1.conditional_entropy(mask_of((1, 2))) == 2
    assert example1.conditional_entropy(example1.full_mask) == example1.total_entropy
    assert example1.conditional_entropy(mask_of((1,))) == 0


def test_subset_out_of_range(example1):
    with pytest.raises(ValueError):
        example1.entropy(1 << 5)
    with pytest.raises(ValueError):
        example1.conditional_entropy(-1)


def test_complement_identity_exhaustive(example1):
    total = example1.total_entropy
    full = example1.full_mask
    for a in range(full + 1):
        assert example1.conditional_entropy(a) == total - example1.entropy(full ^ a)


def test_tables_match_pointwise(example1):
    ent = example1.entropy_table()
    cond = example1.conditional_entropy_table()
    for a in range(example1.full_mask + 1):
        assert ent[a] == example1.entropy(a)
        assert cond[a] == example1.conditional_entropy(a)


def test_subset_weight_table_is_containment_sum():
    entries = {0b011: Fraction(1, 2), 0b110: Fraction(2), 0b100: Fraction(1, 3)}
    table = subset_weight_table(3, entries)
    for b in range(8):
        assert table[b] == sum(
            (v for mask, v in entries.items() if mask & ~b == 0), Fraction(0)
        )


def test_monotonicity_and_submodularity(make_random_hypergraph):
    rng = random.Random(99)
    for m in (3, 4, 5):
        hg = make_random_hypergraph(rng, m)
        ent = hg.entropy_table()
        full = hg.full_mask
        for a in range(full + 1):
            for b in range(full + 1):
                if a & ~b == 0:
                    assert ent[a] <= ent[b]
                assert ent[a] + ent[b] >= ent[a | b] + ent[a & b]


def test_restrict_identity(example1):
    assert example1.restrict(dict(EXAMPLE1)) == example1


def test_restrict_reduces_total(example1):
    packing = dict(EXAMPLE1)
    packing[mask_of((1, 2))] = Fraction(3, 2)
    reduced = example1.restrict(packing)
    assert reduced.total_entropy == Fraction(9, 2)


def test_restrict_drops_zeroed_edges(example1):
    packing = {mask: Fraction(0) for mask in EXAMPLE1}
    reduced = example1.restrict(packing)
    assert reduced.edges == ()
    assert reduced.total_entropy == 0


def test_restrict_validates(example1):
    with pytest.raises(ValueError):
        example1.restrict({mask_of((1, 2)): Fraction(1)})  # missing edges
    bad = dict(EXAMPLE1)
    bad[mask_of((1, 2))] = Fraction(-1)
    with pytest.raises(ValueError):
        example1.restrict(bad)
    bad[mask_of((1, 2))] = Fraction(5, 2)
    with pytest.raises(ValueError):
        example1.restrict(bad)


def test_graphical_flags():
    graph = WeightedHypergraph(3, {0b011: Fraction(1)})
    assert graph.is_graphical and not graph.has_singletons
    with_singleton = WeightedHypergraph(3, {0b011: Fraction(1), 0b100: Fraction(1)})
    assert with_singleton.is_graphical and with_singleton.has_singletons
    hyper = WeightedHypergraph(3, {0b111: Fraction(1)})
    assert not hyper.is_graphical


def test_duplicate_masks_not_possible_from_dict():
    # dict keys are unique; equal-key entries overwrite, so construction is total
    hg = WeightedHypergraph(3, {0b011: Fraction(2)})
    assert hg.weights[0b011] == 2
