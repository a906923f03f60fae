from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rootpoly.partitions import (
    ReverseTableau,
    arm_leg_data,
    as_partition,
    cells,
    conjugate,
    contains,
    dominates,
    enumerate_partitions,
    enumerate_reverse_tableaux,
    is_horizontal_strip,
    n_stat,
    part,
    r_minus_c,
    special_tableau,
    staircase,
    weight,
)

partitions = st.lists(st.integers(0, 6), max_size=5).map(
    lambda xs: as_partition(sorted(xs, reverse=True))
)


def test_as_partition_normalizes():
    assert as_partition([3, 2, 0, 0]) == (3, 2)
    assert as_partition([]) == ()
    with pytest.raises(ValueError):
        as_partition([1, 2])
    with pytest.raises(ValueError):
        as_partition([2, -1])


def test_basic_statistics():
    lam = (4, 2, 1)
    assert weight(lam) == 7
    assert part(lam, 1) == 4 and part(lam, 5) == 0
    assert n_stat(lam) == 0 * 4 + 1 * 2 + 2 * 1
    assert staircase(4) == (3, 2, 1)
    assert conjugate(lam) == (3, 2, 1, 1)


@given(partitions)
def test_conjugate_is_an_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert weight(conjugate(lam)) == weight(lam)


def test_arm_leg_data():
    lam = (4, 3, 1)
    arm, leg, ac, lc = arm_leg_data(lam, (1, 2))
    assert (arm, leg, ac, lc) == (2, 1, 1, 0)
    arm, leg, ac, lc = arm_leg_data(lam, (2, 1))
    assert (arm, leg, ac, lc) == (2, 1, 0, 1)
    with pytest.raises(ValueError):
        arm_leg_data(lam, (3, 2))


def test_cells_count_matches_weight():
    lam = (3, 3, 1)
    assert len(list(cells(lam))) == weight(lam)


@given(partitions, partitions)
def test_containment_implies_dominance(mu, lam):
    if contains(mu, lam):
        assert dominates(mu, lam, max(len(mu), len(lam), 1))


def test_dominance_has_no_equal_weight_rule():
    # partial-sum comparison only; the weights may differ
    assert dominates((1,), (3, 1), 2)
    assert not dominates((3, 1), (1,), 2)
    assert dominates((2, 2), (3, 1), 2)
    assert not dominates((3, 1), (2, 2), 2)


def test_enumerate_partitions_is_graded_and_complete():
    out = enumerate_partitions(5, 3)
    assert out[0] == ()
    assert len(out) == len(set(out))
    weights = [weight(lam) for lam in out]
    assert weights == sorted(weights)
    # partitions of w into at most 3 parts: 1, 1, 2, 3, 4, 5
    from collections import Counter

    counts = Counter(weights)
    assert [counts[w] for w in range(6)] == [1, 1, 2, 3, 4, 5]


def test_horizontal_strips():
    assert is_horizontal_strip((3, 1), (2,))
    assert is_horizontal_strip((3, 1), (3, 1))
    assert not is_horizontal_strip((2, 2), (1,))  # two boxes in column 2
    assert not is_horizontal_strip((2,), (3,))


def test_r_minus_c():
    # strip (3,1)/(2): rows 1 and 2 gain boxes in columns 3 and 1
    assert r_minus_c((3, 1), (2,)) == frozenset({(1, 2)})
    assert r_minus_c((2, 2), (2, 1)) == frozenset({(2, 1)})
    with pytest.raises(ValueError):
        r_minus_c((2, 2), (1,))


def test_special_tableau_entries():
    T = special_tableau((2, 1), 3)
    ent = T.entries()
    assert ent[(1, 1)] == 3 and ent[(1, 2)] == 3 and ent[(2, 1)] == 2
    assert T.tableau_weight() == (0, 1, 2)


def test_reverse_tableaux_counts():
    assert len(enumerate_reverse_tableaux((2, 1), 3)) == 8
    assert len(enumerate_reverse_tableaux((3, 1), 2)) == 3
    assert enumerate_reverse_tableaux((1, 1, 1), 2) == []


@given(partitions, st.integers(1, 4))
def test_reverse_tableaux_chains_are_strips(lam, n):
    for T in enumerate_reverse_tableaux(lam, n)[:20]:
        assert T.chain[0] == lam and T.chain[-1] == ()
        for outer, inner in T.strips():
            assert is_horizontal_strip(outer, inner)
        # columns strictly decrease
        ent = T.entries()
        for (i, j), e in ent.items():
            below = ent.get((i + 1, j))
            if below is not None:
                assert below < e


def test_tableau_entry_outside_shape():
    T = special_tableau((2,), 2)
    with pytest.raises(ValueError):
        T.entry((2, 1))
