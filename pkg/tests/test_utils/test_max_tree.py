"""
Unit test module for the max-augmented AVL tree of open bins
"""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dronesched.utils.max_tree import MaxRemTree


def build(pairs):
    tree = MaxRemTree()
    for bin_number, rem in pairs:
        tree.insert(bin_number, Fraction(rem))
    return tree


def test_first_fit_picks_lowest_numbered_bin_with_room():
    """
    Tests whether the descent finds the lowest key with enough room
    """
    tree = build([(1, 2), (2, 6), (3, 9)])
    assert tree.first_fit(Fraction(5)) == (2, Fraction(1))
    assert dict(tree.items()) == {1: 2, 2: 1, 3: 9}
    assert tree.check()


def test_first_fit_returns_none_when_no_bin_has_room():
    tree = build([(1, 2), (2, 3)])
    assert tree.first_fit(Fraction(4)) is None
    assert MaxRemTree().first_fit(Fraction(1)) is None


def test_max_rem_tracks_deductions():
    """
    Tests whether the subtree maximum follows deductions
    """
    tree = build([(1, 4), (2, 7)])
    assert tree.max_rem == 7
    tree.first_fit(Fraction(7))
    assert tree.max_rem == 4
    assert tree.check()


def test_delete_keeps_order_and_aggregates():
    """
    Tests whether deletes keep key order and subtree maxima
    """
    tree = build([(number, number) for number in range(1, 33)])
    for number in range(2, 33, 3):
        tree.delete(number)
    assert [number for number, _ in tree.items()] == [n for n in range(1, 33) if (n - 2) % 3 != 0]
    assert len(tree) == 32 - len(range(2, 33, 3))
    assert tree.check()


def test_insert_duplicate_and_delete_missing_raise():
    tree = build([(1, 1)])
    with pytest.raises(KeyError):
        tree.insert(1, Fraction(2))
    with pytest.raises(KeyError):
        tree.delete(5)
    with pytest.raises(KeyError):
        tree.get(5)


def test_sequential_inserts_stay_balanced():
    """
    Tests whether increasing inserts keep the tree height logarithmic
    """
    tree = build([(number, 1) for number in range(1, 1025)])
    assert tree.root is not None
    # an AVL tree of 1024 nodes is at most 1.44 log2(n) high
    assert tree.root.height <= 15
    assert tree.check()


@settings(max_examples=200, deadline=None)
@given(
    st.lists(st.integers(min_value=0, max_value=20), min_size=1, max_size=40),
    st.integers(min_value=1, max_value=20),
)
def test_first_fit_matches_linear_scan(rems, cost):
    """
    Tests whether the descent agrees with a linear scan
    """
    tree = build(enumerate(rems, start=1))
    expected = next(((number, rem - cost) for number, rem in enumerate(rems, start=1) if rem >= cost), None)
    assert tree.first_fit(Fraction(cost)) == expected
    assert tree.check()


def test_random_operations_keep_invariants():
    """
    Tests whether random inserts, deductions and deletes keep the AVL and max invariants
    """
    rng = random.Random(7)
    tree = MaxRemTree()
    present: dict[int, Fraction] = {}
    for step in range(2000):
        if present and rng.random() < 0.4:
            number = rng.choice(sorted(present))
            tree.delete(number)
            del present[number]
        else:
            tree.insert(step, Fraction(rng.randint(0, 50), 7))
            present[step] = tree.get(step)
    assert dict(tree.items()) == present
    assert tree.check()
