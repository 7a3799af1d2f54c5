"""
Unit test module for idNumber bookkeeping
"""

import random

import pytest

from dronesched.exceptions import IdNotInUse
from dronesched.services.id_pool import IdPool


def test_first_id_is_one():
    pool = IdPool()
    assert pool.acquire_id() == 1
    assert pool.g_id_number == 1


def test_released_minimum_is_reused():
    """
    Tests whether a released id is handed out before any larger one
    """
    pool = IdPool()
    for _ in range(3):
        pool.acquire_id()
    pool.release_id(2)
    pool.release_id(1)
    assert pool.acquire_id() == 1
    assert pool.acquire_id() == 2
    assert pool.acquire_id() == 4
    assert pool.g_id_number == 4


def test_release_of_unknown_id_fails():
    """
    Tests whether releasing an id not in use raises
    """
    pool = IdPool()
    pool.acquire_id()
    pool.release_id(1)
    with pytest.raises(IdNotInUse):
        pool.release_id(1)
    with pytest.raises(IdNotInUse):
        pool.release_id(7)


def test_acquire_is_always_the_minimum_excluded_value():
    """
    Tests whether acquire always returns the smallest id not in use
    """
    rng = random.Random(3)
    pool = IdPool()
    for _ in range(3000):
        if pool.used_ids and rng.random() < 0.45:
            pool.release_id(rng.choice(pool.used_ids))
        else:
            used = set(pool.used_ids)
            expected = next(number for number in range(1, len(used) + 2) if number not in used)
            assert pool.acquire_id() == expected
        assert sorted(pool.used_ids + pool.free_ids) == list(range(1, pool.g_id_number + 1))
        assert len(pool) == len(pool.used_ids)
