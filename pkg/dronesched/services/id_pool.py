"""
Module: id_pool.py

Minimum-free idNumber bookkeeping: the first color component of every request
"""

import heapq

from loguru import logger as L
from sortedcontainers import SortedSet

from dronesched.exceptions import IdNotInUse


class IdPool:
    """
    Hands out the smallest positive idNumber not held by a live request.

    `g_id_number` is the largest idNumber ever issued; free and used ids partition 1..g_id_number.
    """

    def __init__(self) -> None:
        self.g_id_number = 0
        self._free: list[int] = []
        self._used: SortedSet = SortedSet()

    def acquire_id(self) -> int:
        """
        Returns the minimum free id, or a fresh one when every issued id is in use.
        """
        if self._free:
            id_number = heapq.heappop(self._free)
        else:
            self.g_id_number += 1
            id_number = self.g_id_number
            L.debug(f"new idNumber {id_number}")
        self._used.add(id_number)
        return id_number

    def release_id(self, id_number: int) -> None:
        """
        Returns an id to the free pool.

        Raises:
            IdNotInUse: on a double release or an id that was never issued
        """
        if id_number not in self._used:
            raise IdNotInUse(id_number)
        self._used.remove(id_number)
        heapq.heappush(self._free, id_number)

    @property
    def used_ids(self) -> list[int]:
        return list(self._used)

    @property
    def free_ids(self) -> list[int]:
        return sorted(self._free)

    def __len__(self) -> int:
        return len(self._used)
