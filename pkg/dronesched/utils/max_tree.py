"""
AVL tree of open bins keyed by bin number, augmented with the maximum remaining capacity of each subtree.

The augmentation lets a first-fit query find the lowest-numbered bin with room for an item in
O(log #bins): descend left whenever the left subtree can hold the item, otherwise stop at the
node itself or go right.
"""

from collections.abc import Iterator
from dataclasses import dataclass
from fractions import Fraction


@dataclass(eq=False, slots=True)
class BinNode:
    """A bin: its number (key), remaining capacity, and the subtree aggregates."""

    bin: int
    rem: Fraction
    max: Fraction
    height: int = 1
    left: "BinNode | None" = None
    right: "BinNode | None" = None


def _height(node: BinNode | None) -> int:
    return node.height if node is not None else 0


def _update(node: BinNode) -> None:
    node.height = 1 + max(_height(node.left), _height(node.right))
    best = node.rem
    if node.left is not None and node.left.max > best:
        best = node.left.max
    if node.right is not None and node.right.max > best:
        best = node.right.max
    node.max = best


def _rotate_right(node: BinNode) -> BinNode:
    pivot = node.left
    assert pivot is not None
    node.left = pivot.right
    pivot.right = node
    _update(node)
    _update(pivot)
    return pivot


def _rotate_left(node: BinNode) -> BinNode:
    pivot = node.right
    assert pivot is not None
    node.right = pivot.left
    pivot.left = node
    _update(node)
    _update(pivot)
    return pivot


def _rebalance(node: BinNode) -> BinNode:
    _update(node)
    balance = _height(node.left) - _height(node.right)
    if balance > 1:
        assert node.left is not None
        if _height(node.left.left) < _height(node.left.right):
            node.left = _rotate_left(node.left)
        return _rotate_right(node)
    if balance < -1:
        assert node.right is not None
        if _height(node.right.right) < _height(node.right.left):
            node.right = _rotate_right(node.right)
        return _rotate_left(node)
    return node


class MaxRemTree:
    """
    Open bins of one idNumber.

    Invariants: search-tree order on `bin`; |height(left) - height(right)| <= 1;
    `max` equals the largest `rem` in the subtree.
    """

    def __init__(self) -> None:
        self.root: BinNode | None = None
        self._size = 0

    def __len__(self) -> int:
        return self._size

    @property
    def max_rem(self) -> Fraction | None:
        return self.root.max if self.root is not None else None

    def insert(self, bin_number: int, rem: Fraction) -> None:
        self.root = self._insert(self.root, bin_number, rem)
        self._size += 1

    def _insert(self, node: BinNode | None, bin_number: int, rem: Fraction) -> BinNode:
        if node is None:
            return BinNode(bin=bin_number, rem=rem, max=rem)
        if bin_number < node.bin:
            node.left = self._insert(node.left, bin_number, rem)
        elif bin_number > node.bin:
            node.right = self._insert(node.right, bin_number, rem)
        else:
            raise KeyError(bin_number)
        return _rebalance(node)

    def delete(self, bin_number: int) -> None:
        self.root = self._delete(self.root, bin_number)
        self._size -= 1

    def _delete(self, node: BinNode | None, bin_number: int) -> BinNode | None:
        if node is None:
            raise KeyError(bin_number)
        if bin_number < node.bin:
            node.left = self._delete(node.left, bin_number)
        elif bin_number > node.bin:
            node.right = self._delete(node.right, bin_number)
        else:
            if node.left is None:
                return node.right
            if node.right is None:
                return node.left
            successor = node.right
            while successor.left is not None:
                successor = successor.left
            node.bin, node.rem = successor.bin, successor.rem
            node.right = self._delete(node.right, successor.bin)
        return _rebalance(node)

    def get(self, bin_number: int) -> Fraction:
        node = self.root
        while node is not None:
            if bin_number < node.bin:
                node = node.left
            elif bin_number > node.bin:
                node = node.right
            else:
                return node.rem
        raise KeyError(bin_number)

    def first_fit(self, cost: Fraction) -> tuple[int, Fraction] | None:
        """
        Deducts `cost` from the lowest-numbered bin whose remaining capacity is at least `cost`.

        Returns:
            (bin number, remaining capacity after the deduction), or None when no bin has room
        """
        if self.root is None or self.root.max < cost:
            return None
        return self._place(self.root, cost)

    def _place(self, node: BinNode, cost: Fraction) -> tuple[int, Fraction]:
        left = node.left
        # null check first: the left child may be missing
        if node.rem >= cost:
            if left is None or left.max < cost:
                node.rem -= cost
                placed = (node.bin, node.rem)
            else:
                placed = self._place(left, cost)
        elif left is not None and left.max >= cost:
            placed = self._place(left, cost)
        else:
            assert node.right is not None
            placed = self._place(node.right, cost)
        # repair the aggregate on the way back up the root-to-node path
        _update(node)
        return placed

    def items(self) -> Iterator[tuple[int, Fraction]]:
        """(bin, rem) pairs in increasing bin order."""
        stack: list[BinNode] = []
        node = self.root
        while stack or node is not None:
            while node is not None:
                stack.append(node)
                node = node.left
            node = stack.pop()
            yield node.bin, node.rem
            node = node.right

    def check(self) -> bool:
        """Recomputes every aggregate from the leaves and compares it with the stored one."""

        def visit(node: BinNode | None, low: int | None, high: int | None) -> tuple[int, Fraction | None]:
            if node is None:
                return 0, None
            if (low is not None and node.bin <= low) or (high is not None and node.bin >= high):
                raise AssertionError(f"bin {node.bin} breaks the search order")
            left_height, left_max = visit(node.left, low, node.bin)
            right_height, right_max = visit(node.right, node.bin, high)
            expected = max(value for value in (node.rem, left_max, right_max) if value is not None)
            if node.max != expected:
                raise AssertionError(f"bin {node.bin} stores max {node.max}, expected {expected}")
            if abs(left_height - right_height) > 1 or node.height != 1 + max(left_height, right_height):
                raise AssertionError(f"bin {node.bin} is out of balance")
            return node.height, node.max

        visit(self.root, None, None)
        return True
