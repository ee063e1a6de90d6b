"""Partitions, conjugation, box complements, and box enumeration."""

import json
from itertools import combinations_with_replacement
from math import comb


class Partition:
    """A weakly decreasing tuple of nonnegative integers.

    Trailing zeros are stripped on construction, so ``Partition((3, 1, 0))``
    equals ``Partition((3, 1))``.
    """

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"not weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"negative part in {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        self.parts = parts

    def weight(self):
        return sum(self.parts)

    def length(self):
        return len(self.parts)

    def padded(self, n):
        """Parts padded with zeros to length n (error if more than n parts)."""
        if len(self.parts) > n:
            raise ValueError(f"{self} has more than {n} parts")
        return self.parts + (0,) * (n - len(self.parts))

    def conjugate(self):
        """Transpose of the Young diagram."""
        if not self.parts:
            return Partition()
        return Partition(
            tuple(sum(1 for p in self.parts if p >= i) for i in range(1, self.parts[0] + 1))
        )

    def complement(self, k, l):
        """Complementary partition inside the k x l box."""
        if len(self.parts) > k or (self.parts and self.parts[0] > l):
            raise ValueError(f"{self} does not fit in a {k}x{l} box")
        padded = self.padded(k)
        return Partition(tuple(l - padded[k - 1 - i] for i in range(k)))

    def fits_box(self, k, l):
        return len(self.parts) <= k and (not self.parts or self.parts[0] <= l)

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.parts == other.parts
        if isinstance(other, tuple):
            return self == Partition(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    def __repr__(self):
        return f"Partition{self.parts!r}"

    def to_json(self):
        return json.dumps(list(self.parts))


def partition_from_text(s):
    s = s.strip().strip("()")
    if not s:
        return Partition()
    return Partition(tuple(int(p) for p in s.split(",")))


def enumerate_box(k, l):
    """All partitions with at most k parts, each at most l.

    Ordered lexicographically ascending on the length-k padded tuples;
    there are C(k+l, k) of them.
    """
    if k < 1 or l < 1:
        raise ValueError("box dimensions must be >= 1")
    out = []
    for c in combinations_with_replacement(range(l + 1), k):
        out.append(Partition(tuple(reversed(c))))
    out.sort(key=lambda p: p.padded(k))
    return out


def box_count(k, l):
    return comb(k + l, k)
