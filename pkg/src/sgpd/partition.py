"""Equivalence closure of a generating relation, as a canonical partition."""

from __future__ import annotations

from collections.abc import Hashable, Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property


class DisjointSet:
    """Union-find over a fixed universe, keyed by position.

    Roots always point at the smallest position in their set, so the root of
    a class is its canonical representative.
    """

    def __init__(self, universe: Sequence[Hashable]):
        self.universe = tuple(universe)
        self.position = {u: i for i, u in enumerate(self.universe)}
        if len(self.position) != len(self.universe):
            raise ValueError("universe has duplicate members")
        self.parent = list(range(len(self.universe)))

    def _find(self, i: int) -> int:
        root = i
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[i] != root:
            self.parent[i], i = root, self.parent[i]
        return root

    def find(self, u: Hashable) -> Hashable:
        return self.universe[self._find(self.position[u])]

    def union(self, u: Hashable, v: Hashable) -> None:
        a = self._find(self.position[u])
        b = self._find(self.position[v])
        if a == b:
            return
        if b < a:
            a, b = b, a
        self.parent[b] = a

    def partition(self) -> Partition:
        return Partition(self.universe, {u: self.find(u) for u in self.universe})


@dataclass(frozen=True)
class Partition:
    """A partition of an ordered universe.

    ``class_of`` maps each member to its class identifier, which is the
    member of the class that comes first in universe order.
    """

    universe: tuple
    class_of: dict

    @classmethod
    def closure(cls, universe: Sequence[Hashable], pairs: Iterable[tuple[Hashable, Hashable]]) -> Partition:
        """Smallest equivalence on ``universe`` containing ``pairs``."""
        ds = DisjointSet(universe)
        for u, v in pairs:
            ds.union(u, v)
        return ds.partition()

    def __post_init__(self) -> None:
        order = {u: i for i, u in enumerate(self.universe)}
        for u in self.universe:
            rep = self.class_of[u]
            if self.class_of[rep] != rep or order[rep] > order[u]:
                raise ValueError(f"class identifier of {u!r} is not the first member of its class")

    def __hash__(self) -> int:
        return hash(self.universe)

    @cached_property
    def classes(self) -> dict:
        """Class identifier -> members in universe order; identifiers in universe order."""
        out: dict = {}
        for u in self.universe:
            out.setdefault(self.class_of[u], []).append(u)
        return {k: tuple(v) for k, v in out.items()}

    @property
    def representatives(self) -> tuple:
        return tuple(self.classes)

    def same(self, u: Hashable, v: Hashable) -> bool:
        return self.class_of[u] == self.class_of[v]

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes.values())
