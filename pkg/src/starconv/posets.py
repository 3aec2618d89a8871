"""Finite posets with validated order relations."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotAPosetError, StarconvError


@dataclass(frozen=True)
class FinitePoset:
    """A finite poset over string labels.

    ``le[i][j]`` is True iff object i is below object j.  The relation is
    validated to be reflexive, antisymmetric, and transitive at
    construction; use :meth:`from_pairs` to build one from generating pairs
    (their reflexive-transitive closure is taken first).
    """

    objects: tuple[str, ...]
    le: tuple[tuple[bool, ...], ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        n = len(self.objects)
        if len(set(self.objects)) != n:
            raise StarconvError("object labels must be distinct")
        if len(self.le) != n or any(len(row) != n for row in self.le):
            raise StarconvError("le matrix shape does not match the object list")
        for i in range(n):
            if not self.le[i][i]:
                raise NotAPosetError(f"relation is not reflexive at {self.objects[i]!r}")
            for j in range(n):
                if i != j and self.le[i][j] and self.le[j][i]:
                    raise NotAPosetError(
                        f"cycle between {self.objects[i]!r} and {self.objects[j]!r}"
                    )
                for k in range(n):
                    if self.le[i][j] and self.le[j][k] and not self.le[i][k]:
                        raise NotAPosetError(
                            f"relation is not transitive at "
                            f"({self.objects[i]!r}, {self.objects[j]!r}, {self.objects[k]!r})"
                        )
        object.__setattr__(self, "_index", {o: i for i, o in enumerate(self.objects)})

    @classmethod
    def from_pairs(cls, objects, pairs) -> "FinitePoset":
        """Close the generating pairs reflexively and transitively, then
        validate antisymmetry."""
        objects = tuple(objects)
        index = {o: i for i, o in enumerate(objects)}
        n = len(objects)
        le = [[i == j for j in range(n)] for i in range(n)]
        for a, b in pairs:
            if a not in index or b not in index:
                raise StarconvError(f"order pair ({a!r}, {b!r}) mentions an unknown object")
            le[index[a]][index[b]] = True
        for k in range(n):
            row_k = le[k]
            for i in range(n):
                if le[i][k]:
                    row_i = le[i]
                    for j in range(n):
                        if row_k[j]:
                            row_i[j] = True
        return cls(objects, tuple(tuple(row) for row in le))

    @classmethod
    def discrete(cls, objects) -> "FinitePoset":
        """The equality order."""
        objects = tuple(objects)
        n = len(objects)
        return cls(objects, tuple(tuple(i == j for j in range(n)) for i in range(n)))

    def __len__(self) -> int:
        return len(self.objects)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise StarconvError(f"unknown object {label!r}") from None

    def leq(self, i: int, j: int) -> bool:
        return self.le[i][j]

    @property
    def is_discrete(self) -> bool:
        n = len(self.objects)
        return all(not self.le[i][j] for i in range(n) for j in range(n) if i != j)

    def relation_pairs(self):
        """All index pairs (i, j) with i below j, in lexicographic order."""
        n = len(self.objects)
        return [(i, j) for i in range(n) for j in range(n) if self.le[i][j]]

    def strict_pairs(self):
        return [(i, j) for (i, j) in self.relation_pairs() if i != j]


def make_poset(objects, le_pairs) -> FinitePoset:
    """Build a poset from generating pairs (closure plus validation)."""
    return FinitePoset.from_pairs(objects, le_pairs)
