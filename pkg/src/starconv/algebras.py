"""Partial-operation tables: generalized effect algebras, difference
algebras, and groupoids, with the validation each mode requires."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvalidAlgebraError
from .posets import FinitePoset
from .structures import CheckReport, _WitnessSink


@dataclass(frozen=True)
class EffectAlgebra:
    """A generalized effect algebra: a partial sum that is associative where
    defined, cancellative, with 0 neutral and positivity (a + b = 0 forces
    a = b = 0).  The induced order is a <= b iff a + x = b for some x.
    """

    objects: tuple[str, ...]
    zero: int
    table: tuple[tuple[int | None, ...], ...]
    order: FinitePoset = field(init=False, compare=False)

    def __post_init__(self):
        n = len(self.objects)
        t = self.table
        if len(t) != n or any(len(row) != n for row in t):
            raise InvalidAlgebraError("sum table shape must match the object count")
        z = self.zero
        for a in range(n):
            if t[z][a] != a or t[a][z] != a:
                raise InvalidAlgebraError("0 must be neutral on both sides")
        for a in range(n):
            for b in range(n):
                if t[a][b] == z and not (a == z and b == z):
                    raise InvalidAlgebraError("positivity fails: a + b = 0 with a or b nonzero")
                for c in range(n):
                    ab = t[a][b]
                    bc = t[b][c]
                    left = t[ab][c] if ab is not None else None
                    right = t[a][bc] if bc is not None else None
                    if (left is None) != (right is None) or left != right:
                        raise InvalidAlgebraError(
                            f"associativity fails at "
                            f"({self.objects[a]!r}, {self.objects[b]!r}, {self.objects[c]!r})"
                        )
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if t[a][b] is not None and t[a][b] == t[a][c] and b != c:
                        raise InvalidAlgebraError("left cancellation fails")
                    if t[b][a] is not None and t[b][a] == t[c][a] and b != c:
                        raise InvalidAlgebraError("right cancellation fails")
        pairs = [
            (self.objects[a], self.objects[t[a][x]])
            for a in range(n)
            for x in range(n)
            if t[a][x] is not None
        ]
        object.__setattr__(self, "order", FinitePoset.from_pairs(self.objects, pairs))

    @classmethod
    def from_partial(cls, objects, zero_label, sums) -> "EffectAlgebra":
        """Build from a mapping (a_label, b_label) -> c_label; absent keys
        are undefined sums."""
        objects = tuple(objects)
        index = {o: i for i, o in enumerate(objects)}
        n = len(objects)
        table = [[None] * n for _ in range(n)]
        for (a, b), c in sums.items():
            table[index[a]][index[b]] = index[c]
        return cls(objects, index[zero_label], tuple(tuple(row) for row in table))

    @property
    def is_commutative(self) -> bool:
        n = len(self.objects)
        return all(self.table[a][b] == self.table[b][a] for a in range(n) for b in range(n))

    def sum(self, a: int, b: int) -> int | None:
        return self.table[a][b]

    def difference(self) -> "DifferenceAlgebra":
        """The Galois partner: c - b is the unique x with x + b = c."""
        if not self.is_commutative:
            raise InvalidAlgebraError("difference tables are derived for commutative sums")
        n = len(self.objects)
        diff = [[None] * n for _ in range(n)]
        for x in range(n):
            for b in range(n):
                c = self.table[x][b]
                if c is not None:
                    diff[c][b] = x
        return DifferenceAlgebra(self.objects, self.zero, tuple(tuple(r) for r in diff))


@dataclass(frozen=True)
class DifferenceAlgebra:
    """A generalized (commutative) difference algebra: b - a is defined
    exactly when a is below b in the induced order."""

    objects: tuple[str, ...]
    zero: int
    table: tuple[tuple[int | None, ...], ...]
    order: FinitePoset = field(init=False, compare=False)

    def __post_init__(self):
        n = len(self.objects)
        t = self.table
        if len(t) != n or any(len(row) != n for row in t):
            raise InvalidAlgebraError("difference table shape must match the object count")
        z = self.zero
        for a in range(n):
            if t[a][z] != a:
                raise InvalidAlgebraError("a - 0 must equal a")
            if t[a][a] != z:
                raise InvalidAlgebraError("a - a must equal 0")
        pairs = [
            (self.objects[b], self.objects[c])
            for c in range(n)
            for b in range(n)
            if t[c][b] is not None
        ]
        order = FinitePoset.from_pairs(self.objects, pairs)
        for c in range(n):
            for b in range(n):
                if (t[c][b] is not None) != order.leq(b, c):
                    raise InvalidAlgebraError(
                        "definedness of the difference must match the induced order"
                    )
        # exchange law on chains of the order
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if order.leq(a, b) and order.leq(b, c):
                        if not order.leq(t[c][b], t[c][a]) or t[t[c][a]][t[c][b]] != t[b][a]:
                            raise InvalidAlgebraError("difference exchange law fails")
        object.__setattr__(self, "order", order)

    def difference(self, c: int, b: int) -> int | None:
        return self.table[c][b]


def galois_check(effect: EffectAlgebra, diff: DifferenceAlgebra) -> CheckReport:
    """Verify a + b <= c iff a <= c - b over all triples of a matched pair."""
    if effect.objects != diff.objects:
        raise InvalidAlgebraError("the two algebras must share an object list")
    n = len(effect.objects)
    order = effect.order
    sink = _WitnessSink()
    for a in range(n):
        for b in range(n):
            ab = effect.table[a][b]
            for c in range(n):
                lhs = ab is not None and order.leq(ab, c)
                cb = diff.table[c][b]
                rhs = cb is not None and order.leq(a, cb)
                if lhs != rhs:
                    if sink.add(
                        (effect.objects[a], effect.objects[b], effect.objects[c]),
                        lhs,
                        rhs,
                    ):
                        return sink.report("galois")
    return sink.report("galois")


def chain_effect(bound: int) -> EffectAlgebra:
    """The truncated chain {0..bound} with a + b defined iff a + b <= bound."""
    objects = [str(i) for i in range(bound + 1)]
    sums = {
        (str(a), str(b)): str(a + b)
        for a in range(bound + 1)
        for b in range(bound + 1)
        if a + b <= bound
    }
    return EffectAlgebra.from_partial(objects, "0", sums)


@dataclass(frozen=True)
class Groupoid:
    """A groupoid presented by its arrow set and partial composition table.

    ``a . b`` composes a-then-b, so it is defined exactly when the target of
    a matches the source of b.  Validation derives identities, sources,
    targets, and inverses, and checks associativity over composable triples.
    """

    arrows: tuple[str, ...]
    table: tuple[tuple[int | None, ...], ...]
    identities: tuple[int, ...] = field(init=False, compare=False)
    source: tuple[int, ...] = field(init=False, compare=False)
    target: tuple[int, ...] = field(init=False, compare=False)
    inverse: tuple[int, ...] = field(init=False, compare=False)

    def __post_init__(self):
        n = len(self.arrows)
        t = self.table
        if len(t) != n or any(len(row) != n for row in t):
            raise InvalidAlgebraError("composition table shape must match the arrow count")
        idents = [
            e
            for e in range(n)
            if t[e][e] == e
            and all(t[e][a] in (a, None) for a in range(n))
            and all(t[a][e] in (a, None) for a in range(n))
        ]
        source = [None] * n
        target = [None] * n
        for a in range(n):
            lefts = [e for e in idents if t[e][a] == a]
            rights = [e for e in idents if t[a][e] == a]
            if len(lefts) != 1 or len(rights) != 1:
                raise InvalidAlgebraError(
                    f"arrow {self.arrows[a]!r} needs unique source and target identities"
                )
            source[a], target[a] = lefts[0], rights[0]
        for a in range(n):
            for b in range(n):
                if (t[a][b] is not None) != (target[a] == source[b]):
                    raise InvalidAlgebraError(
                        "composition must be defined exactly when endpoints match"
                    )
                if t[a][b] is not None:
                    c = t[a][b]
                    if source[c] != source[a] or target[c] != target[b]:
                        raise InvalidAlgebraError("composite endpoints are inconsistent")
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if t[a][b] is not None and t[b][c] is not None:
                        if t[t[a][b]][c] != t[a][t[b][c]]:
                            raise InvalidAlgebraError("composition is not associative")
        inverse = [None] * n
        for a in range(n):
            candidates = [
                b
                for b in range(n)
                if t[a][b] == source[a] and t[b][a] == target[a]
            ]
            if len(candidates) != 1:
                raise InvalidAlgebraError(f"arrow {self.arrows[a]!r} needs a unique inverse")
            inverse[a] = candidates[0]
        object.__setattr__(self, "identities", tuple(idents))
        object.__setattr__(self, "source", tuple(source))
        object.__setattr__(self, "target", tuple(target))
        object.__setattr__(self, "inverse", tuple(inverse))

    @classmethod
    def from_partial(cls, arrows, composites) -> "Groupoid":
        arrows = tuple(arrows)
        index = {a: i for i, a in enumerate(arrows)}
        n = len(arrows)
        table = [[None] * n for _ in range(n)]
        for (a, b), c in composites.items():
            table[index[a]][index[b]] = index[c]
        return cls(arrows, tuple(tuple(row) for row in table))

    @classmethod
    def cyclic_group(cls, order: int) -> "Groupoid":
        """The cyclic group Z/order as a one-object groupoid; 'e' and 'g',
        'g2', ... name the elements."""
        labels = ["e"] + [f"g{i}" if i > 1 else "g" for i in range(1, order)]
        comp = {
            (labels[a], labels[b]): labels[(a + b) % order]
            for a in range(order)
            for b in range(order)
        }
        return cls.from_partial(labels, comp)

    @classmethod
    def pair(cls, n_points: int) -> "Groupoid":
        """The pair groupoid on {1..n_points}: one arrow x->y for each pair,
        composed as (x->y) . (y->z) = (x->z)."""
        labels = {
            (x, y): f"{x}->{y}"
            for x in range(1, n_points + 1)
            for y in range(1, n_points + 1)
        }
        comp = {}
        for (x, y), a in labels.items():
            for (u, z), b in labels.items():
                if y == u:
                    comp[(a, b)] = labels[(x, z)]
        return cls.from_partial(tuple(labels.values()), comp)
