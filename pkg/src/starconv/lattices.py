"""Finite ortholattices and Heyting lattices used by the gallery."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvalidAlgebraError, NotHeytingError
from .posets import FinitePoset


def _meet_index(poset: FinitePoset, a: int, b: int) -> int | None:
    lower = [z for z in range(len(poset)) if poset.leq(z, a) and poset.leq(z, b)]
    greatest = [z for z in lower if all(poset.leq(w, z) for w in lower)]
    return greatest[0] if len(greatest) == 1 else None


def _join_index(poset: FinitePoset, a: int, b: int) -> int | None:
    upper = [z for z in range(len(poset)) if poset.leq(a, z) and poset.leq(b, z)]
    least = [z for z in upper if all(poset.leq(z, w) for w in upper)]
    return least[0] if len(least) == 1 else None


def _lattice_tables(poset: FinitePoset, kind: str):
    n = len(poset)
    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            m = _meet_index(poset, a, b)
            j = _join_index(poset, a, b)
            if m is None or j is None:
                raise InvalidAlgebraError(
                    f"{kind}: no meet or join for "
                    f"({poset.objects[a]!r}, {poset.objects[b]!r})"
                )
            meet[a][b] = m
            join[a][b] = j
    bottoms = [a for a in range(n) if all(poset.leq(a, b) for b in range(n))]
    tops = [a for a in range(n) if all(poset.leq(b, a) for b in range(n))]
    if len(bottoms) != 1 or len(tops) != 1:
        raise InvalidAlgebraError(f"{kind}: lattice must be bounded")
    return (
        tuple(tuple(row) for row in meet),
        tuple(tuple(row) for row in join),
        bottoms[0],
        tops[0],
    )


@dataclass(frozen=True)
class OrthoLattice:
    """A bounded lattice with an order-reversing involutive complement.

    Validates a ^ a' = 0 and a v a' = 1.  Orthogonality means a <= b'.
    """

    poset: FinitePoset
    complement: tuple[int, ...]
    meet: tuple[tuple[int, ...], ...] = field(init=False, compare=False)
    join: tuple[tuple[int, ...], ...] = field(init=False, compare=False)
    bottom: int = field(init=False, compare=False)
    top: int = field(init=False, compare=False)

    def __post_init__(self):
        meet, join, bottom, top = _lattice_tables(self.poset, "ortholattice")
        object.__setattr__(self, "meet", meet)
        object.__setattr__(self, "join", join)
        object.__setattr__(self, "bottom", bottom)
        object.__setattr__(self, "top", top)
        n = len(self.poset)
        comp = self.complement
        if len(comp) != n:
            raise InvalidAlgebraError("complement must be defined on every element")
        for a in range(n):
            if comp[comp[a]] != a:
                raise InvalidAlgebraError("complement must be an involution")
            if meet[a][comp[a]] != bottom or join[a][comp[a]] != top:
                raise InvalidAlgebraError(
                    f"complement law fails at {self.poset.objects[a]!r}"
                )
            for b in range(n):
                if self.poset.leq(a, b) and not self.poset.leq(comp[b], comp[a]):
                    raise InvalidAlgebraError("complement must reverse the order")

    @classmethod
    def from_parts(cls, objects, le_pairs, complement_by_label) -> "OrthoLattice":
        poset = FinitePoset.from_pairs(objects, le_pairs)
        comp = tuple(
            poset.index(complement_by_label[label]) for label in poset.objects
        )
        return cls(poset, comp)

    def orthogonal(self, a: int, b: int) -> bool:
        return self.poset.leq(a, self.complement[b])


def is_orthomodular(lattice: OrthoLattice):
    """Exhaustively test a <= b implies b = a v (a' ^ b).

    Returns (True, None) or (False, (a_label, b_label)) for the first
    failing pair in lexicographic order.
    """
    poset = lattice.poset
    n = len(poset)
    for a in range(n):
        for b in range(n):
            if poset.leq(a, b):
                via = lattice.join[a][lattice.meet[lattice.complement[a]][b]]
                if via != b:
                    return False, (poset.objects[a], poset.objects[b])
    return True, None


def boolean_lattice(n_atoms: int) -> OrthoLattice:
    """The Boolean algebra of subsets of {1..n_atoms}."""
    elements = list(range(1, n_atoms + 1))
    masks = range(1 << n_atoms)
    labels = [subset_label(m, elements) for m in masks]
    pairs = [
        (labels[a], labels[b]) for a in masks for b in masks if a & b == a
    ]
    full = (1 << n_atoms) - 1
    comp = {labels[a]: labels[full ^ a] for a in masks}
    return OrthoLattice.from_parts(labels, pairs, comp)


def mo2_lattice() -> OrthoLattice:
    """MO2: bottom, top, and two complementary pairs of incomparable atoms."""
    objects = ["0", "a", "a'", "b", "b'", "1"]
    pairs = [("0", x) for x in objects] + [(x, "1") for x in objects]
    comp = {"0": "1", "1": "0", "a": "a'", "a'": "a", "b": "b'", "b'": "b"}
    return OrthoLattice.from_parts(objects, pairs, comp)


def o6_lattice() -> OrthoLattice:
    """The benzene ring O6, the canonical ortholattice that is not
    orthomodular: two chains 0 < a < b < 1 and 0 < b' < a' < 1."""
    objects = ["0", "a", "b", "b'", "a'", "1"]
    pairs = (
        [("0", x) for x in objects]
        + [(x, "1") for x in objects]
        + [("a", "b"), ("b'", "a'")]
    )
    comp = {"0": "1", "1": "0", "a": "a'", "a'": "a", "b": "b'", "b'": "b"}
    return OrthoLattice.from_parts(objects, pairs, comp)


@dataclass(frozen=True)
class HeytingLattice:
    """A bounded lattice where every pair has a relative pseudo-complement.

    implication[a][b] is the greatest x with a ^ x <= b; construction fails
    with NotHeytingError when some pair has no greatest such x.
    """

    poset: FinitePoset
    meet: tuple[tuple[int, ...], ...] = field(init=False, compare=False)
    join: tuple[tuple[int, ...], ...] = field(init=False, compare=False)
    bottom: int = field(init=False, compare=False)
    top: int = field(init=False, compare=False)
    implication: tuple[tuple[int, ...], ...] = field(init=False, compare=False)

    def __post_init__(self):
        meet, join, bottom, top = _lattice_tables(self.poset, "Heyting lattice")
        object.__setattr__(self, "meet", meet)
        object.__setattr__(self, "join", join)
        object.__setattr__(self, "bottom", bottom)
        object.__setattr__(self, "top", top)
        n = len(self.poset)
        imp = [[0] * n for _ in range(n)]
        for a in range(n):
            for b in range(n):
                candidates = [x for x in range(n) if self.poset.leq(meet[a][x], b)]
                greatest = [
                    x for x in candidates if all(self.poset.leq(y, x) for y in candidates)
                ]
                if len(greatest) != 1:
                    raise NotHeytingError(
                        f"no greatest x with {self.poset.objects[a]!r} ^ x below "
                        f"{self.poset.objects[b]!r}"
                    )
                imp[a][b] = greatest[0]
        object.__setattr__(self, "implication", tuple(tuple(row) for row in imp))

    @classmethod
    def from_parts(cls, objects, le_pairs) -> "HeytingLattice":
        return cls(FinitePoset.from_pairs(objects, le_pairs))

    def negation(self, a: int) -> int:
        """a => bottom."""
        return self.implication[a][self.bottom]


def chain_heyting(n_elements: int) -> HeytingLattice:
    """The n-element chain 0 < 1 < ... < n-1 as a Heyting lattice."""
    if n_elements < 1:
        raise InvalidAlgebraError("a chain needs at least one element")
    labels = [str(i) for i in range(n_elements)]
    pairs = [(labels[i], labels[k]) for i in range(n_elements) for k in range(i, n_elements)]
    return HeytingLattice.from_parts(labels, pairs)


def implication(lattice: HeytingLattice, a: str, b: str) -> str:
    """Relative pseudo-complement by label."""
    poset = lattice.poset
    return poset.objects[lattice.implication[poset.index(a)][poset.index(b)]]


def subset_label(mask: int, elements) -> str:
    """Canonical label for a subset given as a bitmask over ``elements``."""
    members = [str(e) for i, e in enumerate(elements) if mask >> i & 1]
    return "{" + ",".join(members) + "}"
