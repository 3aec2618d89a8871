"""Promonoidal data over a finite poset, and exhaustive law checkers.

A structure holds a rank-3 table ``p`` (the promultiplication), an optional
unit table ``j``, and an optional duality map ``s`` on objects, all valued
in one carrier.  The checkers sweep the full index space deterministically,
collect at most :data:`MAX_WITNESSES` counterexamples in lexicographic
index order, and never mutate their inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .carriers import Carrier, DEFAULT_TOL, Value
from .errors import InvalidStructureError, UnsupportedOperationError
from .posets import FinitePoset

MAX_WITNESSES = 16


@dataclass(frozen=True)
class Witness:
    """An index tuple (as object labels) where two values disagreed."""

    at: tuple[str, ...]
    lhs: Value
    rhs: Value


@dataclass(frozen=True)
class CheckReport:
    law: str
    passed: bool
    witnesses: tuple[Witness, ...]

    def __post_init__(self):
        if self.passed != (len(self.witnesses) == 0):
            raise InvalidStructureError("passed must mirror an empty witness list")


class _WitnessSink:
    """Collects up to MAX_WITNESSES counterexamples."""

    def __init__(self):
        self.items: list[Witness] = []

    def add(self, at, lhs, rhs) -> bool:
        """Record a witness; returns True when the cap is reached."""
        self.items.append(Witness(tuple(at), lhs, rhs))
        return len(self.items) >= MAX_WITNESSES

    def report(self, law: str) -> CheckReport:
        return CheckReport(law, not self.items, tuple(self.items))


@dataclass(frozen=True)
class PromonoidalStructure:
    """A carrier-valued promultiplication table on a finite poset.

    ``p[a][b][c]`` and ``j[a]`` are dense tuples indexed by object position.
    ``s`` maps object index to object index (total, not necessarily
    involutive; the Heyting negation is a legitimate non-involutive case).
    ``j`` may be None for structures without a unit.
    """

    poset: FinitePoset
    carrier: Carrier
    p: tuple[tuple[tuple[Value, ...], ...], ...]
    j: tuple[Value, ...] | None = None
    s: tuple[int, ...] | None = None

    def __post_init__(self):
        n = len(self.poset)
        coerce = self.carrier.coerce
        if len(self.p) != n or any(
            len(plane) != n or any(len(row) != n for row in plane) for plane in self.p
        ):
            raise InvalidStructureError("p table shape must be n x n x n")
        p = tuple(
            tuple(tuple(coerce(v) for v in row) for row in plane) for plane in self.p
        )
        object.__setattr__(self, "p", p)
        if self.j is not None:
            if len(self.j) != n:
                raise InvalidStructureError("j table length must match the object count")
            object.__setattr__(self, "j", tuple(coerce(v) for v in self.j))
        if self.s is not None:
            if len(self.s) != n or any(not (0 <= t < n) for t in self.s):
                raise InvalidStructureError("s must map every object to an object")
            object.__setattr__(self, "s", tuple(self.s))
        if not self.carrier.idempotent and not self.poset.is_discrete:
            raise InvalidStructureError(
                "non-idempotent carriers are only supported on discrete posets"
            )

    @classmethod
    def from_predicates(
        cls,
        poset: FinitePoset,
        carrier: Carrier,
        p_holds,
        j_holds=None,
        s_map=None,
    ) -> "PromonoidalStructure":
        """Build an indicator-valued structure from index predicates."""
        n = len(poset)
        unit, bottom = carrier.unit, carrier.bottom
        p = tuple(
            tuple(
                tuple(unit if p_holds(a, b, c) else bottom for c in range(n))
                for b in range(n)
            )
            for a in range(n)
        )
        j = None
        if j_holds is not None:
            j = tuple(unit if j_holds(a) else bottom for a in range(n))
        s = tuple(s_map(a) for a in range(n)) if s_map is not None else None
        return cls(poset, carrier, p, j, s)

    # -- accessors -----------------------------------------------------------

    def hom(self, a: int, b: int) -> Value:
        """Enriched hom: unit below, bottom otherwise."""
        return self.carrier.unit if self.poset.leq(a, b) else self.carrier.bottom

    def p_at(self, a: str, b: str, c: str) -> Value:
        ix = self.poset.index
        return self.p[ix(a)][ix(b)][ix(c)]

    def s_label(self, a: str) -> str:
        if self.s is None:
            raise UnsupportedOperationError("structure has no duality map")
        return self.poset.objects[self.s[self.poset.index(a)]]

    def replace_p(self, a: str, b: str, c: str, value: Value) -> "PromonoidalStructure":
        """A copy with one p entry replaced (revalidated)."""
        ix = self.poset.index
        ai, bi, ci = ix(a), ix(b), ix(c)
        p = [[list(row) for row in plane] for plane in self.p]
        p[ai][bi][ci] = value
        return PromonoidalStructure(
            self.poset,
            self.carrier,
            tuple(tuple(tuple(row) for row in plane) for plane in p),
            self.j,
            self.s,
        )


@dataclass(frozen=True)
class Functor:
    """A carrier-valued function on the objects of a structure.

    Monotonicity is not enforced at construction (pointwise dualization is
    antitone, so intermediate values of lower convolutions would be
    rejected); use :meth:`monotone_witness` or :func:`check_variance`.
    """

    structure: PromonoidalStructure
    values: tuple[Value, ...]

    def __post_init__(self):
        if len(self.values) != len(self.structure.poset):
            raise InvalidStructureError("value table length must match the object count")
        coerce = self.structure.carrier.coerce
        object.__setattr__(self, "values", tuple(coerce(v) for v in self.values))

    @classmethod
    def from_mapping(cls, structure: PromonoidalStructure, mapping) -> "Functor":
        """Values by object label; omitted objects default to bottom."""
        bottom = structure.carrier.bottom
        index = structure.poset.index
        vals = [bottom] * len(structure.poset)
        for label, value in dict(mapping).items():
            vals[index(label)] = value
        return cls(structure, tuple(vals))

    def at(self, label: str) -> Value:
        return self.values[self.structure.poset.index(label)]

    def monotone_witness(self, tol: float = DEFAULT_TOL) -> Witness | None:
        """First order pair where the values are not monotone, or None."""
        carrier = self.structure.carrier
        objects = self.structure.poset.objects
        for i, k in self.structure.poset.relation_pairs():
            if not carrier.leq(self.values[i], self.values[k], tol):
                return Witness((objects[i], objects[k]), self.values[i], self.values[k])
        return None


def unit_functor(structure: PromonoidalStructure) -> Functor:
    """The unit table j viewed as a functor."""
    if structure.j is None:
        raise UnsupportedOperationError("structure has no unit table")
    return Functor(structure, structure.j)


# -- checkers ---------------------------------------------------------------


def check_variance(
    structure: PromonoidalStructure,
    functors=(),
    tol: float = DEFAULT_TOL,
) -> CheckReport:
    """p must be antitone in its first two slots and monotone in the third;
    j and every supplied functor must be monotone.

    Vacuous on discrete posets beyond reflexive comparisons.
    """
    carrier, poset, p = structure.carrier, structure.poset, structure.p
    leq = carrier.leq
    objects = poset.objects
    pairs = poset.relation_pairs()
    sink = _WitnessSink()
    for a_lo, a in pairs:
        for b_lo, b in pairs:
            for c, c_hi in pairs:
                if not leq(p[a][b][c], p[a_lo][b_lo][c_hi], tol):
                    if sink.add(
                        (objects[a], objects[b], objects[c],
                         objects[a_lo], objects[b_lo], objects[c_hi]),
                        p[a][b][c],
                        p[a_lo][b_lo][c_hi],
                    ):
                        return sink.report("variance")
    if structure.j is not None:
        j = structure.j
        for a, a_hi in pairs:
            if not leq(j[a], j[a_hi], tol):
                if sink.add((objects[a], objects[a_hi]), j[a], j[a_hi]):
                    return sink.report("variance")
    for functor in functors:
        witness = functor.monotone_witness(tol)
        if witness is not None and sink.add(witness.at, witness.lhs, witness.rhs):
            break
    return sink.report("variance")


def check_associativity(structure: PromonoidalStructure, tol: float = DEFAULT_TOL) -> CheckReport:
    """join_x p(i,j,x) (x) p(x,k,l) must equal join_x p(i,x,l) (x) p(j,k,x)
    for every quadruple."""
    carrier, p = structure.carrier, structure.p
    n = len(structure.poset)
    objects = structure.poset.objects
    conv = carrier.conv_join
    eq = carrier.eq
    rng = range(n)
    # column views: left_cols[k][l][x] = p[x][k][l]; mid_rows[i][l][x] = p[i][x][l]
    left_cols = [[[p[x][k][l] for x in rng] for l in rng] for k in rng]
    mid_rows = [[[p[i][x][l] for x in rng] for l in rng] for i in rng]
    sink = _WitnessSink()
    for i in rng:
        mid_i = mid_rows[i]
        p_i = p[i]
        for j in rng:
            row_ij = p_i[j]
            p_j = p[j]
            for k in rng:
                cols_k = left_cols[k]
                row_jk = p_j[k]
                for l in rng:
                    lhs = conv(row_ij, cols_k[l])
                    rhs = conv(mid_i[l], row_jk)
                    if not eq(lhs, rhs, tol):
                        if sink.add(
                            (objects[i], objects[j], objects[k], objects[l]), lhs, rhs
                        ):
                            return sink.report("associativity")
    return sink.report("associativity")


def check_unit(structure: PromonoidalStructure, tol: float = DEFAULT_TOL) -> CheckReport:
    """j must represent the hom: join_x j(x) (x) p(x,a,b) and
    join_x j(x) (x) p(a,x,b) must both equal hom(a,b)."""
    if structure.j is None:
        raise UnsupportedOperationError("structure has no unit table")
    carrier, p, j = structure.carrier, structure.p, structure.j
    n = len(structure.poset)
    objects = structure.poset.objects
    conv = carrier.conv_join
    eq = carrier.eq
    rng = range(n)
    sink = _WitnessSink()
    for a in rng:
        p_a = p[a]
        for b in rng:
            hom = structure.hom(a, b)
            left = conv(j, [p[x][a][b] for x in rng])
            if not eq(left, hom, tol):
                if sink.add((objects[a], objects[b]), left, hom):
                    return sink.report("unit")
                continue
            right = conv(j, [p_a[x][b] for x in rng])
            if not eq(right, hom, tol):
                if sink.add((objects[a], objects[b]), right, hom):
                    return sink.report("unit")
    return sink.report("unit")


def check_cyclic(structure: PromonoidalStructure, tol: float = DEFAULT_TOL) -> CheckReport:
    """The cyclic relations p(a,b,Sc) = p(b,c,Sa) = p(c,a,Sb)."""
    if structure.s is None:
        raise UnsupportedOperationError("check_cyclic needs a duality map")
    carrier, p, s = structure.carrier, structure.p, structure.s
    n = len(structure.poset)
    objects = structure.poset.objects
    eq = carrier.eq
    sink = _WitnessSink()
    for a in range(n):
        for b in range(n):
            p_ab = p[a][b]
            for c in range(n):
                e1 = p_ab[s[c]]
                e2 = p[b][c][s[a]]
                at = (objects[a], objects[b], objects[c])
                if not eq(e1, e2, tol):
                    if sink.add(at, e1, e2):
                        return sink.report("cyclic")
                    continue
                e3 = p[c][a][s[b]]
                if not eq(e1, e3, tol):
                    if sink.add(at, e1, e3):
                        return sink.report("cyclic")
    return sink.report("cyclic")


def check_dual_compat(structure: PromonoidalStructure, tol: float = DEFAULT_TOL) -> CheckReport:
    """Self-duality of the table: p(Sa,Sb,Sc) = star(p(a,b,c)).

    This is an extra axiom satisfied by fusion-style data (where star on
    dimensions is the identity); indicator tables over the real carriers
    generally fail it.
    """
    if structure.s is None:
        raise UnsupportedOperationError("check_dual_compat needs a duality map")
    if not structure.carrier.has_star:  # pragma: no cover - built-ins all have star
        raise UnsupportedOperationError("check_dual_compat needs a carrier with star")
    carrier, p, s = structure.carrier, structure.p, structure.s
    n = len(structure.poset)
    objects = structure.poset.objects
    eq, star = carrier.eq, carrier.star
    sink = _WitnessSink()
    for a in range(n):
        for b in range(n):
            for c in range(n):
                lhs = p[s[a]][s[b]][s[c]]
                rhs = star(p[a][b][c])
                if not eq(lhs, rhs, tol):
                    if sink.add((objects[a], objects[b], objects[c]), lhs, rhs):
                        return sink.report("dual_compat")
    return sink.report("dual_compat")
