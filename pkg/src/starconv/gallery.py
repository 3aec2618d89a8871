"""Constructors for the built-in families of promonoidal structures.

Fixture names accepted by :func:`resolve_fixture`:

    powerset:N            subsets of {1..N}, max-plus by default
    oml:boolean:N         Boolean algebra with N atoms, as an ortholattice
    oml:mo2, oml:o6       the modular MO2 and the non-orthomodular benzene ring
    heyting:chain:N       the N-element chain as a Heyting lattice
    group:zN              the cyclic group Z/N as a one-object groupoid
    groupoid:pair:N       the pair groupoid on N points
    effect:chain:N        the truncated chain {0..N} with a+b defined iff <= N
    double:effect:chain:N the two-copy doubling of that chain
    fusion:ising          Ising fusion dimensions on {1, eps, sigma}
    fusion:fib            Fibonacci fusion dimensions on {1, tau}
    geometry:fano         Fano-plane collinearity probabilities

Powerset objects are enumerated in bitmask order, so object index i is the
subset with mask i over the ground elements; the cardinality and matroid
rank helpers below rely on that.
"""

from __future__ import annotations

from .algebras import DifferenceAlgebra, EffectAlgebra, Groupoid, chain_effect
from .carriers import Carrier
from .errors import InvalidStructureError, UnknownFixtureError
from .lattices import (
    HeytingLattice,
    OrthoLattice,
    boolean_lattice,
    chain_heyting,
    mo2_lattice,
    o6_lattice,
    subset_label,
)
from .posets import FinitePoset
from .structures import Functor, PromonoidalStructure

MAX_POWERSET_GROUND = 6

INDICATOR_CARRIERS = (Carrier.BOOL, Carrier.MAXTIMES, Carrier.MAXPLUS)


def powerset_structure(elements, carrier: Carrier = Carrier.MAXPLUS) -> PromonoidalStructure:
    """Discrete structure on the powerset of ``elements``.

    p(a,b,c) is the unit exactly when a and b are disjoint with union c;
    j is the unit at the empty set; the duality map is complementation.
    """
    elements = list(elements)
    if len(elements) > MAX_POWERSET_GROUND:
        raise InvalidStructureError(
            f"powerset ground sets are capped at {MAX_POWERSET_GROUND} elements "
            "(tables are dense in the cube of the object count)"
        )
    if carrier not in INDICATOR_CARRIERS:
        raise InvalidStructureError("powerset structures take bool, maxtimes, or maxplus")
    full = (1 << len(elements)) - 1
    labels = [subset_label(m, elements) for m in range(full + 1)]
    poset = FinitePoset.discrete(labels)
    return PromonoidalStructure.from_predicates(
        poset,
        carrier,
        lambda a, b, c: (a & b) == 0 and (a | b) == c,
        lambda a: a == 0,
        lambda a: full ^ a,
    )


def oml_structure(lattice: OrthoLattice, carrier: Carrier = Carrier.MAXTIMES) -> PromonoidalStructure:
    """Discrete structure on an ortholattice: p(a,b,c) is the unit when
    a v b = c with a orthogonal to b; j sits at the bottom element; the
    duality map is the orthocomplement."""
    if carrier not in INDICATOR_CARRIERS:
        raise InvalidStructureError("ortholattice structures take bool, maxtimes, or maxplus")
    poset = FinitePoset.discrete(lattice.poset.objects)
    return PromonoidalStructure.from_predicates(
        poset,
        carrier,
        lambda a, b, c: lattice.join[a][b] == c and lattice.orthogonal(a, b),
        lambda a: a == lattice.bottom,
        lambda a: lattice.complement[a],
    )


def heyting_structure(
    lattice: HeytingLattice, carrier: Carrier = Carrier.MAXTIMES
) -> PromonoidalStructure:
    """Structure on the full lattice order: p(a,b,c) is the unit when
    a ^ b <= c; j sits at the top; the duality map is negation (a => 0),
    which need not be involutive."""
    if carrier not in INDICATOR_CARRIERS:
        raise InvalidStructureError("Heyting structures take bool, maxtimes, or maxplus")
    poset = lattice.poset
    return PromonoidalStructure.from_predicates(
        poset,
        carrier,
        lambda a, b, c: poset.leq(lattice.meet[a][b], c),
        lambda a: a == lattice.top,
        lattice.negation,
    )


def groupoid_structure(groupoid: Groupoid, carrier: Carrier = Carrier.MAXTIMES) -> PromonoidalStructure:
    """Discrete structure on the arrows: p(a,b,c) is the unit when the
    composite a.b is defined and equals c; j sits on the identities; the
    duality map is inversion."""
    if carrier not in INDICATOR_CARRIERS:
        raise InvalidStructureError("groupoid structures take bool, maxtimes, or maxplus")
    poset = FinitePoset.discrete(groupoid.arrows)
    table = groupoid.table
    identities = set(groupoid.identities)
    return PromonoidalStructure.from_predicates(
        poset,
        carrier,
        lambda a, b, c: table[a][b] == c,
        lambda a: a in identities,
        lambda a: groupoid.inverse[a],
    )


def effect_structure(algebra: EffectAlgebra, carrier: Carrier = Carrier.MAXTIMES) -> PromonoidalStructure:
    """Structure on the induced order of a generalized effect algebra:
    p(a,b,c) is the unit when a + b is defined and below c.  The unit table
    is constant (0 is the least element); there is no duality map."""
    if carrier not in INDICATOR_CARRIERS:
        raise InvalidStructureError("effect structures take bool, maxtimes, or maxplus")
    order = algebra.order
    table = algebra.table
    return PromonoidalStructure.from_predicates(
        order,
        carrier,
        lambda a, b, c: table[a][b] is not None and order.leq(table[a][b], c),
        lambda a: order.leq(algebra.zero, a),
    )


def difference_structure(
    algebra: DifferenceAlgebra, carrier: Carrier = Carrier.MAXTIMES
) -> PromonoidalStructure:
    """Structure on a difference algebra: p(a,b,c) is the unit when c - b is
    defined with a below it.  Galois-related pairs produce the same table as
    :func:`effect_structure`."""
    if carrier not in INDICATOR_CARRIERS:
        raise InvalidStructureError("difference structures take bool, maxtimes, or maxplus")
    order = algebra.order
    table = algebra.table
    return PromonoidalStructure.from_predicates(
        order,
        carrier,
        lambda a, b, c: table[c][b] is not None and order.leq(a, table[c][b]),
        lambda a: order.leq(algebra.zero, a),
    )


def double(algebra: EffectAlgebra, carrier: Carrier = Carrier.MAXTIMES) -> PromonoidalStructure:
    """Two-copy doubling of a commutative effect algebra.

    Objects are the originals plus a starred copy.  Order: a <= b as before;
    a* <= b* iff b <= a; a <= b* iff a + b is defined; a* is never below a
    plain element.  Sums: a + b as before; a + b* = (b - a)* when b - a
    exists; starred elements do not add to each other.  p and j are as for
    effect structures, and the duality map swaps the copies; the axioms of
    the result are established by the checkers, not assumed.
    """
    if not algebra.is_commutative:
        raise InvalidStructureError("doubling is defined for commutative effect algebras")
    if carrier not in INDICATOR_CARRIERS:
        raise InvalidStructureError("doubled structures take bool, maxtimes, or maxplus")
    n = len(algebra.objects)
    diff = algebra.difference()
    labels = list(algebra.objects) + [f"{o}*" for o in algebra.objects]
    order_a = algebra.order

    def le2(x: int, y: int) -> bool:
        if x < n and y < n:
            return order_a.leq(x, y)
        if x >= n and y >= n:
            return order_a.leq(y - n, x - n)
        if x < n and y >= n:
            return algebra.table[x][y - n] is not None
        return False

    def sum2(x: int, y: int) -> int | None:
        if x < n and y < n:
            return algebra.table[x][y]
        if x >= n and y >= n:
            return None
        plain, starred = (x, y - n) if x < n else (y, x - n)
        d = diff.table[starred][plain]
        return None if d is None else d + n

    pairs = [
        (labels[x], labels[y]) for x in range(2 * n) for y in range(2 * n) if le2(x, y)
    ]
    poset = FinitePoset.from_pairs(labels, pairs)

    def p_holds(a, b, c):
        s = sum2(a, b)
        return s is not None and poset.leq(s, c)

    zero = algebra.zero
    return PromonoidalStructure.from_predicates(
        poset,
        carrier,
        p_holds,
        lambda a: poset.leq(zero, a),
        lambda a: a + n if a < n else a - n,
    )


def fusion_structure(objects, counts, duality, vacuum) -> PromonoidalStructure:
    """Discrete NAT structure from fusion multiplicities.

    ``counts`` maps (i, j, k) labels to natural numbers (absent means 0);
    ``duality`` must be an involution on the objects; ``vacuum`` names the
    unit object, where j takes the value 1.
    """
    objects = tuple(objects)
    poset = FinitePoset.discrete(objects)
    index = poset.index
    n = len(objects)
    s = tuple(index(duality[o]) for o in objects)
    for a in range(n):
        if s[s[a]] != a:
            raise InvalidStructureError("fusion duality must be an involution")
    p = [[[0] * n for _ in range(n)] for _ in range(n)]
    for (i, j, k), count in counts.items():
        p[index(i)][index(j)][index(k)] = count
    v = index(vacuum)
    j_table = tuple(1 if a == v else 0 for a in range(n))
    return PromonoidalStructure(
        poset,
        Carrier.NAT,
        tuple(tuple(tuple(row) for row in plane) for plane in p),
        j_table,
        s,
    )


def ising_fusion() -> PromonoidalStructure:
    """Ising fusion dimensions: sigma x sigma = 1 + eps, sigma x eps = sigma,
    eps x eps = 1, all objects self-dual."""
    objects = ("1", "eps", "sigma")
    counts = {}
    for x in objects:
        counts[("1", x, x)] = 1
        counts[(x, "1", x)] = 1
    counts[("eps", "eps", "1")] = 1
    counts[("sigma", "sigma", "1")] = 1
    counts[("sigma", "sigma", "eps")] = 1
    counts[("sigma", "eps", "sigma")] = 1
    counts[("eps", "sigma", "sigma")] = 1
    return fusion_structure(objects, counts, {o: o for o in objects}, "1")


def fibonacci_fusion() -> PromonoidalStructure:
    """Fibonacci fusion dimensions: tau x tau = 1 + tau."""
    objects = ("1", "tau")
    counts = {
        ("1", "1", "1"): 1,
        ("1", "tau", "tau"): 1,
        ("tau", "1", "tau"): 1,
        ("tau", "tau", "1"): 1,
        ("tau", "tau", "tau"): 1,
    }
    return fusion_structure(objects, counts, {o: o for o in objects}, "1")


def prob_geometry_structure(objects, table, carrier: Carrier = Carrier.MAXTIMES) -> PromonoidalStructure:
    """Discrete probabilistic-geometry structure.

    ``table`` maps (a, b, c) labels to probabilities in [0, 1] (absent means
    0); there is no unit table.  The identity duality map is attached only
    when the table is cyclically symmetric; otherwise the structure carries
    no duality map.
    """
    if carrier is not Carrier.MAXTIMES:
        raise InvalidStructureError("probabilistic geometry uses the maxtimes carrier")
    objects = tuple(objects)
    poset = FinitePoset.discrete(objects)
    index = poset.index
    n = len(objects)
    p = [[[0.0] * n for _ in range(n)] for _ in range(n)]
    for (a, b, c), value in table.items():
        if not 0.0 <= float(value) <= 1.0:
            raise InvalidStructureError(f"probability {value!r} outside [0, 1]")
        p[index(a)][index(b)][index(c)] = float(value)
    cyclic = all(
        p[a][b][c] == p[b][c][a] == p[c][a][b]
        for a in range(n)
        for b in range(n)
        for c in range(n)
    )
    s = tuple(range(n)) if cyclic else None
    return PromonoidalStructure(
        poset,
        carrier,
        tuple(tuple(tuple(row) for row in plane) for plane in p),
        None,
        s,
    )


FANO_LINES = (
    frozenset({1, 2, 3}),
    frozenset({1, 4, 5}),
    frozenset({1, 6, 7}),
    frozenset({2, 4, 6}),
    frozenset({2, 5, 7}),
    frozenset({3, 4, 7}),
    frozenset({3, 5, 6}),
)


def fano_structure() -> PromonoidalStructure:
    """0/1 collinearity probabilities on the Fano plane.

    p(a,b,c) = 1 when c lies in the span of {a, b}: the line through a and b
    when they differ, and {a} alone when a = b.  The span table is
    associative but not cyclically symmetric on repeated points, so no
    duality map is attached.
    """
    points = [str(i) for i in range(1, 8)]
    table = {}
    for a in range(1, 8):
        for b in range(1, 8):
            if a == b:
                span = {a}
            else:
                span = next(line for line in FANO_LINES if a in line and b in line)
            for c in span:
                table[(str(a), str(b), str(c))] = 1.0
    return prob_geometry_structure(points, table)


def fano_line_indicator(structure: PromonoidalStructure, line_index: int = 0) -> Functor:
    """Indicator function of one Fano line."""
    line = FANO_LINES[line_index]
    return Functor.from_mapping(
        structure, {str(q): 1.0 for q in line}
    )


# -- function fixtures -------------------------------------------------------


def cardinality_functor(structure: PromonoidalStructure) -> Functor:
    """Subset cardinality on a powerset structure (objects in mask order)."""
    return Functor(
        structure,
        tuple(float(mask.bit_count()) for mask in range(len(structure.poset))),
    )


def uniform_rank_functor(structure: PromonoidalStructure, rank: int) -> Functor:
    """Rank function of the uniform matroid: min(|a|, rank)."""
    return Functor(
        structure,
        tuple(float(min(mask.bit_count(), rank)) for mask in range(len(structure.poset))),
    )


def delta_functor(structure: PromonoidalStructure, label: str) -> Functor:
    """Unit at one object, bottom elsewhere."""
    return Functor.from_mapping(structure, {label: structure.carrier.unit})


# -- fixture registry --------------------------------------------------------

FIXTURE_NAMES = (
    "powerset:N",
    "oml:boolean:N",
    "oml:mo2",
    "oml:o6",
    "heyting:chain:N",
    "group:z2",
    "groupoid:pair:N",
    "effect:chain:N",
    "double:effect:chain:N",
    "fusion:ising",
    "fusion:fib",
    "geometry:fano",
)


def _int_part(name: str, part: str, minimum: int) -> int:
    try:
        value = int(part)
    except ValueError:
        raise UnknownFixtureError(f"bad fixture parameter in {name!r}") from None
    if value < minimum:
        raise UnknownFixtureError(f"fixture parameter in {name!r} must be >= {minimum}")
    return value


def is_fixture_name(name: str) -> bool:
    try:
        resolve_fixture(name)
    except UnknownFixtureError:
        return False
    except Exception:
        return True
    return True


def resolve_fixture(name: str, carrier: Carrier | None = None) -> PromonoidalStructure:
    """Build a gallery structure from its fixture name.

    ``carrier`` overrides the family default where the family admits it;
    fusion fixtures are NAT-only and geometry is maxtimes-only.
    """
    parts = name.split(":")
    family = parts[0]
    if family == "powerset" and len(parts) == 2:
        n = _int_part(name, parts[1], 0)
        return powerset_structure(range(1, n + 1), carrier or Carrier.MAXPLUS)
    if family == "oml":
        if parts[1:] == ["mo2"]:
            return oml_structure(mo2_lattice(), carrier or Carrier.MAXTIMES)
        if parts[1:] == ["o6"]:
            return oml_structure(o6_lattice(), carrier or Carrier.MAXTIMES)
        if len(parts) == 3 and parts[1] == "boolean":
            n = _int_part(name, parts[2], 0)
            return oml_structure(boolean_lattice(n), carrier or Carrier.MAXTIMES)
    if family == "heyting" and len(parts) == 3 and parts[1] == "chain":
        n = _int_part(name, parts[2], 1)
        return heyting_structure(chain_heyting(n), carrier or Carrier.MAXTIMES)
    if family == "group" and len(parts) == 2 and parts[1].startswith("z"):
        order = _int_part(name, parts[1][1:], 1)
        return groupoid_structure(Groupoid.cyclic_group(order), carrier or Carrier.MAXTIMES)
    if family == "groupoid" and len(parts) == 3 and parts[1] == "pair":
        n = _int_part(name, parts[2], 1)
        return groupoid_structure(Groupoid.pair(n), carrier or Carrier.MAXTIMES)
    if family == "effect" and len(parts) == 3 and parts[1] == "chain":
        n = _int_part(name, parts[2], 0)
        return effect_structure(chain_effect(n), carrier or Carrier.MAXTIMES)
    if family == "double" and len(parts) == 4 and parts[1:3] == ["effect", "chain"]:
        n = _int_part(name, parts[3], 0)
        return double(chain_effect(n), carrier or Carrier.MAXTIMES)
    if family == "fusion" and parts[1:] in (["ising"], ["fib"]):
        if carrier not in (None, Carrier.NAT):
            raise UnknownFixtureError("fusion fixtures are NAT-valued")
        return ising_fusion() if parts[1] == "ising" else fibonacci_fusion()
    if family == "geometry" and parts[1:] == ["fano"]:
        if carrier not in (None, Carrier.MAXTIMES):
            raise UnknownFixtureError("geometry fixtures use the maxtimes carrier")
        return fano_structure()
    raise UnknownFixtureError(f"unknown fixture {name!r}")
