"""Upper and lower convolution of functions over a promonoidal structure."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .carriers import DEFAULT_TOL
from .errors import CarrierMismatchError, UnsupportedOperationError
from .structures import Functor, PromonoidalStructure, Witness


class ConvMode(str, Enum):
    UPPER = "upper"
    LOWER = "lower"


@dataclass(frozen=True)
class Verdict:
    """Outcome of a pointwise predicate, with the first failing object."""

    holds: bool
    witness: Witness | None = None

    def __bool__(self) -> bool:
        return self.holds


def _require_compatible(f: Functor, g: Functor, structure: PromonoidalStructure):
    for functor in (f, g):
        if functor.structure.carrier is not structure.carrier:
            raise CarrierMismatchError("function and structure carriers differ")
        if functor.structure.poset != structure.poset:
            raise CarrierMismatchError("function and structure posets differ")


def convolve_upper(f: Functor, g: Functor, structure: PromonoidalStructure) -> Functor:
    """(f (*) g)(c) = join over a, b of f(a) (x) g(b) (x) p(a,b,c)."""
    _require_compatible(f, g, structure)
    carrier, p = structure.carrier, structure.p
    n = len(structure.poset)
    tensor, join = carrier.tensor, carrier.join
    fv, gv = f.values, g.values
    out = []
    for c in range(n):
        terms = []
        for a in range(n):
            fa = fv[a]
            p_a = p[a]
            for b in range(n):
                terms.append(tensor(fa, tensor(gv[b], p_a[b][c])))
        out.append(join(terms))
    return Functor(structure, tuple(out))


def convolve_lower(f: Functor, g: Functor, structure: PromonoidalStructure) -> Functor:
    """Star-conjugate convolution:
    (f (*) g)(c) = star( join over a, b of star f(a) (x) star g(b) (x) p(a,b,c) ).

    On a discrete powerset structure over MAXPLUS this is
    inf over a below c of f(a) + g(c - a).
    """
    _require_compatible(f, g, structure)
    carrier, p = structure.carrier, structure.p
    if not carrier.has_star:  # pragma: no cover - built-ins all have star
        raise UnsupportedOperationError("lower convolution needs a carrier with star")
    n = len(structure.poset)
    tensor, join, star = carrier.tensor, carrier.join, carrier.star
    fs = [star(v) for v in f.values]
    gs = [star(v) for v in g.values]
    out = []
    for c in range(n):
        terms = []
        for a in range(n):
            fa = fs[a]
            p_a = p[a]
            for b in range(n):
                terms.append(tensor(fa, tensor(gs[b], p_a[b][c])))
        out.append(star(join(terms)))
    return Functor(structure, tuple(out))


def convolve(f: Functor, g: Functor, structure: PromonoidalStructure, mode: ConvMode) -> Functor:
    if mode is ConvMode.UPPER:
        return convolve_upper(f, g, structure)
    return convolve_lower(f, g, structure)


def dualize(f: Functor) -> Functor:
    """Pointwise star.  Antitone; an involution."""
    carrier = f.structure.carrier
    if not carrier.has_star:  # pragma: no cover
        raise UnsupportedOperationError("dualize needs a carrier with star")
    return Functor(f.structure, tuple(carrier.star(v) for v in f.values))


def is_monoid(
    f: Functor,
    structure: PromonoidalStructure,
    mode: ConvMode,
    tol: float = DEFAULT_TOL,
) -> Verdict:
    """Whether f is a convolution monoid.

    UPPER: f (*) f <= f and j <= f pointwise (the structure maps of a monoid
    in the order-enriched function category exist exactly when these
    inequalities hold).  LOWER: the dual inequalities f <= f (*) f and
    f <= star . j, against the lower convolution.  On powerset structures
    these match the superadditive resp. subadditive characterizations with
    the sign condition at the empty set.
    """
    if structure.j is None:
        raise UnsupportedOperationError("monoid checks need a unit table")
    carrier = structure.carrier
    objects = structure.poset.objects
    leq = carrier.leq
    if mode is ConvMode.UPPER:
        square = convolve_upper(f, f, structure).values
        unit = structure.j
        for c in range(len(objects)):
            if not leq(square[c], f.values[c], tol):
                return Verdict(False, Witness((objects[c],), square[c], f.values[c]))
            if not leq(unit[c], f.values[c], tol):
                return Verdict(False, Witness((objects[c],), unit[c], f.values[c]))
        return Verdict(True)
    square = convolve_lower(f, f, structure).values
    counit = tuple(carrier.star(v) for v in structure.j)
    for c in range(len(objects)):
        if not leq(f.values[c], square[c], tol):
            return Verdict(False, Witness((objects[c],), f.values[c], square[c]))
        if not leq(f.values[c], counit[c], tol):
            return Verdict(False, Witness((objects[c],), f.values[c], counit[c]))
    return Verdict(True)


def is_convex(f: Functor, structure: PromonoidalStructure, tol: float = DEFAULT_TOL) -> Verdict:
    """Whether f is a convolution semigroup: f (*) f <= f pointwise, with no
    unit condition (usable on structures without j)."""
    carrier = structure.carrier
    objects = structure.poset.objects
    square = convolve_upper(f, f, structure).values
    for c in range(len(objects)):
        if not carrier.leq(square[c], f.values[c], tol):
            return Verdict(False, Witness((objects[c],), square[c], f.values[c]))
    return Verdict(True)
