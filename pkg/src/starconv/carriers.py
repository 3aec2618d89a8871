"""Value algebras for tables and convolutions.

Four commutative quantale/semiring carriers are supported:

* ``BOOL``      booleans with (or, and), unit ``True``, bottom ``False``.
* ``MAXTIMES``  the extended nonnegative reals [0, inf] with (sup, *) and
  unit 1.  Multiplication absorbs at 0, so ``inf * 0 == 0``.
* ``MAXPLUS``   the extended reals [-inf, inf] with (sup, +) and unit 0.
  Addition absorbs at -inf, so ``(-inf) + inf == -inf`` (the image of
  ``inf * 0 == 0`` under the exponential isomorphism with MAXTIMES).
* ``NAT``       natural numbers with (sum, *) and unit 1.  The "join" of a
  NAT list is its sum; NAT is the only non-idempotent carrier.

Every carrier has an order-reversing-or-trivial involution ``star``:
negation on MAXPLUS, reciprocal (with 0 and inf swapped) on MAXTIMES, and
the identity on BOOL and NAT.  The reciprocal convention on MAXTIMES is the
exponential transport of negation on MAXPLUS; see :func:`exp_iso`.

Values are plain payloads (``bool``, ``float``, ``int``), not wrapper
objects.  Infinities are the exact IEEE values ``float("inf")`` and
``float("-inf")``, never large finite floats.  All operations are pure and
safe to call concurrently.
"""

from __future__ import annotations

import math
from enum import Enum

from .errors import CarrierMismatchError, UnsupportedOperationError

Value = bool | int | float

DEFAULT_TOL = 1e-9

INF = float("inf")
NEG_INF = float("-inf")


class Carrier(str, Enum):
    """Tag selecting one of the four value algebras."""

    BOOL = "bool"
    MAXTIMES = "maxtimes"
    MAXPLUS = "maxplus"
    NAT = "nat"

    @property
    def idempotent(self) -> bool:
        """Whether join(x, x) == x.  False only for NAT, whose join is a sum."""
        return self is not Carrier.NAT

    @property
    def has_star(self) -> bool:
        """All built-in carriers carry a star involution (trivial on BOOL/NAT)."""
        return True

    @property
    def unit(self) -> Value:
        if self is Carrier.BOOL:
            return True
        if self is Carrier.MAXTIMES:
            return 1.0
        if self is Carrier.MAXPLUS:
            return 0.0
        return 1

    @property
    def bottom(self) -> Value:
        if self is Carrier.BOOL:
            return False
        if self is Carrier.MAXTIMES:
            return 0.0
        if self is Carrier.MAXPLUS:
            return NEG_INF
        return 0

    # -- payload validation ------------------------------------------------

    def coerce(self, x: Value) -> Value:
        """Validate a payload for this carrier and return it in canonical form.

        Ints are widened to floats on the real carriers.  Raises
        CarrierMismatchError for wrong types, NaN, negative MAXTIMES or NAT
        payloads, and bools offered to non-boolean carriers.
        """
        kind = type(x)
        if self is Carrier.MAXPLUS:
            if kind is float:
                if x != x:
                    raise CarrierMismatchError("maxplus carrier does not admit NaN")
                return x
            if kind is int:
                return float(x)
            raise CarrierMismatchError(f"maxplus carrier expects a real number, got {x!r}")
        if self is Carrier.MAXTIMES:
            if kind is float:
                if x != x:
                    raise CarrierMismatchError("maxtimes carrier does not admit NaN")
                if x < 0.0:
                    raise CarrierMismatchError(f"maxtimes carrier does not admit negatives, got {x!r}")
                return x
            if kind is int:
                if x < 0:
                    raise CarrierMismatchError(f"maxtimes carrier does not admit negatives, got {x!r}")
                return float(x)
            raise CarrierMismatchError(f"maxtimes carrier expects a real number, got {x!r}")
        if self is Carrier.BOOL:
            if kind is bool:
                return x
            raise CarrierMismatchError(f"bool carrier expects true/false, got {x!r}")
        if kind is int and x >= 0:
            return x
        raise CarrierMismatchError(f"nat carrier expects a nonnegative integer, got {x!r}")

    # -- semiring operations -----------------------------------------------

    def tensor(self, x: Value, y: Value) -> Value:
        """Monoidal product: and / * / + / * with the absorption conventions."""
        x = self.coerce(x)
        y = self.coerce(y)
        if self is Carrier.BOOL:
            return x and y
        if self is Carrier.NAT:
            return x * y
        if self is Carrier.MAXTIMES:
            if x == 0.0 or y == 0.0:
                return 0.0
            return x * y
        if x == NEG_INF or y == NEG_INF:
            return NEG_INF
        return x + y

    def join(self, xs) -> Value:
        """Finite join: or / sup / sup / sum.  The empty join is bottom."""
        if self is Carrier.NAT:
            return sum(self.coerce(x) for x in xs)
        best = self.bottom
        if self is Carrier.BOOL:
            for x in xs:
                if self.coerce(x):
                    best = True
            return best
        for x in xs:
            v = self.coerce(x)
            if v > best:
                best = v
        return best

    def conv_join(self, xs, ys) -> Value:
        """Join of pairwise tensors of two aligned sequences.

        Hot path for checkers and convolutions; payloads are assumed to be
        already validated (table entries are coerced at construction).
        """
        if self is Carrier.BOOL:
            return any(x and y for x, y in zip(xs, ys))
        if self is Carrier.NAT:
            return sum(x * y for x, y in zip(xs, ys))
        if self is Carrier.MAXPLUS:
            best = NEG_INF
            for x, y in zip(xs, ys):
                if x != NEG_INF and y != NEG_INF:
                    v = x + y
                    if v > best:
                        best = v
            return best
        best = 0.0
        for x, y in zip(xs, ys):
            if x != 0.0 and y != 0.0:
                v = x * y
                if v > best:
                    best = v
        return best

    def leq(self, x: Value, y: Value, tol: float = DEFAULT_TOL) -> bool:
        """Carrier order, with ``tol`` slack between finite reals.

        Comparisons involving infinities (and all BOOL/NAT comparisons) are
        exact.
        """
        x = self.coerce(x)
        y = self.coerce(y)
        if self is Carrier.BOOL:
            return (not x) or y
        if self is Carrier.NAT:
            return x <= y
        if math.isinf(x) or math.isinf(y):
            return x <= y
        return x <= y + tol

    def eq(self, x: Value, y: Value, tol: float = DEFAULT_TOL) -> bool:
        """Equality as leq both ways (exact on BOOL/NAT and on infinities)."""
        return self.leq(x, y, tol) and self.leq(y, x, tol)

    def star(self, x: Value) -> Value:
        """Dualization: negation (MAXPLUS), reciprocal with 0 <-> inf
        (MAXTIMES), identity (BOOL, NAT).  Involutive."""
        if not self.has_star:  # pragma: no cover - all built-ins have star
            raise UnsupportedOperationError(f"{self.value} carrier has no star")
        x = self.coerce(x)
        if self is Carrier.BOOL or self is Carrier.NAT:
            return x
        if self is Carrier.MAXPLUS:
            return -x + 0.0
        if x == 0.0:
            return INF
        if x == INF:
            return 0.0
        return 1.0 / x

    # -- serialization -----------------------------------------------------

    def to_json(self, x: Value):
        """JSON form: bools, decimal numbers, naturals; infinities as
        the strings "inf" / "-inf"."""
        x = self.coerce(x)
        if self is Carrier.BOOL or self is Carrier.NAT:
            return x
        if x == INF:
            return "inf"
        if x == NEG_INF:
            return "-inf"
        return x

    def from_json(self, raw) -> Value:
        if self in (Carrier.BOOL, Carrier.NAT):
            return self.coerce(raw)
        if raw == "inf":
            return INF
        if raw == "-inf":
            return NEG_INF
        if isinstance(raw, str):
            raise CarrierMismatchError(f"cannot decode {raw!r} as a {self.value} value")
        return self.coerce(raw)

    def format_value(self, x: Value) -> str:
        """Stable text rendering, identical to the JSON serialization."""
        v = self.to_json(x)
        if v is True:
            return "true"
        if v is False:
            return "false"
        return repr(v) if isinstance(v, float) else str(v)


def exp_iso(x: Value) -> Value:
    """Map a MAXPLUS value to MAXTIMES along x -> exp(x).

    Sends -inf to 0 and inf to inf; carries tensor, join, and star of
    MAXPLUS to those of MAXTIMES.
    """
    x = Carrier.MAXPLUS.coerce(x)
    if x == NEG_INF:
        return 0.0
    if x == INF:
        return INF
    return math.exp(x)


def log_iso(x: Value) -> Value:
    """Inverse of :func:`exp_iso`, from MAXTIMES back to MAXPLUS."""
    x = Carrier.MAXTIMES.coerce(x)
    if x == 0.0:
        return NEG_INF
    if x == INF:
        return INF
    return math.log(x)
