"""Layered scalars: pairs (layer, value) over a sorting semiring of layers.

A scalar carries a *value* from a totally ordered monoid written additively
in log-notation (the multiplicative unit is the value 0, and 2*3 = 5), and a
*layer* from a sorting semiring.  Addition keeps the larger value; on ties
the layers add, so layers count accumulated ties.  Multiplication is
componentwise.  All arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .errors import DomainError

#: Absorbing infinite layer, shared by all sort flavors that contain it.
INF = float("inf")

Layer = Union[int, float]


def format_layer(layer: Layer) -> str:
    return "inf" if layer == INF else str(layer)


# ---------------------------------------------------------------------------
# Sort (layer) flavors


class SortFlavor:
    """Arithmetic of one layer semiring.  Layers are totally ordered numerically."""

    name = "?"

    def check(self, k: Layer) -> Layer:
        """Return ``k`` if it belongs to this flavor, else raise DomainError."""
        raise NotImplementedError

    def add(self, k: Layer, l: Layer) -> Layer:
        raise NotImplementedError

    def mul(self, k: Layer, l: Layer) -> Layer:
        raise NotImplementedError

    def is_ghost_sort(self, m: Layer, ell: Layer) -> bool:
        """Whether m = ell + k for some layer k, i.e. m records surplus ties over ell."""
        raise NotImplementedError

    def __repr__(self):
        return f"<sorts {self.name}>"


class TrivialSorts(SortFlavor):
    """The one-layer flavor {1}: classical max-plus, with idempotent 1 + 1 = 1.

    Every sort is a ghost sort here (1 = 1 + 1), so ghost-based root
    detection degenerates; polynomial code special-cases this flavor.
    """

    name = "trivial"

    def check(self, k):
        if k != 1:
            raise DomainError(f"layer {format_layer(k)} is not in the trivial flavor {{1}}")
        return 1

    def add(self, k, l):
        return 1

    def mul(self, k, l):
        return 1

    def is_ghost_sort(self, m, ell):
        return True


class SupertropicalSorts(SortFlavor):
    """The two-layer flavor {1, inf}: 1 + 1 = inf, and inf absorbs both operations."""

    name = "super"

    def check(self, k):
        if k != 1 and k != INF:
            raise DomainError(f"layer {format_layer(k)} is not in the supertropical flavor {{1, inf}}")
        return k

    def add(self, k, l):
        return INF

    def mul(self, k, l):
        return INF if (k == INF or l == INF) else 1

    def is_ghost_sort(self, m, ell):
        # ell + k = inf for every k in {1, inf}, whichever ell.
        return m == INF


class CountingSorts(SortFlavor):
    """Positive integers with an absorbing inf; ordinary + and *.

    Layers literally count tied dominant terms, which is what makes this
    the most informative flavor for diagnostics.
    """

    name = "nat"

    def check(self, k):
        if k == INF or (isinstance(k, int) and k >= 1):
            return k
        raise DomainError(f"layer {k!r} is not a positive integer or inf")

    def add(self, k, l):
        return k + l

    def mul(self, k, l):
        return k * l

    def is_ghost_sort(self, m, ell):
        if ell == INF:
            return m == INF  # inf = inf + k for any k
        return m > ell


TRIVIAL = TrivialSorts()
SUPERTROPICAL = SupertropicalSorts()
COUNTING = CountingSorts()

SORT_FLAVORS = {"trivial": TRIVIAL, "super": SUPERTROPICAL, "nat": COUNTING}


# ---------------------------------------------------------------------------
# Value flavors


class ValueFlavor:
    """Domain of scalar values (exponents in log-notation)."""

    name = "?"

    def check(self, v: Fraction) -> Fraction:
        raise NotImplementedError

    def completion(self) -> "ValueFlavor":
        """The group completion, hosting results of division by units."""
        return self

    def __repr__(self):
        return f"<values {self.name}>"


class RationalValues(ValueFlavor):
    name = "rational"

    def check(self, v):
        return v


class IntegerValues(ValueFlavor):
    name = "integer"

    def check(self, v):
        if v.denominator != 1:
            raise DomainError(f"value {v} is not an integer")
        return v


class NaturalValues(IntegerValues):
    name = "natural"

    def check(self, v):
        super().check(v)
        if v < 0:
            raise DomainError(f"value {v} is negative; the natural flavor has no inverses")
        return v

    def completion(self):
        return INTEGERS


RATIONALS = RationalValues()
INTEGERS = IntegerValues()
NATURALS = NaturalValues()

VALUE_FLAVORS = {"rational": RATIONALS, "integer": INTEGERS, "natural": NATURALS}


# ---------------------------------------------------------------------------
# Scalars and the semiring view


@dataclass(frozen=True)
class LayeredScalar:
    """An immutable (layer, value) pair.  All operations live on LayeredSemiring."""

    layer: Layer
    value: Fraction

    def __str__(self):
        if self.layer == 1:
            return str(self.value)
        return f"({format_layer(self.layer)}|{self.value})"


class LayeredSemiring:
    """Operations on layered scalars for a fixed pair of flavors.

    ``descending=False`` is the usual max-plus orientation: addition keeps
    the larger value.  The dual view (``dual()``) keeps the smaller one;
    dualizing twice restores the original operation tables.
    """

    def __init__(self, sorts: SortFlavor = COUNTING, values: ValueFlavor = RATIONALS,
                 descending: bool = False):
        self.sorts = sorts
        self.values = values
        self.descending = descending

    def __eq__(self, other):
        return (isinstance(other, LayeredSemiring)
                and self.sorts is other.sorts
                and self.values is other.values
                and self.descending == other.descending)

    def __hash__(self):
        return hash((id(self.sorts), id(self.values), self.descending))

    def __repr__(self):
        tail = ", dual" if self.descending else ""
        return f"LayeredSemiring({self.sorts.name}, {self.values.name}{tail})"

    # -- construction ------------------------------------------------------

    def scalar(self, value, layer: Layer = 1) -> LayeredScalar:
        return LayeredScalar(self.sorts.check(layer), self.values.check(Fraction(value)))

    def check(self, x: LayeredScalar) -> LayeredScalar:
        if not isinstance(x, LayeredScalar):
            raise DomainError(f"expected a layered scalar, got {x!r}")
        self.sorts.check(x.layer)
        self.values.check(x.value)
        return x

    def one(self) -> LayeredScalar:
        """The multiplicative unit: layer 1, value 0."""
        return LayeredScalar(1, Fraction(0))

    def e(self, layer: Layer) -> LayeredScalar:
        """The layer unit (layer, 0); multiplying by it raises layers."""
        return LayeredScalar(self.sorts.check(layer), Fraction(0))

    # -- order -------------------------------------------------------------

    def nu_compare(self, x: LayeredScalar, y: LayeredScalar) -> int:
        """Compare values only (negative / 0 / positive); layers are ignored."""
        raw = (x.value > y.value) - (x.value < y.value)
        return -raw if self.descending else raw

    def nu_equivalent(self, x: LayeredScalar, y: LayeredScalar) -> bool:
        return x.value == y.value

    def le(self, x: LayeredScalar, y: LayeredScalar) -> bool:
        """The order induced by addition: x <= y when x + y = y."""
        return self.add(x, y) == y

    # -- arithmetic ----------------------------------------------------------

    def add(self, x: LayeredScalar, y: LayeredScalar) -> LayeredScalar:
        self.check(x)
        self.check(y)
        c = self.nu_compare(x, y)
        if c > 0:
            return x
        if c < 0:
            return y
        return LayeredScalar(self.sorts.add(x.layer, y.layer), x.value)

    def mul(self, x: LayeredScalar, y: LayeredScalar) -> LayeredScalar:
        self.check(x)
        self.check(y)
        return LayeredScalar(self.sorts.mul(x.layer, y.layer), x.value + y.value)

    def pow(self, x: LayeredScalar, m: int) -> LayeredScalar:
        self.check(x)
        if not isinstance(m, int):
            raise DomainError(f"exponent {m!r} is not an integer")
        if m == 0:
            return self.one()
        if m < 0:
            if x.layer != 1:
                raise DomainError(f"layer {format_layer(x.layer)} is not invertible")
            return LayeredScalar(1, x.value * m)
        return LayeredScalar(x.layer ** m, x.value * m)

    def sum(self, xs: Iterable[LayeredScalar]) -> LayeredScalar:
        total = None
        for x in xs:
            total = x if total is None else self.add(total, x)
        if total is None:
            raise DomainError("empty sum; the semiring has no zero element")
        return total

    # -- layer structure -----------------------------------------------------

    def sort(self, x: LayeredScalar) -> Layer:
        return x.layer

    def transition(self, x: LayeredScalar, m: Layer) -> LayeredScalar:
        """Raise x to layer m, keeping its value; only upward moves exist."""
        self.check(x)
        m = self.sorts.check(m)
        if not m >= x.layer:
            raise DomainError(
                f"cannot move layer {format_layer(x.layer)} down to {format_layer(m)}; "
                "transition maps only raise layers")
        return LayeredScalar(m, x.value)

    def is_ghost_over(self, x: LayeredScalar, ell: Layer) -> bool:
        """Whether the sort of x has the form ell + k (a surplus over ell)."""
        self.check(x)
        return self.sorts.is_ghost_sort(x.layer, self.sorts.check(ell))

    def surpasses(self, x: LayeredScalar, y: LayeredScalar) -> bool:
        """The relation tolerating ghost excess: x equals y up to a ghost of y's sort."""
        self.check(x)
        self.check(y)
        if x == y:
            return True
        return self.nu_compare(x, y) >= 0 and self.sorts.is_ghost_sort(x.layer, y.layer)

    # -- fractions -----------------------------------------------------------

    def localize(self, a: LayeredScalar, u: LayeredScalar) -> LayeredScalar:
        """The fraction a/u for a tangible denominator u; keeps the sort of a.

        Values land in the group completion of the value flavor (natural
        inputs can yield negative integers); see ``localized()``.
        """
        self.check(a)
        self.check(u)
        if u.layer != 1:
            raise DomainError("denominators must be tangible (layer 1)")
        return LayeredScalar(a.layer, a.value - u.value)

    def localized(self) -> "LayeredSemiring":
        """The semiring hosting localization results (completed value flavor)."""
        return LayeredSemiring(self.sorts, self.values.completion(), self.descending)

    # -- duality ---------------------------------------------------------------

    def dual(self) -> "LayeredSemiring":
        """The view with the opposite selection in addition (min instead of max)."""
        return LayeredSemiring(self.sorts, self.values, not self.descending)


def semiring(sorts: str = "nat", values: str = "rational") -> LayeredSemiring:
    """Build a semiring view from flavor names (as used by the CLI)."""
    try:
        sf = SORT_FLAVORS[sorts]
    except KeyError:
        raise DomainError(f"unknown layer flavor {sorts!r}; choose from {sorted(SORT_FLAVORS)}")
    try:
        vf = VALUE_FLAVORS[values]
    except KeyError:
        raise DomainError(f"unknown value flavor {values!r}; choose from {sorted(VALUE_FLAVORS)}")
    return LayeredSemiring(sf, vf)
