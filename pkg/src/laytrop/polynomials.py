"""Layered (Laurent) polynomials as functions.

Evaluation follows the pointwise semiring laws: the value of a polynomial
at a point is the layered sum over its monomials, so layers accumulate at
ties.  Corner roots are points where the evaluated scalar is ghost over
every monomial's sort; cluster roots are points where a single dominant
monomial already evaluates to a ghost.  Exact univariate corner roots come
from the breakpoints of the upper envelope of the coefficient data.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .core import Layer, LayeredScalar, LayeredSemiring, TRIVIAL, format_layer
from .errors import DomainError

Exponents = Tuple[int, ...]
Point = Tuple[LayeredScalar, ...]


def worker_count() -> int:
    """Parallel workers for grid scans; LAYTROP_THREADS caps them (0 = auto)."""
    raw = os.environ.get("LAYTROP_THREADS")
    if raw is None or not raw.strip():
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise DomainError(f"LAYTROP_THREADS={raw!r} is not an integer")
    if n < 0:
        raise DomainError("LAYTROP_THREADS must be non-negative")
    return (os.cpu_count() or 1) if n == 0 else n


def _scan(fn, items: Sequence):
    workers = worker_count()
    if workers <= 1 or len(items) < 2 * workers:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


class LayeredPolynomial:
    """A finite map from integer exponent vectors to layered coefficients.

    The map is never empty (the semiring has no zero), duplicate exponent
    vectors are merged by layered addition, and negative exponents require
    Laurent mode over a value flavor closed under negation.
    """

    __slots__ = ("semiring", "nvars", "coeffs", "laurent")

    def __init__(self, semiring: LayeredSemiring, nvars: int,
                 coeffs, laurent: bool = False):
        if not isinstance(nvars, int) or nvars < 1:
            raise DomainError(f"variable count {nvars!r} must be a positive integer")
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        merged: Dict[Exponents, LayeredScalar] = {}
        for exponents, scalar in items:
            exponents = tuple(exponents)
            if len(exponents) != nvars or not all(isinstance(e, int) for e in exponents):
                raise DomainError(f"exponent vector {exponents!r} does not have {nvars} integer entries")
            if not laurent and any(e < 0 for e in exponents):
                raise DomainError(f"negative exponent in {exponents!r} outside Laurent mode")
            scalar = semiring.check(scalar)
            if exponents in merged:
                merged[exponents] = semiring.add(merged[exponents], scalar)
            else:
                merged[exponents] = scalar
        if not merged:
            raise DomainError("a polynomial needs at least one monomial")
        if laurent:
            # Negative powers act on values by negation, so the flavor must be a group.
            semiring.values.check(Fraction(-1))
        self.semiring = semiring
        self.nvars = nvars
        self.coeffs = merged
        self.laurent = laurent

    # -- constructors ----------------------------------------------------------

    @classmethod
    def constant(cls, semiring: LayeredSemiring, nvars: int,
                 scalar: LayeredScalar) -> "LayeredPolynomial":
        return cls(semiring, nvars, {(0,) * nvars: scalar})

    @classmethod
    def variable(cls, semiring: LayeredSemiring, nvars: int, index: int) -> "LayeredPolynomial":
        exponents = tuple(1 if i == index else 0 for i in range(nvars))
        return cls(semiring, nvars, {exponents: semiring.one()})

    # -- structure ---------------------------------------------------------------

    def support(self) -> Tuple[Exponents, ...]:
        return tuple(sorted(self.coeffs))

    def coefficient(self, exponents: Exponents) -> LayeredScalar:
        return self.coeffs[tuple(exponents)]

    def __eq__(self, other):
        return (isinstance(other, LayeredPolynomial)
                and self.semiring == other.semiring
                and self.nvars == other.nvars
                and self.laurent == other.laurent
                and self.coeffs == other.coeffs)

    __hash__ = None

    def __repr__(self):
        return f"LayeredPolynomial({self!s})"

    def __str__(self):
        pieces = []
        for exponents in sorted(self.coeffs, reverse=True):
            pieces.append(_format_monomial(self.coeffs[exponents], exponents))
        return " + ".join(pieces)

    def _compatible(self, other: "LayeredPolynomial") -> None:
        if self.semiring != other.semiring:
            raise DomainError("polynomials live over different semiring views")
        if self.nvars != other.nvars or self.laurent != other.laurent:
            raise DomainError("polynomials differ in arity or Laurent mode")

    # -- semiring arithmetic -----------------------------------------------------

    def add(self, other: "LayeredPolynomial") -> "LayeredPolynomial":
        self._compatible(other)
        sr = self.semiring
        acc = dict(self.coeffs)
        for exponents, scalar in other.coeffs.items():
            acc[exponents] = sr.add(acc[exponents], scalar) if exponents in acc else scalar
        return LayeredPolynomial(sr, self.nvars, acc, self.laurent)

    def mul(self, other: "LayeredPolynomial") -> "LayeredPolynomial":
        self._compatible(other)
        sr = self.semiring
        acc: Dict[Exponents, LayeredScalar] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                term = sr.mul(c1, c2)
                acc[e] = sr.add(acc[e], term) if e in acc else term
        return LayeredPolynomial(sr, self.nvars, acc, self.laurent)

    def pow(self, m: int) -> "LayeredPolynomial":
        if not isinstance(m, int) or m < 1:
            raise DomainError(f"polynomial power {m!r} must be a positive integer")
        out = self
        for _ in range(m - 1):
            out = out.mul(self)
        return out

    # -- evaluation ----------------------------------------------------------------

    def _check_point(self, point: Point) -> Point:
        point = tuple(point)
        if len(point) != self.nvars:
            raise DomainError(f"point has arity {len(point)}, polynomial expects {self.nvars}")
        for coordinate in point:
            self.semiring.check(coordinate)
        return point

    def monomial_value(self, exponents: Exponents, point: Point) -> LayeredScalar:
        """Evaluate the single monomial with the given exponent vector."""
        sr = self.semiring
        term = self.coeffs[tuple(exponents)]
        for coordinate, e in zip(point, exponents):
            if e != 0:
                term = sr.mul(term, sr.pow(coordinate, e))
        return term

    def evaluate(self, point: Point) -> LayeredScalar:
        point = self._check_point(point)
        sr = self.semiring
        return sr.sum(self.monomial_value(e, point) for e in sorted(self.coeffs))

    def dominant_part(self, point: Point) -> Tuple[Exponents, ...]:
        """Exponent vectors of the monomials whose value ties the evaluated value."""
        point = self._check_point(point)
        sr = self.semiring
        values = {e: self.monomial_value(e, point) for e in self.coeffs}
        top = sr.sum(values[e] for e in sorted(values))
        return tuple(sorted(e for e, v in values.items() if v.value == top.value))

    def layering(self, point: Point) -> Layer:
        """The layer of the evaluated scalar; its level sets stratify loci."""
        return self.evaluate(point).layer

    # -- roots ----------------------------------------------------------------------

    def is_corner_root(self, point: Point) -> bool:
        """Whether the evaluation is ghost over every monomial's sort.

        Over the trivial flavor every sort is a ghost sort, so the criterion
        there is the classical one: at least two tied dominant monomials.
        """
        point = self._check_point(point)
        sr = self.semiring
        if sr.sorts is TRIVIAL:
            return len(self.dominant_part(point)) >= 2
        total = self.evaluate(point)
        return all(
            sr.sorts.is_ghost_sort(total.layer, self.monomial_value(e, point).layer)
            for e in self.coeffs)

    def is_cluster_root(self, point: Point) -> bool:
        """Whether a single dominant monomial already evaluates to a ghost.

        The trivial flavor has no ghost layers to record clustering, so no
        cluster roots exist there.
        """
        point = self._check_point(point)
        sr = self.semiring
        if sr.sorts is TRIVIAL:
            return False
        dominant = self.dominant_part(point)
        if len(dominant) != 1:
            return False
        value = self.monomial_value(dominant[0], point)
        return self.evaluate(point) == value and sr.is_ghost_over(value, 1)


def _format_monomial(scalar: LayeredScalar, exponents: Exponents) -> str:
    factors = []
    for i, e in enumerate(exponents):
        if e == 1:
            factors.append(f"x{i + 1}")
        elif e != 0:
            factors.append(f"x{i + 1}^{e}")
    if not factors:
        return str(scalar)
    if scalar.layer == 1 and scalar.value == 0:
        return "*".join(factors)
    return "*".join([str(scalar)] + factors)


# ---------------------------------------------------------------------------
# Grids


@dataclass(frozen=True)
class GridSpec:
    """A finite rational sampling box: per-axis (lower, upper, step) triples.

    Sampled coordinates carry the per-axis layer (tangible by default).
    """

    axes: Tuple[Tuple[Fraction, Fraction, Fraction], ...]
    layers: Optional[Tuple[Layer, ...]] = None

    def __post_init__(self):
        for lower, upper, step in self.axes:
            if step <= 0:
                raise DomainError(f"grid step {step} must be positive")
            if lower > upper:
                raise DomainError(f"grid bounds {lower} > {upper}")
        if self.layers is not None and len(self.layers) != len(self.axes):
            raise DomainError("per-axis layers must match the number of axes")

    @classmethod
    def uniform(cls, lower, upper, step, nvars: int, layer: Layer = 1) -> "GridSpec":
        axis = (Fraction(lower), Fraction(upper), Fraction(step))
        return cls((axis,) * nvars, (layer,) * nvars)

    @property
    def nvars(self) -> int:
        return len(self.axes)

    def axis_values(self, i: int) -> List[Fraction]:
        lower, upper, step = self.axes[i]
        out = []
        v = lower
        while v <= upper:
            out.append(v)
            v += step
        return out

    def points(self, semiring: LayeredSemiring) -> List[Point]:
        layers = self.layers or (1,) * self.nvars
        axes = [[semiring.scalar(v, layers[i]) for v in self.axis_values(i)]
                for i in range(self.nvars)]
        return [tuple(p) for p in itertools.product(*axes)]


# ---------------------------------------------------------------------------
# Loci and layering maps


def _common(polynomials: Sequence[LayeredPolynomial]) -> Sequence[LayeredPolynomial]:
    if not polynomials:
        raise DomainError("an empty polynomial set has no locus")
    first = polynomials[0]
    for f in polynomials[1:]:
        first._compatible(f)
    return polynomials


def corner_locus(polynomials: Sequence[LayeredPolynomial], grid: GridSpec) -> Tuple[Point, ...]:
    """Grid points that are corner roots of every polynomial in the set."""
    polynomials = _common(polynomials)
    points = grid.points(polynomials[0].semiring)
    keep = _scan(lambda a: all(f.is_corner_root(a) for f in polynomials), points)
    return tuple(a for a, ok in zip(points, keep) if ok)


def combined_locus(polynomials: Sequence[LayeredPolynomial], grid: GridSpec) -> Tuple[Point, ...]:
    """Grid points that are corner or cluster roots of every polynomial in the set."""
    polynomials = _common(polynomials)
    points = grid.points(polynomials[0].semiring)
    keep = _scan(
        lambda a: all(f.is_corner_root(a) or f.is_cluster_root(a) for f in polynomials),
        points)
    return tuple(a for a, ok in zip(points, keep) if ok)


def layering_map(f: LayeredPolynomial, point: Point) -> Layer:
    return f.layering(point)


def layering_map_set(polynomials: Sequence[LayeredPolynomial], point: Point) -> Layer:
    """The minimum layer over a set of polynomials at one point."""
    polynomials = _common(polynomials)
    return min(f.layering(point) for f in polynomials)


def component(f: LayeredPolynomial, exponents: Exponents, grid: GridSpec) -> Tuple[Point, ...]:
    """Grid points where the chosen monomial alone realizes f exactly (layer included)."""
    exponents = tuple(exponents)
    if exponents not in f.coeffs:
        raise DomainError(f"{exponents!r} is not a monomial of the polynomial")
    out = []
    for a in grid.points(f.semiring):
        if f.monomial_value(exponents, a) == f.evaluate(a):
            out.append(a)
    return tuple(out)


def principal_open(f: LayeredPolynomial, grid: GridSpec) -> Tuple[Point, ...]:
    """The complement of the corner locus of f within the grid."""
    return tuple(a for a in grid.points(f.semiring) if not f.is_corner_root(a))


# ---------------------------------------------------------------------------
# Exact univariate corner roots and essentiality


def _cross(o, a, b) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _upper_hull(points: List[Tuple[int, Fraction]]) -> List[Tuple[int, Fraction]]:
    """Strict upper concave hull of points sorted by abscissa; collinear middles drop."""
    hull: List[Tuple[int, Fraction]] = []
    for p in points:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) >= 0:
            hull.pop()
        hull.append(p)
    return hull


def _univariate_data(f: LayeredPolynomial) -> List[Tuple[int, Fraction]]:
    if f.nvars != 1:
        raise DomainError("exact corner roots require a univariate polynomial")
    return sorted((e[0], c.value) for e, c in f.coeffs.items())


def univariate_corner_roots(f: LayeredPolynomial) -> Tuple[Tuple[Fraction, int], ...]:
    """Exact (root, tie multiplicity) pairs, sorted by root.

    Roots are the breakpoints of the upper envelope of c + e*x over the
    monomials (e, c): consecutive essential exponents i < j tie at
    x = (c_i - c_j)/(j - i), with multiplicity j - i.
    """
    hull = _upper_hull(_univariate_data(f))
    roots = []
    for (i, ci), (j, cj) in zip(hull, hull[1:]):
        roots.append(((ci - cj) / (j - i), j - i))
    return tuple(roots)


@dataclass(frozen=True)
class EssentialResult:
    """Essential exponent vectors, with an exactness flag for the method used."""

    exponents: Tuple[Exponents, ...]
    exact: bool


def _strictly_feasible(rows: List[Tuple[List[Fraction], Fraction]], nvars: int) -> bool:
    """Decide a system of strict linear inequalities a.x < b over the rationals.

    Fourier-Motzkin elimination; combinations of strict inequalities stay
    strict, and density of the rationals makes the test exact.
    """
    for k in range(nvars):
        positive, negative, rest = [], [], []
        for a, b in rows:
            if a[k] > 0:
                positive.append((a, b))
            elif a[k] < 0:
                negative.append((a, b))
            else:
                rest.append((a, b))
        for ap, bp in positive:
            for an, bn in negative:
                sp, sn = -an[k], ap[k]
                a = [sp * x + sn * y for x, y in zip(ap, an)]
                rest.append((a, sp * bp + sn * bn))
        rows = rest
    return all(b > 0 for _, b in rows)


def _strict_dominance_rows(f: LayeredPolynomial, exponents: Exponents):
    ci = f.coeffs[exponents].value
    rows = []
    for other, scalar in f.coeffs.items():
        if other == exponents:
            continue
        a = [Fraction(o - e) for o, e in zip(other, exponents)]
        rows.append((a, ci - scalar.value))
    return rows


def essential_monomials(f: LayeredPolynomial) -> EssentialResult:
    """Monomials that strictly dominate somewhere on the tangible domain.

    Univariate inputs use the exact concavity test; up to three variables
    use exact rational linear feasibility; beyond that a sampling heuristic
    runs and the result is flagged approximate.
    """
    if len(f.coeffs) == 1:
        return EssentialResult(f.support(), True)
    if f.nvars == 1:
        hull = _upper_hull(_univariate_data(f))
        keep = {e for e, _ in hull}
        return EssentialResult(tuple(sorted(e for e in f.coeffs if e[0] in keep)), True)
    if f.nvars <= 3:
        kept = [e for e in sorted(f.coeffs)
                if _strictly_feasible(_strict_dominance_rows(f, e), f.nvars)]
        return EssentialResult(tuple(kept), True)
    return EssentialResult(_essential_by_sampling(f), False)


def _essential_by_sampling(f: LayeredPolynomial) -> Tuple[Exponents, ...]:
    spread = max(abs(c.value) for c in f.coeffs.values()) + 1
    grid = GridSpec.uniform(-spread, spread, Fraction(spread, 2), f.nvars)
    found = set()
    for a in grid.points(f.semiring):
        values = {e: f.monomial_value(e, a).value for e in f.coeffs}
        top = max(values.values())
        winners = [e for e, v in values.items() if v == top]
        if len(winners) == 1:
            found.add(winners[0])
    return tuple(sorted(found))


# ---------------------------------------------------------------------------
# Functional equality


@dataclass(frozen=True)
class FunctionComparison:
    """Outcome of comparing two polynomials as functions; truthy when equal."""

    equal: bool
    exact: bool

    def __bool__(self):
        return self.equal


def _essential_form(f: LayeredPolynomial) -> Dict[Exponents, LayeredScalar]:
    kept = essential_monomials(f).exponents
    return {e: f.coeffs[e] for e in kept}


def functionally_equal(f: LayeredPolynomial, g: LayeredPolynomial,
                       grid: Optional[GridSpec] = None) -> FunctionComparison:
    """Decide whether two polynomials agree as functions.

    Univariate comparison is exact: essentialized forms must match and the
    evaluations must agree at every envelope breakpoint (where inessential
    collinear monomials can still contribute layers).  Multivariate
    comparison samples the supplied grid plus a point on every pairwise tie
    hyperplane, and is flagged approximate.
    """
    f._compatible(g)
    if f.nvars == 1:
        if _essential_form(f) != _essential_form(g):
            return FunctionComparison(False, True)
        for root, _ in univariate_corner_roots(f):
            a = (f.semiring.scalar(root),)
            if f.evaluate(a) != g.evaluate(a):
                return FunctionComparison(False, True)
        return FunctionComparison(True, True)
    if grid is None:
        raise DomainError("multivariate comparison needs a sampling grid")
    points = set(grid.points(f.semiring))
    for poly in (f, g):
        points.update(_tie_samples(poly, grid))
    equal = all(f.evaluate(a) == g.evaluate(a) for a in sorted(points, key=_point_key))
    return FunctionComparison(equal, False)


def _point_key(point: Point):
    return tuple((c.value, format_layer(c.layer)) for c in point)


def _tie_samples(f: LayeredPolynomial, grid: GridSpec) -> List[Point]:
    """One exact point on each pairwise tie hyperplane, per grid anchor."""
    sr = f.semiring
    anchors = grid.points(sr)
    step = max(1, len(anchors) // 24)
    anchors = anchors[::step]
    samples = []
    for (e1, c1), (e2, c2) in itertools.combinations(sorted(f.coeffs.items()), 2):
        d = [a - b for a, b in zip(e1, e2)]
        delta = c2.value - c1.value
        k = next((i for i, di in enumerate(d) if di != 0), None)
        if k is None:
            continue
        for anchor in anchors:
            rest = sum(d[m] * anchor[m].value for m in range(f.nvars) if m != k)
            xk = Fraction(delta - rest, d[k])
            point = list(anchor)
            point[k] = LayeredScalar(anchor[k].layer, xk)
            samples.append(tuple(point))
    return samples
