"""Congruences over finite point sets, varieties, and coordinate semirings.

Over a finite point set X, two polynomials are congruent when they evaluate
identically on X.  A set of generating pairs cuts out the variety of grid
points where every pair agrees; the Zariski round trip verifies that this
correspondence is a stable antitone Galois connection on probe families.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import DomainError
from .polynomials import GridSpec, LayeredPolynomial, Point


@dataclass(frozen=True)
class FinitePointSet:
    """Deduplicated points of a common arity; may be empty (an empty variety)."""

    points: Tuple[Point, ...]

    @classmethod
    def of(cls, points: Iterable[Point]) -> "FinitePointSet":
        seen, out = set(), []
        arity = None
        for p in points:
            p = tuple(p)
            if arity is None:
                arity = len(p)
            elif len(p) != arity:
                raise DomainError("points of mixed arity in one set")
            if p not in seen:
                seen.add(p)
                out.append(p)
        return cls(tuple(out))

    def union(self, other: "FinitePointSet") -> "FinitePointSet":
        return FinitePointSet.of(self.points + other.points)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, point):
        return tuple(point) in set(self.points)


Pair = Tuple[LayeredPolynomial, LayeredPolynomial]


def _check_pairs(pairs: Sequence[Pair]) -> None:
    for f, g in pairs:
        f._compatible(g)
    for (f, _), (h, _) in zip(pairs, pairs[1:]):
        f._compatible(h)


def congruent_on(f: LayeredPolynomial, g: LayeredPolynomial, x: FinitePointSet) -> bool:
    """Pointwise full scalar equality over the set (layers included)."""
    f._compatible(g)
    if not len(x):
        raise DomainError("congruence needs a non-empty point set")
    return all(f.evaluate(a) == g.evaluate(a) for a in x)


def variety_of(pairs: Sequence[Pair], grid: GridSpec) -> FinitePointSet:
    """Grid points where every generating pair evaluates equally.

    An empty generator list describes the diagonal congruence, whose
    variety is the whole grid; callers can flag that degenerate case.
    """
    if not pairs:
        from .core import LayeredSemiring
        return FinitePointSet.of(grid.points(LayeredSemiring()))
    _check_pairs(pairs)
    semiring = pairs[0][0].semiring
    keep = [a for a in grid.points(semiring)
            if all(f.evaluate(a) == g.evaluate(a) for f, g in pairs)]
    return FinitePointSet.of(keep)


# ---------------------------------------------------------------------------
# Coordinate semirings


@dataclass(frozen=True)
class CoordinateFunction:
    """A polynomial seen through its evaluation vector on a fixed point set.

    Equality and hashing use the vector alone; the witness records one
    originating polynomial.
    """

    vector: Tuple
    witness: LayeredPolynomial

    def __eq__(self, other):
        return isinstance(other, CoordinateFunction) and self.vector == other.vector

    def __hash__(self):
        return hash(self.vector)

    def add(self, other: "CoordinateFunction") -> "CoordinateFunction":
        sr = self.witness.semiring
        vector = tuple(sr.add(a, b) for a, b in zip(self.vector, other.vector))
        return CoordinateFunction(vector, self.witness.add(other.witness))

    def mul(self, other: "CoordinateFunction") -> "CoordinateFunction":
        sr = self.witness.semiring
        vector = tuple(sr.mul(a, b) for a, b in zip(self.vector, other.vector))
        return CoordinateFunction(vector, self.witness.mul(other.witness))


def quotient_map(f: LayeredPolynomial, x: FinitePointSet) -> CoordinateFunction:
    """The semiring homomorphism sending a polynomial to its evaluation vector."""
    if not len(x):
        raise DomainError("coordinate functions need a non-empty point set")
    return CoordinateFunction(tuple(f.evaluate(a) for a in x), f)


def coordinate_semiring(x: FinitePointSet,
                        basis: Sequence[LayeredPolynomial]) -> Tuple[CoordinateFunction, ...]:
    """Distinct evaluation-vector representatives of the given polynomials."""
    out: List[CoordinateFunction] = []
    seen = set()
    for f in basis:
        cf = quotient_map(f, x)
        if cf.vector not in seen:
            seen.add(cf.vector)
            out.append(cf)
    return tuple(out)


def restrict(cf: CoordinateFunction, y: FinitePointSet, x: FinitePointSet) -> CoordinateFunction:
    """Project a coordinate function on Y down to a subset X (vector projection)."""
    index = {p: i for i, p in enumerate(y)}
    try:
        picks = [index[p] for p in x]
    except KeyError:
        raise DomainError("restriction target is not a subset of the source point set")
    return CoordinateFunction(tuple(cf.vector[i] for i in picks), cf.witness)


# ---------------------------------------------------------------------------
# Zariski round trip


@dataclass
class ZariskiReport:
    variety_size: int
    probe_pairs: int
    diagonal: bool
    stable: bool
    antitone_generators: bool
    antitone_points: bool
    union_law: bool

    @property
    def passed(self) -> bool:
        return (self.stable and self.antitone_generators
                and self.antitone_points and self.union_law)

    def to_json(self) -> Dict:
        return {
            "variety_size": self.variety_size,
            "probe_pairs": self.probe_pairs,
            "diagonal": self.diagonal,
            "stable": self.stable,
            "antitone_generators": self.antitone_generators,
            "antitone_points": self.antitone_points,
            "union_law": self.union_law,
            "pass": self.passed,
        }


def _random_poly(rng: random.Random, template: LayeredPolynomial) -> LayeredPolynomial:
    sr = template.semiring
    nvars = template.nvars
    coeffs = {}
    for _ in range(rng.randint(1, 3)):
        exponents = tuple(rng.randint(0, 2) for _ in range(nvars))
        coeffs[exponents] = sr.scalar(rng.randint(-3, 3))
    return LayeredPolynomial(sr, nvars, coeffs, template.laurent)


def _probe_family(pairs: Sequence[Pair], rng: random.Random) -> List[Pair]:
    """Generators plus derived pairs known to lie in the same congruence."""
    probes = list(pairs)
    for f, g in pairs:
        h = _random_poly(rng, f)
        probes.append((f.add(h), g.add(h)))
        probes.append((f.mul(h), g.mul(h)))
    for (f1, g1), (f2, g2) in zip(pairs, pairs[1:]):
        probes.append((f1.add(f2), g1.add(g2)))
        probes.append((f1.mul(f2), g1.mul(g2)))
    return probes


def zariski_roundtrip(pairs: Sequence[Pair], grid: GridSpec,
                      seed: int = 0) -> ZariskiReport:
    """Verify stability of the variety and both antitone laws on a probe family."""
    diagonal = not pairs
    variety = variety_of(pairs, grid)
    rng = random.Random(seed)
    probes = _probe_family(pairs, rng) if pairs else []

    revisited = variety_of(probes, grid) if probes else variety
    stable = set(revisited.points) == set(variety.points)

    if len(pairs) >= 2:
        smaller = variety_of(pairs[:-1], grid)
        antitone_generators = set(variety.points) <= set(smaller.points)
    else:
        antitone_generators = True

    antitone_points = True
    union_law = True
    grid_points = grid.points(pairs[0][0].semiring) if pairs else []
    if probes and grid_points:
        sample = rng.sample(grid_points, min(6, len(grid_points)))
        small = FinitePointSet.of(sample[: max(1, len(sample) // 2)])
        large = FinitePointSet.of(sample)
        for f, g in probes:
            if congruent_on(f, g, large) and not congruent_on(f, g, small):
                antitone_points = False
            both = congruent_on(f, g, small) and congruent_on(f, g, large)
            if congruent_on(f, g, small.union(large)) != both:
                union_law = False

    return ZariskiReport(
        variety_size=len(variety),
        probe_pairs=len(probes),
        diagonal=diagonal,
        stable=stable,
        antitone_generators=antitone_generators,
        antitone_points=antitone_points,
        union_law=union_law,
    )
