"""Newton polygons and the univariate root-valuation correspondence.

For a univariate polynomial over the series field, the lower convex hull of
the points (degree, lowest exponent of the coefficient) determines the
valuations of all roots: a hull segment of slope s and horizontal length m
contributes the valuation s with multiplicity m (with val being the
negative of the lowest exponent, these coincide with the corner roots of
the tropicalized polynomial).  The verifier checks this correspondence in
both directions on polynomials built from known roots, plus the exploded
refinement through leading coefficients.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .core import LayeredSemiring
from .errors import DomainError
from .polynomials import univariate_corner_roots
from .puiseux import ExplodedScalar, PuiseuxPolynomial, PuiseuxSeries
from .tropical import explode_poly, exploded_eval, trop_poly


@dataclass(frozen=True)
class NewtonSegment:
    slope: Fraction
    length: int


@dataclass(frozen=True)
class NewtonPolygon:
    """Lower convex hull data of (degree, lowest exponent) support points."""

    support: Tuple[Tuple[int, Fraction], ...]
    segments: Tuple[NewtonSegment, ...]


def _lower_hull(points: List[Tuple[int, Fraction]]) -> List[Tuple[int, Fraction]]:
    hull: List[Tuple[int, Fraction]] = []
    for p in points:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # keep only strictly increasing slopes; collinear middles merge
            if (x2 - x1) * (p[1] - y1) - (y2 - y1) * (p[0] - x1) <= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    return hull


def newton_polygon(f: PuiseuxPolynomial) -> NewtonPolygon:
    """The lower hull of the coefficient support, segments ordered by slope."""
    if f.is_zero:
        raise DomainError("the zero polynomial has no Newton polygon")
    support = tuple(sorted((d, -c.val()) for d, c in f.coeffs))
    hull = _lower_hull(list(support))
    segments = tuple(
        NewtonSegment(Fraction(y2 - y1, x2 - x1), x2 - x1)
        for (x1, y1), (x2, y2) in zip(hull, hull[1:]))
    return NewtonPolygon(support, segments)


def root_valuations(f: PuiseuxPolynomial) -> Tuple[Fraction, ...]:
    """Valuations of all roots, with multiplicity, sorted ascending.

    Each hull segment of slope s and length m contributes m copies of s:
    with val = -(lowest exponent), the valuation of a root on that segment
    is exactly the slope.
    """
    out: List[Fraction] = []
    for segment in newton_polygon(f).segments:
        out.extend([segment.slope] * segment.length)
    return tuple(sorted(out))


def bourbaki_extension(alpha: PuiseuxSeries, i: int, beta: PuiseuxSeries, j: int) -> Fraction:
    """The extended valuation making the monomials alpha*a^i and beta*a^j tie."""
    if i == j:
        raise DomainError("equal degrees give a degenerate tie")
    if alpha.is_zero or beta.is_zero:
        raise DomainError("tie coefficients must be nonzero")
    return (beta.val() - alpha.val()) / Fraction(i - j)


# ---------------------------------------------------------------------------
# Verification harness


@dataclass
class KapranovReport:
    """Outcome of one correspondence check for a polynomial with known roots."""

    polynomial: str
    roots: List[str]
    root_vals: List[str]
    corner_roots: List[Tuple[str, int]]
    forward_ok: bool
    reverse_ok: bool
    exploded_ok: bool

    @property
    def passed(self) -> bool:
        return self.forward_ok and self.reverse_ok and self.exploded_ok

    def to_json(self) -> Dict:
        return {
            "poly": self.polynomial,
            "roots": self.roots,
            "valuations": self.root_vals,
            "corner_roots": [{"root": r, "mult": m} for r, m in self.corner_roots],
            "forward": self.forward_ok,
            "reverse": self.reverse_ok,
            "exploded": self.exploded_ok,
            "pass": self.passed,
        }


def kapranov_verify(f: PuiseuxPolynomial, known_roots: Sequence[PuiseuxSeries],
                    semiring: Optional[LayeredSemiring] = None) -> KapranovReport:
    """Check the root-valuation correspondence for f with its known roots.

    Verifies that (a) the valuation of every known root is a corner root of
    the tropicalization, (b) the corner-root multiset equals both the
    Newton-polygon valuations and the known-root valuations, and (c) at
    every corner root the exploded evaluation at (leading coefficient,
    valuation) of some known root with that valuation has sort 0.
    """
    if f.is_zero:
        raise DomainError("cannot verify the zero polynomial")
    for r in known_roots:
        if not f(r).is_zero:
            raise DomainError(f"claimed root {r} does not annihilate the polynomial")

    sr = semiring or LayeredSemiring()
    tropicalized = trop_poly(sr, f)
    corner = univariate_corner_roots(tropicalized)
    corner_multiset = sorted(x for x, m in corner for _ in range(m))
    known_vals = sorted(r.val() for r in known_roots)
    newton_vals = list(root_valuations(f))

    forward_ok = all(
        tropicalized.is_corner_root((sr.scalar(r.val()),)) for r in known_roots)
    reverse_ok = corner_multiset == newton_vals == known_vals

    exploded = explode_poly(f)
    exploded_ok = True
    for x0, _ in corner:
        lifts = [r for r in known_roots if r.val() == x0]
        hit = any(
            exploded_eval(exploded, ExplodedScalar(r.leading(), x0)).is_corner_ghost
            for r in lifts)
        if not hit:
            exploded_ok = False

    return KapranovReport(
        polynomial=str(f),
        roots=[str(r) for r in known_roots],
        root_vals=[str(v) for v in known_vals],
        corner_roots=[(str(x), m) for x, m in corner],
        forward_ok=forward_ok,
        reverse_ok=reverse_ok,
        exploded_ok=exploded_ok,
    )


def random_split_product(rng: random.Random, degree: int) -> Tuple[PuiseuxPolynomial, List[PuiseuxSeries]]:
    """A product of (variable - c*t^e) factors with random rational c, e."""
    roots = []
    for _ in range(degree):
        c = Fraction(rng.choice([n for n in range(-9, 10) if n != 0]), rng.randint(1, 5))
        e = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        roots.append(PuiseuxSeries.term(c, e))
    return PuiseuxPolynomial.from_roots(roots), roots


@dataclass
class TrialSummary:
    """Aggregate of repeated randomized correspondence checks."""

    trials: int
    failures: List[Dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> Dict:
        return {"pass": self.passed, "trials": self.trials, "failures": self.failures}


def verify_random_products(degree: int, trials: int, seed: int,
                           semiring: Optional[LayeredSemiring] = None) -> TrialSummary:
    """Run the verifier on random split products of degree up to ``degree``."""
    if degree < 1:
        raise DomainError("degree must be at least 1")
    if trials < 1:
        raise DomainError("trials must be at least 1")
    rng = random.Random(seed)
    summary = TrialSummary(trials=trials)
    for _ in range(trials):
        f, roots = random_split_product(rng, rng.randint(1, degree))
        report = kapranov_verify(f, roots, semiring)
        if not report.passed:
            summary.failures.append(report.to_json())
    return summary
