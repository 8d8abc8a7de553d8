"""Global sections of O(D) as a monomial tropical module.

On a smooth toric surface the sections are generated by the monomials
x^m for m in P(D) ∩ M (one generator per lattice point, canonical
coefficient 0).  This module computes the two slope-count estimates of
h0, builds interpolating sections from tropical Vandermonde cofactors,
and decides the cycle-sum genericity predicate for point configurations.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .divisor import ToricDivisor, UnboundedPolytopeError, lattice_points, polytope
from .fan import Fan, Vec, dot
from .trop import TropMatrix, TropPolynomial, as_fraction, supporting_monomials, trop_det

_SAMPLE_SEED = 714025  # fixed: slope-count sampling must be reproducible


@dataclass(frozen=True)
class SectionModule:
    """The section module of a divisor, given by its generator exponents.

    Generators are exactly the lattice points of P(D), in lattice-point
    order; they are pairwise distinct, hence each one is extremal.
    """

    fan: Fan
    divisor: ToricDivisor
    generators: tuple[Vec, ...]

    @property
    def rank(self) -> int:
        return len(self.generators)


def global_sections(fan: Fan, d: ToricDivisor) -> SectionModule:
    """The monomial generators of the sections of O(D).

    Errors out when P(D) is unbounded: the module is not finitely
    generated and no generating set is produced.
    """
    if d.fan != fan:
        raise ValueError("divisor does not live on the given fan")
    if not fan.is_smooth():
        raise ValueError("global sections require a smooth fan")
    try:
        gens = lattice_points(polytope(d))
    except UnboundedPolytopeError:
        raise ValueError(
            "P(D) is unbounded: the section module is not finitely generated"
        ) from None
    return SectionModule(fan, d, gens)


def _point(x) -> tuple[Fraction, Fraction]:
    if len(x) != 2:
        raise ValueError("points live in the plane")
    return (as_fraction(x[0]), as_fraction(x[1]))


def generator_value(m: Vec, x) -> Fraction:
    """Value of the canonical generator x^m (coefficient 0) at x."""
    p = _point(x)
    return m[0] * p[0] + m[1] * p[1]


def local_slope_count(module: SectionModule, x) -> int:
    """Number of generators distinct near x up to tropical scaling.

    Each generator restricts to an affine function of slope m near any
    inner point, so the count is the number of distinct exponents, which
    equals the generator count by construction; the exponent set is still
    recounted here rather than assumed.
    """
    if not module.generators:
        raise ValueError("the zero module has no local slope count")
    _point(x)
    slopes = set(module.generators)
    return len(slopes)


def _sampled_count(module: SectionModule, samples: int = 3) -> int:
    if not module.generators:
        return 0
    rng = random.Random(_SAMPLE_SEED)
    counts = set()
    for _ in range(samples):
        # rejection: resample until no two generators tie at the point
        while True:
            x = (
                Fraction(rng.randint(-40, 40), rng.randint(1, 7)),
                Fraction(rng.randint(-40, 40), rng.randint(1, 7)),
            )
            values = {generator_value(m, x) for m in module.generators}
            if len(values) == len(module.generators):
                break
        counts.add(local_slope_count(module, x))
    assert counts == {module.rank}
    return module.rank


def h0_a(module: SectionModule) -> int:
    """Largest k such that k sections stay pairwise distinct near every point.

    For a monomial module the generators have pairwise distinct slopes
    everywhere, so the maximum is the generator count; sampled slope
    counts are cross-checked against the cardinality.
    """
    return _sampled_count(module)


def h0_b(module: SectionModule) -> int:
    """Minimum over points of the local slope count of the full module.

    Coincides with the generator count for monomial modules: the local
    count is constant.
    """
    return _sampled_count(module)


def vandermonde_section(module: SectionModule, points) -> TropPolynomial:
    """The interpolating section through l-1 prescribed points.

    With generators s_1..s_l, the coefficient of s_i is the tropical
    determinant of the (l-1)x(l-1) matrix (s_j(p_k)) over j != i, i.e.
    the cofactor of the i-th column of the Vandermonde matrix.  The
    divisor of the returned section passes through every input point.
    """
    gens = module.generators
    l = len(gens)
    if l < 2:
        raise ValueError("interpolation needs at least two generators")
    pts = [_point(p) for p in points]
    if len(pts) != l - 1:
        raise ValueError(f"expected {l - 1} points, got {len(pts)}")
    rows = [[generator_value(m, p) for m in gens] for p in pts]
    terms = []
    for i in range(l):
        sub = tuple(
            tuple(row[j] for j in range(l) if j != i) for row in rows
        )
        value, _ = trop_det(TropMatrix(sub))
        terms.append((gens[i], value))
    return TropPolynomial(2, terms)


def passes_through(section: TropPolynomial, x) -> bool:
    """Whether the divisor of the section passes through x.

    True iff at least two monomials attain the maximum at x (exact tie),
    i.e. the section is non-smooth there.
    """
    return len(supporting_monomials(section, _point(x))) >= 2


def is_generic_configuration(module: SectionModule, points) -> bool:
    """Whether no cycle sum over the generators vanishes on the points.

    Checks every ordered sequence of k >= 2 distinct generator indices
    i_1..i_k against every assignment of k distinct points x_1..x_k,
    testing sum_j (s_{i_j}(x_j) - s_{i_{j+1}}(x_j)) != 0 exactly (indices
    cyclic).  Repeated coordinates among the given points defeat
    genericity: a 2-cycle on two coinciding points telescopes to zero.
    Brute force, exponential in the generator count, hence the hard cap.
    """
    gens = module.generators
    L = len(gens)
    if L > 7:
        raise ValueError("generator count too large for the brute-force search")
    pts = [_point(p) for p in points]
    if L < 2 or not pts:
        return True
    values = [[generator_value(m, p) for m in gens] for p in pts]
    for k in range(2, min(L, len(pts)) + 1):
        for idx_seq in itertools.permutations(range(L), k):
            if idx_seq[0] != min(idx_seq):
                continue  # cycle sums are rotation-invariant
            for pt_seq in itertools.permutations(range(len(pts)), k):
                total = Fraction(0)
                for j in range(k):
                    i_cur = idx_seq[j]
                    i_next = idx_seq[(j + 1) % k]
                    total += values[pt_seq[j]][i_cur] - values[pt_seq[j]][i_next]
                if total == 0:
                    return False
    return True
