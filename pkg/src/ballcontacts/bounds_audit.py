"""Bound evaluators and the numeric audit of the constant chain behind the
6n - 0.926 n^(2/3) upper bound for touching pairs.

The four external constants (1.58731, 0.7547, 0.89332, 2.52) are axioms:
inputs whose own proofs are out of scope here. Everything else is derived
from them by explicit arithmetic and checked against its published decimal
form to a tolerance matching the printed precision (1e-5 for 5-decimal
constants, 1e-6 for longer ones). Strict inequalities are audited as
indicator values: computed is 1.0 when the inequality holds, expected is
1.0 with zero tolerance.
"""

import math
from dataclasses import dataclass

__all__ = [
    "BoundReport",
    "AuditResult",
    "ProofParams",
    "pairs_upper",
    "triplets_quads_upper",
    "construction_lower",
    "high_dim_pairs_upper",
    "audit_chain",
    "final_bound_inequality",
]


@dataclass(frozen=True)
class BoundReport:
    name: str
    n: int
    value: float
    formula_text: str

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise ValueError(f"bound {self.name} evaluated to {self.value}")


@dataclass(frozen=True)
class AuditResult:
    """One audited equation or inequality. passed is definitionally
    |computed - expected| <= tolerance."""

    name: str
    computed: float
    expected: float
    tolerance: float
    passed: bool

    def __post_init__(self):
        want = abs(self.computed - self.expected) <= self.tolerance
        if self.passed != want:
            raise ValueError(f"inconsistent pass flag on audit {self.name}")


def _audit(name: str, computed: float, expected: float, tolerance: float) -> AuditResult:
    return AuditResult(name, computed, expected, tolerance,
                       abs(computed - expected) <= tolerance)


def _indicator(name: str, holds: bool) -> AuditResult:
    return _audit(name, 1.0 if holds else 0.0, 1.0, 0.0)


@dataclass(frozen=True)
class ProofParams:
    """The audited axioms: truncation radius r_hat, the upper density bound
    for packings with all Voronoi inradii below r_hat, the covering-density
    style constant 0.89332, and the minimum separation 2.52 enjoyed by ball
    centers whose Voronoi cell gets close to a dodecahedron."""

    r_hat: float = 1.58731
    density_bound: float = 0.7547
    molnar_bound: float = 0.89332
    hales_separation: float = 2.52

    def __post_init__(self):
        if not self.r_hat > math.sqrt(2.0):
            raise ValueError(f"r_hat = {self.r_hat} must exceed sqrt(2)")
        if not 4.0 / self.r_hat < self.hales_separation:
            raise ValueError(
                f"4/r_hat = {4.0 / self.r_hat} must stay below "
                f"{self.hales_separation}"
            )
        if not 0.0 < self.density_bound < 1.0:
            raise ValueError("density_bound must lie in (0, 1)")
        if not 0.0 < self.molnar_bound < 1.0:
            raise ValueError("molnar_bound must lie in (0, 1)")


def pairs_upper(n: int, lattice: bool = False) -> BoundReport:
    """Upper bound for touching pairs among n unit balls.

    General packings: 6n - 0.926 n^(2/3). Packings whose centers lie in a
    lattice of minimum distance 2: 6n - (3 * (18*pi)^(1/3) / pi) n^(2/3),
    with coefficient 3.665..., strictly stronger.
    """
    if n < 2:
        raise ValueError(f"pairs bound needs n >= 2, got {n}")
    if lattice:
        coeff = 3.0 * (18.0 * math.pi) ** (1.0 / 3.0) / math.pi
        return BoundReport(
            "pairs_upper_lattice", n, 6.0 * n - coeff * n ** (2.0 / 3.0),
            "6n - (3(18pi)^(1/3)/pi) n^(2/3)"
        )
    return BoundReport(
        "pairs_upper", n, 6.0 * n - 0.926 * n ** (2.0 / 3.0),
        "6n - 0.926 n^(2/3)"
    )


def triplets_quads_upper(n: int, lattice: bool = False) -> tuple[float, float]:
    """(triplet bound, quadruple bound): (25n/3, 11n/4) in general and
    (8n, 2n) in the lattice case.

    The general bounds are stated for n >= 3 resp. n >= 4; since both are
    returned together the general call requires n >= 4, the lattice call
    n >= 2.
    """
    minimum = 2 if lattice else 4
    if n < minimum:
        raise ValueError(
            f"triplet/quadruple bounds need n >= {minimum}, got {n}"
        )
    if lattice:
        return 8.0 * n, 2.0 * n
    return 25.0 * n / 3.0, 11.0 * n / 4.0


def construction_lower(n: int) -> tuple[float, float, float]:
    """Lower-bound expressions met by the octahedral construction:
    pairs  > 6n - 486^(1/3) n^(2/3)  (486^(1/3) = 7.862...),
    triplets > 8n - 12 (3n/2)^(2/3) + 4 n^(1/3),
    quadruples > 2n - 4 (3n/2)^(2/3) + 2 n^(1/3).
    """
    if n < 2:
        raise ValueError(f"construction bounds need n >= 2, got {n}")
    pairs_lb = 6.0 * n - 486.0 ** (1.0 / 3.0) * n ** (2.0 / 3.0)
    mid = (1.5 * n) ** (2.0 / 3.0)
    cbrt = n ** (1.0 / 3.0)
    triplets_lb = 8.0 * n - 12.0 * mid + 4.0 * cbrt
    quads_lb = 2.0 * n - 4.0 * mid + 2.0 * cbrt
    return pairs_lb, triplets_lb, quads_lb


def high_dim_pairs_upper(n: int, d: int, tau_d: float, delta_d: float) -> float:
    """The d >= 4 analogue: tau_d/2 * n - (1/2^d) delta_d^(-(d-1)/d) n^((d-1)/d),
    where tau_d is the kissing number and delta_d the packing density."""
    if d < 4:
        raise ValueError(f"dimension must be >= 4, got {d}")
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if not tau_d > 0.0:
        raise ValueError(f"tau_d must be positive, got {tau_d}")
    if not 0.0 < delta_d < 1.0:
        raise ValueError(f"delta_d must lie in (0, 1), got {delta_d}")
    ex = (d - 1.0) / d
    return 0.5 * tau_d * n - (1.0 / 2.0**d) * delta_d ** (-ex) * n**ex


def audit_chain(params: ProofParams = ProofParams()) -> list[AuditResult]:
    """Recompute every derived constant of the pair-bound proof and check
    it against the published decimals.

    Returns one AuditResult per step; strict inequalities appear as
    indicator entries with expected 1.0 and zero tolerance.
    """
    r = params.r_hat
    results = []

    # (a) separation at the truncation angle alpha = arccos(1/r_hat)
    alpha = math.acos(1.0 / r)
    four_cos = 4.0 * math.cos(alpha)
    results.append(_audit("four_over_r_hat", four_cos, 2.51998, 1e-5))
    results.append(_indicator(
        "four_over_r_hat_below_separation",
        four_cos < params.hales_separation,
    ))

    # (b) circumradius of the regular dodecahedron with inradius 1
    results.append(_audit(
        "dodecahedron_circumradius",
        math.sqrt(3.0) * math.tan(math.pi / 5.0), 1.2584, 1e-4,
    ))

    # (c) surface coefficient of the isoperimetric step
    surface_coeff = 4.0 * math.pi / params.density_bound ** (2.0 / 3.0)
    results.append(_audit(
        "surface_coefficient", surface_coeff, 15.15980554, 1e-6,
    ))

    # (d) spherical-cap chain: cap area at angle pi/6 on the r_hat sphere,
    # then the 10-cap and 3-cap surface remainders
    cap = 2.0 * math.pi * (1.0 - math.sqrt(3.0) / 2.0) * r * r
    sphere = 4.0 * math.pi * r * r
    ten_cap = sphere - 10.0 * cap / params.molnar_bound
    three_cap = sphere - 3.0 * cap / params.molnar_bound
    results.append(_audit("ten_cap_constant", ten_cap, 7.91956, 1e-5))
    results.append(_audit("three_cap_constant", three_cap, 24.53902, 1e-5))

    # (e) ratio feeding the count of balls with at most 9 neighbors
    ratio = surface_coeff / (three_cap / 3.0)
    results.append(_audit("surface_ratio", ratio, 1.85335, 1e-5))

    # (f) final coefficient and the validity of its rounding
    results.append(_audit("final_coefficient", ratio / 2.0, 0.926675, 1e-6))
    results.append(_indicator("final_coefficient_rounds_down",
                              ratio / 2.0 >= 0.926))

    # (g) isoperimetric identity is tight for the ball of radius r_hat
    vol = 4.0 * math.pi * r**3 / 3.0
    svol = sphere
    results.append(_audit(
        "isoperimetric_ball", 36.0 * math.pi * vol * vol / svol**3, 1.0, 1e-12,
    ))

    # (h) precondition of the truncated-Voronoi step
    results.append(_indicator("r_hat_above_sqrt2", r > math.sqrt(2.0)))

    return results


def final_bound_inequality(n: int, m: int, k: int) -> float:
    """The counting step (12n - (n - m - k) - 3k) / 2, where m balls have
    exactly 12 neighbors and k balls have at most 9.

    Requires 0 <= m and 4 <= k <= n - m.
    """
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    if not 4 <= k <= n - m:
        raise ValueError(f"need 4 <= k <= n - m, got k={k}, n-m={n - m}")
    return 0.5 * (12.0 * n - (n - m - k) - 3.0 * k)
