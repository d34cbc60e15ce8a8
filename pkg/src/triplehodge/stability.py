"""Stability ranges, critical values, and chambers for holomorphic triples.

A triple of type (n1, n2, d1, d2) on a genus-g curve is a pair of bundles
E1, E2 of ranks n1, n2 and degrees d1, d2 together with a map E2 -> E1.
Stability depends on a real parameter sigma; the moduli space changes only
when sigma crosses one of finitely many critical values, and is constant
on the open chambers in between.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import OutOfRange

__all__ = [
    "SigmaRange",
    "TripleType",
    "chamber_bounds",
    "chamber_containing",
    "chamber_sigma",
    "chi_triples",
    "criticals_21",
    "criticals_31",
    "resolve_sigma",
    "sigma_range",
]


@dataclass(frozen=True)
class TripleType:
    """Discrete invariants (n1, n2, d1, d2) of a triple on a genus-g curve."""

    n1: int
    n2: int
    d1: int
    d2: int
    g: int

    def __post_init__(self) -> None:
        for name in ("n1", "n2", "d1", "d2", "g"):
            value = getattr(self, name)
            if not isinstance(value, int):
                raise TypeError(f"{name} must be an integer, got {value!r}")
        if self.g < 2:
            raise OutOfRange(f"genus must be at least 2, got {self.g}")
        if self.n1 < 0 or self.n2 < 0:
            raise OutOfRange("ranks must be nonnegative")
        if self.n1 == 0 and self.n2 == 0:
            raise OutOfRange("ranks must not both be zero")


@dataclass(frozen=True)
class SigmaRange:
    """Interval of allowed stability parameters with its critical values.

    sigma ranges over (sigma_m, sigma_M]; sigma_M is None when the range
    is unbounded (equal ranks).  criticals is the increasing tuple of
    values inside the range where strictly semistable triples appear.
    empty is True when sigma_M < sigma_m, so no stable triples exist for
    any sigma.
    """

    sigma_m: Fraction
    sigma_M: Fraction | None
    criticals: tuple[Fraction, ...]
    empty: bool


def sigma_range(t: TripleType) -> SigmaRange:
    """Allowed sigma interval and critical values for the type t.

    Critical values are enumerated for the ranks (2,1) and (3,1) that
    the closed-form results cover; other rank pairs get the interval
    with an empty critical list.
    """
    if t.n1 == 0 or t.n2 == 0:
        raise OutOfRange("sigma range needs both ranks positive")
    mu1 = Fraction(t.d1, t.n1)
    mu2 = Fraction(t.d2, t.n2)
    sigma_m = mu1 - mu2
    if t.n1 == t.n2:
        sigma_big: Fraction | None = None
    else:
        factor = 1 + Fraction(t.n1 + t.n2, abs(t.n1 - t.n2))
        sigma_big = factor * (mu1 - mu2)
    empty = sigma_big is not None and sigma_big < sigma_m
    criticals: tuple[Fraction, ...] = ()
    if not empty:
        if (t.n1, t.n2) == (3, 1):
            criticals = tuple(
                Fraction(s) for _, s in criticals_31(t)
            )
        elif (t.n1, t.n2) == (2, 1):
            criticals = tuple(
                Fraction(s) for _, s in criticals_21(t.d1, t.d2)
            )
    return SigmaRange(
        sigma_m=sigma_m, sigma_M=sigma_big, criticals=criticals, empty=empty
    )


def criticals_31(t: TripleType) -> list[tuple[int, int]]:
    """Critical values for type (3, 1) as (n, sigma_n) pairs, increasing in n.

    The critical value sigma_n = 2n - d1 - d2 is indexed by the degree n
    of the rank-1 destabilizing quotient, over 2*d1/3 < n <= d1 - d2.
    """
    if (t.n1, t.n2) != (3, 1):
        raise OutOfRange(f"expected ranks (3, 1), got ({t.n1}, {t.n2})")
    lower = (2 * t.d1) // 3 + 1
    upper = t.d1 - t.d2
    return [(n, 2 * n - t.d1 - t.d2) for n in range(lower, upper + 1)]


def criticals_21(d1: int, d2: int) -> list[tuple[int, int]]:
    """Critical values for type (2, 1) as (d_m, sigma_c) pairs.

    sigma_c = 3*d_m - d1 - d2 is indexed by the degree d_m of the
    destabilizing line subbundle, over d1/2 < d_m <= d1 - d2.
    """
    lower = d1 // 2 + 1
    upper = d1 - d2
    return [(m, 3 * m - d1 - d2) for m in range(lower, upper + 1)]


def chamber_bounds(t: TripleType) -> list[tuple[Fraction, Fraction]]:
    """Open chambers (lo, hi) between consecutive critical values.

    The first chamber starts at sigma_m; the last one ends at the top
    critical value, which equals sigma_M for the (2,1) and (3,1) types.
    """
    rng = sigma_range(t)
    if rng.empty or not rng.criticals:
        return []
    cuts = [rng.sigma_m, *rng.criticals]
    return list(zip(cuts[:-1], cuts[1:]))


def chamber_containing(
    t: TripleType, sigma: Fraction
) -> tuple[Fraction, Fraction, Fraction] | None:
    """The (sigma, lo, hi) descriptor of the chamber holding sigma, if any."""
    for lo, hi in chamber_bounds(t):
        if lo < sigma < hi:
            return (sigma, lo, hi)
    return None


def chamber_sigma(t: TripleType, index: int) -> Fraction:
    """Representative sigma (the midpoint) of the 1-based chamber index."""
    bounds = chamber_bounds(t)
    if not bounds:
        raise OutOfRange(
            f"type ({t.n1},{t.n2},{t.d1},{t.d2}) has no chambers"
        )
    if not 1 <= index <= len(bounds):
        raise OutOfRange(
            f"chamber index {index} out of range 1..{len(bounds)}"
        )
    lo, hi = bounds[index - 1]
    return (lo + hi) / 2


def resolve_sigma(t: TripleType, sigma, chamber: int | None) -> Fraction:
    """Normalize the (sigma, chamber) pair of a moduli query to one rational.

    Exactly one of the two must be given; a chamber index is converted
    to the chamber's midpoint.
    """
    if chamber is not None:
        if sigma is not None:
            raise OutOfRange("pass sigma or chamber, not both")
        return chamber_sigma(t, chamber)
    if sigma is None:
        raise OutOfRange("either sigma or chamber is required")
    return Fraction(sigma)


def chi_triples(tq: TripleType, ts: TripleType) -> int:
    """Euler characteristic chi(T'', T') of the hom-complex of two triples.

    tq plays T'' and ts plays T'; both must live on a curve of the same
    genus.  Flip loci are fibered in projective or affine spaces whose
    dimensions are read off from -chi of destabilizing pairs.
    """
    if tq.g != ts.g:
        raise OutOfRange(f"genus mismatch: {tq.g} != {ts.g}")
    g = tq.g
    rank_part = (1 - g) * (
        tq.n1 * ts.n1 + tq.n2 * ts.n2 - tq.n2 * ts.n1
    )
    degree_part = (
        tq.n1 * ts.d1
        - ts.n1 * tq.d1
        + tq.n2 * ts.d2
        - ts.n2 * tq.d2
        - tq.n2 * ts.d1
        + ts.n1 * tq.d2
    )
    return rank_part + degree_part
