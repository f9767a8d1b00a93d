"""Dimensions of intersections of a restricted digit attractor with a translate.

For a translation alpha with digits in D - D, the level-k cylinder count of
the intersection is the product M_k of the admissible digit-set sizes
|D cap (D + alpha_j)|.  For eventually periodic alpha all four standard
fractal dimensions coincide and equal log(M over one cycle) / (p log|b|),
kept here as an exact symbolic value.  The translation builder produces, for
any rational level fraction, a translation hitting that fraction exactly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

from .arith import QI
from .radix import Base, DigitSeq, DigitSet, check_alphabet, find_expansion


class HypothesisError(ValueError):
    """A computation was requested outside its proven hypotheses."""

    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations))
        self.violations = violations


REGIMES = ("bounded", "sparse")


@dataclass(frozen=True)
class Config:
    """An (n, D) pair together with the separation regime it claims.

    bounded: D within {0..floor(n^2/2)} and no two elements of D - D at
    distance exactly 1.  sparse: D within {0..n^2} and distinct elements of
    D - D at distance above 2 (n >= 5) or above 3 (n in {2,3,4}).
    """

    n: int
    digits: DigitSet
    regime: str

    def __post_init__(self) -> None:
        if self.regime not in REGIMES:
            raise ValueError(f"regime must be one of {REGIMES}")
        if self.digits.n != self.n:
            raise ValueError("digit set was built for a different n")

    @property
    def base(self) -> Base:
        return Base(self.n)

    @property
    def delta(self) -> DigitSet:
        return self.digits.difference()


def validate(cfg: Config) -> list[str]:
    """Violations of the declared regime; empty iff the hypotheses hold."""
    out: list[str] = []
    n, digs = cfg.n, cfg.digits.digits
    nsq = n * n
    for d in digs:
        if d < 0 or d > nsq:
            out.append(f"digit {d} outside [0, {nsq}]")
    deltas = cfg.delta.digits
    if cfg.regime == "bounded":
        lim = nsq // 2
        for d in digs:
            if d > lim:
                out.append(f"digit {d} exceeds floor(n^2/2) = {lim}")
        for a in deltas:
            for b in deltas:
                if abs(a - b) == 1:
                    out.append(f"difference gap |{a}-({b})| = 1 is forbidden")
    else:
        need = 2 if n >= 5 else 3
        for a in deltas:
            for b in deltas:
                if a != b and abs(a - b) <= need:
                    out.append(
                        f"difference gap |{a}-({b})| = {abs(a - b)} must exceed {need} for n={n}"
                    )
    # deduplicate, keep first occurrences
    seen: set[str] = set()
    uniq = []
    for v in out:
        if v not in seen:
            seen.add(v)
            uniq.append(v)
    return uniq


def require_valid(cfg: Config) -> None:
    violations = validate(cfg)
    if violations:
        raise HypothesisError(violations)


def _factorise(m: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= m:
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
        d += 1
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


@dataclass(frozen=True)
class DimValue:
    """Exact dimension value log(m) / (q log B) with B = n^2 + 1.

    Canonical: the common power is extracted, gcd(exponents of m, q) = 1, and
    zero is (m, q) = (1, 1).  Structural equality then decides value equality.
    """

    log_base: int
    m: int
    q: int = 1

    def __post_init__(self) -> None:
        if self.log_base < 5 or self.m < 1 or self.q < 1:
            raise ValueError("malformed dimension value")
        m, q = self.m, self.q
        if m == 1:
            q = 1
        else:
            exps = _factorise(m)
            g = q
            for e in exps.values():
                g = gcd(g, e)
            if g > 1:
                m = 1
                for prime, e in exps.items():
                    m *= prime ** (e // g)
                q //= g
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "q", q)

    @classmethod
    def from_cycle_factors(cls, factors: tuple[int, ...], log_base: int) -> DimValue:
        """Value log(prod factors) / (p log sqrt(B)) for a cycle of length p."""
        m = 1
        for f in factors:
            m *= f
        return cls(log_base, m * m, len(factors))

    def scaled(self, lam: Fraction) -> DimValue:
        if lam < 0:
            raise ValueError("negative scaling")
        return DimValue(self.log_base, self.m**lam.numerator, self.q * lam.denominator)

    def is_zero(self) -> bool:
        return self.m == 1

    def display_parts(self) -> tuple[Fraction, int]:
        """(coefficient, m0) with value = coefficient * log(m0)/log(sqrt(B))."""
        if self.m == 1:
            return Fraction(0), 1
        exps = _factorise(self.m)
        e = 0
        for v in exps.values():
            e = gcd(e, v)
        m0 = 1
        for prime, v in exps.items():
            m0 *= prime ** (v // e)
        return Fraction(e, 2 * self.q), m0

    def decimal(self) -> float:
        if self.m == 1:
            return 0.0
        return math.log(self.m) / (self.q * math.log(self.log_base))

    def as_json(self) -> dict:
        coeff, m0 = self.display_parts()
        return {
            "coefficient": str(coeff),
            "base_log": f"log({m0})/log(sqrt({self.log_base}))",
            "decimal": f"{self.decimal():.4f}",
        }

    def __str__(self) -> str:
        coeff, m0 = self.display_parts()
        return f"{coeff}*log({m0})/log(sqrt({self.log_base}))"


@dataclass(frozen=True)
class DimensionReport:
    lower_box: DimValue
    upper_box: DimValue
    hausdorff: DimValue
    packing: DimValue
    m_cycle: tuple[int, ...]

    @property
    def value(self) -> DimValue:
        return self.lower_box


def admissible_digits(digits: DigitSet, alpha_j: int) -> tuple[int, ...]:
    """D cap (D + alpha_j); nonempty whenever alpha_j lies in D - D."""
    if alpha_j not in set(digits.difference().digits):
        raise ValueError(f"translation digit {alpha_j} not in D - D")
    dset = set(digits.digits)
    return tuple(sorted(d for d in dset if d - alpha_j in dset))


def m_k(cfg: Config, alpha: DigitSeq, k: int) -> int:
    """Product of the first k admissible digit-set cardinalities."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    out = 1
    for j in range(1, k + 1):
        out *= len(admissible_digits(cfg.digits, alpha.at(j)))
    return out


def attractor_dimension(cfg: Config) -> DimValue:
    """Dimension of the untranslated attractor, log|D| / log|b|."""
    return DimValue(cfg.n * cfg.n + 1, len(cfg.digits.digits) ** 2, 1)


def lambda_target(cfg: Config, lam: Fraction) -> DimValue:
    """The level value lam * log|D| / log|b|."""
    return attractor_dimension(cfg).scaled(lam)


def dimension(cfg: Config, alpha: DigitSeq) -> DimensionReport:
    """Exact dimension report for the intersection translated by alpha.

    For eventually periodic alpha the level exponents converge, the prefix
    contributes nothing, and lower/upper box, Hausdorff and packing dimensions
    all equal the per-cycle value.
    """
    require_valid(cfg)
    check_alphabet(alpha, cfg.delta.digits)
    factors = tuple(len(admissible_digits(cfg.digits, c)) for c in alpha.cycle)
    value = DimValue.from_cycle_factors(factors, cfg.n * cfg.n + 1)
    return DimensionReport(value, value, value, value, factors)


def build_translation(cfg: Config, alpha_prefix: tuple[int, ...], lam: Fraction) -> DigitSeq:
    """Translation with the given admissible prefix whose dimension fraction is lam.

    Tail digits follow the floor rule h_j = floor(j lam): positions where h
    does not advance get d_max - d_min (admissible count 1), positions where
    it advances get 0 (admissible count |D|).  For rational lam the tail is
    periodic, and the advance density makes the dimension exactly
    lam * log|D| / log|b|.
    """
    require_valid(cfg)
    lam = Fraction(lam)
    if lam < 0 or lam > 1:
        raise ValueError("level fraction must lie in [0, 1]")
    prefix = tuple(int(d) for d in alpha_prefix)
    for d in prefix:
        admissible_digits(cfg.digits, d)
    digs = cfg.digits.digits
    gap = digs[-1] - digs[0]
    m = len(prefix)
    s = lam.denominator
    cycle = []
    for j in range(m + 1, m + s + 1):
        advanced = (j * lam).__floor__() > ((j - 1) * lam).__floor__()
        cycle.append(0 if advanced else gap)
    return DigitSeq(prefix, tuple(cycle))


def in_fundamental_translations(cfg: Config, alpha: QI) -> Optional[DigitSeq]:
    """Digit sequence over D - D with value alpha, or None when alpha is not
    a translation meeting the attractor."""
    return find_expansion(alpha, cfg.base, cfg.delta)
