"""Brute-force tile oracle: depth-k tile enumeration and exact intersection tests.

Depth-k tiles are labelled by digit words; two tiles of the same depth meet
exactly when the difference of their digit polynomials is a neighbour of the
ambient attractor, which turns every disjointness question into a finite
Gaussian-integer membership test.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .arith import QI, GaussianInt
from .dimension import Config, admissible_digits, require_valid
from .neighbours import NeighbourSet
from .radix import Base, DigitSeq, digit_polynomial, encode_integer, evaluate, find_expansion


@dataclass(frozen=True)
class KTile:
    """Image of the attractor under the depth-k digit word composition."""

    base: Base
    digits: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.digits)

    def value(self) -> GaussianInt:
        """Digit polynomial sum d_j b^(k-j); the tile is value/b^k + b^-k A."""
        return digit_polynomial(self.digits, self.base)


def tiles_intersect(t1: KTile, t2: KTile, ns: NeighbourSet) -> bool:
    """Whether two same-depth tiles meet: their scaled offset must be a neighbour."""
    if t1.base != t2.base:
        raise ValueError("tiles from different bases")
    if t1.k != t2.k:
        raise ValueError("tiles of different depths")
    return (t1.value() - t2.value()) in ns.members


def admissible_tiles(cfg: Config, alpha: DigitSeq, k: int) -> list[KTile]:
    """All depth-k tiles with digits drawn from the admissible sets of alpha."""
    require_valid(cfg)
    if k < 0:
        raise ValueError("depth must be nonnegative")
    base = cfg.base
    if k == 0:
        return [KTile(base, ())]
    slots = [admissible_digits(cfg.digits, alpha.at(j)) for j in range(1, k + 1)]
    return [KTile(base, word) for word in product(*slots)]


def witness_point(cfg: Config, alpha: DigitSeq, tile: KTile) -> tuple[QI, QI]:
    """A point z of the intersection inside the tile, returned as (z, z - alpha).

    The tail continues with the smaller digit of the least admissible pair at
    every level, so both z and z - alpha carry explicit digit expansions;
    both memberships are re-verified through the remainder search.
    """
    base = cfg.base
    for j, d in enumerate(tile.digits, start=1):
        if d not in admissible_digits(cfg.digits, alpha.at(j)):
            raise ValueError(f"tile digit {d} not admissible at level {j}")
    tail = alpha.map_terms(lambda a: min(admissible_digits(cfg.digits, a)))
    z_seq = tail.with_prefix_override(tile.digits)
    z = evaluate(z_seq, base)
    z_shift = z - evaluate(alpha, base)
    if find_expansion(z, base, cfg.digits) is None:
        raise RuntimeError("witness point fell outside the attractor")
    if find_expansion(z_shift, base, cfg.digits) is None:
        raise RuntimeError("shifted witness point fell outside the attractor")
    return z, z_shift


def pairwise_disjoint(tiles: list[KTile], ns: NeighbourSet) -> bool:
    """No two distinct tiles in the list intersect.

    Uses the value-set formulation: some pair meets iff some tile value plus a
    nonzero neighbour is again a tile value (or a digit word repeats).
    """
    if len(tiles) <= 1:
        return True
    k = tiles[0].k
    for t in tiles:
        if t.base != tiles[0].base or t.k != k:
            raise ValueError("tiles must share base and depth")
    values = [t.value() for t in tiles]
    value_set = set(values)
    if len(value_set) < len(values):
        return False
    nonzero = [g for g in ns.members if not g.is_zero()]
    for v in value_set:
        for g in nonzero:
            if v + g in value_set:
                return False
    return True


def cylinder_cover_bound(
    cfg: Config, alpha: DigitSeq, k: int, ns: NeighbourSet
) -> tuple[int, int]:
    """Bracketing tile counts for the intersection at depth k.

    lower: admissible tiles, every one certified by a witness point.  upper:
    all depth-k tiles of the fundamental tile that meet some admissible tile,
    counted through the unique integer encoding of their digit polynomials.
    """
    tiles = admissible_tiles(cfg, alpha, k)
    lower = 0
    for t in tiles:
        witness_point(cfg, alpha, t)
        lower += 1
    if k == 0:
        return lower, 1
    base = cfg.base
    meeting: set[GaussianInt] = set()
    for t in tiles:
        g = t.value()
        for s in ns.members:
            cand = g + s
            if len(encode_integer(cand, base)) <= k:
                meeting.add(cand)
    return lower, len(meeting)
