"""Neighbour sets of radix-system attractors.

A Gaussian integer s is a neighbour of an attractor A when A and A+s meet.
Equivalently s is a value of some digit walk over the difference alphabet,
which makes the neighbour set computable as the greatest fixed point of a
successor-pruning pass over a finite candidate disk.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .arith import GaussianInt
from .radix import Base, DigitSeq, DigitSet


@dataclass(frozen=True)
class NeighbourSet:
    base: Base
    alphabet: DigitSet
    members: frozenset[GaussianInt]

    def sorted_members(self) -> list[GaussianInt]:
        return sorted(self.members, key=lambda g: (g.re, g.im))


def fundamental_alphabet(n: int) -> DigitSet:
    """Difference alphabet of the fundamental tile: {-n^2 .. n^2}."""
    return DigitSet(n, tuple(range(-n * n, n * n + 1)))


def extended_alphabet(n: int) -> DigitSet:
    """Difference alphabet of the extended tile: {-2n^2 .. 2n^2}."""
    return DigitSet(n, tuple(range(-2 * n * n, 2 * n * n + 1)))


def neighbour_set(base: Base, alphabet: DigitSet) -> NeighbourSet:
    """Exact neighbour set for the attractor whose difference alphabet is given.

    Candidates are the Gaussian integers inside the disk |s| <= max|d| (|b|+1)/n^2
    (an integer over-approximation; over-inclusion is harmless).  States with no
    successor b s + d inside the surviving set are removed until a fixed point;
    every survivor then heads an infinite walk, hence is a genuine neighbour.
    """
    n = base.n
    digs = alphabet.digits
    if 0 not in digs:
        raise ValueError("difference alphabet must contain 0")
    maxd = max(abs(d) for d in digs)
    s_ = isqrt(n * n + 1)
    cap = maxd * maxd * (n * n + 2 * s_ + 4)
    n4 = n**4
    radius = isqrt(cap // n4) + 1
    alive = {
        (x, y)
        for x in range(-radius, radius + 1)
        for y in range(-radius, radius + 1)
        if (x * x + y * y) * n4 <= cap
    }
    while True:
        doomed = [
            (x, y)
            for (x, y) in alive
            if (x, y) != (0, 0)
            and not any((-n * x - y + d, x - n * y) in alive for d in digs)
        ]
        if not doomed:
            break
        alive.difference_update(doomed)
    members = frozenset(GaussianInt(x, y) for x, y in alive)
    return NeighbourSet(base, alphabet, members)


def real_neighbours(ns: NeighbourSet) -> set[int]:
    """Real members of the neighbour set."""
    return {g.re for g in ns.members if g.im == 0}


def reimbound_check(ns: NeighbourSet, n: int) -> bool:
    """Every member satisfies |re - n im| <= 1 (the strict bound < 2 on integers)."""
    return all(abs(g.re - n * g.im) <= 1 for g in ns.members)


def is_neighbour(s: GaussianInt, ns: NeighbourSet) -> bool:
    return s in ns.members


def witness_digits(ns: NeighbourSet, s: GaussianInt) -> DigitSeq:
    """A digit walk over the alphabet whose value is the neighbour s.

    Follows the smallest usable digit at every step; the walk stays inside the
    member set and must revisit a state, which closes the cycle.
    """
    if s not in ns.members:
        raise ValueError(f"{s} is not a neighbour")
    if s.is_zero():
        return DigitSeq((), (0,))
    n = ns.base.n
    alive = {(g.re, g.im) for g in ns.members}
    cur = (s.re, s.im)
    seen: dict[tuple[int, int], int] = {}
    path: list[int] = []
    while cur not in seen:
        seen[cur] = len(path)
        x, y = cur
        for d in ns.alphabet.digits:
            nxt = (-n * x - y - d, x - n * y)
            if nxt in alive:
                path.append(d)
                cur = nxt
                break
        else:
            raise AssertionError("pruned set lost successor closure")
    i = seen[cur]
    return DigitSeq(tuple(path[:i]), tuple(path[i:]))
