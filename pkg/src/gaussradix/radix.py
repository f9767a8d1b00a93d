"""Radix expansions in base b = -n+i.

Covers the base and digit-set types, eventually periodic digit sequences with
a canonical form, exact evaluation of expansions, the unique encoding of
Gaussian integers over digits {0..n^2}, the digit-string grammar, and the
bounded-remainder search deciding membership of a Q(i) value in the attractor
generated by a digit alphabet.
"""
from __future__ import annotations

import re as _re
from dataclasses import dataclass
from math import isqrt, lcm
from typing import Callable, Iterable, Optional

from .arith import GI_ONE, GaussianInt, QI


@dataclass(frozen=True)
class Base:
    """The complex radix b = -n+i for an integer n >= 2."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError("base parameter n must be at least 2")

    @property
    def b(self) -> GaussianInt:
        return GaussianInt(-self.n, 1)

    @property
    def digit_modulus(self) -> int:
        """Number of residues mod b, equals norm(b) = n^2 + 1."""
        return self.n * self.n + 1


@dataclass(frozen=True)
class DigitSet:
    """A finite set of integer digits attached to a base parameter n.

    Digits are stored sorted and deduplicated.  The loosest admissible range
    is [-2n^2, 2n^2], wide enough for difference alphabets of extended tiles;
    the named constructors enforce the tighter ranges.
    """

    n: int
    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError("digit set needs n >= 2")
        digs = tuple(sorted(set(int(d) for d in self.digits)))
        if not digs:
            raise ValueError("digit set must be nonempty")
        lim = 2 * self.n * self.n
        for d in digs:
            if abs(d) > lim:
                raise ValueError(f"digit {d} outside [-{lim}, {lim}]")
        object.__setattr__(self, "digits", digs)

    @classmethod
    def restricted(cls, n: int, digits: Iterable[int]) -> DigitSet:
        """Digits for a restricted attractor: subset of {0..n^2}."""
        out = cls(n, tuple(digits))
        for d in out.digits:
            if d < 0 or d > n * n:
                raise ValueError(f"restricted digit {d} outside [0, {n * n}]")
        return out

    @classmethod
    def full_tile(cls, n: int) -> DigitSet:
        """The full digit set {0..n^2} of the fundamental tile."""
        return cls(n, tuple(range(n * n + 1)))

    def difference(self) -> DigitSet:
        """The difference alphabet D - D."""
        return DigitSet(self.n, tuple(a - b for a in self.digits for b in self.digits))

    def max_abs(self) -> int:
        return max(abs(d) for d in self.digits)

    def __contains__(self, d: int) -> bool:
        return d in set(self.digits)


@dataclass(frozen=True)
class EventuallyPeriodic:
    """Finite prefix plus infinitely repeated nonempty cycle.

    Canonical form on construction: the cycle is primitive and the prefix is
    minimal (no trailing prefix element can be absorbed into a rotation of
    the cycle), so structural equality coincides with sequence equality.
    """

    prefix: tuple = ()
    cycle: tuple = ()

    @staticmethod
    def _check_elem(e):
        return e

    def __post_init__(self) -> None:
        pre = [self._check_elem(e) for e in self.prefix]
        cyc = [self._check_elem(e) for e in self.cycle]
        if not cyc:
            raise ValueError("cycle must be nonempty")
        p = len(cyc)
        for d in range(1, p + 1):
            if p % d == 0 and cyc == cyc[:d] * (p // d):
                cyc = cyc[:d]
                break
        while pre and pre[-1] == cyc[-1]:
            pre.pop()
            cyc.insert(0, cyc.pop())
        object.__setattr__(self, "prefix", tuple(pre))
        object.__setattr__(self, "cycle", tuple(cyc))

    def at(self, j: int):
        """1-indexed term of the infinite sequence."""
        if j < 1:
            raise IndexError("sequence indices start at 1")
        q = len(self.prefix)
        if j <= q:
            return self.prefix[j - 1]
        return self.cycle[(j - q - 1) % len(self.cycle)]

    def first(self, count: int) -> tuple:
        return tuple(self.at(j) for j in range(1, count + 1))

    def map_terms(self, fn: Callable):
        return type(self)(tuple(fn(e) for e in self.prefix), tuple(fn(e) for e in self.cycle))

    def with_prefix_override(self, head: tuple):
        """Same sequence with its first len(head) terms replaced."""
        k = len(head)
        q = len(self.prefix)
        p = len(self.cycle)
        if k <= q:
            return type(self)(tuple(head) + self.prefix[k:], self.cycle)
        rot = (k - q) % p
        return type(self)(tuple(head), self.cycle[rot:] + self.cycle[:rot])


def combine(a: EventuallyPeriodic, b: EventuallyPeriodic, fn: Callable, cls: type):
    """Elementwise fn over two eventually periodic sequences, as a cls instance."""
    q = max(len(a.prefix), len(b.prefix))
    p = lcm(len(a.cycle), len(b.cycle))
    pre = tuple(fn(a.at(j), b.at(j)) for j in range(1, q + 1))
    cyc = tuple(fn(a.at(j), b.at(j)) for j in range(q + 1, q + p + 1))
    return cls(pre, cyc)


@dataclass(frozen=True)
class DigitSeq(EventuallyPeriodic):
    """Eventually periodic integer digit sequence."""

    @staticmethod
    def _check_elem(e) -> int:
        if not isinstance(e, int):
            raise TypeError(f"digit {e!r} is not an integer")
        return e

    def __str__(self) -> str:
        return format_seq(self)


_SEQ_RE = _re.compile(r"0\.\[(?P<pre>[^\]]*)\]\((?P<cyc>[^\)]*)\)\*")


def _split_ints(body: str) -> tuple[int, ...]:
    if body == "":
        return ()
    return tuple(int(tok) for tok in body.split(","))


def parse_seq(text: str) -> DigitSeq:
    """Parse the digit-string grammar `0.[p1,p2,...](c1,c2,...)*`."""
    t = text.replace("−", "-").replace(" ", "").replace("\t", "")
    m = _SEQ_RE.fullmatch(t)
    if not m:
        raise ValueError(f"malformed digit string: {text!r}")
    try:
        pre = _split_ints(m.group("pre"))
        cyc = _split_ints(m.group("cyc"))
    except ValueError as exc:
        raise ValueError(f"malformed digit string: {text!r}") from exc
    return DigitSeq(pre, cyc)


def format_seq(seq: DigitSeq) -> str:
    pre = ",".join(str(d) for d in seq.prefix)
    cyc = ",".join(str(d) for d in seq.cycle)
    return f"0.[{pre}]({cyc})*"


def check_alphabet(seq: EventuallyPeriodic, digits: Iterable[int]) -> None:
    """Reject sequences with a term outside the declared alphabet."""
    allowed = set(digits)
    for d in seq.prefix + seq.cycle:
        if d not in allowed:
            raise ValueError(f"digit {d} outside alphabet {sorted(allowed)}")


def digit_polynomial(digits: Iterable[int], base: Base) -> GaussianInt:
    """Sum of d_j b^(k-j) over a finite word d_1..d_k (Horner form)."""
    acc = GaussianInt(0, 0)
    for d in digits:
        acc = acc * base.b + d
    return acc


def evaluate(seq: DigitSeq, base: Base) -> QI:
    """Exact value of the fractional expansion sum d_j b^(-j).

    With prefix P of length q and cycle C of length p the value equals
    (P_val (b^p - 1) + C_val) / (b^q (b^p - 1)) where P_val and C_val are the
    digit polynomials of the finite words.
    """
    b = base.b
    q = len(seq.prefix)
    p = len(seq.cycle)
    bp = b**p - GI_ONE
    num = digit_polynomial(seq.prefix, base) * bp + digit_polynomial(seq.cycle, base)
    den = (b**q) * bp
    return QI(num * den.conj(), den.norm())


def encode_integer(g: GaussianInt, base: Base) -> list[int]:
    """Little-endian digits of g over {0..n^2}: g = sum digits[j] * b^j.

    Each step takes the unique residue r in {0..n^2} with b | (g - r); the
    representation exists and is unique for every Gaussian integer.
    """
    n = base.n
    modulus = base.digit_modulus
    x, y = g.re, g.im
    if x == 0 and y == 0:
        return [0]
    digits: list[int] = []
    while x != 0 or y != 0:
        r = (x + n * y) % modulus
        digits.append(r)
        xr = x - r
        x, y = (-n * xr + y) // modulus, (-xr - n * y) // modulus
    return digits


def remainder_bound(digits: Iterable[int], n: int) -> tuple[int, int]:
    """Integer surrogate (K, n4) for the walk bound |r| <= max|d| |b|/(|b|-1).

    A remainder r = num/den passes iff norm(num) * n4 <= K * den^2.  The
    bound over-approximates the true one using isqrt, which only enlarges the
    finite search space and never changes the decision.
    """
    maxd = max(abs(d) for d in digits)
    s = isqrt(n * n + 1)
    return maxd * maxd * (n * n + s + 2) ** 2, n**4


_EXHAUSTED = object()


def find_expansion(z: QI, base: Base, digits: DigitSet) -> Optional[DigitSeq]:
    """Eventually periodic expansion of z over the alphabet, or None.

    Depth-first search on exact remainders r -> b r - d.  Remainders beyond
    the norm bound can never head an infinite digit walk and are pruned; the
    surviving states are finitely many, so the search terminates.  z is a
    value of the alphabet's attractor exactly when some walk from z revisits
    a state, and the walk digits up to that point give the witness.
    """
    K, n4 = remainder_bound(digits.digits, base.n)

    def within(r: QI) -> bool:
        return r.num.norm() * n4 <= K * r.den * r.den

    if not within(z):
        return None
    b = base.b
    digs = digits.digits
    dead: set[QI] = set()
    states: list[QI] = [z]
    iters = [iter(digs)]
    edges: list[int] = []
    on_path: dict[QI, int] = {z: 0}
    while states:
        st = states[-1]
        d = next(iters[-1], _EXHAUSTED)
        if d is _EXHAUSTED:
            dead.add(st)
            del on_path[st]
            states.pop()
            iters.pop()
            if edges:
                edges.pop()
            continue
        nxt = st * b - d
        if nxt in dead or not within(nxt):
            continue
        if nxt in on_path:
            full = edges + [d]
            i = on_path[nxt]
            return DigitSeq(tuple(full[:i]), tuple(full[i:]))
        on_path[nxt] = len(states)
        states.append(nxt)
        iters.append(iter(digs))
        edges.append(d)
    return None


def member(z: QI, base: Base, digits: DigitSet) -> bool:
    """Whether z lies in the attractor generated by (base, digits)."""
    return find_expansion(z, base, digits) is not None


def _expansion_graph(z: QI, base: Base, digits: DigitSet) -> dict[QI, list[tuple[int, QI]]]:
    """All bounded remainders reachable from z with their outgoing digit edges."""
    K, n4 = remainder_bound(digits.digits, base.n)

    def within(r: QI) -> bool:
        return r.num.norm() * n4 <= K * r.den * r.den

    graph: dict[QI, list[tuple[int, QI]]] = {}
    if not within(z):
        return graph
    b = base.b
    todo = [z]
    graph[z] = []
    while todo:
        st = todo.pop()
        out = []
        for d in digits.digits:
            nxt = st * b - d
            if within(nxt):
                out.append((d, nxt))
                if nxt not in graph:
                    graph[nxt] = []
                    todo.append(nxt)
        graph[st] = out
    return graph


def _survivors(graph: dict[QI, list[tuple[int, QI]]]) -> set[QI]:
    """Greatest set of states every one of which keeps a successor in the set."""
    alive = set(graph)
    while True:
        doomed = [s for s in alive if not any(nxt in alive for _, nxt in graph[s])]
        if not doomed:
            return alive
        alive.difference_update(doomed)


def has_unique_expansion(z: QI, base: Base, digits: DigitSet) -> bool:
    """True iff z has exactly one expansion over the alphabet.

    Uniqueness holds exactly when every surviving remainder reachable from z
    keeps a single surviving digit edge.
    """
    graph = _expansion_graph(z, base, digits)
    alive = _survivors(graph)
    if z not in alive:
        return False
    seen = {z}
    todo = [z]
    while todo:
        st = todo.pop()
        out = [nxt for _, nxt in graph[st] if nxt in alive]
        if len(out) != 1:
            return False
        if out[0] not in seen:
            seen.add(out[0])
            todo.append(out[0])
    return True
