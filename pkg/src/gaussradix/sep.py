"""Strongly-eventually-periodic decisions for integer and set sequences.

A sequence is strongly eventually periodic (SEP) when it splits as a head
(b_1..b_p) followed by the infinite repetition of (b_l + c_l) with
nonnegative increments c_l; for sequences of sets the increments are sumset
terms, A_l + U_l.  Any SEP witness forces the tail to be purely periodic with
period p from position p+1 on, so only multiples of the primitive cycle
length up to prefix + cycle length need checking.
"""
from __future__ import annotations

import re as _re
from dataclasses import dataclass
from typing import Optional, Union

from .radix import DigitSeq, EventuallyPeriodic


@dataclass(frozen=True)
class SetSeq(EventuallyPeriodic):
    """Eventually periodic sequence of finite nonempty integer sets."""

    @staticmethod
    def _check_elem(e) -> frozenset:
        out = frozenset(int(x) for x in e)
        if not out:
            raise ValueError("set sequence elements must be nonempty")
        return out

    def __str__(self) -> str:
        return format_set_seq(self)


@dataclass(frozen=True)
class SepDecomposition:
    """Witness (head)(head + increments)~ for an SEP sequence."""

    period: int
    head: tuple
    increments: tuple


def _candidate_periods(seq: EventuallyPeriodic) -> list[int]:
    q, c = len(seq.prefix), len(seq.cycle)
    return list(range(c, q + c + 1, c))


def _tail_periodic(seq: EventuallyPeriodic, p: int) -> bool:
    # beyond the prefix the cycle (a divisor of p) takes over, so only the
    # prefix region needs explicit comparison
    q = len(seq.prefix)
    return all(seq.at(j) == seq.at(j + p) for j in range(p + 1, q + 1))


def sep_decide_int(seq: DigitSeq) -> Optional[SepDecomposition]:
    """SEP decomposition of an integer sequence, or None.

    For each candidate period p: the tail from p+1 must be purely p-periodic
    and every increment a_{l+p} - a_l must be nonnegative.
    """
    for p in _candidate_periods(seq):
        if not _tail_periodic(seq, p):
            continue
        incs = tuple(seq.at(ell + p) - seq.at(ell) for ell in range(1, p + 1))
        if all(c >= 0 for c in incs):
            return SepDecomposition(p, seq.first(p), incs)
    return None


def sumset(a: frozenset, b: frozenset) -> frozenset:
    return frozenset(x + y for x in a for y in b)


def max_additive_set(a: frozenset, b: frozenset) -> Optional[frozenset]:
    """Largest U with a + U = b, or None when no U exists.

    The translates u with a + u inside b form the maximal candidate; a
    solution exists iff that candidate already covers b.
    """
    lo, hi = min(b) - min(a), max(b) - max(a)
    cand = frozenset(u for u in range(lo, hi + 1) if all(x + u in b for x in a))
    if cand and sumset(a, cand) == b:
        return cand
    return None


def sep_decide_sets(seq: SetSeq) -> Optional[SepDecomposition]:
    """SEP decomposition of a set sequence, or None.

    Same search as the integer case with the increment condition replaced by
    the sumset equation A_l + U_l = A_{l+p}; the returned increments are the
    maximal solutions, which exist iff any solution does.
    """
    for p in _candidate_periods(seq):
        if not _tail_periodic(seq, p):
            continue
        incs = []
        for ell in range(1, p + 1):
            u = max_additive_set(seq.at(ell), seq.at(ell + p))
            if u is None:
                break
            incs.append(u)
        else:
            return SepDecomposition(p, seq.first(p), tuple(incs))
    return None


def mono_sep_check(seq: DigitSeq, q: int) -> bool:
    """Sufficient SEP test: a_j <= a_{j+q} for all j, for nonnegative entries.

    Checked over the prefix plus two cycle lengths, enough by periodicity.
    """
    if q < 1:
        raise ValueError("shift must be positive")
    window = len(seq.prefix) + 2 * len(seq.cycle)
    terms = seq.first(window + q)
    if any(t < 0 for t in terms):
        raise ValueError("entries must be nonnegative")
    return all(terms[j] <= terms[j + q] for j in range(window))


def reconstruct(dec: SepDecomposition, cls: type) -> Union[DigitSeq, SetSeq]:
    """Expand (head)(head + increments)~ back into a sequence."""
    if cls is SetSeq:
        tail = tuple(sumset(h, u) for h, u in zip(dec.head, dec.increments))
    else:
        tail = tuple(h + u for h, u in zip(dec.head, dec.increments))
    return cls(dec.head, tail)


_SET_SEQ_RE = _re.compile(r"0\.\[(?P<pre>[^\]]*)\]\((?P<cyc>[^\)]*)\)\*")
_SET_ELEM_RE = _re.compile(r"\{[^{}]*\}")
_SET_LIST_RE = _re.compile(r"\{[^{}]*\}(?:,\{[^{}]*\})*")


def _split_sets(body: str) -> tuple[frozenset, ...]:
    if body == "":
        return ()
    if not _SET_LIST_RE.fullmatch(body):
        raise ValueError(f"malformed set list: {body!r}")
    out = []
    for e in _SET_ELEM_RE.findall(body):
        inner = e[1:-1]
        if inner == "":
            raise ValueError("empty set element")
        out.append(frozenset(int(tok) for tok in inner.split(",")))
    return tuple(out)


def parse_set_seq(text: str) -> SetSeq:
    """Parse `0.[{a,b},...]({c},...)*`."""
    t = text.replace("−", "-").replace(" ", "").replace("\t", "")
    m = _SET_SEQ_RE.fullmatch(t)
    if not m:
        raise ValueError(f"malformed set sequence: {text!r}")
    return SetSeq(_split_sets(m.group("pre")), _split_sets(m.group("cyc")))


def format_set_seq(seq: SetSeq) -> str:
    def fmt(s: frozenset) -> str:
        return "{" + ",".join(str(x) for x in sorted(s)) + "}"

    pre = ",".join(fmt(s) for s in seq.prefix)
    cyc = ",".join(fmt(s) for s in seq.cycle)
    return f"0.[{pre}]({cyc})*"
