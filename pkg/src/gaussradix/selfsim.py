"""Self-similarity classification of attractor-translate intersections.

The intersection translated to its minimal element is a product set of
per-level digit choices.  It is the attractor of a system of maps
x -> b^(-p) x + u exactly when the per-level digit data is strongly
eventually periodic, and the SEP witness spells out the maps explicitly.
Closed-form dimensions and an exact strong-separation test follow from the
emitted digit structure.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Optional

from .arith import QI
from .dimension import (
    Config,
    DimensionReport,
    DimValue,
    HypothesisError,
    admissible_digits,
    require_valid,
    validate,
)
from .radix import (
    Base,
    DigitSeq,
    check_alphabet,
    combine,
    digit_polynomial,
    evaluate,
    has_unique_expansion,
)
from .sep import SepDecomposition, SetSeq, sep_decide_int, sep_decide_sets, sumset


@dataclass(frozen=True)
class SimilarityMap:
    """x -> b^(-p) x + u, optionally tagged with its defining digit tuples."""

    p: int
    u: QI
    a_digits: Optional[tuple] = None
    u_digits: Optional[tuple] = None

    def apply(self, base: Base, x: QI) -> QI:
        return x / base.b**self.p + self.u


@dataclass(frozen=True)
class IFS:
    base: Base
    maps: tuple[SimilarityMap, ...]

    def __post_init__(self) -> None:
        if not self.maps:
            raise ValueError("iterated function system needs at least one map")
        if len({m.p for m in self.maps}) != 1:
            raise ValueError("all maps must share the contraction power")

    @property
    def ratio_power(self) -> int:
        return self.maps[0].p

    def translations(self) -> tuple[QI, ...]:
        return tuple(m.u for m in self.maps)


def _map_sort_key(m: SimilarityMap):
    return (m.p, m.u.den, m.u.num.re, m.u.num.im)


def _two_digit_m(cfg: Config) -> int:
    digs = cfg.digits.digits
    if len(digs) != 2 or digs[0] != 0:
        raise HypothesisError(["digit set must be {0, m} with 2 <= m <= n^2"])
    m = digs[1]
    if m < 2 or m > cfg.n * cfg.n:
        raise HypothesisError([f"digit m = {m} outside [2, n^2]"])
    return m


def minimal_digits(cfg: Config, alpha: DigitSeq) -> DigitSeq:
    """Digitwise minima of the admissible sets D cap (D + alpha_j)."""
    return alpha.map_terms(lambda a: min(admissible_digits(cfg.digits, a)))


def minimal_element(cfg: Config, alpha: DigitSeq) -> QI:
    """Value of the digitwise-minimal admissible sequence for a two-digit set."""
    m = _two_digit_m(cfg)
    check_alphabet(alpha, (-m, 0, m))
    value = evaluate(alpha, cfg.base)
    if not has_unique_expansion(value, cfg.base, cfg.delta):
        raise HypothesisError(
            [f"translation admits more than one expansion over {{0, +-{m}}}"]
        )
    return evaluate(minimal_digits(cfg, alpha), cfg.base)


def _cylinder_sets(cfg: Config, alpha: DigitSeq, beta: DigitSeq) -> SetSeq:
    def shifted(a_j: int, b_j: int) -> frozenset:
        adm = admissible_digits(cfg.digits, a_j)
        if b_j not in adm:
            raise ValueError(f"shift digit {b_j} not admissible for translation digit {a_j}")
        return frozenset(x - b_j for x in adm)

    return combine(alpha, beta, shifted, SetSeq)


def intersection_cylinder_sets(cfg: Config, alpha: DigitSeq, beta: DigitSeq) -> SetSeq:
    """Per-level digit sets (D cap (D + alpha_j)) - beta_j of the shifted intersection.

    Requires unique expansions of the translation: either the sparse regime,
    or a two-digit set whose translation expansion is unique.
    """
    sparse_ok = cfg.regime == "sparse" and not validate(cfg)
    if not sparse_ok:
        m = _two_digit_m(cfg)
        if not has_unique_expansion(evaluate(alpha, cfg.base), cfg.base, cfg.delta):
            raise HypothesisError(
                [f"translation admits more than one expansion over {{0, +-{m}}}"]
            )
    return _cylinder_sets(cfg, alpha, beta)


def _emit_ifs(cfg: Config, p: int, slot_pairs: list[tuple[tuple, tuple]], anchor: QI) -> IFS:
    """Maps b^(-p)(x + sum(a_l b^(p-l) + u_l b^(-l)) - anchor) + anchor.

    slot_pairs lists, per map, the head digit tuple and the increment digit
    tuple; both become the map's digit signature.
    """
    base = cfg.base
    bp = base.b**p
    maps = []
    for avec, uvec in slot_pairs:
        s_val = QI(digit_polynomial(avec, base) * bp + digit_polynomial(uvec, base), 1) / bp
        u_t = (s_val - anchor) / bp + anchor
        maps.append(SimilarityMap(p, u_t, tuple(avec), tuple(uvec)))
    maps.sort(key=_map_sort_key)
    return IFS(base, tuple(maps))


@dataclass(frozen=True)
class TwoDigitClassification:
    sep_seq: DigitSeq
    decomposition: Optional[SepDecomposition]
    ifs: Optional[IFS]
    gamma: QI
    gamma_digits: DigitSeq
    set_seq: SetSeq


def classify_two_digit(cfg: Config, alpha: DigitSeq) -> TwoDigitClassification:
    """SEP test of (m - |alpha_j|) and, on success, the generating maps.

    The free slots are the head positions with value m and the increment
    positions with value m; each contributes a digit choice in {0, m}.
    """
    m = _two_digit_m(cfg)
    check_alphabet(alpha, (-m, 0, m))
    base = cfg.base
    if not has_unique_expansion(evaluate(alpha, base), base, cfg.delta):
        raise HypothesisError(
            [f"translation admits more than one expansion over {{0, +-{m}}}"]
        )
    sep_seq = alpha.map_terms(lambda a: m - abs(a))
    gamma_digits = minimal_digits(cfg, alpha)
    gamma = evaluate(gamma_digits, base)
    set_seq = _cylinder_sets(cfg, alpha, gamma_digits)
    dec = sep_decide_int(sep_seq)
    ifs = None
    if dec is not None:
        y_choices = [(0,) if a == 0 else (0, m) for a in dec.head]
        z_choices = [(0,) if u == 0 else (0, m) for u in dec.increments]
        pairs = [
            (ys, zs) for ys in product(*y_choices) for zs in product(*z_choices)
        ]
        ifs = _emit_ifs(cfg, dec.period, pairs, gamma)
    return TwoDigitClassification(sep_seq, dec, ifs, gamma, gamma_digits, set_seq)


@dataclass(frozen=True)
class GeneralClassification:
    set_seq: SetSeq
    decomposition: Optional[SepDecomposition]
    ifs: Optional[IFS]
    beta: QI
    beta_digits: DigitSeq


def _beta_candidates(cfg: Config, alpha: DigitSeq, exhaustive: bool) -> Iterator[DigitSeq]:
    default = minimal_digits(cfg, alpha)
    yield default
    if not exhaustive:
        return
    q, p = len(alpha.prefix), len(alpha.cycle)
    slots = [admissible_digits(cfg.digits, alpha.at(j)) for j in range(1, q + p + 1)]
    for choice in product(*slots):
        cand = DigitSeq(choice[:q], choice[q:])
        if cand != default:
            yield cand


def classify_general(
    cfg: Config,
    alpha: DigitSeq,
    beta: Optional[DigitSeq] = None,
    exhaustive: bool = False,
) -> GeneralClassification:
    """Set-SEP test of ((D cap (D+alpha_j)) - beta_j) and the generating maps.

    Requires a sparse difference set.  When beta is not supplied the
    digitwise-minimal shift is tried; exhaustive mode additionally tries all
    admissible shifts aligned with alpha's prefix and cycle.
    """
    if cfg.regime != "sparse":
        raise HypothesisError(["general classification requires the sparse regime"])
    require_valid(cfg)
    check_alphabet(alpha, cfg.delta.digits)
    base = cfg.base
    candidates = [beta] if beta is not None else list(_beta_candidates(cfg, alpha, exhaustive))
    first: Optional[GeneralClassification] = None
    for bd in candidates:
        set_seq = _cylinder_sets(cfg, alpha, bd)
        dec = sep_decide_sets(set_seq)
        result = GeneralClassification(set_seq, dec, None, evaluate(bd, base), bd)
        if first is None:
            first = result
        if dec is not None:
            pairs = [
                (avec, uvec)
                for avec in product(*[tuple(sorted(s)) for s in dec.head])
                for uvec in product(*[tuple(sorted(s)) for s in dec.increments])
            ]
            ifs = _emit_ifs(cfg, dec.period, pairs, result.beta)
            return GeneralClassification(set_seq, dec, ifs, result.beta, bd)
    assert first is not None
    return first


def ifs_dimension(
    ifs: IFS, cfg: Config, decomposition: SepDecomposition, kind: str
) -> DimensionReport:
    """Closed-form dimension of the emitted system.

    All maps contract by |b|^(-p), so the similarity dimension solves
    N |b|^(-p s) = 1 with N the map count; the per-slot factors reproduce N
    from the decomposition, which cross-checks the emitted system.  The
    general kind additionally needs every sumset A_l + U_l to decompose
    uniquely, otherwise the images overlap and the value is withheld.
    """
    p = ifs.ratio_power
    n_maps = len(ifs.maps)
    if kind == "two_digit":
        m = _two_digit_m(cfg)
        factors = tuple(
            2 ** ((a + u) // m) for a, u in zip(decomposition.head, decomposition.increments)
        )
    elif kind == "general":
        for a_set, u_set in zip(decomposition.head, decomposition.increments):
            if len(sumset(a_set, u_set)) != len(a_set) * len(u_set):
                raise HypothesisError(
                    [
                        "sumset at a cycle position does not decompose uniquely: "
                        f"|A+U| = {len(sumset(a_set, u_set))} != |A||U| = {len(a_set) * len(u_set)}"
                    ]
                )
        factors = tuple(
            len(a_set) * len(u_set)
            for a_set, u_set in zip(decomposition.head, decomposition.increments)
        )
    else:
        raise ValueError("kind must be two_digit or general")
    expected = 1
    for f in factors:
        expected *= f
    if expected != n_maps:
        raise ValueError("map count disagrees with the decomposition")
    value = DimValue(cfg.n * cfg.n + 1, n_maps * n_maps, p)
    return DimensionReport(value, value, value, value, factors)


def _forbidden_distances(cfg: Config) -> set[int]:
    if cfg.regime == "sparse":
        return {1, 2} if cfg.n >= 5 else {1, 2, 3}
    return {1}


def ssc_check(ifs: IFS, cfg: Config, attractor_digits: SetSeq) -> bool:
    """Exact strong-separation test for a classifier-emitted system.

    Two maps with different head digit tuples have disjoint images because
    same-position digit values are separated beyond the real neighbour
    distances.  With equal head tuples the images are disjoint exactly when
    some increment slot pushes the level sets apart.
    """
    maps = ifs.maps
    if len(maps) == 1:
        return True
    if len({(mp.p, mp.u) for mp in maps}) < len(maps):
        return False
    if any(mp.a_digits is None or mp.u_digits is None for mp in maps):
        raise ValueError("maps lack digit signatures; classify output is required")
    p = ifs.ratio_power
    forbidden = _forbidden_distances(cfg)
    for j in range(1, 2 * p + 1):
        level = sorted(attractor_digits.at(j))
        for x in level:
            for y in level:
                if x != y and abs(x - y) in forbidden:
                    raise HypothesisError(
                        [f"digit values {x}, {y} at level {j} are not separated"]
                    )
    head_sets = [frozenset(attractor_digits.at(j)) for j in range(1, p + 1)]
    for i in range(len(maps)):
        for j in range(i + 1, len(maps)):
            h, g = maps[i], maps[j]
            if h.a_digits != g.a_digits:
                continue
            split = any(
                not (frozenset(x + hu for x in head_sets[ell]) & frozenset(x + gu for x in head_sets[ell]))
                for ell, (hu, gu) in enumerate(zip(h.u_digits, g.u_digits))
            )
            if not split:
                return False
    return True


def translate_ifs(ifs: IFS, a: QI) -> IFS:
    """Conjugated system whose attractor is the old attractor shifted by a."""
    bp = ifs.base.b**ifs.ratio_power
    maps = tuple(
        SimilarityMap(m.p, m.u + a - a / bp, m.a_digits, m.u_digits) for m in ifs.maps
    )
    return IFS(ifs.base, maps)


def ifs_cylinder_words(ifs: IFS, blocks: int) -> set[tuple[int, ...]]:
    """Digit words of length blocks*p of the attractor of the emitted system."""
    if any(mp.a_digits is None or mp.u_digits is None for mp in ifs.maps):
        raise ValueError("maps lack digit signatures")
    words: set[tuple[int, ...]] = set()

    def rec(word: tuple[int, ...], pending: Optional[tuple], depth: int) -> None:
        if depth == 0:
            words.add(word)
            return
        for mp in ifs.maps:
            if pending is None:
                block = mp.a_digits
            else:
                block = tuple(pu + av for pu, av in zip(pending, mp.a_digits))
            rec(word + block, mp.u_digits, depth - 1)

    rec((), None, blocks)
    return words


def admissible_words(seq: SetSeq, depth: int) -> set[tuple[int, ...]]:
    """All depth-long digit words drawn from the per-level sets."""
    out = {()}
    for j in range(1, depth + 1):
        level = sorted(seq.at(j))
        out = {w + (d,) for w in out for d in level}
    return out
