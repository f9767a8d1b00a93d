"""Command-line entry point exposing every engine with machine-readable output.

All reports are deterministic: JSON keys sorted, set orderings fixed, exact
values rendered in the reduced textual form.  Exit codes: 0 success, 1
malformed input, 2 hypothesis violation.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .arith import QI, parse_gaussian, parse_qi
from .dimension import (
    Config,
    HypothesisError,
    build_translation,
    dimension,
    m_k,
    validate,
)
from .neighbours import (
    extended_alphabet,
    fundamental_alphabet,
    neighbour_set,
    real_neighbours,
    witness_digits,
)
from .plotting import render_report
from .radix import (
    Base,
    DigitSet,
    encode_integer,
    evaluate,
    find_expansion,
    format_seq,
    parse_seq,
)
from .selfsim import classify_general, classify_two_digit, ifs_dimension, ssc_check
from .sep import parse_set_seq, sep_decide_int, sep_decide_sets
from .tiles import admissible_tiles, cylinder_cover_bound, pairwise_disjoint

COMMANDS = (
    "encode",
    "eval",
    "member",
    "neighbours",
    "dim",
    "build-translation",
    "sep",
    "selfsim",
    "oracle",
    "render",
)


class CliUsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse default exits with 2
        raise CliUsageError(message)


@dataclass(frozen=True)
class RunConfig:
    """A validated command invocation."""

    command: str
    output: str
    options: dict = field(default_factory=dict)


def _parse_digit_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.replace("−", "-").split(","))
    except ValueError as exc:
        raise CliUsageError(f"bad digit list {text!r}") from exc


def _digitset(n: int, text: str) -> DigitSet:
    return DigitSet.restricted(n, _parse_digit_list(text))


def _config(n: int, digits: DigitSet, regime: str) -> Config:
    """Build a Config, inferring the regime when asked to."""
    if regime in ("bounded", "sparse"):
        cfg = Config(n, digits, regime)
        bad = validate(cfg)
        if bad:
            raise HypothesisError(bad)
        return cfg
    bounded = Config(n, digits, "bounded")
    if not validate(bounded):
        return bounded
    sparse = Config(n, digits, "sparse")
    bad = validate(sparse)
    if not bad:
        return sparse
    raise HypothesisError(validate(bounded) + bad)


def _qi_json(v: QI) -> str:
    return str(v)


def _dim_json(report) -> dict:
    out = report.value.as_json()
    out["m_cycle"] = list(report.m_cycle)
    return out


def _cmd_encode(opts: dict) -> dict:
    g = parse_gaussian(opts["value"])
    digits = encode_integer(g, Base(opts["n"]))
    return {"command": "encode", "n": opts["n"], "value": str(g), "digits": digits}


def _cmd_eval(opts: dict) -> dict:
    seq = parse_seq(opts["seq"])
    value = evaluate(seq, Base(opts["n"]))
    return {
        "command": "eval",
        "n": opts["n"],
        "seq": format_seq(seq),
        "value": _qi_json(value),
        "decimal": {"im": f"{float(value.im):.6f}", "re": f"{float(value.re):.6f}"},
    }


def _cmd_member(opts: dict) -> dict:
    base = Base(opts["n"])
    digits = _digitset(opts["n"], opts["digits"])
    z = parse_qi(opts["value"])
    witness = find_expansion(z, base, digits)
    return {
        "command": "member",
        "n": opts["n"],
        "digits": list(digits.digits),
        "value": _qi_json(z),
        "member": witness is not None,
        "witness": format_seq(witness) if witness is not None else None,
    }


def _neighbour_alphabet(n: int, tile: str, digits: Optional[str]) -> DigitSet:
    if tile == "fundamental":
        return fundamental_alphabet(n)
    if tile == "extended":
        return extended_alphabet(n)
    if digits is None:
        raise CliUsageError("--digits is required for --tile custom")
    return _digitset(n, digits).difference()


def _cmd_neighbours(opts: dict) -> dict:
    n = opts["n"]
    alphabet = _neighbour_alphabet(n, opts["tile"], opts.get("digits"))
    ns = neighbour_set(Base(n), alphabet)
    members = [
        {"im": g.im, "re": g.re, "witness": format_seq(witness_digits(ns, g))}
        for g in ns.sorted_members()
    ]
    return {
        "command": "neighbours",
        "n": n,
        "tile": opts["tile"],
        "alphabet": list(alphabet.digits),
        "count": len(members),
        "members": members,
        "real": sorted(real_neighbours(ns)),
    }


def _cmd_dim(opts: dict) -> dict:
    cfg = _config(opts["n"], _digitset(opts["n"], opts["digits"]), opts["regime"])
    alpha = parse_seq(opts["alpha"])
    report = dimension(cfg, alpha)
    out = _dim_json(report)
    out["command"] = "dim"
    out["alpha"] = format_seq(alpha)
    return out


def _cmd_build_translation(opts: dict) -> dict:
    cfg = _config(opts["n"], _digitset(opts["n"], opts["digits"]), opts["regime"])
    try:
        lam = Fraction(opts["lam"])
    except (ValueError, ZeroDivisionError) as exc:
        raise CliUsageError(f"bad level fraction {opts['lam']!r}") from exc
    prefix = _parse_digit_list(opts["prefix"]) if opts.get("prefix") else ()
    beta = build_translation(cfg, prefix, lam)
    report = dimension(cfg, beta)
    return {
        "command": "build-translation",
        "level": str(lam),
        "seq": format_seq(beta),
        "dimension": _dim_json(report),
    }


def _cmd_sep(opts: dict) -> dict:
    if opts["kind"] == "int":
        seq = parse_seq(opts["seq"])
        dec = sep_decide_int(seq)
        head = list(dec.head) if dec else None
        incs = list(dec.increments) if dec else None
    else:
        seq = parse_set_seq(opts["seq"])
        dec = sep_decide_sets(seq)
        head = [sorted(s) for s in dec.head] if dec else None
        incs = [sorted(s) for s in dec.increments] if dec else None
    return {
        "command": "sep",
        "kind": opts["kind"],
        "seq": str(seq),
        "sep": dec is not None,
        "p": dec.period if dec else None,
        "head": head,
        "increments": incs,
    }


def _cmd_selfsim(opts: dict) -> dict:
    n = opts["n"]
    digits = _digitset(n, opts["digits"])
    cfg = _config(n, digits, opts["regime"])
    alpha = parse_seq(opts["alpha"])
    kind = opts["kind"]
    if kind == "auto":
        kind = "two-digit" if len(digits.digits) == 2 and digits.digits[0] == 0 else "general"
    if kind == "two-digit":
        cls = classify_two_digit(cfg, alpha)
        dec = cls.decomposition
        head = list(dec.head) if dec else None
        incs = list(dec.increments) if dec else None
        set_seq = cls.set_seq
        dim_kind = "two_digit"
    else:
        if cfg.regime != "sparse":
            cfg = Config(n, digits, "sparse")
            bad = validate(cfg)
            if bad:
                raise HypothesisError(bad)
        beta = parse_seq(opts["beta"]) if opts.get("beta") else None
        cls = classify_general(cfg, alpha, beta=beta, exhaustive=opts["exhaustive"])
        dec = cls.decomposition
        head = [sorted(s) for s in dec.head] if dec else None
        incs = [sorted(s) for s in dec.increments] if dec else None
        set_seq = cls.set_seq
        dim_kind = "general"
    out = {
        "command": "selfsim",
        "kind": kind,
        "alpha": format_seq(alpha),
        "sep": dec is not None,
        "p": dec.period if dec else None,
        "head": head,
        "increments": incs,
        "ifs": None,
        "dimension": None,
        "ssc": None,
    }
    if cls.ifs is not None:
        out["ifs"] = [{"p": m.p, "u": _qi_json(m.u)} for m in cls.ifs.maps]
        out["ssc"] = ssc_check(cls.ifs, cfg, set_seq)
        try:
            out["dimension"] = _dim_json(ifs_dimension(cls.ifs, cfg, dec, dim_kind))
        except HypothesisError as exc:
            out["dimension"] = {"withheld": exc.violations}
    return out


def _cmd_oracle(opts: dict) -> dict:
    n = opts["n"]
    cfg = _config(n, _digitset(n, opts["digits"]), opts["regime"])
    alpha = parse_seq(opts["alpha"])
    k = opts["depth"]
    ns = neighbour_set(Base(n), fundamental_alphabet(n))
    tiles = admissible_tiles(cfg, alpha, k)
    lower, upper = cylinder_cover_bound(cfg, alpha, k, ns)
    return {
        "command": "oracle",
        "depth": k,
        "m_k": m_k(cfg, alpha, k),
        "admissible_count": len(tiles),
        "witnesses_verified": lower,
        "pairwise_disjoint": pairwise_disjoint(tiles, ns),
        "upper_bound": upper,
    }


def _cmd_render(opts: dict) -> dict:
    n = opts["n"]
    digits = _digitset(n, opts["digits"])
    alpha = parse_seq(opts["alpha"]) if opts.get("alpha") else None
    report = render_report(
        Base(n),
        digits,
        alpha,
        opts["depth"],
        opts["out"],
        figure_path=opts.get("figure"),
        csv_path=opts.get("csv"),
        width=opts["width"],
    )
    report["command"] = "render"
    return report


_HANDLERS = {
    "encode": _cmd_encode,
    "eval": _cmd_eval,
    "member": _cmd_member,
    "neighbours": _cmd_neighbours,
    "dim": _cmd_dim,
    "build-translation": _cmd_build_translation,
    "sep": _cmd_sep,
    "selfsim": _cmd_selfsim,
    "oracle": _cmd_oracle,
    "render": _cmd_render,
}


def dispatch(cfg: RunConfig) -> dict:
    return _HANDLERS[cfg.command](cfg.options)


def _render_text(payload: dict, indent: str = "") -> list[str]:
    lines = []
    for key in sorted(payload):
        value = payload[key]
        if isinstance(value, dict):
            lines.append(f"{indent}{key}:")
            lines.extend(_render_text(value, indent + "  "))
        elif isinstance(value, list):
            if value and isinstance(value[0], dict):
                lines.append(f"{indent}{key}:")
                for item in value:
                    lines.extend(_render_text(item, indent + "  "))
                    lines.append(f"{indent}  -")
            else:
                lines.append(f"{indent}{key}: {', '.join(str(v) for v in value)}")
        else:
            lines.append(f"{indent}{key}: {value}")
    return lines


def emit(payload: dict, output: str) -> str:
    if output == "json":
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return "\n".join(_render_text(payload))


def build_parser() -> _Parser:
    parser = _Parser(prog="gaussradix", description=__doc__)
    common = _Parser(add_help=False)
    common.add_argument("--output", choices=("json", "text"), default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, **kwargs) -> argparse.ArgumentParser:
        return sub.add_parser(name, parents=[common], **kwargs)

    p = add("encode", help="digits of a Gaussian integer over {0..n^2}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--value", required=True)

    p = add("eval", help="exact value of a digit string")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seq", required=True)

    p = add("member", help="attractor membership of an exact value")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--digits", required=True)
    p.add_argument("--value", required=True)

    p = add("neighbours", help="neighbour set of a tile")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tile", choices=("fundamental", "extended", "custom"), default="fundamental")
    p.add_argument("--digits")

    p = add("dim", help="dimension of an intersection")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--digits", required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--regime", choices=("auto", "bounded", "sparse"), default="auto")

    p = add("build-translation", help="translation realising a dimension fraction")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--digits", required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--prefix")
    p.add_argument("--regime", choices=("auto", "bounded", "sparse"), default="auto")

    p = add("sep", help="strongly-eventually-periodic decision")
    p.add_argument("--kind", choices=("int", "set"), required=True)
    p.add_argument("--seq", required=True)

    p = add("selfsim", help="self-similarity classification")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--digits", required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta")
    p.add_argument("--kind", choices=("auto", "two-digit", "general"), default="auto")
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--regime", choices=("auto", "bounded", "sparse"), default="auto")

    p = add("oracle", help="tile counts, witnesses, disjointness at a depth")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--digits", required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--regime", choices=("auto", "bounded", "sparse"), default="auto")

    p = add("render", help="plot depth-k tile points to PPM/PNG/CSV")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--digits", required=True)
    p.add_argument("--alpha")
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--figure")
    p.add_argument("--csv")
    p.add_argument("--width", type=int, default=256)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
        options = {k: v for k, v in vars(ns).items() if k not in ("command", "output")}
        run = RunConfig(ns.command, ns.output, options)
        payload = dispatch(run)
    except HypothesisError as exc:
        print(
            "hypothesis violation:\n  " + "\n  ".join(exc.violations),
            file=sys.stderr,
        )
        return 2
    except (CliUsageError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(emit(payload, run.output))
    return 0


if __name__ == "__main__":
    sys.exit(main())
