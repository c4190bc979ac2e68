"""Command-line front end.

One subcommand per computation; output is byte-deterministic text or compact
JSON (``--format``), errors become machine-readable JSON objects on stderr
with exit code 1, usage problems exit 2.  The GARSIDE_BUDGET environment
variable caps all enumerations.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import absorb, calgraph, freeprod, growth
from .coxeter import parse_system
from .errors import GarsideError
from .garside import lattice, normalize
from .parabolic import factor_conjugator, ribbon


def _atoms(text: str) -> frozenset[int]:
    text = text.strip()
    if not text:
        return frozenset()
    return frozenset(int(tok) for tok in text.replace(",", " ").split())


def _emit(payload: dict, text: str, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n")
    else:
        sys.stdout.write(text)


def _word_text(word) -> str:
    return " ".join(map(str, word)) if word else "e"


# -- subcommand handlers -----------------------------------------------------


def _cmd_nf(args) -> None:
    system = parse_system(args.system)
    g = normalize(system, args.word)
    _emit(g.to_json(), g.nf_text() + "\n", args.format)


def _cmd_lattice(args) -> None:
    system = parse_system(args.system)
    a = normalize(system, args.a)
    b = normalize(system, args.b)
    result = lattice(a, b, args.op, args.side)
    word = result.as_simple().word
    _emit(
        {"op": args.op, "side": args.side, "result": list(word)},
        _word_text(word) + "\n",
        args.format,
    )


def _cmd_ribbon(args) -> None:
    system = parse_system(args.system)
    r = ribbon(system, _atoms(args.x), args.t, args.side)
    text = (
        f"value: {_word_text(r.value.as_simple().word)}\n"
        f"target: {' '.join(map(str, sorted(r.target))) or '-'}\n"
    )
    _emit(r.to_json(), text, args.format)


def _cmd_factor_conj(args) -> None:
    system = parse_system(args.system)
    u = normalize(system, args.u)
    x = normalize(system, args.x)
    alpha, chain = factor_conjugator(u, x)
    conjugate = x.inv() * u * x
    payload = {
        "alpha": alpha.to_json(),
        "chain": chain.to_json(),
        "conjugate": conjugate.to_json(),
    }
    lines = [f"alpha: {alpha.nf_text()}"]
    for f in chain.factors:
        lines.append(
            f"ribbon: t={f.atom} {sorted(f.source)} -> {sorted(f.target)}"
            f" value {f.value.nf_text()}"
        )
    lines.append(f"conjugate: {conjugate.nf_text()}")
    _emit(payload, "\n".join(lines) + "\n", args.format)


def _cmd_absorb(args) -> None:
    system = parse_system(args.system)
    mode = args.decompose
    if mode == "delta^k":
        if args.x is not None:
            dec = absorb.decompose_sub_delta_power(system, _atoms(args.x), args.k)
        else:
            dec = absorb.decompose_delta_power(system, args.k)
    elif mode == "parabolic":
        dec = absorb.decompose_parabolic(normalize(system, args.g), _atoms(args.x))
    elif mode == "conjugator":
        dec = absorb.decompose_positive_conjugator(
            normalize(system, args.u), normalize(system, args.g)
        )
    else:  # normalizer
        dec = absorb.decompose_normalizer(normalize(system, args.g), _atoms(args.x))
    lines = [f"target: {dec.target.nf_text()}", f"factors: {len(dec.factors)} (budget {dec.budget})"]
    for f, c in zip(dec.factors, dec.certificates):
        lines.append(f"  {f.nf_text()}  absorbed-by  {c.absorber.nf_text()}")
    _emit(dec.to_json(), "\n".join(lines) + "\n", args.format)


def _cmd_cal_ball(args) -> None:
    system = parse_system(args.system)
    pool = []
    if args.pool:
        for chunk in args.pool.split(";"):
            chunk = chunk.strip()
            if chunk:
                pool.append(
                    calgraph.PoolEntry.from_element(
                        normalize(system, chunk), search_radius=args.pool_radius
                    )
                )
    b = calgraph.ball(calgraph.base_vertex(system), args.radius, tuple(pool))
    sys.stdout.write(calgraph.export_ball(b, args.format))


def _cmd_growth(args) -> None:
    system = parse_system(args.system)
    report = growth.growth_report(system, args.horizon, args.mode)
    if args.plot:
        growth.render_growth_figure(report, args.plot)
    _emit(report.to_json(), report.to_text(), args.format)


def _cmd_freeprod(args) -> None:
    system = parse_system(args.system)
    params = dict(L=args.L, R=args.R, E=args.E)
    if args.g is not None:
        g = normalize(system, args.g)
        if args.x is not None:
            targets = [_atoms(args.x)]
        else:
            targets = [frozenset(set(system.atoms) - {i}) for i in sorted(system.atoms)]
        certs = [freeprod.verify_free_product(system, X, g, **params) for X in targets]
        payload = {"certificates": [c.to_json() for c in certs]}
        lines = []
        for c in certs:
            lines.append(f"X={sorted(c.X)}: verified={str(c.verified).lower()}")
            if c.witness is not None:
                lines.append(f"  witness: {json.dumps(c.witness_json(), sort_keys=True)}")
        _emit(payload, "\n".join(lines) + "\n", args.format)
        return
    g = freeprod.search_candidate(
        system, len_bound=args.len_bound, max_candidates=args.max_candidates, **params
    )
    payload = {
        "candidate": g.to_json() if g is not None else None,
        "params": {"L": args.L, "R": args.R, "E": args.E, "len_bound": args.len_bound},
    }
    text = ("candidate: " + g.nf_text() if g is not None else "candidate: none found") + "\n"
    _emit(payload, text, args.format)


def _cmd_constants(args) -> None:
    c = freeprod.CONSTANTS
    payload = c.to_json()
    lines = [
        f"δ={c.delta}, N(κ)=4κ+319, F(κ)=8κ+638",
        f"garside-length-bound: {c.garside_length_bound}",
        f"parabolic-orbit-bound: {c.orbit_bound_parabolic}",
        f"normalizer-orbit-bound: {c.orbit_bound_normalizer}",
    ]
    if args.kappa is not None:
        payload["kappa"] = args.kappa
        payload["N_of_kappa"] = c.wpd_exponent(args.kappa)
        payload["F_of_kappa"] = c.wpd_count(args.kappa)
        lines.append(f"N({args.kappa})={c.wpd_exponent(args.kappa)}")
        lines.append(f"F({args.kappa})={c.wpd_count(args.kappa)}")
    _emit(payload, "\n".join(lines) + "\n", args.format)


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="garside",
        description="Garside-theory computations for spherical-type Artin-Tits groups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(handler=handler)
        p.add_argument("--format", choices=("text", "json"), default="text")
        return p

    p = add("nf", _cmd_nf, help="left normal form of a signed atom word")
    p.add_argument("system")
    p.add_argument("word")

    p = add("lattice", _cmd_lattice, help="gcd/lcm of two simple elements")
    p.add_argument("system")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--op", choices=("meet", "join"), required=True)
    p.add_argument("--side", choices=("prefix", "suffix"), required=True)

    p = add("ribbon", _cmd_ribbon, help="elementary ribbon and its target")
    p.add_argument("system")
    p.add_argument("--x", required=True, help="comma-separated atom set (may be empty)")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--side", choices=("left", "right"), default="right")

    p = add("factor-conj", _cmd_factor_conj, help="alpha/ribbon-chain factorization")
    p.add_argument("system")
    p.add_argument("--u", required=True, help="positive word with full support in X")
    p.add_argument("--x", required=True, help="positive conjugator word")

    p = add("absorb", _cmd_absorb, help="absorbable-element decompositions")
    p.add_argument("system")
    p.add_argument(
        "--decompose",
        choices=("delta^k", "parabolic", "conjugator", "normalizer"),
        required=True,
    )
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--x", help="atom set (sub-delta/parabolic/normalizer)")
    p.add_argument("--g", help="element word (parabolic/conjugator/normalizer)")
    p.add_argument("--u", help="supported positive word (conjugator)")

    p = sub.add_parser("cal-ball", help="ball in the additional length graph")
    p.set_defaults(handler=_cmd_cal_ball)
    p.add_argument("system")
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--pool", default="", help="semicolon-separated absorbable words")
    p.add_argument("--pool-radius", type=int, default=2)
    p.add_argument("--format", choices=("dot", "json"), default="json")

    p = add("growth", _cmd_growth, help="ball counts and spectral growth rate")
    p.add_argument("system")
    p.add_argument("--horizon", type=int, default=6)
    p.add_argument("--mode", choices=("monoid", "group"), default="group")
    p.add_argument("--plot", help="render the report figure to this file")

    p = add("freeprod", _cmd_freeprod, help="bounded free-product certification")
    p.add_argument("system")
    p.add_argument("--x", help="parabolic atom set (default: all maximal ones)")
    p.add_argument("--g", help="candidate word (omit to search)")
    p.add_argument("--L", type=int, default=4)
    p.add_argument("--R", type=int, default=2)
    p.add_argument("--E", type=int, default=3)
    p.add_argument("--len-bound", type=int, default=12)
    p.add_argument("--max-candidates", type=int, default=500)

    p = add("constants", _cmd_constants, help="constants of the hyperbolic action")
    p.add_argument("--kappa", type=float)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.handler(args)
    except GarsideError as err:
        sys.stderr.write(
            json.dumps({"error": err.payload()}, sort_keys=True, separators=(",", ":")) + "\n"
        )
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
