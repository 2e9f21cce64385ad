"""Command-line front end.

Exit codes: 0 pass, 1 a mismatch or failed experiment, 2 bad invocation or
input, 3 an enumeration cap was exceeded.  Reports are JSON with sorted keys
and no timestamps, so identical invocations print identical bytes.

Polynomials are integer expressions in x, e.g. ``"2x^2 + 3"`` (see
:mod:`locdec.poly` for the grammar).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import zoo
from .engine import lift, run_all, within_budget
from .errors import LocdecError, SpaceTooLarge, UniverseTooLarge
from .graph import graph_to_json, load_graph
from .harness import ALIASES, EXPERIMENTS, run_lemma
from .languages import LANGUAGE_NAMES, get_language
from .languages import (
    agtg_npld_verifier,
    agtg_pi1_verifier,
    altg_verifier_with_n,
    colorability_verifier,
    coloring_verifier,
    iter_minus_verifier,
    iter_pi1_verifier,
    palindrome,
    path_L_endpoint_verifier,
    single_node_verifier,
)
from .languages.iter import iter_build, iter_membership
from .poly import PolyBound
from .semantics import ClassSpec, agrees, classify
from .transforms import pi1lp_to_ld, pi1lp_to_pi1plocal
from .turing import BUNDLED, parse_tm, tm_halt_time

DEFAULT_CAP = 10 ** 7

SEMANTICS = ["ld", "pld", "lp", "lpstar", "sigma1-local", "sigma1-plocal", "sigma1-lp",
             "pi1-local", "pi1-plocal", "pi1-plocal-n", "pi1-lp"]

BUNDLED_VERIFIERS = {
    "agtg-pi1": lambda k: agtg_pi1_verifier(),
    "agtg-npld": lambda k: agtg_npld_verifier(),
    "altg-n": lambda k: altg_verifier_with_n(),
    "coloring": coloring_verifier,
    "colorability": colorability_verifier,
    "path-L": lambda k: path_L_endpoint_verifier(palindrome),
    "iter-minus": lambda k: iter_minus_verifier(),
    "iter-pi1": lambda k: iter_pi1_verifier(),
    "single-node": lambda k: single_node_verifier(palindrome),
    "accept-all": lambda k: zoo.constant(True),
    "reject-all": lambda k: zoo.constant(False),
    "odd-id": lambda k: zoo.id_parity(),
    "neighbor-bit": lambda k: zoo.neighbor_bit_rejector(),
    "exponential": lambda k: zoo.exponential(),
}


class UsageError(Exception):
    pass


def default_cap() -> int:
    raw = os.environ.get("LOCDEC_CAP")
    if raw is None:
        return DEFAULT_CAP
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"LOCDEC_CAP must be an integer, got {raw!r}") from None


def _poly(text):
    if text is None:
        return None
    try:
        return PolyBound.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def make_spec(semantics: str, qbound=None, tbound=None, explore=None) -> ClassSpec:
    if semantics == "ld":
        return ClassSpec.ld()
    if semantics == "pld":
        return ClassSpec.pld(tbound)
    if semantics == "lp":
        return ClassSpec.lp(tbound)
    if semantics == "lpstar":
        return ClassSpec.lpstar(tbound)
    family, _, flavor = semantics.partition("-")
    knows_n = flavor == "plocal-n"
    flavor = "plocal" if knows_n else flavor
    if flavor == "local":
        if explore is None:
            raise UsageError(f"{semantics} needs --explore (a bound in n)")
        return ClassSpec("Sigma1" if family == "sigma1" else "Pi1", "local", explore_bound=explore)
    if qbound is None:
        raise UsageError(f"{semantics} needs --qbound")
    return ClassSpec("Sigma1" if family == "sigma1" else "Pi1", flavor, qbound, tbound, knows_n)


# ------------------------------------------------------- verifier descriptors


def verifier_from_descriptor(desc: dict):
    """Rebuild a verifier from its JSON descriptor.

    Kinds: ``bundled`` (name, k), ``generated`` (feature, predicate, param,
    radius), ``lift`` (base, radius) and ``transform`` (op, base, qbound, h).
    """
    kind = desc.get("kind")
    if kind == "bundled":
        try:
            return BUNDLED_VERIFIERS[desc["name"]](int(desc.get("k", 3)))
        except KeyError:
            raise UsageError(f"unknown bundled verifier {desc.get('name')!r}") from None
    if kind == "generated":
        return zoo.generated(desc["feature"], desc["predicate"], int(desc["param"]),
                             int(desc["radius"]))
    if kind == "lift":
        return lift(verifier_from_descriptor(desc["base"]), int(desc["radius"]))
    if kind == "transform":
        base = verifier_from_descriptor(desc["base"])
        Q = _poly(desc["qbound"])
        if desc["op"] == "pi1lp-to-ld":
            return pi1lp_to_ld(base, Q)
        if desc["op"] == "pi1lp-to-pi1plocal":
            return pi1lp_to_pi1plocal(base, Q, _poly(desc["h"]))[0]
        raise UsageError(f"unknown transform {desc['op']!r}")
    raise UsageError(f"unknown verifier descriptor kind {kind!r}")


def transform_descriptor(op: str, base: dict, r: int, qbound: str, h: str | None = None) -> dict:
    lifted = verifier_from_descriptor(base)
    if r != lifted.radius:
        base = {"kind": "lift", "base": base, "radius": r}
    desc = {"kind": "transform", "op": op, "base": base, "qbound": str(_poly(qbound))}
    if op == "pi1lp-to-pi1plocal":
        if h is None:
            raise UsageError("pi1lp-to-pi1plocal needs --h")
        desc["h"] = str(_poly(h))
        _, R = pi1lp_to_pi1plocal(verifier_from_descriptor(base), _poly(qbound), _poly(h))
        desc["R"] = str(R)
    elif op != "pi1lp-to-ld":
        raise UsageError(f"unknown transform {op!r}")
    desc["radius"] = verifier_from_descriptor(desc).radius
    return desc


# ----------------------------------------------------------------- commands


def _emit(doc, out=None):
    text = json.dumps(doc, indent=2, sort_keys=True, default=str) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_eval(args) -> int:
    try:
        cfg = load_graph(args.graph)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot load graph {args.graph}: {exc}") from None
    lang = get_language(args.lang, args.k)
    qbound, tbound, explore = _poly(args.qbound), _poly(args.tbound), _poly(args.explore)
    if args.verifier:
        try:
            with open(args.verifier) as fh:
                desc = json.load(fh)
        except (OSError, ValueError) as exc:
            raise UsageError(f"cannot load verifier {args.verifier}: {exc}") from None
        verifier = verifier_from_descriptor(desc)
        if qbound is None and "R" in desc:
            qbound = _poly(desc["R"])
    else:
        if args.semantics not in lang.verifiers:
            raise UsageError(f"{args.lang} has no bundled verifier for {args.semantics}; "
                             f"available: {', '.join(sorted(lang.verifiers))}")
        verifier, default_spec = lang.verifiers[args.semantics]
        qbound = qbound or default_spec.cert_bound
    spec = make_spec(args.semantics, qbound, tbound, explore)
    outcome, result = classify(verifier, cfg, spec, args.slack, args.cap)
    member = bool(lang.membership(cfg))
    ok = agrees(outcome, member)
    report = {
        "config": graph_to_json(cfg),
        "language": lang.name,
        "verifier": verifier.name,
        "semantics": spec.describe(),
        "member": member,
        "outcome": outcome,
        "agrees": ok,
        "result": result.to_json(),
    }
    if tbound is not None and spec.time_kind is not None:
        certs = ("",) * cfg.n if spec.takes_certificates else None
        br = within_budget(run_all(verifier, cfg, None, certs), tbound, spec.time_kind)
        report["budget"] = br.to_json()
    _emit(report, args.out)
    return 0 if ok else 1


def _param_value(text):
    try:
        return json.loads(text)
    except ValueError:
        return text


def cmd_witness(args) -> int:
    params = {}
    if args.r is not None:
        params["r"] = args.r
    for item in args.param or []:
        key, sep, value = item.partition("=")
        if not sep:
            raise UsageError(f"--param expects key=value, got {item!r}")
        params[key] = _param_value(value)
    try:
        report = run_lemma(args.lemma, params)
    except TypeError as exc:
        raise UsageError(f"bad parameters for {args.lemma}: {exc}") from None
    _emit(report.to_json(), args.out)
    return 0 if report.passed else 1


def cmd_transform(args) -> int:
    if args.base_file:
        with open(args.base_file) as fh:
            base = json.load(fh)
    else:
        base = {"kind": "bundled", "name": args.base, "k": args.k}
    desc = transform_descriptor(args.op, base, args.r, args.qbound, args.h)
    _emit(desc, args.out)
    return 0


def _load_tm(name_or_path):
    if name_or_path in BUNDLED:
        return BUNDLED[name_or_path]
    try:
        with open(name_or_path) as fh:
            return parse_tm(fh.read())
    except OSError:
        raise UsageError(f"{name_or_path!r} is neither a bundled machine nor a readable file") \
            from None


def cmd_iter(args) -> int:
    tm = _load_tm(args.tm)
    cfg = iter_build(tm, args.a, args.b, args.cap_steps)
    doc = {
        "machine": tm.name,
        "a": args.a,
        "b": args.b,
        "halt_times": [tm_halt_time(tm, args.a, args.cap_steps),
                       tm_halt_time(tm, args.b, args.cap_steps)],
        "n": cfg.n,
        "iter_minus_member": iter_membership(cfg, tm, strict=False),
        "iter_member": iter_membership(cfg, tm, strict=True),
        "graph": graph_to_json(cfg),
    }
    _emit(doc, args.out)
    return 0


def cmd_list(args) -> int:
    if args.what == "langs":
        doc = {name: get_language(name).description for name in LANGUAGE_NAMES}
    elif args.what == "experiments":
        doc = {"experiments": sorted(EXPERIMENTS), "aliases": dict(sorted(ALIASES.items()))}
    elif args.what == "verifiers":
        doc = sorted(BUNDLED_VERIFIERS)
    elif args.what == "tms":
        doc = sorted(BUNDLED)
    else:
        doc = SEMANTICS
    _emit(doc)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="locdec", description="Local decision semantics, certificates and separation witnesses.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="classify one graph under a class semantics")
    p.add_argument("--lang", required=True, choices=LANGUAGE_NAMES)
    p.add_argument("--graph", required=True, help="graph JSON file")
    p.add_argument("--semantics", required=True, choices=SEMANTICS)
    p.add_argument("--qbound", help="certificate bound polynomial")
    p.add_argument("--tbound", help="time bound polynomial (measured, not enforced)")
    p.add_argument("--explore", help="exploration bound in n for the unbounded flavors")
    p.add_argument("--slack", type=int, default=1, help="ids range over 1..n+slack")
    p.add_argument("--k", type=int, default=3, help="number of colors where relevant")
    p.add_argument("--verifier", help="verifier descriptor JSON (e.g. from 'transform')")
    p.add_argument("--cap", type=int, default=None, help="enumeration cap (default LOCDEC_CAP or 1e7)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("witness", help="run a registered experiment")
    p.add_argument("--lemma", required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--param", action="append", help="extra parameter key=value (JSON values)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("transform", help="emit a transformed verifier descriptor")
    p.add_argument("--op", required=True, choices=["pi1lp-to-ld", "pi1lp-to-pi1plocal"])
    p.add_argument("--base", default="agtg-pi1", choices=sorted(BUNDLED_VERIFIERS))
    p.add_argument("--base-file", help="descriptor JSON of the base verifier")
    p.add_argument("--r", type=int, required=True, help="radius of the base verifier")
    p.add_argument("--qbound", required=True)
    p.add_argument("--h", help="label-size polynomial (screening transform only)")
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--out")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("iter", help="build an ITER instance from a machine and two inputs")
    p.add_argument("--tm", required=True, help="bundled machine name or text-format file")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--cap-steps", type=int, default=10_000)
    p.add_argument("--out")
    p.set_defaults(func=cmd_iter)

    p = sub.add_parser("list", help="list registered names")
    p.add_argument("what", choices=["langs", "experiments", "verifiers", "tms", "semantics"])
    p.set_defaults(func=cmd_list)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "cap", None) is None and args.command == "eval":
            args.cap = default_cap()
        return args.func(args)
    except (SpaceTooLarge, UniverseTooLarge) as exc:
        print(f"locdec: cap exceeded: {exc}", file=sys.stderr)
        return 3
    except (UsageError, LocdecError, KeyError, ValueError) as exc:
        # KeyError's str() wraps the message in quotes
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"locdec: {msg}", file=sys.stderr)
        return 2
