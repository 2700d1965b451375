"""Command-line front end.

Exit codes: 0 success, 1 a verification check failed, 2 malformed input,
3 the requested crystal is empty or too large to build.
"""

from __future__ import annotations

import argparse
import json
import sys

from .alphabet import fmt_partition, parse_letter, parse_partition, parse_word
from .characters import expand_in_schur_q, expansion_by_highest_weights, fmt_expansion, NotSchurQDecomposable
from .crystal import (
    CATEGORIES,
    CrystalError,
    CrystalGraph,
    StandardCrystal,
    TensorPower,
    character,
    closure,
    graph_on,
    to_dot,
    to_json,
    to_text,
)
from .factorizations import IncrCrystal, is_valid, parse_factorization, z_of
from .insertion import eg_insert, eg_insert_word, mixed_insert
from .involutions import Perm
from .tableaux import ShTabCrystal
from .verify import SUITES, run_suite
from .words import WordCrystal

EXIT_FAIL, EXIT_PARSE, EXIT_EMPTY = 1, 2, 3


class UsageError(ValueError):
    pass


class EmptyError(ValueError):
    pass


def parse_involution(s: str) -> Perm:
    s = s.strip()
    if s in ("", "id", "()"):
        return Perm.identity()
    if s.startswith("("):
        z = Perm.from_cycles(s)
    else:
        parts = s.split(",") if "," in s else list(s)
        z = Perm.from_oneline([int(p) for p in parts])
    if not z.is_involution():
        raise UsageError(f"{s!r} is not an involution")
    return z


def _need(args, *names):
    for name in names:
        if getattr(args, name, None) is None:
            raise UsageError(f"--{name} is required here")


def make_model(args) -> tuple:
    """``(model, parser for seeds)`` for the kind named by ``args.kind``."""
    kind = args.kind
    _need(args, "n")
    n, cat = args.n, args.cat
    if n < 1:
        raise UsageError("--n must be positive")
    if kind == "standard":
        M = StandardCrystal(n, cat)
        return M, lambda s: parse_letter(s)
    if kind in ("tensor", "words"):
        _need(args, "m")
        M = TensorPower(StandardCrystal(n, cat), args.m) if kind == "tensor" else WordCrystal(n, args.m, cat)
        return M, lambda s: _word_seed(M, s)
    if kind == "incr":
        _need(args, "z")
        M = IncrCrystal(parse_involution(args.z), n, cat)
        return M, lambda s: _incr_seed(M, s)
    if kind == "shtab":
        _need(args, "shape")
        M = ShTabCrystal(parse_partition(args.shape), n, cat)
        return M, M.parse
    raise UsageError(f"unknown kind {kind!r}")


def _word_seed(M, s):
    w = parse_word(s)
    if len(w) != M.m:
        raise UsageError(f"seed {s!r} must have length {M.m}")
    return w


def _incr_seed(M, s):
    a = parse_factorization(s)
    if len(a) != M.n or not is_valid(a, M.z):
        raise UsageError(f"{s!r} is not a primed increasing factorization of {M.z.fmt()} with {M.n} factors")
    return a


def build_graph(args) -> CrystalGraph:
    M, seed_parser = make_model(args)
    if args.seed:
        seeds = [seed_parser(s) for s in args.seed]
        verts = closure(M, seeds, cap=args.max_vertices)
    else:
        verts = M.elements()
        if len(verts) > args.max_vertices:
            raise EmptyError(f"{len(verts)} vertices exceed --max-vertices {args.max_vertices}")
    if not verts:
        raise EmptyError("the requested crystal is empty")
    return graph_on(M, verts)


def cmd_build(args) -> int:
    G = build_graph(args)
    fmt = {"dot": to_dot, "json": to_json, "text": to_text}[args.format]
    sys.stdout.write(fmt(G))
    return 0


def _source_graph(args) -> CrystalGraph:
    if args.shtab:
        args.kind, args.shape = "shtab", args.shtab
    elif args.z is not None:
        args.kind = "incr"
    elif args.m is not None:
        args.kind = "words"
    else:
        args.kind = "standard"
    return build_graph(args)


def cmd_character(args) -> int:
    G = _source_graph(args)
    ch = character(G)
    if args.format == "json":
        print(json.dumps(ch.to_json(), sort_keys=True))
    else:
        print(ch.fmt())
    return 0


def cmd_expand(args) -> int:
    G = _source_graph(args)
    if G.model.category != "qplus":
        raise UsageError("expansion needs --cat qplus")
    exp = expand_in_schur_q(character(G))
    if args.check:
        other = expansion_by_highest_weights(G)
        if other != exp:
            print(f"FAIL expansion peeling={exp} highest-weights={other}")
            return EXIT_FAIL
    if args.format == "json":
        print(json.dumps({fmt_partition(k): v for k, v in exp.items()}, sort_keys=True))
    else:
        print(fmt_expansion(exp))
    return 0


def cmd_insert(args) -> int:
    given = [x for x in (args.factorization, args.word, args.mixed) if x is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of --factorization, --word, --mixed")
    if args.factorization is not None:
        a = parse_factorization(args.factorization)
        if not is_valid(a, z_of(a)):
            raise UsageError(f"{args.factorization!r} is not a primed increasing factorization")
        P, Q = eg_insert(a)
        labels = ("P_EG", "Q_EG")
    elif args.word is not None:
        w = parse_word(args.word)
        if not is_valid(tuple((x,) for x in w), z_of(tuple((x,) for x in w))):
            raise UsageError(f"{args.word!r} is not a primed involution word")
        P, Q = eg_insert_word(w)
        labels = ("P_EG", "Q_EG")
    else:
        P, Q = mixed_insert(parse_word(args.mixed), args.n)
        labels = ("P_HM", "Q_HM")
    if args.format == "json":
        print(json.dumps({labels[0]: P.to_json(), labels[1]: Q.to_json()}, sort_keys=True))
    else:
        print(f"{labels[0]} = {P.fmt()}")
        print(f"{labels[1]} = {Q.fmt()}")
    return 0


def cmd_verify(args) -> int:
    kw = {}
    if args.suite in ("tensor-assoc", "braid", "highest-weight", "insertion-commute", "characters") and args.n:
        kw["n_max"] = args.n
    if args.suite in ("tensor-assoc", "braid", "insertion-commute") and args.m is not None:
        kw["m_max"] = args.m
    if args.suite in ("highest-weight", "characters") and args.shape:
        kw["outer"] = parse_partition(args.shape)
    if args.suite in ("insertion-commute", "stanley") and args.N:
        kw["N"] = args.N
    if args.suite in ("axioms", "characters") and args.small:
        kw["small"] = True
    checks = run_suite(args.suite, **kw)
    for c in checks:
        print(c.line())
    failed = sum(not c.ok for c in checks)
    print(f"# {args.suite}: {len(checks) - failed} passed, {failed} failed")
    return EXIT_FAIL if failed else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qcrystals", description="Queer and q+ crystals: build, inspect, verify.")
    sub = p.add_subparsers(dest="command", required=True)

    def model_flags(q, kind=True):
        if kind:
            q.add_argument("kind", choices=["standard", "tensor", "words", "incr", "shtab"])
        q.add_argument("--n", type=int, help="rank")
        q.add_argument("--m", type=int, help="number of tensor factors / word length")
        q.add_argument("--z", help="involution, cycles like '(1,3)(2,4)' or one-line like 3412")
        q.add_argument("--cat", choices=CATEGORIES, default="qplus")
        q.add_argument("--seed", action="append", help="restrict to the component(s) of these elements")
        q.add_argument("--max-vertices", type=int, default=200000)

    b = sub.add_parser("build", help="materialize a crystal graph")
    model_flags(b)
    b.add_argument("--shape", help="strict partition, e.g. 2,1")
    b.add_argument("--format", choices=["dot", "json", "text"], default="text")
    b.set_defaults(func=cmd_build)

    for name, func, helptext in (("character", cmd_character, "character polynomial"),
                                 ("expand", cmd_expand, "Schur Q expansion of the character")):
        c = sub.add_parser(name, help=helptext)
        model_flags(c, kind=False)
        c.add_argument("--shtab", help="shifted tableaux of this shape")
        c.add_argument("--format", choices=["text", "json"], default="text")
        if name == "expand":
            c.add_argument("--check", action="store_true", help="cross-check against highest-weight counts")
        c.set_defaults(func=func)

    i = sub.add_parser("insert", help="orthogonal Edelman-Greene or mixed insertion")
    i.add_argument("--factorization", help="e.g. \"4 | 1' 3 5 | | 4' | | 2\"")
    i.add_argument("--word", help="primed involution word inserted letter by letter")
    i.add_argument("--mixed", help="primed word for mixed insertion")
    i.add_argument("--n", type=int, help="rank for --mixed (default: largest letter)")
    i.add_argument("--format", choices=["text", "json"], default="text")
    i.set_defaults(func=cmd_insert)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=SUITES)
    v.add_argument("--n", type=int, help="largest rank")
    v.add_argument("--m", type=int, help="largest word length / tensor power")
    v.add_argument("--N", type=int, help="involutions of [N]")
    v.add_argument("--shape", help="largest shape, e.g. 4,3,2,1")
    v.add_argument("--small", action="store_true", help="reduced corpus")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except EmptyError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_EMPTY
    except NotSchurQDecomposable as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_FAIL
    except (UsageError, ValueError, KeyError) as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_PARSE
    except CrystalError as ex:
        print(f"internal invariant violated: {ex}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())


__all__ = ["main", "build_parser", "parse_involution"]
