"""Command-line interface: verification suites, lattice and tree queries,
word arithmetic, the reflection game, and the HTTP service."""
from __future__ import annotations

import argparse
import json
import sys

from . import autgroup as ag
from . import coxeter as cx
from . import game as gm
from . import lattice as lt
from . import tree as tr
from . import verify as vf
from .padic import DEFAULT_PRECISION, PrecisionExhausted


def _common_flags(suppress: bool) -> argparse.ArgumentParser:
    # subcommand copies suppress their defaults so a flag given before the
    # subcommand is not clobbered when the subparser merges its namespace
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--params", metavar="a,b,c,d,e",
                        default=argparse.SUPPRESS if suppress else None,
                        help="five nonzero family weights (default "
                             "1,1,1,1,1/16)")
    parent.add_argument("--json", action="store_true", dest="as_json",
                        default=argparse.SUPPRESS if suppress else False,
                        help="emit machine-readable JSON")
    return parent


def _build_parser() -> argparse.ArgumentParser:
    common = _common_flags(suppress=True)

    parser = argparse.ArgumentParser(
        prog="tetraflect", parents=[_common_flags(suppress=False)],
        description="Exact toolkit for the tetrahedron reflection group "
                    "in its lattice, rotation, tree and game models.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common],
                       help="run a named verification suite")
    p.add_argument("suite", nargs="?", default="all",
                   choices=("all",) + vf.SUITE_ORDER)
    p.add_argument("--radius", type=int, default=4,
                   help="tree ball radius for the tree suite (default 4)")
    p.add_argument("--precision", type=int, default=DEFAULT_PRECISION,
                   help="3-adic working precision (default "
                        f"{DEFAULT_PRECISION})")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cusps", parents=[common],
                       help="list the 57 polytope cusps with orbit types")
    p.set_defaults(func=cmd_cusps)

    p = sub.add_parser("nef", parents=[common],
                       help="test a class for membership in the nef cone")
    p.add_argument("vector", help="JSON array of 10 exact rationals")
    p.set_defaults(func=cmd_nef)

    p = sub.add_parser("tree", parents=[common],
                       help="queries on the 4-regular tree")
    tree_sub = p.add_subparsers(dest="tree_command", required=True)
    q = tree_sub.add_parser("ball", parents=[common],
                            help="dump a ball around the base vertex")
    q.add_argument("-r", "--radius", type=int, default=2)
    q.add_argument("--precision", type=int, default=DEFAULT_PRECISION)
    q.set_defaults(func=cmd_tree_ball)

    p = sub.add_parser("word", parents=[common],
                       help="group word arithmetic in the normal form")
    word_sub = p.add_subparsers(dest="word_command", required=True)
    q = word_sub.add_parser("mul", parents=[common],
                            help="normal-form product of two words")
    q.add_argument("left", help='word such as "x0 x1 s=(1032)"')
    q.add_argument("right")
    q.set_defaults(func=cmd_word_mul)
    q = word_sub.add_parser("reduce", parents=[common],
                            help="normal form of a possibly unreduced word")
    q.add_argument("text")
    q.set_defaults(func=cmd_word_reduce)
    q = word_sub.add_parser("matrix", parents=[common],
                            help="10x10 representation matrix of a word")
    q.add_argument("text")
    q.set_defaults(func=cmd_word_matrix)

    p = sub.add_parser("game", parents=[common],
                       help="the tetrahedron reflection game, stateless")
    game_sub = p.add_subparsers(dest="game_command", required=True)
    q = game_sub.add_parser("new", parents=[common],
                            help="fresh game state, optionally scrambled")
    q.add_argument("--scramble", type=int, default=0, metavar="N")
    q.add_argument("--seed", type=int, default=None)
    q.set_defaults(func=cmd_game_new)
    q = game_sub.add_parser("move", parents=[common],
                            help="apply move tokens to a state")
    q.add_argument("moves", nargs="+", metavar="MOVE",
                   help='tokens like F0 or "S=(1032)"')
    q.add_argument("--state", default=None,
                   help="game state JSON (default: read stdin)")
    q.set_defaults(func=cmd_game_move)
    q = game_sub.add_parser("solve", parents=[common],
                            help="the unique shortest return sequence")
    q.add_argument("--state", default=None,
                   help="game state JSON (default: read stdin)")
    q.set_defaults(func=cmd_game_solve)

    p = sub.add_parser("serve", parents=[common],
                       help="run the JSON HTTP service")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--static", default=None, metavar="DIR",
                   help="directory of UI assets to serve at /")
    p.add_argument("--persist", default=None, metavar="PATH",
                   help="JSON snapshot file for game state")
    p.set_defaults(func=cmd_serve)
    return parser


def _params(args) -> ag.FamilyParams:
    if args.params is None:
        return ag.DEFAULT_PARAMS
    return ag.FamilyParams.parse(args.params)


def _emit(args, payload: dict, text: str) -> None:
    print(json.dumps(payload) if args.as_json else text)


# --------------------------------------------------------------------------
# verify

def cmd_verify(args) -> int:
    names = vf.SUITE_ORDER if args.suite == "all" else (args.suite,)
    params = _params(args)
    try:
        reports = vf.run_suites(names, params, args.radius, args.precision)
    except PrecisionExhausted:
        # one retry with doubled working precision
        reports = vf.run_suites(names, params, args.radius,
                                2 * args.precision)
    passed = all(r.passed for r in reports)
    if args.as_json:
        print(json.dumps({"passed": passed,
                          "reports": [r.to_json() for r in reports]}))
    else:
        for r in reports:
            for line in r.lines():
                print(line)
            print(f"suite {r.suite}: "
                  f"{'pass' if r.passed else 'FAIL'} ({r.runtime_ms} ms)")
        print(f"overall: {'pass' if passed else 'FAIL'}")
    return 0 if passed else 1


# --------------------------------------------------------------------------
# lattice queries

def cmd_cusps(args) -> int:
    cusps = cx.classify_cusps()
    if args.as_json:
        print(json.dumps({"count": len(cusps),
                          "cusps": [c.to_json() for c in cusps]}))
        return 0
    for c in cusps:
        labels = " ".join(cx.node_label(n) for n in c.nodes)
        print(f"{c.orbit_type}: {labels}")
    print(f"{len(cusps)} cusps")
    return 0


def cmd_nef(args) -> int:
    try:
        entries = json.loads(args.vector)
        v = lt.vector(*entries)
    except (ValueError, TypeError) as exc:
        print(f"error: not a vector of 10 exact rationals: {exc}",
              file=sys.stderr)
        return 2
    nef = ag.is_nef(v, _params(args))
    _emit(args, {"vector": v.to_json(), "nef": nef},
          "nef" if nef else "not nef")
    return 0


# --------------------------------------------------------------------------
# tree

def cmd_tree_ball(args) -> int:
    if args.radius < 0:
        print("error: radius must be nonnegative", file=sys.stderr)
        return 2
    try:
        adjacency = tr.ball_adjacency(args.radius, args.precision)
    except PrecisionExhausted:
        adjacency = tr.ball_adjacency(args.radius, 2 * args.precision)
    vertices = list(adjacency)
    index = {v: i for i, v in enumerate(vertices)}
    if args.as_json:
        print(json.dumps({
            "radius": args.radius,
            "vertices": [v.to_json() for v in vertices],
            "adjacency": [[index[u] for u in adjacency[v] if u in index]
                          for v in vertices],
        }))
        return 0
    for v in vertices:
        row = " ".join(f"({u.a},{u.b},{u.c})" for u in adjacency[v]
                       if u in index)
        print(f"({v.a},{v.b},{v.c}): {row}")
    print(f"{len(vertices)} vertices within distance {args.radius}")
    return 0


# --------------------------------------------------------------------------
# words

def cmd_word_mul(args) -> int:
    product = ag.parse_word(args.left) * ag.parse_word(args.right)
    _emit(args, product.to_json(), ag.format_word(product))
    return 0


def cmd_word_reduce(args) -> int:
    word = ag.parse_word(args.text)
    _emit(args, word.to_json(), ag.format_word(word))
    return 0


def cmd_word_matrix(args) -> int:
    word = ag.parse_word(args.text)
    iso = ag.word_to_isometry(word, _params(args))
    if args.as_json:
        print(json.dumps({"word": word.to_json(),
                          "matrix": iso.to_json()}))
        return 0
    for row in iso.to_json():
        print(" ".join(f"{x:>6}" for x in row))
    return 0


# --------------------------------------------------------------------------
# game

def _read_state(args) -> gm.GameState:
    raw = args.state if args.state is not None else sys.stdin.read()
    try:
        return gm.GameState.from_json(json.loads(raw))
    except (ValueError, TypeError, KeyError) as exc:
        raise ValueError(f"not a game state: {exc}") from exc


def _print_state(args, state: gm.GameState) -> None:
    if args.as_json:
        print(json.dumps(state.to_json()))
    else:
        print(f"word: {ag.format_word(state.word)}")
        print(f"history: {' '.join(state.history) or '(none)'}")
        print(f"solved: {state.is_solved()}")


def cmd_game_new(args) -> int:
    state = gm.scramble(args.scramble, args.seed)
    _print_state(args, state)
    return 0


def cmd_game_move(args) -> int:
    state = _read_state(args)
    try:
        for token in args.moves:
            state = gm.apply_move(state, token)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _print_state(args, state)
    return 0


def cmd_game_solve(args) -> int:
    state = _read_state(args)
    moves = gm.solve(state)
    _emit(args, {"moves": moves}, " ".join(moves) or "(already solved)")
    return 0


# --------------------------------------------------------------------------
# service

def cmd_serve(args) -> int:
    import uvicorn

    from .server import create_app

    app = create_app(static_dir=args.static, persist_path=args.persist)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PrecisionExhausted as exc:
        print(f"error: {exc} (after one retry at doubled precision); "
              "rerun with a larger --precision", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
