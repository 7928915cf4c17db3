"""``gdcalc``: compute invariants of Gauss-code files and run the property suites.

Exit codes: 0 success, 2 parse or usage error, 3 precondition violation,
4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

from . import corpus, moves, statesums, verify
from .gauss import GaussCodeError, GaussDiagram, PreconditionError, parse_gauss_code, serialize
from .polynomial import IntPolynomial
from .trace import State, trace

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_VERIFY = 0, 2, 3, 4

# CLI name -> (request kind for asc, request kind for desc); None means mode-free
INVARIANTS = {
    "conway": ("nablaA", "nablaD"),
    "nabla-a": ("nablaA", None),
    "nabla-d": ("nablaD", None),
    "nabla-ad": ("nablaAD", None),
    "one-boundary": ("A", "D"),
    "two-boundary": ("A2", "D2"),
    "irreducible": ("AIr", "DIr"),
    "a": ("A", None),
    "d": ("D", None),
    "a2": ("A2", None),
    "d2": ("D2", None),
    "ad": ("AD", None),
    "i": ("I", None),
    "knot-i": ("IA", "ID"),
    "ia": ("IA", None),
    "id": ("ID", None),
    "air": ("AIr", None),
    "dir": ("DIr", None),
    "c": ("C", None),
    "p": ("P", None),
}


class UsageError(Exception):
    pass


@dataclass
class ComputeResult:
    name: str | None
    invariant: str
    value: dict[str, int] | int
    mode: str | None = None
    degree: int | None = None
    timing_ms: float | None = None
    explanation: list[dict] | None = field(default=None)

    def to_json(self) -> str:
        data = {k: v for k, v in asdict(self).items() if v is not None}
        return json.dumps(data, sort_keys=False)


def read_diagram(source: str) -> GaussDiagram:
    """A file path, ``-`` for stdin, or ``corpus:<name>``."""
    if source.startswith("corpus:"):
        try:
            return corpus.load(source[len("corpus:"):])
        except KeyError as exc:
            raise UsageError(str(exc)) from None
    if source == "-":
        return parse_gauss_code(sys.stdin.read())
    try:
        text = Path(source).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {source}: {exc.strerror}") from None
    return parse_gauss_code(text)


def _request(args, G: GaussDiagram) -> statesums.InvariantRequest:
    asc_kind, desc_kind = INVARIANTS[args.invariant]
    if args.mode is not None and desc_kind is None:
        raise UsageError(f"--mode does not apply to {args.invariant}")
    kind = desc_kind if args.mode == "desc" else asc_kind
    if kind not in statesums.POLYNOMIAL_KINDS and args.degree is None:
        raise UsageError(f"{args.invariant} needs --degree")
    if args.degree is not None and args.degree < 0:
        raise UsageError("--degree must be non-negative")
    degree = None if kind in statesums.POLYNOMIAL_KINDS else args.degree
    return statesums.InvariantRequest(kind, G, degree)


def _explain(req: statesums.InvariantRequest) -> list[dict] | None:
    """Contributing states of one- or two-boundary sums, in enumeration order."""
    boundary_of = {"A": 1, "D": 1, "nablaA": 1, "nablaD": 1, "A2": 2, "D2": 2}
    mode_of = {"A": "asc", "nablaA": "asc", "A2": "asc", "D": "desc", "nablaD": "desc", "D2": "desc"}
    G = req.diagram
    if req.kind in boundary_of:
        parts = [(mode_of[req.kind], boundary_of[req.kind])]
    elif req.kind == "AD" or req.kind == "I":
        parts = [("asc", 2), ("desc", 2)]
    else:
        return None
    degrees = range(G.num_arrows + 1) if req.degree is None else [req.degree]
    out = []
    for mode, boundary in parts:
        for n in degrees:
            for arrows, sign in statesums.contributing_states(G, n, mode, boundary):
                rep = trace(State(G, frozenset(arrows)))
                out.append({
                    "arrows": [a + 1 for a in arrows],
                    "sign": sign,
                    "mode": mode,
                    "boundary": boundary,
                    "trace": rep.render(),
                })
    return out


def cmd_compute(args) -> int:
    G = read_diagram(args.input)
    req = _request(args, G)
    start = time.perf_counter()
    value = req.evaluate()
    elapsed = (time.perf_counter() - start) * 1000
    result = ComputeResult(
        name=G.name,
        invariant=args.invariant,
        value=value.to_json() if isinstance(value, IntPolynomial) else int(value),
        mode=args.mode,
        degree=req.degree,
        timing_ms=round(elapsed, 3) if args.timing else None,
        explanation=_explain(req) if args.explain else None,
    )
    print(result.to_json())
    return EXIT_OK


def cmd_verify(args) -> int:
    config = verify.SuiteConfig(seed=args.seed, trials=args.trials, max_arrows=args.max_arrows)
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    ok = True
    for name in names:
        result = verify.run_suite(name, config)
        ok &= result.ok
        status = "PASS" if result.ok else "FAIL"
        print(f"[{status}] {result.render(show_moves=args.trace)}")
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_corpus(args) -> int:
    if args.name:
        try:
            print(serialize(corpus.load(args.name)))
        except KeyError as exc:
            raise UsageError(str(exc)) from None
        return EXIT_OK
    for name, G in corpus.load_all().items():
        kind = "classical" if G.classical else "virtual"
        print(f"{name:24s} {kind:9s} circles={G.num_circles} arrows={G.num_arrows}")
    return EXIT_OK


def cmd_moves(args) -> int:
    G = read_diagram(args.input)
    kinds = args.kind or None
    for site in moves.list_moves(G, kinds):
        print(site.encode())
    return EXIT_OK


def cmd_apply(args) -> int:
    G = read_diagram(args.input)
    for code in args.move:
        try:
            site = moves.MoveSite.decode(code)
        except ValueError as exc:
            raise UsageError(f"bad move {code!r}: {exc}") from None
        if site.kind == "virtualize":
            arrow = site.location[0]
            if not 0 <= arrow < G.num_arrows:
                raise UsageError(f"arrow {arrow + 1} out of range")
            G = moves.virtualize(G, arrow, keep_sign=not args.flip_sign)
            rule = "sign negated" if args.flip_sign else "sign kept"
            print(f"# virtualization of arrow {arrow + 1}: direction reversed, {rule}")
            continue
        try:
            G = moves.apply_move(G, site)
        except moves.StaleMoveError as exc:
            raise UsageError(str(exc)) from None
    print(serialize(G))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gdcalc", description="Gauss-diagram state-sum invariants.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="evaluate one invariant of a diagram")
    p.add_argument("--input", required=True, help="Gauss-code file, '-' for stdin, or corpus:<name>")
    p.add_argument("--invariant", required=True, choices=sorted(INVARIANTS))
    p.add_argument("--degree", type=int)
    p.add_argument("--mode", choices=statesums.MODES)
    p.add_argument("--explain", action="store_true", help="list contributing states with their traces")
    p.add_argument("--timing", action="store_true", help="include wall time in the output")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="run seeded property suites")
    p.add_argument("--suite", required=True, choices=[*verify.SUITES, "all"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--max-arrows", type=int, default=10)
    p.add_argument("--trace", action="store_true", help="print the move trace of a counterexample")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("corpus", help="list bundled diagrams or print one")
    p.add_argument("name", nargs="?")
    p.set_defaults(func=cmd_corpus)

    p = sub.add_parser("moves", help="list move sites of a diagram")
    p.add_argument("--input", required=True)
    p.add_argument("--kind", action="append", choices=moves.KINDS)
    p.set_defaults(func=cmd_moves)

    p = sub.add_parser("apply", help="apply encoded moves and print the result")
    p.add_argument("--input", required=True)
    p.add_argument("--move", action="append", required=True)
    p.add_argument("--flip-sign", action="store_true", help="virtualization negates the sign")
    p.set_defaults(func=cmd_apply)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PreconditionError as exc:
        print(f"gdcalc: precondition: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (GaussCodeError, UsageError, ValueError) as exc:
        print(f"gdcalc: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
