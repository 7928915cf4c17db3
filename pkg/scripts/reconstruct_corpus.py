"""Search small Gauss diagrams for the corpus entries known only by their values.

Each target lists the invariant values a diagram must reproduce; the search
walks all diagrams of the given shape (arrows labelled by first occurrence)
and prints the first few matches. Run: python3 scripts/reconstruct_corpus.py [target ...]
"""

from __future__ import annotations

import argparse
import itertools
import sys

from gdcalc.gauss import GaussDiagram, base_point_positions, mirror, move_base_point
from gdcalc.moves import is_realizable, virtualize
from gdcalc.polynomial import IntPolynomial
from gdcalc.statesums import contributing_states, conway, two_boundary_coeff


def poly(*coeffs: int) -> IntPolynomial:
    return IntPolynomial(coeffs)


def _labelled_sequences(n_tokens: int):
    """Arrow-id sequences where each arrow appears twice, ids in first-occurrence order."""

    def rec(seq, open_ids, next_id):
        if len(seq) == n_tokens:
            if not open_ids:
                yield tuple(seq)
            return
        remaining = n_tokens - len(seq)
        if len(open_ids) < remaining:
            yield from rec(seq + [next_id], open_ids | {next_id}, next_id + 1)
        for a in sorted(open_ids):
            yield from rec(seq + [a], open_ids - {a}, next_id)

    yield from rec([], frozenset(), 0)


def diagrams(sizes: tuple[int, ...], signs: tuple[int, ...] | None = None):
    """Every diagram with the given circle sizes; optional fixed sign vector."""
    total = sum(sizes)
    k = total // 2
    for seq in _labelled_sequences(total):
        for heads in itertools.product((False, True), repeat=k):
            toks = []
            for a in seq:
                # the first occurrence is the head iff heads[a]
                first = a not in {t for t, _ in toks}
                toks.append((a, heads[a] if first else not heads[a]))
            circles, start = [], 0
            for size in sizes:
                circles.append(tuple(toks[start:start + size]))
                start += size
            sign_options = [signs] if signs is not None else itertools.product((1, -1), repeat=k)
            for sg in sign_options:
                yield GaussDiagram(tuple(circles), tuple(sg))


def rotations(G: GaussDiagram):
    for ci, gap in base_point_positions(G):
        if ci == 0:
            yield gap, move_base_point(G, 0, gap)


def kishino(limit: int):
    target_a, one = poly(1, 0, -2, 0, 1), poly(1)
    for G in diagrams((8,)):
        if G.writhe != 0 or conway(G, "asc") != target_a or conway(G, "desc") != one:
            continue
        for gap, H in rotations(G):
            if conway(H, "asc") == one and conway(H, "desc") == target_a:
                yield f"G = {G}   G^ = {H} (gap {gap})"
                limit -= 1
                break
        if limit <= 0:
            return


def torus_link(limit: int):
    want_asc = [[0, 1], [0, 3], [2, 3]]
    want_desc = [[1, 2]]
    for a in range(1, 8):
        for G in diagrams((a, 8 - a), (1, 1, 1, 1)):
            asc = contributing_states(G, 2, "asc", 2)
            desc = contributing_states(G, 2, "desc", 2)
            if [s for s, _ in asc] == want_asc and [s for s, _ in desc] == want_desc:
                if conway(G, "asc") == poly(0, 2) and is_realizable(G):
                    yield str(G)
                    limit -= 1
                    if limit <= 0:
                        return


def chain3(limit: int):
    for sizes in [(2, 4, 2), (4, 2, 2), (2, 2, 4)]:
        for G in diagrams(sizes):
            if not is_realizable(G):
                continue
            states = contributing_states(G, 2, "asc", 1)
            if states == [([2, 3], 1)] and conway(G, "asc") == poly(0, 0, 1):
                if sum(len(contributing_states(G, n, "asc", 1)) for n in range(5)) == 1:
                    yield str(G)
                    limit -= 1
                    if limit <= 0:
                        return


def basepoint_knot(limit: int):
    t1, t2, one = poly(1, 0, 1), poly(1, 0, 2, 0, 1), poly(1)
    for k in (4, 5):
        for G in diagrams((2 * k,)):
            if conway(G, "asc") != t1 or conway(G, "desc") != t1:
                continue
            for gap, H in rotations(G):
                if conway(H, "asc") == t2 and conway(H, "desc") == one:
                    yield f"G = {G}   G^ = {H} (gap {gap})"
                    limit -= 1
                    break
            if limit <= 0:
                return


def mirror_pair(limit: int):
    t, one = poly(1, 0, 1), poly(1)
    for k in (2, 3, 4):
        for G in diagrams((2 * k,)):
            M = mirror(G)
            if (conway(G, "asc"), conway(M, "desc"), conway(M, "asc"), conway(G, "desc")) == (t, t, one, one):
                yield f"K = {G}   K* = {M}"
                limit -= 1
                if limit <= 0:
                    return


def virtualization_pair(limit: int, keep_sign: bool = True):
    for G in diagrams((6,)):
        a2, d2 = conway(G, "asc")[2], conway(G, "desc")[2]
        if (a2, d2) != (-1, 1):
            continue
        for arrow in range(3):
            H = virtualize(G, arrow, keep_sign=keep_sign)
            if conway(H, "asc")[2] == 0 and conway(H, "desc")[2] == 0:
                yield f"G = {G}   G1 = {H} (arrow {arrow + 1})"
                limit -= 1
                break
        if limit <= 0:
            return


def kinks(limit: int):
    for G in diagrams((2,)):
        yield f"{G}: D2_1 = {two_boundary_coeff(G, 1, 'desc')}, A2_1 = {two_boundary_coeff(G, 1, 'asc')}"


TARGETS = {
    "kishino": kishino,
    "torus-link": torus_link,
    "chain3": chain3,
    "basepoint-knot": basepoint_knot,
    "mirror": mirror_pair,
    "virtualization": virtualization_pair,
    "kinks": kinks,
}


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("targets", nargs="*", default=list(TARGETS))
    ap.add_argument("--limit", type=int, default=5)
    args = ap.parse_args(argv)
    for name in args.targets:
        print(f"== {name}")
        for line in TARGETS[name](args.limit):
            print("  ", line)
        sys.stdout.flush()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
