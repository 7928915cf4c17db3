"""Count how often third-move sites change the sums on random virtual diagrams.

One-boundary sums never change; two-boundary sums do on a fraction of sites,
which is why the moves suite checks them on planar diagrams only.
"""

from __future__ import annotations

import argparse
import random

from gdcalc.moves import apply_move, list_moves, random_diagram
from gdcalc.statesums import one_boundary_coeff, two_boundary_coeff
from gdcalc.verify import plant_triangle

OMEGA3 = ["omega3-forward", "omega3-backward"]


def table(G, fn):
    return [fn(G, n, mode) for mode in ("asc", "desc") for n in range(G.num_arrows + 1)]


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--diagrams", type=int, default=300)
    ap.add_argument("--max-arrows", type=int, default=6)
    args = ap.parse_args(argv)
    rng = random.Random(args.seed)
    sites = one_changed = two_changed = 0
    for _ in range(args.diagrams):
        G = random_diagram(rng.randrange(1 << 30), rng.randint(1, 2), rng.randint(1, args.max_arrows))
        G = plant_triangle(G, rng)
        for site in list_moves(G, OMEGA3):
            H = apply_move(G, site)
            sites += 1
            one_changed += table(G, one_boundary_coeff) != table(H, one_boundary_coeff)
            two_changed += table(G, two_boundary_coeff) != table(H, two_boundary_coeff)
    print(f"sites={sites} one-boundary changed={one_changed} two-boundary changed={two_changed}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
