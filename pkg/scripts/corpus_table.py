"""Print the main invariants of every bundled diagram as a table."""

from __future__ import annotations

import argparse

from gdcalc import corpus
from gdcalc.statesums import AD_coeff, I_coeff, conway, nabla_AD, p_coeff


def row(name: str) -> list[str]:
    G = corpus.load(name)
    top = G.num_arrows + 1
    cells = [
        name,
        "classical" if G.classical else "virtual",
        str(conway(G, "asc")),
        str(conway(G, "desc")),
        str(nabla_AD(G)),
        str([AD_coeff(G, n) for n in range(top)]),
        str([I_coeff(G, n) for n in range(top)]),
    ]
    cells.append(str([p_coeff(G, n) for n in range(top)]) if G.classical else "-")
    return cells


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("names", nargs="*", default=corpus.names())
    args = ap.parse_args(argv)
    header = ["name", "kind", "nabla_A", "nabla_D", "nabla_A-D", "AD_n", "I_n", "p_n"]
    rows = [header] + [row(n) for n in args.names]
    widths = [max(len(r[i]) for r in rows) for i in range(len(header))]
    for r in rows:
        print("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
