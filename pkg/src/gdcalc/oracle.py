"""Independent checks for the state sums.

Two routes that never look at ribbon traces of ``G`` itself:

* ``conway_skein``: the Conway polynomial of a classical diagram by skein
  recursion down to descending diagrams (which are unlinks).
* ``pairing``: brute-force enumeration of homomorphisms from an abstract
  arrow diagram into ``G``, summed over enumerated arrow-diagram families.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable

from .gauss import GaussDiagram, PreconditionError, Slot, smooth_arrow, switch_crossing
from .polynomial import ONE, ZERO, Z, IntPolynomial
from .trace import Direction, layout


# ---------------------------------------------------------------------------
# Skein recursion

def first_bad_crossing(G: GaussDiagram) -> int | None:
    """First arrow met at its head, walking circles in index order from position 0."""
    seen = set()
    for circle in G.circles:
        for a, is_head in circle:
            if a in seen:
                continue
            seen.add(a)
            if is_head:
                return a
    return None


@lru_cache(maxsize=1 << 16)
def _skein(G: GaussDiagram) -> IntPolynomial:
    bad = first_bad_crossing(G)
    if bad is None:
        # descending diagram of a classical link: an unlink
        return ONE if G.num_circles == 1 else ZERO
    eps = G.signs[bad]
    # nabla(G+) - nabla(G-) = z nabla(G0), solved for the side G is on
    return _skein(switch_crossing(G, bad)) + eps * (Z * _skein(smooth_arrow(G, bad)))


def conway_skein(G: GaussDiagram) -> IntPolynomial:
    if not G.classical:
        raise PreconditionError(
            "skein recursion relies on descending diagrams being unlinks; "
            "only valid for diagrams flagged classical"
        )
    return _skein(G.with_name(None))


# ---------------------------------------------------------------------------
# Arrow diagrams

def _relabel(circles: Iterable[Iterable[Slot]]) -> tuple[tuple[Slot, ...], ...]:
    names: dict[int, int] = {}
    out = []
    for c in circles:
        row = []
        for a, h in c:
            if a not in names:
                names[a] = len(names)
            row.append((names[a], h))
        out.append(tuple(row))
    return tuple(out)


def canonical_form(circles: tuple[tuple[Slot, ...], ...]) -> tuple[tuple[Slot, ...], ...]:
    """Minimal relabelled encoding over rotations and orders of non-based circles."""
    based, rest = circles[0], circles[1:]
    best = None
    for order in permutations(range(len(rest))):
        choices = [[()] if not rest[i] else
                   [rest[i][r:] + rest[i][:r] for r in range(len(rest[i]))]
                   for i in order]
        for combo in _product(choices):
            enc = _relabel((based, *combo))
            if best is None or enc < best:
                best = enc
    return best


def _product(choices):
    if not choices:
        yield ()
        return
    for first in choices[0]:
        for tail in _product(choices[1:]):
            yield (first, *tail)


@dataclass(frozen=True)
class ArrowDiagramClass:
    """Unsigned based arrow diagram up to diffeomorphism of the circles."""

    circles: tuple[tuple[Slot, ...], ...]

    @classmethod
    def from_circles(cls, circles) -> ArrowDiagramClass:
        circles = tuple(tuple((int(a), bool(h)) for a, h in c) for c in circles)
        return cls(canonical_form(circles))

    @property
    def canonical_form(self):
        return self.circles

    @property
    def num_arrows(self) -> int:
        return sum(len(c) for c in self.circles) // 2

    @property
    def num_circles(self) -> int:
        return len(self.circles)

    def to_diagram(self) -> GaussDiagram:
        return GaussDiagram(self.circles, (1,) * self.num_arrows)

    def __str__(self) -> str:
        return str(self.to_diagram()).replace("+", "")


def classify_arrow_diagram(A: ArrowDiagramClass) -> tuple[int, bool, Direction]:
    lay = layout(A.to_diagram())
    return lay.classify((1 << A.num_arrows) - 1)


def _matchings(slots: list[int]):
    """Perfect matchings of slots into directed pairs (tail slot, head slot)."""
    if not slots:
        yield []
        return
    first, rest = slots[0], slots[1:]
    for i, other in enumerate(rest):
        remaining = rest[:i] + rest[i + 1:]
        for tail in _matchings(remaining):
            yield [(first, other)] + tail
            yield [(other, first)] + tail


def _compositions(total: int, parts: int, minimum: int):
    if parts == 1:
        if total >= minimum:
            yield (total,)
        return
    for first in range(minimum, total - minimum * (parts - 1) + 1):
        for rest in _compositions(total - first, parts - 1, minimum):
            yield (first, *rest)


MAX_FAMILY_ARROWS = 4
MAX_FAMILY_CIRCLES = 2


def enumerate_family(n: int, m: int, boundary: int, mode: str = "all") -> set[ArrowDiagramClass]:
    """All connected based arrow diagrams with n arrows, m circles, b boundaries."""
    if n > MAX_FAMILY_ARROWS or m > MAX_FAMILY_CIRCLES or n < 0 or m < 1:
        raise ValueError(f"family ({n}, {m}) outside the enumeration guard")
    if mode not in ("asc", "desc", "all"):
        raise ValueError(f"unknown mode {mode!r}")
    want = {"asc": Direction.ASCENDING, "desc": Direction.DESCENDING}.get(mode)
    found: set[ArrowDiagramClass] = set()
    minimum = 1 if m > 1 else 0
    for sizes in _compositions(2 * n, m, minimum):
        for pairs in _matchings(list(range(2 * n))):
            slot_of = {}
            for a, (t, h) in enumerate(pairs):
                slot_of[t] = (a, False)
                slot_of[h] = (a, True)
            circles, start = [], 0
            for size in sizes:
                circles.append(tuple(slot_of[i] for i in range(start, start + size)))
                start += size
            A = ArrowDiagramClass.from_circles(circles)
            if A in found:
                continue
            b, connected, direction = classify_arrow_diagram(A)
            if not connected or b != boundary:
                continue
            if want is not None and not direction & want:
                continue
            found.add(A)
    return found


# ---------------------------------------------------------------------------
# Brute-force pairing

def _circle_maps(n_src: int, n_dst: int, based: bool):
    """Orientation-preserving injections of circle endpoints, as index tuples."""
    if n_src == 0:
        yield ()
        return
    for chosen in combinations(range(n_dst), n_src):
        if based:
            yield chosen
        else:
            for r in range(n_src):
                yield chosen[r:] + chosen[:r]


def homomorphisms(A: ArrowDiagramClass, G: GaussDiagram):
    """Yield the arrow map (A arrow -> G arrow) of every homomorphism A -> G."""
    if A.num_circles != G.num_circles:
        raise ValueError("arrow diagram and Gauss diagram have different circle counts")
    m = G.num_circles
    k = A.num_arrows
    for perm in permutations(range(1, m)):
        target = (0, *perm)

        def extend(i, tail_of, head_of):
            if i == m:
                if all(tail_of[a] == head_of[a] for a in range(k)):
                    yield tuple(tail_of[a] for a in range(k))
                return
            src = A.circles[i]
            dst = G.circles[target[i]]
            for image in _circle_maps(len(src), len(dst), based=(i == 0)):
                ok = True
                t2, h2 = dict(tail_of), dict(head_of)
                for (a, is_head), pos in zip(src, image):
                    g_arrow, g_head = dst[pos]
                    if g_head != is_head:
                        ok = False
                        break
                    book = h2 if is_head else t2
                    book[a] = g_arrow
                    other = t2 if is_head else h2
                    if a in other and other[a] != g_arrow:
                        ok = False
                        break
                if ok:
                    yield from extend(i + 1, t2, h2)

        yield from extend(0, {}, {})


def pairing(A: ArrowDiagramClass, G: GaussDiagram) -> int:
    """Signed count of homomorphisms A -> G."""
    total = 0
    for image in homomorphisms(A, G):
        sign = 1
        for g in image:
            sign *= G.signs[g]
        total += sign
    return total


def family_pairing_sum(family: Iterable[ArrowDiagramClass], G: GaussDiagram) -> int:
    total = 0
    for A in family:
        if A.num_circles != G.num_circles:
            raise ValueError("family circle count differs from the diagram's")
        total += pairing(A, G)
    return total
