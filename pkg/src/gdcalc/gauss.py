"""Based, signed Gauss diagrams of classical and virtual links.

A diagram is a list of oriented circles. Each circle is a cyclic sequence of
arrow endpoints; an arrow runs from its tail (overpass) to its head
(underpass) and carries a sign in {+1, -1}. The base point is the gap just
before position 0 of circle 0, so rotating circle 0 moves the base point.

Arrow ``i`` is written ``O{i+1}`` (tail) and ``U{i+1}`` (head) in the text
format, followed by its sign.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

Slot = tuple[int, bool]  # (arrow index, is_head)


class GaussCodeError(ValueError):
    """Raised for malformed Gauss code documents."""


class PreconditionError(ValueError):
    """An operation was called on a diagram it is not defined for."""


@dataclass(frozen=True)
class Endpoint:
    circle: int
    position: int


@dataclass(frozen=True)
class Arrow:
    tail: Endpoint
    head: Endpoint
    sign: int


@dataclass(frozen=True)
class GaussDiagram:
    circles: tuple[tuple[Slot, ...], ...]
    signs: tuple[int, ...]
    classical: bool = False
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        circles = tuple(tuple((int(a), bool(h)) for a, h in c) for c in self.circles)
        object.__setattr__(self, "circles", circles)
        object.__setattr__(self, "signs", tuple(int(s) for s in self.signs))
        if not circles:
            raise ValueError("a Gauss diagram needs at least one circle")
        k = len(self.signs)
        seen: dict[Slot, int] = {}
        for c in circles:
            for slot in c:
                seen[slot] = seen.get(slot, 0) + 1
        for a in range(k):
            if seen.get((a, False)) != 1 or seen.get((a, True)) != 1:
                raise ValueError(f"arrow {a} must have exactly one tail and one head")
        if len(seen) != 2 * k or sum(seen.values()) != 2 * k:
            raise ValueError("endpoint references unknown arrow")
        for s in self.signs:
            if s not in (1, -1):
                raise ValueError(f"arrow signs must be +1 or -1, got {s}")

    @property
    def num_circles(self) -> int:
        return len(self.circles)

    @property
    def num_arrows(self) -> int:
        return len(self.signs)

    @cached_property
    def arrows(self) -> tuple[Arrow, ...]:
        tails: dict[int, Endpoint] = {}
        heads: dict[int, Endpoint] = {}
        for ci, c in enumerate(self.circles):
            for pos, (a, is_head) in enumerate(c):
                (heads if is_head else tails)[a] = Endpoint(ci, pos)
        return tuple(Arrow(tails[a], heads[a], s) for a, s in enumerate(self.signs))

    def endpoint(self, arrow: int, head: bool) -> Endpoint:
        arr = self.arrows[arrow]
        return arr.head if head else arr.tail

    def circles_of(self, arrow: int) -> tuple[int, int]:
        """(tail circle, head circle) of an arrow."""
        arr = self.arrows[arrow]
        return arr.tail.circle, arr.head.circle

    @property
    def writhe(self) -> int:
        return sum(self.signs)

    def with_name(self, name: str | None) -> GaussDiagram:
        return GaussDiagram(self.circles, self.signs, self.classical, name)

    def with_classical(self, classical: bool) -> GaussDiagram:
        return GaussDiagram(self.circles, self.signs, classical, self.name)

    def code(self) -> str:
        """Circle lines only, without header."""
        return "\n".join(_circle_line(c, self.signs) for c in self.circles)

    def __str__(self) -> str:
        return " | ".join(
            " ".join(_token(slot, self.signs) for slot in c) or "()" for c in self.circles
        )


def _token(slot: Slot, signs: Sequence[int]) -> str:
    a, is_head = slot
    return f"{'U' if is_head else 'O'}{a + 1}{'+' if signs[a] > 0 else '-'}"


def _circle_line(circle: Sequence[Slot], signs: Sequence[int]) -> str:
    body = " ".join(_token(s, signs) for s in circle)
    return f"circle: {body}" if body else "circle:"


# ---------------------------------------------------------------------------
# Text format

_TOKEN = re.compile(r"^([OU])([1-9][0-9]*)([+-])$")
_HEADER = re.compile(r'^link\s+"([^"]*)"$')
_CLASSICAL = re.compile(r"^classical:\s*(true|false)$")


def parse_gauss_code(text: str) -> GaussDiagram:
    """Parse the line-oriented signed Gauss code format.

    Arrow ids are renumbered in increasing order, so ids ``1..k`` map to
    arrow indices ``0..k-1``.
    """
    name = None
    classical = False
    raw_circles: list[list[tuple[str, int, int]]] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("circle:"):
            tokens = []
            for tok in line[len("circle:"):].split():
                m = _TOKEN.match(tok)
                if not m:
                    raise GaussCodeError(f"line {lineno}: bad token {tok!r}")
                tokens.append((m.group(1), int(m.group(2)), 1 if m.group(3) == "+" else -1))
            raw_circles.append(tokens)
            continue
        m = _HEADER.match(line)
        if m:
            name = m.group(1)
            continue
        m = _CLASSICAL.match(line)
        if m:
            classical = m.group(1) == "true"
            continue
        raise GaussCodeError(f"line {lineno}: cannot parse {line!r}")
    if not raw_circles:
        raise GaussCodeError("document has no 'circle:' line")

    occurrences: dict[int, list[tuple[str, int]]] = {}
    for c in raw_circles:
        for kind, ident, sign in c:
            occurrences.setdefault(ident, []).append((kind, sign))
    for ident, occ in occurrences.items():
        if len(occ) != 2:
            raise GaussCodeError(f"id {ident} appears {len(occ)} times, expected 2")
        kinds = sorted(k for k, _ in occ)
        if kinds != ["O", "U"]:
            raise GaussCodeError(f"id {ident} must appear once as O and once as U")
        if occ[0][1] != occ[1][1]:
            raise GaussCodeError(f"sign mismatch for id {ident}")
    index = {ident: i for i, ident in enumerate(sorted(occurrences))}
    signs = [0] * len(index)
    for ident, occ in occurrences.items():
        signs[index[ident]] = occ[0][1]
    circles = tuple(
        tuple((index[ident], kind == "U") for kind, ident, _ in c) for c in raw_circles
    )
    return GaussDiagram(circles, tuple(signs), classical, name)


def serialize(G: GaussDiagram) -> str:
    lines = []
    if G.name is not None:
        lines.append(f'link "{G.name}"')
    if G.classical:
        lines.append("classical: true")
    lines.extend(_circle_line(c, G.signs) for c in G.circles)
    return "\n".join(lines)


def diagram(*circles: str, classical: bool = False, name: str | None = None) -> GaussDiagram:
    """Build a diagram from one token string per circle, e.g. ``diagram("O1+ U1+")``."""
    if not circles:
        circles = ("",)
    text = "\n".join(f"circle: {c}" for c in circles)
    G = parse_gauss_code(text)
    return GaussDiagram(G.circles, G.signs, classical, name)


# ---------------------------------------------------------------------------
# Surgeries

def _rebuild(
    circles: Iterable[Sequence[Slot]],
    signs: Sequence[int],
    classical: bool,
    name: str | None = None,
) -> GaussDiagram:
    """Renumber surviving arrows, preserving their relative order."""
    circles = [list(c) for c in circles]
    present = sorted({a for c in circles for a, _ in c})
    remap = {a: i for i, a in enumerate(present)}
    new_circles = tuple(tuple((remap[a], h) for a, h in c) for c in circles)
    return GaussDiagram(new_circles, tuple(signs[a] for a in present), classical, name)


def writhe_profile(G: GaussDiagram) -> tuple[int, int, int]:
    """Return ``(w, w_A, w_D)``.

    ``w_A`` sums the signs of arrows whose head is met first walking circle 0
    from the base point, ``w_D`` those whose tail is met first. Only defined
    for one-circle diagrams.
    """
    if G.num_circles != 1:
        raise ValueError("w_A and w_D are defined for one-circle diagrams only")
    w_a = w_d = 0
    seen = set()
    for a, is_head in G.circles[0]:
        if a in seen:
            continue
        seen.add(a)
        if is_head:
            w_a += G.signs[a]
        else:
            w_d += G.signs[a]
    return G.writhe, w_a, w_d


def mirror(G: GaussDiagram) -> GaussDiagram:
    return GaussDiagram(G.circles, tuple(-s for s in G.signs), G.classical, G.name)


def _check_arrow(G: GaussDiagram, arrow: int) -> None:
    if not 0 <= arrow < G.num_arrows:
        raise IndexError(f"arrow index {arrow} out of range for {G.num_arrows} arrows")


def switch_crossing(G: GaussDiagram, arrow: int) -> GaussDiagram:
    """Crossing change: swap the arrow's head and tail and negate its sign."""
    _check_arrow(G, arrow)
    circles = tuple(
        tuple((a, not h) if a == arrow else (a, h) for a, h in c) for c in G.circles
    )
    signs = list(G.signs)
    signs[arrow] = -signs[arrow]
    return GaussDiagram(circles, tuple(signs), G.classical, G.name)


def smooth_sequences(circles: list[list], first, second) -> list[list]:
    """Oriented smoothing of a chord joining two tokens of a circle list.

    Tokens may be arbitrary hashable markers. Removing the two tokens, the
    strand entering one of them leaves from just after the other. A split
    keeps the part containing position 0 at the old index and appends the
    other part at the end; a merge keeps the smaller index.
    """
    loc = {}
    for ci, c in enumerate(circles):
        for pos, tok in enumerate(c):
            if tok == first or tok == second:
                loc[tok] = (ci, pos)
    (c1, i), (c2, j) = sorted([loc[first], loc[second]])
    out = [list(c) for c in circles]
    if c1 == c2:
        s = circles[c1]
        out[c1] = list(s[:i]) + list(s[j + 1:])
        out.append(list(s[i + 1:j]))
    else:
        s1, s2 = circles[c1], circles[c2]
        out[c1] = list(s1[:i]) + list(s2[j + 1:]) + list(s2[:j]) + list(s1[i + 1:])
        del out[c2]
    return out


def smooth_arrow(G: GaussDiagram, arrow: int) -> GaussDiagram:
    _check_arrow(G, arrow)
    circles = smooth_sequences([list(c) for c in G.circles], (arrow, False), (arrow, True))
    return _rebuild(circles, G.signs, G.classical, G.name)


def sublink(G: GaussDiagram, keep: Iterable[int]) -> GaussDiagram:
    """Sub-diagram on the given circles, keeping arrows internal to them."""
    keep = sorted(set(keep))
    if not keep:
        raise ValueError("sublink needs at least one circle")
    if keep[0] < 0 or keep[-1] >= G.num_circles:
        raise IndexError(f"circle indices {keep} out of range")
    kept = set(keep)
    internal = {
        a for a, arr in enumerate(G.arrows)
        if arr.tail.circle in kept and arr.head.circle in kept
    }
    circles = [[s for s in G.circles[c] if s[0] in internal] for c in keep]
    return _rebuild(circles, G.signs, G.classical)


def disjoint_union(G1: GaussDiagram, G2: GaussDiagram) -> GaussDiagram:
    k = G1.num_arrows
    circles = list(G1.circles) + [tuple((a + k, h) for a, h in c) for c in G2.circles]
    return GaussDiagram(
        tuple(circles), G1.signs + G2.signs, G1.classical and G2.classical
    )


def connected_sum(G1: GaussDiagram, G2: GaussDiagram) -> GaussDiagram:
    """Long-link composition: G2's based circle follows G1's on one circle."""
    k = G1.num_arrows
    shifted = [tuple((a + k, h) for a, h in c) for c in G2.circles]
    circles = [G1.circles[0] + shifted[0], *G1.circles[1:], *shifted[1:]]
    return GaussDiagram(
        tuple(circles), G1.signs + G2.signs, G1.classical and G2.classical
    )


def move_base_point(G: GaussDiagram, circle: int, gap: int) -> GaussDiagram:
    """Put the base point in the gap before position ``gap`` of ``circle``.

    The chosen circle is rotated to start at that gap and swapped with circle 0.
    """
    if not 0 <= circle < G.num_circles:
        raise IndexError(f"circle {circle} out of range")
    c = G.circles[circle]
    if not (0 <= gap < len(c) or gap == 0):
        raise IndexError(f"gap {gap} out of range for circle of length {len(c)}")
    circles = list(G.circles)
    circles[circle] = c[gap:] + c[:gap]
    circles[0], circles[circle] = circles[circle], circles[0]
    return GaussDiagram(tuple(circles), G.signs, G.classical, G.name)


def base_point_positions(G: GaussDiagram) -> list[tuple[int, int]]:
    """All (circle, gap) base point choices."""
    return [(ci, g) for ci, c in enumerate(G.circles) for g in range(max(len(c), 1))]


def linking_number(G: GaussDiagram, source: int = 1, target: int = 0) -> int:
    """Sum of signs of arrows running from circle ``source`` to circle ``target``."""
    return sum(
        arr.sign for arr in G.arrows
        if arr.tail.circle == source and arr.head.circle == target
    )
