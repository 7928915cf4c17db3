"""Boundary traversal of the ribbon surface attached to a state.

A state is a subset of the arrows of a Gauss diagram. Its surface has one
disk per circle and one untwisted band per member arrow. Walking the
boundary: follow the circle orientation until the next member endpoint,
cross the band to the other endpoint of that arrow, and keep going along
the circle from there. Endpoints of non-member arrows are transparent.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .gauss import Endpoint, GaussDiagram


class Direction(enum.Flag):
    NEITHER = 0
    ASCENDING = enum.auto()
    DESCENDING = enum.auto()
    BOTH = ASCENDING | DESCENDING


@dataclass(frozen=True)
class State:
    diagram: GaussDiagram
    members: frozenset[int]

    def __post_init__(self):
        members = frozenset(int(a) for a in self.members)
        object.__setattr__(self, "members", members)
        bad = [a for a in members if not 0 <= a < self.diagram.num_arrows]
        if bad:
            raise IndexError(f"arrows {sorted(bad)} not in diagram")

    @classmethod
    def from_mask(cls, diagram: GaussDiagram, mask: int) -> State:
        return cls(diagram, frozenset(a for a in range(diagram.num_arrows) if mask >> a & 1))

    @property
    def mask(self) -> int:
        return sum(1 << a for a in self.members)

    @property
    def sign(self) -> int:
        s = 1
        for a in self.members:
            s *= self.diagram.signs[a]
        return s

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class Step:
    """Arrival at ``endpoint`` (end of an arc), then crossing ``arrow``."""

    endpoint: Endpoint
    arrow: int
    end: str  # "head" | "tail"


@dataclass(frozen=True)
class TraceReport:
    cycles: tuple[tuple[Step, ...], ...]
    boundary_count: int
    euler: int
    genus: int
    connected: bool
    first_approach: dict[int, str]
    separating: frozenset[int]
    arc_labels: tuple[tuple[int, ...], ...]

    def render(self) -> str:
        lines = [
            f"b={self.boundary_count} chi={self.euler} g={self.genus} "
            f"connected={self.connected}"
        ]
        for i, cyc in enumerate(self.cycles, 1):
            body = " ".join(
                f"{'U' if s.end == 'head' else 'O'}{s.arrow + 1}" for s in cyc
            ) or "(empty circle)"
            lines.append(f"  cycle {i}: {body}")
        if self.separating:
            lines.append(f"  separating: {sorted(a + 1 for a in self.separating)}")
        return "\n".join(lines)


class Layout:
    """Flat endpoint tables of a diagram, shared by every state."""

    def __init__(self, G: GaussDiagram):
        self.diagram = G
        self.k = G.num_arrows
        self.m = G.num_circles
        self.circle_endpoints: list[list[int]] = []
        self.ep_circle: list[int] = []
        self.ep_pos: list[int] = []
        self.ep_arrow: list[int] = []
        self.ep_head: list[bool] = []
        ends: dict[tuple[int, bool], int] = {}
        e = 0
        for ci, c in enumerate(G.circles):
            ids = []
            for pos, (a, is_head) in enumerate(c):
                self.ep_circle.append(ci)
                self.ep_pos.append(pos)
                self.ep_arrow.append(a)
                self.ep_head.append(is_head)
                ends[(a, is_head)] = e
                ids.append(e)
                e += 1
            self.circle_endpoints.append(ids)
        self.other = [ends[(a, not h)] for a, h in zip(self.ep_arrow, self.ep_head)]
        self.arrow_circles = [
            (self.ep_circle[ends[(a, False)]], self.ep_circle[ends[(a, True)]])
            for a in range(self.k)
        ]

    def components(self, mask: int) -> int:
        """Number of connected components of the circle/member-arrow graph."""
        parent = list(range(self.m))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        comps = self.m
        for a in range(self.k):
            if mask >> a & 1:
                u, v = self.arrow_circles[a]
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
                    comps -= 1
        return comps

    def cycles(self, mask: int) -> tuple[list[list[int]], list[int], dict[int, int]]:
        """Boundary cycles as lists of arrival endpoints.

        Returns ``(cycles, untouched, succ)`` where ``cycles`` holds the cycles
        through member endpoints with the base cycle first (an empty list
        stands for circle 0 when it has no member endpoint), and
        ``untouched`` lists the other circles without member endpoints.
        """
        succ: dict[int, int] = {}
        untouched = []
        first_member = None
        for ci, ids in enumerate(self.circle_endpoints):
            members = [e for e in ids if mask >> self.ep_arrow[e] & 1]
            if not members:
                if ci:
                    untouched.append(ci)
                continue
            if ci == 0:
                first_member = members[0]
            for t, e in enumerate(members):
                succ[e] = members[(t + 1) % len(members)]
        other = self.other
        seen: set[int] = set()
        cycles: list[list[int]] = []

        def walk(start):
            cyc = []
            e = start
            while e not in seen:
                seen.add(e)
                cyc.append(e)
                e = succ[other[e]]
            return cyc

        cycles.append(walk(first_member) if first_member is not None else [])
        for e in sorted(succ):
            if e not in seen:
                cycles.append(walk(e))
        return cycles, untouched, succ

    def second_cycle_start(self, cycles: list[list[int]], succ: dict[int, int]) -> None:
        """Rotate cycle 2 to start just after the far side of the first separating arrow."""
        in_first = {}
        for e in cycles[0]:
            a = self.ep_arrow[e]
            in_first[a] = in_first.get(a, 0) + 1
        for e in cycles[0]:
            if in_first[self.ep_arrow[e]] == 1:
                start = succ[e]
                cyc = cycles[1]
                i = cyc.index(start)
                cycles[1] = cyc[i:] + cyc[:i]
                return

    def classify(self, mask: int) -> tuple[int, bool, Direction]:
        """(boundary count, connected, direction) of a state.

        The direction is only meaningful for connected states with one or
        two boundary components; otherwise it is ``NEITHER``.
        """
        cycles, untouched, succ = self.cycles(mask)
        b = len(cycles) + len(untouched)
        connected = self.components(mask) == 1 and not untouched and (cycles[0] or self.m == 1)
        connected = bool(connected)
        if not connected or b > 2:
            return b, connected, Direction.NEITHER
        if b == 2:
            self.second_cycle_start(cycles, succ)
        return b, connected, self._direction(cycles[:2])

    def _direction(self, cycles: Iterable[list[int]]) -> Direction:
        seen = set()
        asc = desc = True
        for cyc in cycles:
            for e in cyc:
                a = self.ep_arrow[e]
                if a in seen:
                    continue
                seen.add(a)
                if self.ep_head[e]:
                    desc = False
                else:
                    asc = False
                if not asc and not desc:
                    return Direction.NEITHER
        result = Direction.NEITHER
        if asc:
            result |= Direction.ASCENDING
        if desc:
            result |= Direction.DESCENDING
        return result


@lru_cache(maxsize=256)
def layout(G: GaussDiagram) -> Layout:
    return Layout(G)


def trace(state: State) -> TraceReport:
    lay = layout(state.diagram)
    mask = state.mask
    cycles, untouched, succ = lay.cycles(mask)
    b = len(cycles) + len(untouched)
    comps = lay.components(mask)
    connected = comps == 1 and not untouched and (bool(cycles[0]) or lay.m == 1)
    if connected and b == 2:
        lay.second_cycle_start(cycles, succ)

    steps = tuple(
        tuple(
            Step(
                Endpoint(lay.ep_circle[e], lay.ep_pos[e]),
                lay.ep_arrow[e],
                "head" if lay.ep_head[e] else "tail",
            )
            for e in cyc
        )
        for cyc in cycles
    ) + tuple(() for _ in untouched)

    first: dict[int, str] = {}
    for cyc in steps:
        for s in cyc:
            first.setdefault(s.arrow, s.end)

    separating = set()
    if b >= 2:
        for cyc in cycles:
            counts: dict[int, int] = {}
            for e in cyc:
                counts[lay.ep_arrow[e]] = counts.get(lay.ep_arrow[e], 0) + 1
            separating.update(a for a, n in counts.items() if n == 1)

    # cycle index of each arrival endpoint; untouched circles get their own index
    cycle_of = {e: i + 1 for i, cyc in enumerate(cycles) for e in cyc}
    circle_label = {0: 1} if not cycles[0] else {}
    for j, ci in enumerate(untouched):
        circle_label[ci] = len(cycles) + j + 1
    labels = []
    for ci, ids in enumerate(lay.circle_endpoints):
        members = [e for e in ids if mask >> lay.ep_arrow[e] & 1]
        if not members:
            labels.append((circle_label[ci],) * max(len(ids), 1))
            continue
        row = []
        t = 0
        for e in ids:
            # first member endpoint at or after this position, cyclically
            while t < len(members) and lay.ep_pos[members[t]] < lay.ep_pos[e]:
                t += 1
            term = members[t] if t < len(members) else members[0]
            row.append(cycle_of[term])
        labels.append(tuple(row))

    chi = lay.m - len(state.members)
    genus = (2 * comps - b - chi) // 2
    return TraceReport(
        cycles=steps,
        boundary_count=b,
        euler=chi,
        genus=genus,
        connected=bool(connected),
        first_approach=first,
        separating=frozenset(separating),
        arc_labels=tuple(labels),
    )


def _direction_from(report: TraceReport) -> Direction:
    ends = report.first_approach.values()
    result = Direction.NEITHER
    if all(e == "head" for e in ends):
        result |= Direction.ASCENDING
    if all(e == "tail" for e in ends):
        result |= Direction.DESCENDING
    return result


def classify_one_boundary(state: State) -> Direction:
    report = trace(state)
    if not report.connected or report.boundary_count != 1:
        raise ValueError(
            f"state needs a connected one-boundary surface "
            f"(connected={report.connected}, b={report.boundary_count})"
        )
    return _direction_from(report)


def classify_two_boundary(
    state: State,
) -> tuple[Direction, frozenset[int], tuple[tuple[int, ...], ...]]:
    report = trace(state)
    if not report.connected or report.boundary_count != 2:
        raise ValueError(
            f"state needs a connected two-boundary surface "
            f"(connected={report.connected}, b={report.boundary_count})"
        )
    return _direction_from(report), report.separating, report.arc_labels
