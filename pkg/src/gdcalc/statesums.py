"""Signed state sums over Gauss diagrams.

Every invariant here is a signed count of states (arrow subsets) whose
ribbon surface is connected with one or two boundary components and is
ascending or descending from the base point. One pass over all ``2**k``
states fills a table that every coefficient query reads from.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .gauss import (
    GaussDiagram,
    PreconditionError,
    _rebuild,
    smooth_sequences,
    sublink,
    writhe_profile,
)
from .polynomial import IntPolynomial
from .trace import Direction, State, layout, trace

MODES = ("asc", "desc")
PARALLEL_MIN_ARROWS = 14


def _direction(mode: str) -> Direction:
    if mode == "asc":
        return Direction.ASCENDING
    if mode == "desc":
        return Direction.DESCENDING
    raise ValueError(f"mode must be 'asc' or 'desc', got {mode!r}")


@dataclass(frozen=True)
class StateSumTable:
    """Per-degree signed sums, indexed by number of arrows in the state."""

    asc1: tuple[int, ...]
    desc1: tuple[int, ...]
    asc2: tuple[int, ...]
    desc2: tuple[int, ...]
    asc_irr: tuple[int, ...]
    desc_irr: tuple[int, ...]

    def row(self, name: str, mode: str) -> tuple[int, ...]:
        return getattr(self, f"{mode}{name}")


def _is_irreducible(lay, mask: int) -> bool:
    """No member arrow joining two circles is a bridge of the circle graph."""
    base = lay.components(mask)
    for a in range(lay.k):
        if mask >> a & 1:
            u, v = lay.arrow_circles[a]
            if u != v and lay.components(mask & ~(1 << a)) > base:
                return False
    return True


def _accumulate(G: GaussDiagram, lo: int, hi: int) -> list[list[int]]:
    lay = layout(G)
    k = G.num_arrows
    negmask = sum(1 << a for a, s in enumerate(G.signs) if s < 0)
    rows = [[0] * (k + 1) for _ in range(6)]
    asc1, desc1, asc2, desc2, asc_irr, desc_irr = rows
    many = G.num_circles > 1
    for mask in range(lo, hi):
        b, connected, direction = lay.classify(mask)
        if not connected or not direction:
            continue
        n = mask.bit_count()
        sign = -1 if (mask & negmask).bit_count() & 1 else 1
        if b == 1:
            irreducible = not many or _is_irreducible(lay, mask)
            if direction & Direction.ASCENDING:
                asc1[n] += sign
                if irreducible:
                    asc_irr[n] += sign
            if direction & Direction.DESCENDING:
                desc1[n] += sign
                if irreducible:
                    desc_irr[n] += sign
        elif b == 2:
            if direction & Direction.ASCENDING:
                asc2[n] += sign
            if direction & Direction.DESCENDING:
                desc2[n] += sign
    return rows


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("GDCALC_THREADS", "1")))
    except ValueError:
        return 1


@lru_cache(maxsize=4096)
def state_sums(G: GaussDiagram) -> StateSumTable:
    total = 1 << G.num_arrows
    workers = _workers()
    if workers > 1 and G.num_arrows >= PARALLEL_MIN_ARROWS:
        step = -(-total // workers)
        bounds = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
        with ProcessPoolExecutor(workers) as pool:
            parts = list(pool.map(_accumulate, [G] * len(bounds), *zip(*bounds)))
        rows = [[sum(col) for col in zip(*(p[i] for p in parts))] for i in range(6)]
    else:
        rows = _accumulate(G, 0, total)
    return StateSumTable(*(tuple(r) for r in rows))


def _at(row: tuple[int, ...], n: int) -> int:
    return row[n] if 0 <= n < len(row) else 0


# ---------------------------------------------------------------------------
# One boundary component

def one_boundary_coeff(G: GaussDiagram, n: int, mode: str) -> int:
    _direction(mode)
    return _at(state_sums(G).row("1", mode), n)


def conway(G: GaussDiagram, mode: str = "asc") -> IntPolynomial:
    _direction(mode)
    return IntPolynomial(state_sums(G).row("1", mode))


def nabla_AD(G: GaussDiagram) -> IntPolynomial:
    return conway(G, "asc") - conway(G, "desc")


def irreducible_coeff(G: GaussDiagram, n: int, mode: str) -> int:
    _direction(mode)
    return _at(state_sums(G).row("_irr", mode), n)


# ---------------------------------------------------------------------------
# Two boundary components

def two_boundary_coeff(G: GaussDiagram, n: int, mode: str) -> int:
    _direction(mode)
    return _at(state_sums(G).row("2", mode), n)


def AD_coeff(G: GaussDiagram, n: int) -> int:
    return two_boundary_coeff(G, n, "asc") + two_boundary_coeff(G, n, "desc")


def I_coeff(G: GaussDiagram, n: int) -> int:
    """AD_n minus writhe times the (n-1)-th Conway coefficient."""
    return AD_coeff(G, n) - G.writhe * one_boundary_coeff(G, n - 1, "asc")


def knot_I_coeff(G: GaussDiagram, n: int, mode: str) -> int:
    if G.num_circles != 1:
        raise PreconditionError("knot_I_coeff needs a one-circle diagram")
    _, w_a, w_d = writhe_profile(G)
    w = w_a if mode == "asc" else w_d
    return two_boundary_coeff(G, n, mode) - w * one_boundary_coeff(G, n - 1, "asc")


def _require_classical(G: GaussDiagram, what: str) -> None:
    if not G.classical:
        raise PreconditionError(f"{what} is only defined for diagrams flagged classical")


def C_coeff(G: GaussDiagram, n: int) -> int:
    """Sum over ordered splittings (K, complement) into non-empty proper sublinks."""
    _require_classical(G, "C_n")
    m = G.num_circles
    if m == 1 or n < 0:
        return 0
    total = 0
    everything = set(range(m))
    for r in range(1, m):
        for part in combinations(range(m), r):
            left = conway(sublink(G, part))
            right = conway(sublink(G, everything - set(part)))
            total += sum(left[i] * right[n - i] for i in range(n + 1))
    return total


def p_coeff(G: GaussDiagram, n: int) -> int:
    """Coefficient of z^n in z * dP/da at a = 1."""
    _require_classical(G, "p_n")
    return I_coeff(G, n) + C_coeff(G, n)


# ---------------------------------------------------------------------------
# Enumeration helpers

def states_by_size(G: GaussDiagram, n: int | None = None):
    """Masks in increasing popcount, then numeric order."""
    k = G.num_arrows
    sizes = range(k + 1) if n is None else ([n] if 0 <= n <= k else [])
    for size in sizes:
        for combo in combinations(range(k), size):
            yield sum(1 << a for a in combo)


def contributing_states(G: GaussDiagram, n: int, mode: str, boundary: int = 1):
    """(arrow indices, sign) of every state counted by the chosen coefficient."""
    want = _direction(mode)
    lay = layout(G)
    out = []
    for mask in states_by_size(G, n):
        b, connected, direction = lay.classify(mask)
        if connected and b == boundary and direction & want:
            st = State.from_mask(G, mask)
            out.append((sorted(st.members), st.sign))
    return out


@dataclass(frozen=True)
class SeparatingStateKey:
    arrows: frozenset[int]
    labels: tuple[tuple[int, ...], ...]


def grouped_two_boundary(G: GaussDiagram, n: int, mode: str) -> dict[SeparatingStateKey, int]:
    """Two-boundary sum split by separating arrows and arc labelling."""
    want = _direction(mode)
    lay = layout(G)
    groups: dict[SeparatingStateKey, int] = {}
    for mask in states_by_size(G, n):
        b, connected, direction = lay.classify(mask)
        if not (connected and b == 2 and direction & want):
            continue
        st = State.from_mask(G, mask)
        rep = trace(st)
        key = SeparatingStateKey(rep.separating, rep.arc_labels)
        groups[key] = groups.get(key, 0) + st.sign
    return groups


def labelled_smoothing(
    G: GaussDiagram, key: SeparatingStateKey
) -> tuple[GaussDiagram, GaussDiagram]:
    """Smooth the separating arrows and split the result by arc label.

    Returns the label-1 and label-2 sub-diagrams; arrows whose ends carry
    different labels are dropped. Raises ``ValueError`` when a smoothed
    circle carries two labels.
    """
    tokens = []
    for ci, c in enumerate(G.circles):
        row = []
        for pos, slot in enumerate(c):
            row.append(("gap", ci, pos))
            row.append(("end",) + slot)
        if not c:
            row.append(("gap", ci, 0))
        tokens.append(row)
    for a in sorted(key.arrows):
        tokens = smooth_sequences(tokens, ("end", a, False), ("end", a, True))

    sides: dict[int, list[list]] = {1: [], 2: []}
    end_label = {}
    for circle in tokens:
        labels = {key.labels[t[1]][t[2]] for t in circle if t[0] == "gap"}
        if len(labels) != 1:
            raise ValueError(f"smoothed circle carries labels {sorted(labels)}")
        label = labels.pop()
        sides[label].append(circle)
        for t in circle:
            if t[0] == "end":
                end_label[(t[1], t[2])] = label

    def side(label):
        circles = [
            [(t[1], t[2]) for t in circle
             if t[0] == "end" and end_label[(t[1], not t[2])] == label]
            for circle in sides[label]
        ]
        return _rebuild(circles, G.signs, G.classical)

    return side(1), side(2)


def separating_state_formula(G: GaussDiagram, key: SeparatingStateKey, n: int) -> int:
    """sign(S) * sum_i c_i(label-1 part) * c_{n-|S|-i}(label-2 part)."""
    first, second = labelled_smoothing(G, key)
    sign = 1
    for a in key.arrows:
        sign *= G.signs[a]
    rest = n - len(key.arrows)
    c1, c2 = conway(first), conway(second)
    return sign * sum(c1[i] * c2[rest - i] for i in range(rest + 1))


# ---------------------------------------------------------------------------
# Request dispatch (used by the CLI)

KINDS = (
    "A", "D", "nablaA", "nablaD", "nablaAD", "A2", "D2", "AD",
    "I", "IA", "ID", "AIr", "DIr", "C", "P",
)
POLYNOMIAL_KINDS = {"nablaA", "nablaD", "nablaAD"}


@dataclass(frozen=True)
class InvariantRequest:
    kind: str
    diagram: GaussDiagram
    degree: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown invariant kind {self.kind!r}")
        if self.kind not in POLYNOMIAL_KINDS and self.degree is None:
            raise ValueError(f"invariant {self.kind} needs a degree")
        if self.kind in ("IA", "ID") and self.diagram.num_circles != 1:
            raise PreconditionError(f"{self.kind} is defined for knots only")

    def evaluate(self) -> IntPolynomial | int:
        G, n = self.diagram, self.degree
        match self.kind:
            case "nablaA":
                return conway(G, "asc")
            case "nablaD":
                return conway(G, "desc")
            case "nablaAD":
                return nabla_AD(G)
            case "A":
                return one_boundary_coeff(G, n, "asc")
            case "D":
                return one_boundary_coeff(G, n, "desc")
            case "A2":
                return two_boundary_coeff(G, n, "asc")
            case "D2":
                return two_boundary_coeff(G, n, "desc")
            case "AD":
                return AD_coeff(G, n)
            case "I":
                return I_coeff(G, n)
            case "IA":
                return knot_I_coeff(G, n, "asc")
            case "ID":
                return knot_I_coeff(G, n, "desc")
            case "AIr":
                return irreducible_coeff(G, n, "asc")
            case "DIr":
                return irreducible_coeff(G, n, "desc")
            case "C":
                return C_coeff(G, n)
            case "P":
                return p_coeff(G, n)
        raise AssertionError(self.kind)
