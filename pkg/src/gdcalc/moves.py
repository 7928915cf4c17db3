"""Reidemeister moves on based Gauss diagrams, and seeded random diagrams.

Insertion gaps are indices into a circle's endpoint list. On circle 0 the
valid indices are ``0..len`` (the base point sits before index 0 and after
index ``len``, so no inserted fragment ever contains it); on other circles
they are ``0..len-1`` read cyclically. Two endpoints are adjacent when they
are consecutive on a circle without the base point between them.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

from .gauss import GaussDiagram, _rebuild

KINDS = (
    "omega1-insert",
    "omega1-delete",
    "omega1f-insert",
    "omega1f-delete",
    "omega2-insert",
    "omega2-delete",
    "omega3-forward",
    "omega3-backward",
    "virtualize",
)


class StaleMoveError(ValueError):
    """The move site does not exist in the given diagram."""


@dataclass(frozen=True)
class MoveSite:
    kind: str
    location: tuple
    params: tuple = ()

    def encode(self) -> str:
        loc = ",".join(_enc(x) for x in self.location)
        par = ",".join(_enc(x) for x in self.params)
        return f"{self.kind}@{loc}" + (f";{par}" if par else "")

    @classmethod
    def decode(cls, text: str) -> MoveSite:
        kind, _, rest = text.partition("@")
        loc, _, par = rest.partition(";")
        if kind not in KINDS:
            raise ValueError(f"unknown move kind {kind!r}")
        return cls(kind, tuple(_dec(x) for x in loc.split(",") if x),
                   tuple(_dec(x) for x in par.split(",") if x))

    def __str__(self) -> str:
        return self.encode()


def _enc(x) -> str:
    if isinstance(x, tuple):
        return "c{}g{}".format(*x) if len(x) == 2 else "e{}p{}:{}".format(*x)
    if isinstance(x, bool):
        return "T" if x else "F"
    return str(x)


def _dec(s: str):
    if s.startswith("c") and "g" in s:
        c, g = s[1:].split("g")
        return (int(c), int(g))
    if s.startswith("e"):
        c, rest = s[1:].split("p")
        p, q = rest.split(":")
        return (int(c), int(p), int(q))
    if s in ("T", "F"):
        return s == "T"
    if s in ("head", "tail", "parallel", "reverse"):
        return s
    return int(s)


# ---------------------------------------------------------------------------
# Positions

def insertion_gaps(G: GaussDiagram) -> list[tuple[int, int]]:
    gaps = [(0, g) for g in range(len(G.circles[0]) + 1)]
    for ci, c in enumerate(G.circles[1:], 1):
        gaps.extend((ci, g) for g in range(max(len(c), 1)))
    return gaps


def _adjacent(G: GaussDiagram, ci: int, p: int, q: int) -> bool:
    """Is position q immediately after position p on circle ci?"""
    n = len(G.circles[ci])
    if ci == 0:
        return q == p + 1
    return n >= 2 and q == (p + 1) % n and p != q


def adjacent_fragments(G: GaussDiagram) -> list[tuple[int, int, int]]:
    """(circle, p, q) for every adjacent pair of endpoints."""
    out = []
    for ci, c in enumerate(G.circles):
        n = len(c)
        if ci == 0:
            out.extend((0, p, p + 1) for p in range(n - 1))
        elif n >= 2:
            out.extend((ci, p, (p + 1) % n) for p in range(n if n > 2 else 1))
    return out


def _insert(G: GaussDiagram, inserts, new_signs) -> GaussDiagram:
    """Insert token runs; ``inserts`` is a list of (circle, gap, tokens)."""
    circles = [list(c) for c in G.circles]
    # later gaps first so earlier indices stay valid; same-gap runs keep list order
    order = sorted(range(len(inserts)), key=lambda i: (inserts[i][0], -inserts[i][1], -i))
    for i in order:
        ci, g, toks = inserts[i]
        circles[ci][g:g] = toks
    return GaussDiagram(tuple(map(tuple, circles)), G.signs + tuple(new_signs),
                        G.classical, G.name)


def _delete(G: GaussDiagram, arrows) -> GaussDiagram:
    drop = set(arrows)
    circles = [[s for s in c if s[0] not in drop] for c in G.circles]
    return _rebuild(circles, G.signs, G.classical, G.name)


# ---------------------------------------------------------------------------
# Omega 3 signatures from line arrangements

@lru_cache(maxsize=1)
def omega3_signatures() -> frozenset:
    """Valid (T order, M order, B order, s_TM, s_TB, s_MB) patterns.

    Orders are booleans: T meets the T->M arrow first, M meets the T->M
    arrow first, B meets the T->B arrow first. Derived from every
    arrangement of three directed lines forming a triangle, on both sides
    of the move, for every assignment of heights.
    """
    out = set()
    dirs = [(math.cos(2 * math.pi * j / 16), math.sin(2 * math.pi * j / 16)) for j in range(16)]

    def cross(u, v):
        return u[0] * v[1] - u[1] * v[0]

    def meet(p, d, q, e):
        # parameter t along line p + t d where it meets line q + s e
        den = cross(d, e)
        return cross((q[0] - p[0], q[1] - p[1]), e) / den

    for i, j, k in permutations(range(16), 3):
        d = [dirs[i], dirs[j], dirs[k]]
        if any(abs(cross(d[x], d[y])) < 1e-9 for x, y in combinations(range(3), 2)):
            continue
        for side in (1, -1):
            normal = (-d[2][1], d[2][0])
            pts = [(0.0, 0.0), (0.0, 0.0), (side * normal[0], side * normal[1])]
            t = {}
            for x in range(3):
                for y in range(3):
                    if x != y:
                        t[x, y] = meet(pts[x], d[x], pts[y], d[y])
            for top, mid, bot in permutations(range(3)):
                sig = (
                    t[top, mid] < t[top, bot],
                    t[mid, top] < t[mid, bot],
                    t[bot, top] < t[bot, mid],
                    1 if cross(d[top], d[mid]) > 0 else -1,
                    1 if cross(d[top], d[bot]) > 0 else -1,
                    1 if cross(d[mid], d[bot]) > 0 else -1,
                )
                out.add(sig)
    return frozenset(out)


def _omega3_sites(G: GaussDiagram) -> list[MoveSite]:
    frags = []
    for ci, p, q in adjacent_fragments(G):
        s1, s2 = G.circles[ci][p], G.circles[ci][q]
        if s1[0] != s2[0]:
            frags.append((ci, p, q))
    by_pair: dict[frozenset, list] = {}
    for f in frags:
        ci, p, q = f
        key = frozenset((G.circles[ci][p][0], G.circles[ci][q][0]))
        by_pair.setdefault(key, []).append(f)
    sites = set()
    sigs = omega3_signatures()
    for key, fs in by_pair.items():
        a, b = sorted(key)
        for c in range(G.num_arrows):
            if c in key:
                continue
            for f1 in fs:
                for f2 in by_pair.get(frozenset((a, c)), []):
                    for f3 in by_pair.get(frozenset((b, c)), []):
                        ends = set()
                        for ci, p, q in (f1, f2, f3):
                            ends.add((ci, p))
                            ends.add((ci, q))
                        if len(ends) != 6:
                            continue
                        site = _classify_triangle(G, (f1, f2, f3), sigs)
                        if site is not None:
                            sites.add(site)
    return sorted(sites, key=lambda s: s.encode())


def _classify_triangle(G, frags, sigs) -> MoveSite | None:
    roles = {}
    for f in frags:
        ci, p, q = f
        heads = G.circles[ci][p][1] + G.circles[ci][q][1]
        roles[{0: "T", 1: "M", 2: "B"}[heads]] = f
    if len(roles) != 3:
        return None
    slot = lambda f, i: G.circles[f[0]][f[1 + i]]
    T, M, B = roles["T"], roles["M"], roles["B"]
    t_arrows = {slot(T, 0)[0], slot(T, 1)[0]}
    b_arrows = {slot(B, 0)[0], slot(B, 1)[0]}
    m_tail = next(s[0] for s in (slot(M, 0), slot(M, 1)) if not s[1])
    m_head = next(s[0] for s in (slot(M, 0), slot(M, 1)) if s[1])
    tm, mb = m_head, m_tail
    if tm not in t_arrows or mb not in b_arrows:
        return None
    (tb,) = t_arrows - {tm}
    if tb not in b_arrows:
        return None
    sig = (
        slot(T, 0)[0] == tm,
        slot(M, 0)[0] == tm,
        slot(B, 0)[0] == tb,
        G.signs[tm], G.signs[tb], G.signs[mb],
    )
    if sig not in sigs:
        return None
    kind = "omega3-forward" if sig[0] else "omega3-backward"
    return MoveSite(kind, tuple(sorted(frags)), (tm, tb, mb))


# ---------------------------------------------------------------------------
# Site enumeration

def list_moves(G: GaussDiagram, kinds=None) -> list[MoveSite]:
    kinds = set(KINDS if kinds is None else kinds)
    sites: list[MoveSite] = []
    gaps = insertion_gaps(G)
    if "omega1-insert" in kinds:
        for gap in gaps:
            for eps in (1, -1):
                for first in ("tail", "head"):
                    sites.append(MoveSite("omega1-insert", (gap,), (eps, first)))
    if "omega1f-insert" in kinds:
        for gap in gaps:
            for eps in (1, -1):
                for first in ("tail", "head"):
                    sites.append(MoveSite("omega1f-insert", (gap,), (eps, first)))
    if "omega2-insert" in kinds:
        for i, g1 in enumerate(gaps):
            for g2 in gaps[i:]:
                for eps in (1, -1):
                    for over in (1, 2):
                        for order in ("parallel", "reverse"):
                            sites.append(MoveSite("omega2-insert", (g1, g2), (eps, over, order)))
    isolated = [a for a in range(G.num_arrows) if _isolated(G, a)]
    if "omega1-delete" in kinds:
        sites.extend(MoveSite("omega1-delete", (a,)) for a in isolated)
    if "omega1f-delete" in kinds:
        for a in isolated:
            for b in isolated:
                if (a != b and G.signs[a] == -G.signs[b] and _kink_follows(G, a, b)
                        and _kink_kind(G, a) == _kink_kind(G, b)):
                    sites.append(MoveSite("omega1f-delete", (a, b)))
    if "omega2-delete" in kinds:
        for a, b in combinations(range(G.num_arrows), 2):
            if _omega2_pair(G, a, b):
                sites.append(MoveSite("omega2-delete", (a, b)))
    if kinds & {"omega3-forward", "omega3-backward"}:
        sites.extend(s for s in _omega3_sites(G) if s.kind in kinds)
    if "virtualize" in kinds:
        sites.extend(MoveSite("virtualize", (a,)) for a in range(G.num_arrows))
    return sites


def _ends_adjacent(G: GaussDiagram, e1, e2) -> bool:
    if e1.circle != e2.circle:
        return False
    return _adjacent(G, e1.circle, e1.position, e2.position) or _adjacent(
        G, e1.circle, e2.position, e1.position
    )


def _isolated(G: GaussDiagram, a: int) -> bool:
    arr = G.arrows[a]
    return _ends_adjacent(G, arr.tail, arr.head)


def _first_last(G: GaussDiagram, a: int):
    """Positions of a kink's two endpoints in circle order."""
    arr = G.arrows[a]
    p, q = arr.tail.position, arr.head.position
    return (p, q) if _adjacent(G, arr.tail.circle, p, q) else (q, p)


def _kink_kind(G: GaussDiagram, a: int) -> str:
    arr = G.arrows[a]
    return "tail" if _adjacent(G, arr.tail.circle, arr.tail.position, arr.head.position) else "head"


def _kink_follows(G: GaussDiagram, a: int, b: int) -> bool:
    """Kink b starts right after kink a ends."""
    ca, cb = G.arrows[a].tail.circle, G.arrows[b].tail.circle
    if ca != cb:
        return False
    _, a_last = _first_last(G, a)
    b_first, _ = _first_last(G, b)
    return _adjacent(G, ca, a_last, b_first)


def _omega2_pair(G: GaussDiagram, a: int, b: int) -> bool:
    if G.signs[a] != -G.signs[b]:
        return False
    A, B = G.arrows[a], G.arrows[b]
    return _ends_adjacent(G, A.tail, B.tail) and _ends_adjacent(G, A.head, B.head)


# ---------------------------------------------------------------------------
# Application

def apply_move(G: GaussDiagram, site: MoveSite) -> GaussDiagram:
    if site.kind.endswith("-insert"):
        _check_gaps(G, site.location)
    elif site not in list_moves(G, [site.kind]):
        raise StaleMoveError(f"{site} is not a valid site of {G}")
    k = G.num_arrows
    match site.kind:
        case "omega1-insert":
            ((ci, g),) = site.location
            eps, first = site.params
            toks = [(k, False), (k, True)] if first == "tail" else [(k, True), (k, False)]
            return _insert(G, [(ci, g, toks)], [eps])
        case "omega1f-insert":
            ((ci, g),) = site.location
            eps, first = site.params
            run = []
            for arrow in (k, k + 1):
                run += [(arrow, False), (arrow, True)] if first == "tail" else [(arrow, True), (arrow, False)]
            return _insert(G, [(ci, g, run)], [eps, -eps])
        case "omega2-insert":
            (c1, g1), (c2, g2) = site.location
            eps, over, order = site.params
            frag1 = [k, k + 1]
            frag2 = [k, k + 1] if order == "parallel" else [k + 1, k]
            head1 = over == 2
            run1 = [(a, head1) for a in frag1]
            run2 = [(a, not head1) for a in frag2]
            H = _insert(G, [(c1, g1, run1), (c2, g2, run2)], [eps, -eps])
            # two arbitrary gaps need not face a common region of the plane
            if H.classical and not is_realizable(H):
                H = H.with_classical(False)
            return H
        case "omega1-delete" | "omega1f-delete" | "omega2-delete":
            return _delete(G, site.location)
        case "omega3-forward" | "omega3-backward":
            circles = [list(c) for c in G.circles]
            for ci, p, q in site.location:
                circles[ci][p], circles[ci][q] = circles[ci][q], circles[ci][p]
            return GaussDiagram(tuple(map(tuple, circles)), G.signs, G.classical, G.name)
        case "virtualize":
            return virtualize(G, site.location[0])
    raise ValueError(f"unknown move kind {site.kind!r}")


def _check_gaps(G: GaussDiagram, gaps) -> None:
    valid = set(insertion_gaps(G))
    for gap in gaps:
        if tuple(gap) not in valid:
            raise StaleMoveError(f"gap {gap} is not an insertion gap of {G}")


def inverse_site(G: GaussDiagram, site: MoveSite) -> MoveSite:
    """The deletion undoing an insertion applied to ``G``."""
    k = G.num_arrows
    match site.kind:
        case "omega1-insert":
            return MoveSite("omega1-delete", (k,))
        case "omega1f-insert":
            return MoveSite("omega1f-delete", (k, k + 1))
        case "omega2-insert":
            return MoveSite("omega2-delete", (k, k + 1))
    raise ValueError(f"{site.kind} has no deletion inverse")


def virtualize(G: GaussDiagram, arrow: int, keep_sign: bool = True) -> GaussDiagram:
    """Virtualization move: reverse the arrow; by default its sign is kept."""
    if not 0 <= arrow < G.num_arrows:
        raise IndexError(f"arrow index {arrow} out of range")
    circles = tuple(
        tuple((a, not h) if a == arrow else (a, h) for a, h in c) for c in G.circles
    )
    signs = list(G.signs)
    if not keep_sign:
        signs[arrow] = -signs[arrow]
    return GaussDiagram(circles, tuple(signs), False, G.name)


# ---------------------------------------------------------------------------
# Realizability guard for random classical diagrams

def carter_genus(G: GaussDiagram) -> int:
    """Total genus of the surface carrying the diagram's shadow.

    Zero iff every connected piece of the diagram is drawable in the plane.
    Each crossing's cyclic order of half-edges is fixed by its sign.
    """
    k = G.num_arrows
    if k == 0:
        return 0
    # half-edge ids: 4 * arrow + slot, slot 0 over-out, 1 under-out, 2 over-in, 3 under-in
    rot = {}
    for a, s in enumerate(G.signs):
        cyc = [0, 1, 2, 3] if s > 0 else [0, 3, 2, 1]
        for i, h in enumerate(cyc):
            rot[4 * a + h] = 4 * a + cyc[(i + 1) % 4]
    opp = {}
    for c in G.circles:
        n = len(c)
        for p in range(n):
            a, is_head = c[p]
            b, b_head = c[(p + 1) % n]
            out = 4 * a + (1 if is_head else 0)
            inn = 4 * b + (3 if b_head else 2)
            opp[out] = inn
            opp[inn] = out
    # components of the shadow: arrows linked through shared circles
    parent = list(range(k))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c in G.circles:
        for a, _ in c[1:]:
            ra, rb = find(a), find(c[0][0])
            parent[ra] = rb
    faces: dict[int, int] = {}
    seen = set()
    for d in rot:
        if d in seen:
            continue
        x = d
        while x not in seen:
            seen.add(x)
            x = rot[opp[x]]
        r = find(d // 4)
        faces[r] = faces.get(r, 0) + 1
    genus = 0
    for r in faces:
        v = sum(1 for a in range(k) if find(a) == r)
        e = 2 * v
        genus += (2 - (v - e + faces[r])) // 2
    return genus


def is_realizable(G: GaussDiagram) -> bool:
    return carter_genus(G) == 0


# ---------------------------------------------------------------------------
# Random diagrams

def random_diagram(seed: int, m: int, k: int) -> GaussDiagram:
    """Random signed diagram with k arrows on m circles (not flagged classical).

    Circles 1..m-1 each receive at least one endpoint when k >= 1.
    """
    if m < 1 or k < 0:
        raise ValueError("need m >= 1 and k >= 0")
    if m - 1 > 2 * k:
        raise ValueError(f"cannot give {m - 1} non-based circles an endpoint with {k} arrows")
    rng = random.Random(seed)
    owners = list(range(1, m)) + [rng.randrange(m) for _ in range(2 * k - (m - 1))]
    rng.shuffle(owners)
    tokens = []
    for a in range(k):
        tokens += [(a, False), (a, True)]
    rng.shuffle(tokens)
    circles = [[] for _ in range(m)]
    for owner, tok in zip(owners, tokens):
        circles[owner].append(tok)
    signs = tuple(rng.choice((1, -1)) for _ in range(k))
    return GaussDiagram(tuple(map(tuple, circles)), signs, False)


CLASSICAL_MOVE_KINDS = (
    "omega1-insert", "omega1-delete", "omega1f-insert", "omega1f-delete",
    "omega2-insert", "omega2-delete", "omega3-forward", "omega3-backward",
)


def random_move(rng: random.Random, G: GaussDiagram, max_arrows: int | None = None,
                kinds=CLASSICAL_MOVE_KINDS, realizable: bool = False,
                attempts: int = 50) -> tuple[GaussDiagram, MoveSite] | None:
    """Apply one random move, retrying until the constraints hold."""
    kinds = list(kinds)
    for _ in range(attempts):
        kind = rng.choice(kinds)
        growth = {"omega1-insert": 1, "omega1f-insert": 2, "omega2-insert": 2}.get(kind, 0)
        if max_arrows is not None and G.num_arrows + growth > max_arrows:
            continue
        sites = list_moves(G, [kind])
        if not sites:
            continue
        site = rng.choice(sites)
        H = apply_move(G, site)
        if realizable and not is_realizable(H):
            continue
        return H, site
    return None


def random_classical(seed: int, start: GaussDiagram, move_count: int,
                     max_arrows: int = 12) -> GaussDiagram:
    """Perturb a classical diagram by random Reidemeister moves.

    Only moves whose result is still drawable in the plane are taken, so the
    result stays a genuine classical diagram.
    """
    rng = random.Random(seed)
    G = start
    for _ in range(move_count):
        step = random_move(rng, G, max_arrows, realizable=True)
        if step is not None:
            G = step[0]
    return G
