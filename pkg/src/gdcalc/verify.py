"""Seeded property suites over the corpus and random diagrams.

Each suite runs ``trials`` independent trials. Trial ``i`` draws from its own
generator seeded by ``(suite, seed, i)``, so any counterexample can be
replayed alone. Invariants are looked up through their modules at call time,
which lets tests substitute a deliberately broken implementation.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations

from . import corpus, gauss, moves, oracle, statesums, trace
from .gauss import GaussDiagram
from .polynomial import Z


@dataclass(frozen=True)
class SuiteConfig:
    seed: int = 0
    trials: int = 100
    max_arrows: int = 10


@dataclass
class Counterexample:
    trial: int
    diagram: str
    message: str
    moves: list[str] = field(default_factory=list)

    def render(self, show_moves: bool = True) -> str:
        lines = [f"trial {self.trial}: {self.message}", f"  diagram: {self.diagram}"]
        if self.moves and show_moves:
            lines.append("  moves: " + " ".join(self.moves))
        return "\n".join(lines)


@dataclass
class SuiteResult:
    suite: str
    passed: int = 0
    failed: int = 0
    counterexample: Counterexample | None = None
    coverage: Counter = field(default_factory=Counter)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def render(self, show_moves: bool = True) -> str:
        head = f"{self.suite}: {self.passed} passed, {self.failed} failed"
        if self.coverage:
            head += " (" + ", ".join(f"{k} x{v}" for k, v in sorted(self.coverage.items())) + ")"
        if self.counterexample is None:
            return head
        return head + "\n" + self.counterexample.render(show_moves)


class CheckFailed(AssertionError):
    pass


def check(cond: bool, message: str) -> None:
    if not cond:
        raise CheckFailed(message)


@dataclass
class Trial:
    """Per-trial context: generator, current diagram and the moves that built it."""

    index: int
    rng: random.Random
    max_arrows: int
    diagram: GaussDiagram | None = None
    history: list[str] = field(default_factory=list)
    coverage: Counter = field(default_factory=Counter)

    def classical(self, move_count: int = 6) -> GaussDiagram:
        pool = [G for G in corpus.classical().values() if G.num_arrows <= self.max_arrows]
        G = self.rng.choice(pool)
        self.history = [f"start={G.name}"]
        for _ in range(self.rng.randrange(move_count + 1)):
            step = moves.random_move(self.rng, G, self.max_arrows, realizable=True)
            if step is not None:
                G = step[0]
                self.history.append(step[1].encode())
        self.diagram = G
        return G

    def virtual(self, max_circles: int = 3, max_k: int = 7) -> GaussDiagram:
        k = self.rng.randint(1, min(self.max_arrows, max_k))
        m = self.rng.randint(1, max_circles)
        seed = self.rng.randrange(1 << 30)
        G = moves.random_diagram(seed, m, k)
        self.history = [f"random_diagram(seed={seed}, m={m}, k={k})"]
        self.diagram = G
        return G

    def any(self) -> GaussDiagram:
        return self.classical() if self.rng.random() < 0.5 else self.virtual()


def _run(name: str, config: SuiteConfig, body) -> SuiteResult:
    result = SuiteResult(name)
    for i in range(config.trials):
        t = Trial(i, random.Random(f"{name}:{config.seed}:{i}"), config.max_arrows)
        try:
            body(t)
        except CheckFailed as exc:
            result.failed += 1
            if result.counterexample is None:
                code = str(t.diagram) if t.diagram is not None else "-"
                result.counterexample = Counterexample(i, code, str(exc), list(t.history))
        else:
            result.passed += 1
        result.coverage.update(t.coverage)
    return result


def _upto(G: GaussDiagram, extra: int = 1) -> range:
    return range(G.num_arrows + extra + 1)


# ---------------------------------------------------------------------------
# Suites

def _skein_trial(t: Trial) -> None:
    G = t.any()
    if G.num_arrows == 0:
        G = t.virtual()
    a = t.rng.randrange(G.num_arrows)
    t.history.append(f"arrow={a + 1}")
    switched = gauss.switch_crossing(G, a)
    smoothed = gauss.smooth_arrow(G, a)
    plus, minus = (G, switched) if G.signs[a] > 0 else (switched, G)
    for mode in statesums.MODES:
        lhs = statesums.conway(plus, mode) - statesums.conway(minus, mode)
        rhs = Z * statesums.conway(smoothed, mode)
        check(lhs == rhs, f"conway skein ({mode}): {lhs} != {rhs}")
    if not G.classical:
        return
    smoothed = smoothed.with_classical(True)
    tail, head = G.arrows[a].tail, G.arrows[a].head
    m0 = smoothed.num_circles
    c_plus, c_minus = statesums.conway(plus), statesums.conway(minus)
    for n in _upto(G):
        rhs = statesums.AD_coeff(smoothed, n - 1) if n else 0
        if tail.circle == head.circle:
            # split: the two new circles sit at the old index and at the end
            x, y = tail.circle, m0 - 1
            for r in range(1, m0):
                for part in combinations(range(m0), r):
                    if (x in part) != (y in part):
                        rest = set(range(m0)) - set(part)
                        left = statesums.conway(gauss.sublink(smoothed, part))
                        right = statesums.conway(gauss.sublink(smoothed, rest))
                        rhs += sum(left[i] * right[n - 1 - i] for i in range(n))
        lhs = statesums.AD_coeff(plus, n) - statesums.AD_coeff(minus, n)
        check(lhs == rhs, f"AD skein at n={n}: {lhs} != {rhs}")
        if n:
            lhs = (statesums.p_coeff(plus, n) - statesums.p_coeff(minus, n)
                   + c_plus[n - 1] + c_minus[n - 1])
            rhs = statesums.p_coeff(smoothed, n - 1)
            check(lhs == rhs, f"p skein at n={n}: {lhs} != {rhs}")


def _tables(G: GaussDiagram, n_max: int, rows) -> tuple:
    return tuple(
        tuple(getattr(statesums, fn)(G, n, mode) for n in range(n_max + 1))
        for fn, mode in rows
    )


ONE_ROWS = [("one_boundary_coeff", "asc"), ("one_boundary_coeff", "desc")]
TWO_ROWS = [("two_boundary_coeff", "asc"), ("two_boundary_coeff", "desc")]


LOCAL_KINDS = ("omega1-delete", "omega1f-delete", "omega2-delete", "omega3-forward", "omega3-backward")


def plant_triangle(G: GaussDiagram, rng: random.Random) -> GaussDiagram:
    """Insert three arrows forming a triangle-move fragment at random gaps."""
    t_first, m_first, b_first, *signs = rng.choice(sorted(moves.omega3_signatures()))
    k = G.num_arrows
    tm, tb, mb = k, k + 1, k + 2
    top = [(tm, False), (tb, False)] if t_first else [(tb, False), (tm, False)]
    mid = [(tm, True), (mb, False)] if m_first else [(mb, False), (tm, True)]
    bot = [(tb, True), (mb, True)] if b_first else [(mb, True), (tb, True)]
    gaps = moves.insertion_gaps(G)
    runs = [(*rng.choice(gaps), run) for run in (top, mid, bot)]
    return moves._insert(G, runs, signs)


def _moves_trial(t: Trial) -> None:
    if t.rng.random() < 0.6:
        G = t.classical(move_count=8)
    else:
        G = t.virtual(max_k=min(6, t.max_arrows - 3))
        if t.rng.random() < 0.5:
            G = plant_triangle(G, t.rng)
            t.history.append("plant_triangle")
            t.diagram = G
    for site in moves.list_moves(G, LOCAL_KINDS):
        t.coverage[site.kind] += 1
        _check_move(G, moves.apply_move(G, site), site)
    kinds = list(moves.KINDS[:-1])
    for _ in range(3):
        step = moves.random_move(t.rng, G, t.max_arrows, kinds=kinds, realizable=G.classical)
        if step is None:
            return
        H, site = step
        t.coverage[site.kind] += 1
        t.history.append(site.encode())
        _check_move(G, H, site)
        if site.kind.endswith("-insert"):
            back = moves.apply_move(H, moves.inverse_site(G, site))
            same = (back.circles, back.signs) == (G.circles, G.signs)
            check(same, f"{site.kind} then its deletion gave {back}, not {G}")
        t.diagram = G = H


def _check_move(G: GaussDiagram, H: GaussDiagram, site) -> None:
    n_max = max(G.num_arrows, H.num_arrows) + 1
    kind = site.kind
    if kind.startswith(("omega2", "omega3")):
        check(_tables(G, n_max, ONE_ROWS) == _tables(H, n_max, ONE_ROWS),
              f"{kind} changed a one-boundary coefficient")
        # the two-boundary argument for the triangle move needs classical sublinks
        if kind.startswith("omega2") or G.classical:
            check(_tables(G, n_max, TWO_ROWS) == _tables(H, n_max, TWO_ROWS),
                  f"{kind} changed a two-boundary coefficient")
        return
    if kind.startswith("omega1f"):
        for n in range(n_max + 1):
            check(statesums.AD_coeff(G, n) == statesums.AD_coeff(H, n),
                  f"{kind} changed AD at n={n}")
        return
    if kind.startswith("omega1"):
        for mode in statesums.MODES:
            check(statesums.conway(G, mode) == statesums.conway(H, mode),
                  f"{kind} changed conway ({mode})")
        small, big = (G, H) if kind.endswith("insert") else (H, G)
        arrow = big.num_arrows - 1 if kind.endswith("insert") else site.location[0]
        eps = big.signs[arrow]
        tail_first = moves._kink_kind(big, arrow) == "tail"
        for n in range(n_max + 1):
            if small.classical:
                delta = statesums.AD_coeff(big, n) - statesums.AD_coeff(small, n)
                expect = eps * statesums.one_boundary_coeff(small, n - 1, "asc")
                check(delta == expect, f"{kind}: AD_{n} moved by {delta}, expected {expect}")
                check(statesums.I_coeff(big, n) == statesums.I_coeff(small, n),
                      f"{kind} changed I at n={n}")
            else:
                # a tail-first kink adds a descending state, a head-first one an ascending state
                mode = "desc" if tail_first else "asc"
                delta = (statesums.two_boundary_coeff(big, n, mode)
                         - statesums.two_boundary_coeff(small, n, mode))
                expect = eps * statesums.one_boundary_coeff(small, n - 1, mode)
                check(delta == expect, f"{kind}: {mode} two-boundary moved by {delta}, expected {expect}")


def _basepoint_trial(t: Trial) -> None:
    G = t.classical()
    ref_a, ref_d = statesums.conway(G, "asc"), statesums.conway(G, "desc")
    ref_ad = [statesums.AD_coeff(G, n) for n in _upto(G)]
    for circle, gap in gauss.base_point_positions(G):
        H = gauss.move_base_point(G, circle, gap)
        where = f"base point at circle {circle + 1} gap {gap}"
        check(statesums.conway(H, "asc") == ref_a, f"{where}: conway asc changed")
        check(statesums.conway(H, "desc") == ref_d, f"{where}: conway desc changed")
        ad = [statesums.AD_coeff(H, n) for n in _upto(G)]
        check(ad == ref_ad, f"{where}: AD {ad} != {ref_ad}")


def _oracle_trial(t: Trial) -> None:
    G = t.classical()
    skein = oracle.conway_skein(G)
    for mode in statesums.MODES:
        value = statesums.conway(G, mode)
        check(value == skein, f"conway {mode} {value} != skein oracle {skein}")
    H = t.virtual(max_circles=2, max_k=5) if t.rng.random() < 0.5 else G
    if H.num_circles <= oracle.MAX_FAMILY_CIRCLES:
        _check_pairings(H)


def _check_pairings(G: GaussDiagram, n_max: int = 3) -> None:
    m = G.num_circles
    for n in range(n_max + 1):
        for boundary, fn in ((1, "one_boundary_coeff"), (2, "two_boundary_coeff")):
            for mode in statesums.MODES:
                family = _family(n, m, boundary, mode)
                got = oracle.family_pairing_sum(family, G)
                want = getattr(statesums, fn)(G, n, mode)
                check(got == want, f"pairing sum b={boundary} {mode} n={n}: {got} != {want}")


_FAMILIES: dict = {}


def _family(n: int, m: int, boundary: int, mode: str):
    key = (n, m, boundary, mode)
    if key not in _FAMILIES:
        _FAMILIES[key] = oracle.enumerate_family(n, m, boundary, mode)
    return _FAMILIES[key]


def _separating_groups_trial(t: Trial) -> None:
    G = t.classical()
    for mode in statesums.MODES:
        for n in _upto(G, 0):
            groups = statesums.grouped_two_boundary(G, n, mode)
            total = sum(groups.values())
            check(total == statesums.two_boundary_coeff(G, n, mode),
                  f"groups at n={n} ({mode}) do not sum to the coefficient")
            for key, value in groups.items():
                formula = statesums.separating_state_formula(G, key, n)
                arrows = sorted(a + 1 for a in key.arrows)
                check(value == formula,
                      f"separating state {arrows} ({mode}, n={n}): sum {value} != formula {formula}")


def _irreducible_trial(t: Trial) -> None:
    G = t.classical()
    for n in _upto(G):
        a = statesums.irreducible_coeff(G, n, "asc")
        d = statesums.irreducible_coeff(G, n, "desc")
        check(a == d, f"irreducible asc {a} != desc {d} at n={n}")
    if G.num_circles != 2:
        return
    lk = gauss.linking_number(G)
    c1 = statesums.conway(gauss.sublink(G, [0]))
    c2 = statesums.conway(gauss.sublink(G, [1]))
    for n in _upto(G):
        reducible = statesums.one_boundary_coeff(G, n, "asc") - statesums.irreducible_coeff(G, n, "asc")
        expect = lk * sum(c1[k] * c2[n - k - 1] for k in range(n))
        check(reducible == expect, f"reducible part at n={n}: {reducible} != {expect}")


def _structural_trial(t: Trial) -> None:
    G = t.any()
    m = G.num_circles
    for mask in range(1 << G.num_arrows):
        st = trace.State.from_mask(G, mask)
        rep = trace.trace(st)
        label = f"state {sorted(a + 1 for a in st.members)}"
        check(rep.euler == m - len(st), f"{label}: chi {rep.euler} != m - |S|")
        check((rep.boundary_count - rep.euler) % 2 == 0, f"{label}: b and chi differ in parity")
        check(rep.genus >= 0, f"{label}: negative genus")
        crossings: dict[int, int] = {}
        seen_arcs = set()
        for cyc in rep.cycles:
            for step in cyc:
                crossings[step.arrow] = crossings.get(step.arrow, 0) + 1
                check(step.endpoint not in seen_arcs, f"{label}: arc ending at {step.endpoint} visited twice")
                seen_arcs.add(step.endpoint)
        check(all(crossings.get(a, 0) == 2 for a in st.members), f"{label}: a band is not crossed twice")
        check(len(seen_arcs) == 2 * len(st), f"{label}: not every arc visited")
        b, connected, _ = trace.layout(G).classify(mask)
        check((b, connected) == (rep.boundary_count, rep.connected), f"{label}: fast classifier disagrees")


def _algebra_trial(t: Trial) -> None:
    G = t.any()
    H = t.virtual(max_circles=2, max_k=4) if not G.classical else t.classical(move_count=2)
    t.diagram = G
    S = gauss.connected_sum(G, H)
    for mode in statesums.MODES:
        lhs = statesums.conway(S, mode)
        rhs = statesums.conway(G, mode) * statesums.conway(H, mode)
        check(lhs == rhs, f"conway of connected sum ({mode}): {lhs} != {rhs}")
    if not G.classical:
        return
    for n in _upto(G):
        p, i, c = statesums.p_coeff(G, n), statesums.I_coeff(G, n), statesums.C_coeff(G, n)
        check(p == i + c, f"p_{n} = {p} but I + C = {i + c}")
        if G.num_circles == 1:
            ia = statesums.knot_I_coeff(G, n, "asc")
            idd = statesums.knot_I_coeff(G, n, "desc")
            check(ia + idd == i == p, f"knot n={n}: I_A + I_D = {ia + idd}, I = {i}, p = {p}")
    m = t.rng.randint(1, 4)
    unlink = GaussDiagram(((),) * m, (), True)
    for n in range(3):
        expect = 2 if (n, m) == (0, 2) else 0
        check(statesums.p_coeff(unlink, n) == expect, f"p_{n} of the {m}-component unlink")


SUITES = {
    "skein": _skein_trial,
    "moves": _moves_trial,
    "basepoint": _basepoint_trial,
    "oracle": _oracle_trial,
    "lemma41": _separating_groups_trial,
    "irreducible": _irreducible_trial,
    "structural": _structural_trial,
    "algebra": _algebra_trial,
}


def run_suite(name: str, config: SuiteConfig = SuiteConfig()) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return _run(name, config, SUITES[name])


def run_all(config: SuiteConfig = SuiteConfig()) -> list[SuiteResult]:
    return [run_suite(name, config) for name in SUITES]
