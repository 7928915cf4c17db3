import pytest

from gdcalc import statesums, verify
from gdcalc.verify import SuiteConfig, run_suite

SMALL = SuiteConfig(seed=3, trials=15, max_arrows=9)


@pytest.mark.parametrize("name", sorted(verify.SUITES))
def test_suite_passes(name):
    result = run_suite(name, SMALL)
    assert result.ok, result.render()
    assert result.passed == SMALL.trials


def test_deterministic():
    a, b = run_suite("moves", SMALL), run_suite("moves", SMALL)
    assert a.render() == b.render()
    assert a.coverage == b.coverage


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope", SMALL)


def test_moves_suite_covers_every_local_move():
    result = run_suite("moves", SuiteConfig(seed=0, trials=60, max_arrows=10))
    assert set(verify.LOCAL_KINDS) <= set(result.coverage)


def _corrupt(monkeypatch, name, predicate, delta=1):
    real = getattr(statesums, name)

    def wrapped(G, n, *rest):
        value = real(G, n, *rest)
        return value + delta if predicate(G, n) else value

    monkeypatch.setattr(statesums, name, wrapped)


def test_detects_two_boundary_corruption(monkeypatch):
    # off by one whenever the diagram has an odd number of arrows
    _corrupt(monkeypatch, "two_boundary_coeff", lambda G, n: G.num_arrows % 2 == 1 and n == 2)
    result = run_suite("moves", SuiteConfig(seed=0, trials=40, max_arrows=10))
    assert not result.ok
    assert result.counterexample is not None
    assert result.counterexample.moves


def test_detects_irreducible_corruption(monkeypatch):
    _corrupt(monkeypatch, "irreducible_coeff", lambda G, n: n == 0)
    result = run_suite("irreducible", SMALL)
    assert result.failed > 0


def test_first_counterexample_has_smallest_index(monkeypatch):
    real = statesums.conway

    def based_on_head(G, mode="asc"):
        value = real(G, mode)
        starts_at_head = bool(G.circles[0]) and G.circles[0][0][1]
        return value + 1 if starts_at_head and G.num_arrows >= 3 else value

    monkeypatch.setattr(statesums, "conway", based_on_head)
    config = SuiteConfig(seed=1, trials=30, max_arrows=10)
    result = run_suite("basepoint", config)
    assert not result.ok
    first = next(
        i for i in range(config.trials)
        if not run_suite("basepoint", SuiteConfig(seed=1, trials=i + 1, max_arrows=10)).ok
    )
    assert result.counterexample.trial == first


def test_render_hides_moves_on_request():
    cex = verify.Counterexample(4, "O1+ U1+", "boom", ["start=unknot", "omega1-insert@c0g0;1,tail"])
    assert "moves:" in cex.render()
    assert "moves:" not in cex.render(show_moves=False)
