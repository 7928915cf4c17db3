import pytest
from hypothesis import given

from conftest import classical_diagrams, unknot, virtual_diagrams
from gdcalc import corpus
from gdcalc.gauss import diagram, smooth_arrow, switch_crossing
from gdcalc.oracle import (
    ArrowDiagramClass,
    canonical_form,
    classify_arrow_diagram,
    conway_skein,
    enumerate_family,
    family_pairing_sum,
    first_bad_crossing,
    pairing,
)
from gdcalc.polynomial import IntPolynomial
from gdcalc.statesums import one_boundary_coeff, two_boundary_coeff
from gdcalc.trace import Direction

HOPF = diagram("O1+ U2+", "U1+ O2+", classical=True)
KINK = diagram("O1+ U1+", classical=True)
VTREFOIL = diagram("U1+ O2+ O1+ U2+")


class TestSkein:
    def test_unknot_and_unlinks(self):
        assert conway_skein(unknot()) == 1
        assert conway_skein(diagram("", "", classical=True)) == 0
        assert conway_skein(diagram("", "", "", classical=True)) == 0

    def test_trefoil(self):
        assert conway_skein(diagram("O1+ U2+ O3+ U1+ O2+ U3+", classical=True)) == IntPolynomial([1, 0, 1])

    def test_hopf(self):
        assert conway_skein(HOPF) == IntPolynomial([0, 1])

    def test_descending_diagram_has_no_bad_crossing(self):
        assert first_bad_crossing(KINK) is None
        assert first_bad_crossing(unknot()) is None

    def test_rejects_virtual(self):
        with pytest.raises(ValueError):
            conway_skein(VTREFOIL)

    @given(classical_diagrams())
    def test_skein_relation(self, G):
        for a in range(G.num_arrows):
            plus, minus = (G, switch_crossing(G, a)) if G.signs[a] > 0 else (switch_crossing(G, a), G)
            z = IntPolynomial({1: 1})
            assert conway_skein(plus) - conway_skein(minus) == z * conway_skein(smooth_arrow(G, a))


class TestFamilies:
    def test_sizes(self):
        assert len(enumerate_family(1, 1, 1, "asc")) == 0
        assert len(enumerate_family(2, 1, 1, "asc")) == 1
        assert len(enumerate_family(2, 2, 2, "asc")) == 5

    def test_unique_a21_is_interleaved(self):
        (A,) = enumerate_family(2, 1, 1, "asc")
        circle = A.to_diagram().circles[0]
        heads = [i for i, (_, head) in enumerate(circle) if head]
        assert heads == [0, 3]

    def test_members_classify_correctly(self):
        for n, m, b in [(2, 1, 1), (2, 2, 2), (3, 1, 2), (3, 2, 1)]:
            for mode, flag in (("asc", Direction.ASCENDING), ("desc", Direction.DESCENDING)):
                for A in enumerate_family(n, m, b, mode):
                    boundary, connected, direction = classify_arrow_diagram(A)
                    assert (boundary, connected) == (b, True)
                    assert flag in direction
                    assert (A.num_arrows, A.num_circles) == (n, m)

    def test_bounds(self):
        with pytest.raises(ValueError):
            enumerate_family(5, 1, 1)
        with pytest.raises(ValueError):
            enumerate_family(2, 3, 1)

    def test_canonical_form_merges_relabellings(self):
        a = ArrowDiagramClass.from_circles((((0, False), (1, False), (0, True), (1, True)),))
        b = ArrowDiagramClass.from_circles((((1, False), (0, False), (1, True), (0, True)),))
        assert a == b
        assert canonical_form(a.canonical_form) == a.canonical_form


class TestPairing:
    def test_empty_diagram_pairs_to_one(self):
        empty = ArrowDiagramClass.from_circles(((),))
        assert pairing(empty, diagram("O1+ U2+ O3+ U1+ O2+ U3+")) == 1

    def test_single_arrow_on_kink(self):
        same = ArrowDiagramClass.from_circles((((0, False), (0, True)),))
        opposite = ArrowDiagramClass.from_circles((((0, True), (0, False)),))
        assert pairing(same, KINK) == 1
        assert pairing(opposite, KINK) == 0

    def test_virtual_trefoil(self):
        assert family_pairing_sum(enumerate_family(2, 1, 1, "asc"), VTREFOIL) == 1
        assert one_boundary_coeff(VTREFOIL, 2, "asc") == 1

    def test_hopf_two_boundary(self):
        assert family_pairing_sum(enumerate_family(2, 2, 2, "asc"), HOPF) == 0
        assert two_boundary_coeff(HOPF, 2, "asc") == 0

    def test_empty_family(self):
        assert family_pairing_sum([], HOPF) == 0

    @pytest.mark.parametrize("name", [n for n in corpus.names() if corpus.load(n).num_circles <= 2])
    def test_corpus_equivalence(self, name):
        G = corpus.load(name)
        m = G.num_circles
        for n in range(4):
            for mode in ("asc", "desc"):
                assert family_pairing_sum(enumerate_family(n, m, 1, mode), G) == one_boundary_coeff(G, n, mode)
                assert family_pairing_sum(enumerate_family(n, m, 2, mode), G) == two_boundary_coeff(G, n, mode)

    @given(virtual_diagrams(max_circles=2, max_arrows=5))
    def test_random_equivalence(self, G):
        m = G.num_circles
        for n in range(3):
            for mode in ("asc", "desc"):
                assert family_pairing_sum(enumerate_family(n, m, 1, mode), G) == one_boundary_coeff(G, n, mode)
                assert family_pairing_sum(enumerate_family(n, m, 2, mode), G) == two_boundary_coeff(G, n, mode)
