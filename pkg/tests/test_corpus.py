import pytest

from gdcalc import corpus
from gdcalc.gauss import base_point_positions, move_base_point, serialize, parse_gauss_code
from gdcalc.polynomial import IntPolynomial
from gdcalc.statesums import conway, one_boundary_coeff, two_boundary_coeff

EXPECTED = {
    "unknot", "unlink2", "kink-tail", "kink-head", "hopf", "trefoil", "figure-eight",
    "chain3", "torus-link-2-4", "virtual-trefoil", "virtual-hopf", "kishino",
    "kishino-moved", "mirror-knot", "mirror-knot-star", "basepoint-knot",
    "basepoint-knot-moved", "virtualization-before", "virtualization-after",
}


def poly(*c):
    return IntPolynomial(c)


def test_all_entries_present():
    assert set(corpus.names()) == EXPECTED


def test_names_match_files():
    for name, G in corpus.load_all().items():
        assert G.name == name


def test_unknown_entry():
    with pytest.raises(KeyError):
        corpus.load("no-such-knot")


def test_reconstructed_entries_are_marked():
    marked = {n for n in corpus.names() if "source: figure" in corpus.path(n).read_text()}
    assert {"kishino", "kishino-moved", "torus-link-2-4", "chain3", "basepoint-knot",
            "mirror-knot", "mirror-knot-star", "virtualization-before"} <= marked


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_serialize_round_trip(name):
    G = corpus.load(name)
    assert parse_gauss_code(serialize(G)) == G


def test_classical_partition():
    assert set(corpus.classical()) == {
        "unknot", "unlink2", "kink-tail", "kink-head", "hopf", "trefoil",
        "figure-eight", "chain3", "torus-link-2-4",
    }


def test_kishino_base_points():
    G, Gm = corpus.load("kishino"), corpus.load("kishino-moved")
    assert conway(G, "asc") == conway(Gm, "desc") == poly(1, 0, -2, 0, 1)
    assert conway(G, "desc") == conway(Gm, "asc") == 1
    assert any(move_base_point(G, 0, g).circles == Gm.circles for _, g in base_point_positions(G))


def test_basepoint_knot():
    G, Gm = corpus.load("basepoint-knot"), corpus.load("basepoint-knot-moved")
    assert conway(G, "asc") == conway(G, "desc") == poly(1, 0, 1)
    assert conway(Gm, "asc") == poly(1, 0, 2, 0, 1)
    assert conway(Gm, "desc") == 1
    assert any(move_base_point(G, 0, g).circles == Gm.circles for _, g in base_point_positions(G))


def test_mirror_pair():
    K, Ks = corpus.load("mirror-knot"), corpus.load("mirror-knot-star")
    assert conway(K, "asc") == conway(Ks, "desc") == poly(1, 0, 1)
    assert conway(Ks, "asc") == conway(K, "desc") == 1


def test_chain_of_three():
    assert conway(corpus.load("chain3")) == poly(0, 0, 1)


def test_virtual_trefoil_rotations():
    G = corpus.load("virtual-trefoil")
    rotated = move_base_point(G, 0, 2)
    assert (one_boundary_coeff(G, 2, "asc"), one_boundary_coeff(rotated, 2, "asc")) == (1, 0)
    assert (one_boundary_coeff(G, 2, "desc"), one_boundary_coeff(rotated, 2, "desc")) == (0, 1)


def test_trefoil_rotation_swaps_two_boundary():
    G = corpus.load("trefoil")
    rotated = move_base_point(G, 0, 1)
    assert (two_boundary_coeff(G, 3, "asc"), two_boundary_coeff(G, 3, "desc")) == (0, 1)
    assert (two_boundary_coeff(rotated, 3, "asc"), two_boundary_coeff(rotated, 3, "desc")) == (1, 0)
