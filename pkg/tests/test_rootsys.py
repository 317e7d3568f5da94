from itertools import product
from math import comb

import pytest

from minlines.rootsys import (
    DynkinType, RootSystemError, build_root_system, parse_type, weyl_group_order,
)
from minlines.weyl import enumerate_group


POSITIVE_COUNTS = {
    "A1": 1, "A3": 6, "A4": 10, "A7": 28, "B3": 9, "C3": 9, "D4": 12, "D5": 20,
    "E6": 36, "E7": 63, "E8": 120, "F4": 24, "G2": 6,
}

# Coxeter number h; the highest root has height h - 1
COXETER = {"A4": 5, "B3": 6, "C3": 6, "D5": 8, "E6": 12, "E7": 18, "E8": 30, "F4": 12, "G2": 6}

MINUSCULE = {
    "A4": [1, 2, 3, 4], "B3": [3], "C3": [1], "D4": [1, 3, 4], "D6": [1, 5, 6],
    "E6": [1, 6], "E7": [7], "E8": [], "F4": [], "G2": [],
}


@pytest.mark.parametrize("name,count", sorted(POSITIVE_COUNTS.items()))
def test_positive_root_count(name, count):
    assert len(build_root_system(name).positive_roots) == count


@pytest.mark.parametrize("name,h", sorted(COXETER.items()))
def test_highest_root_height_is_coxeter_number_minus_one(name, h):
    R = build_root_system(name)
    hr = R.highest_root()
    assert sum(hr) == h - 1
    # dominant: pairs non-negatively with every simple coroot
    assert all(R.pairing(hr, R.coroot(R.simple_root(i))) >= 0 for i in R.simple_indices)


def test_e7_highest_root():
    assert build_root_system("E7").highest_root() == (2, 2, 3, 4, 3, 2, 1)


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "D4", "G2", "A1xA2"])
def test_enumerated_weyl_group_has_formula_order(name):
    R = build_root_system(name)
    expected = 1
    for t in R.types:
        expected *= weyl_group_order(t)
    assert len(enumerate_group(R)) == expected


@pytest.mark.parametrize("name,nodes", sorted(MINUSCULE.items()))
def test_minuscule_nodes(name, nodes):
    R = build_root_system(name)
    assert [i for i in sorted(R.simple_indices) if R.is_minuscule_node(i)] == nodes


def test_cartan_convention_in_b3():
    # cartan[i][j] = <alpha_j, alpha_i^v>; alpha_3 short
    R = build_root_system("B3")
    assert R.cartan[2][1] == -2 and R.cartan[1][2] == -1


def test_coroots_in_simple_coroot_coordinates():
    # alpha_3 short in B3: (alpha_2 + alpha_3)^v = 2 alpha_2^v + alpha_3^v
    R = build_root_system("B3")
    assert R.coroot((0, 0, 1)) == (0, 0, 1)
    assert R.coroot((0, 1, 1)) == (0, 2, 1)
    assert R.coroot((1, 1, 0)) == (1, 1, 0)


@pytest.mark.parametrize("name", ["A4", "B3", "C3", "D4", "G2", "F4"])
def test_reflections_are_involutions_preserving_roots(name):
    R = build_root_system(name)
    roots = list(R.positive_roots) + [tuple(-c for c in b) for b in R.positive_roots]
    for i, b in product(R.simple_indices, roots):
        r = R.reflect(i, b)
        assert R.is_root(r)
        assert R.reflect(i, r) == b


@pytest.mark.parametrize("name", ["A4", "B3", "G2"])
def test_coroot_pairing_of_root_with_itself_is_two(name):
    R = build_root_system(name)
    for b in R.positive_roots:
        assert R.pairing(b, R.coroot(b)) == 2
        assert R.root_of_coroot(R.coroot(b)) == b


def test_type_a_roots_are_intervals():
    R = build_root_system("A5")
    assert len(R.positive_roots) == comb(6, 2)
    for b in R.positive_roots:
        s = "".join(map(str, b)).strip("0")
        assert set(s) == {"1"}


def test_parse_type_products_and_case():
    assert parse_type("a1xA2") == (DynkinType("A", 1), DynkinType("A", 2))
    assert build_root_system("A1xA2").rank == 3
    assert not build_root_system("A1xA2").irreducible


@pytest.mark.parametrize("bad", ["E9", "B1", "H3", "A0", "", "A", "F5"])
def test_invalid_types_rejected(bad):
    with pytest.raises(RootSystemError):
        build_root_system(bad)


def test_highest_root_needs_irreducible_system():
    with pytest.raises(RootSystemError):
        build_root_system("A1xA1").highest_root()


def test_pairing_length_mismatch():
    R = build_root_system("A3")
    with pytest.raises(RootSystemError):
        R.pairing((1, 0), (1, 0, 0))


def test_fundamental_weight_check():
    R = build_root_system("A3")
    with pytest.raises(RootSystemError):
        R.is_minuscule_weight((1, 1, 0))


@pytest.mark.parametrize("name,J,expected", [
    ("A4", [1, 3, 4], "A1xA2"),
    ("E7", [1, 2, 3, 4, 5, 6], "E6"),
    ("D5", [2, 3, 4, 5], "D4"),
    ("D5", [1, 2, 3, 4], "A4"),
    ("E6", [1, 3, 4, 5, 6], "A5"),
    ("B3", [2, 3], "B2"),
    ("C3", [2, 3], "B2"),  # rank two double bonds are always labelled B2
    ("F4", [1, 2, 3], "B3"),
    ("F4", [2, 3, 4], "C3"),
    ("A3", [], "trivial"),
])
def test_levi_types(name, J, expected):
    assert build_root_system(name).levi_type(J) == expected


def test_restriction_uses_bourbaki_order():
    R = build_root_system("E7")
    sub, order = R.restrict([1, 2, 3, 4, 5, 6])
    assert sub.name == "E6" and len(sub.positive_roots) == 36
    assert order == [1, 2, 3, 4, 5, 6]
    sub, order = build_root_system("A4").restrict([3, 2])
    assert sub.name == "A2" and order == [2, 3]


def test_anticanonical_weight_is_twice_rho():
    R = build_root_system("D4")
    assert R.half_sum_doubled() == tuple(sum(b[i] for b in R.positive_roots) for i in range(4))
    assert R.rho == (1, 1, 1, 1)
