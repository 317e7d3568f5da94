import pytest

from minlines.bottsam import BSVariety
from minlines.rootsys import build_root_system
from minlines.schubert import PreconditionError, maximal_flag_space
from minlines.sweeps import minuscule_elements
from minlines.weyl import reduced_words

A3 = build_root_system("A3")
A4 = build_root_system("A4")


def bs(word, R=A3, node=2):
    return BSVariety(maximal_flag_space(R, node), word)


def test_beta_sequence():
    assert bs((1, 3, 2)).beta_sequence() == [(1, 0, 0), (0, 0, 1), (1, 1, 1)]
    assert bs((2, 1, 4, 3, 2), A4).beta_sequence() == [
        (0, 1, 0, 0), (1, 1, 0, 0), (0, 0, 0, 1), (0, 1, 1, 1), (1, 1, 1, 1)]


def test_anticanonical_degrees_and_minimal_curve():
    X = bs((1, 3, 2))
    assert [X.anticanonical_degree(j) for j in (1, 2, 3)] == [3, 3, 2]
    mins = X.minimal_curves()
    assert [(c.j, c.target) for c in mins] == [(3, 2)]


def test_lines_on_bott_samelson():
    X = bs((1, 3, 2))
    assert [X.is_line(j) for j in (1, 2, 3)] == [False, False, True]


def test_picard_degrees_are_triangular():
    X = bs((2, 1, 4, 3, 2), A4)
    for k in range(1, 6):
        for j in range(k + 1, 6):
            assert X.pic_degree(k, j) == 0
        assert X.pic_degree(k, k) == 1
    assert bs((1, 3, 2)).pic_degree(3, 1) == 1


def test_suffix_root_is_negated_pullback():
    X = bs((2, 1, 4, 3, 2), A4)
    winv = X.w.inverse()
    for j, beta in enumerate(X.beta_sequence(), start=1):
        assert X.suffix_root(j) == tuple(-c for c in winv(beta))


@pytest.mark.parametrize("name,node", [("A4", 2), ("D4", 1), ("D5", 5)])
def test_minimal_curve_targets_are_right_descents(name, node):
    R = build_root_system(name)
    space = maximal_flag_space(R, node)
    for w in minuscule_elements(R, node):
        for word in reduced_words(w):
            X = BSVariety(space, word)
            assert {c.target for c in X.minimal_curves()} == w.right_descents()
            assert all(c.exchange_holds for c in X.minimal_curves())


def test_rows_schema():
    rows = bs((1, 3, 2)).rows()
    assert rows[2] == {"j": 3, "beta": [1, 1, 1], "antican": 2, "is_line": True,
                       "minimal": True, "target": 2}


def test_rejects_non_reduced_and_non_representative_words():
    with pytest.raises(PreconditionError):
        bs((1, 1))
    with pytest.raises(PreconditionError):
        bs((2, 1))


def test_index_bounds():
    with pytest.raises(IndexError):
        bs((1, 3, 2)).anticanonical_degree(4)
