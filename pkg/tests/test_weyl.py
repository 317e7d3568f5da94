import pytest
from hypothesis import given, settings, strategies as st

from minlines.rootsys import build_root_system
from minlines.weyl import (
    EnumerationCapError, WeylError, bruhat_leq, enumerate_coset_reps,
    enumerate_group, from_word, identity, is_minuscule_element, longest_element,
    min_coset_rep, parabolic_invariants, parabolic_order, parse_word, reduced_words,
    reflection,
)
from minlines.sweeps import subword_products

A4 = build_root_system("A4")
D4 = build_root_system("D4")
B3 = build_root_system("B3")


def words(R, max_len=12):
    return st.lists(st.integers(1, R.rank), max_size=max_len)


@settings(max_examples=150, deadline=None)
@given(st.sampled_from([A4, D4, B3]).flatmap(lambda R: st.tuples(st.just(R), words(R))))
def test_reduced_word_round_trip(case):
    R, word = case
    w = from_word(word, R)
    red = w.reduced_word
    assert len(red) == w.length <= len(word)
    assert from_word(red, R) == w
    assert (len(word) - w.length) % 2 == 0


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([A4, D4, B3]).flatmap(
    lambda R: st.tuples(st.just(R), words(R), words(R), words(R))))
def test_group_laws(case):
    R, a, b, c = case
    x, y, z = (from_word(t, R) for t in (a, b, c))
    assert (x * y) * z == x * (y * z)
    assert x * x.inverse() == identity(R)
    assert x.inverse().length == x.length
    assert from_word(a + b, R) == x * y


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([A4, D4]).flatmap(lambda R: st.tuples(st.just(R), words(R))))
def test_length_is_inversion_count(case):
    R, word = case
    w = from_word(word, R)
    inv = w.inversion_set()
    assert len(inv) == w.length
    assert all(R.is_positive(b) and R.is_negative(w(b)) for b in inv)


def test_descents():
    w = from_word((2, 1, 4, 3, 2), A4)
    assert w.length == 5
    assert w.right_descents() == {2}
    assert w.left_descents() == {2, 4}
    assert w.inverse()(A4.simple_root(2)) == (-1, -1, -1, 0)


def test_reduced_word_is_lexicographically_least():
    w = from_word((3, 1), A4)
    assert w.reduced_word == (1, 3)
    assert min(reduced_words(from_word((2, 1, 4, 3, 2), A4))) == \
        from_word((2, 1, 4, 3, 2), A4).reduced_word


def test_reduced_words_of_grassmannian_top_cell():
    # the top cell of G(2,4) corresponds to the 2x2 box: two standard tableaux
    w = from_word((2, 1, 3, 2), build_root_system("A3"))
    assert sorted(reduced_words(w)) == [(2, 1, 3, 2), (2, 3, 1, 2)]


@pytest.mark.parametrize("R", [build_root_system("A3"), build_root_system("B2")])
def test_bruhat_matches_subword_oracle(R):
    group = enumerate_group(R)
    for w in group:
        below = subword_products(w)
        for u in group:
            assert bruhat_leq(u, w) == (u in below)


def test_bruhat_is_a_partial_order_on_a3():
    group = enumerate_group(build_root_system("A3"))
    e = group[0]
    top = group[-1]
    for u in group:
        assert bruhat_leq(e, u) and bruhat_leq(u, top) and bruhat_leq(u, u)
        for v in group:
            if u != v and bruhat_leq(u, v):
                assert not bruhat_leq(v, u)


@pytest.mark.parametrize("name,I", [("A4", {1, 3, 4}), ("D4", {1, 3, 4}), ("B3", {2, 3}),
                                    ("A3", {1, 3})])
def test_min_coset_rep_is_shortest_in_coset(name, I):
    R = build_root_system(name)
    WI = enumerate_group(R, I)
    for w in enumerate_group(R):
        rep = min_coset_rep(w, I)
        coset = {w * u for u in WI}
        assert rep in coset
        assert rep.length == min(v.length for v in coset)


@pytest.mark.parametrize("name,I", [("A4", {1, 3, 4}), ("A5", {1, 2, 4, 5}),
                                    ("D5", {2, 3, 4, 5}), ("E6", {2, 3, 4, 5, 6})])
def test_coset_rep_count(name, I):
    R = build_root_system(name)
    reps = enumerate_coset_reps(R, I)
    assert len(reps) == parabolic_order(R, R.simple_indices) // parabolic_order(R, I)
    assert all(min_coset_rep(w, I) == w for w in reps)


def test_e7_minuscule_quotient_has_56_elements():
    E7 = build_root_system("E7")
    assert len(enumerate_coset_reps(E7, E7.simple_indices - {7})) == 56


@pytest.mark.parametrize("name", ["A4", "D5", "E6", "B3"])
def test_longest_element_length(name):
    R = build_root_system(name)
    w0 = longest_element(R)
    assert w0.length == len(R.positive_roots)
    assert all(R.is_negative(w0(b)) for b in R.positive_roots)


def test_reflection_of_root():
    R = build_root_system("A3")
    s = reflection(R, (1, 1, 1))
    assert s(R.simple_root(1)) == (0, -1, -1)
    assert s * s == identity(R)
    assert s.length == 5


def test_parabolic_invariants():
    upper, lower, perp = parabolic_invariants(from_word((4, 3, 2), A4))
    assert upper == {1, 3, 4}
    assert lower == {2, 3, 4}
    assert perp == frozenset()
    A3 = build_root_system("A3")
    assert parabolic_invariants(from_word((1, 3), A3))[2] == {1, 3}


def test_minuscule_elements():
    assert is_minuscule_element(from_word((2, 1, 4, 3, 2), A4))
    assert not is_minuscule_element(from_word((1, 2, 1), A4))  # two right descents
    assert not is_minuscule_element(from_word((2,), D4))  # node 2 of D4 is not minuscule
    with pytest.raises(WeylError):
        is_minuscule_element(from_word((1,), B3))


@pytest.mark.parametrize("text,word", [
    ("2 1 4 3 2", (2, 1, 4, 3, 2)), ("2,1,4", (2, 1, 4)), ("s2s1s4", (2, 1, 4)),
    ("", ()), ("e", ()), (" 3 ", (3,)),
])
def test_parse_word(text, word):
    assert parse_word(text) == word


def test_parse_word_rejects_garbage():
    with pytest.raises(WeylError):
        parse_word("two one")


def test_letter_out_of_range():
    with pytest.raises(Exception):
        from_word((5,), A4)


def test_enumeration_cap_from_environment(monkeypatch):
    monkeypatch.setenv("MINLINES_ENUM_CAP", "50")
    with pytest.raises(EnumerationCapError):
        enumerate_group(A4)
    with pytest.raises(EnumerationCapError):
        enumerate_coset_reps(build_root_system("E7"), set(range(1, 7)))
