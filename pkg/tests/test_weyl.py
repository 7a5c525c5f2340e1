from __future__ import annotations

import pytest
from conftest import inversions
from hypothesis import given, settings
from hypothesis import strategies as st

from hecke_params.langlands import Case
from hecke_params.weyl import InvalidGenerator, NotInGroup, SimpleGen, WeylElem, WeylGroup


def test_gen_examples():
    W = WeylGroup([(Case.I, 3)])
    assert W.gen(SimpleGen(1, 1)).blocks == ((2, 1, 3),)
    W = WeylGroup([(Case.III, 2)])
    assert W.gen(SimpleGen(1, 2)).blocks == ((1, -2),)
    W = WeylGroup([(Case.II, 2)])
    s2 = W.gen(SimpleGen(1, 2))
    assert s2.act((1, 0)) == (0, -1)
    assert s2.act((0, 1)) == (-1, 0)


def test_invalid_generators():
    with pytest.raises(InvalidGenerator):
        WeylGroup([(Case.I, 3)]).gen(SimpleGen(1, 3))
    with pytest.raises(InvalidGenerator):
        WeylGroup([(Case.I, 3)]).gen(SimpleGen(2, 1))
    with pytest.raises(InvalidGenerator):
        WeylGroup([(Case.III, 2)]).r_elem(frozenset({1}))
    assert WeylGroup([(Case.I, 1)]).simple_gens == ()
    assert WeylGroup([(Case.II, 1)]).elements() == [WeylGroup([(Case.II, 1)]).identity]


def test_group_law_examples():
    W = WeylGroup([(Case.III, 2)])
    s1, s2 = W.gen(SimpleGen(1, 1)), W.gen(SimpleGen(1, 2))
    for w in W.elements():
        assert (w * w.inverse()).is_identity()
    assert (s1 * s1).is_identity() and (s2 * s2).is_identity()
    c = s1 * s2
    assert (c * c).act((1, 0)) == (-1, 0)
    assert (c * c).act((0, 1)) == (0, -1)


def test_length_and_reduced_word_examples():
    W = WeylGroup([(Case.III, 2)])
    s1, s2 = W.gen(SimpleGen(1, 1)), W.gen(SimpleGen(1, 2))
    longest = (s1 * s2) * (s1 * s2)
    assert W.length(W.identity) == 0
    assert all(W.length(W.gen(s)) == 1 for s in W.simple_gens)
    assert W.length(longest) == 4
    assert W.reduced_word(W.identity) == []
    assert W.reduced_word(s1) == [SimpleGen(1, 1)]
    assert W.reduced_word(longest) == [SimpleGen(1, 1), SimpleGen(1, 2), SimpleGen(1, 1), SimpleGen(1, 2)]


def test_lattice_action_examples():
    W = WeylGroup([(Case.I, 3)])
    assert W.act_on_lattice(W.identity, (4, 5, 6)) == (4, 5, 6)
    assert W.act_on_lattice(W.gen(SimpleGen(1, 1)), (1, 0, 0)) == (0, 1, 0)
    W = WeylGroup([(Case.II, 3)])
    assert W.act_on_lattice(W.gen(SimpleGen(1, 3)), (0, 1, 0)) == (0, 0, -1)


def test_decompose_examples():
    W = WeylGroup([(Case.II, 2)])
    for w in W.elements():
        assert W.decompose(w) == (w, frozenset())
    r2 = W.r_elem(frozenset({1}))
    assert r2.blocks == ((1, -2),)
    assert W.decompose(r2) == (W.identity, frozenset({1}))
    s2 = W.gen(SimpleGen(1, 2))
    assert W.decompose(s2) == (s2, frozenset())


def test_decompose_rejects_elements_outside():
    with pytest.raises(NotInGroup):
        WeylGroup([(Case.I, 2)]).decompose(WeylElem(((1, -2),)))
    with pytest.raises(NotInGroup):
        WeylGroup([(Case.IIb, 2)]).decompose(WeylElem(((1, -2),)))
    with pytest.raises(NotInGroup):
        WeylGroup([(Case.II, 2)]).length(WeylElem(((1, -2),)))


def test_conjugate_gen_examples():
    W = WeylGroup([(Case.II, 3), (Case.III, 2)])
    r = frozenset({1})
    assert W.conjugate_gen(frozenset(), SimpleGen(1, 3)) == SimpleGen(1, 3)
    assert W.conjugate_gen(r, SimpleGen(1, 3)) == SimpleGen(1, 2)
    assert W.conjugate_gen(r, SimpleGen(1, 2)) == SimpleGen(1, 3)
    assert W.conjugate_gen(r, SimpleGen(1, 1)) == SimpleGen(1, 1)
    assert W.conjugate_gen(r, SimpleGen(2, 2)) == SimpleGen(2, 2)


def test_element_text_form():
    W = WeylGroup([(Case.III, 3), (Case.I, 2)])
    w = WeylElem(((2, -1, 3), (2, 1)))
    assert str(w) == "[2,-1,3] [2,1]"
    assert W.length(w) == inversions(W, w)


SHAPES = [[(c, d)] for c in Case for d in range(1, 5)] + [[(Case.II, 2), (Case.III, 2)], [(Case.I, 3), (Case.IIb, 2)]]


@pytest.mark.parametrize("shape", SHAPES, ids=lambda s: "+".join(f"{c.value}{d}" for c, d in s))
def test_structure_exhaustive(shape):
    W = WeylGroup(shape)
    elems = W.elements()
    assert len(elems) == W.expected_order()
    actions = set()
    basis = [tuple(int(i == k) for i in range(W.rank)) for k in range(W.rank)]
    for w in elems:
        word = W.reduced_word(w)
        assert W.word_elem(word) == w
        assert len(word) == W.length(w) == inversions(W, w)
        for s in W.simple_gens:
            ws = w * W.gen(s)
            assert abs(W.length(ws) - W.length(w)) == 1
            assert W.is_right_descent(w, s) == (W.length(ws) < W.length(w))
        actions.add(tuple(W.act_on_lattice(w, e) for e in basis))
    assert len(actions) == len(elems)
    # W° is normal and decompose is a bijection onto W° x R
    full = W.full_elements()
    assert len(set(full)) == len(elems) * len(W.r_elements())
    pairs = {W.decompose(w) for w in full}
    assert len(pairs) == len(full)
    for r in W.r_elements():
        for w in elems:
            assert W.in_w0(W.conjugate(r, w))


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(0, 7), max_size=12))
def test_random_words_case_iii(indices):
    W = WeylGroup([(Case.III, 4)])
    word = [W.simple_gens[i % len(W.simple_gens)] for i in indices]
    w = W.word_elem(word)
    assert W.length(w) <= len(word)
    assert W.length(w) % 2 == len(word) % 2
    assert W.word_elem(W.reduced_word(w)) == w
