import pytest
from hypothesis import given
from hypothesis import strategies as st

from qtkostka.partitions import partitions, syt_count
from qtkostka.tableaux import (
    Tableau, UndefinedAction, UnsupportedEvaluation, add_two_strip, charge, cocharge,
    enumerate_ssyt, evaluation, insert, relabel_pair, restrict, shift, sigma, sigma_bar,
    standardize, standardize_word, syt_of_degree, syt_of_shape,
)
from strategies import syt


def w(text):
    return tuple(int(ch) for ch in text)


def test_word_primitives():
    assert shift(w("231567"), 2) == w("453789")
    assert restrict(w("12334223"), {3, 4}) == w("3343")
    assert relabel_pair(w("121543"), (2, 3), (4, 6)) == w("141546")
    assert relabel_pair(w("2113"), (1, 1), (0, 1)) == w("2013")
    assert evaluation(w("2113")) == (2, 1, 1)
    assert insert(w("123"), 2, 9) == w("1923")
    assert insert(w("123"), 4, 9) == w("1239")
    with pytest.raises(IndexError):
        insert(w("123"), 5, 9)
    with pytest.raises(ValueError):
        shift(w("12"), -2)
    with pytest.raises(ValueError):
        relabel_pair(w("3213"), (2, 3), (4, 6))


def test_sigma_examples():
    assert sigma(w("215345"), 4) == w("215344")
    assert sigma(w("112"), 1) == w("122")
    assert sigma_bar(w("112"), 1) == w("212")
    with pytest.raises(UndefinedAction):
        sigma(w("12"), 1)
    with pytest.raises(UndefinedAction):
        sigma(w("1122"), 1)


@pytest.mark.parametrize("pattern", ["aab", "aba", "baa", "abb", "bba", "bab"])
@pytest.mark.parametrize("action", [sigma, sigma_bar])
def test_actions_are_involutions(pattern, action):
    word = tuple(3 if ch == "a" else 4 for ch in pattern)
    out = action(word, 3)
    assert out != word
    assert action(out, 3) == word
    assert sorted(evaluation(out)) == sorted(evaluation(word))


@pytest.mark.parametrize("pattern", ["aab", "aba", "baa", "abb", "bba", "bab"])
def test_sigma_bar_is_sigma_under_reversal(pattern):
    word = tuple(3 if ch == "a" else 4 for ch in pattern)
    assert sigma_bar(word, 3) == sigma(word[::-1], 3)[::-1]


def test_cocharge_and_charge():
    assert cocharge(w("413265")) == 8
    assert charge(w("413265")) == 7
    assert cocharge(w("48357126")) == 14
    assert cocharge(w("12")) == 0
    assert cocharge(w("21")) == 1


@given(st.permutations(range(1, 8)))
def test_charge_cocharge_complement(perm):
    perm = tuple(perm)
    assert charge(perm) + cocharge(perm) == len(perm) * (len(perm) - 1) // 2


def test_parse_and_print():
    t = Tableau.parse("4,8/3,5,7/1,2,6")
    assert t.shape == (3, 3, 2)
    assert t.word == w("48357126")
    assert str(t) == "4,8/3,5,7/1,2,6"
    assert Tableau.parse("48/357/126") == t
    assert str(Tableau.parse("")) == "()"
    with pytest.raises(ValueError):
        Tableau.parse("1,2/3")
    with pytest.raises(ValueError):
        Tableau.parse("3/1,2", shape=(3,))


def test_transpose_example():
    t = Tableau.parse("1/1,4/3,5/6,2,3,4")
    assert str(t.transpose()) == "4/3/2,5,4/6,3,1,1"


@given(syt(max_size=8))
def test_transpose_is_involutive(t):
    assert t.transpose().transpose() == t
    assert t.transpose().is_standard()
    assert cocharge(t.transpose().word) == len(t) * (len(t) - 1) // 2 - cocharge(t.word)


def test_add_two_strip_example():
    t = Tableau.parse("3/2/1,4")
    got = [str(s) for s in add_two_strip(t, 5)]
    assert got == ["5/3/2,5/1,4", "5/3/2/1,4,5", "3/2,5/1,4,5", "3/2/1,4,5,5"]


def test_standardization_chain():
    trace = []
    out = standardize(Tableau.parse("4,5/2,3,5/1,2,4"), trace=trace)
    assert str(out) == "6,7/3,4,8/1,2,5"
    assert len(trace) == 6


def test_standardization_domain():
    with pytest.raises(UnsupportedEvaluation):
        standardize_word(w("1112"))
    assert standardize_word(w("1233"), prefix=1) == w("1233")


@pytest.mark.parametrize("ev", [(2, 1), (1, 2, 2), (2, 2, 1), (2, 1, 2, 1), (1, 2, 1, 2)])
def test_standardization_preserves_shape_and_cocharge(ev):
    for t in enumerate_ssyt(ev):
        s = standardize(t)
        assert s.shape == t.shape
        assert s.is_standard()


def test_ssyt_enumeration():
    assert {str(t) for t in enumerate_ssyt((2, 1))} == {"1,1,2", "2/1,1"}
    assert len(enumerate_ssyt((1, 1, 1))) == 4


def test_syt_counts():
    assert len(syt_of_degree(8)) == 764
    for d in range(7):
        assert len(syt_of_degree(d)) == sum(syt_count(mu) for mu in partitions(d))
    assert all(t.is_standard() for t in syt_of_shape((3, 2)))


def test_remove_letter_requires_row_end():
    t = Tableau.parse("3/1,2,4")
    assert str(t.remove_letter(4)) == "3/1,2"
    with pytest.raises(ValueError):
        t.remove_letter(2)
