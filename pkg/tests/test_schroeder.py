import pytest

from rinctab import InputError, Tableau
from rinctab.qpoly import count_r, formula_Rq, formula_Rtq, poly_sum
from rinctab.schroeder import (
    SchroederPath,
    SchroederWord,
    bonin_sum,
    enumerate_words,
    path_from_word,
    theta,
    theta_inv,
    word_descents,
    word_from_path,
    word_maj,
)
from rinctab.stats import ascent_set
from rinctab.tableaux import enumerate_inc, enumerate_rinc

from oracles import brute_words

SAMPLE_PATH = "UUFUUUDFDDDUDD"
SAMPLE_WORD = "00100021222022"


def W(s):
    return SchroederWord(s)


def test_sample_path_to_word():
    assert word_from_path(SchroederPath(SAMPLE_PATH)).letters == SAMPLE_WORD
    assert path_from_word(W(SAMPLE_WORD)).steps == SAMPLE_PATH
    assert word_from_path(SchroederPath("UFD")).letters == "012"
    assert W(SAMPLE_WORD).n == 8 and W(SAMPLE_WORD).k == 2


@pytest.mark.parametrize("bad", ["", "2", "0", "0123", "201", "02200"])
def test_invalid_words(bad):
    with pytest.raises(InputError):
        W(bad)


@pytest.mark.parametrize("bad", ["D", "UUD", "DU", "UXD", ""])
def test_invalid_paths(bad):
    with pytest.raises(InputError):
        SchroederPath(bad)


def test_word_descents():
    assert word_descents(W(SAMPLE_WORD)) == {3, 7, 11}
    assert word_maj(W(SAMPLE_WORD)) == 21
    assert word_descents(W("012")) == set() and word_maj(W("012")) == 0
    assert word_descents(W("021")) == {2} and word_maj(W("021")) == 2


def test_theta_examples():
    assert theta(Tableau.from_rows([1, 2, 4, 5, 6, 8], [3, 4, 6, 7, 8, 9])).letters == "002101212"
    assert theta(Tableau.from_rows([1, 2], [2, 3])).letters == "012"
    assert theta(Tableau.from_rows([1], [1])).letters == "1"
    assert theta_inv(W("012")) == Tableau.from_rows([1, 2], [2, 3])
    assert theta_inv(W("1")) == Tableau.from_rows([1], [1])


def test_enumerate_words_examples():
    assert [w.letters for w in enumerate_words(2, 1)] == ["012", "021", "102"]
    assert [w.letters for w in enumerate_words(1, 1)] == ["1"]
    assert sum(1 for _ in enumerate_words(3, 0)) == 5
    assert list(enumerate_words(3, 4)) == []


@pytest.mark.parametrize("n", range(1, 6))
def test_words_match_brute_force(n):
    for k in range(n + 1):
        got = [w.letters for w in enumerate_words(n, k)]
        assert got == brute_words(n, k)
        assert len(got) == count_r(n, k)
        for s in got:
            w = W(s)
            assert word_from_path(path_from_word(w)) == w


@pytest.mark.parametrize("n", range(1, 7))
def test_theta_round_trips(n):
    for k in range(n + 1):
        tabs = list(enumerate_rinc(n, k))
        words = {theta(t) for t in tabs}
        assert words == set(enumerate_words(n, k))
        for t in tabs:
            assert theta_inv(theta(t)) == t
        for w in words:
            assert theta(theta_inv(w)) == w


def test_equal_columns_are_diagonal_flats():
    for n in range(1, 6):
        for k in range(n + 1):
            for t in enumerate_rinc(n, k):
                path = path_from_word(theta(t))
                flats_on_diag = [t.row1.index(i) for i in range(1, t.top + 1)
                                 if path.steps[i - 1] == "F" and i in path.diagonal_flats()]
                equal_cols = [j for j, (a, b) in enumerate(zip(*t.rows)) if a == b]
                assert flats_on_diag == equal_cols


def test_inc_gives_small_paths():
    for n in range(1, 6):
        for k in range(n):
            small = {w for w in enumerate_words(n, k) if not path_from_word(w).diagonal_flats()}
            assert {theta(t) for t in enumerate_inc(n, k)} == small


def test_schroeder_sum_examples():
    assert bonin_sum(2, 1).coeffs == (1, 1, 1)
    assert bonin_sum(1, 1).coeffs == (1,)
    with pytest.raises(InputError):
        bonin_sum(2, 3)


@pytest.mark.parametrize("n", range(1, 9))
def test_schroeder_sum_identity(n):
    for k in range(n + 1):
        b = bonin_sum(n, k)
        assert poly_sum(word_maj(w) for w in enumerate_words(n, k)) == b
        assert formula_Rtq(n, k) == b.shift(k * (k - 1) // 2)
        assert formula_Rq(n, k) == b.shift(n + k * (k - 3) // 2)


def test_ascents_do_not_simply_become_word_descents():
    # i and i+1 both doubled: i is an ascent of T but not a descent of theta(T)
    t = Tableau.from_rows([1, 2], [1, 2])
    assert 1 in ascent_set(t)
    assert 1 not in word_descents(theta(t))
    implication_holds = all(
        ascent_set(t) <= word_descents(theta(t))
        for n in range(1, 5)
        for k in range(n + 1)
        for t in enumerate_rinc(n, k)
    )
    assert not implication_holds
