import pytest

from qcrystals.alphabet import compact, parse_word, unprime_word
from qcrystals.crystal import BAR, StandardCrystal, TensorPower
from qcrystals.words import WordCrystal, unpaired_indices, word_e, word_f


def test_unpaired_example():
    w = parse_word("131'22'131'2")
    assert [k + 1 for k in unpaired_indices(w, 1)] == [1, 3, 9]


@pytest.mark.parametrize("n,m", [(2, 3), (3, 3), (2, 4)])
def test_word_crystal_is_tensor_power(n, m):
    W, T = WordCrystal(n, m), TensorPower(StandardCrystal(n), m)
    for w in W.elements():
        for i in W.labels:
            assert W.f(i, w) == T.f(i, w) and W.e(i, w) == T.e(i, w)


def test_unprime_intertwines_type_a_operators():
    W = WordCrystal(3, 4)
    for w in W.elements():
        for i in (1, 2):
            r = word_f(w, i, 3)
            u = word_f(unprime_word(w), i, 3)
            assert (r is None) == (u is None)
            if r is not None:
                assert unprime_word(r) == u


def test_queer_and_zero_on_small_words():
    w = parse_word("121")
    assert compact(word_f(w, BAR, 2)) == "221"
    assert compact(word_f(w, 0, 2)) == "1'21"
    assert word_e(word_f(w, 1, 2), 1, 2) == w


def test_parse_validates():
    W = WordCrystal(2, 3)
    assert W.parse("1'21") == parse_word("1'21")
    with pytest.raises(ValueError):
        W.parse("131")
    with pytest.raises(ValueError):
        W.parse("12")
