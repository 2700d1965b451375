import itertools

from qcrystals.alphabet import ceil, parse_word
from qcrystals.involutions import (
    Perm, evaluate, involution_shape, involutions, invol_length, invol_words, is_vexillary,
    primed_invol_words,
)


def test_perm_parsing():
    z = Perm.from_cycles("(1,3)(2,4)")
    assert z == Perm.from_oneline([3, 4, 1, 2]) and z.is_involution()
    assert Perm.from_cycles("(1,2,3)").is_involution() is False


def test_involution_counts():
    # telephone numbers
    assert [len(involutions(N)) for N in range(1, 7)] == [1, 2, 4, 10, 26, 76]


def _demazure_conj(word):
    """Brute-force involution word evaluation: z -> s z s, or z s when s z s = z."""
    z = Perm.identity()
    for a in word:
        s = Perm.s(a)
        z2 = s * z * s
        z = z * s if z2 == z else z2
    return z


def test_involution_words_against_brute_force():
    for z in involutions(5):
        ell = invol_length(z)
        brute = {w for w in itertools.product(range(1, 5), repeat=ell) if _demazure_conj(w) == z}
        assert set(invol_words(z)) == brute
        assert all(evaluate(w) == z for w in brute) or not brute


def test_primed_words_unprime_to_involution_words():
    for z in involutions(5):
        ws = primed_invol_words(z)
        plain = set(invol_words(z))
        assert {tuple(ceil(c) for c in w) for w in ws} == plain
        assert {tuple(2 * a for a in w) for w in plain} <= set(ws)


def test_shape_and_vexillary():
    assert involution_shape(Perm.from_cycles("(1,5)(2,3)")) == (4, 1)
    assert is_vexillary(Perm.from_cycles("(1,2)(3,4)")) is False
    assert is_vexillary(Perm.from_oneline([4, 5, 6, 1, 2, 3]))
    assert parse_word("41'354'2") in primed_invol_words(Perm.from_cycles("(1,3)(2,6)(4,5)"))


def test_shape_size_is_involution_length():
    assert all(sum(involution_shape(z)) == invol_length(z) for z in involutions(6))
