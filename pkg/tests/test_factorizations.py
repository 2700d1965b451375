import itertools

from qcrystals.alphabet import compact, parse_word
from qcrystals.crystal import BAR
from qcrystals.factorizations import (
    IncrCrystal, concat, fmt_factorization, incr_f, incr_fbar, is_valid, ock, pair, parse_factorization,
)
from qcrystals.involutions import Perm, involutions, primed_invol_words


def brute_incr(z, n):
    out = set()
    for w in primed_invol_words(z):
        for cuts in itertools.combinations_with_replacement(range(len(w) + 1), n - 1):
            bounds = (0,) + cuts + (len(w),)
            a = tuple(tuple(w[bounds[k]:bounds[k + 1]]) for k in range(n))
            if all(all(x < y for x, y in zip(p, p[1:])) for p in a):
                out.add(a)
    return out


def test_elements_against_brute_force():
    for z in involutions(4):
        for n in (1, 2, 3):
            assert set(IncrCrystal(z, n).elements()) == brute_incr(z, n)


def test_operators_are_partial_inverses_and_stay_inside():
    for z in involutions(5):
        for n in (2, 3):
            M = IncrCrystal(z, n)
            els = set(M.elements())
            for a in els:
                for i in M.labels:
                    b = M.f(i, a)
                    if b is not None:
                        assert b in els and M.e(i, b) == a
                    c = M.e(i, a)
                    if c is not None:
                        assert c in els and M.f(i, c) == a


def test_pairing_rule():
    pr = pair(parse_word("3 5"), parse_word("1 4"))
    assert {(compact((x,)), compact((y,))) for x, y in pr} == {("5", "4"), ("3", "1")}


def test_format_roundtrip_and_validity():
    a = parse_factorization("4 | 1' 3 5 | | 4' | | 2")
    assert fmt_factorization(a) == "4 | 1' 3 5 | | 4' | | 2"
    assert concat(a) == parse_word("41'354'2")
    assert is_valid(a, Perm.from_cycles("(1,3)(2,6)(4,5)"))
    assert not is_valid(parse_factorization("3 1 | 2"))


def test_ock_examples_and_involutivity():
    w = parse_word("41'354'2")
    assert compact(ock(w, 0)) == "14'354'2"
    assert compact(ock(w, 1)) == "1'4354'2"
    for z in involutions(5):
        ws = primed_invol_words(z)
        for v in ws:
            for i in range(-1, len(v) - 1):
                assert ock(v, i) in ws
                assert ock(ock(v, i), i) == v


def test_queer_operator_on_one_factor():
    assert incr_fbar((parse_word("1 3"), ())) == ((parse_word("3")), parse_word("1"))
    assert incr_f((parse_word("2"), ()), 1) == ((), parse_word("2"))
    M = IncrCrystal(Perm.from_cycles("(1,3)"), 2)
    assert BAR in M.labels
