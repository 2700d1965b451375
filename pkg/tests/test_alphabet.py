import itertools

import pytest

from qcrystals.alphabet import (
    ceil, compact, fmt_letter, fmt_partition, is_primed, letter, parse_letter, parse_partition,
    parse_word, shifted_diagram, strict_partitions_inside, strict_partitions_of, toggle_prime,
)


def test_letter_codes_order_primes_first():
    assert [fmt_letter(c) for c in sorted(map(parse_letter, ["2", "1", "2'", "1'"]))] == ["1'", "1", "2'", "2"]
    for k in range(-3, 5):
        for p in (False, True):
            c = letter(k, p)
            assert ceil(c) == k and is_primed(c) == p
            assert toggle_prime(toggle_prime(c)) == c


@pytest.mark.parametrize("text", ["41'354'2", "4 1' 3 5 4' 2"])
def test_parse_word_forms(text):
    w = parse_word(text)
    assert compact(w) == "41'354'2"


@pytest.mark.parametrize("bad", ["x", "1''", "1 a"])
def test_parse_errors(bad):
    with pytest.raises(ValueError):
        parse_word(bad)


def test_partitions():
    assert parse_partition("4,1") == (4, 1)
    assert fmt_partition((4, 1)) == "4,1"
    with pytest.raises(ValueError):
        parse_partition("2,2")
    assert shifted_diagram((2, 1)) == {(1, 1), (1, 2), (2, 2)}


def test_strict_partitions_inside_against_brute_force():
    outer = (4, 3, 2, 1)
    brute = {
        tuple(p for p in parts if p)
        for parts in itertools.product(*(range(o + 1) for o in outer))
        if all(a > b for a, b in zip([p for p in parts if p], [p for p in parts if p][1:]))
        and list(parts) == sorted(parts, reverse=True)
    }
    assert set(strict_partitions_inside(outer)) == brute


def test_strict_partitions_of():
    assert sorted(strict_partitions_of(6)) == sorted([(6,), (5, 1), (4, 2), (3, 2, 1)])
