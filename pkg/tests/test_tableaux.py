import itertools

import pytest

from qcrystals.alphabet import shifted_diagram, strict_partitions_inside
from qcrystals.crystal import BAR
from qcrystals.tableaux import (
    ShiftedTableau, ShTabCrystal, descents, descents_by_rule, dual_equiv, extremal_tableaux, frak_s,
    is_semistandard, is_standard, shifted_tableaux, shword, standard_shifted_tableaux, standardize, tab_e,
    tab_ebar, tab_f, tab_fbar, unpaired_boxes, unprime_diag,
)

T = ShiftedTableau.parse


def brute_count(lam, n, diag_primes=True):
    """Fill every box with every letter and keep the semistandard fillings."""
    cells = sorted(shifted_diagram(lam))
    alphabet = range(1, 2 * n + 1)
    count = 0
    for vals in itertools.product(alphabet, repeat=len(cells)):
        cand = ShiftedTableau.from_cells(dict(zip(cells, vals)))
        if is_semistandard(cand) and (diag_primes or all(c % 2 == 0 for (r, s), c in cand.cells().items() if r == s)):
            count += 1
    return count


@pytest.mark.parametrize("lam,n", [((1,), 3), ((2,), 2), ((2, 1), 2), ((3, 1), 2), ((2, 1), 3), ((3,), 3)])
def test_enumeration_against_brute_force(lam, n):
    assert len(shifted_tableaux(lam, n)) == brute_count(lam, n)
    assert len(shifted_tableaux(lam, n, False)) * 2 ** len(lam) == brute_count(lam, n)


def test_parse_fmt_roundtrip():
    for s in ["1' 1 1 2 / 2 2", ". . 1' 1 / . 2", "∅"]:
        assert T(T(s).fmt()).fmt() == T(s).fmt()
    assert T("1' 2 / 3").shape == (2, 1)
    assert repr(T("1 2")) == "ShiftedTableau('1 2')"


def test_shword_and_unpaired_examples():
    assert shword(T("1' 2' 4' 6 8' 9 / 3 5' 7")) == (8, 4, 5, 2, 3, 7, 1, 6, 9)
    skew = T(". . . . 1' 1 1 2' 2 / . . 1' 1 2' 2 / 1 2 2")
    assert unpaired_boxes(skew, 1) == [(3, 3), (1, 9)]


@pytest.mark.parametrize("src,dst,case", [
    ("1' 1 1 2 / 2 2", "1 1 2' 2 / 2' 2", "L1d"),
    ("1' 1 1 2 / 2' 2", "1' 1 2' 2 / 2' 2", "L1d"),
])
def test_f_diagonal_prime_swap(src, dst, case):
    trace = []
    assert tab_f(T(src), 1, trace).fmt() == dst and trace == [case]
    trace = []
    assert tab_e(T(dst), 1, trace) == T(src) and trace == ["R2d"]


def test_bar_operators():
    assert tab_fbar(T("1' 1 2 / 3")).fmt() == "1' 2' 2 / 3"
    assert tab_fbar(T("1 2' 2 / 3")) is None
    assert tab_ebar(T("1 2' 2 / 3")).fmt() == "1 1 2 / 3"
    with pytest.raises(ValueError):
        tab_fbar(T(". 1 / 2"))


def test_operators_exhaustive_small():
    for n in (2, 3):
        for lam in strict_partitions_inside((4, 2, 1)):
            if not lam or len(lam) > n:
                continue
            ts = set(shifted_tableaux(lam, n))
            for t in ts:
                for i in range(1, n):
                    f = tab_f(t, i)
                    if f is not None:
                        assert f in ts and tab_e(f, i) == t
                        assert f.primes_diag() == t.primes_diag()
                    uf = tab_f(unprime_diag(t), i)
                    assert (uf is None) == (f is None)
                    if f is not None:
                        assert unprime_diag(f) == uf


def test_extremal_tableaux_example():
    high, low, hat = extremal_tableaux((7, 4, 2), 5)
    assert high.fmt() == "1 1 1 1 1 1 1 / 2 2 2 2 / 3 3"
    assert low.fmt() == "3 3 4' 4 5' 5 5 / 4 4 5' 5 / 5 5"
    assert hat.fmt() == "3' 3 4' 4 5' 5 5 / 4' 4 5' 5 / 5' 5"
    with pytest.raises(ValueError):
        extremal_tableaux((3, 2, 1), 2)


def test_standardize_example():
    src = T("2 4' 4 4 5 6' 6 / 4' 5' 6 6 8 9' / 5 8 8 9 / 9' 9")
    assert standardize(src).fmt() == "1 2' 4 5 8 9' 12 / 3' 6' 10 11 15 16' / 7 13 14 19 / 17' 18"
    assert standardize(unprime_diag(src)) == unprime_diag(standardize(src))


@pytest.mark.parametrize("src,i,dst", [
    ("1 2 3 4 / 5 6 7'", 6, "1 2 3 4 / 5 6' 7"),
    ("1 2 3 6' / 4 5", 5, "1 2 3 5' / 4 6"),
    ("1 2 3 7 / 4' 5 8 / 6'", 4, "1 2 3 7 / 4' 5' 8 / 6'"),
    ("1 2 3 7 / 4' 5' 8 / 6", 5, "1 2 3 7 / 4 5 8 / 6'"),
])
def test_frak_s_examples(src, i, dst):
    assert frak_s(T(src), i).fmt() == dst


def test_dual_equivalence_and_descents():
    for lam in [(3, 1), (4, 2), (3, 2, 1)]:
        k = sum(lam)
        for t in standard_shifted_tableaux(lam):
            assert is_standard(t)
            assert descents(t) == descents_by_rule(t)
            for i in range(-1, k - 2):
                d = dual_equiv(t, i)
                assert is_standard(d) and dual_equiv(d, i) == t


def test_crystal_wrapper():
    M = ShTabCrystal((2, 1), 2)
    assert len(M.elements()) == 8
    assert set(M.labels) == {BAR, 0, 1}
    assert M.parse("1' 1 / 2") == T("1' 1 / 2")
    with pytest.raises(ValueError):
        M.parse("1 1 / 1")
    assert all(M.wt(b) == b.wt(2) for b in M.elements())
    assert M.f(0, T("1 1 / 2")) == T("1' 1 / 2")
    unprimed_diag = [b for b in M.elements() if all(c % 2 == 0 for (r, s), c in b.cells().items() if r == s)]
    assert ShTabCrystal((2, 1), 2, "q").elements() == unprimed_diag
