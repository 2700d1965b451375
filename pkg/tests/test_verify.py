import pytest

from qcrystals.alphabet import letter
from qcrystals.crystal import StandardCrystal, TensorProduct
from qcrystals.verify import AXIOMS, Check, braid_relations, check_axioms, corpus, run_suite


class ExtraZeroArrow(StandardCrystal):
    """Standard crystal with a spurious 0-arrow 2 -> 2'."""

    def _f(self, i, b):
        if i == 0 and b == letter(2):
            return letter(2, True)
        return super()._f(i, b)

    def _e(self, i, b):
        if i == 0 and b == letter(2, True):
            return letter(2)
        return super()._e(i, b)


def test_axioms_hold_on_a_tensor_square():
    t = check_axioms(TensorProduct(StandardCrystal(3), StandardCrystal(3)))
    assert not t.first and all(t.cases[k] > 0 for k in ("S1", "P1", "Q1", "Q3"))


def test_axioms_catch_a_planted_defect():
    t = check_axioms(ExtraZeroArrow(2))
    assert "Q3" in t.first and "2" in t.first["Q3"]


def test_check_line_format():
    assert Check("x.y", True, "cases=3").line() == "PASS x.y cases=3"
    assert Check("x.y", False).line() == "FAIL x.y"


def test_braid_relation_list():
    names = [name for name, _, _ in braid_relations(3)]
    assert names == ["s0^2", "s1^2", "s2^2", "s1s2s1", "s0s2", "s0s1s0s1"]


def test_small_suites_pass():
    for name, kw in [("braid", {"n_max": 2, "m_max": 3}), ("tensor-assoc", {"n_max": 2, "m_max": 2}),
                     ("stanley", {"N": 4}), ("characters", {"outer": (3, 1), "n_max": 2, "small": True})]:
        checks = run_suite(name, **kw)
        assert checks and all(c.ok for c in checks), [c.line() for c in checks if not c.ok]


def test_corpus_and_unknown_suite():
    names = [name for name, _ in corpus(small=True)]
    assert len(names) == len(set(names)) and "B+_2^3" in names
    assert len(AXIOMS) == 12
    with pytest.raises(ValueError):
        run_suite("nope")
