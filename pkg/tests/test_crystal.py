import json

import pytest

from qcrystals.alphabet import letter
from qcrystals.crystal import (
    BAR, CrystalError, StandardCrystal, TensorPower, TensorProduct, character, closure, components, eps,
    graph_on, is_highest, is_lowest, isomorphic, labels_for, materialize, phi, sigma, sigma_w0, to_dot,
    to_json, to_text,
)
from qcrystals.polynomials import Poly
from qcrystals.tableaux import ShTabCrystal


def paren_f(w, i):
    """Signature rule on unprimed words: i is ')', i+1 is '(', act on the last unpaired i."""
    stack, unpaired_i = [], []
    for k, c in enumerate(w):
        if c == i + 1:
            stack.append(k)
        elif c == i:
            if stack:
                stack.pop()
            else:
                unpaired_i.append(k)
    if not unpaired_i:
        return None
    k = unpaired_i[-1]
    return w[:k] + (i + 1,) + w[k + 1:]


def test_labels():
    assert labels_for(3, "gl") == [1, 2]
    assert set(labels_for(3, "qplus")) == {BAR, 0, 1, 2}
    with pytest.raises(ValueError):
        StandardCrystal(2, "sp")


@pytest.mark.parametrize("n,m", [(2, 3), (3, 3), (3, 4)])
def test_gl_tensor_power_matches_signature_rule(n, m):
    M = TensorPower(StandardCrystal(n, "gl"), m)
    for b in M.elements():
        plain = tuple((c + 1) // 2 for c in b)
        for i in range(1, n):
            r = M.f(i, b)
            o = paren_f(plain, i)
            assert (r is None and o is None) or tuple((c + 1) // 2 for c in r) == o


@pytest.mark.parametrize("cat", ["gl", "q", "qplus"])
def test_standard_strings_and_inverses(cat):
    for n in range(1, 5):
        M = StandardCrystal(n, cat)
        for b in M.elements():
            for i in M.labels:
                f = M.f(i, b)
                if f is not None:
                    assert M.e(i, f) == b
                if i > 0:
                    assert phi(M, i, b) - eps(M, i, b) == M.wt(b)[i - 1] - M.wt(b)[i]


def test_character_of_tensor_square():
    B = StandardCrystal(3)
    s = Poly(3, {(1, 0, 0): 2, (0, 1, 0): 2, (0, 0, 1): 2})
    assert character(TensorProduct(B, B)) == s * s


def test_sigma_is_involution_and_reflects_weights():
    M = TensorPower(StandardCrystal(3), 3)
    for b in M.elements():
        for i in (1, 2):
            c = sigma(M, i, b)
            assert sigma(M, i, c) == b
            w, v = list(M.wt(b)), M.wt(c)
            w[i - 1], w[i] = w[i], w[i - 1]
            assert tuple(w) == v
        assert tuple(reversed(M.wt(b))) == M.wt(sigma_w0(M, b))


def test_extremal_elements_of_standard_crystal():
    for n in range(1, 5):
        M = StandardCrystal(n)
        assert [b for b in M.elements() if is_highest(M, b)] == [letter(1)]
        assert [b for b in M.elements() if is_lowest(M, b)] == [letter(n, True)]


def test_components_closure_and_isomorphism():
    B = StandardCrystal(2)
    M = TensorProduct(B, B)
    comps = components(M)
    assert sorted(len(c) for c in comps) == [8, 8]
    assert set(closure(M, [comps[0].vertices[0]])) == set(comps[0].vertices)
    ok, phi_map = isomorphic(comps[0], comps[1])
    assert ok and len(phi_map) == 8
    W = TensorPower(B, 3)
    abnormal = graph_on(W, closure(W, [(letter(1, True), letter(2), letter(1))]))
    target = materialize(ShTabCrystal((2, 1), 2))
    assert len(abnormal) == len(target) == 8
    assert isomorphic(abnormal, target)[0]
    assert not isomorphic(comps[0], target)[0]


def test_exports_are_deterministic():
    M = TensorProduct(StandardCrystal(2), StandardCrystal(2))
    G1, G2 = materialize(M), materialize(TensorProduct(StandardCrystal(2), StandardCrystal(2)))
    assert to_dot(G1) == to_dot(G2) and to_text(G1) == to_text(G2)
    data = json.loads(to_json(G1))
    assert len(data["vertices"]) == 16 and len(data["edges"]) == 22
    assert "style=dotted" in to_dot(G1) and "style=dashed" in to_dot(G1)


def test_runaway_string_is_reported():
    class Loop(StandardCrystal):
        def _f(self, i, b):
            return b

    with pytest.raises(CrystalError):
        phi(Loop(2), 1, letter(1))
