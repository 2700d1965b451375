from qcrystals.polynomials import Poly, in_sym, in_sym_p, in_sym_q


def x(i, n):
    return Poly.monomial(tuple(int(j == i) for j in range(n)))


def test_ring_arithmetic():
    n = 2
    p = (x(0, n) + x(1, n)) * (x(0, n) - x(1, n))
    assert p == x(0, n) * x(0, n) - x(1, n) * x(1, n)
    assert not (p - p)
    assert p.coeff((2, 0)) == 1 and p.coeff((1, 1)) == 0


def test_leading_is_lex_max():
    p = x(0, 3) * x(2, 3) + x(1, 3) * x(1, 3) * 5
    assert p.leading() == ((1, 0, 1), 1)


def test_symmetry_and_q_rings():
    n = 2
    e1 = x(0, n) + x(1, n)
    assert in_sym(e1) and not in_sym(x(0, n))
    q1 = e1 * 2
    assert in_sym_q(q1) and in_sym_p(e1) and not in_sym_q(e1)
    # one variable: constants plus even multiples of positive powers
    assert in_sym_q(Poly.constant(1, 1) + x(0, 1) * 2)
    assert not in_sym_q(x(0, 1))


def test_fmt_and_json_are_deterministic():
    p = x(1, 2) * 3 + x(0, 2)
    assert p.fmt() == (x(0, 2) + x(1, 2) * 3).fmt()
    assert p.to_json() == (x(0, 2) + x(1, 2) * 3).to_json()
