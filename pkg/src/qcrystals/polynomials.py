"""Sparse integer polynomials in a fixed number of variables."""

from __future__ import annotations

from collections import defaultdict
from itertools import permutations
from typing import Iterable, Mapping


class Poly:
    """Immutable map from exponent tuples (length ``n``) to nonzero ints."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping | Iterable = ()):
        self.n = n
        acc: dict = defaultdict(int)
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exp, c in items:
            exp = tuple(exp)
            if len(exp) != n:
                raise ValueError(f"exponent {exp} has wrong length for n={n}")
            acc[exp] += c
        self.terms = {e: c for e, c in acc.items() if c}

    @classmethod
    def monomial(cls, exp, coeff: int = 1) -> "Poly":
        return cls(len(exp), {tuple(exp): coeff})

    @classmethod
    def constant(cls, n: int, c: int) -> "Poly":
        return cls(n, {(0,) * n: c})

    def _check(self, other: "Poly"):
        if other.n != self.n:
            raise ValueError("polynomials in different numbers of variables")

    def __add__(self, other):
        if isinstance(other, int):
            other = Poly.constant(self.n, other)
        self._check(other)
        return Poly(self.n, list(self.terms.items()) + list(other.terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Poly(self.n, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        acc: dict = defaultdict(int)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                acc[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return Poly(self.n, acc)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly.constant(self.n, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"Poly({self.n}, {self.fmt()!r})"

    def coeff(self, exp) -> int:
        return self.terms.get(tuple(exp), 0)

    def is_zero(self) -> bool:
        return not self.terms

    def leading(self):
        """Lex-largest exponent and its coefficient."""
        exp = max(self.terms)
        return exp, self.terms[exp]

    def permute(self, perm) -> "Poly":
        """Rename variable ``x_j`` to ``x_{perm[j]}`` (0-indexed)."""
        out = {}
        for e, c in self.terms.items():
            ne = [0] * self.n
            for j, a in enumerate(e):
                ne[perm[j]] = a
            out[tuple(ne)] = c
        return Poly(self.n, out)

    def is_symmetric(self) -> bool:
        for j in range(self.n - 1):
            perm = list(range(self.n))
            perm[j], perm[j + 1] = perm[j + 1], perm[j]
            if self.permute(perm) != self:
                return False
        return True

    def fmt(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            mono = " ".join(f"x{j + 1}^{a}" for j, a in enumerate(e) if a)
            parts.append(f"{self.terms[e]} * {mono}" if mono else f"{self.terms[e]}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {" ".join(map(str, e)): c for e, c in sorted(self.terms.items(), reverse=True)}


def in_sym(f: Poly) -> bool:
    return f.is_symmetric()


def in_sym_p(f: Poly) -> bool:
    """Symmetric and ``f(x1, -x1, x3, ...)`` free of ``x1``."""
    if not f.is_symmetric():
        return False
    if f.n < 2:
        return True
    acc: dict = defaultdict(int)
    for e, c in f.terms.items():
        a, b = e[0], e[1]
        acc[(a + b,) + e[2:]] += c * (-1) ** b
    return all(c == 0 for e, c in acc.items() if e[0] > 0)


def in_sym_q(f: Poly) -> bool:
    """In the P-ring, and every term involving ``x1`` has an even coefficient.

    For one variable this is ``Z + 2 x1 Z[x1]``, the reading under which the
    constant ``Q_() = 1`` belongs to the ring.
    """
    if not in_sym_p(f):
        return False
    return all(c % 2 == 0 for e, c in f.terms.items() if e[0] > 0)


def all_permutations_equal(f: Poly) -> bool:
    """Brute-force symmetry check used as an oracle for ``is_symmetric``."""
    return all(f.permute(p) == f for p in permutations(range(f.n)))
