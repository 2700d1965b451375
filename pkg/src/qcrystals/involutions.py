"""Finitely supported permutations of Z, involution words and their primed forms."""

from __future__ import annotations

import re
from collections import deque
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .alphabet import add_prime, ceil, is_primed, remove_prime


class Perm:
    """Permutation of Z fixing all but finitely many points."""

    __slots__ = ("_map", "_key")

    def __init__(self, mapping: dict | Iterable = ()):
        m = dict(mapping)
        m = {i: j for i, j in m.items() if i != j}
        if sorted(m) != sorted(m.values()):
            raise ValueError("not a bijection")
        self._map = m
        self._key = tuple(sorted(m.items()))

    @classmethod
    def identity(cls) -> "Perm":
        return cls()

    @classmethod
    def s(cls, i: int) -> "Perm":
        return cls({i: i + 1, i + 1: i})

    @classmethod
    def from_cycles(cls, text: str) -> "Perm":
        text = text.strip()
        if text in ("", "()", "id", "1"):
            return cls()
        cycles = re.findall(r"\(([^()]*)\)", text)
        if "".join(f"({c})" for c in cycles) != re.sub(r"\s+", "", text):
            raise ValueError(f"bad cycle notation: {text!r}")
        m = {}
        for c in cycles:
            pts = [int(t) for t in c.split(",") if t.strip()]
            if len(set(pts)) != len(pts) or any(p in m for p in pts):
                raise ValueError(f"bad cycle notation: {text!r}")
            for a, b in zip(pts, pts[1:] + pts[:1]):
                m[a] = b
        return cls(m)

    @classmethod
    def from_oneline(cls, seq: Sequence[int], start: int = 1) -> "Perm":
        return cls({start + k: v for k, v in enumerate(seq)})

    def __call__(self, i: int) -> int:
        return self._map.get(i, i)

    def __mul__(self, other: "Perm") -> "Perm":
        pts = set(self._map) | set(other._map)
        return Perm({i: self(other(i)) for i in pts})

    def inverse(self) -> "Perm":
        return Perm({j: i for i, j in self._map.items()})

    def __eq__(self, other):
        return isinstance(other, Perm) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __lt__(self, other):
        return self._key < other._key

    def support(self) -> list:
        return sorted(self._map)

    def window(self) -> tuple:
        if not self._map:
            return (1, 0)
        return min(self._map), max(self._map)

    def one_line(self, lo: int | None = None, hi: int | None = None) -> tuple:
        a, b = self.window()
        lo = a if lo is None else lo
        hi = b if hi is None else hi
        return tuple(self(i) for i in range(lo, hi + 1))

    def is_involution(self) -> bool:
        return all(self(j) == i for i, j in self._map.items())

    def length(self) -> int:
        lo, hi = self.window()
        return sum(1 for i in range(lo, hi + 1) for j in range(i + 1, hi + 1) if self(i) > self(j))

    def cycles(self) -> list:
        seen, out = set(), []
        for i in sorted(self._map):
            if i in seen:
                continue
            cyc, j = [], i
            while j not in seen:
                seen.add(j)
                cyc.append(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def fmt(self) -> str:
        cyc = self.cycles()
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cyc) if cyc else "()"

    def __repr__(self):
        return f"Perm({self.fmt()})"

    def shift(self, k: int) -> "Perm":
        return Perm({i + k: j + k for i, j in self._map.items()})


def demazure(pi: Perm, i: int) -> Perm:
    """``pi o s_i`` in the 0-Hecke monoid."""
    return pi if pi(i) > pi(i + 1) else pi * Perm.s(i)


def conj(z: Perm, i: int) -> Perm:
    """``s_i o z o s_i`` for an involution ``z``."""
    if z(i) > z(i + 1):
        return z
    if z(i) == i and z(i + 1) == i + 1:
        return z * Perm.s(i)
    s = Perm.s(i)
    return s * z * s


def abs_length(z: Perm) -> int:
    return sum(1 for i, j in z._map.items() if i < j)


def invol_length(z: Perm) -> int:
    return (z.length() + abs_length(z)) // 2


def evaluate(word: Iterable[int]) -> Perm:
    """The involution ``s_{a_n} o ... o s_{a_1} o 1 o s_{a_1} o ... o s_{a_n}`` (unprimed letters)."""
    z = Perm()
    for a in word:
        z = conj(z, a)
    return z


def is_invol_word(word: Sequence[int], z: Perm | None = None) -> bool:
    """``word`` holds plain integers here."""
    y = Perm()
    for a in word:
        if y(a) > y(a + 1):
            return False
        y = conj(y, a)
    return z is None or y == z


def _descent_predecessor(z: Perm, a: int) -> Perm:
    if z(a) == a + 1:
        return z * Perm.s(a)
    s = Perm.s(a)
    return s * z * s


@lru_cache(maxsize=None)
def _invol_words_cached(z: Perm) -> frozenset:
    if not z._map:
        return frozenset({()})
    lo, hi = z.window()
    out = set()
    for a in range(lo, hi):
        if z(a) > z(a + 1):
            y = _descent_predecessor(z, a)
            for w in _invol_words_cached(y):
                out.add(w + (a,))
    return frozenset(out)


def invol_words(z: Perm) -> set:
    """All involution words of ``z`` as tuples of plain integers."""
    if not z.is_involution():
        raise ValueError("not an involution")
    return set(_invol_words_cached(z))


def commutations(word: Sequence[int]) -> set:
    """1-based positions where the prefix involution fixes ``a_i`` and ``a_i + 1``."""
    out = set()
    y = Perm()
    for k, a in enumerate(word, 1):
        if y(a) < y(a + 1) and y(a) == a and y(a + 1) == a + 1:
            out.add(k)
        if y(a) > y(a + 1):
            raise ValueError("not an involution word")
        y = conj(y, a)
    return out


def _letters(word_ints: Sequence[int]) -> tuple:
    return tuple(2 * a for a in word_ints)


def primed_invol_words(z: Perm) -> set:
    """Primed involution words as tuples of letter codes."""
    out = set()
    for w in invol_words(z):
        comm = sorted(commutations(w))
        base = _letters(w)
        for r in range(len(comm) + 1):
            for S in combinations(comm, r):
                v = list(base)
                for k in S:
                    v[k - 1] = add_prime(v[k - 1])
                out.add(tuple(v))
    return out


def word_ints(w: Sequence[int]) -> tuple:
    return tuple(ceil(c) for c in w)


def is_primed_invol_word(w: Sequence[int], z: Perm | None = None) -> bool:
    ints = word_ints(w)
    if not is_invol_word(ints, z):
        return False
    comm = commutations(ints)
    return all(k in comm for k, c in enumerate(w, 1) if is_primed(c))


def involution_of(w: Sequence[int]) -> Perm:
    return evaluate(word_ints(w))


def hat_neighbors(w: tuple) -> set:
    out = set()
    L = len(w)
    for k in range(L - 1):
        X, Y = w[k], w[k + 1]
        if abs(ceil(X) - ceil(Y)) > 1:
            out.add(w[:k] + (Y, X) + w[k + 2:])
    for k in range(L - 2):
        A, B, C = w[k:k + 3]
        if is_primed(B):
            continue
        if not is_primed(A) and not is_primed(C) and A == C and abs(ceil(A) - ceil(B)) == 1:
            out.add(w[:k] + (B, A, B) + w[k + 3:])
        # X'YX <-> YXY'
        if is_primed(A) and not is_primed(C) and remove_prime(A) == C and abs(ceil(B) - ceil(C)) == 1:
            out.add(w[:k] + (B, C, add_prime(B)) + w[k + 3:])
        if not is_primed(A) and is_primed(C) and remove_prime(C) == A and abs(ceil(A) - ceil(B)) == 1:
            out.add(w[:k] + (add_prime(B), A, B) + w[k + 3:])
    if L >= 1:
        t = add_prime(w[0]) if not is_primed(w[0]) else remove_prime(w[0])
        out.add((t,) + w[1:])
    if L >= 2 and not is_primed(w[0]) and not is_primed(w[1]):
        out.add((w[1], w[0]) + w[2:])
    out.discard(w)
    return out


def hat_equiv_class(w: Sequence[int], cap: int = 10**6) -> set:
    start = tuple(w)
    seen = {start}
    q = deque([start])
    while q:
        v = q.popleft()
        for u in hat_neighbors(v):
            if u not in seen:
                seen.add(u)
                if len(seen) > cap:
                    raise RuntimeError("equivalence class too large")
                q.append(u)
    return seen


def gamma(word: Sequence[int], i: int) -> frozenset:
    """The pair ``s_{w_m} ... s_{w_{i+1}} ({w_i, w_i + 1})`` (1-based ``i``)."""
    ints = word_ints(word)
    pair = {ints[i - 1], ints[i - 1] + 1}
    for a in ints[i:]:
        s = Perm.s(a)
        pair = {s(x) for x in pair}
    return frozenset(pair)


def marked_cycles(w: Sequence[int]) -> set:
    if not is_primed_invol_word(w):
        raise ValueError("not a primed involution word")
    return {gamma(w, k) for k, c in enumerate(w, 1) if is_primed(c)}


def involution_code(z: Perm) -> dict:
    """``i -> #{j : z(j) <= i < j and z(i) > z(j)}`` on the support window."""
    lo, hi = z.window()
    return {i: sum(1 for j in range(i + 1, hi + 1) if z(j) <= i and z(i) > z(j))
            for i in range(lo, hi + 1)}


def transpose(parts: Sequence[int]) -> tuple:
    parts = [p for p in parts if p]
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= k) for k in range(1, max(parts) + 1))


def involution_shape(z: Perm) -> tuple:
    code = sorted((c for c in involution_code(z).values() if c), reverse=True)
    return transpose(code)


def is_vexillary(z: Perm) -> bool:
    lo, hi = z.window()
    seq = z.one_line(lo - 1, hi + 1)
    for i1, i2, i3, i4 in combinations(range(len(seq)), 4):
        if seq[i2] < seq[i1] < seq[i4] < seq[i3]:
            return False
    return True


def direct_sum(y: Perm, M: int, z: Perm) -> Perm:
    """``y`` on ``[M]`` beside ``z`` shifted up by ``M``."""
    m = dict(y._map)
    m.update(z.shift(M)._map)
    return Perm(m)


def involutions(N: int) -> list:
    """All involutions of ``{1..N}``."""
    out = []

    def rec(free, m):
        if not free:
            out.append(Perm(m))
            return
        a, rest = free[0], free[1:]
        rec(rest, m)
        for k, b in enumerate(rest):
            m2 = dict(m)
            m2[a], m2[b] = b, a
            rec(rest[:k] + rest[k + 1:], m2)

    rec(list(range(1, N + 1)), {})
    return sorted(out, key=lambda p: (invol_length(p), p.one_line(1, N)))


# --- forbidden patterns -----------------------------------------------------

def forbidden_patterns(w: Sequence[int]) -> list:
    """Consecutive patterns that a primed involution word must avoid; returns hits."""
    hits = []
    P = is_primed
    for k in range(len(w) - 1):
        A, B = w[k], w[k + 1]
        if ceil(A) == ceil(B):
            hits.append(("repeat", k))
        if P(A) and P(B) and abs(ceil(A) - ceil(B)) == 1:
            hits.append(("adjacent-primes", k))
    for k in range(len(w) - 2):
        A, B, C = w[k:k + 3]
        if ceil(A) != ceil(C):
            continue
        primes = (P(A), P(B), P(C))
        if primes in {(False, True, False), (True, True, False), (True, False, True),
                      (False, True, True), (True, True, True)}:
            hits.append(("xyx-primes", k))
        if primes in {(False, False, False), (True, False, False), (False, False, True)}:
            if k == 0 or abs(ceil(A) - ceil(B)) != 1:
                hits.append(("xyx", k))
    if len(w) >= 2:
        A, B = w[0], w[1]
        if not P(A) and P(B) and ceil(B) == ceil(A) + 1:
            hits.append(("initial", 0))
        if not P(A) and P(B) and ceil(B) == ceil(A) - 1:
            hits.append(("initial", 0))
    return hits
