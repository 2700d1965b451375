"""Increasing factorizations of primed involution words and Coxeter-Knuth moves."""

from __future__ import annotations

from collections import deque
from typing import Sequence

from .alphabet import (add_prime, ceil, fmt_word, is_primed, is_strictly_increasing,
                       letter, parse_word, remove_prime, toggle_prime)
from .crystal import BAR, Crystal
from .involutions import Perm, involution_of, involution_shape, is_primed_invol_word, primed_invol_words


def concat(a) -> tuple:
    return tuple(c for part in a for c in part)


def unprime_factorization(a) -> tuple:
    return tuple(tuple(remove_prime(c) for c in part) for part in a)


def pair(v: Sequence[int], w: Sequence[int]) -> list:
    """Pairs ``(v_i, w_j)``: each ``w_j``, largest first, takes the smallest free ``v_i`` above it."""
    used = [False] * len(v)
    out = []
    for y in sorted(w, reverse=True):
        for k, x in enumerate(v):
            if not used[k] and ceil(x) > ceil(y):
                used[k] = True
                out.append((x, y))
                break
    return out


def _unpaired(a, i):
    pr = pair(a[i - 1], a[i])
    pv = {x for x, _ in pr}
    pw = {y for _, y in pr}
    return [x for x in a[i - 1] if x not in pv], [y for y in a[i] if y not in pw]


def _with(a, i, new_i, new_j):
    out = list(a)
    out[i - 1] = tuple(sorted(new_i))
    out[i] = tuple(sorted(new_j))
    return tuple(out)


def incr_f(a, i: int):
    free_v, _ = _unpaired(a, i)
    if not free_v:
        return None
    x = max(free_v)
    lower = set(a[i - 1])
    upper = set(a[i])
    taken = {ceil(c) for c in upper}
    y = ceil(x)
    while y in taken:
        y += 1
    lower.discard(x)
    if is_primed(x):
        upper.add(letter(y, True))
    else:
        upper.add(letter(y))
        for v in range(ceil(x), y):
            if letter(v + 1) in lower and letter(v, True) in upper:
                lower.discard(letter(v + 1))
                lower.add(letter(v + 1, True))
                upper.discard(letter(v, True))
                upper.add(letter(v))
    return _with(a, i, lower, upper)


def incr_e(a, i: int):
    _, free_w = _unpaired(a, i)
    if not free_w:
        return None
    # smallest unpaired letter: the one that makes e_i undo f_i
    y = min(free_w)
    lower = set(a[i - 1])
    upper = set(a[i])
    taken = {ceil(c) for c in lower}
    x = ceil(y)
    while x in taken:
        x -= 1
    upper.discard(y)
    if is_primed(y):
        lower.add(letter(x, True))
    else:
        lower.add(letter(x))
        for v in range(x, ceil(y)):
            if letter(v + 1, True) in lower and letter(v) in upper:
                lower.discard(letter(v + 1, True))
                lower.add(letter(v + 1))
                upper.discard(letter(v))
                upper.add(letter(v, True))
    return _with(a, i, lower, upper)


def incr_fbar(a):
    if len(a) < 2:
        return None
    a1, a2 = list(a[0]), list(a[1])
    if not a1 or any(a1[0] >= c for c in a2):
        return None
    if len(a1) >= 2 and is_primed(a1[0]) != is_primed(a1[1]):
        a1[0], a1[1] = toggle_prime(a1[0]), toggle_prime(a1[1])
    x = a1.pop(0)
    return (tuple(a1), (x,) + tuple(a2)) + tuple(a[2:])


def incr_ebar(a):
    if len(a) < 2:
        return None
    a1, a2 = list(a[0]), list(a[1])
    if not a2 or any(a2[0] >= c for c in a1):
        return None
    if a1 and is_primed(a1[0]) != is_primed(a2[0]):
        a1[0], a2[0] = toggle_prime(a1[0]), toggle_prime(a2[0])
    x = a2.pop(0)
    return ((x,) + tuple(a1), tuple(a2)) + tuple(a[2:])


def incr_f0(a):
    if not a or not a[0] or is_primed(a[0][0]):
        return None
    return ((add_prime(a[0][0]),) + a[0][1:],) + tuple(a[1:])


def incr_e0(a):
    if not a or not a[0] or not is_primed(a[0][0]):
        return None
    return ((remove_prime(a[0][0]),) + a[0][1:],) + tuple(a[1:])


def factorizations_of(w: Sequence[int], n: int) -> list:
    """Ways to cut ``w`` into ``n`` strictly increasing (possibly empty) blocks."""
    w = tuple(w)
    out = []

    def rec(start, k, acc):
        if k == n - 1:
            rest = w[start:]
            if is_strictly_increasing(rest):
                out.append(tuple(acc) + (rest,))
            return
        for end in range(start, len(w) + 1):
            block = w[start:end]
            if not is_strictly_increasing(block):
                break
            rec(end, k + 1, acc + [block])

    if n == 0:
        return [()] if not w else []
    rec(0, 0, [])
    return out


class IncrCrystal(Crystal):
    def __init__(self, z: Perm, n: int, category: str = "qplus"):
        super().__init__(n, category)
        self.z = z

    def elements(self):
        if len(involution_shape(self.z)) > self.n:
            return []
        words = primed_invol_words(self.z)
        if self.category != "qplus":
            words = {w for w in words if not any(is_primed(c) for c in w)}
        out = []
        for w in words:
            out.extend(factorizations_of(w, self.n))
        return sorted(out)

    def wt(self, a):
        return tuple(len(p) for p in a)

    def _f(self, i, a):
        if i >= 1:
            return incr_f(a, i)
        if i == BAR:
            return incr_fbar(a)
        return incr_f0(a)

    def _e(self, i, a):
        if i >= 1:
            return incr_e(a, i)
        if i == BAR:
            return incr_ebar(a)
        return incr_e0(a)

    def fmt(self, a):
        return fmt_factorization(a)

    def payload(self, a):
        return [[c for c in fmt_word(p).split()] for p in a]


def fmt_factorization(a) -> str:
    return " | ".join(fmt_word(p) for p in a).replace("  ", " ").strip()


def parse_factorization(s: str) -> tuple:
    return tuple(parse_word(p) for p in s.split("|"))


def is_valid(a, z: Perm | None = None) -> bool:
    return all(is_strictly_increasing(p) for p in a) and is_primed_invol_word(concat(a), z)


# --- orthogonal Coxeter-Knuth operators -------------------------------------

def ock(w: Sequence[int], i: int) -> tuple:
    w = tuple(w)
    m = len(w)
    if i == -1:
        return (toggle_prime(w[0]),) + w[1:] if m >= 1 else w
    if i == 0:
        if m < 2:
            return w
        a, b = w[0], w[1]
        na = 2 * ceil(b) - (1 if is_primed(a) else 0)
        nb = 2 * ceil(a) - (1 if is_primed(b) else 0)
        return (na, nb) + w[2:]
    if i < -1 or i + 2 > m:
        return w
    A, B, C = w[i - 1:i + 2]
    new = _ock3(A, B, C)
    return w[:i - 1] + new + w[i + 2:]


def _ock3(A, B, C) -> tuple:
    cA, cB, cC = ceil(A), ceil(B), ceil(C)
    if cA == cC:
        if not any(map(is_primed, (A, B, C))):
            return (B, A, B)
        if is_primed(A) and not is_primed(B) and not is_primed(C):  # X'YX -> YXY'
            return (B, C, add_prime(B))
        if not is_primed(A) and not is_primed(B) and is_primed(C):  # YXY' -> X'YX
            return (add_prime(B), A, B)
        return (A, B, C)
    if len({cA, cB, cC}) < 3:
        return (A, B, C)
    lo, mid, hi = sorted((A, B, C), key=ceil)
    swaps = {
        (lo, hi, mid): (hi, lo, mid), (hi, lo, mid): (lo, hi, mid),
        (mid, hi, lo): (mid, lo, hi), (mid, lo, hi): (mid, hi, lo),
    }
    return swaps.get((A, B, C), (A, B, C))


def descents(w: Sequence[int]) -> set:
    return {k for k in range(1, len(w)) if w[k - 1] > w[k]}


def ock_reachable(w: Sequence[int], target: Sequence[int], indices: Sequence[int]) -> bool:
    """BFS over words produced by ``ock_j`` with ``j`` in ``indices``."""
    start, target = tuple(w), tuple(target)
    seen = {start}
    q = deque([start])
    while q:
        v = q.popleft()
        if v == target:
            return True
        for j in indices:
            u = ock(v, j)
            if u not in seen:
                seen.add(u)
                q.append(u)
    return False


def incr_of_word(w) -> tuple:
    """One-letter factors, used to feed a word to insertion."""
    return tuple((c,) for c in w)


def z_of(a) -> Perm:
    return involution_of(concat(a))
