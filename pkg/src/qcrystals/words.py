"""The crystal of primed words of fixed length, operated on directly."""

from __future__ import annotations

from itertools import product

from .alphabet import ceil, compact, fmt_word, is_primed, letter, parse_word
from .crystal import BAR, Crystal


def unpaired_indices(w, i: int) -> list:
    """0-based positions left unmatched when ``i, i'`` read as ``)`` and ``i+1, (i+1)'`` as ``(``."""
    opens = []
    closes = []
    for k, c in enumerate(w):
        x = ceil(c)
        if x == i + 1:
            opens.append(k)
        elif x == i:
            if opens:
                opens.pop()
            else:
                closes.append(k)
    return sorted(closes + opens)


def word_f(w, i: int, n: int | None = None):
    w = tuple(w)
    if i >= 1:
        if n is not None and i >= n:
            return None
        cand = [k for k in unpaired_indices(w, i) if ceil(w[k]) == i]
        if not cand:
            return None
        k = cand[-1]
        return w[:k] + (w[k] + 2,) + w[k + 1:]
    if i == 0:
        for k, c in enumerate(w):
            if ceil(c) == 1:
                return w[:k] + (c - 1,) + w[k + 1:] if not is_primed(c) else None
        return None
    if i == BAR:
        if n is not None and n < 2:
            return None
        j = None
        for k, c in enumerate(w):
            x = ceil(c)
            if x == 2:
                return None
            if x == 1:
                j = k
                break
        if j is None:
            return None
        k = next((t for t in range(j + 1, len(w)) if ceil(w[t]) == 1), None)
        out = list(w)
        if k is None or w[j] == w[k]:
            out[j] = w[j] + 2
        elif not is_primed(w[j]):  # w_j = 1, w_k = 1'
            out[j], out[k] = letter(2, True), letter(1)
        else:  # w_j = 1', w_k = 1
            out[j], out[k] = letter(2), letter(1, True)
        return tuple(out)
    raise ValueError(i)


def word_e(w, i: int, n: int | None = None):
    w = tuple(w)
    if i >= 1:
        if n is not None and i >= n:
            return None
        cand = [k for k in unpaired_indices(w, i) if ceil(w[k]) == i + 1]
        if not cand:
            return None
        k = cand[0]
        return w[:k] + (w[k] - 2,) + w[k + 1:]
    if i == 0:
        for k, c in enumerate(w):
            if ceil(c) == 1:
                return w[:k] + (c + 1,) + w[k + 1:] if is_primed(c) else None
        return None
    if i == BAR:
        if n is not None and n < 2:
            return None
        j = None
        for k, c in enumerate(w):
            x = ceil(c)
            if x == 1:
                return None
            if x == 2:
                j = k
                break
        if j is None:
            return None
        k = next((t for t in range(j + 1, len(w)) if ceil(w[t]) == 1), None)
        out = list(w)
        if k is None or is_primed(w[j]) == is_primed(w[k]):
            out[j] = w[j] - 2
        elif is_primed(w[j]):  # w_j = 2', w_k = 1
            out[j], out[k] = letter(1), letter(1, True)
        else:  # w_j = 2, w_k = 1'
            out[j], out[k] = letter(1, True), letter(1)
        return tuple(out)
    raise ValueError(i)


class WordCrystal(Crystal):
    """Words of length ``m`` in ``1' < 1 < ... < n' < n`` (unprimed only unless q+)."""

    def __init__(self, n: int, m: int, category: str = "qplus"):
        super().__init__(n, category)
        self.m = m

    def alphabet(self) -> list:
        if self.category == "qplus":
            return list(range(1, 2 * self.n + 1))
        return [2 * k for k in range(1, self.n + 1)]

    def elements(self):
        return list(product(self.alphabet(), repeat=self.m))

    def wt(self, w):
        out = [0] * self.n
        for c in w:
            out[ceil(c) - 1] += 1
        return tuple(out)

    def _e(self, i, w):
        return word_e(w, i, self.n)

    def _f(self, i, w):
        return word_f(w, i, self.n)

    def fmt(self, w):
        return compact(w) if self.n < 10 else fmt_word(w)

    def payload(self, w):
        return fmt_word(w)

    def parse(self, s: str):
        w = parse_word(s)
        if len(w) != self.m or any(not 1 <= ceil(c) <= self.n for c in w):
            raise ValueError(f"{s!r} is not in the word crystal of rank {self.n}, length {self.m}")
        return w


def nu0_words(w, lowest) -> int:
    """Count of unprimed letters relative to a reference (lowest) word."""
    return sum(not is_primed(c) for c in w) - sum(not is_primed(c) for c in lowest)
