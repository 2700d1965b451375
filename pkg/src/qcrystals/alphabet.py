"""Primed integers, primed words and strict partitions.

A letter is stored as a plain ``int`` code: the unprimed number ``k`` is
``2k`` and the primed number ``k'`` is ``2k - 1``.  Integer order on codes
is then the order ``... < 0' < 0 < 1' < 1 < 2' < ...``.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

Letter = int
Word = tuple  # tuple[Letter, ...]


def letter(k: int, primed: bool = False) -> Letter:
    return 2 * k - 1 if primed else 2 * k


def ceil(c: Letter) -> int:
    return (c + 1) // 2


def is_primed(c: Letter) -> bool:
    return c % 2 == 1


def add_prime(c: Letter) -> Letter:
    return 2 * ceil(c) - 1


def remove_prime(c: Letter) -> Letter:
    return 2 * ceil(c)


def toggle_prime(c: Letter) -> Letter:
    return remove_prime(c) if is_primed(c) else add_prime(c)


def shift(c: Letter, k: int) -> Letter:
    """Add the integer ``k`` to a letter, keeping its prime."""
    return c + 2 * k


def unprime_word(w: Iterable[Letter]) -> Word:
    return tuple(remove_prime(c) for c in w)


def fmt_letter(c: Letter) -> str:
    return f"{ceil(c)}'" if is_primed(c) else str(ceil(c))


_TOKEN = re.compile(r"-?\d+'?")


def parse_letter(s: str) -> Letter:
    s = s.strip()
    if not _TOKEN.fullmatch(s):
        raise ValueError(f"bad letter: {s!r}")
    if s.endswith("'"):
        return letter(int(s[:-1]), True)
    return letter(int(s))


def parse_word(s: str) -> Word:
    """Parse ``"4 1' 3"`` or the compact form ``"41'3"`` (single digits only)."""
    s = s.strip()
    if not s:
        return ()
    if any(ch.isspace() for ch in s):
        return tuple(parse_letter(t) for t in s.split())
    if not re.fullmatch(r"(\d'?)+", s):
        if _TOKEN.fullmatch(s):
            return (parse_letter(s),)
        raise ValueError(f"bad word: {s!r}")
    return tuple(parse_letter(t) for t in re.findall(r"\d'?", s))


def fmt_word(w: Sequence[Letter], sep: str = " ") -> str:
    return sep.join(fmt_letter(c) for c in w)


def compact(w: Sequence[Letter]) -> str:
    """Spaceless rendering; only unambiguous for single-digit letters."""
    return fmt_word(w, sep="")


def is_strictly_increasing(w: Sequence[Letter]) -> bool:
    return all(a < b for a, b in zip(w, w[1:]))


# --- strict partitions -------------------------------------------------------

def is_strict(parts: Sequence[int]) -> bool:
    nz = [p for p in parts if p]
    return all(p > 0 for p in nz) and all(a > b for a, b in zip(nz, nz[1:]))


def strict_partition(parts: Iterable[int]) -> tuple:
    """Normalize to a tuple of positive parts, rejecting non-strict input."""
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts) or not is_strict(parts):
        raise ValueError(f"not a strict partition: {parts}")
    nz = tuple(p for p in parts if p)
    if list(nz) != sorted(nz, reverse=True):
        raise ValueError(f"not a strict partition: {parts}")
    return nz


def parse_partition(s: str) -> tuple:
    s = s.strip().strip("()")
    if not s:
        return ()
    return strict_partition(int(t) for t in s.split(","))


def fmt_partition(lam: Sequence[int]) -> str:
    return ",".join(str(p) for p in lam)


def shifted_diagram(lam: Sequence[int]) -> set:
    return {(i, i + j - 1) for i, p in enumerate(lam, 1) for j in range(1, p + 1)}


def strict_partitions_inside(outer: Sequence[int]) -> list:
    """All strict partitions contained in ``outer`` (as diagrams), including the empty one."""
    out = []

    def rec(prefix, i):
        out.append(tuple(prefix))
        if i >= len(outer):
            return
        cap = outer[i] if not prefix else min(outer[i], prefix[-1] - 1)
        for p in range(1, cap + 1):
            rec(prefix + [p], i + 1)

    rec([], 0)
    return sorted(set(out), key=lambda p: (sum(p), p))


def strict_partitions_of(k: int, max_len: int | None = None) -> list:
    out = []

    def rec(rem, cap, prefix):
        if rem == 0:
            out.append(tuple(prefix))
            return
        if max_len is not None and len(prefix) >= max_len:
            return
        for p in range(min(rem, cap), 0, -1):
            rec(rem - p, p - 1, prefix + [p])

    rec(k, k, [])
    return out
