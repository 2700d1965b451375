"""Orthogonal Edelman-Greene insertion and orthogonal mixed insertion.

Letters are int codes (see :mod:`qcrystals.alphabet`), so ``x + 1`` on a
half-integer letter is ``code + 2`` and ``ceil(x) - x`` is ``1`` in code units
exactly when ``x`` is primed.
"""

from __future__ import annotations

from typing import Sequence

from .alphabet import ceil, is_primed, letter, toggle_prime
from .crystal import CrystalError
from .factorizations import IncrCrystal, concat
from .involutions import Perm, is_primed_invol_word
from .tableaux import ShiftedTableau


class _State:
    """Growing tableau kept as explicit rows and columns of a cell map."""

    def __init__(self):
        self.cells: dict = {}

    def row(self, r: int) -> list:
        return sorted(p for p in self.cells if p[0] == r)

    def col(self, c: int) -> list:
        return sorted(p for p in self.cells if p[1] == c)

    def end_of_row(self, r: int):
        boxes = self.row(r)
        return (r, boxes[-1][1] + 1) if boxes else (r, r)

    def end_of_col(self, c: int):
        boxes = self.col(c)
        return (boxes[-1][0] + 1, c) if boxes else (1, c)


def insert_letter(state: _State, x: int) -> tuple:
    """Insert one letter; return ``(new box, ended in column insertion)``."""
    cells = state.cells
    column = False
    index = 1  # row number, or column number once column insertion starts
    while True:
        line = state.col(index) if column else state.row(index)
        cx = ceil(x)
        y = next((p for p in line if ceil(cells[p]) >= cx), None)
        yt = next((p for p in line if ceil(cells[p]) > cx), None)
        if y is None:
            box = state.end_of_col(index) if column else state.end_of_row(index)
            if box[0] == box[1]:
                cells[box] = letter(cx)
                return box, column or is_primed(x)
            cells[box] = x
            return box, column
        if y != yt:
            if yt is not None and is_primed(cells[y]) != is_primed(cells[yt]):
                cells[y], cells[yt] = toggle_prime(cells[y]), toggle_prime(cells[yt])
            on_diag = y[0] == y[1]
            x = x + 2
            if column or on_diag:
                column = True
                index = y[1] + 1
            else:
                index = y[0] + 1
            continue
        old = cells[y]
        if y[0] != y[1]:
            cells[y] = x
            x = old
            index = y[1] + 1 if column else y[0] + 1
        else:
            cells[y] = letter(cx)
            x = old - (1 if is_primed(x) else 0)
            column = True
            index = y[1] + 1


def eg_insert(a: Sequence[Sequence[int]]) -> tuple:
    """Return ``(P, Q)`` for an increasing factorization (tuple of primed words)."""
    state = _State()
    qcells = {}
    for j, factor in enumerate(a, 1):
        for x in factor:
            box, col = insert_letter(state, x)
            qcells[box] = letter(j, col)
    P = ShiftedTableau.from_cells(state.cells)
    Q = ShiftedTableau.from_cells(qcells)
    if any(is_primed(c) for (r, s), c in state.cells.items() if r == s):
        raise CrystalError("insertion produced a primed diagonal entry")
    return P, Q


def eg_insert_word(w: Sequence[int]) -> tuple:
    """Insert a word as a sequence of one-letter factors."""
    return eg_insert([(x,) for x in w])


def row_word(T: ShiftedTableau) -> tuple:
    """Rows left to right, top row first."""
    return tuple(c for row in reversed(T.rows) for c in row)


def is_increasing(T: ShiftedTableau) -> bool:
    cells = T.cells()
    return all(
        (q not in cells or cells[q] > c)
        for (x, y), c in cells.items()
        for q in ((x, y + 1), (x + 1, y))
    )


def check_insertion(a, z: Perm) -> tuple:
    """``eg_insert`` plus the defensive invariants on ``P``."""
    P, Q = eg_insert(a)
    if not is_increasing(P) or not is_primed_invol_word(row_word(P), z):
        raise CrystalError(f"insertion invariant violated for {a}")
    return P, Q


def eg_fiber(z: Perm, n: int, P: ShiftedTableau) -> list:
    """All ``a`` in ``Incr+_n(z)`` whose insertion tableau is ``P``."""
    return [a for a in IncrCrystal(z, n).elements() if eg_insert(a)[0] == P]


def eg_fibers(z: Perm, n: int) -> dict:
    out: dict = {}
    for a in IncrCrystal(z, n).elements():
        out.setdefault(eg_insert(a)[0], []).append(a)
    return out


# -- mixed insertion ----------------------------------------------------------------


def transpose_word(w: Sequence[int], n: int) -> tuple:
    """``w`` to the ``n``-tuple whose ``i``-th word lists positions of ``i`` / ``i'`` in ``w``."""
    out = [[] for _ in range(n)]
    for j, c in enumerate(w, 1):
        out[ceil(c) - 1].append(letter(j, is_primed(c)))
    return tuple(tuple(f) for f in out)


def double_letter(c: int) -> int:
    return letter(2 * ceil(c), is_primed(c))


def halve_letter(c: int) -> int:
    k = ceil(c)
    if k % 2:
        raise ValueError("odd entry cannot be halved")
    return letter(k // 2, is_primed(c))


def double_and_transpose(w: Sequence[int], n: int) -> tuple:
    return tuple(tuple(double_letter(c) for c in f) for f in transpose_word(w, n))


def mixed_insert(w: Sequence[int], n: int | None = None) -> tuple:
    """Return ``(P_HM, Q_HM)``; ``P_HM`` is semistandard, ``Q_HM`` standard."""
    if n is None:
        n = max((ceil(c) for c in w), default=0)
    P_eg, Q_eg = eg_insert(double_and_transpose(w, n))
    Q = ShiftedTableau.from_rows([tuple(halve_letter(c) for c in r) for r in P_eg.rows], P_eg.starts)
    return Q_eg, Q


def doubled_involution(m: int) -> Perm:
    """The involution ``s_2 s_4 ... s_2m`` behind the doubled factorizations."""
    z = Perm.identity()
    for k in range(1, m + 1):
        z = z * Perm.s(2 * k)
    return z


__all__ = [
    "eg_insert", "eg_insert_word", "eg_fiber", "eg_fibers", "row_word", "is_increasing",
    "check_insertion", "transpose_word", "double_and_transpose", "mixed_insert", "doubled_involution",
    "concat",
]
