"""Semistandard shifted tableaux and their q+ crystal operators.

Coordinates are 1-based ``(row, col)`` in French convention: row 1 is the
bottom row and the diagonal is ``row == col``.  A tableau is stored as rows
listed bottom to top together with the column of each row's first box, so
straight shapes have ``starts == (1, 2, 3, ...)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .alphabet import (
    ceil,
    fmt_letter,
    is_primed,
    letter,
    parse_letter,
    shifted_diagram,
    toggle_prime,
)
from .crystal import BAR, Crystal, CrystalError

Cells = dict  # (row, col) -> letter code


@dataclass(frozen=True, order=True, repr=False)
class ShiftedTableau:
    rows: tuple
    starts: tuple

    def __repr__(self) -> str:
        return f"ShiftedTableau({self.fmt()!r})"

    # -- construction -----------------------------------------------------
    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], starts: Sequence[int] | None = None) -> "ShiftedTableau":
        rows = tuple(tuple(r) for r in rows)
        while rows and not rows[-1]:
            rows = rows[:-1]
        if starts is None:
            starts = tuple(range(1, len(rows) + 1))
        return cls(rows, tuple(starts[: len(rows)]))

    @classmethod
    def from_cells(cls, cells: Cells) -> "ShiftedTableau":
        if not cells:
            return cls((), ())
        top = max(x for x, _ in cells)
        rows, starts = [], []
        for x in range(1, top + 1):
            cols = sorted(y for (r, y) in cells if r == x)
            if cols and cols != list(range(cols[0], cols[-1] + 1)):
                raise ValueError(f"row {x} is not contiguous")
            starts.append(cols[0] if cols else x)
            rows.append(tuple(cells[(x, y)] for y in cols))
        return cls.from_rows(rows, starts)

    @classmethod
    def parse(cls, s: str) -> "ShiftedTableau":
        """Rows bottom to top separated by ``/``; ``.`` marks an inner (skew) box."""
        s = s.strip()
        if not s or s == "∅":
            return cls((), ())
        rows, starts = [], []
        for x, chunk in enumerate(s.split("/"), 1):
            toks = chunk.split()
            lead = 0
            while lead < len(toks) and toks[lead] == ".":
                lead += 1
            rows.append(tuple(parse_letter(t) for t in toks[lead:]))
            starts.append(x + lead)
        return cls.from_rows(rows, starts)

    # -- access -----------------------------------------------------------
    def cells(self) -> Cells:
        return {(x, s + j): c for x, (row, s) in enumerate(zip(self.rows, self.starts), 1) for j, c in enumerate(row)}

    @property
    def shape(self) -> tuple:
        return tuple(s + len(r) - x for x, (r, s) in enumerate(zip(self.rows, self.starts), 1))

    @property
    def inner(self) -> tuple:
        return tuple(p for p in (s - x for x, s in enumerate(self.starts, 1)) if p)

    def is_straight(self) -> bool:
        return all(s == x for x, s in enumerate(self.starts, 1))

    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def entries(self) -> list:
        return [c for r in self.rows for c in r]

    def wt(self, n: int) -> tuple:
        out = [0] * n
        for c in self.entries():
            out[ceil(c) - 1] += 1
        return tuple(out)

    def primes(self) -> int:
        return sum(is_primed(c) for c in self.entries())

    def primes_diag(self) -> int:
        return sum(is_primed(c) for (x, y), c in self.cells().items() if x == y)

    # -- output -----------------------------------------------------------
    def fmt(self) -> str:
        if not self.rows:
            return "∅"
        parts = []
        for x, (row, s) in enumerate(zip(self.rows, self.starts), 1):
            parts.append(" ".join(["."] * (s - x) + [fmt_letter(c) for c in row]))
        return " / ".join(parts)

    def to_json(self) -> dict:
        return {
            "shape": list(self.shape),
            "inner": list(self.inner),
            "rows": [[fmt_letter(c) for c in r] for r in self.rows],
        }

    def pretty(self) -> str:
        """Multi-line French picture (top row printed first)."""
        if not self.rows:
            return "∅"
        width = max(len(fmt_letter(c)) for c in self.entries())
        lines = []
        for x in range(len(self.rows), 0, -1):
            row, s = self.rows[x - 1], self.starts[x - 1]
            pad = " " * ((width + 1) * (s - 1))
            lines.append(pad + " ".join(fmt_letter(c).rjust(width) for c in row))
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.fmt()


def is_semistandard(T: ShiftedTableau) -> bool:
    cells = T.cells()
    for (x, y), c in cells.items():
        left = cells.get((x, y - 1))
        if left is not None and (c < left or (c == left and is_primed(c))):
            return False
        below = cells.get((x - 1, y))
        if below is not None and (c < below or (c == below and not is_primed(c))):
            return False
    return True


def is_standard(T: ShiftedTableau) -> bool:
    return is_semistandard(T) and sorted(ceil(c) for c in T.entries()) == list(range(1, T.size() + 1))


def unprime_diag(T: ShiftedTableau) -> ShiftedTableau:
    cells = T.cells()
    return ShiftedTableau.from_rows(
        [tuple(c + 1 if is_primed(c) and s + j == x else c for j, c in enumerate(row))
         for x, (row, s) in enumerate(zip(T.rows, T.starts), 1)],
        T.starts,
    ) if cells else T


def _rebuild(T: ShiftedTableau, cells: Cells) -> ShiftedTableau:
    return ShiftedTableau.from_rows(
        [tuple(cells[(x, s + j)] for j in range(len(row))) for x, (row, s) in enumerate(zip(T.rows, T.starts), 1)],
        T.starts,
    )


# -- enumeration --------------------------------------------------------------


def shifted_tableaux(lam: Sequence[int], n: int, diag_primes: bool = True) -> list:
    """All semistandard shifted tableaux of shape ``lam`` with entries in [n].

    With ``diag_primes=False`` only tableaux without primed diagonal entries.
    """
    lam = tuple(lam)
    if len(lam) > n:
        return []
    boxes = sorted(shifted_diagram(lam))
    out = []
    cells: Cells = {}

    def rec(k):
        if k == len(boxes):
            out.append(ShiftedTableau.from_rows(
                [tuple(cells[(x, x + j)] for j in range(p)) for x, p in enumerate(lam, 1)]))
            return
        x, y = boxes[k]
        lo = 1
        left, below = cells.get((x, y - 1)), cells.get((x - 1, y))
        if left is not None:
            lo = max(lo, left + 1 if is_primed(left) else left)
        if below is not None:
            lo = max(lo, below if is_primed(below) else below + 1)
        for c in range(lo, 2 * n + 1):
            if x == y and is_primed(c) and not diag_primes:
                continue
            cells[(x, y)] = c
            rec(k + 1)
        cells.pop((x, y), None)

    rec(0)
    return out


def standard_shifted_tableaux(lam: Sequence[int], diag_primes: bool = True) -> list:
    """Standard shifted tableaux of shape ``lam`` (entries 1..|lam| once each, primes free off-diagonal)."""
    lam = tuple(lam)
    N = sum(lam)
    out = []
    for T in shifted_tableaux(lam, N, diag_primes):
        if sorted(ceil(c) for c in T.entries()) == list(range(1, N + 1)):
            out.append(T)
    return out


# -- reading word and pairing ------------------------------------------------


def reading_order(cells: Cells) -> list:
    """Boxes in the order they contribute to the shifted reading word."""
    if not cells:
        return []
    K = max(max(x, y) for x, y in cells)
    order = []
    for k in range(K, 0, -1):
        order.extend(sorted((p for p, c in cells.items() if p[1] == k and is_primed(c)), key=lambda p: p[0]))
        order.extend(sorted((p for p, c in cells.items() if p[0] == k and not is_primed(c)), key=lambda p: p[1]))
    return order


def shword(T: ShiftedTableau) -> tuple:
    cells = T.cells()
    return tuple(ceil(cells[p]) for p in reading_order(cells))


def restrict(cells: Cells, lo: int, hi: int) -> Cells:
    return {p: c for p, c in cells.items() if lo <= ceil(c) <= hi}


def _unpaired(cells: Cells, i: int) -> list:
    order = reading_order(restrict(cells, i, i + 1))
    stack, paired = [], set()
    for p in order:
        if ceil(cells[p]) == i + 1:
            stack.append(p)
        elif stack:
            paired.add(stack.pop())
            paired.add(p)
    return [p for p in order if p not in paired]


def unpaired_boxes(T: ShiftedTableau, i: int) -> list:
    return _unpaired(T.cells(), i)


def _ribbon(cells: Cells, start, value: int) -> list:
    """Boxes of the ``value``-ribbon through ``start``, ordered northwest to southeast."""
    seen = {start}
    stack = [start]
    while stack:
        x, y = stack.pop()
        for q in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
            if q not in seen and q in cells and ceil(cells[q]) == value:
                seen.add(q)
                stack.append(q)
    return sorted(seen, key=lambda p: p[1] - p[0])


def _swap_primes(cells: Cells, p, q) -> None:
    if is_primed(cells[p]) != is_primed(cells[q]):
        cells[p] = toggle_prime(cells[p])
        cells[q] = toggle_prime(cells[q])


# -- type A operators -----------------------------------------------------------


def tab_f(T: ShiftedTableau, i: int, trace: list | None = None):
    """Lowering operator f_i for i >= 1 on a skew shifted tableau (``None`` for zero)."""
    cells = T.cells()
    cand = [p for p in _unpaired(cells, i) if ceil(cells[p]) == i]
    if not cand:
        return None
    x, y = cand[-1]
    I, J, Jp = letter(i), letter(i + 1), letter(i + 1, True)
    get = cells.get
    if cells[(x, y)] == I:
        if get((x, y + 1)) == Jp:
            case = "L1a"
            _check(x != y, case)
            cells[(x, y)], cells[(x, y + 1)] = Jp, J
        elif get((x + 1, y)) not in (Jp, J):
            case = "L1b"
            cells[(x, y)] = J
        else:
            nx, ny = _ribbon(cells, (x + 1, y), i + 1)[0]
            if nx != ny:
                case = "L1c"
                _check(cells[(nx, ny)] == Jp, case)
                cells[(x, y)], cells[(nx, ny)] = Jp, J
            else:
                case = "L1d"
                _check((nx - 1, nx - 1) in cells and ceil(cells[(nx - 1, nx - 1)]) == i, case)
                cells[(x, y)] = Jp
                _swap_primes(cells, (nx, nx), (nx - 1, nx - 1))
    else:
        if get((x + 1, y)) == I:
            case = "L2a"
            _check(x + 1 != y, case)
            cells[(x, y)], cells[(x + 1, y)] = I, Jp
        elif get((x, y + 1)) not in (I, Jp):
            case = "L2b"
            cells[(x, y)] = Jp
        else:
            case = "L2c"
            _check(x != y, case)
            rib = _ribbon(cells, (x, y), i)
            after = rib[rib.index((x, y)) + 1:]
            hit = next((q for q in after if cells[q] == I and get((q[0], q[1] + 1)) not in (I, Jp)), None)
            _check(hit is not None, case)
            cells[(x, y)], cells[hit] = I, Jp
    if trace is not None:
        trace.append(case)
    return _rebuild(T, cells)


def tab_e(T: ShiftedTableau, i: int, trace: list | None = None):
    """Raising operator e_i for i >= 1 on a skew shifted tableau."""
    cells = T.cells()
    cand = [p for p in _unpaired(cells, i) if ceil(cells[p]) == i + 1]
    if not cand:
        return None
    x, y = cand[0]
    I, Ip, J, Jp = letter(i), letter(i, True), letter(i + 1), letter(i + 1, True)
    get = cells.get
    if cells[(x, y)] == J:
        if get((x, y - 1)) == Jp:
            case = "R1a"
            _check(x != y - 1, case)
            cells[(x, y)], cells[(x, y - 1)] = Jp, I
        elif get((x - 1, y)) not in (I, Jp):
            case = "R1b"
            cells[(x, y)] = I
        else:
            case = "R1c"
            _check(x != y, case)
            rib = _ribbon(cells, (x, y), i + 1)
            after = rib[rib.index((x, y)) + 1:]
            hit = next((q for q in after if cells[q] == Jp and get((q[0] - 1, q[1])) not in (I, Jp)), None)
            _check(hit is not None, case)
            cells[(x, y)], cells[hit] = Jp, I
    else:
        if get((x - 1, y)) == I:
            case = "R2a"
            _check(x != y, case)
            cells[(x, y)], cells[(x - 1, y)] = I, Ip
        elif get((x, y - 1)) not in (Ip, I):
            # the source prints i+1' here; i' is the only value making e_i inverse to f_i
            case = "R2b"
            cells[(x, y)] = Ip
        else:
            nx, ny = _ribbon(cells, (x, y - 1), i)[0]
            if nx != ny:
                case = "R2c"
                _check(cells[(nx, ny)] == I, case)
                cells[(x, y)], cells[(nx, ny)] = I, Ip
            else:
                case = "R2d"
                _check((nx + 1, nx + 1) in cells and ceil(cells[(nx + 1, nx + 1)]) == i + 1, case)
                cells[(x, y)] = I
                _swap_primes(cells, (nx, nx), (nx + 1, nx + 1))
    if trace is not None:
        trace.append(case)
    return _rebuild(T, cells)


def _check(ok: bool, case: str) -> None:
    if not ok:
        raise CrystalError(f"structural condition violated in case {case}")


# -- queer operators (straight shapes) -------------------------------------------


def _require_straight(T: ShiftedTableau) -> None:
    if not T.is_straight():
        raise ValueError("operator defined on straight shapes only")


def tab_fbar(T: ShiftedTableau):
    _require_straight(T)
    if not T.rows:
        return None
    row = list(T.rows[0])
    if letter(2, True) in row:
        return None
    idx = [j for j, c in enumerate(row) if ceil(c) == 1]
    if not idx:
        return None
    j = idx[-1]
    row[j] = letter(2) if (j == 0 and row[j] == letter(1)) else letter(2, True)
    return ShiftedTableau.from_rows((tuple(row),) + T.rows[1:], T.starts)


def tab_ebar(T: ShiftedTableau):
    _require_straight(T)
    if not T.rows:
        return None
    row = list(T.rows[0])
    if ceil(row[0]) == 2:
        row[0] -= 2
    elif letter(2, True) in row:
        row[row.index(letter(2, True))] = letter(1)
    else:
        return None
    return ShiftedTableau.from_rows((tuple(row),) + T.rows[1:], T.starts)


def tab_f0(T: ShiftedTableau):
    _require_straight(T)
    if not T.rows or T.rows[0][0] != letter(1):
        return None
    return ShiftedTableau.from_rows(((letter(1, True),) + T.rows[0][1:],) + T.rows[1:], T.starts)


def tab_e0(T: ShiftedTableau):
    _require_straight(T)
    if not T.rows or T.rows[0][0] != letter(1, True):
        return None
    return ShiftedTableau.from_rows(((letter(1),) + T.rows[0][1:],) + T.rows[1:], T.starts)


# -- extremal tableaux -------------------------------------------------------------


def extremal_tableaux(lam: Sequence[int], n: int) -> tuple:
    """``(T_highest, T_lowest, T_lowest with primed diagonal)`` for shape ``lam``."""
    lam = tuple(lam)
    if len(lam) > n:
        raise ValueError(f"shape {lam} has more than {n} rows")
    high = ShiftedTableau.from_rows([(letter(x),) * p for x, p in enumerate(lam, 1)])
    cells: Cells = {}
    current = shifted_diagram(lam)
    value = n
    while current:
        rim = {(x, y) for (x, y) in current if (x + 1, y + 1) not in current}
        for (x, y) in rim:
            cells[(x, y)] = letter(value, (x + 1, y) in rim)
        current -= rim
        value -= 1
    low = _rebuild(high, cells)
    hat = ShiftedTableau.from_rows(
        [tuple(c - 1 if j == 0 else c for j, c in enumerate(row)) for row in low.rows], low.starts)
    return high, low, hat


# -- standardization and dual equivalence ---------------------------------------------


def standardize(T: ShiftedTableau) -> ShiftedTableau:
    cells = T.cells()
    order = reading_order(cells)
    pos = {p: k for k, p in enumerate(order)}
    ranked = sorted(cells, key=lambda p: (ceil(cells[p]), pos[p]))
    out = {p: letter(k, is_primed(cells[p])) for k, p in enumerate(ranked, 1)}
    return _rebuild(T, out)


def _boxes(cells: Cells) -> dict:
    return {ceil(c): p for p, c in cells.items()}


def frak_s(T: ShiftedTableau, i: int) -> ShiftedTableau:
    """The elementary dual equivalence move on a standard tableau."""
    cells = T.cells()
    box = _boxes(cells)
    N = len(cells)
    if not (1 <= i < N):
        return T
    a, b = box[i], box[i + 1]
    diag = lambda p: p[0] == p[1]  # noqa: E731
    if a[0] == b[0] or a[1] == b[1]:
        for p in (a, b):
            if not diag(p):
                cells[p] = toggle_prime(cells[p])
        for u, v in ((i - 1, i + 1), (i, i + 2)):
            if 1 <= u and v <= N and diag(box[u]) and diag(box[v]):
                _swap_primes(cells, box[u], box[v])
    else:
        cells[a], cells[b] = cells[a] + 2, cells[b] - 2
    return _rebuild(T, cells)


def dual_equiv(T: ShiftedTableau, i: int) -> ShiftedTableau:
    cells = T.cells()
    N = len(cells)
    if not (1 <= i + 2 <= N):
        return T
    if i in (-1, 0):
        box = _boxes(cells)
        cells[box[i + 2]] = toggle_prime(cells[box[i + 2]])
        return _rebuild(T, cells)
    if i < -1:
        return T
    w = shword(T)
    pos = {v: k for k, v in enumerate(w)}
    a, b, c = pos[i], pos[i + 1], pos[i + 2]
    if min(a, b) < c < max(a, b):
        return frak_s(T, i)
    if min(b, c) < a < max(b, c):
        return frak_s(T, i + 1)
    return T


def descents(T: ShiftedTableau) -> set:
    w = shword(T)
    pos = {v: k for k, v in enumerate(w)}
    return {i for i in range(1, len(w)) if pos[i + 1] < pos[i]}


def descents_by_rule(T: ShiftedTableau) -> set:
    """Descents read off box positions: row/column order of i, i+1 and their primes."""
    cells = T.cells()
    found = {c: p for p, c in cells.items()}
    out = set()
    for i in range(1, len(cells)):
        I, Ip, J, Jp = letter(i), letter(i, True), letter(i + 1), letter(i + 1, True)
        if I in found and J in found and found[J][0] > found[I][0]:
            out.add(i)
        elif Ip in found and Jp in found and found[Jp][1] > found[Ip][1]:
            out.add(i)
        elif I in found and Jp in found:
            out.add(i)
    return out


# -- crystal model ------------------------------------------------------------------


class ShTabCrystal(Crystal):
    """Semistandard shifted tableaux of shape ``lam`` with entries at most ``n``.

    In category ``qplus`` diagonal primes are allowed; otherwise they are not.
    """

    def __init__(self, lam: Sequence[int], n: int, category: str = "qplus"):
        super().__init__(n, category)
        self.lam = tuple(lam)

    def elements(self):
        return shifted_tableaux(self.lam, self.n, diag_primes=self.category == "qplus")

    def wt(self, T):
        return T.wt(self.n)

    def _f(self, i, T):
        if i == BAR:
            return tab_fbar(T)
        if i == 0:
            return tab_f0(T)
        if not 1 <= i < self.n:
            raise ValueError(i)
        return tab_f(T, i)

    def _e(self, i, T):
        if i == BAR:
            return tab_ebar(T)
        if i == 0:
            return tab_e0(T)
        if not 1 <= i < self.n:
            raise ValueError(i)
        return tab_e(T, i)

    def fmt(self, T):
        return T.fmt()

    def payload(self, T):
        return T.fmt()

    def parse(self, s: str) -> ShiftedTableau:
        T = ShiftedTableau.parse(s)
        if T.shape != self.lam or not T.is_straight() or not is_semistandard(T):
            raise ValueError(f"{s!r} is not a semistandard shifted tableau of shape {self.lam}")
        if any(ceil(c) > self.n for c in T.entries()):
            raise ValueError(f"{s!r} has entries larger than {self.n}")
        return T


def tableaux_json(ts: Iterable[ShiftedTableau]) -> str:
    return json.dumps([T.to_json() for T in ts])
