"""Generic finite crystals: operators, tensor products, derived maps, graphs.

Labels are ints: ``BAR = -1`` stands for the odd operator indexed by 1-bar,
``0`` for the primed operator of the q+ category and ``1 .. n-1`` for the
usual type A operators.  Operators return ``None`` for the zero element.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, Sequence

from .alphabet import ceil, fmt_letter
from .polynomials import Poly

BAR = -1
CATEGORIES = ("gl", "q", "qplus")
_RANK = {c: k for k, c in enumerate(CATEGORIES)}
MAX_STRING = 10**6
MAX_VERTICES = 10**6


class CrystalError(RuntimeError):
    pass


def label_name(i: int) -> str:
    return "bar1" if i == BAR else str(i)


def parse_label(s: str) -> int:
    return BAR if s in ("bar1", "-1", "1bar") else int(s)


def labels_for(n: int, category: str) -> list:
    if category not in _RANK:
        raise ValueError(f"unknown category {category!r}")
    labs = []
    if category in ("q", "qplus") and n >= 2:
        labs.append(BAR)
    if category == "qplus":
        labs.append(0)
    labs.extend(range(1, n))
    return labs


def unit_vector(n: int, i: int) -> tuple:
    return tuple(1 if j == i else 0 for j in range(1, n + 1))


class Crystal:
    """Base class.  Subclasses implement ``wt``, ``_e`` and ``_f``.

    ``e`` and ``f`` memoize, so payloads must be hashable.
    """

    n: int
    category: str

    def __init__(self, n: int, category: str):
        if category not in _RANK:
            raise ValueError(f"unknown category {category!r}")
        self.n = n
        self.category = category
        self._ecache: dict = {}
        self._fcache: dict = {}
        self.cache: dict = {}

    @property
    def labels(self) -> list:
        return labels_for(self.n, self.category)

    def wt(self, b) -> tuple:
        raise NotImplementedError

    def _e(self, i: int, b):
        raise NotImplementedError

    def _f(self, i: int, b):
        raise NotImplementedError

    def e(self, i: int, b):
        if b is None:
            return None
        key = (i, b)
        try:
            return self._ecache[key]
        except KeyError:
            pass
        r = self._e(i, b)
        self._ecache[key] = r
        return r

    def f(self, i: int, b):
        if b is None:
            return None
        key = (i, b)
        try:
            return self._fcache[key]
        except KeyError:
            pass
        r = self._f(i, b)
        self._fcache[key] = r
        return r

    def elements(self) -> Iterable:
        raise NotImplementedError(f"{type(self).__name__} cannot enumerate its elements")

    def fmt(self, b) -> str:
        return str(b)

    def payload(self, b):
        """JSON-friendly form of an element."""
        return self.fmt(b)

    def key(self, b):
        return b

    def has(self, category: str) -> bool:
        return _RANK[self.category] >= _RANK[category]


class TrivialCrystal(Crystal):
    """One element of weight zero on which every operator vanishes."""

    def __init__(self, n: int, category: str = "qplus"):
        super().__init__(n, category)

    def wt(self, b):
        return (0,) * self.n

    def _e(self, i, b):
        return None

    _f = _e

    def elements(self):
        return [()]

    def fmt(self, b):
        return "()"


class StandardCrystal(Crystal):
    """The crystal of one box.  Payloads are letter codes.

    gl and q use the unprimed letters ``1..n``; q+ also uses ``1'..n'``.
    """

    def __init__(self, n: int, category: str = "qplus"):
        super().__init__(n, category)

    def elements(self):
        if self.category == "qplus":
            return list(range(1, 2 * self.n + 1))
        return [2 * k for k in range(1, self.n + 1)]

    def wt(self, b):
        return unit_vector(self.n, ceil(b))

    def _f(self, i, b):
        if i >= 1:
            return b + 2 if ceil(b) == i else None
        if i == BAR:
            return b + 2 if ceil(b) == 1 and self.n >= 2 else None
        if i == 0:
            return b - 1 if b == 2 else None
        raise ValueError(i)

    def _e(self, i, b):
        if i >= 1:
            return b - 2 if ceil(b) == i + 1 else None
        if i == BAR:
            return b - 2 if ceil(b) == 2 else None
        if i == 0:
            return b + 1 if b == 1 else None
        raise ValueError(i)

    def fmt(self, b):
        return fmt_letter(b)


# --- string lengths and reflections ----------------------------------------

def eps(M: Crystal, i: int, b) -> int:
    k = 0
    while True:
        b = M.e(i, b)
        if b is None:
            return k
        k += 1
        if k > MAX_STRING:
            raise CrystalError(f"e_{label_name(i)} string does not terminate")


def phi(M: Crystal, i: int, b) -> int:
    k = 0
    while True:
        b = M.f(i, b)
        if b is None:
            return k
        k += 1
        if k > MAX_STRING:
            raise CrystalError(f"f_{label_name(i)} string does not terminate")


def string_lengths(M: Crystal, i: int, b) -> tuple:
    return eps(M, i, b), phi(M, i, b)


def sigma(M: Crystal, i: int, b):
    """Reverse the ``i``-string through ``b``; ``i = 0`` swaps the 0-pair."""
    if b is None:
        return None
    key = ("sigma", i, b)
    cache = M.cache
    if key in cache:
        return cache[key]
    if i == 0:
        r = M.f(0, b)
        if r is None:
            r = M.e(0, b)
        if r is None:
            r = b
    else:
        k = phi(M, i, b) - eps(M, i, b)
        r = b
        if k >= 0:
            for _ in range(k):
                r = M.f(i, r)
        else:
            for _ in range(-k):
                r = M.e(i, r)
    cache[key] = r
    return r


def apply_sigmas(M: Crystal, seq: Sequence[int], b):
    """Apply ``sigma_{seq[0]}`` first, then ``sigma_{seq[1]}``, and so on."""
    for i in seq:
        b = sigma(M, i, b)
    return b


def _bar_op(M: Crystal, which: str, i: int, b):
    if b is None:
        return None
    if i == 1:
        return M.e(BAR, b) if which == "e" else M.f(BAR, b)
    b = apply_sigmas(M, (i - 1, i), b)
    b = _bar_op(M, which, i - 1, b)
    return apply_sigmas(M, (i, i - 1), b)


def e_bar(M: Crystal, i: int, b):
    """Odd raising operator for ``i in [1, n-1]`` by conjugating with reflections."""
    return _bar_op(M, "e", i, b)


def f_bar(M: Crystal, i: int, b):
    return _bar_op(M, "f", i, b)


def _w0_word(n: int) -> list:
    """Factors of (s1)(s2 s1)...(s_{n-1}...s1), leftmost first."""
    out = []
    for k in range(1, n):
        out.extend(range(k, 0, -1))
    return out


def _w0_plus_word(n: int) -> list:
    out = []
    for k in range(0, n):
        out.extend(range(k, -1, -1))
    return out


def sigma_w0(M: Crystal, b):
    # operator product: the rightmost factor acts first
    return apply_sigmas(M, list(reversed(_w0_word(M.n))), b)


def sigma_w0_inv(M: Crystal, b):
    return apply_sigmas(M, _w0_word(M.n), b)


def sigma_w0_plus(M: Crystal, b):
    return apply_sigmas(M, list(reversed(_w0_plus_word(M.n))), b)


def sigma_w0_plus_inv(M: Crystal, b):
    return apply_sigmas(M, _w0_plus_word(M.n), b)


def e_bar_prime(M: Crystal, i: int, b):
    b = sigma_w0_inv(M, b)
    b = f_bar(M, M.n - i, b)
    return sigma_w0(M, b)


def f_bar_prime(M: Crystal, i: int, b):
    b = sigma_w0_inv(M, b)
    b = e_bar(M, M.n - i, b)
    return sigma_w0(M, b)


def _zero_bracket(M: Crystal, which: str, i: int, b):
    if b is None:
        return None
    b = apply_sigmas(M, range(i - 1, 0, -1), b)
    b = M.e(0, b) if which == "e" else M.f(0, b)
    return apply_sigmas(M, range(1, i), b)


def e0_bracket(M: Crystal, i: int, b):
    return _zero_bracket(M, "e", i, b)


def f0_bracket(M: Crystal, i: int, b):
    return _zero_bracket(M, "f", i, b)


def is_highest(M: Crystal, b, flavor: str = "qplus") -> bool:
    n = M.n
    if any(M.e(i, b) is not None for i in range(1, n)):
        return False
    if flavor in ("q", "qplus") and any(e_bar(M, i, b) is not None for i in range(1, n)):
        return False
    if flavor == "qplus" and any(e0_bracket(M, i, b) is not None for i in range(1, n + 1)):
        return False
    return True


def is_lowest(M: Crystal, b, flavor: str = "qplus") -> bool:
    n = M.n
    if any(M.f(i, b) is not None for i in range(1, n)):
        return False
    if flavor in ("q", "qplus") and any(f_bar_prime(M, i, b) is not None for i in range(1, n)):
        return False
    if flavor == "qplus" and any(f0_bracket(M, i, b) is not None for i in range(1, n + 1)):
        return False
    return True


# --- tensor products --------------------------------------------------------

class TensorProduct(Crystal):
    """``B (x) C`` with payload pairs ``(b, c)``."""

    def __init__(self, B: Crystal, C: Crystal, category: str | None = None):
        if B.n != C.n:
            raise ValueError("tensor factors must have the same rank")
        if category is None:
            category = min(B.category, C.category, key=_RANK.get)
        if not (B.has(category) and C.has(category)):
            raise ValueError(f"factors do not carry {category} operators")
        super().__init__(B.n, category)
        self.B, self.C = B, C

    def elements(self):
        return list(product(self.B.elements(), self.C.elements()))

    def wt(self, x):
        b, c = x
        return tuple(p + q for p, q in zip(self.B.wt(b), self.C.wt(c)))

    def fmt(self, x):
        return f"{self.B.fmt(x[0])} (x) {self.C.fmt(x[1])}"

    def payload(self, x):
        return [self.B.payload(x[0]), self.C.payload(x[1])]

    @staticmethod
    def _pair(b, c):
        return None if b is None or c is None else (b, c)

    def _e(self, i, x):
        B, C = self.B, self.C
        b, c = x
        if i >= 1:
            if eps(B, i, b) <= phi(C, i, c):
                return self._pair(b, C.e(i, c))
            return self._pair(B.e(i, b), c)
        wb = B.wt(b)
        if i == 0:
            if wb[0] != 0:
                return self._pair(B.e(0, b), c)
            return self._pair(b, C.e(0, c))
        # odd operator
        if wb[0] == 0 and wb[1] == 0:
            return self._pair(b, C.e(BAR, c))
        if self.category == "qplus" and wb[0] == 0:
            eb = B.e(BAR, b)
            t = B.f(0, eb)
            c0 = C.e(0, c)
            if t is not None and c0 is not None:
                return (t, c0)
            t = B.e(0, eb)
            c0 = C.f(0, c)
            if t is not None and c0 is not None:
                return (t, c0)
        return self._pair(B.e(BAR, b), c)

    def _f(self, i, x):
        B, C = self.B, self.C
        b, c = x
        if i >= 1:
            if eps(B, i, b) < phi(C, i, c):
                return self._pair(b, C.f(i, c))
            return self._pair(B.f(i, b), c)
        wb = B.wt(b)
        if i == 0:
            if wb[0] != 0:
                return self._pair(B.f(0, b), c)
            return self._pair(b, C.f(0, c))
        if wb[0] == 0 and wb[1] == 0:
            return self._pair(b, C.f(BAR, c))
        if self.category == "qplus" and wb[0] == 1:
            t = B.f(BAR, B.f(0, b))
            c0 = C.e(0, c)
            if t is not None and c0 is not None:
                return (t, c0)
            t = B.f(BAR, B.e(0, b))
            c0 = C.f(0, c)
            if t is not None and c0 is not None:
                return (t, c0)
        return self._pair(B.f(BAR, b), c)


class TensorPower(Crystal):
    """``B^{(x) m}`` with flat tuple payloads, bracketed from the left."""

    def __init__(self, B: Crystal, m: int, category: str | None = None):
        category = category or B.category
        super().__init__(B.n, category)
        self.B, self.m = B, m
        if m >= 2:
            self.left = TensorPower(B, m - 1, category)
            self.inner = TensorProduct(self.left, B, category)

    def elements(self):
        return list(product(self.B.elements(), repeat=self.m))

    def wt(self, w):
        out = [0] * self.n
        for x in w:
            for j, a in enumerate(self.B.wt(x)):
                out[j] += a
        return tuple(out)

    def _op(self, which, i, w):
        if self.m == 0:
            return None
        if self.m == 1:
            r = self.B.e(i, w[0]) if which == "e" else self.B.f(i, w[0])
            return None if r is None else (r,)
        x = (w[:-1], w[-1])
        r = self.inner.e(i, x) if which == "e" else self.inner.f(i, x)
        return None if r is None else r[0] + (r[1],)

    def _e(self, i, w):
        return self._op("e", i, w)

    def _f(self, i, w):
        return self._op("f", i, w)

    def fmt(self, w):
        return " (x) ".join(self.B.fmt(x) for x in w) if w else "()"

    def payload(self, w):
        return [self.B.payload(x) for x in w]


def standard_crystal(n: int, category: str = "qplus") -> StandardCrystal:
    return StandardCrystal(n, category)


def tensor(B: Crystal, C: Crystal, category: str | None = None) -> TensorProduct:
    return TensorProduct(B, C, category)


class Relabel(Crystal):
    """View a crystal through a bijection of payloads (used for isomorphism witnesses)."""

    def __init__(self, M: Crystal, to_inner: Callable, from_inner: Callable, fmt: Callable | None = None):
        super().__init__(M.n, M.category)
        self.M, self.to_inner, self.from_inner = M, to_inner, from_inner
        self._fmt = fmt

    def wt(self, b):
        return self.M.wt(self.to_inner(b))

    def _e(self, i, b):
        r = self.M.e(i, self.to_inner(b))
        return None if r is None else self.from_inner(r)

    def _f(self, i, b):
        r = self.M.f(i, self.to_inner(b))
        return None if r is None else self.from_inner(r)

    def elements(self):
        return [self.from_inner(x) for x in self.M.elements()]

    def fmt(self, b):
        return self._fmt(b) if self._fmt else self.M.fmt(self.to_inner(b))


# --- materialized graphs ----------------------------------------------------

@dataclass
class CrystalGraph:
    model: Crystal
    vertices: list
    edges: list  # (src, label, dst) meaning f_label(src) = dst
    labels: list = field(default_factory=list)

    def __post_init__(self):
        self._succ = {v: {} for v in self.vertices}
        self._pred = {v: {} for v in self.vertices}
        for s, i, d in self.edges:
            self._succ[s][i] = d
            self._pred[d][i] = s

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, v):
        return v in self._succ

    def wt(self, v):
        return self.model.wt(v)

    def succ(self, v, i):
        return self._succ[v].get(i)

    def pred(self, v, i):
        return self._pred[v].get(i)

    def edge_set(self) -> set:
        return set(self.edges)

    def fmt(self, v) -> str:
        return self.model.fmt(v)


def _sort(M: Crystal, vs: Iterable) -> list:
    return sorted(vs, key=M.key)


def closure(M: Crystal, seeds: Iterable, labels: Sequence[int] | None = None, cap: int = MAX_VERTICES) -> set:
    labels = M.labels if labels is None else list(labels)
    seen = set()
    queue = deque()
    for s in seeds:
        if s not in seen:
            seen.add(s)
            queue.append(s)
    while queue:
        b = queue.popleft()
        for i in labels:
            for c in (M.f(i, b), M.e(i, b)):
                if c is not None and c not in seen:
                    seen.add(c)
                    if len(seen) > cap:
                        raise CrystalError(f"more than {cap} vertices reached")
                    queue.append(c)
    return seen


def graph_on(M: Crystal, vertices: Iterable, labels: Sequence[int] | None = None) -> CrystalGraph:
    labels = M.labels if labels is None else list(labels)
    vs = _sort(M, set(vertices))
    vset = set(vs)
    edges = []
    for b in vs:
        for i in labels:
            c = M.f(i, b)
            if c is not None:
                if c not in vset:
                    raise CrystalError(f"vertex set not closed: f_{label_name(i)}({M.fmt(b)}) = {M.fmt(c)}")
                edges.append((b, i, c))
    return CrystalGraph(M, vs, edges, labels)


def materialize(M: Crystal, labels: Sequence[int] | None = None) -> CrystalGraph:
    return graph_on(M, M.elements(), labels)


def components(M: Crystal, seeds: Iterable | None = None, labels: Sequence[int] | None = None,
               cap: int = MAX_VERTICES) -> list:
    """Connected components reachable from ``seeds`` (all elements by default)."""
    labels = M.labels if labels is None else list(labels)
    pool = _sort(M, set(M.elements() if seeds is None else seeds))
    done = set()
    out = []
    for s in pool:
        if s in done:
            continue
        comp = closure(M, [s], labels, cap)
        done |= comp
        out.append(graph_on(M, comp, labels))
    out.sort(key=lambda G: M.key(G.vertices[0]))
    return out


def split_components(G: CrystalGraph) -> list:
    return components(G.model, G.vertices, G.labels)


def highest_weight_elements(G: CrystalGraph, flavor: str = "qplus") -> list:
    return [v for v in G.vertices if is_highest(G.model, v, flavor)]


def lowest_weight_elements(G: CrystalGraph, flavor: str = "qplus") -> list:
    return [v for v in G.vertices if is_lowest(G.model, v, flavor)]


def character(G: CrystalGraph | Crystal) -> Poly:
    if isinstance(G, Crystal):
        M, vs = G, G.elements()
    else:
        M, vs = G.model, G.vertices
    acc: dict = {}
    for v in vs:
        w = M.wt(v)
        acc[w] = acc.get(w, 0) + 1
    return Poly(M.n, acc)


# --- isomorphism ------------------------------------------------------------

def _signature(G: CrystalGraph, v) -> tuple:
    return (G.wt(v),
            tuple(sorted(G._succ[v])),
            tuple(sorted(G._pred[v])))


def _match_connected(G1: CrystalGraph, V1: list, G2: CrystalGraph, V2: list):
    """Try to extend an anchored bijection; crystal edges force everything."""
    if len(V1) != len(V2):
        return None
    V2set = set(V2)
    sig_count: dict = {}
    for v in V1:
        s = _signature(G1, v)
        sig_count[s] = sig_count.get(s, 0) + 1
    anchor = min(V1, key=lambda v: (sig_count[_signature(G1, v)], G1.model.key(v)))
    asig = _signature(G1, anchor)
    for cand in V2:
        if _signature(G2, cand) != asig:
            continue
        phi_map = {anchor: cand}
        used = {cand}
        queue = deque([anchor])
        ok = True
        while queue and ok:
            x = queue.popleft()
            y = phi_map[x]
            if _signature(G1, x) != _signature(G2, y):
                ok = False
                break
            for table1, table2 in ((G1._succ, G2._succ), (G1._pred, G2._pred)):
                for i, x2 in table1[x].items():
                    y2 = table2[y].get(i)
                    if y2 is None:
                        ok = False
                        break
                    if x2 in phi_map:
                        if phi_map[x2] != y2:
                            ok = False
                            break
                    else:
                        if y2 in used or y2 not in V2set:
                            ok = False
                            break
                        phi_map[x2] = y2
                        used.add(y2)
                        queue.append(x2)
                if not ok:
                    break
        if ok and len(phi_map) == len(V1):
            return phi_map
    return None


def isomorphic(G1: CrystalGraph, G2: CrystalGraph):
    """Weight-preserving labeled-digraph isomorphism; returns ``(bool, map)``."""
    if len(G1) != len(G2) or character(G1) != character(G2):
        return False, None
    labels = sorted(set(G1.labels) | set(G2.labels))
    C1 = components(G1.model, G1.vertices, labels)
    C2 = components(G2.model, G2.vertices, labels)
    if sorted(len(c) for c in C1) != sorted(len(c) for c in C2):
        return False, None
    free = list(range(len(C2)))
    mapping = {}
    for c1 in C1:
        for k in free:
            m = _match_connected(G1, c1.vertices, G2, C2[k].vertices)
            if m is not None:
                mapping.update(m)
                free.remove(k)
                break
        else:
            return False, None
    return True, mapping


# --- nu_0 -------------------------------------------------------------------

def nu0_and_wt11(G: CrystalGraph) -> dict:
    """``v -> (nu0, (a, b))`` on each component of a normal q+ crystal.

    ``nu0`` vanishes at the q+-lowest element and goes up by one along each
    0-labelled raising step and is unchanged along other raising steps.
    """
    M = G.model
    out = {}
    for comp in split_components(G):
        lows = lowest_weight_elements(comp, "qplus")
        if len(lows) != 1:
            raise CrystalError(f"component of {M.fmt(comp.vertices[0])} has {len(lows)} q+-lowest elements")
        nu = {lows[0]: 0}
        queue = deque(lows)
        while queue:
            x = queue.popleft()
            for i, y in comp._succ[x].items():  # f_i(x) = y, so x = e_i(y)
                val = nu[x] - (1 if i == 0 else 0)
                if y in nu and nu[y] != val:
                    raise CrystalError("nu0 propagation is inconsistent")
                if y not in nu:
                    nu[y] = val
                    queue.append(y)
            for i, y in comp._pred[x].items():  # e_i(x) = y
                val = nu[x] + (1 if i == 0 else 0)
                if y in nu and nu[y] != val:
                    raise CrystalError("nu0 propagation is inconsistent")
                if y not in nu:
                    nu[y] = val
                    queue.append(y)
        for v, k in nu.items():
            e0, f0 = string_lengths(M, 0, v)
            out[v] = (k, (k + e0 + f0, -k))
    return out


# --- export -----------------------------------------------------------------

_STYLE = {BAR: "dashed", 0: "dotted"}


def to_dot(G: CrystalGraph, name: str = "crystal") -> str:
    idx = {v: k for k, v in enumerate(G.vertices)}
    lines = [f"digraph {name} {{"]
    for v in G.vertices:
        lab = G.fmt(v).replace('"', '\\"')
        lines.append(f'  v{idx[v]} [label="{lab}"];')
    for s, i, d in G.edges:
        lines.append(f'  v{idx[s]} -> v{idx[d]} [label="{label_name(i)}", style={_STYLE.get(i, "solid")}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(G: CrystalGraph) -> str:
    idx = {v: k for k, v in enumerate(G.vertices)}
    data = {
        "vertices": [{"id": idx[v], "payload": G.model.payload(v), "wt": list(G.wt(v))} for v in G.vertices],
        "edges": [{"src": idx[s], "dst": idx[d], "label": label_name(i)} for s, i, d in G.edges],
    }
    return json.dumps(data, indent=1, sort_keys=True) + "\n"


def to_text(G: CrystalGraph) -> str:
    lines = [f"# {len(G.vertices)} vertices, {len(G.edges)} edges"]
    for v in G.vertices:
        lines.append(f"vertex {G.fmt(v)}  wt={','.join(map(str, G.wt(v)))}")
    for s, i, d in G.edges:
        lines.append(f"edge {G.fmt(s)} -{label_name(i)}-> {G.fmt(d)}")
    return "\n".join(lines) + "\n"
