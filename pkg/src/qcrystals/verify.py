"""Verification suites: crystal axioms and the structural theorems, checked exhaustively.

Each suite returns a list of :class:`Check` records in a fixed order; a check
carries the first counterexample it found.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .alphabet import parse_word, strict_partitions_inside
from .characters import (
    expand_in_schur_q,
    expansion_by_highest_weights,
    inv_stanley,
    schur_p,
    schur_q,
)
from .crystal import (
    BAR,
    Crystal,
    CrystalError,
    CrystalGraph,
    StandardCrystal,
    TensorPower,
    TensorProduct,
    character,
    components,
    eps,
    graph_on,
    is_highest,
    is_lowest,
    isomorphic,
    materialize,
    nu0_and_wt11,
    phi,
    sigma,
    sigma_w0,
    sigma_w0_plus,
)
from .factorizations import (
    IncrCrystal,
    concat,
    descents as word_descents,
    ock,
    parse_factorization,
    unprime_factorization,
)
from .insertion import (
    check_insertion,
    double_and_transpose,
    doubled_involution,
    eg_insert,
    eg_insert_word,
)
from .involutions import involution_shape, involutions, invol_length, is_vexillary, primed_invol_words
from .polynomials import in_sym_p, in_sym_q
from .tableaux import (
    ShiftedTableau,
    ShTabCrystal,
    descents,
    dual_equiv,
    extremal_tableaux,
    shifted_tableaux,
    standardize,
    unprime_diag,
)
from .words import WordCrystal

SUITES = ("axioms", "tensor-assoc", "braid", "highest-weight", "insertion-commute", "characters", "stanley")


@dataclass
class Check:
    id: str
    ok: bool
    detail: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'} {self.id}" + (f" {self.detail}" if self.detail else "")


@dataclass
class _Tally:
    """Counts cases per named property and keeps the first failure."""

    names: list
    cases: dict = field(default_factory=dict)
    first: dict = field(default_factory=dict)

    def __post_init__(self):
        self.cases = {k: 0 for k in self.names}

    def __call__(self, name: str, ok: bool, witness: Callable[[], str] | str = ""):
        self.cases[name] += 1
        if not ok and name not in self.first:
            self.first[name] = witness() if callable(witness) else witness

    def checks(self, prefix: str) -> list:
        out = []
        for k in self.names:
            if k in self.first:
                out.append(Check(f"{prefix}.{k}", False, f"counterexample: {self.first[k]}"))
            else:
                out.append(Check(f"{prefix}.{k}", True, f"cases={self.cases[k]}"))
        return out


# -- model corpus --------------------------------------------------------------------


def corpus(small: bool = False) -> list:
    """``(name, model)`` pairs for every crystal built by the acceptance criteria."""
    out = []
    for n in range(1, 5):
        for cat in ("gl", "q", "qplus"):
            out.append((f"B[{cat}]_{n}", StandardCrystal(n, cat)))
    B2 = StandardCrystal(2)
    out.append(("B+_2^2", TensorProduct(B2, B2)))
    out.append(("B+_2^3", TensorPower(B2, 3)))
    for n in range(1, 4):
        for m in range(0, (3 if small else 5) + 1):
            out.append((f"W+_{n}({m})", WordCrystal(n, m)))
            out.append((f"W_{n}({m})", WordCrystal(n, m, "q")))
    for z in involutions(4 if small else 5):
        for n in range(1, 4):
            M = IncrCrystal(z, n)
            if M.elements():
                out.append((f"Incr+_{n}({z.fmt()})", M))
        ell = invol_length(z)
        if ell > 3:
            out.append((f"Incr+_{ell}({z.fmt()})", IncrCrystal(z, ell)))
    for n in range(1, 4):
        for m in range(1, (3 if small else 4) + 1):
            out.append((f"Incr+_{n}(s2..s{2 * m})", IncrCrystal(doubled_involution(m), n)))
    outer = (3, 2, 1) if small else (4, 3, 2, 1)
    for n in range(1, 5):
        for lam in strict_partitions_inside(outer):
            if lam and len(lam) <= n:
                out.append((f"ShTab+_{n}({','.join(map(str, lam))})", ShTabCrystal(lam, n)))
                if n <= 3:
                    out.append((f"ShTab_{n}({','.join(map(str, lam))})", ShTabCrystal(lam, n, "q")))
    return out


# -- axioms ---------------------------------------------------------------------------

AXIOMS = ["S1", "S2", "wt-nonneg", "P1", "P2", "P3", "Q1", "Q2", "Q3", "bar-zero-commute", "eps0-monotone", "nu0"]


def _commute(M: Crystal, x: Callable, y: Callable, b) -> bool:
    return x(y(b)) == y(x(b))


def check_axioms(M: Crystal, elements: Iterable | None = None, tally: _Tally | None = None) -> _Tally:
    t = tally or _Tally(list(AXIOMS))
    V = list(M.elements() if elements is None else elements)
    n = M.n
    q = M.has("q") and n >= 2
    qp = M.has("qplus")
    fmt = M.fmt
    e, f = M.e, M.f
    for b in V:
        wb = M.wt(b)
        for i in range(1, n):
            c = e(i, b)
            if c is not None:
                diff = [x - y for x, y in zip(M.wt(c), wb)]
                want = [1 if j == i else -1 if j == i + 1 else 0 for j in range(1, n + 1)]
                t("S1", f(i, c) == b and diff == want, lambda: f"e_{i}({fmt(b)})")
            c = f(i, b)
            if c is not None:
                t("S1", e(i, c) == b, lambda: f"f_{i}({fmt(b)})")
            t("S2", phi(M, i, b) - eps(M, i, b) == wb[i - 1] - wb[i], lambda: f"i={i} b={fmt(b)}")
        if M.has("q"):
            t("wt-nonneg", all(x >= 0 for x in wb), lambda: fmt(b))
        if q:
            c = e(BAR, b)
            if c is not None:
                ok = f(BAR, c) == b and M.wt(c)[0] - wb[0] == 1 and M.wt(c)[1] - wb[1] == -1
                ok = ok and all(eps(M, i, b) == eps(M, i, c) and phi(M, i, b) == phi(M, i, c) for i in range(3, n))
                t("P1", ok, lambda: f"e_bar1({fmt(b)})")
            c = f(BAR, b)
            if c is not None:
                t("P1", e(BAR, c) == b, lambda: f"f_bar1({fmt(b)})")
            for i in range(3, n):
                for x in (lambda v: e(i, v), lambda v: f(i, v)):
                    for y in (lambda v: e(BAR, v), lambda v: f(BAR, v)):
                        t("P2", _commute(M, x, y, b), lambda: f"i={i} b={fmt(b)}")
            want = 0 if wb[0] == 0 and wb[1] == 0 else 1
            t("P3", eps(M, BAR, b) + phi(M, BAR, b) == want, lambda: fmt(b))
        if qp:
            labs = list(range(1, n)) + ([BAR] if n >= 2 else [])
            for op, inv in ((e, f), (f, e)):
                c = op(0, b)
                if c is not None:
                    ok = inv(0, c) == b and M.wt(c) == wb
                    ok = ok and all(eps(M, i, b) == eps(M, i, c) and phi(M, i, b) == phi(M, i, c) for i in labs)
                    t("Q1", ok, lambda: f"0-move at {fmt(b)}")
            for i in range(2, n):
                for x in (lambda v: e(i, v), lambda v: f(i, v)):
                    for y in (lambda v: e(0, v), lambda v: f(0, v)):
                        t("Q2", _commute(M, x, y, b), lambda: f"i={i} b={fmt(b)}")
            t("Q3", eps(M, 0, b) + phi(M, 0, b) == (0 if wb[0] == 0 else 1), lambda: fmt(b))
            if n >= 2:
                if wb[0] != 0:
                    ok = e(BAR, e(0, b)) == e(0, e(BAR, b)) and e(BAR, f(0, b)) == f(0, e(BAR, b))
                    t("bar-zero-commute", ok, lambda: fmt(b))
                c = e(BAR, b)
                if c is not None:
                    t("eps0-monotone", eps(M, 0, b) <= eps(M, 0, c) and phi(M, 0, b) <= phi(M, 0, c), lambda: fmt(b))
    if qp and V:
        G = graph_on(M, V)
        try:
            nu = nu0_and_wt11(G)
            t("nu0", all(k >= 0 for k, _ in nu.values()), "negative value")
        except CrystalError as ex:
            t("nu0", False, str(ex))
    return t


def suite_axioms(small: bool = False) -> list:
    t = _Tally(list(AXIOMS))
    for name, M in corpus(small):
        before = dict(t.first)
        check_axioms(M, tally=t)
        for k in t.first:
            if k not in before:
                t.first[k] = f"{name}: {t.first[k]}"
    return t.checks("axioms")


# -- tensor associativity ------------------------------------------------------------


def suite_tensor_assoc(n_max: int = 3, m_max: int = 4) -> list:
    out = []
    for n in range(1, n_max + 1):
        B = StandardCrystal(n)
        S = ShTabCrystal((2,), n)
        L = TensorProduct(TensorProduct(B, S), B)
        R = TensorProduct(B, TensorProduct(S, B))
        to_r = lambda x: None if x is None else (x[0][0], (x[0][1], x[1]))  # noqa: E731
        bad = None
        count = 0
        for x in L.elements():
            y = to_r(x)
            for i in L.labels:
                count += 2
                if to_r(L.f(i, x)) != R.f(i, y) or to_r(L.e(i, x)) != R.e(i, y):
                    bad = bad or f"i={i} at {L.fmt(x)}"
            if L.wt(x) != R.wt(y):
                bad = bad or f"weight at {L.fmt(x)}"
        out.append(Check(f"tensor-assoc.n{n}", bad is None, bad or f"cases={count}"))
    for n in range(1, n_max + 1):
        for m in range(0, m_max + 1):
            W, T = WordCrystal(n, m), TensorPower(StandardCrystal(n), m)
            bad = None
            for w in W.elements():
                for i in W.labels:
                    if W.f(i, w) != T.f(i, w) or W.e(i, w) != T.e(i, w):
                        bad = bad or f"i={i} at {W.fmt(w)}"
            out.append(Check(f"tensor-assoc.words-vs-power.n{n}.m{m}", bad is None, bad or f"elements={(2 * n) ** m}"))
    return out


# -- braid relations of type BC ------------------------------------------------------


def braid_relations(n: int) -> list:
    """``(name, lhs, rhs)`` with words applied right to left as operator products."""
    rels = []
    for i in range(n):
        rels.append((f"s{i}^2", (i, i), ()))
    for i in range(1, n - 1):
        rels.append((f"s{i}s{i + 1}s{i}", (i, i + 1, i), (i + 1, i, i + 1)))
    for i in range(n):
        for j in range(i + 2, n):
            rels.append((f"s{i}s{j}", (i, j), (j, i)))
    if n >= 2:
        rels.append(("s0s1s0s1", (0, 1, 0, 1), (1, 0, 1, 0)))
    return rels


def _apply(M, word, b):
    for i in reversed(word):
        b = sigma(M, i, b)
    return b


def suite_braid(n_max: int = 3, m_max: int = 5) -> list:
    out = []
    for n in range(1, n_max + 1):
        for m in range(0, m_max + 1):
            W = WordCrystal(n, m)
            els = W.elements()
            for name, lhs, rhs in braid_relations(n):
                bad = next((w for w in els if _apply(W, lhs, w) != _apply(W, rhs, w)), None)
                out.append(Check(f"braid.n{n}.m{m}.{name}", bad is None,
                                 f"counterexample: {W.fmt(bad)}" if bad is not None else f"elements={len(els)}"))
    return out


# -- highest and lowest weights -------------------------------------------------------


def suite_highest_weight(outer=(4, 3, 2, 1), n_max: int = 4) -> list:
    out = []
    B2 = StandardCrystal(2)
    G = materialize(TensorProduct(B2, B2))
    comps = components(G.model)
    ok_iso = len(comps) == 2 and isomorphic(comps[0], comps[1])[0]
    out.append(Check("highest-weight.B2xB2.components", ok_iso, f"components={len(comps)}"))
    hi = sorted(G.fmt(v) for v in G.vertices if is_highest(G.model, v))
    lo = sorted(G.fmt(v) for v in G.vertices if is_lowest(G.model, v))
    out.append(Check("highest-weight.B2xB2.extremal", hi == ["1 (x) 1", "1 (x) 1'"] and lo == ["2' (x) 2", "2' (x) 2'"],
                     f"highest={hi} lowest={lo}"))
    for n in range(1, n_max + 1):
        for lam in strict_partitions_inside(outer):
            if not lam or len(lam) > n:
                continue
            out.extend(_shtab_extremal(lam, n))
    return out


def _shtab_extremal(lam, n) -> list:
    tag = f"highest-weight.n{n}.{','.join(map(str, lam))}"
    M = ShTabCrystal(lam, n)
    G = materialize(M)
    high, low, hat = extremal_tableaux(lam, n)
    comps = components(M)
    H = [v for v in G.vertices if is_highest(M, v)]
    L = [v for v in G.vertices if is_lowest(M, v)]
    res = [
        Check(f"{tag}.connected", len(comps) == 1, f"components={len(comps)}"),
        Check(f"{tag}.unique-highest", H == [high], f"found={[v.fmt() for v in H]}"),
        Check(f"{tag}.unique-lowest", L == [hat], f"found={[v.fmt() for v in L]}"),
    ]
    bad = None
    for b in G.vertices:
        for flavor, op in (("gl", sigma_w0), ("q", sigma_w0)):
            if is_lowest(M, b, flavor) != is_highest(M, op(M, b), flavor):
                bad = bad or f"{flavor} at {b.fmt()}"
        if is_lowest(M, b, "qplus") != is_highest(M, sigma_w0_plus(M, b), "qplus"):
            bad = bad or f"qplus at {b.fmt()}"
    res.append(Check(f"{tag}.w0-exchange", bad is None and sigma_w0_plus(M, hat) == high, bad or "ok"))
    return res


# -- insertion ------------------------------------------------------------------------


def suite_insertion(n_max: int = 3, N: int = 5, m_max: int = 4) -> list:
    out = []
    # worked example
    a = parse_factorization("4 | 1' 3 5 | | 4' | | 2")
    P, Q = eg_insert(a)
    w = parse_word("41'354'2")
    Pw, Qw = eg_insert_word(w)
    ok = (P.fmt(), Q.fmt(), Qw.fmt()) == ("1 2 4 5 / 3 5'", "1 2' 2 6' / 2' 4", "1 2' 4 6' / 3' 5") and Pw == P
    out.append(Check("insertion-commute.example", ok, f"P={P} Q={Q} Q(w)={Qw}"))
    t = _Tally(["morphism", "fibers=components", "fiber-iso", "injective", "ins-wt-descents", "ins-unprime", "ins-concat", "ins-ock"])
    for z in involutions(N):
        for n in range(1, n_max + 1):
            _check_morphism(z, n, t)
        _check_words(z, t)
    out.extend(t.checks("insertion-commute"))
    bad = None
    count = 0
    for n in range(1, n_max + 1):
        for m in range(0, m_max + 1):
            W, I = WordCrystal(n, m), IncrCrystal(doubled_involution(m), n)
            image = {double_and_transpose(x, n) for x in W.elements()}
            if image != set(I.elements()):
                bad = bad or f"image mismatch n={n} m={m}"
            for x in W.elements():
                y = double_and_transpose(x, n)
                for i in W.labels:
                    count += 1
                    for op in ("e", "f"):
                        r = getattr(W, op)(i, x)
                        s = getattr(I, op)(i, y)
                        if (None if r is None else double_and_transpose(r, n)) != s:
                            bad = bad or f"{op}_{i} at {W.fmt(x)}"
    out.append(Check("insertion-commute.words-vs-doubled-factorizations", bad is None, bad or f"cases={count}"))
    return out


def _check_words(z, t: _Tally) -> None:
    for w in sorted(primed_invol_words(z)):
        P, Q = eg_insert_word(w)
        t("ins-wt-descents", word_descents(w) == descents(Q), lambda: str(w))
        for i in range(-1, len(w) - 1):
            P2, Q2 = eg_insert_word(ock(w, i))
            t("ins-ock", P2 == P and Q2 == dual_equiv(Q, i), lambda: f"ock_{i} at {w}")


def _check_morphism(z, n, t: _Tally) -> None:
    M = IncrCrystal(z, n)
    els = M.elements()
    if not els:
        return
    T = ShTabCrystal(involution_shape(z), n)
    PQ = {a: check_insertion(a, z) for a in els}
    t("injective", len(set(PQ.values())) == len(els), lambda: z.fmt())
    for a in els:
        P, Q = PQ[a]
        for i in M.labels:
            for op in ("e", "f"):
                r = getattr(M, op)(i, a)
                s = getattr(T, op)(i, Q)
                ok = (r is None and s is None) or (r is not None and PQ[r] == (P, s))
                t("morphism", ok, lambda: f"{op}_{i} at {M.fmt(a)}")
        t("ins-wt-descents", Q.wt(n) == M.wt(a), lambda: M.fmt(a))
        Pu, Qu = eg_insert(unprime_factorization(a))
        unprimed_P = ShiftedTableau.from_rows([tuple(c + (c % 2) for c in r) for r in P.rows], P.starts)
        t("ins-unprime", (Pu, Qu) == (unprimed_P, unprime_diag(Q)), lambda: M.fmt(a))
        t("ins-concat", eg_insert_word(concat(a)) == (P, standardize(Q)), lambda: M.fmt(a))
    fibers: dict = {}
    for a in els:
        fibers.setdefault(PQ[a][0], set()).add(a)
    comps = components(M)
    t("fibers=components", sorted(map(sorted, fibers.values())) == sorted(sorted(C.vertices) for C in comps),
      lambda: f"z={z.fmt()} n={n}")
    for P, fib in fibers.items():
        target = materialize(ShTabCrystal(P.shape, n))
        t("fiber-iso", isomorphic(graph_on(M, fib), target)[0], lambda: f"z={z.fmt()} n={n} P={P}")


# -- characters -------------------------------------------------------------------------


def suite_characters(outer=(4, 3, 2, 1), n_max: int = 4, small: bool = False) -> list:
    out = []
    bad = None
    for n in range(1, n_max + 1):
        for lam in strict_partitions_inside(outer):
            if len(lam) > n:
                continue
            M = ShTabCrystal(lam, n)
            if character(M) != schur_q(lam, n) or schur_q(lam, n) != schur_p(lam, n) * (2 ** len(lam)):
                bad = bad or f"lam={lam} n={n}"
    out.append(Check("characters.Q=2^l*P", bad is None, bad or "ok"))
    t = _Tally(["Sym_Q", "Sym_P", "expansion-nonneg", "expansion-size"])
    for name, M in corpus(small):
        ch = character(M)
        if not ch:
            continue
        if M.category == "qplus":
            t("Sym_Q", in_sym_q(ch), name)
            exp = expand_in_schur_q(ch)
            t("expansion-nonneg", all(c >= 0 for c in exp.values()), name)
            size = sum(c * len(shifted_tableaux(lam, M.n)) for lam, c in exp.items())
            t("expansion-size", size == len(M.elements()), name)
        elif M.category == "q":
            t("Sym_P", in_sym_p(ch), name)
    out.extend(t.checks("characters"))
    return out


# -- involution Stanley polynomials ---------------------------------------------------------


def suite_stanley(N: int = 5) -> list:
    t = _Tally(["peeling=highest-weights", "nonneg", "vexillary"])
    for z in involutions(N):
        n = invol_length(z)
        if n == 0:
            continue
        M = IncrCrystal(z, n)
        by_poly = expand_in_schur_q(inv_stanley(z, n))
        by_crystal = expansion_by_highest_weights(CrystalGraph(M, M.elements(), []))
        t("peeling=highest-weights", by_poly == by_crystal, lambda: f"{z.fmt()}: {by_poly} vs {by_crystal}")
        t("nonneg", all(c > 0 for c in by_poly.values()), z.fmt())
        if is_vexillary(z):
            t("vexillary", by_poly == {involution_shape(z): 1}, lambda: f"{z.fmt()}: {by_poly}")
    return t.checks("stanley")


def run_suite(name: str, **kw) -> list:
    table = {
        "axioms": suite_axioms,
        "tensor-assoc": suite_tensor_assoc,
        "braid": suite_braid,
        "highest-weight": suite_highest_weight,
        "insertion-commute": suite_insertion,
        "characters": suite_characters,
        "stanley": suite_stanley,
    }
    if name not in table:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    t0 = time.perf_counter()
    res = table[name](**kw)
    for c in res:
        c.seconds = time.perf_counter() - t0
    return res


__all__ = ["Check", "SUITES", "run_suite", "check_axioms", "corpus", "braid_relations"]
