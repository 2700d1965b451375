"""Schur P/Q polynomials, Schur-Q expansions and involution Stanley polynomials."""

from __future__ import annotations

from functools import lru_cache
from typing import Mapping, Sequence

from .crystal import CrystalGraph, character, components, is_highest
from .factorizations import IncrCrystal
from .involutions import Perm
from .polynomials import Poly, in_sym, in_sym_p, in_sym_q
from .tableaux import shifted_tableaux


class NotSchurQDecomposable(ValueError):
    pass


def _tableau_gf(lam, n: int, diag_primes: bool) -> Poly:
    acc: dict = {}
    for T in shifted_tableaux(lam, n, diag_primes):
        w = T.wt(n)
        acc[w] = acc.get(w, 0) + 1
    return Poly(n, acc)


@lru_cache(maxsize=None)
def schur_q(mu: tuple, n: int) -> Poly:
    """Generating function of all semistandard shifted tableaux of shape ``mu``."""
    return _tableau_gf(tuple(mu), n, True)


@lru_cache(maxsize=None)
def schur_p(mu: tuple, n: int) -> Poly:
    """Same, restricted to tableaux with unprimed diagonal."""
    return _tableau_gf(tuple(mu), n, False)


def q_product(lam: Sequence[int], n: int) -> Poly:
    """``q_lam``: product of one-row Schur Q-polynomials."""
    out = Poly.constant(n, 1)
    for m in lam:
        out = out * schur_q((m,), n)
    return out


def sym_membership(f: Poly, ring: str) -> bool:
    tests = {"Sym": in_sym, "Sym_P": in_sym_p, "Sym_Q": in_sym_q}
    if ring not in tests:
        raise ValueError(f"unknown ring {ring!r}")
    return tests[ring](f)


def _strict_part(exp) -> tuple | None:
    parts = tuple(a for a in exp if a)
    if any(a <= b for a, b in zip(parts, parts[1:])) or parts != tuple(exp[: len(parts)]):
        return None
    return parts


def expand_in_schur_q(f: Poly) -> dict:
    """Coefficients of ``f`` in the Schur Q basis, by peeling lex-leading terms."""
    out: dict = {}
    rest = f
    while rest:
        exp, c = rest.leading()
        lam = _strict_part(exp)
        if lam is None:
            raise NotSchurQDecomposable(f"leading exponent {exp} is not a strict partition")
        top = 2 ** len(lam)
        if c % top:
            raise NotSchurQDecomposable(f"coefficient {c} of x^{exp} is not divisible by {top}")
        out[lam] = c // top
        rest = rest - schur_q(lam, f.n) * (c // top)
    return dict(sorted(out.items(), key=lambda kv: (-sum(kv[0]), tuple(-p for p in kv[0]))))


def fmt_expansion(exp: Mapping) -> str:
    if not exp:
        return "0"
    return "\n".join(f"({','.join(map(str, lam))}): {c}" for lam, c in exp.items())


def inv_stanley(z: Perm, n: int) -> Poly:
    """Character of the crystal of primed increasing factorizations of ``z``."""
    return character(IncrCrystal(z, n))


def expansion_by_highest_weights(G: CrystalGraph) -> dict:
    """Count q+-highest elements by weight; the weights must be strict partitions."""
    out: dict = {}
    for v in G.vertices:
        if is_highest(G.model, v, "qplus"):
            lam = _strict_part(G.wt(v))
            if lam is None:
                raise NotSchurQDecomposable(f"highest element {G.fmt(v)} has non-strict weight {G.wt(v)}")
            out[lam] = out.get(lam, 0) + 1
    return dict(sorted(out.items(), key=lambda kv: (-sum(kv[0]), tuple(-p for p in kv[0]))))


def inv_stanley_expansion_by_crystal(z: Perm, n: int) -> dict:
    M = IncrCrystal(z, n)
    G = CrystalGraph(M, M.elements(), [])
    return expansion_by_highest_weights(G)


def component_characters(M) -> list:
    return [character(C) for C in components(M)]
