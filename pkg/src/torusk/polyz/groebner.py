"""Strong Groebner bases over the integers.

Buchberger's algorithm adapted to Z: for each critical pair both the
S-polynomial (lcm of leading coefficients) and, when neither leading
coefficient divides the other, the G-polynomial (Bezout combination reaching
their gcd) are reduced and added. Reduction of a term ``c*x^e`` uses the
basis element with smallest leading coefficient among those whose leading
monomial divides ``x^e`` and replaces ``c`` by its remainder in
``[0, lc)``, which makes normal forms unique once the basis is strong.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .poly import (Exp, IntPoly, exp_add, exp_divides, exp_lcm, exp_sub,
                   order_key)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


class _Elem:
    __slots__ = ("lm", "lc", "terms")

    def __init__(self, terms: dict[Exp, int], key):
        lm = max(terms, key=key)
        if terms[lm] < 0:
            terms = {e: -c for e, c in terms.items()}
        self.terms = terms
        self.lm = lm
        self.lc = terms[lm]


def _neg(k: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(-x for x in k)


def _reduce(p: dict[Exp, int], basis: Sequence[_Elem], key,
            skip_leading: bool = False) -> dict[Exp, int]:
    """Fully reduce ``p`` by ``basis``; returns the remainder terms."""
    p = dict(p)
    heap = [(_neg(key(e)), e) for e in p]
    heapq.heapify(heap)
    rem: dict[Exp, int] = {}
    first = True
    while heap:
        _, e = heapq.heappop(heap)
        c = p.pop(e, 0)
        if not c:
            continue
        if first and skip_leading:
            first = False
            rem[e] = c
            continue
        first = False
        best = None
        for g in basis:
            if (best is None or g.lc < best.lc) and exp_divides(g.lm, e):
                best = g
                if g.lc == 1:
                    break
        if best is None:
            rem[e] = c
            continue
        q = c // best.lc
        if q:
            shift = exp_sub(e, best.lm)
            for ge, gc in best.terms.items():
                if ge == best.lm:
                    continue
                te = exp_add(ge, shift)
                old = p.get(te)
                if old is None:
                    p[te] = -q * gc
                    heapq.heappush(heap, (_neg(key(te)), te))
                else:
                    v = old - q * gc
                    if v:
                        p[te] = v
                    else:
                        del p[te]
        r = c - q * best.lc
        if r:
            rem[e] = r
    return rem


def _spair(f: _Elem, g: _Elem) -> list[dict[Exp, int]]:
    """S-polynomial and, when needed, G-polynomial of a pair."""
    lcm_m = exp_lcm(f.lm, g.lm)
    sf, sg = exp_sub(lcm_m, f.lm), exp_sub(lcm_m, g.lm)
    a, b = f.lc, g.lc
    l = a * b // gcd(a, b)
    out = []

    def combo(cf: int, cg: int) -> dict[Exp, int]:
        acc: dict[Exp, int] = {}
        for e, c in f.terms.items():
            acc[exp_add(e, sf)] = cf * c
        for e, c in g.terms.items():
            te = exp_add(e, sg)
            v = acc.get(te, 0) + cg * c
            if v:
                acc[te] = v
            else:
                acc.pop(te, None)
        return {e: c for e, c in acc.items() if c}

    s = combo(l // a, -(l // b))
    if s:
        out.append(s)
    if a % b and b % a:
        d, u, v = _xgcd(a, b)
        gp = combo(u, v)
        if gp:
            out.append(gp)
    return out


@dataclass(frozen=True)
class GroebnerBasis:
    """An auto-reduced strong Groebner basis of an ideal of Z[v1..v_nvars]."""

    generators: tuple[IntPoly, ...]
    order: str
    nvars: int
    complete: bool = True

    def leading_terms(self) -> list[tuple[Exp, int]]:
        return [g.leading_term(self.order) for g in self.generators]

    def leading_coefficients(self) -> list[int]:
        return [c for _, c in self.leading_terms()]

    def has_unit_leading_coefficients(self) -> bool:
        return all(abs(c) == 1 for c in self.leading_coefficients())

    def _elems(self) -> list[_Elem]:
        key = order_key(self.order)
        return [_Elem(dict(g.terms), key) for g in self.generators]

    def certify(self) -> bool:
        """Re-check that every S- and G-polynomial reduces to zero."""
        key = order_key(self.order)
        elems = self._elems()
        for i in range(len(elems)):
            for j in range(i + 1, len(elems)):
                for h in _spair(elems[i], elems[j]):
                    if _reduce(h, elems, key):
                        return False
        return True

    def contains(self, p: IntPoly) -> bool:
        return normal_form(p, self).is_zero()


def buchberger_z(gens: Iterable[IntPoly], order: str = "degrevlex",
                 nvars: int | None = None) -> GroebnerBasis:
    """Strong Groebner basis over Z of the ideal generated by ``gens``.

    Critical pairs are processed by the normal strategy: smallest lcm of
    leading monomials under the term order, ties broken by pair indices.
    """
    gens = list(gens)
    if nvars is None:
        if not gens:
            raise ValueError("nvars is required when there are no generators")
        nvars = gens[0].nvars
    for g in gens:
        if g.nvars != nvars:
            raise ValueError(f"variable count mismatch: {g.nvars} vs {nvars}")
    key = order_key(order)
    basis: list[_Elem] = []
    pairs: list[tuple] = []

    def add(terms: dict[Exp, int]):
        h = _Elem(terms, key)
        idx = len(basis)
        basis.append(h)
        for i, g in enumerate(basis[:-1]):
            if g.lc == 1 and h.lc == 1 and all(
                    x == 0 or y == 0 for x, y in zip(g.lm, h.lm)):
                continue  # coprime monic leading terms: S-pair reduces to 0
            lcm_m = exp_lcm(g.lm, h.lm)
            heapq.heappush(pairs, (key(lcm_m), i, idx))

    for g in gens:
        r = _reduce(g.terms, basis, key)
        if r:
            add(r)
    while pairs:
        _, i, j = heapq.heappop(pairs)
        for h in _spair(basis[i], basis[j]):
            r = _reduce(h, basis, key)
            if r:
                add(r)
    return GroebnerBasis(tuple(_autoreduce(basis, key, nvars)), order, nvars, True)


def _autoreduce(basis: list[_Elem], key, nvars: int) -> list[IntPoly]:
    ordered = sorted(basis, key=lambda g: (key(g.lm), g.lc))
    kept: list[_Elem] = []
    for g in ordered:
        if any(exp_divides(h.lm, g.lm) and g.lc % h.lc == 0 for h in kept):
            continue
        kept.append(g)
    for idx in range(len(kept)):
        others = kept[:idx] + kept[idx + 1:]
        terms = _reduce(kept[idx].terms, others, key, skip_leading=True)
        kept[idx] = _Elem(terms, key)
    kept.sort(key=lambda g: (key(g.lm), g.lc))
    return [IntPoly(nvars, g.terms) for g in kept]


def normal_form(p: IntPoly, gb: GroebnerBasis) -> IntPoly:
    """Unique remainder of ``p`` modulo the ideal of ``gb``."""
    if p.nvars != gb.nvars:
        raise ValueError(f"variable count mismatch: {p.nvars} vs {gb.nvars}")
    key = order_key(gb.order)
    return IntPoly(gb.nvars, _reduce(p.terms, gb._elems(), key))


class Reducer:
    """Caches the basis elements of ``gb`` for repeated normal forms."""

    def __init__(self, gb: GroebnerBasis):
        self.gb = gb
        self._key = order_key(gb.order)
        self._elems = gb._elems()

    def __call__(self, p: IntPoly) -> IntPoly:
        return IntPoly(self.gb.nvars, _reduce(p.terms, self._elems, self._key))
