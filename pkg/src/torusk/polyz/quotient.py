"""Z-module structure of quotient rings Z[v]/I.

Two independent routes are provided: standard monomials of a strong Groebner
basis, and Smith normal form of a degree-truncated presentation that never
looks at a Groebner basis.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from ..linalg import smith_diagonal, smith_form, unimodular_inverse
from .groebner import GroebnerBasis, Reducer
from .poly import Exp, IntPoly, exp_add, exp_divides, order_key


@dataclass(frozen=True)
class QuotientModule:
    """Additive structure of a quotient ring.

    ``status`` is one of ``"free"``, ``"torsion"``, ``"infinite"`` or
    ``"indeterminate"``. When the Groebner route applies,
    ``standard_monomials`` holds the finite support of all normal forms and
    ``coordinates`` maps a normal-form vector on that support to coordinates
    in ``basis`` (representatives of a Z-basis of the free part).
    """

    rank: int | None
    free: bool
    torsion: tuple[int, ...] = ()
    standard_monomials: tuple[Exp, ...] | None = None
    basis: tuple[IntPoly, ...] | None = None
    coordinates: tuple[tuple[int, ...], ...] | None = field(default=None, repr=False)
    status: str = "free"
    method: str = "standard-monomials"
    bound: int | None = None
    diagnostics: tuple[str, ...] = ()


def monomials_of_degree(nvars: int, degree: int) -> list[Exp]:
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


def monomials_up_to(nvars: int, degree: int) -> list[Exp]:
    out = []
    for k in range(degree + 1):
        out.extend(monomials_of_degree(nvars, k))
    return out


def lattice_quotient(rows: Iterable[dict[int, int]], ncols: int) -> tuple[int, tuple[int, ...]]:
    """Rank and torsion of ``Z^ncols`` modulo the span of sparse integer rows.

    Rows are brought to echelon form with gcd row operations; rows with a unit
    pivot are then split off (their pivot columns are cleared everywhere), and
    only the remaining block goes through a dense Smith normal form.
    """
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        r = {c: v for c, v in row.items() if v}
        while r:
            c = min(r)
            p = pivots.get(c)
            if p is None:
                pivots[c] = r
                break
            a, b = r[c], p[c]
            if a % b == 0:
                r = _axpy(r, p, -(a // b))
            else:
                g, u, v = _xgcd(b, a)
                new_p = _lin(p, u, r, v)
                rest = _lin(p, a // g, r, -(b // g))
                pivots[c] = new_p
                r = rest
    rank_lattice = len(pivots)
    unit = sorted(c for c, p in pivots.items() if abs(p[c]) == 1)
    for c in unit:
        pc = pivots[c]
        for c2, p2 in pivots.items():
            if c2 != c and p2.get(c):
                pivots[c2] = _axpy(p2, pc, -p2[c] * pc[c])
    unit_set = set(unit)
    rest_rows = [p for c, p in pivots.items() if c not in unit_set]
    torsion: tuple[int, ...] = ()
    if rest_rows:
        cols = sorted({c for p in rest_rows for c in p if c not in unit_set})
        index = {c: i for i, c in enumerate(cols)}
        dense = [[0] * len(cols) for _ in rest_rows]
        for i, p in enumerate(rest_rows):
            for c, v in p.items():
                if c not in unit_set:
                    dense[i][index[c]] = v
        torsion = tuple(x for x in smith_diagonal(dense) if x > 1)
    return ncols - rank_lattice, torsion


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def _axpy(r: dict[int, int], p: dict[int, int], k: int) -> dict[int, int]:
    out = dict(r)
    for c, v in p.items():
        w = out.get(c, 0) + k * v
        if w:
            out[c] = w
        else:
            out.pop(c, None)
    return out


def _lin(p: dict[int, int], a: int, r: dict[int, int], b: int) -> dict[int, int]:
    out: dict[int, int] = {}
    for c, v in p.items():
        out[c] = a * v
    for c, v in r.items():
        w = out.get(c, 0) + b * v
        if w:
            out[c] = w
        else:
            out.pop(c, None)
    return {c: v for c, v in out.items() if v}


def truncated_module(gens: Sequence[IntPoly], nvars: int, bound: int,
                     order: str = "degrevlex") -> tuple[int, tuple[int, ...]]:
    """Rank and torsion of ``Z[v]/(I + (v)^(bound+1))``, where I = (gens).

    Spans ``trunc(x^a * g)`` for all generators and all ``x^a`` of degree at
    most ``bound``; this is exactly the truncated ideal as a Z-module.
    """
    key = order_key(order)
    monos = sorted(monomials_up_to(nvars, bound), key=key, reverse=True)
    index = {e: i for i, e in enumerate(monos)}
    rows = []
    for g in gens:
        if g.is_zero():
            continue
        gt = g.truncate(bound)
        low = g.min_degree()
        for a in monomials_up_to(nvars, bound - low):
            row: dict[int, int] = {}
            da = sum(a)
            for e, c in gt.terms.items():
                if sum(e) + da <= bound:
                    row[index[exp_add(e, a)]] = c
            if row:
                rows.append(row)
    return lattice_quotient(rows, len(monos))


def graded_module(gens: Sequence[IntPoly], nvars: int, degree: int
                  ) -> tuple[int, tuple[int, ...]]:
    """Rank and torsion of the degree-``degree`` part of Z[v]/I, I homogeneous."""
    monos = monomials_of_degree(nvars, degree)
    index = {e: i for i, e in enumerate(monos)}
    rows = []
    for g in gens:
        if g.is_zero():
            continue
        if not g.is_homogeneous():
            raise ValueError(f"generator {g} is not homogeneous")
        dg = g.degree()
        if dg > degree:
            continue
        for a in monomials_of_degree(nvars, degree - dg):
            rows.append({index[exp_add(e, a)]: c for e, c in g.terms.items()})
    return lattice_quotient(rows, len(monos))


def _min_lc(lts: Sequence[tuple[Exp, int]], e: Exp) -> int:
    best = 0
    for lm, lc in lts:
        if exp_divides(lm, e) and (best == 0 or abs(lc) < best):
            best = abs(lc)
    return best


def standard_monomials(gb: GroebnerBasis, limit: int = 100_000) -> tuple[Exp, ...] | None:
    """Support of all normal forms, or ``None`` if it is infinite.

    These are the monomials not divisible by a leading term with coefficient
    +-1; with unit leading coefficients they are the usual standard monomials.
    The result is sorted increasingly in the term order.
    """
    lts = gb.leading_terms()
    monic = [e for e, c in lts if abs(c) == 1]
    n = gb.nvars
    start = (0,) * n
    if any(exp_divides(e, start) for e in monic):
        return ()
    for i in range(n):
        if not any(e[i] > 0 and sum(e) == e[i] for e in monic):
            return None
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for i in range(n):
            nxt = cur[:i] + (cur[i] + 1,) + cur[i + 1:]
            if nxt in seen or any(exp_divides(e, nxt) for e in monic):
                continue
            seen.add(nxt)
            if len(seen) > limit:
                raise RuntimeError("standard monomial enumeration exceeded limit")
            queue.append(nxt)
    key = order_key(gb.order)
    return tuple(sorted(seen, key=key))


def quotient_module(gb: GroebnerBasis, bound: int | None = None) -> QuotientModule:
    """Z-module structure of ``Z[v]/I`` from a strong Groebner basis of I.

    If the normal-form support ``S`` is finite the answer is exact:
    ``Z^S`` modulo the rows ``c x^e - NF(c x^e)`` for every ``e`` in ``S``
    whose minimal dividing leading coefficient ``c`` exceeds one. With all
    leading coefficients +-1 there are no such rows and ``S`` is a basis.

    Otherwise the Smith normal form of the truncated presentation is computed
    at ``bound - 1`` and ``bound``. That answer is only declared determinate
    if both agree and every monomial of degree ``bound`` lies in I; rank
    agreement alone does not rule out non-nilpotent ideals.
    """
    std = standard_monomials(gb)
    if std is not None:
        return _module_from_support(gb, std)
    if bound is None or bound < 1:
        return QuotientModule(None, False, status="infinite",
                              diagnostics=("normal forms have infinite support and no degree bound was given",))
    gens = list(gb.generators)
    lower = truncated_module(gens, gb.nvars, bound - 1, gb.order)
    upper = truncated_module(gens, gb.nvars, bound, gb.order)
    reduce = Reducer(gb)
    nilpotent = all(reduce(IntPoly.monomial(e)).is_zero()
                    for e in monomials_of_degree(gb.nvars, bound))
    rank, torsion = lower
    if lower == upper and nilpotent:
        status = "torsion" if torsion else "free"
        return QuotientModule(rank, not torsion, torsion, status=status,
                              method="smith-truncated", bound=bound)
    notes = []
    if lower != upper:
        notes.append(f"rank/torsion changed between degrees {bound - 1} and {bound}: "
                     f"{lower} -> {upper}")
    if not nilpotent:
        notes.append(f"some monomial of degree {bound} is not in the ideal")
    return QuotientModule(upper[0], False, upper[1], status="indeterminate",
                          method="smith-truncated", bound=bound, diagnostics=tuple(notes))


def _module_from_support(gb: GroebnerBasis, std: tuple[Exp, ...]) -> QuotientModule:
    nvars = gb.nvars
    if gb.has_unit_leading_coefficients():
        ident = tuple(tuple(int(i == j) for j in range(len(std))) for i in range(len(std)))
        basis = tuple(IntPoly.monomial(e) for e in std)
        return QuotientModule(len(std), True, (), std, basis, ident)
    index = {e: i for i, e in enumerate(std)}
    lts = gb.leading_terms()
    reduce = Reducer(gb)
    rows = []
    for e in std:
        c = _min_lc(lts, e)
        if c > 1:
            nf = reduce(IntPoly.monomial(e, c))
            row = [0] * len(std)
            row[index[e]] += c
            for te, tc in nf.terms.items():
                row[index[te]] -= tc
            rows.append(row)
    diag, v = smith_form(rows, ncols=len(std))
    torsion = tuple(x for x in diag if x > 1)
    free_cols = [j for j in range(len(std)) if j >= len(diag) or diag[j] == 0]
    rank = len(free_cols)
    coords = tuple(tuple(v[i][j] for j in free_cols) for i in range(len(std)))
    basis = None
    if not torsion:
        vinv = unimodular_inverse(v)
        basis = tuple(IntPoly(nvars, {std[i]: vinv[j][i] for i in range(len(std))})
                      for j in free_cols)
    status = "torsion" if torsion else "free"
    return QuotientModule(rank, not torsion, torsion, std, basis, coords, status,
                          "groebner-smith")


class QuotientRing:
    """Arithmetic in a free quotient ``Z[v]/I`` in coordinates of ``module.basis``.

    Coordinates of a polynomial are obtained from its normal form, so the map
    is Z-linear on the quotient even when normal forms themselves are not.
    """

    def __init__(self, gb: GroebnerBasis, module: QuotientModule | None = None):
        module = module or quotient_module(gb)
        if module.basis is None or module.coordinates is None:
            raise ValueError("quotient is not free on a finite normal-form support")
        self.gb = gb
        self.module = module
        self.basis = module.basis
        self.rank = len(self.basis)
        self.index = {e: i for i, e in enumerate(module.standard_monomials)}
        self._reduce = Reducer(gb)
        self._table: dict[tuple[int, int], list[int]] = {}

    def coords(self, p: IntPoly) -> list[int]:
        nf = self._reduce(p)
        out = [0] * self.rank
        w = self.module.coordinates
        for e, c in nf.terms.items():
            row = w[self.index[e]]
            for k in range(self.rank):
                if row[k]:
                    out[k] += c * row[k]
        return out

    def element(self, coords: Sequence[int]) -> IntPoly:
        p = IntPoly.zero(self.gb.nvars)
        for c, b in zip(coords, self.basis):
            if c:
                p = p + b * c
        return p

    def one(self) -> list[int]:
        return self.coords(IntPoly.constant(1, self.gb.nvars))

    def _basis_product(self, i: int, j: int) -> list[int]:
        if i > j:
            i, j = j, i
        got = self._table.get((i, j))
        if got is None:
            got = self.coords(self.basis[i] * self.basis[j])
            self._table[(i, j)] = got
        return got

    def mul(self, a: Sequence[int], b: Sequence[int]) -> list[int]:
        out = [0] * self.rank
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if not y:
                    continue
                for k, z in enumerate(self._basis_product(i, j)):
                    if z:
                        out[k] += x * y * z
        return out

    def pow(self, a: Sequence[int], k: int) -> list[int]:
        result = self.one()
        base = list(a)
        while k:
            if k & 1:
                result = self.mul(result, base)
            k >>= 1
            if k:
                base = self.mul(base, base)
        return result
