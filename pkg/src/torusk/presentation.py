"""K-ring and cohomology presentations built from nerve and characteristic data.

The K-ring is ``Z[v_1..v_m] / I`` where ``I`` is generated by

* the squarefree monomials of the minimal nonfaces of the nerve, and
* for each covector ``t``, the difference of products
  ``prod_{<t,a_j> > 0} (1 - v_j)^<t,a_j>  -  prod_{<t,a_j> < 0} (1 - v_j)^-<t,a_j>``.

Only finitely many ``t`` can be imposed; the standard basis ``e_1..e_n`` is
used and the rank check (rank equals the number of facets of the nerve) is
the gate that certifies the resulting ring.

Sign convention: ``"minus"`` uses ``(1 - v_j)`` as written above, ``"plus"``
uses ``(1 + v_j)``. The two rings are exchanged by ``v_j -> -v_j``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .charmap import CharMatrix, pairing, validate_nonsingular
from .errors import (HypothesisError, IndeterminateRankError,
                     NonsingularityError, NotShellableError)
from .linalg import det, unimodular_inverse
from .nerve import NerveComplex, minimal_nonfaces, validate
from .polyz import (GroebnerBasis, IntPoly, QuotientModule, QuotientRing,
                    buchberger_z, graded_module, one_minus_power,
                    quotient_module)
from .polyz.poly import Exp
from .shelling import Shelling, betti_numbers, find_shelling, verify_shelling

CONVENTIONS = {"minus": -1, "plus": 1}


@dataclass(frozen=True)
class ManifoldSpec:
    """A nerve together with its characteristic matrix, checked on construction."""

    complex: NerveComplex
    lam: CharMatrix
    names: tuple[str, ...] | None = None

    def __post_init__(self):
        problems = validate(self.complex)
        if problems:
            raise HypothesisError("invalid nerve: " + "; ".join(map(str, problems)))
        if self.names is not None and len(self.names) != self.complex.m:
            raise ValueError(f"{len(self.names)} facet names for {self.complex.m} vertices")
        bad = validate_nonsingular(self.lam, self.complex)
        if bad:
            raise NonsingularityError(bad)

    @property
    def m(self) -> int:
        return self.complex.m

    @property
    def n(self) -> int:
        return self.lam.n

    @property
    def d(self) -> int:
        return self.complex.d


@dataclass(frozen=True)
class TRelation:
    """Relation attached to a covector ``t``, kept in factored form."""

    t: tuple[int, ...]
    positive: tuple[tuple[int, int], ...]
    negative: tuple[tuple[int, int], ...]
    convention: str = "minus"

    def poly(self, nvars: int) -> IntPoly:
        sign = CONVENTIONS[self.convention]
        lhs = IntPoly.constant(1, nvars)
        for j, k in self.positive:
            lhs = lhs * one_minus_power(j, k, nvars, sign)
        rhs = IntPoly.constant(1, nvars)
        for j, k in self.negative:
            rhs = rhs * one_minus_power(j, k, nvars, sign)
        return lhs - rhs

    def evaluate(self, ring: QuotientRing) -> list[int]:
        """Coordinates of the relation in a free quotient ring, without expanding it."""
        sign = CONVENTIONS[self.convention]
        nvars = ring.gb.nvars

        def side(factors):
            acc = ring.one()
            for j, k in factors:
                base = ring.coords(IntPoly.constant(1, nvars) + IntPoly.var(j, nvars) * sign)
                acc = ring.mul(acc, ring.pow(base, k))
            return acc

        return [a - b for a, b in zip(side(self.positive), side(self.negative))]

    def format(self) -> str:
        op = "-" if self.convention == "minus" else "+"

        def side(factors):
            if not factors:
                return "1"
            return "*".join(f"(1 {op} v{j})" + (f"^{k}" if k != 1 else "")
                            for j, k in factors)

        return f"{side(self.positive)} - {side(self.negative)}"


def t_relation_factors(l: CharMatrix, t: Sequence[int],
                       convention: str = "minus") -> TRelation:
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown sign convention {convention!r}")
    if len(t) != l.n:
        raise ValueError(f"covector has length {len(t)}, expected {l.n}")
    pos, neg = [], []
    for j in range(1, l.m + 1):
        p = pairing(l, t, j)
        if p > 0:
            pos.append((j, p))
        elif p < 0:
            neg.append((j, -p))
    return TRelation(tuple(t), tuple(pos), tuple(neg), convention)


def t_relation(l: CharMatrix, t: Sequence[int], convention: str = "minus") -> IntPoly:
    """Expanded relation for the covector ``t``."""
    return t_relation_factors(l, t, convention).poly(l.m)


def sr_relations(complex: NerveComplex) -> list[IntPoly]:
    """One squarefree monomial per minimal nonface."""
    return [IntPoly.squarefree(s, complex.m) for s in minimal_nonfaces(complex)]


def linear_relations(l: CharMatrix, ts: Iterable[Sequence[int]]) -> list[IntPoly]:
    """Degree-one forms ``sum_j <t,a_j> v_j``."""
    out = []
    for t in ts:
        p = IntPoly.zero(l.m)
        for j in range(1, l.m + 1):
            c = pairing(l, t, j)
            if c:
                p = p + IntPoly.var(j, l.m) * c
        out.append(p)
    return out


def standard_covectors(n: int) -> list[tuple[int, ...]]:
    return [tuple(int(i == k) for i in range(n)) for k in range(n)]


@dataclass(frozen=True)
class BasisCertificate:
    """Change of basis from the shelling monomials to the standard monomials."""

    matrix: tuple[tuple[int, ...], ...]
    determinant: int

    @property
    def ok(self) -> bool:
        return abs(self.determinant) == 1


@dataclass
class RingPresentation:
    """A computed quotient ring together with its certificates.

    ``kind`` is ``"K"`` for the K-ring and ``"H"`` for the graded cohomology
    companion (variables in degree 2). Structure constants are indexed
    ``c[i][j][k]`` (0-based) in the shelling basis.
    """

    spec: ManifoldSpec
    kind: str
    shelling: Shelling
    sr_relations: list[IntPoly]
    t_relations: list[TRelation]
    linear_relations: list[tuple[tuple[int, ...], IntPoly]]
    gb: GroebnerBasis
    module: QuotientModule
    order: str
    convention: str
    shelling_basis: list[Exp] = field(default_factory=list)
    certificate: BasisCertificate | None = None
    structure_constants: list[list[list[int]]] | None = None
    graded_ranks: list[int] | None = None
    conforming: bool = False
    diagnostics: list[str] = field(default_factory=list)
    ring: QuotientRing | None = field(default=None, repr=False, compare=False)

    @property
    def d(self) -> int:
        return self.spec.d

    @property
    def rank(self) -> int | None:
        return self.module.rank

    def relations(self) -> list[IntPoly]:
        if self.kind == "K":
            return self.sr_relations + [tr.poly(self.spec.m) for tr in self.t_relations]
        return self.sr_relations + [p for _, p in self.linear_relations]


def _shelling_for(spec: ManifoldSpec, shelling: Shelling | None) -> Shelling:
    if shelling is None:
        shelling = find_shelling(spec.complex)
        if shelling is None:
            raise NotShellableError("the nerve admits no shelling")
        return shelling
    return verify_shelling(spec.complex, shelling.order)


def _shelling_monomials(shelling: Shelling, m: int) -> list[Exp]:
    return [tuple(int(j + 1 in r) for j in range(m)) for r in shelling.restrictions]


def k_presentation(spec: ManifoldSpec, extra_t: Iterable[Sequence[int]] = (),
                   order: str = "degrevlex", convention: str = "minus",
                   bound: int | None = None,
                   shelling: Shelling | None = None) -> RingPresentation:
    """Compute the K-ring presentation and certify it against the shelling.

    Raises :class:`HypothesisError` subclasses when no shelling exists and
    :class:`IndeterminateRankError` when the degree bound (default ``n + 1``)
    is too small for the Smith fallback. A rank different from the number of
    facets, or torsion, yields a non-conforming result with diagnostics.
    """
    shelling = _shelling_for(spec, shelling)
    m, n = spec.m, spec.n
    bound = n + 1 if bound is None else bound
    sr = sr_relations(spec.complex)
    trels = [t_relation_factors(spec.lam, t, convention) for t in standard_covectors(n)]
    gens = sr + [tr.poly(m) for tr in trels]
    gb = buchberger_z(gens, order, nvars=m)
    module = quotient_module(gb, bound)
    diagnostics: list[str] = []

    extra = [t_relation_factors(spec.lam, t, convention) for t in extra_t]
    if extra:
        if module.free and module.basis is not None:
            ring = QuotientRing(gb, module)
            new = []
            for tr in extra:
                coords = tr.evaluate(ring)
                if any(coords):
                    diagnostics.append(f"relation for t={list(tr.t)} is not implied by the basis relations")
                    new.append(ring.element(coords))
        else:
            new = [tr.poly(m) for tr in extra]
        if new:
            gb = buchberger_z(list(gb.generators) + new, order, nvars=m)
            module = quotient_module(gb, bound)
        trels = trels + extra

    if module.status == "indeterminate":
        raise IndeterminateRankError("; ".join(module.diagnostics)
                                     + f" (degree bound {bound}; raise it)")
    pres = RingPresentation(spec, "K", shelling, sr, trels, [], gb, module,
                            order, convention,
                            shelling_basis=_shelling_monomials(shelling, m))
    pres.diagnostics.extend(diagnostics)
    _finish(pres)
    return pres


def _finish(pres: RingPresentation) -> None:
    module = pres.module
    if module.status == "infinite":
        pres.diagnostics.append("quotient has infinite rank")
    elif module.torsion:
        pres.diagnostics.append(f"quotient has torsion {list(module.torsion)}")
    if module.rank is not None and module.rank != pres.d:
        pres.diagnostics.append(f"rank {module.rank} differs from the facet count {pres.d}")
    if not (module.free and module.rank == pres.d):
        return
    if module.basis is None:
        pres.diagnostics.append("free of the expected rank, but normal forms have infinite "
                                "support; no basis to certify the shelling monomials against")
        return
    pres.ring = QuotientRing(pres.gb, module)
    pres.certificate = shelling_basis_check(pres)
    if not pres.certificate.ok:
        pres.diagnostics.append(
            f"shelling monomials have change-of-basis determinant {pres.certificate.determinant}")
        return
    pres.structure_constants = structure_constants(pres)
    pres.conforming = True


def shelling_basis_check(pres: RingPresentation,
                         sh: Shelling | None = None) -> BasisCertificate:
    """Express each shelling monomial in the standard-monomial basis.

    Determinant +-1 certifies that the monomials on the restriction faces form
    a Z-basis of the quotient.
    """
    if pres.ring is None:
        raise ValueError("presentation is not free with a standard-monomial basis")
    sh = sh or pres.shelling
    m = pres.spec.m
    rows = [tuple(pres.ring.coords(IntPoly.monomial(e)))
            for e in _shelling_monomials(sh, m)]
    if len(rows) != pres.ring.rank:
        return BasisCertificate(tuple(rows), 0)
    return BasisCertificate(tuple(rows), det(rows))


def structure_constants(pres: RingPresentation) -> list[list[list[int]]]:
    """``c[i][j][k]`` with ``b_i * b_j = sum_k c[i][j][k] b_k`` in the shelling basis."""
    cert = pres.certificate or shelling_basis_check(pres)
    if not cert.ok:
        raise ValueError("shelling monomials are not a Z-basis")
    ring = pres.ring
    inv = unimodular_inverse(cert.matrix)
    d = len(cert.matrix)
    c = [[[0] * d for _ in range(d)] for _ in range(d)]
    for i in range(d):
        for j in range(i, d):
            w = ring.mul(cert.matrix[i], cert.matrix[j])
            x = [sum(w[s] * inv[s][k] for s in range(d)) for k in range(d)]
            c[i][j] = x
            c[j][i] = list(x)
    return c


def match_structure_constants(c: Sequence, target: Sequence) -> tuple[int, ...] | None:
    """A basis permutation fixing index 0 carrying ``c`` onto ``target``, if any.

    Returns ``p`` with ``c[p[i]][p[j]][p[k]] == target[i][j][k]`` for all indices.
    """
    d = len(c)
    if len(target) != d:
        return None
    for rest in itertools.permutations(range(1, d)):
        p = (0,) + rest
        if all(c[p[i]][p[j]][p[k]] == target[i][j][k]
               for i in range(d) for j in range(d) for k in range(d)):
            return p
    return None


def cohomology_presentation(spec: ManifoldSpec, order: str = "degrevlex",
                            shelling: Shelling | None = None) -> RingPresentation:
    """Graded companion ``Z[v]/(SR + linear forms)`` with ``deg v_j = 2``.

    ``graded_ranks[k]`` is the rank in degree ``2k``; conformance requires it
    to match the Betti numbers read off the shelling.
    """
    shelling = _shelling_for(spec, shelling)
    m, n = spec.m, spec.n
    sr = sr_relations(spec.complex)
    ts = standard_covectors(n)
    lin = linear_relations(spec.lam, ts)
    gb = buchberger_z(sr + lin, order, nvars=m)
    module = quotient_module(gb, n + 1)
    if module.status == "indeterminate":
        raise IndeterminateRankError("; ".join(module.diagnostics))
    pres = RingPresentation(spec, "H", shelling, sr, [], list(zip(ts, lin)), gb,
                            module, order, "minus",
                            shelling_basis=_shelling_monomials(shelling, m))
    if module.basis is not None and module.method == "standard-monomials":
        top = max((sum(e) for e in module.standard_monomials), default=0)
        ranks = [0] * (top + 1)
        for e in module.standard_monomials:
            ranks[sum(e)] += 1
    else:
        ranks = []
        for k in range(n + 2):
            r, tors = graded_module(sr + lin, m, k)
            if tors:
                pres.diagnostics.append(f"torsion {list(tors)} in degree {2 * k}")
            ranks.append(r)
        while len(ranks) > 1 and ranks[-1] == 0:
            ranks.pop()
    pres.graded_ranks = ranks
    betti = betti_numbers(shelling)
    if ranks != betti:
        pres.diagnostics.append(f"graded ranks {ranks} differ from Betti numbers {betti}")
    if module.rank != spec.d:
        pres.diagnostics.append(f"rank {module.rank} differs from the facet count {spec.d}")
    pres.conforming = module.free and module.rank == spec.d and ranks == betti
    return pres
