"""Characteristic matrices and the nonsingularity (unimodularity) condition."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .linalg import smith_diagonal
from .nerve import Face, NerveComplex, all_faces

__all__ = ["CharMatrix", "pairing", "smith_diagonal", "is_unimodular",
           "validate_nonsingular"]


@dataclass(frozen=True)
class CharMatrix:
    """Rows ``a_1..a_m`` in ``Z^n``, one per vertex of the nerve.

    Signs are taken as given; they encode the chosen orientations and are
    never normalized here.
    """

    rows: tuple[tuple[int, ...], ...]
    n: int

    def __init__(self, rows: Iterable[Iterable[int]], n: int | None = None):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if n is None:
            if not rows:
                raise ValueError("cannot infer n from an empty matrix")
            n = len(rows[0])
        for i, r in enumerate(rows, 1):
            if len(r) != n:
                raise ValueError(f"row {i} has length {len(r)}, expected {n}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "n", n)

    @property
    def m(self) -> int:
        return len(self.rows)

    def row(self, j: int) -> tuple[int, ...]:
        if not 1 <= j <= self.m:
            raise IndexError(f"row index {j} out of range 1..{self.m}")
        return self.rows[j - 1]

    def submatrix(self, face: Iterable[int]) -> list[list[int]]:
        return [list(self.row(j)) for j in face]

    def transformed(self, basis_change: Sequence[Sequence[int]]) -> "CharMatrix":
        """Rows multiplied on the right by an ``n x n`` integer matrix."""
        cols = list(zip(*basis_change))
        return CharMatrix([[sum(a * b for a, b in zip(r, c)) for c in cols]
                           for r in self.rows], self.n)

    def with_row_negated(self, j: int) -> "CharMatrix":
        rows = [list(r) for r in self.rows]
        rows[j - 1] = [-x for x in rows[j - 1]]
        return CharMatrix(rows, self.n)


def pairing(l: CharMatrix, t: Sequence[int], j: int) -> int:
    """Evaluate ``<t, a_j>``."""
    if len(t) != l.n:
        raise ValueError(f"covector has length {len(t)}, expected {l.n}")
    return sum(x * y for x, y in zip(t, l.row(j)))


def is_unimodular(rows: Sequence[Sequence[int]]) -> bool:
    """True iff the rows extend to a Z-basis (all elementary divisors 1)."""
    if not rows:
        return True
    if len(rows) > len(rows[0]):
        return False
    return all(x == 1 for x in smith_diagonal(rows))


def validate_nonsingular(l: CharMatrix, complex: NerveComplex) -> list[Face]:
    """Nonempty faces whose rows fail to span a unimodular sublattice.

    An empty list means the condition holds.
    """
    if l.m != complex.m:
        raise ValueError(f"matrix has {l.m} rows but the complex has {complex.m} vertices")
    if complex.facets and l.n != complex.dim + 1:
        raise ValueError(f"torus rank {l.n} does not match complex dimension {complex.dim}")
    return [f for f in all_faces(complex)
            if f and not is_unimodular(l.submatrix(f))]
