"""Nerve complexes of orbit spaces.

A nerve is an abstract pure simplicial complex on vertices ``1..m`` given by
its facets. Faces are plain sorted tuples of 1-based vertex labels; the empty
tuple is the empty face. Internally faces are packed into integer bitsets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

MAX_VERTICES = 64

Face = tuple[int, ...]


def face_key(face: Sequence[int]) -> tuple:
    """Sort key giving (cardinality, lexicographic) order."""
    return (len(face), tuple(face))


def to_mask(face: Iterable[int]) -> int:
    mask = 0
    for v in face:
        mask |= 1 << (v - 1)
    return mask


def from_mask(mask: int) -> Face:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


@dataclass(frozen=True)
class Violation:
    """A violated complex invariant together with a witness."""

    kind: str
    witness: tuple

    def __str__(self) -> str:
        return f"{self.kind}: {self.witness}"


@dataclass(frozen=True)
class NerveComplex:
    """Pure simplicial complex on ``m`` vertices, stored by its facets.

    Construction only normalizes (sorts, deduplicates); call :func:`validate`
    to check purity, vertex coverage and that no facet contains another.
    """

    m: int
    facets: tuple[Face, ...]
    _masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __init__(self, m: int, facets: Iterable[Iterable[int]],
                 max_vertices: int = MAX_VERTICES):
        if m < 0:
            raise ValueError("vertex count must be nonnegative")
        if m > max_vertices:
            raise ValueError(f"m={m} exceeds the vertex limit {max_vertices}")
        normalized = set()
        for facet in facets:
            face = tuple(sorted(set(facet)))
            for v in face:
                if not 1 <= v <= m:
                    raise ValueError(f"vertex {v} out of range 1..{m}")
            normalized.add(face)
        ordered = tuple(sorted(normalized, key=face_key))
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "facets", ordered)
        object.__setattr__(self, "_masks", tuple(to_mask(f) for f in ordered))

    @property
    def dim(self) -> int:
        """Size of the largest facet minus one (``-1`` for the void complex)."""
        return max((len(f) for f in self.facets), default=0) - 1

    @property
    def d(self) -> int:
        return len(self.facets)

    def facet_masks(self) -> tuple[int, ...]:
        return self._masks

    def _check_face_arg(self, s: Iterable[int]) -> Face:
        face = tuple(sorted(set(s)))
        for v in face:
            if not 1 <= v <= self.m:
                raise ValueError(f"vertex {v} out of range 1..{self.m}")
        return face

    def contains(self, s: Iterable[int]) -> bool:
        return is_face(self, s)

    def __repr__(self) -> str:
        return f"NerveComplex(m={self.m}, facets={list(self.facets)})"


def validate(complex: NerveComplex) -> list[Violation]:
    """Return every violated invariant; an empty list means the complex is ok."""
    out: list[Violation] = []
    sizes = {len(f) for f in complex.facets}
    if len(sizes) > 1:
        top = max(sizes)
        for f in complex.facets:
            if len(f) != top:
                out.append(Violation("purity", f))
    covered = set()
    for f in complex.facets:
        covered.update(f)
    for v in range(1, complex.m + 1):
        if v not in covered:
            out.append(Violation("uncovered-vertex", (v,)))
    masks = complex.facet_masks()
    for i, a in enumerate(masks):
        for j, b in enumerate(masks):
            if i != j and a & b == a:
                out.append(Violation("containment",
                                     (complex.facets[i], complex.facets[j])))
    return out


def is_face(complex: NerveComplex, s: Iterable[int]) -> bool:
    mask = to_mask(complex._check_face_arg(s))
    return any(mask & f == mask for f in complex.facet_masks())


def all_faces(complex: NerveComplex) -> list[Face]:
    """Every face including the empty one, in (cardinality, lex) order."""
    seen: set[Face] = set()
    for facet in complex.facets:
        for k in range(len(facet) + 1):
            seen.update(combinations(facet, k))
    if not complex.facets:
        seen.add(())
    return sorted(seen, key=face_key)


def minimal_nonfaces(complex: NerveComplex) -> list[Face]:
    """Inclusion-minimal vertex sets that are not faces.

    Each minimal nonface ``S`` arises exactly once as ``(S - {max S}) + {max S}``
    where ``S - {max S}`` is a face, so extending faces by larger vertices
    enumerates them all.
    """
    masks = complex.facet_masks()

    def present(mask: int) -> bool:
        return any(mask & f == mask for f in masks)

    found = []
    for face in all_faces(complex):
        top = face[-1] if face else 0
        base = to_mask(face)
        for v in range(top + 1, complex.m + 1):
            cand = base | (1 << (v - 1))
            if present(cand):
                continue
            if all(present(cand & ~(1 << (u - 1))) for u in face):
                found.append(face + (v,))
    return sorted(found, key=face_key)


def simplex_boundary(n: int) -> NerveComplex:
    """Boundary of the n-simplex on vertices ``1..n+1``."""
    verts = range(1, n + 2)
    return NerveComplex(n + 1, combinations(verts, n))


def join(a: NerveComplex, b: NerveComplex) -> NerveComplex:
    """Join of two complexes; vertices of ``b`` are shifted by ``a.m``."""
    facets = [fa + tuple(v + a.m for v in fb)
              for fa in a.facets for fb in b.facets]
    return NerveComplex(a.m + b.m, facets)
