"""Shelling orders, restriction faces and the cell structure they induce."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NotShellableError
from .nerve import Face, NerveComplex, face_key, from_mask, to_mask


@dataclass(frozen=True)
class Shelling:
    """A verified shelling ``F_1..F_d`` with restrictions ``r(F_1)..r(F_d)``.

    Indices exposed by the public functions are 1-based, matching facet
    positions in the order.
    """

    order: tuple[Face, ...]
    restrictions: tuple[Face, ...]

    @property
    def d(self) -> int:
        return len(self.order)

    @property
    def n(self) -> int:
        return len(self.order[0]) if self.order else 0

    def intervals(self) -> list[tuple[Face, Face]]:
        return list(zip(self.restrictions, self.order))


def restriction(facet_mask: int, earlier: Sequence[int]) -> int:
    """Vertices ``v`` of the facet whose removal lands in the earlier subcomplex."""
    r = 0
    m = facet_mask
    while m:
        low = m & -m
        ridge = facet_mask & ~low
        if any(ridge & e == ridge for e in earlier):
            r |= low
        m &= m - 1
    return r


def _step_ok(r: int, earlier: Sequence[int]) -> bool:
    # every new face contains r by construction of r; r itself must be new
    return not any(r & e == r for e in earlier)


def verify_shelling(complex: NerveComplex,
                    order: Iterable[Iterable[int]]) -> Shelling:
    """Check a facet order and compute its restrictions.

    Raises :class:`NotShellableError` carrying the earliest failing step
    (1-based) if some step adds new faces without a unique minimal one.
    """
    faces = [tuple(sorted(f)) for f in order]
    if sorted(faces, key=face_key) != list(complex.facets):
        raise ValueError("order is not a permutation of the complex's facets")
    masks = [to_mask(f) for f in faces]
    restrictions = []
    for i, fm in enumerate(masks):
        r = restriction(fm, masks[:i])
        if not _step_ok(r, masks[:i]):
            raise NotShellableError(
                f"step {i + 1}: new faces of {faces[i]} have no unique minimal element",
                step=i + 1)
        restrictions.append(from_mask(r))
    return Shelling(tuple(faces), tuple(restrictions))


def _ridge_adjacent(a: int, b: int, n: int) -> bool:
    return (a & b).bit_count() == n - 1 if n > 0 else False


def find_shelling(complex: NerveComplex) -> Shelling | None:
    """Depth-first search for a shelling; returns ``None`` if none exists.

    Extensions are tried with facets sharing a codimension-one face with the
    current subcomplex first, each group in (cardinality, lex) order. Whether a
    partial order extends depends only on the set of facets used so far, so
    dead sets are memoized and the search stays exhaustive.
    """
    facets = list(complex.facets)
    if not facets:
        return None
    masks = [to_mask(f) for f in facets]
    n = len(facets[0])
    full = (1 << len(facets)) - 1
    dead: set[int] = set()

    def extend(used: int, seq: list[int]) -> list[int] | None:
        if used == full:
            return seq
        if used in dead:
            return None
        earlier = [masks[i] for i in seq]
        adjacent, other = [], []
        for i in range(len(facets)):
            if used >> i & 1:
                continue
            r = restriction(masks[i], earlier)
            if not _step_ok(r, earlier):
                continue
            if any(_ridge_adjacent(masks[i], e, n) for e in earlier):
                adjacent.append(i)
            else:
                other.append(i)
        for i in adjacent + other:
            found = extend(used | 1 << i, seq + [i])
            if found is not None:
                return found
        dead.add(used)
        return None

    for start in range(len(facets)):
        found = extend(1 << start, [start])
        if found is not None:
            return verify_shelling(complex, [facets[i] for i in found])
    return None


def interval_of(shelling: Shelling, g: Iterable[int]) -> int:
    """The unique 1-based ``i`` with ``r(F_i) <= g <= F_i``."""
    gm = to_mask(g)
    hits = [i + 1 for i, (r, f) in enumerate(shelling.intervals())
            if to_mask(r) & gm == to_mask(r) and gm & to_mask(f) == gm]
    if not hits:
        raise ValueError(f"{tuple(sorted(g))} is not a face of the shelled complex")
    if len(hits) > 1:
        raise AssertionError(f"face {tuple(sorted(g))} lies in intervals {hits}")
    return hits[0]


def h_vector(shelling: Shelling) -> tuple[int, ...]:
    """``h_k`` counts restrictions of size ``k``, for ``k = 0..n``."""
    h = [0] * (shelling.n + 1)
    for r in shelling.restrictions:
        h[len(r)] += 1
    return tuple(h)


def cell_dimensions(shelling: Shelling, n: int) -> list[int]:
    """Real dimensions ``2 (n - |r(F_i)|)`` of the cells, in shelling order."""
    if shelling.n != n:
        raise ValueError(f"complex has dimension {shelling.n - 1}, expected {n - 1}")
    return [2 * (n - len(r)) for r in shelling.restrictions]


def betti_numbers(shelling: Shelling) -> list[int]:
    """Even Betti numbers ``b_0, b_2, ..., b_2n``; ``b_2k = h_(n-k)``."""
    h = h_vector(shelling)
    n = shelling.n
    return [h[n - k] for k in range(n + 1)]
