from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import all_shellings, brute_restrictions
from torusk.errors import NotShellableError
from torusk.nerve import NerveComplex, all_faces, simplex_boundary
from torusk.shelling import (betti_numbers, cell_dimensions, find_shelling,
                             h_vector, interval_of, verify_shelling)

from conftest import SQUARE, TRIANGLE


def test_verify_triangle(triangle):
    sh = verify_shelling(triangle, [(1, 2), (2, 3), (1, 3)])
    assert sh.restrictions == ((), (3,), (1, 3))


def test_verify_square(square):
    sh = verify_shelling(square, SQUARE)
    assert sh.restrictions == ((), (3,), (4,), (1, 4))


def test_verify_two_segments_fails_at_step_two():
    cx = NerveComplex(4, [(1, 2), (3, 4)])
    with pytest.raises(NotShellableError) as err:
        verify_shelling(cx, [(1, 2), (3, 4)])
    assert err.value.step == 2


def test_verify_rejects_non_permutation(triangle):
    with pytest.raises(ValueError):
        verify_shelling(triangle, [(1, 2), (2, 3)])


@pytest.mark.parametrize("m,facets", [(3, TRIANGLE), (4, SQUARE),
                                      (5, [(1, 2, 3), (1, 3, 4), (1, 4, 5), (2, 3, 4)])])
def test_verify_agrees_with_definition_on_every_order(m, facets):
    cx = NerveComplex(m, facets)
    for perm in permutations(facets):
        expected = brute_restrictions(list(perm))
        if isinstance(expected, int):
            with pytest.raises(NotShellableError) as err:
                verify_shelling(cx, perm)
            assert err.value.step == expected
        else:
            assert list(verify_shelling(cx, perm).restrictions) == expected


def test_find_shelling_examples(triangle, square):
    assert find_shelling(triangle) is not None
    assert find_shelling(square) is not None
    two = NerveComplex(8, SQUARE + [tuple(v + 4 for v in f) for f in SQUARE])
    assert find_shelling(two) is None
    assert all_shellings(two.facets[:4]) and not all_shellings(list(two.facets)[:2] + list(two.facets)[4:6])


def test_find_shelling_is_deterministic(square):
    assert find_shelling(square) == find_shelling(NerveComplex(4, list(reversed(SQUARE))))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_simplex_boundary_shellable_in_any_order(n):
    cx = simplex_boundary(n)
    for perm in permutations(cx.facets):
        verify_shelling(cx, perm)


def test_interval_of(triangle):
    sh = verify_shelling(triangle, [(1, 2), (2, 3), (1, 3)])
    assert interval_of(sh, (2,)) == 1
    assert interval_of(sh, (2, 3)) == 2
    assert interval_of(sh, ()) == 1
    with pytest.raises(ValueError):
        interval_of(sh, (1, 2, 3))


def test_h_vectors(triangle, square):
    assert h_vector(verify_shelling(triangle, [(1, 2), (2, 3), (1, 3)])) == (1, 1, 1)
    assert h_vector(verify_shelling(square, SQUARE)) == (1, 2, 1)
    single = NerveComplex(3, [(1, 2, 3)])
    assert h_vector(find_shelling(single)) == (1, 0, 0, 0)


def test_cell_dimensions(triangle, square):
    assert cell_dimensions(verify_shelling(triangle, [(1, 2), (2, 3), (1, 3)]), 2) == [4, 2, 0]
    assert cell_dimensions(verify_shelling(square, SQUARE), 2) == [4, 2, 2, 0]
    assert cell_dimensions(find_shelling(NerveComplex(3, [(1, 2, 3)])), 3) == [6]
    with pytest.raises(ValueError):
        cell_dimensions(find_shelling(square), 3)


def test_betti_reverse_h(square):
    sh = find_shelling(NerveComplex(5, [(1, 2, 3), (1, 3, 4), (1, 4, 5), (2, 3, 4)]))
    h = h_vector(sh)
    assert betti_numbers(sh) == list(reversed(h))


@pytest.mark.parametrize("m,facets", [(3, TRIANGLE), (4, SQUARE)])
def test_h_vector_same_for_every_shelling(m, facets):
    cx = NerveComplex(m, facets)
    hs = {h_vector(verify_shelling(cx, perm)) for perm, _ in all_shellings(facets)}
    assert len(hs) == 1


@st.composite
def shellable_orders(draw):
    # boundaries of simplices and their joins are shellable
    n1 = draw(st.integers(1, 3))
    n2 = draw(st.integers(0, 2))
    a = simplex_boundary(n1)
    if n2:
        from torusk.nerve import join
        a = join(a, simplex_boundary(n2))
    return a


@settings(max_examples=20, deadline=None)
@given(shellable_orders())
def test_partition_and_counting(cx):
    sh = find_shelling(cx)
    assert sh is not None
    verify_shelling(cx, sh.order)
    faces = all_faces(cx)
    for g in faces:
        hits = [i for i, (r, f) in enumerate(sh.intervals())
                if set(r) <= set(g) <= set(f)]
        assert len(hits) == 1
        assert interval_of(sh, g) == hits[0] + 1
    assert sum(2 ** (len(f) - len(r)) for r, f in sh.intervals()) == len(faces)
