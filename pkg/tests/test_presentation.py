from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import all_shellings
from torusk.charmap import CharMatrix
from torusk.errors import NonsingularityError, NotShellableError
from torusk.nerve import NerveComplex
from torusk.polyz import IntPoly, truncated_module
from torusk.presentation import (ManifoldSpec, cohomology_presentation,
                                 k_presentation, match_structure_constants,
                                 shelling_basis_check, sr_relations,
                                 structure_constants, t_relation)
from torusk.shelling import verify_shelling
from torusk.specdoc import disjoint_squares, hirzebruch, product, simplex

from conftest import CP2_ROWS, SQUARE


def v(j, n=3):
    return IntPoly.var(j, n)


def z_truncated_power(d):
    """Structure constants of Z[a]/(a^d) in the basis 1, a, ..., a^(d-1)."""
    return [[[int(i + j == k) for k in range(d)] for j in range(d)] for i in range(d)]


def z_two_squares():
    """Z[a,b]/(a^2,b^2) in the basis 1, a, b, ab."""
    mono = [(0, 0), (1, 0), (0, 1), (1, 1)]
    c = [[[0] * 4 for _ in range(4)] for _ in range(4)]
    for i, a in enumerate(mono):
        for j, b in enumerate(mono):
            s = (a[0] + b[0], a[1] + b[1])
            if s in mono:
                c[i][j][mono.index(s)] = 1
    return c


def test_sr_relations(triangle, square):
    assert sr_relations(triangle) == [v(1) * v(2) * v(3)]
    assert sr_relations(square) == [v(1, 4) * v(3, 4), v(2, 4) * v(4, 4)]


def test_t_relations_cp2():
    l = CharMatrix(CP2_ROWS)
    assert t_relation(l, (1, 0)) == v(3) - v(1)
    assert t_relation(l, (0, 1)) == v(3) - v(2)
    assert t_relation(l, (1, 0), "plus") == v(1) - v(3)
    # <t,a> = (2, 1, -3)
    lhs = (1 - v(1)) ** 2 * (1 - v(2))
    assert t_relation(l, (2, 1)) == lhs - (1 - v(3)) ** 3
    assert t_relation(l, (0, 0)).is_zero()


def test_cp2_presentation(cp2):
    pres = k_presentation(cp2)
    assert pres.rank == 3 and pres.module.free and pres.conforming
    assert pres.certificate.determinant in (1, -1)
    assert pres.shelling_basis == [(0, 0, 0), (0, 0, 1), (0, 1, 1)]
    assert pres.structure_constants == z_truncated_power(3)
    assert [tr.format() for tr in pres.t_relations] == ["(1 - v1) - (1 - v3)",
                                                        "(1 - v2) - (1 - v3)"]


def test_conventions_agree_on_rank(cp2):
    for conv in ("minus", "plus"):
        pres = k_presentation(cp2, convention=conv)
        assert pres.rank == 3 and pres.conforming


def test_given_shelling_is_verified(cp2, triangle):
    sh = verify_shelling(triangle, [(2, 3), (1, 3), (1, 2)])
    pres = k_presentation(cp2, shelling=sh)
    assert pres.shelling.order == ((2, 3), (1, 3), (1, 2))
    assert pres.conforming


def test_hypothesis_failures(triangle):
    with pytest.raises(NonsingularityError) as err:
        ManifoldSpec(triangle, CharMatrix([(2, 0), (0, 1), (-1, -1)]))
    assert (1,) in err.value.faces
    with pytest.raises(NotShellableError):
        k_presentation(disjoint_squares().to_manifold())


@pytest.mark.parametrize("k", [0, 1, 2, 3, -2])
def test_every_shelling_gives_a_basis(k):
    spec = hirzebruch(k).to_manifold()
    pres = k_presentation(spec)
    assert pres.conforming
    for order, _ in all_shellings(SQUARE):
        cert = shelling_basis_check(pres, verify_shelling(spec.complex, order))
        assert cert.ok


def test_hirzebruch_zero_is_product_of_lines():
    pres = k_presentation(hirzebruch(0).to_manifold())
    assert match_structure_constants(pres.structure_constants, z_two_squares()) is not None
    prod = k_presentation(product(simplex(1), simplex(1)).to_manifold())
    assert match_structure_constants(prod.structure_constants, z_two_squares()) is not None


def test_hirzebruch_one_is_not_product_ring():
    # CP^2 blown up at a point: the multiplication differs from CP^1 x CP^1
    pres = k_presentation(hirzebruch(1).to_manifold())
    assert pres.conforming
    assert match_structure_constants(pres.structure_constants, z_two_squares()) is None


def test_structure_constants_commutative_associative():
    pres = k_presentation(product(simplex(1), simplex(2)).to_manifold())
    c = pres.structure_constants
    d = len(c)
    assert d == 6
    for i in range(d):
        assert c[0][i] == [int(k == i) for k in range(d)]
        for j in range(d):
            assert c[i][j] == c[j][i]
            for l in range(d):
                left = [sum(c[i][j][s] * c[s][l][k] for s in range(d)) for k in range(d)]
                right = [sum(c[j][l][s] * c[i][s][k] for s in range(d)) for k in range(d)]
                assert left == right


def test_cohomology_cp3():
    pres = cohomology_presentation(simplex(3).to_manifold())
    assert pres.graded_ranks == [1, 1, 1, 1]
    assert pres.conforming and pres.rank == 4


@pytest.mark.parametrize("order", ["degrevlex", "deglex", "lex"])
def test_term_order_does_not_change_result(order):
    pres = k_presentation(hirzebruch(2).to_manifold(), order=order)
    assert pres.conforming and pres.rank == 4
    assert match_structure_constants(
        pres.structure_constants,
        k_presentation(hirzebruch(2).to_manifold()).structure_constants) == (0, 1, 2, 3)


@settings(max_examples=15, deadline=None)
@given(st.integers(-6, 6), st.sampled_from(["minus", "plus"]))
def test_hirzebruch_family_rank(k, conv):
    spec = hirzebruch(k).to_manifold()
    pres = k_presentation(spec, convention=conv)
    assert pres.conforming and pres.rank == 4
    assert truncated_module(pres.relations(), 4, 3) == (4, ())


@settings(max_examples=15, deadline=None)
@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), max_size=5))
def test_extra_covectors_implied(ts):
    pres = k_presentation(simplex(2).to_manifold(), extra_t=ts)
    assert pres.rank == 3 and pres.conforming
    assert not [d for d in pres.diagnostics if "not implied" in d]
