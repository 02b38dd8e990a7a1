"""Exact linear algebra: hand examples plus algebraic property tests.

The rank/kernel/solve/inverse answers are cross-checked against their
defining equations rather than against a second solver, which keeps the
oracle independent of the elimination code under test.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quivsheaf.linalg import (
    DiagramOfSpaces,
    LinearMap,
    Matrix,
    colimit,
    inverse,
    is_isomorphism,
    kernel_basis,
    limit,
    rank,
    rref,
    solve,
    transpose_map,
)

rationals = st.fractions(
    min_value=-9, max_value=9, max_denominator=7
)


def matrices(max_dim=4):
    return st.integers(1, max_dim).flatmap(
        lambda r: st.integers(1, max_dim).flatmap(
            lambda c: st.lists(
                st.lists(rationals, min_size=c, max_size=c),
                min_size=r,
                max_size=r,
            ).map(lambda rows: Matrix.from_rows(rows, c))
        )
    )


def test_rref_hand_example():
    m = Matrix.from_rows([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    reduced, pivots = rref(m)
    assert pivots == (0, 1)
    assert reduced.to_rows() == [
        [1, 0, 1],
        [0, 1, 1],
        [0, 0, 0],
    ]


def test_rank_examples():
    assert rank(Matrix.identity(3)) == 3
    assert rank(Matrix.zero(2, 5)) == 0
    assert rank(Matrix.from_rows([[1, 2], [2, 4]])) == 1
    assert rank(Matrix.zero(0, 3)) == 0
    assert rank(Matrix.zero(3, 0)) == 0


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rref_is_idempotent_and_rank_bounded(m):
    reduced, pivots = rref(m)
    again, again_pivots = rref(reduced)
    assert again == reduced and again_pivots == pivots
    assert len(pivots) <= min(m.rows, m.cols)


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_kernel_vectors_annihilate(m):
    basis = kernel_basis(m)
    # rank-nullity, with kernel vectors verified against the matrix itself
    assert len(basis) == m.cols - rank(m)
    for vec in basis:
        assert all(x == 0 for x in m.apply(vec))


@settings(max_examples=60, deadline=None)
@given(matrices(), st.data())
def test_solve_satisfies_equation(m, data):
    x = data.draw(st.lists(rationals, min_size=m.cols, max_size=m.cols))
    b = m.apply(x)
    found = solve(m, b)
    assert found is not None
    assert m.apply(found) == tuple(b)


def test_solve_inconsistent_returns_none():
    m = Matrix.from_rows([[1, 0], [1, 0]])
    assert solve(m, [1, 2]) is None


def test_inverse_round_trip():
    m = Matrix.from_rows([[1, 2], [3, 5]])
    inv = inverse(m)
    assert (m @ inv) == Matrix.identity(2)
    assert (inv @ m) == Matrix.identity(2)
    with pytest.raises(ValueError):
        inverse(Matrix.from_rows([[1, 2], [2, 4]]))
    with pytest.raises(ValueError):
        inverse(Matrix.zero(2, 3))


def test_transpose_and_rank_agree():
    m = Matrix.from_rows([[1, 2, 3], [0, 1, 1]])
    assert rank(m) == rank(m.transpose())
    assert m.transpose().transpose() == m


def test_zero_dimensional_maps_are_isomorphisms():
    assert is_isomorphism(LinearMap.zero(0, 0))
    assert not is_isomorphism(LinearMap.zero(1, 1))
    assert not is_isomorphism(LinearMap.zero(0, 1))


def test_linear_map_composition_shapes():
    f = LinearMap.from_rows([[1, 0, 2]])  # k^3 -> k^1
    g = LinearMap.from_rows([[1], [3]])  # k^1 -> k^2
    h = g @ f
    assert (h.codomain_dim, h.domain_dim) == (2, 3)
    assert transpose_map(h).matrix == h.matrix.transpose()


def test_limit_of_discrete_diagram_is_direct_sum():
    d = DiagramOfSpaces.build([2, 3], [])
    dim, cone = limit(d)
    assert dim == 5
    assert cone[0].codomain_dim == 2 and cone[1].codomain_dim == 3
    codim, cocone = colimit(d)
    assert codim == 5


def test_limit_equalizes_parallel_maps():
    # two maps k^2 -> k^1: (x, y) -> x and (x, y) -> y; the limit is the
    # diagonal plus the free copy of the target that both maps hit
    f = LinearMap.from_rows([[1, 0]])
    g = LinearMap.from_rows([[0, 1]])
    d = DiagramOfSpaces.build([2, 1], [(0, 1, f), (0, 1, g)])
    dim, cone = limit(d)
    assert dim == 1
    for src, dst, arrow in d.arrows:
        assert (arrow @ cone[src]).matrix == cone[dst].matrix


def test_colimit_coequalizes_parallel_maps():
    f = LinearMap.identity(1)
    g = LinearMap.from_rows([[2]])
    d = DiagramOfSpaces.build([1, 1], [(0, 1, f), (0, 1, g)])
    dim, cocone = colimit(d)
    # x ~ 2x collapses the target to zero, and the source with it
    assert dim == 0
    for src, dst, arrow in d.arrows:
        assert (cocone[dst] @ arrow).matrix == cocone[src].matrix


def test_colimit_of_span_is_pushout():
    # k <- k -> k with identities glues to one copy of k
    f = LinearMap.identity(1)
    d = DiagramOfSpaces.build([1, 1, 1], [(0, 1, f), (0, 2, f)])
    dim, cocone = colimit(d)
    assert dim == 1
    assert cocone[1].matrix == cocone[2].matrix


def test_cone_legs_commute_on_chain():
    f = LinearMap.from_rows([[1, 1]])
    d = DiagramOfSpaces.build([2, 1], [(0, 1, f)])
    dim, cone = limit(d)
    assert dim == 2  # graph of f
    assert (f @ cone[0]).matrix == cone[1].matrix


def test_fraction_exactness_no_drift():
    third = Fraction(1, 3)
    m = Matrix.from_rows([[third] * 3] * 3)
    assert rank(m) == 1
    total = m.apply([1, 1, 1])
    assert total == (Fraction(1), Fraction(1), Fraction(1))
