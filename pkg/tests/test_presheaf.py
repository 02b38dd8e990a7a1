"""Presheaves, representations, dualization and hom-space computation."""

import random
from fractions import Fraction

import pytest

from quivsheaf import (
    LinearMap,
    Matrix,
    NatTrans,
    Presheaf,
    Representation,
    compose,
    constant_presheaf,
    dualize,
    dualize_morphism,
    edge_morphism,
    eval_presheaf,
    eval_representation,
    hom,
    morphisms_into,
    nat_trans_space,
)
from quivsheaf.presheaf import (
    DimensionMismatchError,
    NotNaturalError,
    identity_nat_trans,
    is_natural_presheaf,
    is_natural_representation,
)

from helpers import abc_quiver, chain_quiver, parallel_quiver, random_representation


def two_step_presheaf():
    q = abc_quiver()
    m1 = LinearMap.from_rows([[1, 2], [3, 4]])  # F(e1): F(b) -> F(a)
    m2 = LinearMap.from_rows([[5, 6], [7, 8]])  # F(e2): F(c) -> F(b)
    return q, Presheaf(q, {"a": 2, "b": 2, "c": 2}, {"e1": m1, "e2": m2})


def test_shape_validation():
    q = abc_quiver()
    with pytest.raises(DimensionMismatchError):
        Presheaf(q, {"a": 1, "b": 1}, {})
    with pytest.raises(DimensionMismatchError):
        Presheaf(
            q,
            {"a": 1, "b": 2, "c": 1},
            {"e1": LinearMap.identity(1), "e2": LinearMap.identity(1)},
        )
    with pytest.raises(DimensionMismatchError):
        Representation(
            q,
            {"a": 1, "b": 2, "c": 1},
            {"e1": LinearMap.identity(1), "e2": LinearMap.identity(1)},
        )


def test_eval_composition_convention():
    q, F = two_step_presheaf()
    p = compose(edge_morphism(q.edge("e1")), edge_morphism(q.edge("e2")))
    # contravariant: the matrix of the two-edge path is M(e1) . M(e2)
    expected = F.edge_map("e1").matrix @ F.edge_map("e2").matrix
    assert eval_presheaf(F, p).matrix == expected
    assert eval_presheaf(F, p).domain_dim == F.dim("c")
    assert eval_presheaf(F, p).codomain_dim == F.dim("a")


def test_eval_representation_convention():
    q = abc_quiver()
    V = Representation(
        q,
        {"a": 1, "b": 1, "c": 1},
        {"e1": LinearMap.from_rows([[2]]), "e2": LinearMap.from_rows([[3]])},
    )
    p = hom(q, "a", "c")[0]
    assert eval_representation(V, p).matrix.entries == (Fraction(6),)


def test_eval_functoriality_exhaustive():
    q, F = two_step_presheaf()
    for v in q.vertices:
        for p in morphisms_into(q, v):
            for g in morphisms_into(q, p.source):
                lhs = eval_presheaf(F, compose(g, p))
                rhs = eval_presheaf(F, g) @ eval_presheaf(F, p)
                assert lhs.matrix == rhs.matrix


def test_dualize_transposes_and_is_involutive():
    rng = random.Random(7)
    for _ in range(25):
        V = random_representation(rng)
        F = dualize(V)
        for e in V.quiver.edges:
            assert F.edge_map(e.id).matrix == V.edge_map(e.id).matrix.transpose()
        # dual commutes with path evaluation
        for v in V.quiver.vertices:
            for p in morphisms_into(V.quiver, v):
                assert (
                    eval_presheaf(F, p).matrix
                    == eval_representation(V, p).matrix.transpose()
                )
        back = Representation(F.quiver, dict(F.dims), {
            e: LinearMap(m.matrix.transpose()) for e, m in F.edge_maps.items()
        })
        for e in V.quiver.edges:
            assert back.edge_map(e.id).matrix == V.edge_map(e.id).matrix


def test_dualize_morphism_reverses_direction():
    q = chain_quiver(2)
    V = Representation(q, {"v1": 1, "v2": 1}, {"e1": LinearMap.from_rows([[2]])})
    W = Representation(q, {"v1": 1, "v2": 1}, {"e1": LinearMap.from_rows([[2]])})
    eta = NatTrans({"v1": LinearMap.from_rows([[3]]), "v2": LinearMap.from_rows([[3]])})
    assert is_natural_representation(V, W, eta)
    dual = dualize_morphism(V, W, eta)
    assert is_natural_presheaf(dualize(W), dualize(V), dual)
    bad = NatTrans({"v1": LinearMap.from_rows([[1]]), "v2": LinearMap.from_rows([[5]])})
    with pytest.raises(NotNaturalError):
        dualize_morphism(V, W, bad)


def test_nat_trans_space_contains_identity():
    q, F = two_step_presheaf()
    dim, basis = nat_trans_space(F, F)
    assert dim >= 1
    # the identity must lie in the span: solve for coordinates
    target = []
    for v in q.vertices:
        target.extend(Matrix.identity(F.dim(v)).entries)
    columns = []
    for eta in basis:
        col = []
        for v in q.vertices:
            col.extend(eta.component(v).matrix.entries)
        columns.append(col)
    stacked = Matrix.from_rows(
        [[columns[k][i] for k in range(dim)] for i in range(len(target))], dim
    )
    from quivsheaf import solve

    assert solve(stacked, target) is not None


def test_nat_trans_space_hand_example():
    # F = G on a single edge with F(e) = [[2]]: eta_a * 2 = 2 * eta_b
    # forces eta_a = eta_b, a one-dimensional space
    q = chain_quiver(2)
    F = Presheaf(q, {"v1": 1, "v2": 1}, {"e1": LinearMap.from_rows([[2]])})
    dim, basis = nat_trans_space(F, F)
    assert dim == 1
    eta = basis[0]
    assert eta.component("v1").matrix == eta.component("v2").matrix


def test_nat_trans_space_constant_to_constant():
    # on a connected quiver, maps between constant presheaves are constant
    # matrices: dimension m * n
    q = abc_quiver()
    for m, n in [(1, 1), (1, 2), (2, 2)]:
        F = constant_presheaf(q, m)
        G = constant_presheaf(q, n)
        dim, basis = nat_trans_space(F, G)
        assert dim == m * n
        for eta in basis:
            assert eta.component("a").matrix == eta.component("b").matrix


def test_nat_trans_space_tree_with_isomorphisms():
    # with all edge maps invertible on a chain, a transformation F -> F is
    # determined by its component at one vertex: dim = (dim at root)^2
    q = chain_quiver(3)
    F = Presheaf(
        q,
        {"v1": 2, "v2": 2, "v3": 2},
        {
            "e1": LinearMap.from_rows([[1, 1], [0, 1]]),
            "e2": LinearMap.from_rows([[2, 0], [0, 1]]),
        },
    )
    dim, _ = nat_trans_space(F, F)
    assert dim == 4


def test_nat_trans_space_zero_target():
    q = chain_quiver(2)
    F = constant_presheaf(q, 2)
    G = Presheaf(q, {"v1": 0, "v2": 0}, {"e1": LinearMap.zero(0, 0)})
    dim, basis = nat_trans_space(F, G)
    assert dim == 0 and basis == []


def test_identity_nat_trans_is_natural():
    q, F = two_step_presheaf()
    assert is_natural_presheaf(F, F, identity_nat_trans(F))


def test_parallel_edges_cut_hom_space():
    # F(e) = id, F(f) = 2id: eta_a = eta_b and eta_a * 2 = 2 * eta_b both
    # hold, so dim 1; with F(f) = 0 on one side only, naturality forces 0
    q = parallel_quiver()
    F = Presheaf(
        q,
        {"a": 1, "b": 1},
        {"e": LinearMap.identity(1), "f": LinearMap.from_rows([[2]])},
    )
    G = constant_presheaf(q, 1)
    dim, _ = nat_trans_space(F, G)
    # eta_a = eta_b (via e) and eta_a * 2 = eta_b (via f) force eta = 0
    assert dim == 0
