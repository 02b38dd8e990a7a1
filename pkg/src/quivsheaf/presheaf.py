"""Presheaves and covariant representations of a path category as matrix
data on edges, extension to paths, dualization, and natural-transformation
hom-spaces.

Maps are stored on edges only; extension to paths is forced because the
path category is free, so no separate functoriality data needs checking.
Dual spaces are identified with coordinate spaces via the dual basis,
which makes dualization literally matrix transposition.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping

from .linalg import (
    LinearMap,
    Matrix,
    kernel_basis,
    transpose_map,
)
from .quiver import PathMorphism, Quiver, UnknownEdgeError


class PresheafError(Exception):
    pass


class DimensionMismatchError(PresheafError):
    pass


class NotNaturalError(PresheafError):
    pass


def _check_maps(quiver: Quiver, dims: Mapping, edge_maps: Mapping, contravariant: bool):
    for v in quiver.vertices:
        if v not in dims or dims[v] < 0:
            raise DimensionMismatchError(f"missing or negative dimension at vertex {v!r}")
    for e in quiver.edges:
        if e.id not in edge_maps:
            raise DimensionMismatchError(f"missing map for edge {e.id!r}")
        f = edge_maps[e.id]
        if contravariant:
            want = (dims[e.src], dims[e.dst])  # F(e): F(dst) -> F(src)
        else:
            want = (dims[e.dst], dims[e.src])  # V(e): V(src) -> V(dst)
        if (f.codomain_dim, f.domain_dim) != want:
            raise DimensionMismatchError(
                f"edge {e.id!r}: map is {f.codomain_dim}x{f.domain_dim}, expected {want[0]}x{want[1]}"
            )


@dataclass(frozen=True)
class Presheaf:
    """Contravariant functor to finite-dimensional spaces: F(e): F(t(e)) -> F(s(e))."""

    quiver: Quiver
    dims: Mapping
    edge_maps: Mapping  # edge id -> LinearMap

    def __post_init__(self):
        _check_maps(self.quiver, self.dims, self.edge_maps, contravariant=True)

    def dim(self, v: str) -> int:
        return self.dims[v]

    def edge_map(self, edge_id: str) -> LinearMap:
        try:
            return self.edge_maps[edge_id]
        except KeyError:
            raise UnknownEdgeError(edge_id) from None


@dataclass(frozen=True)
class Representation:
    """Covariant functor (quiver representation): V(e): V(s(e)) -> V(t(e))."""

    quiver: Quiver
    dims: Mapping
    edge_maps: Mapping

    def __post_init__(self):
        _check_maps(self.quiver, self.dims, self.edge_maps, contravariant=False)

    def dim(self, v: str) -> int:
        return self.dims[v]

    def edge_map(self, edge_id: str) -> LinearMap:
        try:
            return self.edge_maps[edge_id]
        except KeyError:
            raise UnknownEdgeError(edge_id) from None


def eval_presheaf(F: Presheaf, p: PathMorphism) -> LinearMap:
    """The restriction map F(p): F(target) -> F(source).

    Under the column-vector convention a two-edge path [e1, e2] evaluates
    to the matrix product M(e1) . M(e2).
    """
    result = LinearMap.identity(F.dim(p.target))
    for edge_id in reversed(p.edges):
        result = F.edge_map(edge_id) @ result
    return result


def eval_representation(V: Representation, p: PathMorphism) -> LinearMap:
    """V(p): V(source) -> V(target), composing edge maps along the path."""
    result = LinearMap.identity(V.dim(p.source))
    for edge_id in p.edges:
        result = V.edge_map(edge_id) @ result
    return result


def dualize(V: Representation) -> Presheaf:
    """The dual presheaf: same dimensions, each edge map transposed."""
    return Presheaf(
        V.quiver,
        dict(V.dims),
        {e: transpose_map(f) for e, f in V.edge_maps.items()},
    )


def constant_presheaf(q: Quiver, dim: int) -> Presheaf:
    """Every vertex gets the same space, every edge map the identity."""
    return Presheaf(
        q,
        {v: dim for v in q.vertices},
        {e.id: LinearMap.identity(dim) for e in q.edges},
    )


@dataclass(frozen=True)
class NatTrans:
    """Per-vertex components of a natural transformation; naturality on
    edges suffices because the path category is free."""

    components: Mapping  # vertex -> LinearMap

    def component(self, v: str) -> LinearMap:
        return self.components[v]


def identity_nat_trans(F: Presheaf) -> NatTrans:
    return NatTrans({v: LinearMap.identity(F.dim(v)) for v in F.quiver.vertices})


def is_natural_presheaf(F: Presheaf, G: Presheaf, eta: NatTrans) -> bool:
    """Check G(e) . eta_t(e) = eta_s(e) . F(e) on every edge."""
    for e in F.quiver.edges:
        left = G.edge_map(e.id) @ eta.component(e.dst)
        right = eta.component(e.src) @ F.edge_map(e.id)
        if left != right:
            return False
    return True


def is_natural_representation(V: Representation, W: Representation, eta: NatTrans) -> bool:
    """Check eta_t(e) . V(e) = W(e) . eta_s(e) on every edge."""
    for e in V.quiver.edges:
        left = eta.component(e.dst) @ V.edge_map(e.id)
        right = W.edge_map(e.id) @ eta.component(e.src)
        if left != right:
            return False
    return True


def dualize_morphism(V: Representation, W: Representation, eta: NatTrans) -> NatTrans:
    """Dual of a representation morphism eta: V -> W, a map W* -> V*.

    Components are transposes; the direction reverses contravariantly.
    """
    if not is_natural_representation(V, W, eta):
        raise NotNaturalError("input transformation fails the naturality square")
    return NatTrans({v: transpose_map(f) for v, f in eta.components.items()})


def nat_trans_space(F: Presheaf, G: Presheaf) -> tuple:
    """Dimension and basis of the space of natural transformations F -> G.

    Solves the per-edge linear system G(e) . eta_t = eta_s . F(e) in the
    component entries; edges suffice since the category is free on the
    quiver.
    """
    if F.quiver != G.quiver:
        raise PresheafError("presheaves live on different quivers")
    q = F.quiver
    offsets: Dict[str, int] = {}
    total = 0
    for v in q.vertices:
        offsets[v] = total
        total += G.dim(v) * F.dim(v)

    def unknown(v, i, j):
        # entry (i, j) of the component at v, row-major
        return offsets[v] + i * F.dim(v) + j

    rows = []
    for e in q.edges:
        fe = F.edge_map(e.id).matrix  # F(t) -> F(s)
        ge = G.edge_map(e.id).matrix  # G(t) -> G(s)
        # equation block: eta_s . F(e) - G(e) . eta_t = 0, one row per
        # (i in G(s), j in F(t))
        for i in range(G.dim(e.src)):
            for j in range(F.dim(e.dst)):
                row = [Fraction(0)] * total
                for k in range(F.dim(e.src)):
                    row[unknown(e.src, i, k)] += fe.entry(k, j)
                for k in range(G.dim(e.dst)):
                    row[unknown(e.dst, k, j)] -= ge.entry(i, k)
                rows.append(row)

    system = Matrix.from_rows(rows, total)
    basis_vectors = kernel_basis(system)

    def unpack(vec) -> NatTrans:
        components = {}
        for v in q.vertices:
            gd, fd = G.dim(v), F.dim(v)
            start = offsets[v]
            grid = [
                [vec[start + i * fd + j] for j in range(fd)] for i in range(gd)
            ]
            components[v] = LinearMap(Matrix.from_rows(grid, fd))
        return NatTrans(components)

    basis = [unpack(vec) for vec in basis_vectors]
    for eta in basis:
        # every returned basis element must pass the exact naturality check
        if not is_natural_presheaf(F, G, eta):
            raise NotNaturalError("solver produced a non-natural transformation")
    return len(basis), basis
