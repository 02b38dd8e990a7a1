"""Finite diagrams of vector spaces with exact limits and colimits.

A diagram is a list of node dimensions plus arrows, each arrow carrying a
linear map from its source node's space to its destination node's space.
Limits are computed as compatibility subspaces of the direct sum, colimits
as quotients of the direct sum by one relation per (arrow, basis vector).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .matrix import LinearMap, Matrix, kernel_basis


@dataclass(frozen=True)
class DiagramOfSpaces:
    nodes: tuple  # dimensions
    arrows: tuple  # (src_index, dst_index, LinearMap)

    def __post_init__(self):
        for src, dst, f in self.arrows:
            if not (0 <= src < len(self.nodes) and 0 <= dst < len(self.nodes)):
                raise ValueError("arrow endpoint out of range")
            if f.domain_dim != self.nodes[src] or f.codomain_dim != self.nodes[dst]:
                raise ValueError(
                    f"arrow {src}->{dst} has shape {f.codomain_dim}x{f.domain_dim}, "
                    f"expected {self.nodes[dst]}x{self.nodes[src]}"
                )

    @classmethod
    def build(cls, nodes: Sequence[int], arrows: Sequence) -> "DiagramOfSpaces":
        return cls(tuple(nodes), tuple(arrows))


def _offsets(dims):
    offs = []
    total = 0
    for d in dims:
        offs.append(total)
        total += d
    return offs, total


def limit(d: DiagramOfSpaces) -> tuple:
    """Limit subspace of the direct sum cut out by arrow compatibility.

    Returns (dim, cone) where cone[i] maps the limit (in the coordinates of
    the returned basis) to node i.  Compatibility for an arrow f: s -> t is
    f(x_s) = x_t.
    """
    offs, total = _offsets(d.nodes)
    rows = []
    for src, dst, f in d.arrows:
        for i in range(f.codomain_dim):
            row = [Fraction(0)] * total
            for j in range(f.domain_dim):
                row[offs[src] + j] = f.matrix.entry(i, j)
            row[offs[dst] + i] -= 1
            rows.append(row)
    constraint = Matrix.from_rows(rows, total)
    basis = kernel_basis(constraint)
    dim = len(basis)
    cone = []
    for i, node_dim in enumerate(d.nodes):
        cols = [[vec[offs[i] + r] for r in range(node_dim)] for vec in basis]
        # columns of the cone matrix are the node-i blocks of the basis vectors
        mat = Matrix.from_rows(
            [[cols[k][r] for k in range(dim)] for r in range(node_dim)], dim
        )
        cone.append(LinearMap(mat))
    return dim, cone


def colimit(d: DiagramOfSpaces) -> tuple:
    """Quotient of the direct sum by span{i_src(x) - i_dst(f(x))}.

    Returns (dim, cocone) where cocone[i] maps node i into the colimit.
    The quotient map is a basis of the left null space of the relation
    matrix, so the cocone maps commute with every arrow by construction.
    """
    offs, total = _offsets(d.nodes)
    relation_cols = []
    for src, dst, f in d.arrows:
        for j in range(f.domain_dim):
            col = [Fraction(0)] * total
            col[offs[src] + j] += 1
            for i in range(f.codomain_dim):
                col[offs[dst] + i] -= f.matrix.entry(i, j)
            relation_cols.append(col)
    # rows of the relation-transpose matrix are the relation vectors
    relations_t = Matrix.from_rows(relation_cols, total)
    quotient_rows = kernel_basis(relations_t)
    dim = len(quotient_rows)
    projection = Matrix.from_rows(quotient_rows, total)
    cocone = []
    for i, node_dim in enumerate(d.nodes):
        rows = [
            [projection.entry(r, offs[i] + j) for j in range(node_dim)]
            for r in range(dim)
        ]
        cocone.append(LinearMap(Matrix.from_rows(rows, node_dim)))
    return dim, cocone
