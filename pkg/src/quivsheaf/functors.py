"""Comparison machinery between locally constant sheaves and coarse
sheaves: the inclusion, hom-space full-faithfulness evidence, the two
candidate left adjoints built from finite universal constructions, the
adjunction dimension check, and transport/monodromy.

The groupoid completion is never materialized: per component its
computable content is the spanning-tree transports plus one monodromy
automorphism per non-tree edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .linalg import (
    DiagramOfSpaces,
    LinearMap,
    Matrix,
    colimit,
    inverse_map,
    is_isomorphism,
    limit,
    rank,
    solve,
)
from .presheaf import (
    NatTrans,
    Presheaf,
    eval_presheaf,
    is_natural_presheaf,
    nat_trans_space,
)
from .quiver import connected_components, slice_objects
from .sheaf import is_discrete_sheaf_criterion


class FunctorError(Exception):
    pass


class NotDiscreteSheafError(FunctorError):
    pass


class NonInvertibleEdgeError(FunctorError):
    def __init__(self, edge_id: str):
        self.edge_id = edge_id
        super().__init__(f"edge map {edge_id!r} is not invertible")


def include_discrete(F: Presheaf) -> Presheaf:
    """Inclusion of locally constant sheaves into coarse sheaves.

    Identity on the data; the precondition makes the functor's domain
    explicit.
    """
    if not is_discrete_sheaf_criterion(F):
        raise NotDiscreteSheafError("presheaf has a non-invertible edge map")
    return F


def fully_faithful_evidence(F: Presheaf, G: Presheaf) -> Tuple[int, int, bool]:
    """Hom dimensions on the locally constant side and the coarse side.

    Both sides are natural-transformation spaces of the same underlying
    presheaves, so they are computed by the same solve; the equality
    guards against accidental divergence of the two code paths.
    """
    if not (is_discrete_sheaf_criterion(F) and is_discrete_sheaf_criterion(G)):
        raise NotDiscreteSheafError("both arguments must be locally constant sheaves")
    dim_disc, basis_disc = nat_trans_space(F, G)
    dim_coarse, basis_coarse = nat_trans_space(include_discrete(F), include_discrete(G))
    equal = dim_disc == dim_coarse and all(
        a.components == b.components for a, b in zip(basis_disc, basis_coarse)
    )
    return dim_disc, dim_coarse, equal


@dataclass(frozen=True)
class PointwiseExtensionReport:
    vertex: str
    dim: int
    comparison: LinearMap  # F(v) -> the universal space, via the identity node
    comparison_is_iso: bool


def left_adjoint_literal(F: Presheaf, v: str) -> PointwiseExtensionReport:
    """Pointwise extension over all morphisms into v.

    Builds the diagram indexed by morphisms f: u -> v (node f carries
    F(u); each factorization g with f o g = f' contributes the map F(g)
    from node f to node f') and computes its universal space together with
    the canonical comparison from F(v) at the identity node.  The
    comparison is an isomorphism for every presheaf: the identity morphism
    is terminal among morphisms into v, so the construction collapses back
    to F(v) and cannot produce a locally constant sheaf.
    """
    q = F.quiver
    sl = slice_objects(q, v)
    nodes = [F.dim(f.source) for f in sl.objects]
    arrows = []
    for i_fprime, i_f, g in sl.arrows:
        # F(g): F(dom f) -> F(dom f'), i.e. node i_f -> node i_fprime
        arrows.append((i_f, i_fprime, eval_presheaf(F, g)))
    diagram = DiagramOfSpaces.build(nodes, arrows)
    dim, cone = limit(diagram)

    # comparison: columns are the coordinates of (F(f)(b))_f in the
    # universal space's basis, for b ranging over a basis of F(v)
    stacked = Matrix.stack_rows(
        [eval_presheaf(F, f).matrix for f in sl.objects], F.dim(v)
    )
    basis_cols = Matrix.from_rows(_universal_basis_rows(cone, nodes, dim), dim)
    comparison_cols = []
    for j in range(F.dim(v)):
        target = stacked.col(j)
        x = solve(basis_cols, target)
        if x is None:
            raise AssertionError("section image escapes the universal space")
        comparison_cols.append(x)
    comparison = LinearMap(
        Matrix.from_rows(
            [[comparison_cols[j][i] for j in range(F.dim(v))] for i in range(dim)],
            F.dim(v),
        )
    )
    return PointwiseExtensionReport(v, dim, comparison, is_isomorphism(comparison))


def _universal_basis_rows(cone, nodes, dim):
    """Rows of the (sum of nodes) x dim matrix whose columns are the
    universal space's basis vectors, recovered from the cone legs."""
    rows = []
    for leg, node_dim in zip(cone, nodes):
        for i in range(node_dim):
            rows.append([leg.matrix.entry(i, k) for k in range(dim)])
    return rows


@dataclass(frozen=True)
class ComponentExtension:
    presheaf: Presheaf  # constant on each component, identity edge maps
    unit: NatTrans  # F -> presheaf, the colimit cocone legs


def left_adjoint_component(F: Presheaf) -> ComponentExtension:
    """Component-wide colimit: the locally constant collapse of F.

    For each connected component the diagram holds F(v) at every vertex
    with one arrow per edge carrying its restriction map; the colimit
    dimension becomes the constant value of the output presheaf on that
    component and the cocone legs assemble into the adjunction unit.
    """
    q = F.quiver
    dims = {}
    units = {}
    for comp in connected_components(q):
        comp_set = set(comp)
        nodes = [F.dim(v) for v in comp]
        pos = {v: i for i, v in enumerate(comp)}
        arrows = []
        for e in q.edges:
            if e.src in comp_set:
                # F(e): F(dst) -> F(src)
                arrows.append((pos[e.dst], pos[e.src], F.edge_map(e.id)))
        dim, cocone = colimit(DiagramOfSpaces.build(nodes, arrows))
        for v in comp:
            dims[v] = dim
            units[v] = cocone[pos[v]]
    out = Presheaf(
        q, dims, {e.id: LinearMap.identity(dims[e.src]) for e in q.edges}
    )
    return ComponentExtension(out, NatTrans(units))


@dataclass(frozen=True)
class AdjunctionReport:
    left_dim: int
    right_dim: int
    match: bool
    unit_spans: bool


def check_adjunction(F: Presheaf, G: Presheaf) -> AdjunctionReport:
    """Compare hom dimensions on both sides of the candidate adjunction.

    left_dim counts maps from the component extension of F to G,
    right_dim counts maps from F to G; both by independent linear solves.
    Additionally composes each basis map with the unit and checks that the
    resulting maps F -> G are natural and span the right-hand space.
    """
    if not is_discrete_sheaf_criterion(G):
        raise NotDiscreteSheafError("right-hand argument must be a locally constant sheaf")
    ext = left_adjoint_component(F)
    left_dim, left_basis = nat_trans_space(ext.presheaf, G)
    right_dim, _ = nat_trans_space(F, G)

    unit_spans = True
    flattened = []
    for phi in left_basis:
        composed = NatTrans(
            {
                v: phi.component(v) @ ext.unit.component(v)
                for v in F.quiver.vertices
            }
        )
        if not is_natural_presheaf(F, G, composed):
            unit_spans = False
            break
        flat = []
        for v in F.quiver.vertices:
            flat.extend(composed.component(v).matrix.entries)
        flattened.append(flat)
    if unit_spans:
        width = len(flattened[0]) if flattened else 0
        # the adjunction map is injective iff the composites stay independent
        unit_spans = rank(Matrix.from_rows(flattened, width)) == left_dim
    match = left_dim == right_dim and unit_spans
    return AdjunctionReport(left_dim, right_dim, match, unit_spans)


def transport(F: Presheaf, walk, start: Optional[str] = None) -> LinearMap:
    """Composite map along an undirected walk of edges.

    ``walk`` is a sequence of (edge_id, direction) with direction +1 for
    forward traversal (source to target, applying the inverse restriction
    map) and -1 for backward traversal (applying the restriction map).
    ``start`` is required for the empty walk.
    """
    q = F.quiver
    if not walk:
        if start is None:
            raise FunctorError("empty walk needs an explicit start vertex")
        return LinearMap.identity(F.dim(start))
    first_edge = q.edge(walk[0][0])
    current = start
    if current is None:
        current = first_edge.src if walk[0][1] > 0 else first_edge.dst
    result = LinearMap.identity(F.dim(current))
    for edge_id, direction in walk:
        e = q.edge(edge_id)
        f = F.edge_map(edge_id)
        if direction > 0:
            if current != e.src:
                raise FunctorError(f"walk breaks at edge {edge_id!r}")
            if not is_isomorphism(f):
                raise NonInvertibleEdgeError(edge_id)
            result = inverse_map(f) @ result
            current = e.dst
        else:
            if current != e.dst:
                raise FunctorError(f"walk breaks at edge {edge_id!r}")
            result = f @ result
            current = e.src
    return result


@dataclass(frozen=True)
class CycleMonodromy:
    edge_id: str  # the non-tree edge closing the cycle
    base_vertex: str
    walk: tuple
    map: LinearMap
    is_identity: bool


@dataclass(frozen=True)
class ComponentTransport:
    root: str
    tree_edges: tuple  # edge ids, in BFS discovery order
    cycles: tuple  # CycleMonodromy per non-tree edge


@dataclass(frozen=True)
class TransportReport:
    components: tuple

    @property
    def all_identity(self) -> bool:
        return all(c.is_identity for comp in self.components for c in comp.cycles)


def monodromy_report(F: Presheaf) -> TransportReport:
    """Monodromy of each fundamental cycle, per spanning tree.

    The tree is grown breadth-first from the least vertex of each
    component, preferring earlier edges; each non-tree edge is traversed
    forward and closed through the tree, and the composite automorphism at
    its source vertex is reported.  All-identity monodromy means F is
    isomorphic to a presheaf with identity transports.
    """
    if not is_discrete_sheaf_criterion(F):
        raise NotDiscreteSheafError("monodromy needs invertible edge maps")
    q = F.quiver
    components = []
    for comp in connected_components(q):
        root = comp[0]
        comp_set = set(comp)
        # walk_to_root[v]: steps leading from v to the root
        walk_to_root = {root: ()}
        tree_edges: List[str] = []
        frontier = [root]
        visited = {root}
        while frontier:
            next_frontier = []
            for v in frontier:
                for e in q.edges:
                    if e.src == v and e.dst not in visited:
                        other, step = e.dst, (e.id, -1)
                    elif e.dst == v and e.src not in visited:
                        other, step = e.src, (e.id, +1)
                    else:
                        continue
                    visited.add(other)
                    tree_edges.append(e.id)
                    walk_to_root[other] = (step,) + walk_to_root[v]
                    next_frontier.append(other)
            frontier = next_frontier
        tree_set = set(tree_edges)
        cycles = []
        for e in q.edges:
            if e.src not in comp_set or e.id in tree_set:
                continue
            walk_down = tuple(
                (edge_id, -direction) for edge_id, direction in reversed(walk_to_root[e.src])
            )
            cycle_walk = ((e.id, +1),) + walk_to_root[e.dst] + walk_down
            m = transport(F, cycle_walk, start=e.src)
            cycles.append(
                CycleMonodromy(
                    e.id,
                    e.src,
                    cycle_walk,
                    m,
                    m.matrix == Matrix.identity(F.dim(e.src)),
                )
            )
        components.append(ComponentTransport(root, tuple(tree_edges), tuple(cycles)))
    return TransportReport(tuple(components))
