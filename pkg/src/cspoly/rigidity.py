"""Rigidity matrices, stresses and infinitesimal motions of bar frameworks.

All verdicts use exact rational elimination.  Edges are ordered
lexicographically and vertices ascending, so matrices and bases are
reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Mapping

from .complex import Graph, SimplicialComplex, graph, make_graph
from .geometry import Embedding, GeometryError, Vector, affine_rank, sub
from .linalg import left_nullspace, nullspace, numeric_rank, rank as exact_rank, same_span
from .symmetry import Involution

Edge = tuple[int, int]


@dataclass(frozen=True)
class RigidityMatrix:
    """Row for edge {u, v}: p(u)-p(v) in block u, p(v)-p(u) in block v."""

    edges: tuple[Edge, ...]
    vertices: tuple[int, ...]
    d: int
    rows: tuple[tuple[Fraction, ...], ...]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.edges), self.d * len(self.vertices)


@dataclass(frozen=True)
class StressVector:
    weights: Mapping[Edge, Fraction]

    def __getitem__(self, e: Edge) -> Fraction:
        return self.weights.get(tuple(sorted(e)), Fraction(0))  # type: ignore[arg-type]


@dataclass(frozen=True)
class StressBasis:
    edges: tuple[Edge, ...]
    vectors: tuple[tuple[Fraction, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def stresses(self) -> list[StressVector]:
        return [StressVector(dict(zip(self.edges, v))) for v in self.vectors]


def rigidity_matrix(g: Graph, emb: Embedding) -> RigidityMatrix:
    missing = [v for v in g.vertices if v not in emb.coords]
    if missing:
        raise GeometryError(f"vertices {missing} have no coordinates")
    d = emb.d
    col = {v: i * d for i, v in enumerate(g.vertices)}
    zero = Fraction(0)
    rows = []
    for u, v in g.edges:
        row = [zero] * (d * len(g.vertices))
        diff = sub(emb[u], emb[v])
        for k in range(d):
            row[col[u] + k] = diff[k]
            row[col[v] + k] = -diff[k]
        rows.append(tuple(row))
    return RigidityMatrix(g.edges, g.vertices, d, tuple(rows))


def rank(m: RigidityMatrix) -> int:
    return exact_rank(m.rows) if m.rows else 0


def float_rank(m: RigidityMatrix) -> int:
    """SVD rank with relative threshold 1e-9; a speed cross-check, never a verdict."""
    return numeric_rank(m.rows)


def stress_basis(m: RigidityMatrix) -> StressBasis:
    if not m.rows:
        return StressBasis(m.edges, ())
    vecs = left_nullspace(m.rows, m.shape[1])
    return StressBasis(m.edges, tuple(tuple(v) for v in vecs))


def motions_basis(g: Graph, emb: Embedding) -> list[dict[int, Vector]]:
    m = rigidity_matrix(g, emb)
    d = emb.d
    vecs = nullspace(m.rows, m.shape[1])
    return [{v: tuple(x[i * d:(i + 1) * d]) for i, v in enumerate(g.vertices)} for x in vecs]


def is_stress(g: Graph, emb: Embedding, weights: Mapping[Edge, Fraction]) -> bool:
    """Equilibrium at every vertex: sum of w_uv (p(v) - p(u)) over neighbours u is 0."""
    total = {v: [Fraction(0)] * emb.d for v in g.vertices}
    for u, v in g.edges:
        w = weights.get((u, v), Fraction(0))
        if not w:
            continue
        diff = sub(emb[v], emb[u])
        for k in range(emb.d):
            total[v][k] += w * diff[k]
            total[u][k] -= w * diff[k]
    return all(not any(t) for t in total.values())


def is_motion(g: Graph, emb: Embedding, motion: Mapping[int, Vector]) -> bool:
    return all(
        sum(((a - b) * (x - y) for a, b, x, y in zip(emb[u], emb[v], motion[u], motion[v])), Fraction(0)) == 0
        for u, v in g.edges
    )


def spans_space(g: Graph, emb: Embedding) -> bool:
    return affine_rank([emb[v] for v in g.vertices]) == emb.d


def is_infinitesimally_rigid(g: Graph, emb: Embedding) -> bool:
    """rank = d f0 - C(d+1, 2) for a framework that affinely spans R^d."""
    if not spans_space(g, emb):
        raise GeometryError("framework lies in a hyperplane")
    d = emb.d
    return rank(rigidity_matrix(g, emb)) == d * len(g.vertices) - comb(d + 1, 2)


def g2_framework(g: Graph, d: int) -> int:
    return len(g.edges) - d * len(g.vertices) + comb(d + 1, 2)


def _edge_partner(edges: tuple[Edge, ...], alpha: Involution) -> list[int]:
    index = {e: i for i, e in enumerate(edges)}
    partner = []
    for e in edges:
        img = tuple(sorted((alpha.pairing.get(e[0], -1), alpha.pairing.get(e[1], -1))))
        if img not in index:
            raise GeometryError(f"the involution maps edge {e} to a non-edge")
        partner.append(index[img])
    return partner


def symmetric_stress_basis(b: StressBasis, alpha: Involution) -> list[tuple[Fraction, ...]]:
    """Basis of the stresses with equal weights on antipodal edges."""
    partner = _edge_partner(b.edges, alpha)
    if not b.vectors:
        return []
    constraints = [
        [vec[i] - vec[j] for vec in b.vectors]
        for i, j in enumerate(partner)
        if i < j
    ]
    coeffs = nullspace(constraints, b.dim) if constraints else [
        [Fraction(int(i == k)) for i in range(b.dim)] for k in range(b.dim)
    ]
    return [
        tuple(sum((c * vec[e] for c, vec in zip(co, b.vectors)), Fraction(0)) for e in range(len(b.edges)))
        for co in coeffs
    ]


def symmetric_stress_subspace(b: StressBasis, alpha: Involution) -> tuple[int, bool]:
    """(dim of the symmetric stresses, whether every stress is symmetric)."""
    dim_sym = len(symmetric_stress_basis(b, alpha))
    return dim_sym, dim_sym == b.dim


def symmetrize(stress: StressVector, alpha: Involution) -> StressVector:
    out = {}
    for e, w in stress.weights.items():
        img = tuple(sorted((alpha(e[0]), alpha(e[1]))))
        out[e] = (w + stress[img]) / 2
    return StressVector(out)


def symmetric_stress_bound(g: Graph, d: int) -> Fraction:
    """Lower bound f1/2 - d f0/2 + C(d, 2) on the symmetric stress dimension."""
    return Fraction(len(g.edges), 2) - Fraction(d * len(g.vertices), 2) + comb(d, 2)


def symm_stress_lower_bound_check(g: Graph, emb: Embedding, alpha: Involution) -> bool:
    b = stress_basis(rigidity_matrix(g, emb))
    dim_sym, _ = symmetric_stress_subspace(b, alpha)
    return dim_sym >= symmetric_stress_bound(g, emb.d)


def stress_through_edge(g: Graph, emb: Embedding, subgraph: Graph, e: Edge) -> StressVector | None:
    """A stress on ``subgraph`` + e that is non-zero on e, if the e-row is dependent.

    The e-row goes last; it is dependent on the other rows exactly when its
    column of the transposed matrix is a free column, and then the kernel
    vector of that column has weight 1 on e.
    """
    e = tuple(sorted(e))  # type: ignore[assignment]
    if e in subgraph.edges:
        raise ValueError(f"edge {e} already belongs to the subgraph")
    if not set(e) <= set(subgraph.vertices):
        raise ValueError(f"edge {e} has an endpoint outside the subgraph")
    edges = subgraph.edges + (e,)
    m = rigidity_matrix(Graph(subgraph.vertices, edges), emb)
    kernel = left_nullspace(m.rows, m.shape[1])
    for vec in kernel:
        if vec[-1]:
            return StressVector({edge: w for edge, w in zip(edges, vec) if w})
    return None


def framework_graph(delta: SimplicialComplex) -> Graph:
    return graph(delta)


def union_graph(*graphs: Graph) -> Graph:
    return make_graph(
        {v for g in graphs for v in g.vertices},
        {e for g in graphs for e in g.edges},
    )


def same_stress_space(a: StressBasis, b: StressBasis) -> bool:
    """Equal spans after padding both bases with zeros on the union edge set."""
    edges = sorted(set(a.edges) | set(b.edges))

    def pad(basis: StressBasis) -> list[list[Fraction]]:
        pos = {e: i for i, e in enumerate(basis.edges)}
        return [[v[pos[e]] if e in pos else Fraction(0) for e in edges] for v in basis.vectors]

    return same_span(pad(a), pad(b))
