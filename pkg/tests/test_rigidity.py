from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cspoly.complex import graph, make_graph, star
from cspoly.constructions import random_script
from cspoly.geometry import Embedding, GeometryError, realize_cross_polytope, realize_script, realize_simplex, vec
from cspoly.rigidity import (
    float_rank,
    g2_framework,
    is_infinitesimally_rigid,
    is_motion,
    is_stress,
    motions_basis,
    rank,
    rigidity_matrix,
    same_stress_space,
    stress_basis,
    stress_through_edge,
    symm_stress_lower_bound_check,
    symmetric_stress_basis,
    symmetric_stress_bound,
    symmetric_stress_subspace,
    symmetrize,
    union_graph,
)
from oracles import equilibrium, sympy_rank, sympy_rigidity_rows, sympy_stress_dim


def framework(p):
    return graph(p.complex), p.embedding


class TestMatrix:
    def test_single_edge_on_a_line(self):
        g = make_graph([0, 1], [(0, 1)])
        emb = Embedding(1, {0: vec([0]), 1: vec([1])})
        assert rigidity_matrix(g, emb).rows == ((-1, 1),)

    def test_triangle_in_plane(self):
        g = make_graph([0, 1, 2], [(0, 1), (0, 2), (1, 2)])
        emb = Embedding(2, {0: vec([0, 0]), 1: vec([1, 0]), 2: vec([0, 1])})
        assert rank(rigidity_matrix(g, emb)) == 3
        assert is_infinitesimally_rigid(g, emb)

    def test_cross_polytope_4_shape_and_rank(self):
        g, emb = framework(realize_cross_polytope(4))
        m = rigidity_matrix(g, emb)
        assert m.shape == (24, 32)
        assert rank(m) == 22 == sympy_rank(m.rows)

    def test_octahedron_rank_against_definition(self):
        g, emb = framework(realize_cross_polytope(3))
        rows = sympy_rigidity_rows(g.edges, emb.coords, 3)
        assert rank(rigidity_matrix(g, emb)) == sympy_rank(rows) == 12

    def test_missing_coordinates(self):
        g = make_graph([0, 1], [(0, 1)])
        with pytest.raises(GeometryError):
            rigidity_matrix(g, Embedding(2, {0: vec([0, 0])}))

    def test_float_rank_agrees(self):
        g, emb = framework(realize_cross_polytope(5, 1))
        m = rigidity_matrix(g, emb)
        assert float_rank(m) == rank(m)


class TestStressDimension:
    @pytest.mark.parametrize("d", [3, 4, 5])
    def test_simplex_boundary_has_none(self, d):
        g, emb = framework(realize_simplex(d))
        assert stress_basis(rigidity_matrix(g, emb)).dim == 0

    @pytest.mark.parametrize("d", [3, 4, 5, 6])
    def test_cross_polytope(self, d):
        g, emb = framework(realize_cross_polytope(d))
        dim = stress_basis(rigidity_matrix(g, emb)).dim
        assert dim == comb(d, 2) - d == g2_framework(g, d)
        if d <= 5:
            assert dim == sympy_stress_dim(g.edges, emb.coords, d)

    def test_g2_framework_values(self):
        assert g2_framework(graph(realize_cross_polytope(4).complex), 4) == 2
        assert g2_framework(graph(realize_simplex(4).complex), 4) == 0
        assert g2_framework(make_graph([0, 1], [(0, 1)]), 1) == 0


class TestRigidity:
    @pytest.mark.parametrize("d", [3, 4, 5])
    def test_cross_polytope_rigid(self, d):
        assert is_infinitesimally_rigid(*framework(realize_cross_polytope(d, 2)))

    def test_path_is_flexible(self):
        g = make_graph([0, 1, 2], [(0, 1), (1, 2)])
        emb = Embedding(2, {0: vec([0, 0]), 1: vec([1, 0]), 2: vec([1, 1])})
        assert not is_infinitesimally_rigid(g, emb)

    def test_collinear_framework_rejected(self):
        g = make_graph([0, 1, 2], [(0, 1), (1, 2)])
        emb = Embedding(2, {0: vec([0, 0]), 1: vec([1, 0]), 2: vec([2, 0])})
        with pytest.raises(GeometryError):
            is_infinitesimally_rigid(g, emb)

    def test_gluing_two_rigid_stars(self):
        p = realize_cross_polytope(4, 1)
        a, b = graph(star(p.complex, (0,))), graph(star(p.complex, (1,)))
        assert is_infinitesimally_rigid(a, p.embedding)
        assert is_infinitesimally_rigid(b, p.embedding)
        shared = set(a.vertices) & set(b.vertices)
        assert len(shared) >= 4
        assert is_infinitesimally_rigid(union_graph(a, b), p.embedding)


class TestMotions:
    def test_octahedron_has_only_trivial_motions(self):
        g, emb = framework(realize_cross_polytope(3))
        motions = motions_basis(g, emb)
        assert len(motions) == 6
        assert all(is_motion(g, emb, m) for m in motions)

    @pytest.mark.parametrize("d", [1, 2, 3])
    def test_single_point(self, d):
        emb = Embedding(d, {0: vec([1] * d)})
        assert len(motions_basis(make_graph([0], []), emb)) == d

    def test_bar_in_plane(self):
        g = make_graph([0, 1], [(0, 1)])
        emb = Embedding(2, {0: vec([0, 0]), 1: vec([1, 2])})
        assert len(motions_basis(g, emb)) == 3

    def test_non_motion_detected(self):
        g = make_graph([0, 1], [(0, 1)])
        emb = Embedding(1, {0: vec([0]), 1: vec([1])})
        assert not is_motion(g, emb, {0: vec([0]), 1: vec([1])})


class TestSymmetricStresses:
    @pytest.mark.parametrize("d", [3, 4, 5])
    def test_cross_polytope_all_symmetric(self, d):
        p = realize_cross_polytope(d, 1)
        g, emb = framework(p)
        b = stress_basis(rigidity_matrix(g, emb))
        dim_sym, everything = symmetric_stress_subspace(b, p.alpha)
        assert everything and dim_sym == comb(d, 2) - d
        assert symmetric_stress_bound(g, d) == comb(d, 2) - d

    def test_symmetric_basis_vectors_are_invariant(self):
        p = realize_script(random_script("cross", 4, 2, 5), 5)
        g, emb = framework(p)
        b = stress_basis(rigidity_matrix(g, emb))
        index = {e: i for i, e in enumerate(b.edges)}
        for vec_ in symmetric_stress_basis(b, p.alpha):
            for i, (u, v) in enumerate(b.edges):
                img = tuple(sorted((p.alpha(u), p.alpha(v))))
                assert vec_[i] == vec_[index[img]]
            assert is_stress(g, emb, dict(zip(b.edges, vec_)))

    def test_involution_must_preserve_edges(self):
        p = realize_cross_polytope(3)
        g, emb = framework(p)
        b = stress_basis(rigidity_matrix(g, emb))
        bad = type(p.alpha).from_pairs([[0, 1], [2, 3], [4, 5]])
        with pytest.raises(GeometryError):
            symmetric_stress_basis(b, bad)

    @settings(max_examples=8)
    @given(st.integers(3, 5), st.integers(0, 3), st.integers(0, 500))
    def test_lower_bound_on_symmetric_stackings(self, d, k, seed):
        p = realize_script(random_script("cross", d, k, seed), seed)
        g, emb = framework(p)
        assert symm_stress_lower_bound_check(g, emb, p.alpha)
        b = stress_basis(rigidity_matrix(g, emb))
        assert symmetric_stress_subspace(b, p.alpha)[0] == comb(d, 2) - d


class TestStressThroughEdge:
    def test_cross_polytope_edge_against_opposite_stars(self):
        p = realize_cross_polytope(4, 0)
        g, emb = framework(p)
        u, v = 0, 1
        sub = union_graph(graph(star(p.complex, (p.alpha(u),))), graph(star(p.complex, (p.alpha(v),))))
        assert (u, v) not in sub.edges
        s = stress_through_edge(g, emb, sub, (u, v))
        assert s is not None and s[(u, v)] != 0
        edges = sub.edges + ((u, v),)
        assert equilibrium(edges, emb.coords, dict(s.weights))

    def test_independent_edge_gives_none(self):
        p = realize_simplex(4)
        g, emb = framework(p)
        sub = make_graph(g.vertices, [e for e in g.edges if e != (0, 1)])
        assert stress_through_edge(g, emb, sub, (0, 1)) is None

    def test_quadrilateral_diagonal_in_plane(self):
        # K4 in the plane carries a stress through every edge
        emb = Embedding(2, {0: vec([0, 0]), 1: vec([3, 0]), 2: vec([1, 2]), 3: vec([1, 1])})
        sub = make_graph([0, 1, 2, 3], [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
        s = stress_through_edge(sub, emb, sub, (2, 3))
        assert s is not None
        assert equilibrium(sub.edges + ((2, 3),), emb.coords, dict(s.weights))

    def test_argument_errors(self):
        p = realize_simplex(3)
        g, emb = framework(p)
        with pytest.raises(ValueError):
            stress_through_edge(g, emb, g, g.edges[0])
        with pytest.raises(ValueError):
            stress_through_edge(g, emb, make_graph([0, 1], [(0, 1)]), (1, 2))


class TestStressSpaces:
    @pytest.mark.parametrize("d", [3, 4])
    def test_two_antipodal_stars_cover_the_graph(self, d):
        p = realize_cross_polytope(d, 3)
        g, emb = framework(p)
        u = 0
        sub = union_graph(graph(star(p.complex, (u,))), graph(star(p.complex, (p.alpha(u),))))
        assert sub == g
        full = stress_basis(rigidity_matrix(g, emb))
        assert same_stress_space(stress_basis(rigidity_matrix(sub, emb)), full)

    def test_sub_framework_stresses_embed(self):
        p = realize_cross_polytope(4, 3)
        g, emb = framework(p)
        full = stress_basis(rigidity_matrix(g, emb))
        assert not same_stress_space(stress_basis(rigidity_matrix(make_graph(g.vertices, g.edges[:5]), emb)), full)

    @settings(max_examples=8)
    @given(st.sampled_from(["cross", "simplex"]), st.integers(3, 5), st.integers(0, 3), st.integers(0, 500))
    def test_rank_nullity_and_equilibrium(self, kind, d, k, seed):
        p = realize_script(random_script(kind, d, k, seed), seed)
        g, emb = framework(p)
        m = rigidity_matrix(g, emb)
        b = stress_basis(m)
        r = rank(m)
        assert r + b.dim == len(g.edges)
        assert r + len(motions_basis(g, emb)) == d * len(g.vertices)
        assert r == d * len(g.vertices) - comb(d + 1, 2)
        assert b.dim == g2_framework(g, d)
        for s in b.stresses():
            assert equilibrium(g.edges, emb.coords, dict(s.weights))
            if p.alpha is not None:
                assert is_stress(g, emb, symmetrize(s, p.alpha).weights)

    def test_non_stress_rejected(self):
        p = realize_cross_polytope(3)
        g, emb = framework(p)
        assert not is_stress(g, emb, {g.edges[0]: Fraction(1)})
