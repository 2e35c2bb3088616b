from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cspoly.complex import (
    EMPTY,
    ComplexError,
    boundary_of,
    canonical_face,
    components_excluding,
    cone,
    from_facets,
    graph,
    induced,
    is_prime,
    is_pseudomanifold,
    join,
    link,
    looks_like_sphere,
    missing_faces,
    missing_facets,
    reduced_euler_characteristic,
    relabel,
    simplex,
    skeleton,
    star,
)
from cspoly.constructions import connected_sum, cross_polytope_boundary, simplex_boundary, symmetric_stack
from oracles import brute_f_vector, brute_faces, brute_link, brute_missing_faces
from strategies import cs_spheres, small_facet_lists, stacked_spheres


class TestFromFacets:
    def test_triangle_boundary(self):
        delta = from_facets([[0, 1], [1, 2], [0, 2]])
        assert len(delta.facets) == 3
        assert delta.dim == 1

    def test_dominated_face_dropped(self):
        assert from_facets([[0, 1, 2], [0, 1]]).facets == ((0, 1, 2),)

    def test_duplicate_vertex_rejected(self):
        with pytest.raises(ComplexError):
            from_facets([[0, 1, 1]])

    def test_negative_label_rejected(self):
        with pytest.raises(ComplexError):
            canonical_face([-1, 2])

    def test_empty_input_is_the_empty_complex(self):
        assert from_facets([]) == EMPTY
        assert EMPTY.dim == -1
        assert EMPTY.faces(-1) == [()]

    def test_facet_order_is_canonical(self):
        a = from_facets([[2, 1], [0, 2], [1, 0]])
        b = from_facets([[0, 1], [0, 2], [1, 2]])
        assert a == b
        assert a.facets == ((0, 1), (0, 2), (1, 2))


class TestFaces:
    def test_tetrahedron_edges(self):
        assert len(simplex_boundary(3).faces(1)) == 6

    def test_octahedron_triangles(self):
        delta = cross_polytope_boundary(3).complex
        assert len(delta.faces(2)) == 8 == brute_f_vector(delta.facets)[3]

    def test_empty_face(self):
        assert cross_polytope_boundary(4).complex.faces(-1) == [()]

    def test_out_of_range_is_empty(self):
        delta = simplex_boundary(3)
        assert delta.faces(7) == []
        assert delta.faces(-3) == []

    @given(small_facet_lists())
    def test_faces_match_subset_closure(self, facets):
        delta = from_facets(facets)
        assert set(delta.all_faces()) == brute_faces(delta.facets)
        for i in range(-1, delta.dim + 1):
            fs = delta.faces(i)
            assert len(fs) == len(set(fs))
            assert fs == sorted(fs)


class TestLinkStar:
    def test_cross_polytope_vertex_link(self):
        c = cross_polytope_boundary(4)
        lk = link(c.complex, (0,))
        smaller = cross_polytope_boundary(3).complex
        mapping = dict(zip(lk.vertices, smaller.vertices))
        assert relabel(lk, mapping) == smaller

    def test_tetrahedron_edge_link(self):
        assert link(simplex_boundary(3), (0, 1)).facets == ((2,), (3,))

    def test_link_of_empty_face(self):
        delta = cross_polytope_boundary(3).complex
        assert link(delta, ()) == delta
        assert star(delta, ()) == delta

    def test_non_face_rejected(self):
        delta = cross_polytope_boundary(3).complex
        with pytest.raises(ComplexError):
            link(delta, (0, 3))
        with pytest.raises(ComplexError):
            star(delta, (0, 3))

    def test_star_of_tetrahedron_vertex(self):
        assert len(star(simplex_boundary(3), (0,)).facets) == 3

    def test_star_of_octahedron_vertex(self):
        assert len(star(cross_polytope_boundary(3).complex, (0,)).facets) == 4

    @given(small_facet_lists(), st.data())
    def test_link_matches_definition(self, facets, data):
        delta = from_facets(facets)
        tau = data.draw(st.sampled_from(delta.all_faces()))
        assert set(link(delta, tau).all_faces()) == brute_link(delta.facets, tau)

    @given(st.one_of(stacked_spheres(), cs_spheres()), st.data())
    def test_star_is_simplex_join_link(self, sphere, data):
        _, delta = sphere
        delta = getattr(delta, "complex", delta)
        tau = data.draw(st.sampled_from(delta.all_faces()))
        assert star(delta, tau) == join(simplex(tau) if tau else EMPTY, link(delta, tau))


class TestJoin:
    def test_cone_over_triangle_boundary(self):
        c = cone(9, boundary_of([0, 1, 2]))
        assert c.facets == ((0, 1, 9), (0, 2, 9), (1, 2, 9))

    def test_empty_complex_is_unit(self):
        delta = simplex_boundary(3)
        assert join(EMPTY, delta) == delta

    def test_suspension_of_zero_sphere(self):
        square = join(from_facets([[0], [1]]), from_facets([[2], [3]]))
        assert square.facets == ((0, 2), (0, 3), (1, 2), (1, 3))
        assert square == relabel(cross_polytope_boundary(2).complex, {1: 2, 2: 1})

    def test_overlap_rejected(self):
        with pytest.raises(ComplexError):
            join(simplex([0, 1]), simplex([1, 2]))

    @given(small_facet_lists(max_vertex=4), small_facet_lists(max_vertex=4))
    def test_join_graph(self, fa, fb):
        a = from_facets(fa)
        b = relabel(from_facets(fb), {v: v + 10 for v in range(5)})
        edges = set(graph(a).edges) | set(graph(b).edges)
        edges |= {(u, v) for u in a.vertices for v in b.vertices}
        assert set(graph(join(a, b)).edges) == edges


class TestMissingFaces:
    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_cross_polytope(self, d):
        delta = cross_polytope_boundary(d).complex
        assert missing_faces(delta, d) == [(i, i + d) for i in range(d)]

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_simplex_boundary(self, n):
        assert missing_faces(simplex_boundary(n), n + 1) == [tuple(range(n + 1))]
        assert missing_faces(simplex_boundary(n), n) == []

    def test_symmetric_stack_creates_missing_facets(self):
        c = cross_polytope_boundary(4)
        tau = (0, 1, 2, 3)
        out = symmetric_stack(c, tau)
        found = missing_faces(out.complex, 4)
        assert tau in found and (4, 5, 6, 7) in found
        assert found == brute_missing_faces(out.complex.facets, 4)

    def test_max_size_guard(self):
        with pytest.raises(ComplexError):
            missing_faces(simplex_boundary(3), 1)

    @given(small_facet_lists())
    def test_against_brute_force(self, facets):
        delta = from_facets(facets)
        faces = delta.face_set()
        got = missing_faces(delta, 5)
        assert got == brute_missing_faces(delta.facets, 5)
        for sigma in got:
            assert sigma not in faces
            assert all(t in faces for t in combinations(sigma, len(sigma) - 1))


class TestPrimality:
    @pytest.mark.parametrize("d", [3, 4, 5])
    def test_cross_polytope_is_prime(self, d):
        assert is_prime(cross_polytope_boundary(d).complex)

    def test_connected_sum_is_not_prime(self):
        a = simplex_boundary(4)
        b = relabel(simplex_boundary(4), {4: 5})
        assert not is_prime(connected_sum(a, (0, 1, 2, 3), b, (0, 1, 2, 3)))

    def test_symmetric_stack_is_not_prime(self):
        c = cross_polytope_boundary(5)
        assert not is_prime(symmetric_stack(c, c.complex.facets[0]).complex)

    def test_simplex_boundary_is_not_prime(self):
        assert not is_prime(simplex_boundary(4))
        assert missing_facets(simplex_boundary(4)) == []

    def test_non_pure_rejected(self):
        with pytest.raises(ComplexError):
            is_prime(from_facets([[0, 1], [2, 3, 4]]))


class TestGraphSkeleton:
    def test_octahedron_graph(self):
        g = graph(cross_polytope_boundary(3).complex)
        assert (len(g.vertices), len(g.edges)) == (6, 12)

    def test_top_skeleton_is_identity(self):
        delta = cross_polytope_boundary(4).complex
        assert skeleton(delta, delta.dim) == delta

    def test_skeleton_keeps_low_faces(self):
        delta = from_facets([[0, 1, 2], [3, 4]])
        assert skeleton(delta, 1).facets == ((0, 1), (0, 2), (1, 2), (3, 4))

    def test_purity(self):
        assert not from_facets([[0, 1], [2, 3, 4]]).is_pure()
        assert simplex_boundary(3).is_pure()

    def test_induced(self):
        delta = cross_polytope_boundary(3).complex
        assert induced(delta, [0, 1, 3]).facets == ((0, 1), (1, 3))


class TestComponents:
    def test_octahedron_minus_antipodal_pair(self):
        assert components_excluding(cross_polytope_boundary(3).complex, {0, 3}) == 1

    def test_four_cycle_minus_opposite_vertices(self):
        square = from_facets([[0, 1], [1, 2], [2, 3], [0, 3]])
        assert components_excluding(square, {0, 2}) == 2

    def test_nothing_removed(self):
        delta = from_facets([[0, 1], [2, 3], [3, 4]])
        assert components_excluding(delta, set()) == 2


class TestSphereChecks:
    @given(st.one_of(stacked_spheres(d_max=6, k_max=3), cs_spheres(d_max=5)))
    def test_euler_relation(self, sphere):
        d, delta = sphere
        delta = getattr(delta, "complex", delta)
        f = brute_f_vector(delta.facets)
        assert sum((-1) ** (j - 1) * f[j] for j in range(len(f))) == (-1) ** (d - 1)
        assert reduced_euler_characteristic(delta) == (-1) ** (d - 1)

    def test_spheres_pass_sanity_checks(self):
        assert looks_like_sphere(cross_polytope_boundary(4).complex)
        assert looks_like_sphere(simplex_boundary(3))

    def test_non_sphere_fails(self):
        two_triangles = from_facets([[0, 1, 2], [0, 1, 3]])
        assert not is_pseudomanifold(two_triangles)
        torus_like = from_facets([[0, 1], [1, 2], [2, 0], [3, 4], [4, 5], [5, 3]])
        assert not looks_like_sphere(torus_like)
