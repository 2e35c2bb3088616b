import pytest
from hypothesis import given
from hypothesis import strategies as st

from cspoly.complex import ComplexError, from_facets, link
from cspoly.constructions import cross_polytope_boundary, simplex_boundary, stack, symmetric_stack
from cspoly.enumerative import f_vector
from cspoly.symmetry import (
    CsValidationError,
    Involution,
    antipodal_pairs_in,
    antipode,
    common_link_vertices,
    validate_cs,
)
from strategies import cs_spheres


def face_orbits_have_size_two(c) -> bool:
    faces = c.complex.face_set()
    return all(c.alpha.image(f) in faces and c.alpha.image(f) != f for f in faces if f)


class TestValidate:
    @pytest.mark.parametrize("d", range(1, 6))
    def test_cross_polytope_valid(self, d):
        c = cross_polytope_boundary(d)
        assert validate_cs(c.complex, c.alpha) == c

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_simplex_never_valid(self, n):
        delta = simplex_boundary(n)
        verts = list(delta.vertices)
        pairs = [verts[i:i + 2] for i in range(0, len(verts) - 1, 2)]
        with pytest.raises(CsValidationError):
            validate_cs(delta, Involution.from_pairs(pairs))

    def test_odd_vertex_count_names_the_unpaired_vertex(self):
        with pytest.raises(CsValidationError) as info:
            validate_cs(simplex_boundary(2), Involution.from_pairs([[0, 1]]))
        assert info.value.witness == (2,)

    def test_fixed_face_reported(self):
        # pairing 0-1 and 2-3 on the tetrahedron fixes the edge {0, 1}
        with pytest.raises(CsValidationError, match="fixed"):
            validate_cs(simplex_boundary(3), Involution.from_pairs([[0, 1], [2, 3]]))

    def test_single_stacking_breaks_symmetry(self):
        c = cross_polytope_boundary(4)
        out = stack(c.complex, c.complex.facets[0])
        with pytest.raises(CsValidationError) as info:
            validate_cs(out, c.alpha)
        assert info.value.witness == (8,)

    def test_fixed_point_rejected(self):
        with pytest.raises(CsValidationError):
            validate_cs(cross_polytope_boundary(1).complex, Involution({0: 0, 1: 1}))

    def test_non_involution_rejected(self):
        with pytest.raises(CsValidationError):
            validate_cs(cross_polytope_boundary(2).complex, Involution({0: 1, 1: 2, 2: 3, 3: 0}))

    def test_image_not_a_face(self):
        hexagon = from_facets([[i, (i + 1) % 6] for i in range(6)])
        with pytest.raises(CsValidationError, match="not a face") as info:
            validate_cs(hexagon, Involution.from_pairs([[0, 2], [1, 4], [3, 5]]))
        assert info.value.witness == (0, 1)

    def test_double_pairing_rejected(self):
        with pytest.raises(CsValidationError):
            Involution.from_pairs([[0, 1], [0, 2]])

    @given(cs_spheres())
    def test_acceptance_matches_orbit_scan(self, sphere):
        _, c = sphere
        assert face_orbits_have_size_two(c)

    @given(cs_spheres())
    def test_face_numbers_even(self, sphere):
        _, c = sphere
        assert all(f % 2 == 0 for f in f_vector(c.complex)[1:])


class TestAntipode:
    def test_octahedron_edge(self):
        c = cross_polytope_boundary(3)
        assert antipode(c, (0, 1)) == (3, 4)

    def test_empty_face(self):
        assert antipode(cross_polytope_boundary(3), ()) == ()

    @given(cs_spheres(), st.data())
    def test_involutive(self, sphere, data):
        _, c = sphere
        tau = data.draw(st.sampled_from(c.complex.all_faces()))
        assert antipode(c, antipode(c, tau)) == tau

    def test_unknown_vertex(self):
        with pytest.raises(ComplexError):
            antipode(cross_polytope_boundary(3), (42,))


class TestCommonLinkVertices:
    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_cross_polytope(self, d):
        c = cross_polytope_boundary(d)
        for u in c.complex.vertices:
            assert common_link_vertices(c, u) == set(c.complex.vertices) - {u, c.alpha(u)}

    def test_untouched_vertex_after_symmetric_stack(self):
        c = cross_polytope_boundary(4)
        tau = (0, 1, 2, 3)
        out = symmetric_stack(c, tau)
        # apex v+ joins link(u) for u in tau, but never link(-u)
        for u in c.complex.vertices:
            assert common_link_vertices(c, u) == common_link_vertices(out, u)
        assert common_link_vertices(out, 8) == set()

    @given(cs_spheres())
    def test_symmetric_in_u(self, sphere):
        _, c = sphere
        for u in c.complex.vertices:
            assert common_link_vertices(c, u) == common_link_vertices(c, c.alpha(u))


class TestAntipodalPairs:
    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_whole_vertex_set(self, d):
        c = cross_polytope_boundary(d)
        assert antipodal_pairs_in(c, c.complex.vertices) == d

    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_facet(self, d):
        c = cross_polytope_boundary(d)
        assert antipodal_pairs_in(c, c.complex.facets[3 % len(c.complex.facets)]) == 0

    @pytest.mark.parametrize("d", [3, 4, 5])
    def test_links_of_faces(self, d):
        c = cross_polytope_boundary(d)
        for size in range(0, d):
            for tau in c.complex.faces(size - 1)[:5]:
                k = d - size
                assert antipodal_pairs_in(c, link(c.complex, tau).vertices) == k
