import random
from fractions import Fraction

import pytest

from lgapery import (
    FacetFrame,
    GeometryError,
    UniPoly,
    catalog_entries,
    edge_polynomial,
    edges,
    facet_frame,
    facet_polynomial,
    facets,
    has_only_pm1_roots,
    is_reflexive,
    newton_polytope,
    parse,
    temperedness_check,
)
from lgapery.polytope import hull_of_points, interior_lattice_points
from lgapery.linalg import dot

TETRA = parse("x + y + z + 1/(x*y*z)")


def tetra_polytope():
    return newton_polytope(TETRA)


class TestNewtonPolytope:
    def test_tetrahedron_vertices(self):
        poly = tetra_polytope()
        assert set(poly.vertices) == {(1, 0, 0), (0, 1, 0), (0, 0, 1),
                                      (-1, -1, -1)}

    def test_single_monomial_is_a_point(self):
        poly = newton_polytope(parse("x"))
        assert poly.vertices == ((1, 0, 0),)
        assert poly.affine_dimension == 0

    def test_interior_points_are_dropped(self):
        p = parse("x + y + z + 1/(x*y*z) + 7")
        assert set(newton_polytope(p).vertices) == set(tetra_polytope().vertices)

    def test_zero_polynomial_rejected(self):
        with pytest.raises(GeometryError):
            newton_polytope(parse("0"))

    def test_planar_support(self):
        poly = newton_polytope(parse("x + y + 1/(x*y) + 2"))
        assert poly.affine_dimension == 2
        assert set(poly.vertices) == {(1, 0, 0), (0, 1, 0), (-1, -1, 0)}

    def test_collinear_support(self):
        poly = newton_polytope(parse("x + 3*x^2 + x^3"))
        assert poly.vertices == ((1, 0, 0), (3, 0, 0))

    def test_catalog_polytopes_are_reflexive_with_origin_interior(self):
        for entry in catalog_entries():
            poly = newton_polytope(entry.phi)
            assert poly.affine_dimension == 3
            assert is_reflexive(poly)
            assert interior_lattice_points(poly) == [(0, 0, 0)]


class TestFacetsAndEdges:
    def test_tetrahedron_counts(self):
        poly = tetra_polytope()
        fs = facets(poly)
        es = edges(poly)
        assert len(fs) == 4
        assert len(es) == 6
        assert all(f.offset == 1 for f in fs)

    def test_facet_normal_separates_off_facet_vertex(self):
        poly = tetra_polytope()
        f = next(f for f in facets(poly)
                 if set(f.vertices) == {(1, 0, 0), (0, 1, 0), (-1, -1, -1)})
        # The remaining vertex sits strictly on the inner side.
        assert dot(f.normal, (0, 0, 1)) > -f.offset
        assert all(dot(f.normal, v) == -f.offset for v in f.vertices)

    def test_cube_counts_and_lattice_lengths(self):
        cube = hull_of_points(
            [(x, y, z) for x in (-1, 1) for y in (-1, 1) for z in (-1, 1)], 3)
        fs = facets(cube)
        es = edges(cube)
        assert len(fs) == 6
        assert sorted(f.normal for f in fs) == sorted(
            [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)])
        assert all(f.offset == 1 for f in fs)
        assert len(es) == 12
        assert all(e.lattice_length == 2 for e in es)

    def test_edge_direction_and_points(self):
        poly = tetra_polytope()
        e = next(e for e in edges(poly)
                 if set(e.endpoints) == {(1, 0, 0), (0, 1, 0)})
        assert e.lattice_points == ((0, 1, 0), (1, 0, 0))
        assert e.direction == (1, -1, 0)

    def test_euler_relation_on_catalog(self):
        for entry in catalog_entries():
            poly = newton_polytope(entry.phi)
            assert len(poly.vertices) - len(edges(poly)) + len(facets(poly)) == 2

    def test_every_vertex_on_at_least_three_facets(self):
        for entry in catalog_entries():
            poly = newton_polytope(entry.phi)
            fs = facets(poly)
            for v in poly.vertices:
                assert sum(1 for f in fs if v in f.vertices) >= 3

    def test_degenerate_input_rejected(self):
        segment = hull_of_points([(0, 0, 0), (1, 0, 0)], 3)
        with pytest.raises(GeometryError):
            facets(segment)
        with pytest.raises(GeometryError):
            edges(segment)


class TestReflexivity:
    def test_tetrahedron_reflexive(self):
        assert is_reflexive(tetra_polytope())

    def test_dilated_simplex_not_reflexive(self):
        dil = hull_of_points([(2, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1)], 3)
        assert not is_reflexive(dil)

    def test_reflexive_means_offset_one_everywhere(self):
        for entry in catalog_entries():
            poly = newton_polytope(entry.phi)
            if is_reflexive(poly):
                for f in facets(poly):
                    assert f.offset == 1
                    assert all(dot(f.normal, q) == -1 for q in f.lattice_points)


def explicit_frame():
    return FacetFrame(origin=(-1, -1, -1), m1=(2, 1, 1), m2=(1, 2, 1),
                      m3=(-1, 0, 0))


class TestFacetFrames:
    def facet(self):
        poly = tetra_polytope()
        return poly, next(f for f in facets(poly)
                          if set(f.vertices) == {(1, 0, 0), (0, 1, 0),
                                                 (-1, -1, -1)})

    def test_canonical_frame_reproduces_worked_coordinates(self):
        poly, f = self.facet()
        frame = facet_frame(poly, f, origin_choice=(-1, -1, -1))
        assert frame.m1 == (2, 1, 1)
        assert frame.m2 == (1, 2, 1)
        assert dot(f.normal, frame.m3) == 1

    def test_frame_invariants(self):
        from lgapery.linalg import det_int
        for entry in catalog_entries():
            poly = newton_polytope(entry.phi)
            for f in facets(poly):
                frame = facet_frame(poly, f)
                assert dot(f.normal, frame.m1) == 0
                assert dot(f.normal, frame.m2) == 0
                assert dot(f.normal, frame.m3) == 1
                assert abs(det_int([frame.m1, frame.m2, frame.m3])) == 1

    def test_determinism(self):
        poly, f = self.facet()
        assert facet_frame(poly, f) == facet_frame(poly, f)

    def test_origin_off_facet_rejected(self):
        poly, f = self.facet()
        with pytest.raises(GeometryError):
            facet_frame(poly, f, origin_choice=(0, 0, 1))

    def test_two_origins_differ_by_unimodular_affine_map(self):
        from lgapery.linalg import det_int, invert_fraction_matrix
        poly, f = self.facet()
        fr1 = facet_frame(poly, f, origin_choice=(-1, -1, -1))
        fr2 = facet_frame(poly, f, origin_choice=(1, 0, 0))
        m1 = [fr1.m1, fr1.m2, fr1.m3]
        m2 = [fr2.m1, fr2.m2, fr2.m3]
        inv = invert_fraction_matrix(m2)
        # Transition matrix m1 * m2^{-1} must be integral and unimodular.
        trans = [[sum(Fraction(m1[i][k]) * inv[k][j] for k in range(3))
                  for j in range(3)] for i in range(3)]
        assert all(x.denominator == 1 for row in trans for x in row)
        assert abs(det_int([[int(x) for x in row] for row in trans])) == 1


class TestFacetPolynomials:
    def facet(self):
        poly = tetra_polytope()
        return poly, next(f for f in facets(poly)
                          if set(f.vertices) == {(1, 0, 0), (0, 1, 0),
                                                 (-1, -1, -1)})

    def test_worked_facet_polynomial(self):
        _poly, f = self.facet()
        fp = facet_polynomial(TETRA, f, explicit_frame())
        assert fp.terms == {(0, 0): 1, (1, 0): 1, (0, 1): 1}

    def test_canonical_frame_gives_same_polynomial(self):
        poly, f = self.facet()
        frame = facet_frame(poly, f, origin_choice=(-1, -1, -1))
        fp = facet_polynomial(TETRA, f, frame)
        assert fp.terms == {(0, 0): 1, (1, 0): 1, (0, 1): 1}

    def test_single_support_point_gives_single_term(self):
        poly, f = self.facet()
        frame = facet_frame(poly, f, origin_choice=(1, 0, 0))
        fp = facet_polynomial(parse("x"), f, frame)
        assert fp.num_terms() == 1
        assert fp.constant_term() == 1  # origin placed on the support point

    def test_coefficient_multiset_is_frame_invariant(self):
        poly, f = self.facet()
        fr1 = facet_frame(poly, f, origin_choice=(-1, -1, -1))
        fr2 = facet_frame(poly, f, origin_choice=(0, 1, 0))
        p1 = facet_polynomial(TETRA, f, fr1)
        p2 = facet_polynomial(TETRA, f, fr2)
        assert sorted(p1.terms.values()) == sorted(p2.terms.values())

    def test_frame_facet_mismatch_rejected(self):
        poly = tetra_polytope()
        fs = facets(poly)
        frame = facet_frame(poly, fs[0])
        with pytest.raises(GeometryError):
            facet_polynomial(TETRA, fs[1], frame)

    def test_nonnegative_exponents_when_origin_is_support_vertex(self):
        for entry in catalog_entries():
            poly = newton_polytope(entry.phi)
            for f in facets(poly):
                frame = facet_frame(poly, f)
                fp = facet_polynomial(entry.phi, f, frame)
                assert all(min(e) >= 0 for e in fp.support())
                assert fp.constant_term() != 0


class TestEdgePolynomials:
    def test_tetra_edge(self):
        poly = tetra_polytope()
        e = next(e for e in edges(poly)
                 if set(e.endpoints) == {(1, 0, 0), (0, 1, 0)})
        q = edge_polynomial(TETRA, e)
        assert q.coeffs == (Fraction(1), Fraction(1))

    def test_support_at_one_endpoint_gives_monomial(self):
        poly = tetra_polytope()
        e = next(e for e in edges(poly)
                 if set(e.endpoints) == {(1, 0, 0), (0, 1, 0)})
        q = edge_polynomial(parse("x"), e)
        assert len([c for c in q.coeffs if c]) == 1

    def test_reversal_symmetry(self):
        poly = tetra_polytope()
        for e in edges(poly):
            q = edge_polynomial(TETRA, e)
            rev = UniPoly(tuple(reversed(q.coeffs)))
            assert rev == q.reversed_coeffs()

    def test_v16_edges_factor_into_u_plus_one(self):
        entry = next(e for e in catalog_entries() if e.name == "V16")
        poly = newton_polytope(entry.phi)
        for e in edges(poly):
            q = edge_polynomial(entry.phi, e)
            work = q.content_normalized()
            # Strip (u+1)^k completely; nothing else may remain.
            while work.degree >= 1 and work(Fraction(-1)) == 0:
                work = work.exact_div(UniPoly((1, 1)))
            assert work.degree == 0


class TestPm1Roots:
    def test_simple_cases(self):
        assert has_only_pm1_roots(UniPoly((1, 1)))          # u + 1
        assert has_only_pm1_roots(UniPoly((-1, 0, 1)))      # u^2 - 1
        assert not has_only_pm1_roots(UniPoly((1, 1, 1)))   # u^2 + u + 1

    def test_pure_power_of_u(self):
        assert has_only_pm1_roots(UniPoly((0, 0, 3)))       # 3u^2

    def test_zero_polynomial_rejected(self):
        with pytest.raises(ValueError):
            has_only_pm1_roots(UniPoly(()))

    def test_multiplicative(self):
        rng = random.Random(12)
        pool = [UniPoly((1, 1)), UniPoly((-1, 1)), UniPoly((0, 1)),
                UniPoly((1, 1, 1)), UniPoly((3, 1)), UniPoly((2,))]
        for _ in range(60):
            q = pool[rng.randrange(len(pool))]
            r = pool[rng.randrange(len(pool))]
            assert has_only_pm1_roots(q * r) == (
                has_only_pm1_roots(q) and has_only_pm1_roots(r))


class TestTemperedness:
    def test_catalog_all_tempered(self):
        for entry in catalog_entries():
            report = temperedness_check(entry.phi)
            assert report.passed, entry.name
            assert report.reflexive
            assert report.failures == []

    def test_tetrahedron_tempered(self):
        report = temperedness_check(TETRA)
        assert report.passed and report.reflexive

    def test_perturbed_polynomial_fails_with_witness(self):
        bad = parse("x + y + z + 1/(x*y*z) + 3*x/y")
        report = temperedness_check(bad)
        assert not report.passed
        assert report.failures
        witness_edge, witness_poly = report.failures[0]
        assert not has_only_pm1_roots(witness_poly)
        assert (1, -1, 0) in witness_edge.endpoints
        # The defect is also reported through the reflexivity flag.
        assert not report.reflexive

    def test_report_serialization_shape(self):
        report = temperedness_check(TETRA)
        data = report.to_json_dict()
        assert data["tempered"] is True
        assert data["reflexive"] is True
        assert len(data["facets"]) == 4
        assert len(data["edges"]) == 6
        assert data["failures"] == []
        assert data["polytope"]["vertices"]

    def test_degenerate_polynomial_rejected(self):
        with pytest.raises(GeometryError):
            temperedness_check(parse("x + 1/x"))
