"""Exact lattice geometry of Newton polytopes in ambient dimension 3.

Convex hulls, facets and edges are computed with exact integer predicates
(3x3 determinants), which is robust and fast enough for the vertex counts
that occur here (a few dozen support points). Facet coordinate frames, facet
and edge polynomials, reflexivity and the Minkowski temperedness criterion
(edge polynomials with all roots at +-1) are built on top.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .laurent import Exponent, LaurentPolynomial
from .linalg import (
    cross3,
    det_int,
    dot,
    kernel_basis_of_functional,
    primitive_vector,
    rank_int,
    solve_functional_equals_one,
    solve_row_combination,
)
from .unipoly import UniPoly


class GeometryError(Exception):
    """Raised when a polytope violates an operation's preconditions."""


@dataclass(frozen=True)
class LatticePolytope:
    """Convex hull of lattice points, stored by its extreme points only."""

    dimension: int
    vertices: tuple[Exponent, ...]

    @property
    def affine_dimension(self) -> int:
        if len(self.vertices) <= 1:
            return 0
        v0 = self.vertices[0]
        diffs = [tuple(a - b for a, b in zip(v, v0)) for v in self.vertices[1:]]
        return rank_int(diffs)

    def is_full_dimensional(self) -> bool:
        return self.affine_dimension == self.dimension


@dataclass(frozen=True)
class Facet:
    """Codimension-1 face: <normal, x> >= -offset on the polytope, with
    equality exactly on the facet. The normal is primitive and inner."""

    normal: Exponent
    offset: int
    vertices: tuple[Exponent, ...]
    lattice_points: tuple[Exponent, ...]


@dataclass(frozen=True)
class Edge:
    """Dimension-1 face with its ordered lattice points."""

    endpoints: tuple[Exponent, Exponent]
    direction: Exponent
    lattice_points: tuple[Exponent, ...]

    @property
    def lattice_length(self) -> int:
        return len(self.lattice_points) - 1


@dataclass(frozen=True)
class FacetFrame:
    """Affine lattice frame adapted to a facet.

    m1, m2 span the facet's direction lattice, m3 completes them to a basis
    of Z^3 with <normal, m3> = 1, and origin lies on the facet.
    """

    origin: Exponent
    m1: Exponent
    m2: Exponent
    m3: Exponent


def newton_polytope(p: LaurentPolynomial) -> LatticePolytope:
    """Newton polytope of a nonzero Laurent polynomial."""
    if p.is_zero():
        raise GeometryError("zero polynomial has no Newton polytope")
    return hull_of_points(p.support(), p.dimension)


def hull_of_points(points, dimension: int) -> LatticePolytope:
    pts = sorted(set(tuple(int(x) for x in q) for q in points))
    if len(pts) == 1:
        return LatticePolytope(dimension, (pts[0],))
    v0 = pts[0]
    diffs = [tuple(a - b for a, b in zip(q, v0)) for q in pts[1:]]
    adim = rank_int(diffs)
    if adim == 1:
        direction = primitive_vector(diffs[-1])
        # All points are collinear; the extremes are the min and max along
        # the direction parameter.
        def param(q):
            for d, (a, b) in zip(direction, zip(q, v0)):
                if d:
                    return (a - b) // d
            return 0
        lo = min(pts, key=param)
        hi = max(pts, key=param)
        return LatticePolytope(dimension, tuple(sorted((lo, hi))))
    if dimension != 3:
        raise GeometryError(
            "hulls of affine dimension >= 2 are only supported in ambient dimension 3")
    if adim == 2:
        normal = _plane_normal(pts)
        basis = kernel_basis_of_functional(normal)
        coords = [_plane_coords(q, v0, basis) for q in pts]
        hull2 = _convex_hull_2d(coords)
        verts = []
        for c in hull2:
            verts.append(tuple(v0[i] + c[0] * basis[0][i] + c[1] * basis[1][i]
                               for i in range(3)))
        return LatticePolytope(dimension, tuple(sorted(verts)))
    planes = _supporting_planes(pts)
    verts = _vertices_from_planes(pts, planes)
    return LatticePolytope(dimension, tuple(sorted(verts)))


def _plane_normal(pts) -> Exponent:
    v0 = pts[0]
    for a, b in itertools.combinations(pts[1:], 2):
        n = cross3(tuple(x - y for x, y in zip(a, v0)),
                   tuple(x - y for x, y in zip(b, v0)))
        if any(n):
            return primitive_vector(n)
    raise GeometryError("points are collinear")


def _plane_coords(q, origin, basis) -> tuple[int, int]:
    diff = tuple(a - b for a, b in zip(q, origin))
    coeffs = solve_row_combination(basis, diff)
    if any(c.denominator != 1 for c in coeffs):
        raise GeometryError("point is off the plane lattice")
    return (int(coeffs[0]), int(coeffs[1]))


def _convex_hull_2d(points) -> list[tuple[int, int]]:
    """Monotone chain with exact integer cross products; returns hull
    vertices in counterclockwise order."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list[tuple[int, int]] = []
    for q in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], q) <= 0:
            lower.pop()
        lower.append(q)
    upper: list[tuple[int, int]] = []
    for q in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], q) <= 0:
            upper.pop()
        upper.append(q)
    return lower[:-1] + upper[:-1]


def _supporting_planes(pts) -> dict[tuple[Exponent, int], list[Exponent]]:
    """All supporting planes of a full-dimensional 3D point set, keyed by
    (inner primitive normal, offset) with <n, x> >= -offset on the set."""
    planes: dict[tuple[Exponent, int], list[Exponent]] = {}
    for a, b, c in itertools.combinations(pts, 3):
        n = cross3(tuple(x - y for x, y in zip(b, a)),
                   tuple(x - y for x, y in zip(c, a)))
        if not any(n):
            continue
        n = primitive_vector(n)
        h = dot(n, a)
        vals = [dot(n, q) - h for q in pts]
        if all(v >= 0 for v in vals):
            inner = n
        elif all(v <= 0 for v in vals):
            inner = tuple(-x for x in n)
        else:
            continue
        h = min(dot(inner, q) for q in pts)
        key = (inner, -h)
        if key not in planes:
            planes[key] = [q for q in pts if dot(inner, q) == h]
    return planes


def _vertices_from_planes(pts, planes) -> list[Exponent]:
    verts = []
    for q in pts:
        normals = [n for (n, _off), members in planes.items() if q in members]
        if len(normals) >= 3 and rank_int(normals) == 3:
            verts.append(q)
    return verts


def _require_full_dimensional(poly: LatticePolytope):
    if poly.dimension != 3:
        raise GeometryError("facet enumeration requires ambient dimension 3")
    if poly.affine_dimension != 3:
        raise GeometryError("polytope is not full-dimensional")


def facets(poly: LatticePolytope) -> list[Facet]:
    """All facets, with primitive inner normals and full lattice point sets,
    sorted by (normal, offset)."""
    _require_full_dimensional(poly)
    pts = list(poly.vertices)
    planes = _supporting_planes(pts)
    plane_list = sorted(planes.items())
    out = []
    for (normal, offset), members in plane_list:
        lat = _facet_lattice_points(poly, planes, normal, offset)
        out.append(Facet(normal=normal, offset=offset,
                         vertices=tuple(sorted(members)),
                         lattice_points=lat))
    return out


def _bounding_box(vertices):
    lo = [min(v[i] for v in vertices) for i in range(3)]
    hi = [max(v[i] for v in vertices) for i in range(3)]
    return lo, hi


def _facet_lattice_points(poly, planes, normal, offset) -> tuple[Exponent, ...]:
    facet_verts = [q for q in poly.vertices if dot(normal, q) == -offset]
    lo, hi = _bounding_box(facet_verts)
    ineqs = list(planes.keys())
    out = []
    for x in range(lo[0], hi[0] + 1):
        for y in range(lo[1], hi[1] + 1):
            for z in range(lo[2], hi[2] + 1):
                q = (x, y, z)
                if dot(normal, q) != -offset:
                    continue
                if all(dot(n, q) >= -c for n, c in ineqs):
                    out.append(q)
    return tuple(sorted(out))


def edges(poly: LatticePolytope) -> list[Edge]:
    """All edges with their lattice points, sorted by endpoints.

    A vertex pair spans an edge exactly when at least two distinct facets
    contain both endpoints (in a 3-polytope the intersection of two facets
    is a face of dimension <= 1)."""
    _require_full_dimensional(poly)
    facet_list = facets(poly)
    membership = {f: set(f.vertices) for f in facet_list}
    out = []
    for v, w in itertools.combinations(poly.vertices, 2):
        count = sum(1 for f in facet_list if v in membership[f] and w in membership[f])
        if count >= 2:
            out.append(_make_edge(v, w))
    return sorted(out, key=lambda e: e.endpoints)


def _make_edge(v: Exponent, w: Exponent) -> Edge:
    v, w = sorted((v, w))
    diff = tuple(b - a for a, b in zip(v, w))
    direction = primitive_vector(diff)
    length = next(d // g for d, g in zip(diff, direction) if g)
    points = tuple(tuple(v[i] + t * direction[i] for i in range(3))
                   for t in range(length + 1))
    return Edge(endpoints=(v, w), direction=direction, lattice_points=points)


def is_reflexive(poly: LatticePolytope) -> bool:
    """True iff the origin is the unique interior lattice point and every
    facet sits at lattice distance 1 (offset 1)."""
    _require_full_dimensional(poly)
    facet_list = facets(poly)
    if any(f.offset != 1 for f in facet_list):
        return False
    return interior_lattice_points(poly) == [(0, 0, 0)]


def interior_lattice_points(poly: LatticePolytope) -> list[Exponent]:
    _require_full_dimensional(poly)
    facet_list = facets(poly)
    lo, hi = _bounding_box(poly.vertices)
    out = []
    for x in range(lo[0], hi[0] + 1):
        for y in range(lo[1], hi[1] + 1):
            for z in range(lo[2], hi[2] + 1):
                q = (x, y, z)
                if all(dot(f.normal, q) > -f.offset for f in facet_list):
                    out.append(q)
    return out


def facet_frame(poly: LatticePolytope, facet: Facet,
                origin_choice: Exponent | None = None) -> FacetFrame:
    """Canonical frame for a facet.

    The origin defaults to the lexicographically smallest facet vertex. The
    in-facet basis (m1, m2) comes from the Hermite normal form of the facet's
    direction lattice; when the origin is a vertex of the facet polygon whose
    cone is unimodular, the basis is adapted to the two edge directions at
    that vertex (so the facet polynomial gets nonnegative exponents). m3 is
    the Euclidean-algorithm solution of <normal, m3> = 1.
    """
    if origin_choice is not None:
        origin = tuple(int(x) for x in origin_choice)
        if origin not in facet.lattice_points:
            raise GeometryError(f"origin {origin} is not a lattice point of the facet")
    else:
        origin = min(facet.vertices)
    basis = kernel_basis_of_functional(facet.normal)
    m1, m2 = basis[0], basis[1]
    poly2d = [_plane_coords(v, origin, basis) for v in facet.vertices]
    if (0, 0) in poly2d:
        adapted = _vertex_cone_basis(poly2d)
        if adapted is not None:
            g1, g2 = adapted
            m1 = tuple(g1[0] * basis[0][i] + g1[1] * basis[1][i] for i in range(3))
            m2 = tuple(g2[0] * basis[0][i] + g2[1] * basis[1][i] for i in range(3))
    m3 = solve_functional_equals_one(facet.normal)
    frame = FacetFrame(origin=origin, m1=m1, m2=m2, m3=m3)
    _validate_frame(poly, facet, frame)
    return frame


def _vertex_cone_basis(poly2d):
    """Edge directions of the facet polygon at the origin vertex, when they
    form a unimodular pair (ordered so their determinant is +1)."""
    hull = _convex_hull_2d(poly2d)
    if (0, 0) not in hull or len(hull) < 3:
        return None
    i = hull.index((0, 0))
    nxt = hull[(i + 1) % len(hull)]
    prv = hull[(i - 1) % len(hull)]
    g1 = primitive_vector(nxt)
    g2 = primitive_vector(prv)
    d = g1[0] * g2[1] - g1[1] * g2[0]
    if d == 1:
        return g1, g2
    if d == -1:
        return g2, g1
    return None


def _validate_frame(poly: LatticePolytope, facet: Facet, frame: FacetFrame):
    n = facet.normal
    if dot(n, frame.origin) != -facet.offset:
        raise GeometryError("frame origin is off the facet plane")
    if dot(n, frame.m1) != 0 or dot(n, frame.m2) != 0:
        raise GeometryError("m1, m2 must span the facet direction lattice")
    if dot(n, frame.m3) != 1:
        raise GeometryError("m3 must pair to 1 with the facet normal")
    if abs(det_int([frame.m1, frame.m2, frame.m3])) != 1:
        raise GeometryError("frame is not a lattice basis")
    # Cone condition: the polytope lies on the nonnegative-m3 side of the
    # frame (automatic given the facet inequality, asserted for safety).
    for v in poly.vertices:
        if dot(n, v) + facet.offset < 0:
            raise GeometryError("facet inequality violated by a vertex")


def facet_polynomial(p: LaurentPolynomial, facet: Facet,
                     frame: FacetFrame) -> LaurentPolynomial:
    """Restriction of p to a facet, written in the frame's (m1, m2)
    coordinates after shifting by the frame origin. Two variables."""
    if p.dimension != 3:
        raise GeometryError("facet polynomials require ambient dimension 3")
    _validate_frame_against_facet(facet, frame)
    rows = [frame.m1, frame.m2, frame.m3]
    out: dict[tuple[int, int], Fraction] = {}
    for e, c in p.items():
        if dot(facet.normal, e) != -facet.offset:
            continue
        diff = tuple(a - b for a, b in zip(e, frame.origin))
        coords = solve_row_combination(rows, diff)
        if any(x.denominator != 1 for x in coords):
            raise GeometryError("facet term is off the frame lattice")
        c1, c2, c3 = (int(x) for x in coords)
        if c3 != 0:
            raise GeometryError("facet term has a nonzero transverse coordinate")
        out[(c1, c2)] = c
    return LaurentPolynomial(2, out)


def _validate_frame_against_facet(facet: Facet, frame: FacetFrame):
    n = facet.normal
    ok = (dot(n, frame.origin) == -facet.offset
          and dot(n, frame.m1) == 0 and dot(n, frame.m2) == 0
          and dot(n, frame.m3) == 1
          and abs(det_int([frame.m1, frame.m2, frame.m3])) == 1)
    if not ok:
        raise GeometryError("frame does not belong to the facet")


def edge_polynomial(p: LaurentPolynomial, edge: Edge) -> UniPoly:
    """Coefficients of p read along the edge's lattice points, as a
    univariate polynomial (absent support points contribute 0)."""
    return UniPoly(tuple(p.coefficient(q) for q in edge.lattice_points))


def has_only_pm1_roots(q: UniPoly) -> bool:
    """True iff q is c * u^a * (u-1)^b * (u+1)^e, verified by repeated exact
    division."""
    if q.is_zero:
        raise ValueError("zero polynomial")
    coeffs = list(q.coeffs)
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    work = UniPoly(tuple(coeffs))
    for root in (1, -1):
        factor = UniPoly((-root, 1))
        while work.degree >= 1 and work(Fraction(root)) == 0:
            work = work.exact_div(factor)
    return work.degree == 0


@dataclass
class TemperednessReport:
    """Outcome of the Minkowski temperedness criterion on a polynomial.

    ``passed`` covers the edge criterion only; non-reflexivity of the Newton
    polytope is reported through ``reflexive`` rather than raised, so that
    defective inputs still produce witnesses.
    """

    polytope: LatticePolytope
    reflexive: bool
    passed: bool
    failures: list[tuple[Edge, UniPoly]]
    edge_polynomials: list[tuple[Edge, UniPoly]]

    def to_json_dict(self) -> dict:
        from .jsonutil import encode_int, frac_str

        def point(q):
            return [encode_int(x) for x in q]

        facet_list = facets(self.polytope)
        return {
            "polytope": {"vertices": [point(v) for v in self.polytope.vertices]},
            "reflexive": self.reflexive,
            "facets": [
                {
                    "normal": point(f.normal),
                    "offset": encode_int(f.offset),
                    "vertices": [point(v) for v in f.vertices],
                    "lattice_points": [point(q) for q in f.lattice_points],
                }
                for f in facet_list
            ],
            "edges": [
                {
                    "endpoints": [point(e.endpoints[0]), point(e.endpoints[1])],
                    "direction": point(e.direction),
                    "lattice_points": [point(q) for q in e.lattice_points],
                    "polynomial": [frac_str(c) for c in q.coeffs],
                }
                for e, q in self.edge_polynomials
            ],
            "tempered": self.passed,
            "failures": [
                {
                    "endpoints": [point(e.endpoints[0]), point(e.endpoints[1])],
                    "polynomial": [frac_str(c) for c in q.coeffs],
                }
                for e, q in self.failures
            ],
        }


def temperedness_check(p: LaurentPolynomial) -> TemperednessReport:
    """Check every edge polynomial of p's Newton polytope for roots at +-1.

    The polytope must be full-dimensional. Reflexivity (a standing
    assumption for the Landau-Ginzburg setup) is recorded in the report;
    the criterion itself is still evaluated on non-reflexive inputs so a
    defective polynomial is reported with explicit witnesses.
    """
    poly = newton_polytope(p)
    _require_full_dimensional(poly)
    reflexive = is_reflexive(poly)
    edge_polys = [(e, edge_polynomial(p, e)) for e in edges(poly)]
    failures = [(e, q) for e, q in edge_polys
                if q.is_zero or not has_only_pm1_roots(q)]
    return TemperednessReport(
        polytope=poly,
        reflexive=reflexive,
        passed=not failures,
        failures=failures,
        edge_polynomials=edge_polys,
    )
