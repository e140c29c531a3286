from fractions import Fraction

import pytest

from tlg.laurent import LaurentPoly
from tlg.polytope import (DimensionTooLarge, NotFullDimensional,
                          OriginNotInterior, Polytope, ccw_vertices,
                          convex_hull, dual, edges, equals, is_reflexive,
                          lattice_chart, lattice_points, minkowski_sum,
                          newton_polytope, normalized_volume,
                          unimodular_equivalent)

TRIANGLE = Polytope([(1, 0), (0, 1), (-1, -1)])
BIG = Polytope([(2, -1), (-1, 2), (-1, -1)])


def test_hull_drops_non_vertices():
    p = Polytope([(0, 0), (2, 0), (0, 2), (1, 0), (1, 1)])
    assert set(p.vertices) == {(0, 0), (2, 0), (0, 2)}
    assert p.dim == 2


def test_facets_and_contains():
    sq = Polytope([(1, 1), (1, -1), (-1, 1), (-1, -1)])
    assert len(sq.facets) == 4
    for n, h in sq.facets:
        assert h == 1
    assert sq.contains((0, 0))
    assert sq.contains((1, 1))
    assert not sq.contains((2, 0))
    assert sq.contains((Fraction(1, 2), Fraction(-1, 2)))


def test_dual_of_anticanonical_triangle():
    assert set(dual(TRIANGLE).vertices) == {(2, -1), (-1, 2), (-1, -1)}
    # polarity is an involution on reflexive polytopes
    assert set(dual(BIG).vertices) == set(TRIANGLE.vertices)


def test_reflexive_checks():
    assert is_reflexive(TRIANGLE)
    assert is_reflexive(BIG)
    assert not is_reflexive(Polytope([(2, 0), (0, 2), (-2, 0), (0, -2)]))
    cube = Polytope([(a, b, c) for a in (-1, 1) for b in (-1, 1)
                     for c in (-1, 1)])
    assert is_reflexive(cube)


def test_dual_requires_interior_origin():
    shifted = Polytope([(1, 0), (2, 0), (1, 1)])
    with pytest.raises(OriginNotInterior):
        dual(shifted)
    segment = Polytope([(1, 0), (-1, 0)])
    with pytest.raises(NotFullDimensional):
        dual(segment)


def test_lattice_points_regions():
    cube = Polytope([(a, b, c) for a in (-1, 1) for b in (-1, 1)
                     for c in (-1, 1)])
    assert len(lattice_points(cube)) == 27
    assert len(lattice_points(cube, region="boundary")) == 26
    assert lattice_points(cube, region="interior") == [(0, 0, 0)]
    assert len(lattice_points(BIG)) == 10


def test_boundary_point_sum_for_dual_pair():
    b_t = len(lattice_points(TRIANGLE, region="boundary"))
    b_d = len(lattice_points(BIG, region="boundary"))
    assert b_t + b_d == 12


def test_normalized_volume():
    simplex = Polytope([(0, 0), (1, 0), (0, 1)])
    assert normalized_volume(simplex) == 1
    assert normalized_volume(TRIANGLE) == 3
    assert normalized_volume(BIG) == 9
    simplex3 = Polytope([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert normalized_volume(simplex3) == 1
    with pytest.raises(NotFullDimensional):
        normalized_volume(Polytope([(0, 0), (3, 0)]))


def test_newton_polytope():
    vs = ("x", "y")
    x, y = (LaurentPoly.variable(n, vs) for n in vs)
    f = x + y + (x * y) ** -1 + 5
    assert set(newton_polytope(f).vertices) == {(1, 0), (0, 1), (-1, -1)}


def test_newton_polytope_of_threefold_model():
    vs = ("x", "y", "z")
    x, y, z = (LaurentPoly.variable(n, vs) for n in vs)
    f = x + y + z + (x * y * z) ** -1
    nabla = dual(newton_polytope(f))
    assert set(nabla.vertices) == {(3, -1, -1), (-1, 3, -1), (-1, -1, 3),
                                   (-1, -1, -1)}
    assert normalized_volume(nabla) == 64


def test_minkowski_sum():
    seg_x = Polytope([(0, 0), (1, 0)])
    seg_y = Polytope([(0, 0), (0, 1)])
    sq = minkowski_sum(seg_x, seg_y)
    assert set(sq.vertices) == {(0, 0), (1, 0), (0, 1), (1, 1)}
    assert equals(minkowski_sum(TRIANGLE, TRIANGLE),
                  Polytope([(2, 0), (0, 2), (-2, -2)]))


def test_edges_and_ccw():
    es = edges(TRIANGLE)
    assert len(es) == 3
    cube = Polytope([(a, b, c) for a in (0, 1) for b in (0, 1)
                     for c in (0, 1)])
    assert len(edges(cube)) == 12
    cyc = ccw_vertices([(1, 0), (0, 1), (-1, -1)])
    assert len(cyc) == 3
    # counterclockwise: positive cross products all the way around
    for i in range(3):
        a, b, c = cyc[i], cyc[(i + 1) % 3], cyc[(i + 2) % 3]
        cross = (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0])
        assert cross > 0


def test_unimodular_equivalence():
    sheared = Polytope([(1, 1), (0, 1), (-1, -2)])  # shear of TRIANGLE
    u = unimodular_equivalent(TRIANGLE, sheared)
    assert u is not None
    mapped = {tuple(sum(row[i] * v[i] for i in range(2)) for row in u)
              for v in TRIANGLE.vertices}
    assert mapped == set(sheared.vertices)
    assert unimodular_equivalent(TRIANGLE, BIG) is None
    with pytest.raises(DimensionTooLarge):
        five = [tuple(int(i == j) for j in range(5)) for i in range(5)]
        p5 = Polytope(five + [tuple(-1 for _ in range(5))])
        unimodular_equivalent(p5, p5)


def test_lattice_chart_preserves_relations():
    # points of a facet of the cube get 2d coordinates preserving affine
    # structure: point = origin + coords . basis, coordinates distinct
    pts = [(1, -1, -1), (1, 1, -1), (1, -1, 1), (1, 1, 1), (1, 0, 0)]
    origin, basis, coords = lattice_chart(pts, (1, 0, 0))
    assert len(coords) == len(pts)
    assert len(set(coords)) == len(pts)
    for pt, co in zip(pts, coords):
        rebuilt = tuple(origin[i] + sum(c * b[i] for c, b in zip(co, basis))
                        for i in range(3))
        assert rebuilt == pt


def test_convex_hull_helper():
    p = convex_hull([(0, 0), (1, 0), (0, 1)])
    assert isinstance(p, Polytope)
    assert len(p.vertices) == 3
