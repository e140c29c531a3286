import pytest

from tlg.builders import (BadBase, BadPartition, DelPezzoScript,
                          InteriorFacetPoint, MinkowskiCertificate,
                          NefPartition, PointInsideHull, a_type_polynomial,
                          binomial_principle, check_minkowski,
                          del_pezzo_model, find_nef_partitions, is_An_polygon,
                          minkowski_polynomial, wci_laurent)
from tlg.laurent import LaurentPoly
from tlg.polytope import Polytope, equals, newton_polytope
from tlg.series import WciSpec, phi


def lp(expr_vars, terms):
    return LaurentPoly(tuple(expr_vars), terms)


def test_wci_projective_space():
    f = wci_laurent(WciSpec((1, 1, 1, 1), ()))
    assert f == lp(("x1", "x2", "x3"), {(1, 0, 0): 1, (0, 1, 0): 1,
                                        (0, 0, 1): 1, (-1, -1, -1): 1})


def test_wci_quartic_threefold():
    f = wci_laurent(WciSpec((1, 1, 1, 1, 1), (4,)))
    vs = ("x1", "x2", "x3")
    x1, x2, x3 = (LaurentPoly.variable(n, vs) for n in vs)
    expected = (1 + x1 + x2 + x3) ** 4 * (x1 * x2 * x3) ** -1
    assert f == expected


def test_wci_explicit_partition_and_names():
    spec = WciSpec((1, 1, 1, 1, 1), (4,))
    part = NefPartition(((4,), (0, 1, 2, 3)), "very_good")
    f = wci_laurent(spec, part, var_names=("a", "b", "c"))
    assert set(f.variables) == {"a", "b", "c"}
    a, b, c = (LaurentPoly.variable(n, ("a", "b", "c")) for n in "abc")
    assert f == (1 + a + b + c) ** 4 * (a * b * c) ** -1


def test_wci_partition_validation():
    spec = WciSpec((1, 1, 1, 1, 1), (4,))
    with pytest.raises(BadPartition):
        wci_laurent(spec, NefPartition(((0, 1, 2, 3, 4),), "plain"))
    with pytest.raises(BadPartition):
        wci_laurent(spec, NefPartition(((4,), (0, 1, 2)), "plain"))
    with pytest.raises(BadPartition):
        wci_laurent(spec, NefPartition(((4, 3), (0, 1, 2, 3)), "plain"))


def test_find_nef_partitions_counts_and_quality():
    spec = WciSpec((1, 1, 1, 2, 3), (6,))
    every = find_nef_partitions(spec)
    assert len(every) == 4
    best = find_nef_partitions(spec, "very_good")
    assert len(best) == 3
    assert all(p.quality == "very_good" for p in best)
    qualities = sorted(p.quality for p in every)
    assert qualities == ["plain", "very_good", "very_good", "very_good"]
    with pytest.raises(ValueError):
        find_nef_partitions(spec, "excellent")


def test_find_nef_partitions_cancel():
    spec = WciSpec((1, 1, 1, 1, 1), (4,))
    with pytest.raises(InterruptedError):
        find_nef_partitions(spec, should_cancel=lambda: True)


def test_binomial_principle_triangle():
    tri = Polytope([(1, 0), (0, 1), (-1, -1)])
    assert binomial_principle(tri) == lp(("x", "y"), {(1, 0): 1, (0, 1): 1,
                                                      (-1, -1): 1})


def test_binomial_principle_big_triangle():
    big = Polytope([(2, -1), (-1, 2), (-1, -1)])
    vs = ("x", "y")
    x, y = (LaurentPoly.variable(n, vs) for n in vs)
    # boundary of the degree-9 triangle carries (x+y+1)^3/(xy) without
    # the interior constant term
    expected = (x + y + 1) ** 3 * (x * y) ** -1 - 6
    assert binomial_principle(big) == expected


def test_binomial_principle_rejects_facet_interior_points():
    cube = Polytope([(a, b, c) for a in (-1, 1) for b in (-1, 1)
                     for c in (-1, 1)])
    with pytest.raises(InteriorFacetPoint):
        binomial_principle(cube)
    with pytest.raises(ValueError):
        binomial_principle(Polytope([(2, 0), (0, 2), (-2, -2)]))


def test_is_An_polygon():
    assert is_An_polygon(Polytope([(0, 0), (1, 0)])) == 0
    assert is_An_polygon(Polytope([(0, 0), (2, 0)])) is None
    assert is_An_polygon(Polytope([(0, 0), (1, 0), (0, 1)])) == 1
    assert is_An_polygon(Polytope([(0, 0), (2, 0), (0, 1)])) == 2
    assert is_An_polygon(Polytope([(0, 0), (3, 0), (0, 1)])) == 3
    assert is_An_polygon(Polytope([(0, 0), (2, 0), (0, 2)])) is None
    square = Polytope([(0, 0), (1, 0), (0, 1), (1, 1)])
    assert is_An_polygon(square) is None


def test_a_type_polynomial():
    tri = Polytope([(0, 0), (2, 0), (0, 1)])
    assert a_type_polynomial(tri) == lp(("x", "y"), {(0, 0): 1, (1, 0): 2,
                                                     (2, 0): 1, (0, 1): 1})
    tri3 = Polytope([(0, 0), (3, 0), (0, 1)])
    f3 = a_type_polynomial(tri3, variables=("u", "v"))
    assert f3 == lp(("u", "v"), {(0, 0): 1, (1, 0): 3, (2, 0): 3, (3, 0): 1,
                                 (0, 1): 1})


def test_check_minkowski_quartic():
    vs = ("x", "y", "z")
    x, y, z = (LaurentPoly.variable(n, vs) for n in vs)
    f = (1 + x + y + z) ** 4 * (x * y * z) ** -1
    cert = check_minkowski(f)
    assert cert is not None
    for fd in cert.facets:
        for s in fd.summands:
            assert is_An_polygon(s) is not None
    rebuilt = minkowski_polynomial(newton_polytope(f), cert)
    # the facet products pin every boundary coefficient; the interior
    # origin carries no term by convention
    assert rebuilt == f - 24


def test_check_minkowski_projective_space():
    vs = ("x", "y", "z")
    x, y, z = (LaurentPoly.variable(n, vs) for n in vs)
    f = x + y + z + (x * y * z) ** -1
    cert = check_minkowski(f)
    assert cert is not None
    assert minkowski_polynomial(newton_polytope(f), cert) == f


def test_check_minkowski_finds_nothing_for_2_3_intersection():
    f = wci_laurent(WciSpec((1, 1, 1, 1, 1, 1), (2, 3)))
    assert check_minkowski(f) is None


def test_check_minkowski_needs_reflexive_3d():
    vs = ("x", "y")
    x, y = (LaurentPoly.variable(n, vs) for n in vs)
    with pytest.raises(ValueError):
        check_minkowski(x + y + (x * y) ** -1)


def test_minkowski_certificate_json_round_trip():
    vs = ("x", "y", "z")
    x, y, z = (LaurentPoly.variable(n, vs) for n in vs)
    f = x + y + z + (x * y * z) ** -1
    cert = check_minkowski(f)
    again = MinkowskiCertificate.from_json_dict(cert.to_json_dict())
    assert minkowski_polynomial(newton_polytope(f), again) == f


def test_del_pezzo_bases():
    f = del_pezzo_model(DelPezzoScript("P2", (), ("q0",)))
    assert f == lp(("x", "y", "q0"), {(1, 0, 0): 1, (0, 1, 0): 1,
                                      (-1, -1, 1): 1})
    g = del_pezzo_model(DelPezzoScript("quadric_square", (), ("q0", "q1")))
    assert g == lp(("x", "y", "q0", "q1"),
                   {(1, 0, 0, 0): 1, (-1, 0, 1, 0): 1,
                    (0, 1, 0, 0): 1, (0, -1, 0, 1): 1})


def test_del_pezzo_steps_toric():
    script = DelPezzoScript("P2", ((1, 1), (0, -1), (1, -1)),
                            ("q0", "q1", "q2", "q3"))
    f = del_pezzo_model(script)
    vs = ("x", "y", "q0", "q1", "q2", "q3")
    assert f == lp(vs, {
        (1, 0, 0, 0, 0, 0): 1,          # x
        (0, 1, 0, 0, 0, 0): 1,          # y
        (-1, -1, 1, 0, 0, 0): 1,        # q0 / (x y)
        (1, 1, 0, 1, 0, 0): 1,          # q1 x y
        (0, -1, 1, 0, 1, 0): 1,         # q0 q2 / y
        (1, -1, 1, 0, 1, 1): 1,         # q0 q2 q3 x / y
    })


def test_del_pezzo_steps_surface():
    script = DelPezzoScript("P2", ((1, 1), (0, -1), (1, -1)),
                            ("q0", "q1", "q2", "q3"))
    f = del_pezzo_model(script, mode="surface")
    vs = ("x", "y", "q0", "q1", "q2", "q3")
    # the bottom edge (-1,-1)..(1,-1) and the right edge (1,-1)..(1,1)
    # have lattice length two, so their midpoints pick up the convolved
    # coefficients q0 q2 + q0 q3 and 1 + q0 q1 q2 q3
    assert f == lp(vs, {
        (0, 1, 0, 0, 0, 0): 1,
        (-1, -1, 1, 0, 0, 0): 1,
        (1, 1, 0, 1, 0, 0): 1,
        (0, -1, 1, 0, 1, 0): 1,
        (0, -1, 1, 0, 0, 1): 1,
        (1, -1, 1, 0, 1, 1): 1,
        (1, 0, 0, 0, 0, 0): 1,
        (1, 0, 1, 1, 1, 1): 1,
    })


def test_del_pezzo_periods_at_unit_parameters():
    base = del_pezzo_model(DelPezzoScript("P2", (), ("q0",)))
    once = del_pezzo_model(DelPezzoScript("P2", ((1, 1),), ("q0", "q1")))
    sub = {"q0": 1, "q1": 1}
    s0 = phi(base.substitute({"q0": 1}).as_laurent(), 6)
    s1 = phi(once.substitute(sub).as_laurent(), 6)
    assert s0.coeffs == (1, 0, 0, 6, 0, 0)
    assert s1.coeffs == (1, 0, 2, 6, 6, 60)


def test_del_pezzo_errors():
    with pytest.raises(BadBase):
        del_pezzo_model(DelPezzoScript("P3", (), ("q0",)))
    with pytest.raises(ValueError):
        del_pezzo_model(DelPezzoScript("P2", (), ("q0", "q1")))
    with pytest.raises(PointInsideHull):
        del_pezzo_model(DelPezzoScript("P2", ((0, 0),), ("q0", "q1")))
    with pytest.raises(ValueError):
        # attaching (1,-1) straight away leaves its neighbour (0,-1) bare
        del_pezzo_model(DelPezzoScript("P2", ((1, -1),), ("q0", "q1")))
    with pytest.raises(ValueError):
        del_pezzo_model(DelPezzoScript("P2", (), ("q0",)), mode="affine")


def test_del_pezzo_newton_polytope_matches_steps():
    script = DelPezzoScript("P2", ((1, 1),), ("q0", "q1"))
    f = del_pezzo_model(script)
    proj = {}
    for e, c in f.terms():
        proj[(e[0], e[1])] = proj.get((e[0], e[1]), 0) + c
    hull = Polytope(list(proj))
    assert equals(hull, Polytope([(1, 0), (0, 1), (-1, -1), (1, 1)]))
