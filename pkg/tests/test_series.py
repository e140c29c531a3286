import math
from fractions import Fraction

import pytest

from tlg.laurent import LaurentPoly
from tlg.series import (GrassSpec, NegativeAnticanonicalDegree,
                        NonScalarConstantTerm, PowerSeries,
                        ToricCurveClassData, WciSpec, iseries_grassmannian,
                        iseries_toric, iseries_toric_parametrized, iseries_wci,
                        phi, phi_coefficients, verify_period)

V3 = ("x", "y", "z")
x3, y3, z3 = (LaurentPoly.variable(n, V3) for n in V3)
P3_MODEL = x3 + y3 + z3 + (x3 * y3 * z3) ** -1


def brute_constant_terms(f, order):
    """Constant terms of f^i by plain repeated multiplication."""
    out = [1]
    power = LaurentPoly.constant(1, f.variables)
    for _ in range(1, order):
        power = power * f
        out.append(power.constant_term())
    return out


def test_phi_central_binomials():
    xv = LaurentPoly.variable("x", ("x",))
    s = phi(xv + xv ** -1, 7)
    assert list(s.coeffs) == [math.comb(2 * d, d) if i % 2 == 0 else 0
                              for i, d in [(i, i // 2) for i in range(7)]]


def test_phi_projective_plane():
    vs = ("x", "y")
    xv, yv = (LaurentPoly.variable(n, vs) for n in vs)
    s = phi(xv + yv + (xv * yv) ** -1, 10)
    for i, c in enumerate(s.coeffs):
        if i % 3:
            assert c == 0
        else:
            k = i // 3
            assert c == math.factorial(3 * k) // math.factorial(k) ** 3


def test_phi_matches_unpruned_powering():
    f = 2 * x3 + y3 ** -1 + x3 * z3 + 5 + (x3 * y3 * z3) ** -1
    assert list(phi(f, 6).coeffs) == brute_constant_terms(f, 6)


def test_phi_rejects_parameters_but_coefficients_carry_them():
    vs = ("x", "q")
    xv, qv = (LaurentPoly.variable(n, vs) for n in vs)
    f = xv + qv * xv ** -1
    # with no declaration every variable folds into the period
    assert list(phi(f, 3).coeffs) == [1, 0, 0]
    with pytest.raises(NonScalarConstantTerm):
        phi(f, 4, period_vars=("x",))
    coeffs = phi_coefficients(f, 5, period_vars=("x",))
    q = LaurentPoly.variable("q", ("q",))
    assert coeffs[2] == 2 * q
    assert coeffs[4] == 6 * q ** 2


def test_iseries_projective_space():
    spec = WciSpec((1, 1, 1, 1), ())
    s = iseries_wci(spec, 13)
    for i, c in enumerate(s.coeffs):
        if i % 4:
            assert c == 0
        else:
            k = i // 4
            assert c == math.factorial(4 * k) // math.factorial(k) ** 4
    assert phi(P3_MODEL, 13) == s


def test_iseries_quartic_threefold():
    s = iseries_wci(WciSpec((1,) * 5, (4,)), 4)
    expected = [math.factorial(4 * d) // math.factorial(d) ** 4
                for d in range(4)]
    assert list(s.coeffs) == expected


def test_iseries_sextic_hypersurface():
    s = iseries_wci(WciSpec((1, 1, 1, 1, 3), (6,)), 3)
    assert s.coeffs[1] == 120
    assert s.coeffs[0] == 1


def test_wci_spec_validation():
    with pytest.raises(ValueError):
        WciSpec((1, 1), (2,))  # index zero, not Fano
    with pytest.raises(ValueError):
        WciSpec((1, -1), ())


def test_iseries_grassmannian_quadric_section():
    s = iseries_grassmannian(GrassSpec(3, 3, (2, 1, 1, 1)), 4)
    assert list(s.coeffs) == [1, 12, 756, 78960]


def test_grass_spec_validation():
    with pytest.raises(ValueError):
        GrassSpec(3, 3, (3, 1, 1, 1))  # degree sum hits n+k


S7_ROWS = ((1, 0, 1, 0, 0), (1, 1, 0, 1, 0), (0, 1, 0, 0, 1))


def s7_oracle(order):
    out = [0] * order
    for k in range(order):
        for l in range(order):
            for m in range(order):
                n = 2 * k + 3 * l + 2 * m
                if n >= order:
                    continue
                den = (math.factorial(k + l) * math.factorial(l + m)
                       * math.factorial(k) * math.factorial(l)
                       * math.factorial(m))
                out[n] += math.factorial(n) // den
    return out


def test_iseries_toric_degree_seven_surface():
    data = ToricCurveClassData(S7_ROWS)
    s = iseries_toric(data, 8)
    assert list(s.coeffs) == s7_oracle(8)
    assert s.warnings == ()


def test_iseries_toric_projective_line():
    data = ToricCurveClassData(((1, 1),))
    xv = LaurentPoly.variable("x", ("x",))
    assert iseries_toric(data, 9) == phi(xv + xv ** -1, 9)


def test_iseries_toric_unit_kappa_warns():
    data = ToricCurveClassData(((1, 0),))
    s = iseries_toric(data, 3)
    assert s.warnings


def test_toric_data_rejects_negative_degree():
    with pytest.raises(NegativeAnticanonicalDegree):
        ToricCurveClassData(((-1, -1),))


def test_parametrized_toric_series_equals_parametrized_period():
    # the same surface with boundary-divisor parameters left symbolic
    vs = ("x", "y", "q0", "q1", "q2")
    x, y, q0, q1, q2 = (LaurentPoly.variable(n, vs) for n in vs)
    f = x + y + q0 * (x * y) ** -1 + q0 * q1 * y ** -1 + q2 * x * y
    lhs = phi_coefficients(f, 7, period_vars=("x", "y"))
    rhs = iseries_toric_parametrized(
        ToricCurveClassData(S7_ROWS, param_vars=("q0", "q1", "q2"),
                            param_exponents=((1, 1, 0), (1, 0, 0),
                                             (1, 0, 1))), 7)
    assert len(lhs) == len(rhs)
    for ours, theirs in zip(lhs, rhs):
        assert ours == theirs


def test_verify_period_match_and_mismatch():
    target = phi(P3_MODEL, 9)
    ok = verify_period(P3_MODEL, target)
    assert ok.match and ok.order == 9 and ok.first_mismatch is None
    bad = PowerSeries(target.coeffs[:8] + (7,))
    rep = verify_period(P3_MODEL, bad)
    assert not rep.match
    assert rep.first_mismatch == 8
    assert rep.expected == "7"
    assert rep.found == "2520"
    data = rep.to_json_dict()
    assert data["match"] is False and data["first_mismatch"] == 8


def test_power_series_mechanics():
    s = PowerSeries((1, Fraction(1, 2), 3))
    assert s.order == 3
    assert s.coefficient(1) == Fraction(1, 2)
    assert s.truncate(2).coeffs == (1, Fraction(1, 2))
    with pytest.raises(ValueError):
        s.truncate(5)
    data = s.to_json_dict()
    assert data == {"order": 3, "coeffs": ["1", "1/2", "3"]}
    assert PowerSeries.from_json_dict(data) == s
    with pytest.raises(ValueError):
        PowerSeries.from_json_dict({"order": 2, "coeffs": ["1"]})
