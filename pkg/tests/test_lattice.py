import math
from fractions import Fraction

import pytest

from tlg.lattice import (BadName, BadRange, DegenerateLattice, GramLattice,
                         NotFiniteIndex, NotIsometric, direct_sum,
                         discriminant, duval_intersection,
                         duval_self_intersection, form_matches, hyperbolic,
                         index_check, reduce_mod2, root_a, root_e, signature,
                         standard_lattice)


def test_gram_validation():
    with pytest.raises(ValueError):
        GramLattice(((1, 2), (3,)))
    with pytest.raises(ValueError):
        GramLattice(((0, 1), (2, 0)))
    l = GramLattice(((2, -1), (-1, 2)))
    assert l.rank == 2 and l.det() == 3 and l.is_even()
    assert not GramLattice(((1,),)).is_even()


def test_twist_and_direct_sum():
    h = hyperbolic()
    assert h.gram == ((0, 1), (1, 0))
    assert h.twist(3).gram == ((0, 3), (3, 0))
    with pytest.raises(ValueError):
        h.twist(0)
    s = direct_sum(h, GramLattice(((-2,),)))
    assert s.gram == ((0, 1, 0), (1, 0, 0), (0, 0, -2))
    assert s.det() == 2


def test_standard_lattice_names():
    assert standard_lattice("M_6").gram == standard_lattice("M6").gram
    assert standard_lattice("A_5").gram == standard_lattice("A5").gram
    assert standard_lattice("<-6>").gram == ((-6,),)
    assert standard_lattice("rank1(-6)").gram == ((-6,),)
    assert standard_lattice("A_2", twist=-1).gram == ((-2, 1), (1, -2))
    m = standard_lattice("M")
    assert m.rank == 18 and signature(m) == (1, 17)
    for bad in ("F_4", "E_5", "D_3", "A_0", "M_0", "rank1(x)", ""):
        with pytest.raises(BadName):
            standard_lattice(bad)


def test_signature():
    assert signature(hyperbolic()) == (1, 1)
    assert signature(root_e(8)) == (8, 0)
    assert signature(root_e(8).twist(-1)) == (0, 8)
    assert signature(standard_lattice("M_6")) == (1, 18)
    with pytest.raises(DegenerateLattice):
        signature(GramLattice(((0,),)))


def test_discriminant_small_lattices():
    a1 = discriminant(root_a(1))
    assert a1.group == (2,) and a1.form_values == (Fraction(1, 2),)
    a2 = discriminant(root_a(2))
    assert a2.group == (3,) and a2.form_values == (Fraction(2, 3),)
    d4 = discriminant(standard_lattice("D_4"))
    assert d4.group == (2, 2)
    assert set(d4.form_values) == {Fraction(1)}
    assert discriminant(root_e(8)).group == ()
    assert discriminant(hyperbolic()).group == ()
    with pytest.raises(DegenerateLattice):
        discriminant(GramLattice(((0, 0), (0, 0))))


def test_discriminant_of_rank19_family():
    for n in range(1, 11):
        data = discriminant(standard_lattice(f"M_{n}"))
        assert data.group == (2 * n,)
        assert data.form_values == (reduce_mod2(Fraction(-1, 2 * n)),)


def test_discriminant_generators_pair_integrally():
    l = standard_lattice("M_6")
    (gen,) = discriminant(l).generators
    # the generator lies in the dual: integral pairing with every basis
    # vector; and its order in the quotient is exactly 12
    lcm = 1
    for r in range(l.rank):
        v = sum(l.gram[r][c] * gen[c] for c in range(l.rank))
        assert v.denominator == 1
    for x in gen:
        lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
    assert lcm == 12


def test_form_matches():
    m6 = standard_lattice("M_6")
    assert form_matches(m6, ["23/12"])
    assert form_matches(m6, [Fraction(-1, 12)])
    assert not form_matches(m6, ["1/12"])
    assert not form_matches(m6, ["23/12", "1/2"])
    assert form_matches(hyperbolic(), [])
    assert form_matches(standard_lattice("D_4"), ["1", "1"])


def test_index_check():
    h = hyperbolic()
    h2 = GramLattice(((0, 2), (2, 0)))
    assert index_check(h2, h, [[2, 0], [0, 1]]) == 2
    assert index_check(h, h, [[1, 0], [0, 1]]) == 1
    a1_4 = GramLattice(((4,),))
    assert index_check(a1_4, GramLattice(((1,),)), [[2]]) == 2
    with pytest.raises(NotIsometric):
        index_check(h2, h, [[1, 0], [0, 1]])
    with pytest.raises(NotFiniteIndex):
        index_check(GramLattice(((2,),)), h, [[1, 0]])
    with pytest.raises(NotFiniteIndex):
        index_check(GramLattice(((0, 0), (0, 0))), h, [[1, 0], [1, 0]])


def test_duval_intersections():
    assert duval_intersection("A5", 2, 3) == Fraction(1)
    assert duval_intersection("A5", 3, 2) == Fraction(1)
    assert duval_intersection("A5", 1, 1) == Fraction(5, 6)
    assert duval_intersection("A5", 3, 3) == Fraction(3, 2)
    assert duval_intersection("A_1", 1, 1) == Fraction(1, 2)
    assert duval_intersection("D7") == Fraction(1, 2)
    with pytest.raises(BadRange):
        duval_intersection("A5", 0, 1)
    with pytest.raises(BadRange):
        duval_intersection("A5", 1, 6)
    with pytest.raises(BadRange):
        duval_intersection("E6")
    with pytest.raises(BadRange):
        duval_intersection("D3")


def test_duval_self_intersections():
    assert duval_self_intersection("A5", 2) == Fraction(4, 3)
    assert duval_self_intersection("A5", 3) == Fraction(3, 2)
    assert duval_self_intersection("A1", 1) == Fraction(1, 2)
    assert duval_self_intersection("D6", branch="tail") == Fraction(1)
    assert duval_self_intersection("D6", branch="fork") == Fraction(3, 2)
    assert duval_self_intersection("E6") == Fraction(4, 3)
    assert duval_self_intersection("E7") == Fraction(3, 2)
    with pytest.raises(BadRange):
        duval_self_intersection("E8")
    with pytest.raises(BadRange):
        duval_self_intersection("A5", 6)
    with pytest.raises(BadRange):
        duval_self_intersection("D6", branch="middle")
    with pytest.raises(BadRange):
        duval_self_intersection("F4", 1)
