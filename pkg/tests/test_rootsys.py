import random
from fractions import Fraction

import pytest

from loopmult.errors import InvalidLieType
from loopmult.rootsys import (
    LieType,
    Weight,
    cartan_matrix,
    dominance_leq,
    dominant_conjugate,
    gram_scaled,
    inverse_cartan,
    parabolic_weyl_order,
    positive_roots,
    root_monoid_coeffs,
    simple_root,
    symmetric_form,
    symmetrizers,
    weyl_orbit,
    weyl_orbit_size,
)

A1 = LieType("A", 1)
A2 = LieType("A", 2)
B2 = LieType("B", 2)
G2 = LieType("G", 2)

ALL_SMALL = [
    LieType.parse(s)
    for s in ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4",
              "D2", "D3", "D4", "G2", "F4", "E6"]
]


def test_parse_and_rank_bounds():
    assert LieType.parse("A2") == A2
    assert LieType.parse("e6") == LieType("E", 6)
    for bad in ["H2", "E5", "E9", "F3", "F5", "G3", "A0", "B1", "C1", "D1", "X", "2A"]:
        with pytest.raises(InvalidLieType):
            LieType.parse(bad)


def test_cartan_matrices_fixed_tables():
    assert cartan_matrix(A1) == ((2,),)
    assert cartan_matrix(A2) == ((2, -1), (-1, 2))
    assert cartan_matrix(B2) == ((2, -1), (-2, 2))
    assert cartan_matrix(LieType("C", 2)) == ((2, -2), (-1, 2))
    assert cartan_matrix(G2) == ((2, -1), (-3, 2))
    assert cartan_matrix(LieType("D", 2)) == ((2, 0), (0, 2))
    F4 = cartan_matrix(LieType("F", 4))
    assert F4 == ((2, -1, 0, 0), (-1, 2, -1, 0), (0, -2, 2, -1), (0, 0, -1, 2))


def test_cartan_matrix_generic_properties():
    for t in ALL_SMALL:
        C = cartan_matrix(t)
        d = symmetrizers(t)
        n = t.rank
        for i in range(n):
            assert C[i][i] == 2
            for j in range(n):
                if i != j:
                    assert C[i][j] <= 0
                    assert (C[i][j] == 0) == (C[j][i] == 0)
                assert d[i] * C[i][j] == d[j] * C[j][i]
        assert min(d) == 1


def test_simple_root_is_cartan_column():
    # B2, j=1: column 1 of the B2 Cartan matrix
    assert simple_root(B2, 1) == Weight((-1, 2))
    assert simple_root(B2, 0) == Weight((2, -2))
    for t in ALL_SMALL:
        C = cartan_matrix(t)
        for j in range(t.rank):
            assert simple_root(t, j).coords == tuple(C[i][j] for i in range(t.rank))


def test_root_monoid_coeffs_examples():
    # A2: omega1 + omega2 = alpha1 + alpha2
    assert root_monoid_coeffs(A2, Weight((1, 1))) == (1, 1)
    # A2: omega1 is not in the root lattice
    assert root_monoid_coeffs(A2, Weight((1, 0))) is None
    # A1: alpha = 2*omega1
    assert root_monoid_coeffs(A1, Weight((2,))) == (1,)
    assert root_monoid_coeffs(A1, Weight((-2,))) is None


def test_root_monoid_coeffs_roundtrip_random():
    rng = random.Random(20260822)
    for t in ALL_SMALL:
        for _ in range(20):
            coeffs = [rng.randrange(0, 4) for _ in range(t.rank)]
            mu = Weight.zero(t.rank)
            for j, c in enumerate(coeffs):
                mu = mu + simple_root(t, j).scale(c)
            assert root_monoid_coeffs(t, mu) == tuple(coeffs)


def test_dominance_examples():
    # (1,0) <= (0,1) is false in A2: omega2 - omega1 is not in Q+
    assert not dominance_leq(A2, Weight((1, 0)), Weight((0, 1)))
    assert dominance_leq(A2, Weight((0, 0)), Weight((1, 1)))
    assert dominance_leq(A1, Weight((-2,)), Weight((0,)))


def test_dominance_is_partial_order_random():
    rng = random.Random(4)
    t = B2
    pts = [Weight((rng.randrange(-3, 4), rng.randrange(-3, 4))) for _ in range(25)]
    for x in pts:
        assert dominance_leq(t, x, x)
        for y in pts:
            if dominance_leq(t, x, y) and dominance_leq(t, y, x):
                assert x == y
            for z in pts:
                if dominance_leq(t, x, y) and dominance_leq(t, y, z):
                    assert dominance_leq(t, x, z)


def test_positive_root_counts():
    expected = {"A1": 1, "A2": 3, "A3": 6, "A4": 10, "B2": 4, "B3": 9, "B4": 16,
                "C2": 4, "C3": 9, "C4": 16, "D2": 2, "D3": 6, "D4": 12,
                "G2": 6, "F4": 24, "E6": 36}
    for t in ALL_SMALL:
        assert len(positive_roots(t)) == expected[str(t)]


def test_positive_roots_b2_explicit():
    got = {r.coords for r in positive_roots(B2)}
    a1, a2 = Weight((2, -2)), Weight((-1, 2))
    want = {a1.coords, a2.coords, (a1 + a2).coords, (a1 + a2 + a2).coords}
    assert got == want


def test_positive_roots_lie_in_root_monoid():
    for t in ALL_SMALL:
        for r in positive_roots(t):
            assert root_monoid_coeffs(t, r) is not None


def test_symmetric_form_values():
    # A1: <alpha, alpha> = 2
    assert symmetric_form(A1, Weight((2,)), Weight((2,))) == 2
    # A2: <omega1, omega1> = 2/3
    assert symmetric_form(A2, Weight((1, 0)), Weight((1, 0))) == Fraction(2, 3)
    # short roots have squared length 2 in every type
    for t in ALL_SMALL:
        lengths = [symmetric_form(t, r, r) for r in positive_roots(t)]
        assert min(lengths) == 2
        # <alpha_i, mu> = d_i * mu(h_i)
        d = symmetrizers(t)
        mu = Weight(tuple(range(1, t.rank + 1)))
        for i in range(t.rank):
            assert symmetric_form(t, simple_root(t, i), mu) == d[i] * mu.coords[i]


def test_symmetric_form_weyl_invariance_random():
    rng = random.Random(99)
    for t in [A2, B2, G2, LieType("C", 3)]:
        for _ in range(10):
            mu = Weight(tuple(rng.randrange(-2, 3) for _ in range(t.rank)))
            nu = Weight(tuple(rng.randrange(-2, 3) for _ in range(t.rank)))
            from loopmult.rootsys import reflect
            for i in range(t.rank):
                assert symmetric_form(t, reflect(t, mu, i), reflect(t, nu, i)) == \
                    symmetric_form(t, mu, nu)


def test_gram_scaled_consistency():
    for t in ALL_SMALL:
        S, s = gram_scaled(t)
        mu = Weight(tuple(1 for _ in range(t.rank)))
        nu = Weight(tuple((-1) ** i for i in range(t.rank)))
        direct = symmetric_form(t, mu, nu)
        scaled = sum(mu.coords[i] * S[i][j] * nu.coords[j]
                     for i in range(t.rank) for j in range(t.rank))
        assert Fraction(scaled, s) == direct


def test_dominant_conjugate_and_orbit():
    rng = random.Random(7)
    for t in [A2, B2, G2]:
        for _ in range(15):
            mu = Weight(tuple(rng.randrange(-3, 4) for _ in range(t.rank)))
            dom = dominant_conjugate(t, mu)
            assert dom.is_dominant()
            orb = weyl_orbit(t, mu)
            assert dom in orb
            assert weyl_orbit(t, dom) == orb
            assert weyl_orbit_size(t, dom) == len(orb)


def test_weyl_group_orders():
    # full Weyl group order via the regular-orbit probe
    full = {"A1": 2, "A2": 6, "A3": 24, "B2": 8, "C3": 48, "D4": 192,
            "G2": 12, "F4": 1152, "D2": 4}
    for name, order in full.items():
        t = LieType.parse(name)
        assert parabolic_weyl_order(t, frozenset(range(t.rank))) == order


def test_inverse_cartan_is_inverse():
    for t in ALL_SMALL:
        C = cartan_matrix(t)
        Ci = inverse_cartan(t)
        n = t.rank
        for i in range(n):
            for j in range(n):
                acc = sum(Fraction(C[i][k]) * Ci[k][j] for k in range(n))
                assert acc == (1 if i == j else 0)
