import random

import pytest

from loopmult.errors import LoopmultError, TowerMismatch
from loopmult.galois import (
    ConjClass,
    FieldTower,
    FiniteFieldContext,
    SyntheticContext,
    _is_irreducible,
    _smallest_irreducible,
)


def test_modulus_is_lex_smallest_irreducible():
    assert _smallest_irreducible(2, 2) == (1, 1, 1)        # x^2+x+1
    assert _smallest_irreducible(2, 3) == (1, 0, 1, 1)     # x^3+x^2+1
    assert _smallest_irreducible(3, 2) == (1, 0, 1)        # x^2+1
    # every earlier candidate in the documented order is reducible
    for p, d in [(2, 4), (3, 3), (5, 2)]:
        mod = _smallest_irreducible(p, d)
        assert _is_irreducible(list(mod), p)
        first = mod[:d]
        n_first = 0
        for c in first:
            n_first = n_first * p + c
        for n in range(n_first):
            digits = []
            m = n
            for _ in range(d):
                m, r = divmod(m, p)
                digits.append(r)
            cand = digits[::-1] + [1]
            assert not _is_irreducible(cand, p)


def test_tower_validation():
    with pytest.raises(LoopmultError):
        FieldTower(4, 1, 2)           # not prime
    with pytest.raises(LoopmultError):
        FieldTower(2, 1, 30)          # order cap 2^24
    with pytest.raises(LoopmultError):
        FieldTower(2, 0, 2)


def test_field_axioms_random():
    rng = random.Random(11)
    for tower in [FieldTower(2, 1, 3), FieldTower(3, 1, 2), FieldTower(2, 2, 2)]:
        elems = list(tower.elements())
        for _ in range(60):
            a, b, c = (rng.choice(elems) for _ in range(3))
            assert (a + b) * c == a * c + b * c
            assert a * b == b * a
            assert a + (-a) == tower.zero()
            if not a.is_zero():
                assert a * a.inverse() == tower.one()
                assert (a ** 5) * (a ** -5) == tower.one()


def test_frobenius_properties():
    tower = FieldTower(2, 2, 3)  # F4 inside F4^3
    for x in tower.elements():
        y = x
        for _ in range(tower.ambient):
            y = y.frobenius()
        assert y == x  # frobenius^N = id
        assert x.frobenius() == x ** tower.q
    # fixed points are exactly the base field
    fixed = [x for x in tower.elements() if x.frobenius() == x]
    assert len(fixed) == tower.q


def test_frobenius_is_field_automorphism():
    tower = FieldTower(3, 1, 2)
    elems = list(tower.elements())
    for a in elems:
        for b in elems[:4]:
            assert (a + b).frobenius() == a.frobenius() + b.frobenius()
            assert (a * b).frobenius() == a.frobenius() * b.frobenius()


def test_degree_over_base_divides_ambient():
    tower = FieldTower(2, 1, 6)
    for x in list(tower.elements())[:200]:
        d = x.degree_over_base()
        assert tower.ambient % d == 0


def test_element_str_parse_roundtrip_keys():
    tower = FieldTower(2, 1, 2)
    g = tower.gen()
    assert str(g) == "g"
    assert str(g + 1) == "g+1"
    assert str(g * g) == "g+1"
    assert str(tower.zero()) == "0"
    t5 = FieldTower(5, 1, 2)
    h = t5.gen()
    assert str(h * 2 + 3) == "2g+3"


def test_tower_mismatch():
    a = FieldTower(2, 1, 2).gen()
    b = FieldTower(2, 1, 3).gen()
    with pytest.raises(TowerMismatch):
        _ = a + b


class _FakeLW:
    """Tiny stand-in implementing the orbit protocol."""

    def __init__(self, tag, step=None):
        self.tag = tag
        self._step = step or {}

    def galois_conjugate(self):
        return self._step[self.tag]

    def sort_key(self):
        return self.tag

    def __eq__(self, other):
        return isinstance(other, _FakeLW) and self.tag == other.tag

    def __hash__(self):
        return hash(self.tag)

    def __repr__(self):
        return f"fake:{self.tag}"


def test_synthetic_context_tables():
    a, b, c = _FakeLW("a"), _FakeLW("b"), _FakeLW("c")
    ctx = SyntheticContext(orbit_table=[[a, b], [c]], indeg_table={a: 3, c: 2})
    assert ctx.orbit(b).representative == a
    assert ctx.orbit(a).size == 2
    assert ctx.indeg(b) == 3          # looked up via the class representative
    assert ctx.deg(a) == 6            # |orbit| * indeg = 2 * 3
    assert ctx.deg(c) == 2
    assert ctx.synthetic
    with pytest.raises(LoopmultError):
        ctx.orbit(_FakeLW("unknown"))
    with pytest.raises(LoopmultError):
        SyntheticContext(orbit_table=[[a]], indeg_table={a: 0})


def test_conjclass_orders_members():
    x, y = _FakeLW("x"), _FakeLW("b")
    ctx = SyntheticContext(orbit_table=[[x, y]])
    assert ctx.orbit(x).members[0].tag == "b"
