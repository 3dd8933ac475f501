import random
from fractions import Fraction

import pytest

from loopmult.errors import CharacteristicMismatch, NotAnLCharacter
from loopmult.galois import FieldTower, FiniteFieldContext, SyntheticContext
from loopmult.gchar import char_zero_engine, modular_engine
from loopmult.lchar import (
    ClassLChar,
    LChar,
    bracket,
    decompose_lchar_F,
    decompose_lchar_K,
    dim_simple_F,
    dim_simple_K,
    dim_weyl_F,
    eval_module_lchar,
    mul_lchar,
    simple_lchar_F,
    simple_lchar_K,
    tp_lchar_K,
    weight_collapse,
    weyl_lchar_F,
    weyl_lchar_K,
)
from loopmult.lweight import LWeight, leq_qplus
from loopmult.rootsys import LieType, Weight
from util import random_lweight

A1 = LieType("A", 1)
A2 = LieType("A", 2)


@pytest.fixture
def f4():
    tower = FieldTower(2, 1, 2)
    return tower, FiniteFieldContext(tower), modular_engine(A1, 2)


def test_eval_module_lchar():
    e0 = char_zero_engine(A1)
    a = Fraction(2)
    assert eval_module_lchar(e0, Weight.zero(1), a) == LChar.unit(A1)
    h = eval_module_lchar(e0, Weight((1,)), a)
    assert h[LWeight.single(A1, Weight((1,)), a)] == 1
    assert h[LWeight.single(A1, Weight((-1,)), a)] == 1
    assert h.mass() == 2
    e2 = modular_engine(A1, 2)
    t4 = FieldTower(2, 1, 2)
    g = t4.gen()
    h2 = eval_module_lchar(e2, Weight((2,)), g)
    assert {w: c for w, c in h2.items()} == {
        LWeight.single(A1, Weight((2,)), g): 1,
        LWeight.single(A1, Weight((-2,)), g): 1,
    }
    # collapse along wt recovers the g-side character
    assert weight_collapse(h2) == e2.simple_char(Weight((2,)))


def test_simple_lchar_F(f4):
    tower, _, e2 = f4
    e0 = char_zero_engine(A1)
    assert simple_lchar_F(e0, LWeight.identity(A1)) == LChar.unit(A1)
    a, b = Fraction(2), Fraction(3)
    w = LWeight(A1, {a: Weight((1,)), b: Weight((1,))})
    h = simple_lchar_F(e0, w)
    assert len(h.items()) == 4 and all(c == 1 for _, c in h.items())
    assert h.mass() == 4
    assert h[w] == 1
    rng = random.Random(21)
    for _ in range(10):
        v = random_lweight(rng, A1, tower)
        hv = simple_lchar_F(e2, v)
        assert hv[v] == 1
        assert hv.mass() == dim_simple_F(e2, v)
        assert all(leq_qplus(x, v) for x in hv.support())


def test_mul_and_collapse():
    e0 = char_zero_engine(A2)
    rng = random.Random(22)
    tower = FieldTower(3, 1, 2)
    e3 = modular_engine(A1, 3)
    for _ in range(8):
        w1 = random_lweight(rng, A1, tower)
        w2 = random_lweight(rng, A1, tower)
        h1, h2 = simple_lchar_F(e3, w1), simple_lchar_F(e3, w2)
        assert mul_lchar(h1, h2) == mul_lchar(h2, h1)
        assert weight_collapse(h1 * h2) == \
            weight_collapse(h1) * weight_collapse(h2)
    assert LChar.unit(A2) * LChar.unit(A2) == LChar.unit(A2)
    a = Fraction(5)
    single = LChar(A1, {LWeight.single(A1, Weight((1,)), a): 1})
    assert (single * single)[LWeight.single(A1, Weight((2,)), a)] == 1


def test_bracket(f4):
    tower, ctx, _ = f4
    g = tower.gen()
    w = LWeight.single(A1, Weight((1,)), g)
    wc = w.galois_conjugate()
    h = LChar(A1, {w: 1, wc: 3})
    br = bracket(ctx, h)
    rep = ctx.orbit(w).representative
    assert br[rep] == 4 and br.mass() == 4
    # Galois invariance
    hc = LChar(A1, {w.galois_conjugate(): 1, wc.galois_conjugate(): 3})
    assert bracket(ctx, hc) == br
    # rational support: singleton classes keep their coefficients
    one_w = LWeight.single(A1, Weight((1,)), tower.one())
    assert bracket(ctx, LChar(A1, {one_w: 5}))[one_w] == 5


def test_simple_lchar_K_flagship(f4):
    tower, ctx, e2 = f4
    g = tower.gen()
    w = LWeight.single(A1, Weight((1,)), g)
    sk = simple_lchar_K(ctx, e2, w)
    assert sk[ctx.orbit(w).representative] == 2
    assert sk[ctx.orbit(w.inv()).representative] == 2
    assert sk.mass() == 4 == dim_simple_K(ctx, e2, w)
    assert sk.mass() == ctx.deg(w) * dim_simple_F(e2, w)
    # every class value is a multiple of deg(w)
    assert all(c % ctx.deg(w) == 0 for _, c in sk.items())


def test_mass_identities_random():
    rng = random.Random(23)
    for tower, p in [(FieldTower(2, 1, 2), 2), (FieldTower(3, 1, 2), 3)]:
        ctx = FiniteFieldContext(tower)
        e = modular_engine(A1, p)
        for _ in range(15):
            w = random_lweight(rng, A1, tower)
            assert simple_lchar_K(ctx, e, w).mass() == \
                ctx.deg(w) * dim_simple_F(e, w)
            assert weyl_lchar_K(ctx, e, w).mass() == \
                ctx.deg(w) * dim_weyl_F(e, w)


def test_weyl_lchar(f4):
    tower, ctx, e2 = f4
    g = tower.gen()
    # fundamental local weight: Weyl = simple
    w1 = LWeight.single(A1, Weight((1,)), g)
    assert weyl_lchar_F(e2, w1) == simple_lchar_F(e2, w1)
    # characteristic zero, rational parameter
    e0 = char_zero_engine(A1)
    a = Fraction(2)
    w2 = LWeight.single(A1, Weight((2,)), a)
    wl0 = weyl_lchar_F(e0, w2)
    assert wl0 == simple_lchar_F(e0, w2) + LChar.unit(A1)
    assert wl0.mass() == 4 == dim_weyl_F(e0, w2)
    # characteristic two: same mass, different splitting
    w2g = LWeight.single(A1, Weight((2,)), g)
    wl2 = weyl_lchar_F(e2, w2g)
    assert wl2.mass() == 4
    assert decompose_lchar_F(e2, wl2) == {w2g: 1, LWeight.identity(A1): 2}
    assert weyl_lchar_K(ctx, e2, w2g).mass() == 8


def test_decompose_lchar_F_frozen():
    e0 = char_zero_engine(A1)
    a, b = Fraction(2), Fraction(3)
    va = eval_module_lchar(e0, Weight((1,)), a)
    vb = eval_module_lchar(e0, Weight((1,)), b)
    w2 = LWeight.single(A1, Weight((2,)), a)
    assert decompose_lchar_F(e0, va * va) == {w2: 1, LWeight.identity(A1): 1}
    pair = LWeight(A1, {a: Weight((1,)), b: Weight((1,))})
    assert decompose_lchar_F(e0, va * vb) == {pair: 1}
    assert decompose_lchar_F(e0, simple_lchar_F(e0, w2)) == {w2: 1}


def test_decompose_lchar_F_roundtrip():
    rng = random.Random(24)
    tower = FieldTower(2, 1, 2)
    e2 = modular_engine(A1, 2)
    for _ in range(12):
        combo = {}
        for _ in range(rng.randrange(1, 4)):
            w = random_lweight(rng, A1, tower)
            combo[w] = combo.get(w, 0) + rng.randrange(1, 3)
        h = LChar(A1)
        for w, c in combo.items():
            h = h + simple_lchar_F(e2, w).scale(c)
        assert decompose_lchar_F(e2, h) == combo


def test_decompose_lchar_F_rejects():
    e0 = char_zero_engine(A1)
    a = Fraction(2)
    w = LWeight.single(A1, Weight((1,)), a)
    with pytest.raises(NotAnLCharacter):
        decompose_lchar_F(e0, LChar(A1, {w: -1}))
    with pytest.raises(NotAnLCharacter):
        decompose_lchar_F(e0, LChar(A1, {w.inv(): 1}))
    # a bare highest term without its lower companions goes negative
    with pytest.raises(NotAnLCharacter):
        decompose_lchar_F(e0, LChar(A1, {w: 1, w.inv(): -1}))


def test_decompose_lchar_K_roundtrip(f4):
    tower, ctx, e2 = f4
    rng = random.Random(25)
    for _ in range(10):
        combo = {}
        for _ in range(rng.randrange(1, 3)):
            rep = ctx.orbit(random_lweight(rng, A1, tower)).representative
            combo[rep] = combo.get(rep, 0) + rng.randrange(1, 3)
        h = ClassLChar(A1)
        for rep, c in combo.items():
            h = h + simple_lchar_K(ctx, e2, rep).scale(c)
        assert decompose_lchar_K(ctx, e2, h) == combo
    with pytest.raises(NotAnLCharacter):
        g = tower.gen()
        decompose_lchar_K(ctx, e2, ClassLChar(
            A1, {LWeight.single(A1, Weight((1,)), g): 1}))  # 1 not divisible by deg 2


def test_tp_lchar_K(f4):
    tower, ctx, e2 = f4
    g = tower.gen()
    w1 = LWeight.single(A1, Weight((1,)), g)
    w2 = w1.galois_conjugate()
    tp = tp_lchar_K(ctx, e2, w1, w2)
    assert tp.mass() == 16 == dim_simple_K(ctx, e2, w1) * dim_simple_K(ctx, e2, w2)
    assert tp == tp_lchar_K(ctx, e2, w2, w1)
    assert tp == tp_lchar_K(ctx, e2, w1, w2, threads=8)
    # singleton classes with indeg 1: plain bracket of the product
    one_w = LWeight.single(A1, Weight((1,)), tower.one())
    expected = bracket(ctx, simple_lchar_F(e2, one_w) * simple_lchar_F(e2, one_w))
    assert tp_lchar_K(ctx, e2, one_w, one_w) == expected
    # synthetic indeg scales every coefficient
    synth = SyntheticContext(base=ctx, default_indeg=2)
    assert tp_lchar_K(synth, e2, w1, w2) == tp.scale(4)


def test_characteristic_enforcement(f4):
    tower, ctx, e2 = f4
    e0 = char_zero_engine(A1)
    g = tower.gen()
    w = LWeight.single(A1, Weight((1,)), g)
    with pytest.raises(CharacteristicMismatch):
        simple_lchar_F(e0, w)
    assert simple_lchar_F(e0, w, allow_char_mismatch=True).mass() == 2
    with pytest.raises(CharacteristicMismatch):
        simple_lchar_K(ctx, e0, w)
    with pytest.raises(CharacteristicMismatch):
        simple_lchar_F(e2, LWeight.single(A1, Weight((1,)), Fraction(2)))
    # the identity works under any engine
    assert simple_lchar_F(e0, LWeight.identity(A1)) == LChar.unit(A1)
    assert simple_lchar_F(e2, LWeight.identity(A1)) == LChar.unit(A1)


def test_lchar_json_roundtrip(f4):
    tower, ctx, e2 = f4
    g = tower.gen()
    w = LWeight.single(A1, Weight((1,)), g)
    h = simple_lchar_F(e2, w)
    assert LChar.from_json(tower, h.to_json()) == h
    data = simple_lchar_K(ctx, e2, w).to_json()
    assert data["type"] == "A1"
    assert all(entry["coeff"] == 2 for entry in data["terms"])
