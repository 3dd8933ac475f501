"""Loop characters over F and over K.

An LChar is an integer combination of loop weights: the function sending
a loop weight to the dimension of its generalized eigenspace inside a
module.  Over the base field K the right habitat is the class level: a
ClassLChar assigns integers to Galois conjugacy classes (keyed by the
canonical representative).  There is no product on the class level, and
none is provided; K-side characters are produced by collapsing F-side
computations.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

from .errors import (
    CharacteristicMismatch,
    InvalidLieType,
    NotAnLCharacter,
)
from .galois import GaloisContext
from .gchar import CharEngine, Character
from .lweight import LWeight, leq_qplus, standard_factorization
from .rootsys import LieType, Weight


class LChar:
    """Finitely supported integer map on loop weights."""

    __slots__ = ("lie_type", "_terms")

    def __init__(self, lie_type: LieType, terms=None):
        clean = {}
        for w, c in dict(terms or {}).items():
            if w.lie_type != lie_type:
                raise InvalidLieType("loop weight of a different type")
            if c:
                clean[w] = c
        self.lie_type = lie_type
        self._terms = clean

    @classmethod
    def unit(cls, lie_type: LieType) -> "LChar":
        return cls(lie_type, {LWeight.identity(lie_type): 1})

    def items(self):
        return tuple(sorted(self._terms.items(), key=lambda kv: kv[0].sort_key()))

    def support(self):
        return tuple(w for w, _ in self.items())

    def __getitem__(self, w: LWeight) -> int:
        return self._terms.get(w, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def mass(self) -> int:
        return sum(self._terms.values())

    def __add__(self, other: "LChar") -> "LChar":
        merged = dict(self._terms)
        for w, c in other._terms.items():
            merged[w] = merged.get(w, 0) + c
        return LChar(self.lie_type, merged)

    def __sub__(self, other: "LChar") -> "LChar":
        return self + other.scale(-1)

    def scale(self, c: int) -> "LChar":
        return LChar(self.lie_type, {w: c * v for w, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, LChar):
            return NotImplemented
        out: dict[LWeight, int] = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                key = w1.mul(w2)
                out[key] = out.get(key, 0) + c1 * c2
        return LChar(self.lie_type, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, LChar) and self.lie_type == other.lie_type
                and self._terms == other._terms)

    def __repr__(self):
        inner = ", ".join(f"{w}:{c}" for w, c in self.items())
        return f"LChar({self.lie_type}, {{{inner}}})"

    def to_json(self) -> dict:
        return {
            "type": str(self.lie_type),
            "terms": [{"lweight": w.to_json(), "coeff": c} for w, c in self.items()],
        }

    @classmethod
    def from_json(cls, tower, data: dict) -> "LChar":
        t = LieType.parse(data["type"])
        terms = {}
        for entry in data["terms"]:
            w = LWeight.from_json(tower, entry["lweight"])
            terms[w] = terms.get(w, 0) + entry["coeff"]
        return cls(t, terms)


class ClassLChar:
    """Integer map on Galois conjugacy classes, keyed by representative."""

    __slots__ = ("lie_type", "_terms")

    def __init__(self, lie_type: LieType, terms=None):
        clean = {}
        for w, c in dict(terms or {}).items():
            if w.lie_type != lie_type:
                raise InvalidLieType("loop weight of a different type")
            if c:
                clean[w] = c
        self.lie_type = lie_type
        self._terms = clean

    def items(self):
        return tuple(sorted(self._terms.items(), key=lambda kv: kv[0].sort_key()))

    def support(self):
        return tuple(w for w, _ in self.items())

    def __getitem__(self, rep: LWeight) -> int:
        return self._terms.get(rep, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def mass(self) -> int:
        return sum(self._terms.values())

    def __add__(self, other: "ClassLChar") -> "ClassLChar":
        merged = dict(self._terms)
        for w, c in other._terms.items():
            merged[w] = merged.get(w, 0) + c
        return ClassLChar(self.lie_type, merged)

    def __sub__(self, other: "ClassLChar") -> "ClassLChar":
        return self + other.scale(-1)

    def scale(self, c: int) -> "ClassLChar":
        return ClassLChar(self.lie_type, {w: c * v for w, v in self._terms.items()})

    def __eq__(self, other):
        return (isinstance(other, ClassLChar) and self.lie_type == other.lie_type
                and self._terms == other._terms)

    def __repr__(self):
        inner = ", ".join(f"[{w}]:{c}" for w, c in self.items())
        return f"ClassLChar({self.lie_type}, {{{inner}}})"

    def to_json(self) -> dict:
        return {
            "type": str(self.lie_type),
            "terms": [{"class": w.to_json(), "coeff": c} for w, c in self.items()],
        }


# ---------------------------------------------------------------------------
# characteristic bookkeeping


def lweight_characteristic(w: LWeight) -> int | None:
    """0 for rational parameters, the tower characteristic for field ones,
    None when there are no parameters at all."""
    tower = w.tower()
    if tower is not None:
        return tower.p
    return None if w.is_identity() else 0


def require_characteristic(e: CharEngine, char: int | None, allow: bool = False):
    if char is None or allow:
        return
    if e.characteristic != char:
        raise CharacteristicMismatch(
            f"engine characteristic {e.characteristic} vs parameters in "
            f"characteristic {char}; pass allow_char_mismatch to override")


def _ctx_char(ctx: GaloisContext, w: LWeight) -> int | None:
    if ctx.characteristic is not None:
        return ctx.characteristic
    return lweight_characteristic(w)


# ---------------------------------------------------------------------------
# construction of module loop characters


def eval_module_lchar(e: CharEngine, lam: Weight, a) -> LChar:
    """Loop character of the pull-back of the simple g-module L(lam) along
    evaluation at a: every weight-mu line contributes the loop weight with
    coordinate tuple (1-a*u)^{mu(h_i)}."""
    t = e.lie_type
    return LChar(t, {LWeight.single(t, mu, a): m
                     for mu, m in e.simple_char(lam).items()})


def simple_lchar_F(e: CharEngine, w: LWeight, allow_char_mismatch: bool = False) -> LChar:
    """Loop character of the simple module with highest loop weight w over
    the ambient field: the product of evaluation factors over the standard
    factorization."""
    require_characteristic(e, lweight_characteristic(w), allow_char_mismatch)
    out = LChar.unit(e.lie_type)
    for mu, a in standard_factorization(w):
        out = out * eval_module_lchar(e, mu, a)
    return out


def dim_simple_F(e: CharEngine, w: LWeight, allow_char_mismatch: bool = False) -> int:
    require_characteristic(e, lweight_characteristic(w), allow_char_mismatch)
    dim = 1
    for mu, _ in standard_factorization(w):
        dim *= e.dim(mu)
    return dim


def mul_lchar(h1: LChar, h2: LChar) -> LChar:
    return h1 * h2


def weight_collapse(h: LChar) -> Character:
    out: dict[Weight, int] = {}
    for w, c in h.items():
        key = w.wt()
        out[key] = out.get(key, 0) + c
    return Character(h.lie_type, out)


def bracket(ctx: GaloisContext, h: LChar) -> ClassLChar:
    """Collapse an F-side character to the class level: the value at a
    class is the sum of values over its members."""
    out: dict[LWeight, int] = {}
    for w, c in h.items():
        rep = ctx.orbit(w).representative
        out[rep] = out.get(rep, 0) + c
    return ClassLChar(h.lie_type, out)


def simple_lchar_K(ctx: GaloisContext, e: CharEngine, w: LWeight,
                   allow_char_mismatch: bool = False) -> ClassLChar:
    """K-side simple loop character: deg(w) times the bracket of the
    F-side one."""
    require_characteristic(e, _ctx_char(ctx, w), allow_char_mismatch)
    f_side = simple_lchar_F(e, w, allow_char_mismatch=True)
    return bracket(ctx, f_side).scale(ctx.deg(w))


def dim_simple_K(ctx: GaloisContext, e: CharEngine, w: LWeight,
                 allow_char_mismatch: bool = False) -> int:
    require_characteristic(e, _ctx_char(ctx, w), allow_char_mismatch)
    return ctx.deg(w) * dim_simple_F(e, w, allow_char_mismatch=True)


def weyl_lchar_F(e: CharEngine, w: LWeight, allow_char_mismatch: bool = False) -> LChar:
    """Loop character of the local Weyl module: per parameter, the simple
    constituents are given by the g-side Weyl decomposition of the local
    weight; the whole module is the product over parameters."""
    require_characteristic(e, lweight_characteristic(w), allow_char_mismatch)
    out = LChar.unit(e.lie_type)
    for lam, a in standard_factorization(w):
        factor = LChar(e.lie_type)
        for mu, m in sorted(e.weyl_decomposition(lam).items(),
                            key=lambda kv: kv[0].coords):
            piece = simple_lchar_F(e, LWeight.single(e.lie_type, mu, a),
                                   allow_char_mismatch=True)
            factor = factor + piece.scale(m)
        out = out * factor
    return out


def dim_weyl_F(e: CharEngine, w: LWeight, allow_char_mismatch: bool = False) -> int:
    require_characteristic(e, lweight_characteristic(w), allow_char_mismatch)
    dim = 1
    for lam, _ in standard_factorization(w):
        dim *= e.weyl_gchar(lam).mass()
    return dim


def weyl_lchar_K(ctx: GaloisContext, e: CharEngine, w: LWeight,
                 allow_char_mismatch: bool = False) -> ClassLChar:
    require_characteristic(e, _ctx_char(ctx, w), allow_char_mismatch)
    f_side = weyl_lchar_F(e, w, allow_char_mismatch=True)
    return bracket(ctx, f_side).scale(ctx.deg(w))


# ---------------------------------------------------------------------------
# triangular decompositions


def _maximal_term(support, below):
    """Terms not strictly below another, then the lexicographically largest
    (classical weight, encoding) among them."""
    maximal = [w for w in support
               if not any(v != w and below(w, v) for v in support)]
    return max(maximal, key=lambda w: (w.wt().coords, w.sort_key()))


def decompose_lchar_F(e: CharEngine, h: LChar,
                      allow_char_mismatch: bool = False) -> dict[LWeight, int]:
    """Express a genuine F-side module loop character as a nonnegative sum
    of simple loop characters (multiplicities of the composition series)."""
    result: dict[LWeight, int] = {}
    remaining = h
    guard = sum(abs(c) for _, c in h.items()) + 1
    for _ in range(guard):
        if remaining.is_zero():
            return result
        top = _maximal_term(remaining.support(), leq_qplus)
        coeff = remaining[top]
        if coeff < 0 or not top.is_dominant():
            raise NotAnLCharacter(
                f"maximal term {top} has coefficient {coeff}"
                if coeff < 0 else f"maximal term {top} is not dominant")
        result[top] = coeff
        remaining = remaining - simple_lchar_F(e, top, allow_char_mismatch).scale(coeff)
    raise NotAnLCharacter("decomposition did not terminate")  # pragma: no cover


def class_leq(ctx: GaloisContext, rep1: LWeight, rep2: LWeight) -> bool:
    """Class order: some member of [rep1] lies below rep2 (Galois
    equivariance makes the choice of rep2's member irrelevant)."""
    return any(leq_qplus(m, rep2) for m in ctx.orbit(rep1))


def decompose_lchar_K(ctx: GaloisContext, e: CharEngine, h: ClassLChar,
                      allow_char_mismatch: bool = False) -> dict[LWeight, int]:
    """Class-level triangular decomposition into K-side simple loop
    characters.  At a maximal class the K-side character contributes
    exactly deg at its own class, so the multiplicity is the coefficient
    divided by deg (divisibility asserted)."""
    result: dict[LWeight, int] = {}
    remaining = h
    guard = sum(abs(c) for _, c in h.items()) + 1
    for _ in range(guard):
        if remaining.is_zero():
            return result
        top = _maximal_term(remaining.support(),
                            lambda x, y: class_leq(ctx, x, y))
        coeff = remaining[top]
        if coeff < 0 or not top.is_dominant():
            raise NotAnLCharacter(
                f"maximal class {top} has coefficient {coeff}"
                if coeff < 0 else f"maximal class {top} is not dominant")
        deg = ctx.deg(top)
        mult, rem = divmod(coeff, deg)
        if rem:
            raise NotAnLCharacter(
                f"coefficient {coeff} at maximal class {top} is not a "
                f"multiple of deg {deg}")
        result[top] = mult
        remaining = remaining - simple_lchar_K(ctx, e, top, allow_char_mismatch).scale(mult)
    raise NotAnLCharacter("decomposition did not terminate")  # pragma: no cover


# ---------------------------------------------------------------------------
# K-side tensor product


def tp_lchar_K(ctx: GaloisContext, e: CharEngine, w1: LWeight, w2: LWeight,
               threads: int = 1, allow_char_mismatch: bool = False) -> ClassLChar:
    """Loop character of the tensor product of two K-side simple modules:
    indeg(w1)*indeg(w2) times the bracket of the sum of all F-side
    products over the two orbits."""
    require_characteristic(e, _ctx_char(ctx, w1), allow_char_mismatch)
    orbit1, orbit2 = ctx.orbit(w1), ctx.orbit(w2)
    chars1 = [simple_lchar_F(e, x, allow_char_mismatch=True) for x in orbit1]
    chars2 = [simple_lchar_F(e, y, allow_char_mismatch=True) for y in orbit2]
    pairs = [(c1, c2) for c1 in chars1 for c2 in chars2]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            products = list(pool.map(lambda p: p[0] * p[1], pairs))
    else:
        products = [c1 * c2 for c1, c2 in pairs]
    total = LChar(e.lie_type)
    for prod in products:
        total = total + prod
    scale = ctx.indeg(w1) * ctx.indeg(w2)
    return bracket(ctx, total).scale(scale)
