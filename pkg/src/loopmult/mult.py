"""Multiplicity formulas over F and over K.

Every public entry point returns a MultReport whose value was computed by
a formula route and, whenever a second independent route exists, verified
against it; a mismatch raises FormulaDisagreement instead of returning.
K-side values arise from F-side ones through exact integer ratios of
inner degrees / degrees, with divisibility asserted (a remainder can only
mean a bug or an out-of-contract input, never a rounding situation).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import FormulaDisagreement, NonIntegerMultiplicity
from .galois import GaloisContext
from .gchar import CharEngine
from .lchar import (
    _ctx_char,
    decompose_lchar_F,
    dim_simple_F,
    lweight_characteristic,
    mul_lchar,
    require_characteristic,
    simple_lchar_F,
    weyl_lchar_F,
)
from .lweight import LWeight, class_product_count, standard_factorization

METHOD_ORBIT = "orbit_formula"
METHOD_LCHAR = "lchar_decomposition"
METHOD_CLASS_COUNT = "class_count"


@dataclass
class MultReport:
    """A multiplicity plus how it was obtained and re-derived."""

    value: int
    method: str
    conditional: bool = False
    cross_checks: list = field(default_factory=list)

    def check(self, method: str, value: int):
        if value != self.value:
            raise FormulaDisagreement(
                f"{self.method} gave {self.value} but {method} gave {value}")
        self.cross_checks.append((method, value))

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "method": self.method,
            "conditional": self.conditional,
            "cross_checks": [[m, v] for m, v in self.cross_checks],
        }


def _exact_div(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise NonIntegerMultiplicity(f"{what}: {num} is not divisible by {den}")
    return q


# ---------------------------------------------------------------------------
# Clebsch-Gordan


def _cg_F_value(e: CharEngine, w: LWeight, w1: LWeight, w2: LWeight) -> int:
    """Per-parameter product formula, no cross-check."""
    params = set(w1.params()) | set(w2.params())
    if any(a not in params for a in w.params()):
        return 0
    value = 1
    for a in params:
        local = e.tensor_table(w1.weight_at(a), w2.weight_at(a))
        value *= local.get(w.weight_at(a), 0)
        if not value:
            return 0
    return value


def cg_F(e: CharEngine, w: LWeight, w1: LWeight, w2: LWeight,
         allow_char_mismatch: bool = False) -> MultReport:
    """Multiplicity of the simple with highest loop weight w inside the
    F-side tensor product of the simples for w1 and w2: the product over
    parameters of the local tensor coefficients, cross-checked by a full
    loop character decomposition."""
    require_characteristic(e, lweight_characteristic(w1.mul(w2)), allow_char_mismatch)
    report = MultReport(_cg_F_value(e, w, w1, w2), METHOD_ORBIT)
    product = mul_lchar(simple_lchar_F(e, w1, allow_char_mismatch=True),
                        simple_lchar_F(e, w2, allow_char_mismatch=True))
    table = decompose_lchar_F(e, product, allow_char_mismatch=True)
    report.check(METHOD_LCHAR, table.get(w, 0))
    return report


def cg_K(ctx: GaloisContext, e: CharEngine, w: LWeight, w1: LWeight, w2: LWeight,
         allow_char_mismatch: bool = False) -> MultReport:
    """K-side Clebsch-Gordan: the inner-degree ratio times the double sum
    of F-side multiplicities over the two orbits; when the classical
    weights match, the independent pair count re-derives the value."""
    require_characteristic(e, _ctx_char(ctx, w1.mul(w2)), allow_char_mismatch)
    total = sum(_cg_F_value(e, w, x, y)
                for x in ctx.orbit(w1) for y in ctx.orbit(w2))
    num = ctx.indeg(w1) * ctx.indeg(w2) * total
    value = _exact_div(num, ctx.indeg(w), "K-side Clebsch-Gordan")
    report = MultReport(value, METHOD_ORBIT)
    if w.wt() == w1.wt() + w2.wt():
        count = class_product_count(ctx, w, w1, w2)
        check = _exact_div(ctx.indeg(w1) * ctx.indeg(w2) * count, ctx.indeg(w),
                           "K-side Clebsch-Gordan pair count")
        report.check(METHOD_CLASS_COUNT, check)
    return report


def tensor_K_irreducible(ctx: GaloisContext, e: CharEngine, w1: LWeight, w2: LWeight,
                         allow_char_mismatch: bool = False) -> bool:
    """Whether the K-side tensor product of the simples for w1 and w2 is
    again simple (with highest loop weight w1*w2): the F-side product must
    be simple and the degree must be multiplicative."""
    require_characteristic(e, _ctx_char(ctx, w1.mul(w2)), allow_char_mismatch)
    prod = w1.mul(w2)
    if _cg_F_value(e, prod, w1, w2) != 1:
        return False
    if dim_simple_F(e, w1, True) * dim_simple_F(e, w2, True) != \
            dim_simple_F(e, prod, True):
        return False
    return ctx.deg(prod) == ctx.deg(w1) * ctx.deg(w2)


def tensor_constituent_reps(ctx: GaloisContext, e: CharEngine,
                            w1: LWeight, w2: LWeight,
                            allow_char_mismatch: bool = False) -> list:
    """Class representatives of every simple constituent of the K-side
    tensor product, in canonical row order (classical weight, then
    encoding)."""
    require_characteristic(e, _ctx_char(ctx, w1.mul(w2)), allow_char_mismatch)
    t = e.lie_type
    reps = set()
    for x in ctx.orbit(w1):
        for y in ctx.orbit(w2):
            params = sorted(set(x.params()) | set(y.params()),
                            key=lambda a: a.sort_key() if hasattr(a, "sort_key") else a)
            locals_ = [[(a, nu) for nu in e.tensor_table(x.weight_at(a), y.weight_at(a))]
                       for a in params]
            for combo in itertools.product(*locals_):
                w = LWeight(t, dict(combo))
                reps.add(ctx.orbit(w).representative)
    return sorted(reps, key=lambda w: (w.wt().coords, w.sort_key()))


# ---------------------------------------------------------------------------
# Weyl module Jordan-Hoelder multiplicities


def _weyl_F_value(e: CharEngine, w: LWeight, w1: LWeight) -> int:
    params = set(w.params())
    if any(a not in params for a in w1.params()):
        return 0
    value = 1
    for lam, a in standard_factorization(w):
        value *= e.weyl_decomposition(lam).get(w1.weight_at(a), 0)
        if not value:
            return 0
    return value


def weyl_mult_F(e: CharEngine, w: LWeight, w1: LWeight,
                allow_char_mismatch: bool = False) -> MultReport:
    """Multiplicity of the simple for w1 in a composition series of the
    F-side local Weyl module for w: the product over w's parameters of
    the g-side Weyl decomposition numbers, cross-checked through the loop
    character route.  Positive-characteristic values are conditional."""
    require_characteristic(e, lweight_characteristic(w), allow_char_mismatch)
    report = MultReport(_weyl_F_value(e, w, w1), METHOD_ORBIT,
                        conditional=e.characteristic > 0)
    table = decompose_lchar_F(e, weyl_lchar_F(e, w, allow_char_mismatch=True),
                              allow_char_mismatch=True)
    report.check(METHOD_LCHAR, table.get(w1, 0))
    return report


def weyl_mult_K(ctx: GaloisContext, e: CharEngine, w: LWeight, w1: LWeight,
                allow_char_mismatch: bool = False) -> MultReport:
    """K-side Weyl multiplicity by both dual orbit formulas; they must
    agree exactly and the result must be an exact integer."""
    require_characteristic(e, _ctx_char(ctx, w), allow_char_mismatch)
    sum1 = sum(_weyl_F_value(e, x, w1) for x in ctx.orbit(w))
    value = _exact_div(ctx.indeg(w) * sum1, ctx.indeg(w1),
                       "K-side Weyl multiplicity (inner-degree form)")
    sum2 = sum(_weyl_F_value(e, w, y) for y in ctx.orbit(w1))
    dual = _exact_div(ctx.deg(w) * sum2, ctx.deg(w1),
                      "K-side Weyl multiplicity (degree form)")
    report = MultReport(value, METHOD_ORBIT, conditional=e.characteristic > 0)
    report.check(METHOD_ORBIT, dual)
    return report


def weyl_constituent_reps(ctx: GaloisContext, e: CharEngine, w: LWeight,
                          allow_char_mismatch: bool = False) -> list:
    """Class representatives of the simple constituents of the K-side
    Weyl module for w, in canonical row order."""
    require_characteristic(e, _ctx_char(ctx, w), allow_char_mismatch)
    t = e.lie_type
    reps = set()
    for x in ctx.orbit(w):
        locals_ = [[(a, mu) for mu in e.weyl_decomposition(lam)]
                   for lam, a in standard_factorization(x)]
        for combo in itertools.product(*locals_):
            v = LWeight(t, dict(combo))
            reps.add(ctx.orbit(v).representative)
    return sorted(reps, key=lambda v: (v.wt().coords, v.sort_key()))
