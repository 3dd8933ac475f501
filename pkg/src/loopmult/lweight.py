"""Canonical loop weights: finitely supported maps parameter -> weight.

A loop weight stands for the tuple of rational functions whose i-th
coordinate is prod_a (1 - a*u)^{mu_a(h_i)}, where the product runs over
the (finitely many) spectral parameters a in the support and mu_a is the
weight stored there.  The factored map is the canonical form; polynomial
tuples are an I/O format recovered by to_poly_tuple.

Parameters are normally FieldElem values from one tower, but any nonzero
hashable scalar with ring arithmetic (e.g. Fraction, for characteristic
zero cross-checks against the series oracles) is accepted; tower
consistency is enforced whenever actual field elements are involved.
"""

from __future__ import annotations

from typing import Iterable

from .errors import (
    ConstantTermNotOne,
    InvalidLieType,
    LoopmultError,
    RootOutsideAmbientField,
    TowerMismatch,
    ZeroSpectralParameter,
)
from .galois import FieldElem, FieldTower, GaloisContext
from .parsing import parse_poly_tuple, poly_u_str
from .rootsys import LieType, Weight, root_monoid_coeffs


def _param_is_zero(a) -> bool:
    if isinstance(a, FieldElem):
        return a.is_zero()
    return a == 0


def _param_key(a):
    if isinstance(a, FieldElem):
        return a.sort_key()
    return a


def _param_str(a) -> str:
    return str(a)


class LWeight:
    """Immutable loop weight over a fixed Lie type."""

    __slots__ = ("lie_type", "_support", "_hash")

    def __init__(self, lie_type: LieType, support=None):
        clean = {}
        tower = None
        for a, mu in dict(support or {}).items():
            if _param_is_zero(a):
                raise ZeroSpectralParameter("spectral parameters must be nonzero")
            if isinstance(a, FieldElem):
                if tower is None:
                    tower = a.tower
                elif a.tower != tower:
                    raise TowerMismatch("loop weight parameters from different towers")
            if not isinstance(mu, Weight):
                mu = Weight(tuple(mu))
            if mu.rank != lie_type.rank:
                raise InvalidLieType(
                    f"weight rank {mu.rank} does not match {lie_type}")
            if not mu.is_zero():
                clean[a] = mu
        self.lie_type = lie_type
        self._support = clean
        self._hash = hash((lie_type, frozenset(clean.items())))

    # -- constructors ---------------------------------------------------------
    @classmethod
    def identity(cls, lie_type: LieType) -> "LWeight":
        return cls(lie_type, {})

    @classmethod
    def single(cls, lie_type: LieType, mu: Weight, a) -> "LWeight":
        """The loop weight with coordinate tuple (1 - a*u)^{mu(h_i)}."""
        return cls(lie_type, {a: mu})

    # -- access ---------------------------------------------------------------
    def items(self) -> tuple:
        return tuple(sorted(self._support.items(), key=lambda kv: _param_key(kv[0])))

    def params(self) -> tuple:
        return tuple(a for a, _ in self.items())

    def weight_at(self, a) -> Weight:
        return self._support.get(a, Weight.zero(self.lie_type.rank))

    @property
    def support_size(self) -> int:
        return len(self._support)

    def is_identity(self) -> bool:
        return not self._support

    def tower(self) -> FieldTower | None:
        for a in self._support:
            if isinstance(a, FieldElem):
                return a.tower
        return None

    # -- group structure --------------------------------------------------------
    def mul(self, other: "LWeight") -> "LWeight":
        if other.lie_type != self.lie_type:
            raise InvalidLieType("loop weights of different types")
        merged = dict(self._support)
        for a, mu in other._support.items():
            merged[a] = merged[a] + mu if a in merged else mu
        return LWeight(self.lie_type, merged)

    def __mul__(self, other):
        if not isinstance(other, LWeight):
            return NotImplemented
        return self.mul(other)

    def inv(self) -> "LWeight":
        return LWeight(self.lie_type, {a: -mu for a, mu in self._support.items()})

    def __pow__(self, e: int) -> "LWeight":
        base = self if e >= 0 else self.inv()
        out = LWeight.identity(self.lie_type)
        for _ in range(abs(e)):
            out = out.mul(base)
        return out

    # -- structure ---------------------------------------------------------------
    def wt(self) -> Weight:
        total = Weight.zero(self.lie_type.rank)
        for mu in self._support.values():
            total = total + mu
        return total

    def is_dominant(self) -> bool:
        return all(mu.is_dominant() for mu in self._support.values())

    def galois_conjugate(self) -> "LWeight":
        """Apply the tower Frobenius x -> x^q to every parameter."""
        return LWeight(self.lie_type,
                       {a.frobenius(): mu for a, mu in self._support.items()})

    # -- identity/ordering ------------------------------------------------------
    def __eq__(self, other):
        return (isinstance(other, LWeight) and self.lie_type == other.lie_type
                and self._support == other._support)

    def __hash__(self):
        return self._hash

    def sort_key(self):
        return tuple((_param_key(a), mu.coords) for a, mu in self.items())

    def __str__(self):
        if not self._support:
            return "1"
        return "{" + "; ".join(f"{_param_str(a)}:{list(mu.coords)}"
                               for a, mu in self.items()) + "}"

    def __repr__(self):
        return f"LWeight({self.lie_type}, {self})"

    # -- serialization ------------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "type": str(self.lie_type),
            "support": [{"param": _param_str(a), "weight": mu.to_json()}
                        for a, mu in self.items()],
        }

    @classmethod
    def from_json(cls, tower: FieldTower, data: dict) -> "LWeight":
        from .parsing import parse_scalar
        t = LieType.parse(data["type"])
        support = {}
        for entry in data["support"]:
            a = parse_scalar(tower, entry["param"])
            mu = Weight.from_json(entry["weight"])
            support[a] = support.get(a, Weight.zero(t.rank)) + mu
        return cls(t, support)


# ---------------------------------------------------------------------------
# polynomial tuple I/O


def from_poly_tuple(lie_type: LieType, tower: FieldTower, polys) -> LWeight:
    """Factor a tuple of polynomials (coefficients constant-first) into a
    loop weight.  Every coordinate must have constant term 1 and split
    into linear factors over the ambient field."""
    polys = list(polys)
    if len(polys) != lie_type.rank:
        raise InvalidLieType(
            f"{lie_type} needs {lie_type.rank} coordinates, got {len(polys)}")
    zero = tower.zero()
    mults: dict[FieldElem, list[int]] = {}
    for i, raw in enumerate(polys):
        coeffs = [c if isinstance(c, FieldElem) else tower.element([c]) for c in raw]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        if not coeffs or not coeffs[0].is_one():
            raise ConstantTermNotOne(f"coordinate {i} must have constant term 1")
        for a in tower.nonzero_elements():
            if len(coeffs) == 1:
                break
            root = a.inverse()
            while len(coeffs) > 1:
                value = coeffs[-1]
                for c in reversed(coeffs[:-1]):
                    value = value * root + c
                if value != zero:
                    break
                # exact division by (1 - a*u): q_j = p_j + a*q_{j-1}
                q = [coeffs[0]]
                for j in range(1, len(coeffs) - 1):
                    q.append(coeffs[j] + a * q[j - 1])
                coeffs = q
                mults.setdefault(a, [0] * lie_type.rank)[i] += 1
        if len(coeffs) > 1:
            rem = poly_u_str(coeffs)
            raise RootOutsideAmbientField(
                f"coordinate {i} has a factor with no root in the ambient "
                f"field: {rem}", remainder=rem)
    return LWeight(lie_type, {a: Weight(tuple(v)) for a, v in mults.items()})


def to_poly_tuple(w: LWeight, tower: FieldTower | None = None) -> tuple:
    """Inverse of from_poly_tuple on dominant loop weights."""
    if not w.is_dominant():
        raise LoopmultError("only dominant loop weights are polynomial tuples")
    tower = w.tower() or tower
    if tower is None:
        raise LoopmultError("tower required to serialize the identity loop weight")
    out = []
    for i in range(w.lie_type.rank):
        coeffs = [tower.one()]
        for a, mu in w.items():
            for _ in range(mu.coords[i]):
                nxt = [coeffs[0]]
                for j in range(1, len(coeffs)):
                    nxt.append(coeffs[j] - a * coeffs[j - 1])
                nxt.append(-(a * coeffs[-1]))
                coeffs = nxt
        out.append(tuple(coeffs))
    return tuple(out)


def parse_lweight(lie_type: LieType, tower: FieldTower, text: str) -> LWeight:
    """Parse "[1+g*u][1]"-style input into a loop weight."""
    return from_poly_tuple(lie_type, tower, parse_poly_tuple(tower, text))


# ---------------------------------------------------------------------------
# order, factorization, series


def leq_qplus(smaller: LWeight, larger: LWeight) -> bool:
    """Partial order: smaller <= larger iff at every parameter the local
    exponent of larger/smaller is a nonnegative integer combination of
    simple roots."""
    if smaller.lie_type != larger.lie_type:
        raise InvalidLieType("loop weights of different types")
    quotient = larger.mul(smaller.inv())
    return all(root_monoid_coeffs(quotient.lie_type, mu) is not None
               for _, mu in quotient.items())


def standard_factorization(w: LWeight) -> list:
    """A dominant loop weight as an ordered list of (weight, parameter)
    pairs with pairwise distinct parameters."""
    if not w.is_dominant():
        raise LoopmultError("standard factorization requires a dominant loop weight")
    return [(mu, a) for a, mu in w.items()]


def relatively_prime(w1: LWeight, w2: LWeight) -> bool:
    """Disjoint parameter supports (dominant inputs)."""
    if not (w1.is_dominant() and w2.is_dominant()):
        raise LoopmultError("relative primality is defined for dominant loop weights")
    return not set(w1.params()) & set(w2.params())


def truncated_series(factors: Iterable, order: int, one):
    """Coefficients 0..order of prod (1 - a*u)^e over (a, e) in factors.

    Works over any commutative ring given its unit; negative exponents
    expand geometrically."""
    coeffs = [one] + [one - one] * order
    for a, e in factors:
        for _ in range(e if e > 0 else -e):
            if e > 0:
                for j in range(order, 0, -1):
                    coeffs[j] = coeffs[j] - a * coeffs[j - 1]
            else:
                for j in range(1, order + 1):
                    coeffs[j] = coeffs[j] + a * coeffs[j - 1]
    return coeffs


def lambda_coefficients(w: LWeight, i: int, order: int, one=None):
    """Truncated power series of coordinate i of w.

    ``one`` (the ring unit) is required when the support is empty and is
    otherwise derived from the parameters."""
    if one is None:
        params = w.params()
        if not params:
            raise LoopmultError("pass the ring unit to expand the identity")
        one = params[0] ** 0
    return truncated_series(((a, mu.coords[i]) for a, mu in w.items()), order, one)


def class_product_count(ctx: GaloisContext, w: LWeight, w1: LWeight, w2: LWeight) -> int:
    """Number of pairs in orbit(w1) x orbit(w2) whose product is w."""
    orbit2 = list(ctx.orbit(w2))
    return sum(1 for x in ctx.orbit(w1) for y in orbit2 if x.mul(y) == w)
