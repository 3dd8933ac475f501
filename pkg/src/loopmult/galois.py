"""Finite field towers F_q inside F_{q^N} and Galois orbit contexts.

A tower is determined by (p, k, ambient): the base field K = F_q with
q = p^k, realized inside the ambient computation field F_{q^N} as
F_p[x]/(f) where f is the deterministic modulus of degree k*N over F_p.
"Deterministic" means: enumerate monic polynomials of degree k*N by
ascending lexicographic order of their coefficient vector (constant term
first) and take the first irreducible one.  Elements are coefficient
vectors over the prime field; the ring generator g is the class of x.

The ambient field plays the role of an algebraic closure: callers choose
N as the lcm of the degrees of the spectral parameters they care about,
which is always possible at desk scale (the order q^N is capped at 2^24).

A Galois context answers orbit/degree questions about loop weights.  The
finite-field context uses the Frobenius x -> x^q and always has
inner degree 1.  The synthetic context is a test-only stand-in that can
declare inner degrees > 1 (no concrete finite field exhibits them); it
either carries an explicit orbit table or delegates orbits to a base
context, and deg = |orbit| * indeg by definition.
"""

from __future__ import annotations

import abc
import functools
from dataclasses import dataclass

from .errors import LoopmultError, TowerMismatch

_ORDER_CAP = 2 ** 24


# ---------------------------------------------------------------------------
# dense polynomial arithmetic over F_p (coefficient lists, constant first)

def _ptrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _ptrim(out)


def _pmod(a, m, p):
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], -1, p)
    while len(a) - 1 >= dm and a:
        if a[-1] == 0:
            a.pop()
            continue
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, y in enumerate(m):
            a[shift + i] = (a[shift + i] - c * y) % p
        _ptrim(a)
    return a


def _pgcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _ppow_x(e: int, m, p):
    """x^e mod m over F_p by square and multiply."""
    result = [1]
    base = _pmod([0, 1], m, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), m, p)
        base = _pmod(_pmul(base, base, p), m, p)
        e >>= 1
    return result


def _psub(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _ptrim([(x - y) % p for x, y in zip(a, b)])


def _is_irreducible(f, p) -> bool:
    """Rabin test: f (monic, degree d) is irreducible over F_p iff
    x^(p^d) = x mod f and gcd(x^(p^(d/r)) - x, f) = 1 for prime r | d."""
    d = len(f) - 1
    if d < 1:
        return False
    x = [0, 1]
    if _psub(_ppow_x(p ** d, f, p), x, p):
        return False
    dd = d
    primes = []
    n = 2
    while n * n <= dd:
        if dd % n == 0:
            primes.append(n)
            while dd % n == 0:
                dd //= n
        n += 1
    if dd > 1:
        primes.append(dd)
    for r in primes:
        diff = _psub(_ppow_x(p ** (d // r), f, p), x, p)
        g = _pgcd(f, diff, p)
        if len(g) != 1:
            return False
    return True


@functools.lru_cache(maxsize=None)
def _smallest_irreducible(p: int, d: int) -> tuple[int, ...]:
    """First irreducible monic degree-d polynomial over F_p in lex order
    of (c_0, ..., c_{d-1})."""
    if d == 1:
        return (0, 1)  # x itself
    for n in range(p ** d):
        coeffs = []
        m = n
        for _ in range(d):
            m, r = divmod(m, p)
            coeffs.append(r)
        # lex order on (c_0, ..., c_{d-1}) = ascending n with c_0 the
        # MOST significant digit, so decode accordingly
        coeffs = coeffs[::-1]
        f = coeffs + [1]
        if _is_irreducible(f, p):
            return tuple(f)
    raise LoopmultError(f"no irreducible of degree {d} over F_{p}")  # pragma: no cover


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


class FieldTower:
    """K = F_{p^k} inside the ambient field F_{(p^k)^N}."""

    __slots__ = ("p", "k", "ambient", "q", "degree", "order", "modulus")

    def __init__(self, p: int, k: int, ambient: int):
        if not _is_prime(p):
            raise LoopmultError(f"{p} is not prime")
        if k < 1 or ambient < 1:
            raise LoopmultError("k and ambient degree must be >= 1")
        if p ** (k * ambient) > _ORDER_CAP:
            raise LoopmultError(
                f"ambient field order {p}^{k * ambient} exceeds the 2^24 cap")
        self.p = p
        self.k = k
        self.ambient = ambient
        self.q = p ** k
        self.degree = k * ambient
        self.order = p ** self.degree
        self.modulus = _smallest_irreducible(p, self.degree)

    # -- element constructors ------------------------------------------------
    def element(self, coeffs) -> "FieldElem":
        rep = [c % self.p for c in coeffs]
        if len(rep) > self.degree:
            rep = _pmod(rep, list(self.modulus), self.p)
        rep = rep + [0] * (self.degree - len(rep))
        return FieldElem(self, tuple(rep[: self.degree]))

    def zero(self) -> "FieldElem":
        return self.element([])

    def one(self) -> "FieldElem":
        return self.element([1])

    def gen(self) -> "FieldElem":
        if self.degree == 1:
            # F_p itself: the modulus is x, so g = 0; use 1 instead so that
            # g is still a ring generator of the (prime) field.
            return self.one()
        return self.element([0, 1])

    def from_int(self, n: int) -> "FieldElem":
        """Element with base-p digit vector of n (enumeration helper)."""
        digits = []
        n %= self.order
        for _ in range(self.degree):
            n, r = divmod(n, self.p)
            digits.append(r)
        return self.element(digits)

    def elements(self):
        for n in range(self.order):
            yield self.from_int(n)

    def nonzero_elements(self):
        for n in range(1, self.order):
            yield self.from_int(n)

    def base_field_elements(self):
        return [x for x in self.elements() if x.in_base_field()]

    # -- misc -----------------------------------------------------------------
    @property
    def characteristic(self) -> int:
        return self.p

    def __eq__(self, other):
        return (isinstance(other, FieldTower)
                and (self.p, self.k, self.ambient) == (other.p, other.k, other.ambient))

    def __hash__(self):
        return hash((self.p, self.k, self.ambient))

    def __repr__(self):
        return f"FieldTower(p={self.p}, k={self.k}, ambient={self.ambient})"

    def describe(self) -> dict:
        return {
            "p": self.p,
            "k": self.k,
            "ambient": self.ambient,
            "modulus": _poly_str(self.modulus),
        }


def _poly_str(coeffs) -> str:
    terms = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if c == 0:
            continue
        if e == 0:
            terms.append(str(c))
        else:
            head = "" if c == 1 else str(c)
            terms.append(f"{head}x^{e}" if e > 1 else f"{head}x")
    return "+".join(terms) if terms else "0"


class FieldElem:
    """Element of a tower's ambient field, as a reduced coefficient vector."""

    __slots__ = ("tower", "rep")

    def __init__(self, tower: FieldTower, rep: tuple[int, ...]):
        self.tower = tower
        self.rep = rep

    def _coerce(self, other) -> "FieldElem":
        if isinstance(other, FieldElem):
            if other.tower != self.tower:
                raise TowerMismatch("elements from different towers")
            return other
        if isinstance(other, int):
            return self.tower.element([other])
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        p = self.tower.p
        return FieldElem(self.tower, tuple((a + b) % p for a, b in zip(self.rep, o.rep)))

    __radd__ = __add__

    def __neg__(self):
        p = self.tower.p
        return FieldElem(self.tower, tuple((-a) % p for a in self.rep))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        t = self.tower
        prod = _pmod(_pmul(list(self.rep), list(o.rep), t.p), list(t.modulus), t.p)
        prod = prod + [0] * (t.degree - len(prod))
        return FieldElem(t, tuple(prod))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElem":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        t = self.tower
        # extended Euclid over F_p[x], keeping s_i with s_i*self = r_i mod modulus
        r0, r1 = list(t.modulus), _ptrim(list(self.rep))
        s0, s1 = [], [1]
        while r1:
            q, r = _pdivmod(r0, r1, t.p)
            r0, r1 = r1, r
            s0, s1 = s1, _psub(s0, _pmul(q, s1, t.p), t.p)
        # r0 is the gcd, a nonzero constant since the modulus is irreducible
        c = pow(r0[0], -1, t.p)
        inv = _pmod([x * c % t.p for x in s0], list(t.modulus), t.p)
        inv = inv + [0] * (t.degree - len(inv))
        return FieldElem(t, tuple(inv))

    def __truediv__(self, other):
        o = self._coerce(other)
        return self * o.inverse()

    def __pow__(self, e: int):
        t = self.tower
        if e < 0:
            return self.inverse() ** (-e)
        result = t.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def frobenius(self) -> "FieldElem":
        """x -> x^q, the Galois generator over the base field."""
        return self ** self.tower.q

    def in_base_field(self) -> bool:
        return self.frobenius() == self

    def degree_over_base(self) -> int:
        """Smallest d >= 1 with x^{q^d} = x; divides the ambient degree."""
        cur = self
        for d in range(1, self.tower.ambient + 1):
            cur = cur.frobenius()
            if cur == self:
                return d
        raise LoopmultError("frobenius orbit did not close")  # pragma: no cover

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.rep)

    def is_one(self) -> bool:
        return self.rep[0] == 1 and all(c == 0 for c in self.rep[1:])

    def __eq__(self, other):
        return (isinstance(other, FieldElem) and self.tower == other.tower
                and self.rep == other.rep)

    def __hash__(self):
        return hash((self.tower, self.rep))

    def sort_key(self) -> tuple[int, ...]:
        return self.rep

    def __str__(self):
        terms = []
        for e in range(len(self.rep) - 1, -1, -1):
            c = self.rep[e]
            if c == 0:
                continue
            if e == 0:
                terms.append(str(c))
            elif e == 1:
                terms.append("g" if c == 1 else f"{c}g")
            else:
                terms.append(f"g^{e}" if c == 1 else f"{c}g^{e}")
        return "+".join(terms) if terms else "0"

    def __repr__(self):
        return f"<{self} over F_{self.tower.p}^{self.tower.degree}>"


def _pdivmod(a, b, p):
    a = list(a)
    q = [0] * max(1, len(a) - len(b) + 1)
    inv_lead = pow(b[-1], -1, p)
    while len(_ptrim(a)) >= len(b) and a:
        c = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        q[shift] = c
        for i, y in enumerate(b):
            a[shift + i] = (a[shift + i] - c * y) % p
        _ptrim(a)
    return _ptrim(q), a


# ---------------------------------------------------------------------------
# Galois contexts


@dataclass(frozen=True)
class ConjClass:
    """A Galois conjugacy class with canonically ordered members.

    Members are sorted by their encoding; the representative is the
    lexicographically smallest member.
    """

    members: tuple

    @property
    def representative(self):
        return self.members[0]

    @property
    def size(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


class GaloisContext(abc.ABC):
    """Answers orbit / degree / inner-degree questions about loop weights."""

    synthetic = False
    characteristic: int | None = None

    @abc.abstractmethod
    def orbit(self, lw) -> ConjClass:
        ...

    @abc.abstractmethod
    def indeg(self, lw) -> int:
        ...

    def deg(self, lw) -> int:
        return self.orbit(lw).size * self.indeg(lw)


class FiniteFieldContext(GaloisContext):
    """Galois orbits of the cyclic extension F_{q^N} / F_q.

    The base field is perfect, so the inner degree is always 1 and
    deg equals the orbit size, which is also the smallest d >= 1 such
    that the d-th Frobenius power fixes every coefficient of every
    coordinate series (the independent oracle recomputes it that way).
    """

    def __init__(self, tower: FieldTower):
        self.tower = tower
        self.characteristic = tower.p

    def orbit(self, lw) -> ConjClass:
        members = [lw]
        cur = lw.galois_conjugate()
        while cur != lw:
            members.append(cur)
            cur = cur.galois_conjugate()
        members.sort(key=lambda w: w.sort_key())
        return ConjClass(tuple(members))

    def indeg(self, lw) -> int:
        return 1

    def __repr__(self):
        return f"FiniteFieldContext({self.tower!r})"


class SyntheticContext(GaloisContext):
    """Test-only context that can declare inner degrees > 1.

    Either give an explicit ``orbit_table`` (iterable of member groups) or
    a ``base`` context whose orbits are reused.  ``indeg_table`` maps a
    class representative (or any member) to its inner degree; weights not
    listed get ``default_indeg``.  Results computed with a synthetic
    context are not statements about any actual field.
    """

    synthetic = True

    def __init__(self, orbit_table=None, indeg_table=None, base: GaloisContext | None = None,
                 default_indeg: int = 1):
        self._by_member = {}
        if orbit_table:
            for group in orbit_table:
                members = sorted(group, key=lambda w: w.sort_key())
                cls = ConjClass(tuple(members))
                for m in members:
                    self._by_member[m] = cls
        self._base = base
        self._indeg = {}
        if indeg_table:
            for w, value in dict(indeg_table).items():
                if value < 1:
                    raise LoopmultError("indeg must be >= 1")
                self._indeg[w] = int(value)
        if default_indeg < 1:
            raise LoopmultError("indeg must be >= 1")
        self._default_indeg = default_indeg
        self.characteristic = base.characteristic if base is not None else None

    def orbit(self, lw) -> ConjClass:
        if lw in self._by_member:
            return self._by_member[lw]
        if self._base is not None:
            return self._base.orbit(lw)
        raise LoopmultError(f"synthetic context has no orbit entry for {lw}")

    def indeg(self, lw) -> int:
        if lw in self._indeg:
            return self._indeg[lw]
        rep = self.orbit(lw).representative
        return self._indeg.get(rep, self._default_indeg)
