"""Characters of finite-dimensional g-modules and tensor decomposition.

A Character is a sparse integer combination of weights (fundamental-weight
coordinates).  A CharEngine bundles a Lie type, a characteristic (0 or a
prime p) and a provider mapping a dominant weight to the character of the
simple module with that highest weight:

* characteristic 0: Freudenthal's recursion, any type;
* characteristic p, rank 1: the twisted tensor factorization over the
  base-p digits of the highest weight;
* characteristic p, rank > 1: only through a user-supplied character
  table (the general modular problem is open and out of scope here).

Weyl-module characters (type A, or any type with a supplied fundamental
table) are products of characteristic-zero fundamental characters; they do
not depend on the characteristic, only their decomposition into simples
does.

Character tables are cached in memory per engine and, when the
LOOPMULT_CACHE environment variable names a directory, on disk as JSON
keyed by (type, characteristic, highest weight).
"""

from __future__ import annotations

import json
import os
import threading
from fractions import Fraction

from . import rootsys
from .errors import InvalidLieType, NotAModuleCharacter, UnsupportedType
from .rootsys import LieType, Weight

_CACHE_ENV = "LOOPMULT_CACHE"
_disk_lock = threading.Lock()


class Character:
    """Sparse Z-linear combination of weights; no zero entries are stored."""

    __slots__ = ("lie_type", "_terms")

    def __init__(self, lie_type: LieType, terms=None):
        self.lie_type = lie_type
        clean: dict[Weight, int] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for w, c in items:
                if not isinstance(w, Weight):
                    w = Weight(tuple(w))
                if len(w.coords) != lie_type.rank:
                    raise InvalidLieType(
                        f"weight {w} has wrong rank for {lie_type}")
                if c:
                    clean[w] = clean.get(w, 0) + c
                    if not clean[w]:
                        del clean[w]
        self._terms = clean

    @classmethod
    def unit(cls, lie_type: LieType) -> "Character":
        return cls(lie_type, {Weight.zero(lie_type.rank): 1})

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: kv[0].coords)

    def support(self):
        return set(self._terms)

    def __getitem__(self, w: Weight) -> int:
        return self._terms.get(w, 0)

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def mass(self) -> int:
        """Sum of coefficients; the dimension for a genuine module character."""
        return sum(self._terms.values())

    def __eq__(self, other):
        return (isinstance(other, Character) and self.lie_type == other.lie_type
                and self._terms == other._terms)

    def __add__(self, other: "Character") -> "Character":
        out = dict(self._terms)
        for w, c in other._terms.items():
            out[w] = out.get(w, 0) + c
        return Character(self.lie_type, out)

    def __sub__(self, other: "Character") -> "Character":
        out = dict(self._terms)
        for w, c in other._terms.items():
            out[w] = out.get(w, 0) - c
        return Character(self.lie_type, out)

    def scale(self, c: int) -> "Character":
        return Character(self.lie_type, {w: c * v for w, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        out: dict[Weight, int] = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                key = w1 + w2
                out[key] = out.get(key, 0) + c1 * c2
        return Character(self.lie_type, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Character":
        out = Character.unit(self.lie_type)
        for _ in range(e):
            out = out * self
        return out

    def to_json(self) -> dict:
        return {
            "type": str(self.lie_type),
            "char": {_wkey(w): c for w, c in self.items()},
        }

    @classmethod
    def from_json(cls, data: dict) -> "Character":
        t = LieType.parse(data["type"])
        terms = {Weight(tuple(json.loads(k))): int(v) for k, v in data["char"].items()}
        return cls(t, terms)

    def __repr__(self):
        inner = ", ".join(f"{_wkey(w)}:{c}" for w, c in self.items())
        return f"Character({self.lie_type}, {{{inner}}})"


def _wkey(w: Weight) -> str:
    return "[" + ",".join(str(c) for c in w.coords) + "]"


# ---------------------------------------------------------------------------
# characteristic zero: Freudenthal recursion and the Weyl dimension formula


def dominant_weights_below(t: LieType, lam: Weight) -> list[Weight]:
    """All dominant mu <= lam, enumerated from the simple-root coordinate box.

    lam - mu = sum c_i alpha_i with 0 <= c_i <= (Cinv*lam)_i because the
    inverse Cartan matrix of a finite type is entrywise nonnegative.
    """
    n = t.rank
    Cinv = rootsys.inverse_cartan(t)
    C = rootsys.cartan_matrix(t)
    bounds = []
    for i in range(n):
        b = sum(Cinv[i][j] * lam.coords[j] for j in range(n))
        bounds.append(int(b))  # floor; b >= 0 for dominant lam
    out = []
    c = [0] * n
    while True:
        coords = tuple(
            lam.coords[i] - sum(C[i][j] * c[j] for j in range(n)) for i in range(n)
        )
        if all(x >= 0 for x in coords):
            out.append(Weight(coords))
        # odometer over the box
        pos = 0
        while pos < n:
            c[pos] += 1
            if c[pos] <= bounds[pos]:
                break
            c[pos] = 0
            pos += 1
        if pos == n:
            break
    return out


def freudenthal_dominant(t: LieType, lam: Weight) -> dict[Weight, int]:
    """Multiplicities of the dominant weights of the simple module V(lam),
    characteristic zero, by Freudenthal's recursion."""
    if not lam.is_dominant():
        raise NotAModuleCharacter(f"{lam} is not dominant")
    n = t.rank
    S, _ = rootsys.gram_scaled(t)

    def form(u: tuple[int, ...], v: tuple[int, ...]) -> int:
        acc = 0
        for i in range(n):
            ui = u[i]
            if ui:
                row = S[i]
                acc += ui * sum(row[j] * v[j] for j in range(n))
        return acc

    rho = (1,) * n
    lam_rho = tuple(a + 1 for a in lam.coords)
    norm_top = form(lam_rho, lam_rho)
    roots = [r.coords for r in rootsys.positive_roots(t)]

    dominants = dominant_weights_below(t, lam)
    # process by decreasing height of mu (equivalently increasing height of
    # lam - mu) so everything above is known
    def depth(mu: Weight) -> int:
        rc = rootsys.root_coordinates(t, lam - mu)
        return int(sum(rc))

    dominants.sort(key=lambda mu: (depth(mu), mu.coords))
    mult: dict[tuple[int, ...], int] = {}

    def mult_of(coords: tuple[int, ...]) -> int:
        dom = rootsys.dominant_conjugate(t, Weight(coords)).coords
        return mult.get(dom, 0)

    for mu in dominants:
        if mu == lam:
            mult[mu.coords] = 1
            continue
        mu_rho = tuple(a + 1 for a in mu.coords)
        denom = norm_top - form(mu_rho, mu_rho)
        assert denom > 0, (t, lam, mu)
        rhs = 0
        for alpha in roots:
            k = 1
            while True:
                up = tuple(mu.coords[i] + k * alpha[i] for i in range(n))
                m_up = mult_of(up)
                if m_up == 0:
                    # weights of V(lam) above mu in direction alpha form an
                    # unbroken string, so the first zero ends the climb
                    break
                rhs += m_up * form(up, alpha)
                k += 1
        num = 2 * rhs
        assert num % denom == 0, (t, lam, mu, num, denom)
        mult[mu.coords] = num // denom
    return {Weight(c): m for c, m in mult.items() if m}


def simple_char_char0(t: LieType, lam: Weight) -> Character:
    """Full character of V(lam) in characteristic zero."""
    dom = freudenthal_dominant(t, lam)
    terms: dict[Weight, int] = {}
    for mu, m in dom.items():
        for w in rootsys.weyl_orbit(t, mu):
            terms[w] = m
    return Character(t, terms)


def simple_dim_char0(t: LieType, lam: Weight) -> int:
    """dim V(lam) from the Freudenthal table and Weyl orbit sizes."""
    dom = freudenthal_dominant(t, lam)
    return sum(m * rootsys.weyl_orbit_size(t, mu) for mu, m in dom.items())


def weyl_dim(t: LieType, lam: Weight) -> int:
    """Weyl dimension formula, exact."""
    if not lam.is_dominant():
        raise NotAModuleCharacter(f"{lam} is not dominant")
    num = Fraction(1)
    rho = rootsys.rho(t)
    lr = lam + rho
    for alpha in rootsys.positive_roots(t):
        num *= Fraction(rootsys.symmetric_form(t, lr, alpha),
                        rootsys.symmetric_form(t, rho, alpha))
    assert num.denominator == 1
    return int(num)


# ---------------------------------------------------------------------------
# characteristic p, rank 1: twisted tensor factorization over base-p digits


def simple_char_sl2_modp(m: int, p: int) -> Character:
    """Character of the simple sl2-module L(m) in characteristic p.

    Write m = sum m_k p^k with 0 <= m_k < p; then the character is the
    product over k of the degree-(m_k) string with weights scaled by p^k.
    """
    t = LieType("A", 1)
    if m < 0:
        raise NotAModuleCharacter(f"{m} is not dominant")
    out = Character.unit(t)
    digits = []
    mm = m
    while mm:
        mm, r = divmod(mm, p)
        digits.append(r)
    for k, mk in enumerate(digits):
        if mk == 0:
            continue
        scalepow = p ** k
        factor = Character(t, {Weight((scalepow * (mk - 2 * j),)): 1
                               for j in range(mk + 1)})
        out = out * factor
    return out


def steinberg_dim(m: int, p: int) -> int:
    dim = 1
    while m:
        m, r = divmod(m, p)
        dim *= r + 1
    return dim


# ---------------------------------------------------------------------------
# the engine


class CharEngine:
    """Simple-character provider for one (type, characteristic) pair."""

    def __init__(self, lie_type: LieType, characteristic: int = 0,
                 provider=None, fundamental_table: dict[int, Character] | None = None):
        if characteristic < 0 or characteristic == 1:
            raise UnsupportedType(f"characteristic {characteristic} is not 0 or a prime")
        self.lie_type = lie_type
        self.characteristic = characteristic
        self.fundamental_table = fundamental_table
        self._provider = provider
        self._memo: dict[Weight, Character] = {}
        self._tensor_memo: dict[tuple[Weight, Weight], dict[Weight, int]] = {}
        self._weyl_memo: dict[Weight, Character] = {}
        self._weyl_decomp_memo: dict[Weight, dict[Weight, int]] = {}

    def _compute(self, lam: Weight) -> Character:
        if self._provider is not None:
            return self._provider(lam)
        if self.characteristic == 0:
            return simple_char_char0(self.lie_type, lam)
        if self.lie_type == LieType("A", 1):
            return simple_char_sl2_modp(lam.coords[0], self.characteristic)
        raise UnsupportedType(
            f"no modular character table for {self.lie_type} in characteristic "
            f"{self.characteristic}; supply a provider or character table")

    def simple_char(self, lam: Weight) -> Character:
        if not lam.is_dominant():
            raise NotAModuleCharacter(f"{lam} is not dominant")
        if lam not in self._memo:
            cached = _disk_load(self.lie_type, self.characteristic, lam)
            if cached is None:
                cached = self._compute(lam)
                _disk_store(self.lie_type, self.characteristic, lam, cached)
            self._memo[lam] = cached
        return self._memo[lam]

    def dim(self, lam: Weight) -> int:
        return self.simple_char(lam).mass()

    def tensor_table(self, lam: Weight, mu: Weight) -> dict[Weight, int]:
        key = (lam, mu) if lam.coords <= mu.coords else (mu, lam)
        if key not in self._tensor_memo:
            self._tensor_memo[key] = decompose_char(
                self, self.simple_char(key[0]) * self.simple_char(key[1]))
        return self._tensor_memo[key]

    def weyl_gchar(self, lam: Weight) -> Character:
        if lam not in self._weyl_memo:
            self._weyl_memo[lam] = weyl_module_gchar(self, lam)
        return self._weyl_memo[lam]

    def weyl_decomposition(self, lam: Weight) -> dict[Weight, int]:
        """Multiplicities of simples in the Weyl-module character, taken in
        this engine's characteristic."""
        if lam not in self._weyl_decomp_memo:
            self._weyl_decomp_memo[lam] = decompose_char(self, self.weyl_gchar(lam))
        return self._weyl_decomp_memo[lam]

    def __repr__(self):
        return f"CharEngine({self.lie_type}, char={self.characteristic})"


def char_zero_engine(t: LieType) -> CharEngine:
    return CharEngine(t, 0)


def modular_engine(t: LieType, p: int, provider=None,
                   fundamental_table=None) -> CharEngine:
    return CharEngine(t, p, provider=provider, fundamental_table=fundamental_table)


# ---------------------------------------------------------------------------
# decomposition and tensor products


def decompose_char(e: CharEngine, chi: Character) -> dict[Weight, int]:
    """Write chi as a nonnegative combination of simple characters of e.

    Repeatedly pick a dominance-maximal support weight (ties broken by
    lexicographically largest coordinate vector), require it dominant with
    positive coefficient, subtract.  Raises NotAModuleCharacter when chi is
    not a genuine module character for this engine.
    """
    t = e.lie_type
    work = dict(chi._terms)
    out: dict[Weight, int] = {}
    guard = sum(abs(c) for c in work.values()) + 1
    while work:
        guard -= 1
        if guard < 0:
            raise NotAModuleCharacter("subtraction did not terminate")
        support = list(work)
        maximal = [
            w for w in support
            if not any(w != v and rootsys.dominance_leq(t, w, v) for v in support)
        ]
        pick = max(maximal, key=lambda w: w.coords)
        if not pick.is_dominant():
            raise NotAModuleCharacter(f"maximal weight {pick} is not dominant")
        c = work[pick]
        if c < 0:
            raise NotAModuleCharacter(f"negative multiplicity {c} at {pick}")
        out[pick] = out.get(pick, 0) + c
        for w, v in e.simple_char(pick)._terms.items():
            nv = work.get(w, 0) - c * v
            if nv:
                work[w] = nv
            else:
                work.pop(w, None)
    return out


def tensor_mult_g(e: CharEngine, lam: Weight, mu: Weight) -> dict[Weight, int]:
    """Decomposition of V(lam) (x) V(mu) in the engine's characteristic."""
    return e.tensor_table(lam, mu)


_char0_fund_cache: dict[tuple[LieType, int], Character] = {}


def _char0_fundamental(t: LieType, i: int) -> Character:
    key = (t, i)
    if key not in _char0_fund_cache:
        _char0_fund_cache[key] = simple_char_char0(t, Weight.fundamental(t.rank, i))
    return _char0_fund_cache[key]


def weyl_module_gchar(e: CharEngine, lam: Weight) -> Character:
    """g-character of the local Weyl module with highest loop weight built
    on lam; independent of the characteristic.

    Type A: product of characteristic-zero fundamental characters,
    one factor per unit of each coordinate.  Other families need a
    user-supplied fundamental table on the engine.
    """
    t = e.lie_type
    if not lam.is_dominant():
        raise NotAModuleCharacter(f"{lam} is not dominant")
    if e.fundamental_table is not None:
        fund = lambda i: e.fundamental_table[i]  # noqa: E731
    elif t.family == "A":
        fund = lambda i: _char0_fundamental(t, i)  # noqa: E731
    else:
        raise UnsupportedType(
            f"Weyl-module characters for {t} need a fundamental character table")
    out = Character.unit(t)
    for i, c in enumerate(lam.coords):
        if c:
            out = out * (fund(i) ** c)
    return out


# ---------------------------------------------------------------------------
# disk cache


def _cache_dir() -> str | None:
    return os.environ.get(_CACHE_ENV) or None


def _cache_path(t: LieType, char: int, lam: Weight) -> str | None:
    base = _cache_dir()
    if base is None:
        return None
    name = f"{t}_p{char}_" + "_".join(str(c) for c in lam.coords) + ".json"
    return os.path.join(base, name)


def _disk_load(t: LieType, char: int, lam: Weight) -> Character | None:
    path = _cache_path(t, char, lam)
    if path is None or not os.path.exists(path):
        return None
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        return Character.from_json(data)
    except (OSError, ValueError, KeyError):
        return None


def _disk_store(t: LieType, char: int, lam: Weight, chi: Character):
    path = _cache_path(t, char, lam)
    if path is None:
        return
    with _disk_lock:
        os.makedirs(os.path.dirname(path), exist_ok=True)
        tmp = path + ".tmp"
        with open(tmp, "w", encoding="utf-8") as fh:
            json.dump(chi.to_json(), fh, sort_keys=True)
        os.replace(tmp, path)
