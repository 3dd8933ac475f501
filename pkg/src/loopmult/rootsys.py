"""Root-system combinatorics for the finite Dynkin types A-G.

Conventions
-----------
Weights are written in fundamental-weight coordinates throughout: a weight
``mu`` is the integer vector ``(mu(h_1), ..., mu(h_n))``.  The Cartan matrix
follows Bourbaki numbering with the convention

    C[i][j] = alpha_j(h_i),

so the simple root ``alpha_j`` in weight coordinates is column ``j`` of C.
For the non simply-laced types the orientation is fixed once: B_n has its
short root last (row n-1 carries the -2), C_n is its transpose, F4 carries
the -2 in row 2 (0-indexed), and G2 is ``[[2,-1],[-3,2]]``.  Under the
convention above the G2 table makes vertex 0 the long root and vertex 1 the
short one; this is the documented orientation choice and is applied
consistently in the symmetrizers below.

The invariant form is normalized so short roots have squared length 2,
i.e. ``<alpha_i, mu> = d_i * mu(h_i)`` with symmetrizers ``d_i`` and
``min d_i = 1`` on every connected component.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidLieType

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 2, "E": 6, "F": 4, "G": 2}
_MAX_RANK = {"A": 64, "B": 64, "C": 64, "D": 64, "E": 8, "F": 4, "G": 2}

# |R+| for each family as a function of the rank, used as a cross-check.
_POSITIVE_ROOT_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


@dataclass(frozen=True, order=True)
class LieType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _MIN_RANK:
            raise InvalidLieType(f"unknown family {self.family!r}")
        lo, hi = _MIN_RANK[self.family], _MAX_RANK[self.family]
        if not (isinstance(self.rank, int) and lo <= self.rank <= hi):
            raise InvalidLieType(
                f"rank {self.rank} out of range [{lo}, {hi}] for family {self.family}"
            )

    @classmethod
    def parse(cls, text: str) -> "LieType":
        text = text.strip()
        if len(text) < 2 or not text[0].isalpha() or not text[1:].isdigit():
            raise InvalidLieType(f"cannot parse Lie type {text!r}")
        return cls(text[0].upper(), int(text[1:]))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True, order=True)
class Weight:
    """Integral weight in fundamental-weight coordinates."""

    coords: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.coords, tuple):
            object.__setattr__(self, "coords", tuple(self.coords))

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls((0,) * rank)

    @classmethod
    def fundamental(cls, rank: int, i: int) -> "Weight":
        return cls(tuple(1 if j == i else 0 for j in range(rank)))

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords))

    def scale(self, c: int) -> "Weight":
        return Weight(tuple(c * a for a in self.coords))

    @property
    def rank(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def is_dominant(self) -> bool:
        return all(a >= 0 for a in self.coords)

    def to_json(self) -> list[int]:
        return list(self.coords)

    @classmethod
    def from_json(cls, data) -> "Weight":
        return cls(tuple(int(x) for x in data))

    def __str__(self) -> str:
        return "[" + ",".join(str(a) for a in self.coords) + "]"


def _chain_matrix(n: int) -> list[list[int]]:
    C = [[0] * n for _ in range(n)]
    for i in range(n):
        C[i][i] = 2
        if i + 1 < n:
            C[i][i + 1] = -1
            C[i + 1][i] = -1
    return C


@functools.lru_cache(maxsize=None)
def cartan_matrix(t: LieType) -> tuple[tuple[int, ...], ...]:
    n = t.rank
    f = t.family
    if f == "A":
        C = _chain_matrix(n)
    elif f == "B":
        C = _chain_matrix(n)
        C[n - 1][n - 2] = -2
    elif f == "C":
        C = _chain_matrix(n)
        C[n - 2][n - 1] = -2
    elif f == "D":
        C = [[0] * n for _ in range(n)]
        for i in range(n):
            C[i][i] = 2
        # chain on 0..n-3, fork nodes n-2 and n-1 both attached to n-3
        for i in range(n - 3):
            C[i][i + 1] = C[i + 1][i] = -1
        if n >= 3:
            C[n - 3][n - 2] = C[n - 2][n - 3] = -1
            C[n - 3][n - 1] = C[n - 1][n - 3] = -1
    elif f == "E":
        # Bourbaki: chain 1-3-4-5-6(-7(-8)), node 2 attached to node 4.
        edges = [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)]
        if n >= 7:
            edges.append((5, 6))
        if n == 8:
            edges.append((6, 7))
        C = [[0] * n for _ in range(n)]
        for i in range(n):
            C[i][i] = 2
        for i, j in edges:
            C[i][j] = C[j][i] = -1
    elif f == "F":
        C = _chain_matrix(4)
        C[2][1] = -2
    elif f == "G":
        C = [[2, -1], [-3, 2]]
    else:  # pragma: no cover - guarded by LieType
        raise InvalidLieType(f.family)
    return tuple(tuple(row) for row in C)


@functools.lru_cache(maxsize=None)
def symmetrizers(t: LieType) -> tuple[int, ...]:
    """d_i with d_i*C[i][j] symmetric and min d_i = 1 per component."""
    C = cartan_matrix(t)
    n = t.rank
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        comp = [start]
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j != i and C[i][j] != 0 and d[j] is None:
                    d[j] = d[i] * C[i][j] / C[j][i]
                    comp.append(j)
                    stack.append(j)
        lo = min(d[i] for i in comp)
        for i in comp:
            d[i] = d[i] / lo
    out = tuple(int(x) for x in d)
    for i in range(n):
        for j in range(n):
            assert out[i] * C[i][j] == out[j] * C[j][i]
    return out


def _gauss_inverse(C) -> list[list[Fraction]]:
    n = len(C)
    aug = [[Fraction(C[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


@functools.lru_cache(maxsize=None)
def inverse_cartan(t: LieType) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(row) for row in _gauss_inverse(cartan_matrix(t)))


def simple_root(t: LieType, j: int) -> Weight:
    C = cartan_matrix(t)
    return Weight(tuple(C[i][j] for i in range(t.rank)))


@functools.lru_cache(maxsize=None)
def _simple_roots(t: LieType) -> tuple[Weight, ...]:
    return tuple(simple_root(t, j) for j in range(t.rank))


def _check_rank(t: LieType, mu: Weight):
    if mu.rank != t.rank:
        raise InvalidLieType(f"weight {mu} has rank {mu.rank}, expected {t.rank}")


@functools.lru_cache(maxsize=None)
def _root_coords_cached(t: LieType, coords: tuple[int, ...]):
    Cinv = inverse_cartan(t)
    return tuple(sum(Cinv[i][j] * coords[j] for j in range(t.rank)) for i in range(t.rank))


def root_coordinates(t: LieType, mu: Weight) -> tuple[Fraction, ...]:
    """Coordinates of mu in the simple-root basis (exact rationals)."""
    _check_rank(t, mu)
    return _root_coords_cached(t, mu.coords)


def root_monoid_coeffs(t: LieType, mu: Weight) -> tuple[int, ...] | None:
    """Nonnegative-integer simple-root coordinates of mu, or None."""
    rc = root_coordinates(t, mu)
    out = []
    for x in rc:
        if x.denominator != 1 or x < 0:
            return None
        out.append(int(x))
    return tuple(out)


def dominance_leq(t: LieType, mu: Weight, lam: Weight) -> bool:
    """True iff mu <= lam, i.e. lam - mu is a nonnegative sum of simple roots."""
    return root_monoid_coeffs(t, lam - mu) is not None


@functools.lru_cache(maxsize=None)
def positive_roots(t: LieType) -> tuple[Weight, ...]:
    """All positive roots in weight coordinates, by closure under root strings.

    For a root beta and simple alpha_i, beta + alpha_i is a root iff
    q - beta(h_i) >= 1 where q is the length of the descending alpha_i-string
    through beta.  Roots are produced by increasing height so the string
    lookups only touch roots already known.
    """
    n = t.rank
    simples = _simple_roots(t)
    known: set[tuple[int, ...]] = {a.coords for a in simples}
    layer = list(simples)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                ai = simples[i]
                q = 0
                gamma = beta - ai
                while gamma.coords in known:
                    q += 1
                    gamma = gamma - ai
                if q - beta.coords[i] >= 1:
                    cand = beta + ai
                    if cand.coords not in known:
                        known.add(cand.coords)
                        nxt.append(cand)
        layer = nxt
    roots = sorted(known)
    expected = _POSITIVE_ROOT_COUNT[t.family](t.rank)
    assert len(roots) == expected, (t, len(roots), expected)
    return tuple(Weight(c) for c in roots)


@functools.lru_cache(maxsize=None)
def _gram(t: LieType) -> tuple[tuple[Fraction, ...], ...]:
    """Gram matrix of the invariant form on weight coordinates: D*Cinv."""
    d = symmetrizers(t)
    Cinv = inverse_cartan(t)
    n = t.rank
    G = tuple(tuple(d[i] * Cinv[i][j] for j in range(n)) for i in range(n))
    for i in range(n):
        for j in range(n):
            assert G[i][j] == G[j][i]
    return G


@functools.lru_cache(maxsize=None)
def gram_scaled(t: LieType) -> tuple[tuple[tuple[int, ...], ...], int]:
    """Integer matrix S and scale s with S = s * (D * Cinv).

    Inner products computed with S are s times the true form; the scale
    cancels in every ratio the library takes.
    """
    G = _gram(t)
    n = t.rank
    s = 1
    for row in G:
        for x in row:
            s = s * x.denominator // math.gcd(s, x.denominator)
    S = tuple(tuple(int(G[i][j] * s) for j in range(n)) for i in range(n))
    return S, s


def symmetric_form(t: LieType, mu: Weight, nu: Weight) -> Fraction:
    """Invariant form <mu, nu>, short roots having squared length 2."""
    _check_rank(t, mu)
    _check_rank(t, nu)
    G = _gram(t)
    n = t.rank
    return sum(
        (mu.coords[i] * G[i][j] * nu.coords[j] for i in range(n) for j in range(n)),
        Fraction(0),
    )


def reflect(t: LieType, mu: Weight, i: int) -> Weight:
    """Simple reflection s_i(mu) = mu - mu(h_i) * alpha_i."""
    C = cartan_matrix(t)
    c = mu.coords[i]
    if c == 0:
        return mu
    return Weight(tuple(mu.coords[j] - c * C[j][i] for j in range(t.rank)))


def dominant_conjugate(t: LieType, mu: Weight) -> Weight:
    """The unique dominant weight in the Weyl orbit of mu."""
    cur = list(mu.coords)
    C = cartan_matrix(t)
    n = t.rank
    while True:
        for i in range(n):
            if cur[i] < 0:
                c = cur[i]
                for j in range(n):
                    cur[j] -= c * C[j][i]
                break
        else:
            return Weight(tuple(cur))


def weyl_orbit(t: LieType, mu: Weight) -> frozenset[Weight]:
    """Full Weyl orbit of mu (breadth-first over simple reflections)."""
    _check_rank(t, mu)
    seen = {mu.coords}
    queue = [mu]
    while queue:
        w = queue.pop()
        for i in range(t.rank):
            r = reflect(t, w, i)
            if r.coords not in seen:
                seen.add(r.coords)
                queue.append(r)
    return frozenset(Weight(c) for c in seen)


@functools.lru_cache(maxsize=None)
def parabolic_weyl_order(t: LieType, zeros: frozenset[int]) -> int:
    """Order of the parabolic Weyl subgroup generated by {s_i : i in zeros}.

    Computed as the orbit size of a weight that is regular for the subgroup
    (coordinate 1 on zeros, 0 elsewhere), so no classification of the
    sub-diagram is needed.
    """
    if not zeros:
        return 1
    probe = Weight(tuple(1 if i in zeros else 0 for i in range(t.rank)))
    seen = {probe.coords}
    queue = [probe]
    while queue:
        w = queue.pop()
        for i in zeros:
            r = reflect(t, w, i)
            if r.coords not in seen:
                seen.add(r.coords)
                queue.append(r)
    return len(seen)


def weyl_orbit_size(t: LieType, dominant: Weight) -> int:
    """|W . mu| for dominant mu, via the stabilizer parabolic."""
    full = parabolic_weyl_order(t, frozenset(range(t.rank)))
    zeros = frozenset(i for i, c in enumerate(dominant.coords) if c == 0)
    return full // parabolic_weyl_order(t, zeros)


def rho(t: LieType) -> Weight:
    return Weight((1,) * t.rank)
