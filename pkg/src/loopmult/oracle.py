"""Brute-force verifiers, shipped so the CLI can re-derive key identities.

Three oracles, each an independent computation path:
  * the loop-weight eigenvalues of the commuting family on explicit sl2
    evaluation modules, via truncated exponential series over exact
    rationals;
  * module degrees over K recomputed from the subfield generated by the
    series coefficients (never from parameter orbits);
  * tensor weight-multiset decomposition with its own stripping order.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import lcm

from .errors import LoopmultError
from .galois import FieldTower, FiniteFieldContext
from .gchar import CharEngine, char_zero_engine, modular_engine
from .lweight import LWeight, lambda_coefficients
from .rootsys import LieType, Weight, inverse_cartan

_A1 = LieType("A", 1)


def lambda_action_eval_sl2(m: int, a, R: int) -> dict:
    """Eigenvalue table of the degree-r loop generators on the weight
    vectors v_0..v_m of the sl2 evaluation module at a.

    On v_k (weight m-2k) the generating series acts by
    exp(-sum_{s>=1} a^s (m-2k) u^s / s), which telescopes to
    (1-a*u)^(m-2k); the table is computed from the exponential side so
    the closed form stays independent.  Exact rationals only."""
    if R > 12:
        raise LoopmultError("series order capped at 12 for the oracle")
    a = Fraction(a)
    table: dict[tuple[int, int], Fraction] = {}
    for k in range(m + 1):
        c = m - 2 * k
        log_coeffs = [Fraction(0)] + [-(a ** s) * c / s for s in range(1, R + 1)]
        exp_coeffs = [Fraction(1)] + [Fraction(0)] * R
        for n in range(1, R + 1):
            acc = Fraction(0)
            for j in range(1, n + 1):
                acc += j * log_coeffs[j] * exp_coeffs[n - j]
            exp_coeffs[n] = acc / n
        for r in range(R + 1):
            table[(k, r)] = exp_coeffs[r]
    return table


def kpoly_module_degree(tower: FieldTower, w: LWeight) -> int:
    """Degree over K of the subfield generated by all series coefficients
    of the loop weight's coordinates: the lcm of the Frobenius orbit
    lengths of the (finitely many determining) coefficients."""
    degree = 1
    for i in range(w.lie_type.rank):
        span = sum(abs(mu.coords[i]) for _, mu in w.items())
        coeffs = lambda_coefficients(w, i, span + 2, one=tower.one())
        for c in coeffs:
            if not c.is_zero():
                degree = lcm(degree, c.degree_over_base())
    return degree


def brute_tensor_weight_mult(e: CharEngine, lam: Weight, mu: Weight) -> dict:
    """Decompose the tensor product of two simples by raw weight-multiset
    bookkeeping, stripping the weight of greatest height first (a
    different maximal choice than the engine's decomposition)."""
    t = e.lie_type
    cinv = inverse_cartan(t)

    def height(w: Weight) -> tuple:
        h = sum(sum(row[j] * w.coords[j] for j in range(t.rank)) for row in cinv)
        return (h, w.coords)

    weights: dict[Weight, int] = {}
    for w1, c1 in e.simple_char(lam).items():
        for w2, c2 in e.simple_char(mu).items():
            key = w1 + w2
            weights[key] = weights.get(key, 0) + c1 * c2
    result: dict[Weight, int] = {}
    guard = sum(weights.values()) + 1
    for _ in range(guard):
        weights = {w: c for w, c in weights.items() if c}
        if not weights:
            return result
        top = max(weights, key=height)
        count = weights[top]
        if count < 0 or not top.is_dominant():
            raise LoopmultError(f"not a tensor character at {top}")
        result[top] = count
        for w, c in e.simple_char(top).items():
            weights[w] = weights.get(w, 0) - count * c
    raise LoopmultError("stripping did not terminate")  # pragma: no cover


# ---------------------------------------------------------------------------
# verification suites (CLI: verify --suite ...)


def verify_lambda(max_m: int = 4, R: int = 6) -> dict:
    """Eigenvalue tables match the factored series expansion for every
    weight line of every small evaluation module, over 5 rational
    parameters."""
    params = [Fraction(1), Fraction(2), Fraction(3), Fraction(-1), Fraction(1, 2)]
    cases = 0
    failures = []
    for a in params:
        for m in range(max_m + 1):
            table = lambda_action_eval_sl2(m, a, R)
            for k in range(m + 1):
                lw = LWeight.single(_A1, Weight((m - 2 * k,)), a)
                series = lambda_coefficients(lw, 0, R, one=Fraction(1))
                for r in range(R + 1):
                    cases += 1
                    if table[(k, r)] != series[r]:
                        failures.append(
                            {"m": m, "k": k, "r": r, "a": str(a),
                             "oracle": str(table[(k, r)]), "series": str(series[r])})
    return {"suite": "lambda", "cases": cases, "failures": failures,
            "ok": not failures}


def verify_degree(cases: int = 200, seed: int = 0) -> dict:
    """Orbit-side degrees equal coefficient-side degrees on random loop
    weights over small towers."""
    rng = random.Random(seed)
    towers = [FieldTower(2, 1, 6), FieldTower(3, 1, 5), FieldTower(2, 2, 3)]
    types = [_A1, LieType("A", 2)]
    failures = []
    for n in range(cases):
        tower = towers[n % len(towers)]
        ctx = FiniteFieldContext(tower)
        t = types[n % len(types)]
        support = {}
        for _ in range(rng.randrange(1, 3)):
            a = tower.from_int(rng.randrange(1, tower.order))
            support[a] = Weight(tuple(rng.randrange(-2, 3) for _ in range(t.rank)))
        w = LWeight(t, support)
        got = kpoly_module_degree(tower, w)
        want = ctx.deg(w)
        if got != want:
            failures.append({"lweight": str(w), "tower": tower.describe(),
                             "coefficient_degree": got, "orbit_degree": want})
    return {"suite": "degree", "cases": cases, "failures": failures,
            "ok": not failures}


def verify_tensor(max_coord: int = 3) -> dict:
    """Independent weight-multiset stripping agrees with the engine's
    tensor decomposition on every small pair, characteristic zero for
    ranks one and two plus modular sl2."""
    engines = [char_zero_engine(_A1), char_zero_engine(LieType("A", 2)),
               char_zero_engine(LieType("B", 2)), modular_engine(_A1, 2)]
    cases = 0
    failures = []
    for e in engines:
        coords_range = range(max_coord + 1)
        all_weights = [Weight((i,)) for i in coords_range] if e.lie_type.rank == 1 \
            else [Weight((i, j)) for i in coords_range for j in coords_range]
        for lam in all_weights:
            for mu in all_weights:
                cases += 1
                got = brute_tensor_weight_mult(e, lam, mu)
                want = e.tensor_table(lam, mu)
                if got != want:
                    failures.append({
                        "engine": f"{e.lie_type}/p{e.characteristic}",
                        "lam": lam.to_json(), "mu": mu.to_json(),
                        "stripping": {str(k): v for k, v in got.items()},
                        "engine_table": {str(k): v for k, v in want.items()}})
    return {"suite": "tensor", "cases": cases, "failures": failures,
            "ok": not failures}


_SUITES = {"lambda": verify_lambda, "degree": verify_degree, "tensor": verify_tensor}


def run_suite(name: str, **kw) -> dict:
    if name not in _SUITES:
        raise LoopmultError(f"unknown suite {name!r}; pick one of {sorted(_SUITES)}")
    return _SUITES[name](**kw)
