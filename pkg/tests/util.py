"""Shared helpers for the test suite."""

from loopmult.galois import FieldTower
from loopmult.lweight import LWeight
from loopmult.rootsys import Weight


def random_lweight(rng, t, tower, dominant=True, max_params=2, max_coord=2,
                   min_params=0):
    support = {}
    for _ in range(rng.randrange(min_params, max_params + 1)):
        a = tower.from_int(rng.randrange(1, tower.order))
        lo = 0 if dominant else -max_coord
        support[a] = Weight(tuple(rng.randrange(lo, max_coord + 1)
                                  for _ in range(t.rank)))
    return LWeight(t, support)


def small_towers():
    return [FieldTower(2, 1, 2), FieldTower(3, 1, 2), FieldTower(2, 2, 2)]
