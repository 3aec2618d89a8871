import random

import pytest

from starconv import Carrier

SEED = 20260810


@pytest.fixture
def rng():
    return random.Random(SEED)


def submask_decompositions(c: int):
    """All (a, b) with a | b == c and a & b == 0, straight from the bits."""
    out = []
    a = c
    while True:
        out.append((a, c ^ a))
        if a == 0:
            break
        a = (a - 1) & c
    return out


def upper_oracle(f_vals, g_vals, c: int) -> float:
    """Brute-force sup of f(a) + g(c - a) over bit decompositions of c."""
    return max(f_vals[a] + g_vals[b] for a, b in submask_decompositions(c))


def lower_oracle(f_vals, g_vals, c: int) -> float:
    return min(f_vals[a] + g_vals[b] for a, b in submask_decompositions(c))


def random_int_functor_values(rng, n, lo=-4, hi=5):
    return tuple(float(rng.randint(lo, hi)) for _ in range(n))


def random_monotone_values(structure, rng, lo=0, hi=6):
    """Random integer values propagated up the order so the result is
    monotone."""
    poset = structure.poset
    n = len(poset)
    if structure.carrier is Carrier.NAT:
        vals = [rng.randint(0, 3) for _ in range(n)]
    else:
        vals = [float(rng.randint(lo, hi)) for _ in range(n)]
    for i, k in poset.relation_pairs():
        if i != k and vals[k] < vals[i]:
            vals[k] = vals[i]
    return tuple(vals)
