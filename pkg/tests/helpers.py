"""Shared random generators for sampled property tests (seeded per test)."""

import itertools

from symprod import CohomologyClass, CurveContext, HomologyClass, TensorClass
from symprod.core import B, UNIT


def surface_elements(g):
    return [UNIT, B] + list(range(1, 2 * g + 1))


def random_tensor(rng, g, n, terms=3, coeff_range=3):
    elements = surface_elements(g)
    out = TensorClass.zero(n)
    for _ in range(terms):
        key = tuple(rng.choice(elements) for _ in range(n))
        coeff = rng.randint(-coeff_range, coeff_range)
        out = out + TensorClass.monomial(key, coeff)
    return out


def random_tensor_homogeneous(rng, g, n, m, terms=3):
    from symprod.core import degree_of

    elements = surface_elements(g)
    keys = [
        key
        for key in itertools.product(elements, repeat=n)
        if sum(degree_of(e) for e in key) == m
    ]
    out = TensorClass.zero(n)
    if not keys:
        return out
    for _ in range(terms):
        out = out + TensorClass.monomial(rng.choice(keys), rng.randint(-3, 3))
    return out


def random_homology(rng, g, max_len=4, terms=3):
    out = HomologyClass.zero()
    for _ in range(terms):
        j = rng.randint(0, max_len)
        k = rng.randint(0, min(2 * g, max_len - j))
        s = tuple(sorted(rng.sample(range(1, 2 * g + 1), k))) if k else ()
        out = out + HomologyClass.monomial(s, j, rng.randint(-3, 3))
    return out


def random_cohomology(rng, ctx, terms=3, max_degree=None):
    g, n = ctx.g, ctx.n
    top = max_degree if max_degree is not None else 2 * n
    out = CohomologyClass.zero(ctx)
    for _ in range(terms):
        q = rng.randint(0, top // 2)
        k = rng.randint(0, min(2 * g, top - 2 * q))
        s = tuple(sorted(rng.sample(range(1, 2 * g + 1), k))) if k else ()
        out = out + CohomologyClass.monomial(ctx, s, q, rng.randint(-3, 3))
    return out


def random_cohomology_homogeneous(rng, ctx, m, terms=2):
    g = ctx.g
    choices = []
    for q in range(m // 2 + 1):
        k = m - 2 * q
        if k <= 2 * g:
            choices.append((k, q))
    out = CohomologyClass.zero(ctx)
    if not choices:
        return out
    for _ in range(terms):
        k, q = rng.choice(choices)
        s = tuple(sorted(rng.sample(range(1, 2 * g + 1), k))) if k else ()
        out = out + CohomologyClass.monomial(ctx, s, q, rng.randint(-3, 3))
    return out
