import random

import pytest

from symprod import CurveContext, TensorClass, surface_mul, tensor_mul, tensor_pair
from symprod.core import B, UNIT, degree_of, merge_exterior

from helpers import random_tensor, random_tensor_homogeneous

CTX2 = CurveContext(2, 2)


def test_context_validation():
    with pytest.raises(ValueError):
        CurveContext(-1, 2)
    with pytest.raises(ValueError):
        CurveContext(2, 0)
    assert CurveContext(3, 2).num_odd == 6


@pytest.mark.parametrize(
    "a, c, expected",
    [
        (1, 2, (1, B)),       # e1 e2 = +b
        (2, 1, (-1, B)),      # e2 e1 = -b
        (3, 4, (1, B)),
        (1, 1, (0, UNIT)),    # exterior square
        (1, 3, (0, UNIT)),    # non-symplectic pair
        (2, 4, (0, UNIT)),
        (UNIT, 3, (1, 3)),
        (3, UNIT, (1, 3)),
        (B, 1, (0, UNIT)),    # b kills positive degree
        (1, B, (0, UNIT)),
        (B, B, (0, UNIT)),
        (UNIT, B, (1, B)),
    ],
)
def test_surface_mul_table(a, c, expected):
    assert surface_mul(a, c, CTX2) == expected


def test_surface_mul_index_errors():
    with pytest.raises(ValueError):
        surface_mul(5, 1, CTX2)
    with pytest.raises(ValueError):
        surface_mul(1, -3, CTX2)
    # e5 exists once the genus is large enough
    assert surface_mul(5, 6, CurveContext(3, 2)) == (1, B)


def test_degree_of():
    assert degree_of(UNIT) == 0
    assert degree_of(B) == 2
    assert degree_of(7) == 1


def test_merge_exterior_signs():
    assert merge_exterior((1,), (2,)) == (1, (1, 2))
    assert merge_exterior((2,), (1,)) == (-1, (1, 2))
    assert merge_exterior((1, 2), (1,)) == (0, None)
    assert merge_exterior((1, 4), (2, 3)) == (1, (1, 2, 3, 4))
    sign, merged = merge_exterior((3, 4), (1, 2))
    assert merged == (1, 2, 3, 4) and sign == 1  # two odd elements jump past two


def test_tensor_koszul_sign():
    e1_first = TensorClass.monomial((1, UNIT))
    e1_second = TensorClass.monomial((UNIT, 1))
    assert (e1_first * e1_second).terms == {(1, 1): 1}
    assert (e1_second * e1_first).terms == {(1, 1): -1}


def test_tensor_square_of_diagonal_b():
    x = TensorClass.monomial((B, UNIT)) + TensorClass.monomial((UNIT, B))
    # cross terms commute, squares vanish slotwise
    assert (x * x).terms == {(B, B): 2}


def test_tensor_pullback_expansion_pattern():
    e1 = TensorClass.monomial((1, UNIT)) + TensorClass.monomial((UNIT, 1))
    e2 = TensorClass.monomial((2, UNIT)) + TensorClass.monomial((UNIT, 2))
    assert (e1 * e2).terms == {(B, UNIT): 1, (1, 2): 1, (2, 1): -1, (UNIT, B): 1}


def test_tensor_mul_arity_mismatch():
    with pytest.raises(ValueError):
        tensor_mul(TensorClass.unit(2), TensorClass.unit(3))
    with pytest.raises(ValueError):
        tensor_pair(TensorClass.unit(2), TensorClass.unit(3))


def test_tensor_pair_examples():
    bb = TensorClass.monomial((B, B))
    assert tensor_pair(bb, bb) == 1
    assert tensor_pair(2 * bb, bb) == 2
    e12 = TensorClass.monomial((1, 2))
    e21 = TensorClass.monomial((2, 1))
    assert tensor_pair(e12, e12) == 1
    assert tensor_pair(e12, e21) == 0


def test_tensor_mul_associative_and_unital():
    rng = random.Random(7)
    for _ in range(40):
        g = rng.randint(0, 3)
        n = rng.randint(1, 4)
        x = random_tensor(rng, g, n)
        y = random_tensor(rng, g, n)
        z = random_tensor(rng, g, n)
        assert (x * y) * z == x * (y * z)
        one = TensorClass.unit(n)
        assert one * x == x and x * one == x


def test_tensor_mul_graded_commutative():
    rng = random.Random(11)
    for _ in range(60):
        g = rng.randint(0, 3)
        n = rng.randint(1, 4)
        dx = rng.randint(0, 2 * n)
        dy = rng.randint(0, 2 * n)
        x = random_tensor_homogeneous(rng, g, n, dx)
        y = random_tensor_homogeneous(rng, g, n, dy)
        sign = -1 if (dx % 2) and (dy % 2) else 1
        assert x * y == sign * (y * x)


def test_slotwise_truncation():
    # >= 3 positive-degree factors in a common slot always die (formal dim 2);
    # in particular any n+1 same-slot factors vanish once n >= 2
    for n in (2, 3):
        factors = [
            TensorClass.monomial((1,) + (UNIT,) * (n - 1)),
            TensorClass.monomial((2,) + (UNIT,) * (n - 1)),
        ] + [TensorClass.monomial((1,) + (UNIT,) * (n - 1))] * (n - 1)
        prod = TensorClass.unit(n)
        for f in factors:
            prod = prod * f
        assert prod.is_zero()


def test_pairing_bilinear():
    rng = random.Random(13)
    for _ in range(30):
        g = rng.randint(0, 2)
        n = rng.randint(1, 3)
        x = random_tensor(rng, g, n)
        x2 = random_tensor(rng, g, n)
        z = random_tensor(rng, g, n)
        y = random_tensor(rng, g, n)
        assert tensor_pair((x + x2) * z, y) == tensor_pair(x * z, y) + tensor_pair(x2 * z, y)
        assert tensor_pair(x * (z + z), y) == 2 * tensor_pair(x * z, y)


def test_homogeneous_parts():
    x = TensorClass.monomial((1, 2)) + TensorClass.monomial((B, B), 4)
    assert x.degrees() == {2, 4}
    assert not x.is_homogeneous()
    assert x.homogeneous_part(2).terms == {(1, 2): 1}
    assert x.homogeneous_part(4).terms == {(B, B): 4}
    assert TensorClass.monomial((1, 2)).degree() == 2
