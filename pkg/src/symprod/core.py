"""Exact arithmetic for the cohomology of a closed oriented surface and the
Koszul-signed algebra of its n-fold tensor powers.

The surface ring has a basis consisting of the unit, odd generators
e_1, ..., e_{2g} (degree 1) and the orientation class b (degree 2), with
e_{2i-1} e_{2i} = b for each symplectic pair and every other product of
positive-degree elements zero.  All coefficients are Python ints; the only
divisions anywhere in the package are asserted to be exact.
"""

from dataclasses import dataclass

# Basis element encoding: 0 is the unit, 1..2g the odd generators, -1 is b.
UNIT = 0
B = -1


class IntegralityError(RuntimeError):
    """An internal exactness or unimodularity assertion failed.

    Never indicates bad user input: it means an algebraic identity the
    engine relies on (exact division, determinant +-1) was violated.
    """


@dataclass(frozen=True)
class CurveContext:
    """The pair (g, n): genus of the surface and the symmetric power."""

    g: int
    n: int

    def __post_init__(self):
        if self.g < 0:
            raise ValueError(f"genus must be >= 0, got {self.g}")
        if self.n < 1:
            raise ValueError(f"symmetric power must be >= 1, got {self.n}")

    @property
    def num_odd(self) -> int:
        return 2 * self.g


def degree_of(elt: int) -> int:
    """Degree of a surface basis element: 0 for the unit, 1 for e_i, 2 for b."""
    if elt == UNIT:
        return 0
    if elt == B:
        return 2
    return 1


def partner(i: int) -> int:
    """Symplectic partner of an odd-generator index: 2k-1 <-> 2k."""
    return i + 1 if i % 2 else i - 1


def check_element(elt: int, ctx: CurveContext) -> None:
    if elt in (UNIT, B):
        return
    if not 1 <= elt <= ctx.num_odd:
        raise ValueError(f"generator index {elt} out of range [1, {ctx.num_odd}]")


def _mul_basis(a: int, c: int) -> tuple[int, int]:
    """Product of two basis elements as (sign, element), with sign 0 for zero.

    e_{2k-1} e_{2k} = +b, e_{2k} e_{2k-1} = -b; all other positive-degree
    products vanish (the ring has formal dimension 2).
    """
    if a == UNIT:
        return 1, c
    if c == UNIT:
        return 1, a
    if a == B or c == B:
        return 0, UNIT
    if c == partner(a):
        return (1, B) if a % 2 else (-1, B)
    return 0, UNIT


def surface_mul(a: int, c: int, ctx: CurveContext) -> tuple[int, int]:
    """Validated product of two surface basis elements as (sign, element)."""
    check_element(a, ctx)
    check_element(c, ctx)
    return _mul_basis(a, c)


def merge_exterior(s1: tuple, s2: tuple) -> tuple[int, tuple | None]:
    """Signed merge of two strictly increasing index tuples.

    Returns (sign, merged) where the sign counts transpositions of odd
    generators needed to sort the concatenation, or (0, None) when an index
    repeats (an exterior square).
    """
    out = []
    sign = 1
    i = j = 0
    while i < len(s1) and j < len(s2):
        if s1[i] == s2[j]:
            return 0, None
        if s1[i] < s2[j]:
            out.append(s1[i])
            i += 1
        else:
            # s2[j] jumps past the remaining len(s1) - i entries of s1
            if (len(s1) - i) % 2:
                sign = -sign
            out.append(s2[j])
            j += 1
    out.extend(s1[i:])
    out.extend(s2[j:])
    return sign, tuple(out)


class TensorClass:
    """Integer combination of n-fold tensor monomials over the surface basis.

    Keys are length-n tuples of basis codes.  Multiplication is the bilinear
    extension of slotwise products with the Koszul sign picked up by moving
    each right-hand factor past the later left-hand slots.  Instances are
    treated as immutable after construction.
    """

    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms: dict | None = None):
        if arity < 1:
            raise ValueError("arity must be >= 1")
        self.arity = arity
        clean = {}
        if terms:
            for key, coeff in terms.items():
                if len(key) != arity:
                    raise ValueError("monomial length differs from arity")
                if coeff:
                    clean[key] = coeff
        self.terms = clean

    @classmethod
    def zero(cls, arity: int) -> "TensorClass":
        return cls(arity, {})

    @classmethod
    def unit(cls, arity: int) -> "TensorClass":
        return cls(arity, {(UNIT,) * arity: 1})

    @classmethod
    def monomial(cls, factors, coeff: int = 1) -> "TensorClass":
        key = tuple(factors)
        return cls(len(key), {key: coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set:
        return {sum(degree_of(e) for e in key) for key in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self):
        """Degree of a homogeneous class, or None for zero / mixed."""
        degs = self.degrees()
        return degs.pop() if len(degs) == 1 else None

    def homogeneous_part(self, m: int) -> "TensorClass":
        return TensorClass(
            self.arity,
            {k: c for k, c in self.terms.items() if sum(degree_of(e) for e in k) == m},
        )

    def __add__(self, other):
        if not isinstance(other, TensorClass):
            return NotImplemented
        if self.arity != other.arity:
            raise ValueError("arity mismatch")
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return TensorClass(self.arity, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return TensorClass(self.arity, {k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return TensorClass(self.arity, {k: c * other for k, c in self.terms.items()})
        if isinstance(other, TensorClass):
            return tensor_mul(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        return (
            isinstance(other, TensorClass)
            and self.arity == other.arity
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "TensorClass(0)"

        def fmt(key):
            names = {UNIT: "1", B: "b"}
            return "(x)".join(names.get(e, f"e{e}") for e in key)

        parts = [f"{c}*{fmt(k)}" for k, c in sorted(self.terms.items())]
        return "TensorClass(" + " + ".join(parts) + ")"


def tensor_mul(x: TensorClass, y: TensorClass) -> TensorClass:
    """Koszul-signed product of two tensor classes of equal arity."""
    if x.arity != y.arity:
        raise ValueError("arity mismatch")
    n = x.arity
    out: dict = {}
    for akey, ac in x.terms.items():
        # odd_after[p] counts odd-degree left factors strictly after slot p
        odd_after = [0] * (n + 1)
        for p in range(n - 1, -1, -1):
            odd_after[p] = odd_after[p + 1] + (1 if degree_of(akey[p]) == 1 else 0)
        for ckey, cc in y.terms.items():
            coeff = ac * cc
            exponent = 0
            prod = []
            for p in range(n):
                c_elt = ckey[p]
                if degree_of(c_elt) == 1:
                    exponent += odd_after[p + 1]
                sign, elt = _mul_basis(akey[p], c_elt)
                if sign == 0:
                    coeff = 0
                    break
                if sign < 0:
                    coeff = -coeff
                prod.append(elt)
            if not coeff:
                continue
            if exponent & 1:
                coeff = -coeff
            key = tuple(prod)
            new = out.get(key, 0) + coeff
            if new:
                out[key] = new
            else:
                out.pop(key, None)
    return TensorClass(n, out)


def tensor_pair(x: TensorClass, y: TensorClass) -> int:
    """Slotwise dual-basis pairing: identical monomials pair to 1."""
    if x.arity != y.arity:
        raise ValueError("arity mismatch")
    small, big = (x.terms, y.terms) if len(x.terms) <= len(y.terms) else (y.terms, x.terms)
    return sum(c * big.get(k, 0) for k, c in small.items())
