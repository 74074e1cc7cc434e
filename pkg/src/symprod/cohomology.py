"""Integral cohomology of symmetric powers of a genus-g surface.

Classes are integer combinations of monomials e*_S (b*)^q in the free
graded-commutative ring on the degree-1 duals e*_1, ..., e*_2g and the
degree-2 class b*.  The actual cohomology ring of C^(n) is the quotient of
this free ring by Macdonald's relations; rather than rewriting modulo the
relations, every class is canonicalized through its Kronecker pairings
against the Pontryagin monomial basis.  The covering-space pullback into
the n-fold tensor power is injective on the quotient, so the pairing
vector is a faithful normal form, and the monomials with |S| + q <= n pair
unimodularly against the homology basis in every degree.

Pairings are evaluated by contracting one generator at a time against the
homology side (the adjoints of multiplication by b* and e*_i), which is the
closed form of pairing the pullback against canonical tensor
representatives; the two routes are kept equivalent by tests.
"""

import functools
import itertools
import math

from .core import (
    B,
    UNIT,
    CurveContext,
    IntegralityError,
    TensorClass,
    merge_exterior,
    partner,
    tensor_pair,
)
from . import linalg
from .homology import (
    HomologyClass,
    Monomial,
    basis_monomials,
    monomial_degree,
    monomial_length,
    tensor_representative,
)

# Cohomology monomials are (S, q): e*_S (b*)^q, of degree |S| + 2q.
CMonomial = tuple


def cmonomial_degree(mono: CMonomial) -> int:
    s, q = mono
    return len(s) + 2 * q


def _clabel(mono: CMonomial) -> str:
    s, q = mono
    parts = [f"e{i}*" for i in s]
    if q == 1:
        parts.append("b*")
    elif q:
        parts.append(f"(b*)^{q}")
    return ".".join(parts) if parts else "1"


class CohomologyClass:
    """Spanning-set combination of generator monomials over a fixed context.

    Two classes are equal exactly when their pairing vectors against the
    homology basis agree degree by degree; the stored representation is not
    unique.  Instances are treated as immutable.
    """

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: CurveContext, terms: dict | None = None):
        self.ctx = ctx
        clean = {}
        if terms:
            for (s, q), coeff in terms.items():
                if s and (s[-1] > 2 * ctx.g or s[0] < 1):
                    raise ValueError(f"generator index out of range for genus {ctx.g}")
                if coeff:
                    clean[(s, q)] = coeff
        self.terms = clean

    @classmethod
    def zero(cls, ctx: CurveContext) -> "CohomologyClass":
        return cls(ctx)

    @classmethod
    def unit(cls, ctx: CurveContext) -> "CohomologyClass":
        return cls(ctx, {((), 0): 1})

    @classmethod
    def estar(cls, ctx: CurveContext, i: int) -> "CohomologyClass":
        return cls(ctx, {((i,), 0): 1})

    @classmethod
    def bstar(cls, ctx: CurveContext, q: int = 1) -> "CohomologyClass":
        if q < 0:
            raise ValueError("b* exponent must be >= 0")
        return cls(ctx, {((), q): 1})

    @classmethod
    def monomial(cls, ctx: CurveContext, s, q: int, coeff: int = 1) -> "CohomologyClass":
        s = tuple(s)
        if list(s) != sorted(set(s)):
            raise ValueError("index set must be strictly increasing")
        return cls(ctx, {(s, q): coeff})

    def is_representation_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set:
        return {cmonomial_degree(m) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self):
        degs = self.degrees()
        return degs.pop() if len(degs) == 1 else None

    def homogeneous_part(self, m: int) -> "CohomologyClass":
        return CohomologyClass(
            self.ctx,
            {mono: c for mono, c in self.terms.items() if cmonomial_degree(mono) == m},
        )

    def _check_ctx(self, other):
        if self.ctx != other.ctx:
            raise ValueError("context mismatch")

    def __add__(self, other):
        if not isinstance(other, CohomologyClass):
            return NotImplemented
        self._check_ctx(other)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            out[mono] = out.get(mono, 0) + c
        return CohomologyClass(self.ctx, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return CohomologyClass(self.ctx, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        """Scalar multiple, or the product in the free ring.

        The free product keeps the spanning-set representation; use cup()
        for the canonical reduced representative.
        """
        if isinstance(other, int):
            return CohomologyClass(self.ctx, {m: c * other for m, c in self.terms.items()})
        if isinstance(other, CohomologyClass):
            self._check_ctx(other)
            out: dict = {}
            for (s1, q1), c1 in self.terms.items():
                for (s2, q2), c2 in other.terms.items():
                    sign, merged = merge_exterior(s1, s2)
                    if not sign:
                        continue
                    key = (merged, q1 + q2)
                    new = out.get(key, 0) + sign * c1 * c2
                    if new:
                        out[key] = new
                    else:
                        out.pop(key, None)
            return CohomologyClass(self.ctx, out)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined")
        out = CohomologyClass.unit(self.ctx)
        for _ in range(k):
            out = out * self
        return out

    def pullback(self) -> TensorClass:
        return pullback(self)

    def kronecker(self, mono: Monomial) -> int:
        return kronecker(self, mono)

    def coordinates(self, m: int) -> tuple:
        return coordinates(self, m)

    def is_zero_in_ring(self) -> bool:
        n = self.ctx.n
        return all(
            not any(coordinates(self, m))
            for m in sorted(self.degrees())
            if m <= 2 * n
        )

    def __eq__(self, other):
        if not isinstance(other, CohomologyClass):
            return NotImplemented
        if self.ctx != other.ctx:
            return False
        return (self - other).is_zero_in_ring()

    def __repr__(self):
        if not self.terms:
            return "CohomologyClass(0)"
        ordered = sorted(self.terms.items(), key=lambda kv: (cmonomial_degree(kv[0]), -kv[0][1], kv[0][0]))
        return "CohomologyClass(" + " + ".join(f"{c}*{_clabel(m)}" for m, c in ordered) + ")"

    def to_json_obj(self) -> list:
        """JSON form: [{"coeff": c, "estar": [...], "bstar": q}, ...]."""
        ordered = sorted(self.terms.items(), key=lambda kv: (cmonomial_degree(kv[0]), -kv[0][1], kv[0][0]))
        return [{"coeff": c, "estar": list(s), "bstar": q} for (s, q), c in ordered]

    @classmethod
    def from_json_obj(cls, ctx: CurveContext, obj) -> "CohomologyClass":
        terms: dict = {}
        for item in obj:
            mono = (tuple(item["estar"]), item["bstar"])
            terms[mono] = terms.get(mono, 0) + item["coeff"]
        return cls(ctx, terms)


def theta(ctx: CurveContext) -> CohomologyClass:
    """The theta class: sum of the symplectic pair products e*_{2i-1} e*_{2i}."""
    return CohomologyClass(
        ctx, {((2 * i - 1, 2 * i), 0): 1 for i in range(1, ctx.g + 1)}
    )


# -- pullback to the tensor power --------------------------------------------

@functools.lru_cache(maxsize=None)
def _placement_sum(elt: int, n: int) -> TensorClass:
    """Sum of the n placements of a basis element into one tensor slot."""
    terms = {}
    for p in range(n):
        key = (UNIT,) * p + (elt,) + (UNIT,) * (n - p - 1)
        terms[key] = 1
    return TensorClass(n, terms)


@functools.lru_cache(maxsize=None)
def _pullback_monomial(g: int, n: int, s: tuple, q: int) -> TensorClass:
    out = TensorClass.unit(n)
    for i in s:
        out = out * _placement_sum(i, n)
    for _ in range(q):
        out = out * _placement_sum(B, n)
    return out


def pullback(x: CohomologyClass) -> TensorClass:
    """Ring-homomorphic image in the n-fold tensor power.

    Each generator goes to the sum of its placements across the n slots;
    the map is injective on the quotient ring, which is what makes the
    pairing vector a normal form.
    """
    ctx = x.ctx
    out = TensorClass.zero(ctx.n)
    for (s, q), coeff in x.terms.items():
        out = out + _pullback_monomial(ctx.g, ctx.n, s, q) * coeff
    return out


# -- Kronecker pairing --------------------------------------------------------

def _contract_bstar(cls: dict) -> dict:
    """Adjoint of multiplication by b*: gamma_j -> gamma_{j-1}."""
    return {(s, j - 1): c for (s, j), c in cls.items() if j}


def _contract_estar(i: int, cls: dict) -> dict:
    """Adjoint of multiplication by e*_i on homology monomials.

    Removing e_i from the exterior part costs the sign of moving it out
    past the later generators; absorbing a gamma produces the symplectic
    partner, with the sign of the pair orientation and of inserting the
    partner into sorted position.
    """
    out: dict = {}
    p = partner(i)
    for (s, j), c in cls.items():
        k = len(s)
        if i in s:
            t = s.index(i) + 1
            key = (tuple(x for x in s if x != i), j)
            val = c if (k - t) % 2 == 0 else -c
            new = out.get(key, 0) + val
            if new:
                out[key] = new
            else:
                out.pop(key, None)
        if j and p not in s:
            s2 = tuple(sorted(s + (p,)))
            r = s2.index(p) + 1
            val = c if i % 2 == 0 else -c
            if (k + 1 - r) % 2:
                val = -val
            key = (s2, j - 1)
            new = out.get(key, 0) + val
            if new:
                out[key] = new
            else:
                out.pop(key, None)
    return out


def kronecker(x: CohomologyClass, mono: Monomial) -> int:
    """Evaluation of a cohomology class on a homology basis monomial.

    Equals pairing the pullback of x against the canonical tensor
    representative of the monomial, normalized by the divided-power
    factorial; computed here by peeling generators off one at a time.
    """
    s, j = mono
    ctx = x.ctx
    if s and s[-1] > 2 * ctx.g:
        raise ValueError(f"generator index {s[-1]} out of range for genus {ctx.g}")
    if len(s) + j > ctx.n:
        raise ValueError("monomial length exceeds the symmetric power")
    target = monomial_degree(mono)
    total = 0
    for (cs, q), coeff in x.terms.items():
        if len(cs) + 2 * q != target:
            continue
        cls = {mono: 1}
        for _ in range(q):
            cls = _contract_bstar(cls)
            if not cls:
                break
        for i in reversed(cs):
            if not cls:
                break
            cls = _contract_estar(i, cls)
        total += coeff * cls.get(((), 0), 0)
    return total


def kronecker_via_pullback(x: CohomologyClass, mono: Monomial) -> int:
    """Kronecker pairing computed through the tensor power.

    Pairs the pullback against the canonical representative and divides by
    the divided-power factorial, asserting exactness.  Used to cross-check
    the contraction route.
    """
    rep = tensor_representative(mono, x.ctx)
    value = tensor_pair(pullback(x), rep)
    q, r = divmod(value, math.factorial(mono[1]))
    if r:
        raise IntegralityError("Kronecker pairing is not divisible by j!")
    return q


def coordinates(x: CohomologyClass, m: int) -> tuple:
    """Pairing vector against the degree-m homology basis (canonical form)."""
    degs = x.degrees()
    if degs and degs != {m}:
        raise ValueError(f"class is not homogeneous of degree {m}")
    return tuple(kronecker(x, h) for h in basis_monomials(x.ctx, m))


# -- spanning monomials and conversion ----------------------------------------

def spanning_monomials(ctx: CurveContext, m: int) -> list[CMonomial]:
    """Degree-m monomials e*_S (b*)^q with |S| + q <= n; these span the
    quotient and are a basis (the pairing matrix is unimodular)."""
    out = []
    for q in range(m // 2, -1, -1):
        k = m - 2 * q
        if k > 2 * ctx.g or k + q > ctx.n:
            continue
        for s in itertools.combinations(range(1, 2 * ctx.g + 1), k):
            out.append((s, q))
    return out


@functools.lru_cache(maxsize=None)
def _pairing_data(g: int, n: int, m: int):
    """Spanning monomials, homology basis and their pairing matrix."""
    ctx = CurveContext(g, n)
    spanning = spanning_monomials(ctx, m)
    basis = basis_monomials(ctx, m)
    if len(spanning) != len(basis):
        raise IntegralityError("spanning set and homology basis sizes differ")
    matrix = [
        [kronecker(CohomologyClass(ctx, {s: 1}), h) for h in basis]
        for s in spanning
    ]
    return spanning, basis, matrix


@functools.lru_cache(maxsize=None)
def _pairing_inverse(g: int, n: int, m: int):
    _, _, matrix = _pairing_data(g, n, m)
    return linalg.invert_unimodular(matrix)


def pairing_matrix(ctx: CurveContext, m: int):
    """(spanning monomials, homology basis, integer pairing matrix)."""
    return _pairing_data(ctx.g, ctx.n, m)


def from_coordinates(ctx: CurveContext, m: int, vec) -> CohomologyClass:
    """The unique spanning-set combination with the given pairing vector."""
    spanning, basis, _ = _pairing_data(ctx.g, ctx.n, m)
    vec = list(vec)
    if len(vec) != len(basis):
        raise ValueError("coordinate vector has the wrong length")
    if not spanning:
        if any(vec):
            raise IntegralityError("nonzero coordinates in an empty degree")
        return CohomologyClass.zero(ctx)
    inv = _pairing_inverse(ctx.g, ctx.n, m)
    terms = {}
    for col, mono in enumerate(spanning):
        c = sum(vec[row] * inv[row][col] for row in range(len(vec)))
        if c:
            terms[mono] = c
    return CohomologyClass(ctx, terms)


def cup(x: CohomologyClass, y: CohomologyClass) -> CohomologyClass:
    """Cup product, returned as the canonical spanning-set representative.

    The product is formed in the free ring (equivalently through the
    tensor-power pullback) and converted back through the unimodular
    pairing matrix, so the result is exact and integral.
    """
    if x.ctx != y.ctx:
        raise ValueError("context mismatch")
    ctx = x.ctx
    prod = x * y
    out = CohomologyClass.zero(ctx)
    for m in sorted(prod.degrees()):
        if m > 2 * ctx.n:
            continue
        part = prod.homogeneous_part(m)
        out = out + from_coordinates(ctx, m, coordinates(part, m))
    return out


def macdonald_relation(ctx: CurveContext, odd_indices, even_indices, pair_indices, q: int) -> CohomologyClass:
    """One relation instance, unreduced.

    Builds e*_{2i-1} over the first family, e*_{2j} over the second,
    (e*_{2k-1} e*_{2k} - b*) over the third and a (b*)^q factor; families
    must be disjoint subsets of 1..g.  The result has zero coordinates
    exactly when the total weight a + b + 2c + q exceeds n.
    """
    fam_i, fam_j, fam_k = (sorted(set(f)) for f in (odd_indices, even_indices, pair_indices))
    for fam, given in ((fam_i, odd_indices), (fam_j, even_indices), (fam_k, pair_indices)):
        if len(fam) != len(tuple(given)):
            raise ValueError("repeated index within a family")
        if fam and (fam[0] < 1 or fam[-1] > ctx.g):
            raise ValueError(f"family index out of range [1, {ctx.g}]")
    combined = fam_i + fam_j + fam_k
    if len(set(combined)) != len(combined):
        raise ValueError("index families must be disjoint")
    if q < 0:
        raise ValueError("b* exponent must be >= 0")
    out = CohomologyClass.unit(ctx)
    for i in fam_i:
        out = out * CohomologyClass.estar(ctx, 2 * i - 1)
    for j in fam_j:
        out = out * CohomologyClass.estar(ctx, 2 * j)
    for k in fam_k:
        w = CohomologyClass.monomial(ctx, (2 * k - 1, 2 * k), 0)
        out = out * (w - CohomologyClass.bstar(ctx))
    return out * CohomologyClass.bstar(ctx, q)
