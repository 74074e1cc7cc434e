"""The stable Pontryagin ring of a genus-g surface and its finite truncations.

The ring is an exterior algebra on odd classes e_1, ..., e_2g tensored with
a divided power algebra on the surface class: monomials are pairs (S, j)
with S a strictly increasing tuple of generator indices and j the divided
power of gamma, of degree |S| + 2j and length |S| + j.  gamma_0 is the unit
iota, gamma_1 is the surface class b, and gamma_i gamma_j = C(i+j, i)
gamma_{i+j}.

H_*(C^(n)) sits inside the stable ring as the span of monomials of length
at most n.  Because concatenation raises the symmetric power, the product
does not preserve that span: restriction is a projection, not a ring map.

The coproduct is the one induced by the diagonal of the space.  On the odd
generators it is primitive; on b it picks up the symplectic cross terms
e_{2i-1} (x) e_{2i} - e_{2i} (x) e_{2i-1}; on higher divided powers it is
forced by multiplicativity, gamma_j = b^j / j!, and the division is carried
out exactly over the integers.
"""

import functools
import itertools
import math

from .core import B, UNIT, CurveContext, IntegralityError, TensorClass, merge_exterior
from . import linalg

# A monomial is (S, j): S a strictly increasing tuple of indices, j >= 0.
Monomial = tuple
IOTA: Monomial = ((), 0)


def monomial_degree(mono: Monomial) -> int:
    s, j = mono
    return len(s) + 2 * j


def monomial_length(mono: Monomial) -> int:
    s, j = mono
    return len(s) + j


def mul_monomials(m1: Monomial, m2: Monomial) -> tuple[int, Monomial | None]:
    """Product of two monomials as (coefficient, monomial).

    Exterior sign on the e-parts, binomial rule on the divided powers.
    """
    (s1, j1), (s2, j2) = m1, m2
    sign, merged = merge_exterior(s1, s2)
    if sign == 0:
        return 0, None
    return sign * math.comb(j1 + j2, j1), (merged, j1 + j2)


def _label(mono: Monomial) -> str:
    s, j = mono
    parts = [f"e{i}" for i in s]
    if j:
        parts.append(f"g{j}")
    return ".".join(parts) if parts else "1"


class HomologyClass:
    """Integer combination of Pontryagin monomials; immutable by convention."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        clean = {}
        if terms:
            for mono, coeff in terms.items():
                if coeff:
                    clean[mono] = coeff
        self.terms = clean

    @classmethod
    def zero(cls) -> "HomologyClass":
        return cls()

    @classmethod
    def unit(cls) -> "HomologyClass":
        return cls({IOTA: 1})

    @classmethod
    def e(cls, i: int) -> "HomologyClass":
        if i < 1:
            raise ValueError("generator index must be >= 1")
        return cls({((i,), 0): 1})

    @classmethod
    def gamma(cls, j: int) -> "HomologyClass":
        if j < 0:
            raise ValueError("divided power must be >= 0")
        return cls({((), j): 1})

    @classmethod
    def monomial(cls, s, j: int, coeff: int = 1) -> "HomologyClass":
        s = tuple(s)
        if list(s) != sorted(set(s)):
            raise ValueError("index set must be strictly increasing")
        return cls({(s, j): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set:
        return {monomial_degree(m) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self):
        degs = self.degrees()
        return degs.pop() if len(degs) == 1 else None

    def homogeneous_part(self, m: int) -> "HomologyClass":
        return HomologyClass(
            {mono: c for mono, c in self.terms.items() if monomial_degree(mono) == m}
        )

    def max_length(self) -> int:
        return max((monomial_length(m) for m in self.terms), default=0)

    def __add__(self, other):
        if not isinstance(other, HomologyClass):
            return NotImplemented
        out = dict(self.terms)
        for mono, c in other.terms.items():
            out[mono] = out.get(mono, 0) + c
        return HomologyClass(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return HomologyClass({m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return HomologyClass({m: c * other for m, c in self.terms.items()})
        if isinstance(other, HomologyClass):
            return pontryagin_mul(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        return isinstance(other, HomologyClass) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "HomologyClass(0)"
        ordered = sorted(self.terms.items(), key=lambda kv: (monomial_degree(kv[0]), -kv[0][1], kv[0][0]))
        return "HomologyClass(" + " + ".join(f"{c}*{_label(m)}" for m, c in ordered) + ")"

    def to_json_obj(self) -> list:
        """JSON form: [{"coeff": c, "e": [...], "gamma": j}, ...], basis-ordered."""
        ordered = sorted(self.terms.items(), key=lambda kv: (monomial_degree(kv[0]), -kv[0][1], kv[0][0]))
        return [{"coeff": c, "e": list(s), "gamma": j} for (s, j), c in ordered]

    @classmethod
    def from_json_obj(cls, obj) -> "HomologyClass":
        terms: dict = {}
        for item in obj:
            mono = (tuple(item["e"]), item["gamma"])
            terms[mono] = terms.get(mono, 0) + item["coeff"]
        return cls(terms)


def pontryagin_mul(x: HomologyClass, y: HomologyClass) -> HomologyClass:
    """Product in the stable ring (no length truncation)."""
    out: dict = {}
    for m1, c1 in x.terms.items():
        for m2, c2 in y.terms.items():
            coeff, mono = mul_monomials(m1, m2)
            if coeff:
                new = out.get(mono, 0) + c1 * c2 * coeff
                if new:
                    out[mono] = new
                else:
                    out.pop(mono, None)
    return HomologyClass(out)


def restrict_to_n(x: HomologyClass, ctx: CurveContext) -> HomologyClass:
    """Projection onto the span of monomials of length <= n.

    This is the subspace identification of H_*(C^(n)) inside the stable
    ring; it is not a ring map.
    """
    return HomologyClass(
        {m: c for m, c in x.terms.items() if monomial_length(m) <= ctx.n}
    )


def betti(ctx: CurveContext, m: int) -> int:
    """Rank of H_m(C^(n)): monomials (S, j) with |S| + 2j = m, |S| + j <= n."""
    if m < 0:
        raise ValueError("degree must be >= 0")
    total = 0
    for j in range(m // 2 + 1):
        k = m - 2 * j
        if k <= 2 * ctx.g and k + j <= ctx.n:
            total += math.comb(2 * ctx.g, k)
    return total


def basis_monomials(ctx: CurveContext, m: int) -> list[Monomial]:
    """Degree-m monomial basis, gamma power descending then lexicographic."""
    out = []
    for j in range(m // 2, -1, -1):
        k = m - 2 * j
        if k > 2 * ctx.g or k + j > ctx.n:
            continue
        for s in itertools.combinations(range(1, 2 * ctx.g + 1), k):
            out.append((s, j))
    return out


def tensor_representative(mono: Monomial, ctx: CurveContext) -> TensorClass:
    """The tensor monomial e_{i_1} (x) ... (x) b^(x)j (x) 1^(x)rest."""
    s, j = mono
    if s and s[-1] > 2 * ctx.g:
        raise ValueError(f"generator index {s[-1]} out of range for genus {ctx.g}")
    if len(s) + j > ctx.n:
        raise ValueError("monomial length exceeds the symmetric power")
    factors = tuple(s) + (B,) * j + (UNIT,) * (ctx.n - len(s) - j)
    return TensorClass.monomial(factors)


# -- coproduct ---------------------------------------------------------------

def tensor_square_mul(a: dict, b: dict) -> dict:
    """Product in the tensor square of the stable ring, with Koszul signs."""
    out: dict = {}
    for (x1, y1), c1 in a.items():
        dy1 = monomial_degree(y1)
        for (x2, y2), c2 in b.items():
            sign = -1 if (dy1 & 1) and (monomial_degree(x2) & 1) else 1
            cx, xm = mul_monomials(x1, x2)
            if not cx:
                continue
            cy, ym = mul_monomials(y1, y2)
            if not cy:
                continue
            key = (xm, ym)
            new = out.get(key, 0) + sign * c1 * c2 * cx * cy
            if new:
                out[key] = new
            else:
                out.pop(key, None)
    return out


def _delta_e(i: int) -> dict:
    return {(((i,), 0), IOTA): 1, (IOTA, ((i,), 0)): 1}


@functools.lru_cache(maxsize=None)
def _delta_gamma(g: int, j: int) -> dict:
    """Coproduct of gamma_j; treat the returned dict as read-only.

    For j >= 2 this is (coproduct of b)^j divided by j!, which is integral;
    the gamma-pure component is the familiar sum over gamma_p (x) gamma_q.
    """
    if j == 0:
        return {(IOTA, IOTA): 1}
    if j == 1:
        terms = {(((), 1), IOTA): 1, (IOTA, ((), 1)): 1}
        for i in range(1, g + 1):
            terms[(((2 * i - 1,), 0), ((2 * i,), 0))] = 1
            terms[(((2 * i,), 0), ((2 * i - 1,), 0))] = -1
        return terms
    base = _delta_gamma(g, 1)
    power = dict(base)
    for _ in range(j - 1):
        power = tensor_square_mul(power, base)
    fact = math.factorial(j)
    out = {}
    for key, coeff in power.items():
        q, r = divmod(coeff, fact)
        if r:
            raise IntegralityError("divided-power coproduct is not integral")
        if q:
            out[key] = q
    return out


def coproduct(x: HomologyClass, ctx: CurveContext) -> dict:
    """Coproduct as an integer combination {(monomial, monomial): coeff}."""
    out: dict = {}
    for (s, j), coeff in x.terms.items():
        term = {(IOTA, IOTA): 1}
        for i in s:
            term = tensor_square_mul(term, _delta_e(i))
        term = tensor_square_mul(term, _delta_gamma(ctx.g, j))
        for key, c in term.items():
            new = out.get(key, 0) + coeff * c
            if new:
                out[key] = new
            else:
                out.pop(key, None)
    return out


def reduced_coproduct(x: HomologyClass, ctx: CurveContext) -> dict:
    """Coproduct with the primitive part (unit on either side) removed."""
    return {
        key: c
        for key, c in coproduct(x, ctx).items()
        if key[0] != IOTA and key[1] != IOTA
    }


def primitive_basis(ctx: CurveContext, m: int) -> list[HomologyClass]:
    """Integral basis of the degree-m primitives within lengths <= n.

    Kernel of the reduced coproduct, computed by exact integer row
    reduction; each basis vector is normalized to a positive coefficient on
    its first monomial in basis order.
    """
    if m < 1:
        raise ValueError("degree must be >= 1")
    monos = basis_monomials(ctx, m)
    if not monos:
        return []
    col_index: dict = {}
    sparse_rows = []
    for mono in monos:
        red = reduced_coproduct(HomologyClass({mono: 1}), ctx)
        row = {}
        for key, c in red.items():
            col = col_index.setdefault(key, len(col_index))
            row[col] = c
        sparse_rows.append(row)
    ncols = max(len(col_index), 1)
    rows = [[r.get(c, 0) for c in range(ncols)] for r in sparse_rows]
    kernel = linalg.left_kernel_int(rows)
    return [
        HomologyClass({monos[i]: v for i, v in enumerate(vec) if v})
        for vec in kernel
    ]


def spherical_class(ctx: CurveContext) -> HomologyClass:
    """The degree-2 primitive b - sum of symplectic pair products.

    Defined for n >= 2, where the surface's attaching map dies and the
    2-sphere maps in.
    """
    if ctx.n < 2:
        raise ValueError("the spherical class needs n >= 2")
    terms = {((), 1): 1}
    for i in range(1, ctx.g + 1):
        terms[((2 * i - 1, 2 * i), 0)] = -1
    return HomologyClass(terms)
