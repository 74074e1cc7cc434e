"""Derived invariants and embedding obstructions for symmetric powers.

Everything here reduces to the exact ring machinery: Chern classes and the
Hirzebruch signature check, the canonical class and its homology form, the
Euler characteristic, the Clifford bound with vanishing certificates, the
degrees of rational curves in the symmetric square, and the mod-2
characteristic test together with the Kervaire-Milnor congruence for
smoothly embedded spheres.
"""

import functools
from dataclasses import dataclass, field

from .core import CurveContext, IntegralityError
from .cohomology import (
    CohomologyClass,
    coordinates,
    from_coordinates,
    kronecker,
    theta,
)
from .duality import (
    evaluate_top,
    intersection,
    intersection_matrix,
    inverse_poincare_dual,
    poincare_dual,
    signature,
)
from .homology import HomologyClass, basis_monomials, betti, spherical_class


def chern_classes(ctx: CurveContext) -> tuple[CohomologyClass, CohomologyClass]:
    """First and second Chern classes of the symmetric power.

    c1 = (n - g + 1) b* - theta and c2 = (n-g+1)(n-g)/2 (b*)^2
    - (n-g) b* theta + theta^2 / 2; the halved terms are expanded first so
    every intermediate coefficient is an integer.
    """
    g, n = ctx.g, ctx.n
    th = theta(ctx)
    bs = CohomologyClass.bstar(ctx)
    c1 = (n - g + 1) * bs - th
    quad = (n - g + 1) * (n - g)
    if quad % 2:
        raise IntegralityError("(n-g+1)(n-g) is odd")
    theta_sq = th * th
    half_theta_sq_terms = {}
    for mono, coeff in theta_sq.terms.items():
        q, r = divmod(coeff, 2)
        if r:
            raise IntegralityError("theta^2 has an odd coefficient")
        half_theta_sq_terms[mono] = q
    c2 = (
        (quad // 2) * CohomologyClass.bstar(ctx, 2)
        - (n - g) * (bs * th)
        + CohomologyClass(ctx, half_theta_sq_terms)
    )
    return c1, c2


def hirzebruch_signature(g: int) -> int:
    """Signature of the symmetric square via (1/3) <c1^2 - 2 c2, gamma_2>."""
    ctx = CurveContext(g, 2)
    c1, c2 = chern_classes(ctx)
    gamma2 = ((), 2)
    value = kronecker(c1 * c1, gamma2) - 2 * kronecker(c2, gamma2)
    q, r = divmod(value, 3)
    if r:
        raise IntegralityError("signature integrand is not divisible by 3")
    return q


def euler_characteristic(ctx: CurveContext) -> int:
    """Alternating sum of the Betti numbers of C^(n)."""
    return sum((-1) ** m * betti(ctx, m) for m in range(2 * ctx.n + 1))


def canonical_class(ctx: CurveContext):
    """The canonical class as (cohomology form, homology form or None).

    K dual is (g - n - 1) b* + theta; the homology form (only computed for
    n = 2, where the class sits in middle degree) is its inverse Poincare
    dual.
    """
    k_coh = (ctx.g - ctx.n - 1) * CohomologyClass.bstar(ctx) + theta(ctx)
    k_hom = inverse_poincare_dual(k_coh, ctx) if ctx.n == 2 else None
    return k_coh, k_hom


@dataclass(frozen=True)
class CliffordCertificate:
    """Clifford-type bound plus the algebraic evidence for it.

    branch records which vanishing product was used: a product of m+1
    distinct (b* - e*e*) factors, or the single top relation when the pair
    supply runs out (n >= 2g).  bstar_coefficient is the coefficient of the
    pure (b*)^bound monomial in the canonical form of the length-m product;
    it being nonzero is what makes the bound sharp.
    """

    g: int
    n: int
    bound: int
    branch: str
    vanishing_degree: int
    bstar_coefficient: int

    def to_json_obj(self) -> dict:
        return {
            "g": self.g,
            "n": self.n,
            "bound": self.bound,
            "certificate": {
                "branch": self.branch,
                "vanishing_degree": self.vanishing_degree,
                "bstar_coefficient": self.bstar_coefficient,
            },
        }


def _pair_factor(ctx: CurveContext, k: int) -> CohomologyClass:
    w = CohomologyClass.monomial(ctx, (2 * k - 1, 2 * k), 0)
    return CohomologyClass.bstar(ctx) - w


def clifford_bound(g: int, n: int) -> CliffordCertificate:
    """Largest m with a degree-nonzero map from P^m, with certificates.

    m = floor(n/2) for n < 2g and m = n - g for n >= 2g.  The certificate
    checks that the (m+1)-fold product vanishes in every coordinate while
    the m-fold product keeps a nonzero pure (b*)^m coefficient in its
    canonical form.
    """
    if g < 1:
        raise ValueError("genus must be >= 1")
    if n < 1:
        raise ValueError("symmetric power must be >= 1")
    ctx = CurveContext(g, n)
    m_max = n // 2 if n < 2 * g else n - g

    if m_max + 1 <= g:
        branch = "disjoint-pairs"
        vanish = CohomologyClass.unit(ctx)
        for k in range(1, m_max + 2):
            vanish = vanish * _pair_factor(ctx, k)
    else:
        # pairs run out; n >= 2g here, so the single top relation applies
        branch = "top-relation"
        vanish = CohomologyClass.bstar(ctx, n - 2 * g + 1)
        for k in range(1, g + 1):
            vanish = vanish * (-1 * _pair_factor(ctx, k))
    vdeg = 2 * (m_max + 1)
    if any(coordinates(vanish, vdeg)):
        raise IntegralityError("Clifford vanishing certificate failed")

    sharp = CohomologyClass.unit(ctx)
    for k in range(1, min(m_max, g) + 1):
        sharp = sharp * _pair_factor(ctx, k)
    if m_max > g:
        sharp = sharp * CohomologyClass.bstar(ctx, m_max - g)
    canonical = from_coordinates(ctx, 2 * m_max, coordinates(sharp, 2 * m_max))
    lead = canonical.terms.get(((), m_max), 0)
    if lead == 0:
        raise IntegralityError("Clifford sharpness certificate failed")
    return CliffordCertificate(g, n, m_max, branch, vdeg, lead)


def rational_curve_degrees(g: int) -> set[int]:
    """Positive degrees k with k(g-1)(1-k) = 2(k-1), by exact scan.

    The adjunction formula for a rational curve in the symmetric square
    forces this equation; integer roots are bounded by 2 + 2|g - 1|.
    """
    if g < 2:
        raise ValueError("genus must be >= 2")
    bound = 2 + 2 * abs(g - 1)
    return {k for k in range(1, bound + 1) if k * (g - 1) * (1 - k) == 2 * (k - 1)}


@functools.lru_cache(maxsize=None)
def _mod2_profile(g: int):
    """Parities of u . tau and tau . tau over the degree-2 monomial basis."""
    ctx = CurveContext(g, 2)
    u = spherical_class(ctx)
    du = poincare_dual(u, ctx)
    pairs = []
    for tau in basis_monomials(ctx, 2):
        dt = poincare_dual(HomologyClass({tau: 1}), ctx)
        pairs.append((evaluate_top(du * dt) % 2, evaluate_top(dt * dt) % 2))
    return tuple(pairs)


def characteristic_test(g: int, k: int) -> bool:
    """Whether k times the spherical class is characteristic in C^(2).

    Checks the mod-2 condition (k u) . tau = tau . tau against every
    monomial in the degree-2 basis.
    """
    return all((k * ut - tt) % 2 == 0 for ut, tt in _mod2_profile(g))


@functools.lru_cache(maxsize=None)
def _u_self_intersection(g: int) -> int:
    ctx = CurveContext(g, 2)
    u = spherical_class(ctx)
    return intersection(u, u, ctx)


@functools.lru_cache(maxsize=None)
def _signature_of_square(g: int) -> int:
    return signature(intersection_matrix(CurveContext(g, 2)))


@dataclass(frozen=True)
class ObstructionReport:
    """Outcome bundle of the embedded-sphere obstruction tests for k u."""

    g: int
    n: int
    k: int
    is_characteristic: bool
    self_intersection: int
    signature: int
    km_congruent: bool
    notes: tuple = field(default_factory=tuple)

    def to_json_obj(self) -> dict:
        return {
            "g": self.g,
            "n": self.n,
            "k": self.k,
            "characteristic": self.is_characteristic,
            "self_intersection": self.self_intersection,
            "signature": self.signature,
            "km_congruent": self.km_congruent,
            "notes": list(self.notes),
        }


def km_admissible(g: int, k: int) -> ObstructionReport:
    """Kervaire-Milnor congruence report for the class k u in C^(2).

    self-intersection is k^2 (u . u), the signature comes from the middle
    intersection form, and km_congruent records whether they agree mod 16.
    The characteristic property is verified by the mod-2 test rather than
    assumed from the parity of k.
    """
    is_char = characteristic_test(g, k)
    u_self = _u_self_intersection(g)
    sig = _signature_of_square(g)
    self_int = k * k * u_self
    km = (self_int - sig) % 16 == 0
    notes = [
        f"self-intersection k^2 (u.u) = {k}^2 * {u_self}",
        "signature from the middle-dimensional intersection form",
    ]
    if k % 2 == 0:
        notes.append(
            "k even: k u is not characteristic, so the congruence is not an "
            "embedding obstruction; value reported for reference"
        )
    if g == 0:
        notes.append(
            "g=0: smooth representatives exist exactly for |k| < 3 "
            "(Thom conjecture, Kronheimer-Mrowka); the congruence alone is "
            "strictly weaker and is reported as computed"
        )
    return ObstructionReport(
        g=g,
        n=2,
        k=k,
        is_characteristic=is_char,
        self_intersection=self_int,
        signature=sig,
        km_congruent=km,
        notes=tuple(notes),
    )
