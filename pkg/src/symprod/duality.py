"""Poincare duality and the intersection form on symmetric powers.

The dual of a homology class y is pinned down by the pairing equation
< dual(y) cup w, gamma_n > = < w, y > over all spanning cohomology w of the
complementary degree, solved exactly; the cup-pairing matrix between
complementary spanning sets is unimodular, so duals are integral and the
closed-form tables (gamma_{n-i} dual to (b*)^i, and so on) fall out as
regression tests rather than assumptions.

The middle-dimensional intersection matrix and its signature are computed
without floating point: the signature comes from congruence diagonalization
over the rationals.
"""

import csv
import functools
import io
from dataclasses import dataclass

from .core import CurveContext, IntegralityError
from . import linalg
from .cohomology import (
    CohomologyClass,
    _pairing_data,
    from_coordinates,
    kronecker,
    spanning_monomials,
)
from .homology import (
    HomologyClass,
    Monomial,
    basis_monomials,
    monomial_degree,
    monomial_length,
    _label,
)


def evaluate_top(x: CohomologyClass) -> int:
    """Evaluation against the fundamental class gamma_n (degree 2n only)."""
    return kronecker(x, ((), x.ctx.n))


@functools.lru_cache(maxsize=None)
def _dual_system(g: int, n: int, m: int):
    """Cup-pairing matrix A[w][z] = <z cup w, gamma_n> and its inverse.

    Rows run over spanning monomials of degree m, columns over spanning
    monomials of degree 2n - m.
    """
    ctx = CurveContext(g, n)
    rows_w = spanning_monomials(ctx, m)
    cols_z = spanning_monomials(ctx, 2 * n - m)
    matrix = []
    for w in rows_w:
        wc = CohomologyClass(ctx, {w: 1})
        row = []
        for z in cols_z:
            zc = CohomologyClass(ctx, {z: 1})
            row.append(evaluate_top(zc * wc))
        matrix.append(row)
    if len(rows_w) != len(cols_z):
        raise IntegralityError("complementary spanning sets have different sizes")
    return rows_w, cols_z, matrix, linalg.invert_unimodular(matrix)


def poincare_dual(y: HomologyClass, ctx: CurveContext) -> CohomologyClass:
    """The cohomology class dual to y under the fundamental-class pairing."""
    if y.is_zero():
        return CohomologyClass.zero(ctx)
    if not y.is_homogeneous():
        raise ValueError("Poincare dual needs a homogeneous class")
    if y.max_length() > ctx.n:
        raise ValueError("class is not supported on lengths <= n")
    m = y.degree()
    if m > 2 * ctx.n:
        raise ValueError("degree exceeds the dimension of the space")
    rows_w, cols_z, _, inv = _dual_system(ctx.g, ctx.n, m)
    rhs = []
    for w in rows_w:
        wc = CohomologyClass(ctx, {w: 1})
        rhs.append(sum(c * kronecker(wc, h) for h, c in y.terms.items()))
    terms = {}
    for col, mono in enumerate(cols_z):
        c = sum(inv[col][row] * rhs[row] for row in range(len(rhs)))
        if c:
            terms[mono] = c
    return CohomologyClass(ctx, terms)


def inverse_poincare_dual(z: CohomologyClass, ctx: CurveContext) -> HomologyClass:
    """The homology class whose Poincare dual is z."""
    if z.ctx != ctx:
        raise ValueError("context mismatch")
    if z.is_representation_zero():
        return HomologyClass.zero()
    if not z.is_homogeneous():
        raise ValueError("inverse dual needs a homogeneous class")
    d = z.degree()
    m = 2 * ctx.n - d
    if m < 0:
        raise ValueError("degree exceeds the dimension of the space")
    rows_w, _, _, _ = _dual_system(ctx.g, ctx.n, m)
    _, basis, pairing = _pairing_data(ctx.g, ctx.n, m)
    inv = linalg.invert_unimodular(pairing)
    lhs = []
    for w in rows_w:
        wc = CohomologyClass(ctx, {w: 1})
        lhs.append(evaluate_top(z * wc))
    terms = {}
    for col, mono in enumerate(basis):
        c = sum(inv[col][row] * lhs[row] for row in range(len(lhs)))
        if c:
            terms[mono] = c
    return HomologyClass(terms)


def intersection(x: HomologyClass, y: HomologyClass, ctx: CurveContext) -> int:
    """Intersection number <dual(x) cup dual(y), gamma_n>."""
    if x.is_zero() or y.is_zero():
        return 0
    if not (x.is_homogeneous() and y.is_homogeneous()):
        raise ValueError("intersection needs homogeneous classes")
    if x.degree() + y.degree() != 2 * ctx.n:
        raise ValueError("degrees must be complementary (sum to 2n)")
    return evaluate_top(poincare_dual(x, ctx) * poincare_dual(y, ctx))


@dataclass
class IntersectionMatrix:
    """Middle-dimensional intersection pairing over the monomial basis."""

    basis: list
    entries: list

    def labels(self) -> list[str]:
        return [_label(mono) for mono in self.basis]

    def determinant(self) -> int:
        return linalg.det_int(self.entries)

    def to_json_obj(self) -> dict:
        return {"basis": self.labels(), "entries": [row[:] for row in self.entries]}

    def to_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out)
        labels = self.labels()
        writer.writerow([""] + labels)
        for label, row in zip(labels, self.entries):
            writer.writerow([label] + row)
        return out.getvalue()


def intersection_matrix(ctx: CurveContext) -> IntersectionMatrix:
    """Pairwise intersections of the degree-n monomial basis.

    Basis order: gamma power descending, then lexicographic on the index
    set.  With P the Kronecker pairing matrix and A the cup-pairing matrix
    in middle degree, the entries are P^T A^{-1} P: row i holds the dual of
    basis[i] expressed through A^{-1}, cupped against the dual of basis[j].
    """
    n = ctx.n
    basis = basis_monomials(ctx, n)
    _, _, pairing = _pairing_data(ctx.g, ctx.n, n)
    _, _, cup_matrix, cup_inv = _dual_system(ctx.g, ctx.n, n)
    # duals in spanning coordinates: C = A^{-1} P, then M = (C)^T A^T C = P^T A^{-T} A^T A^{-1} P
    c = linalg.matmul_int(cup_inv, pairing)
    m = linalg.matmul_int(
        linalg.transpose(c), linalg.matmul_int(linalg.transpose(cup_matrix), c)
    )
    if not basis:
        return IntersectionMatrix([], [])
    return IntersectionMatrix(basis, m)


def signature(matrix) -> int:
    """Signature of a symmetric nondegenerate intersection matrix."""
    entries = matrix.entries if isinstance(matrix, IntersectionMatrix) else matrix
    return linalg.signature_of_symmetric(entries)
