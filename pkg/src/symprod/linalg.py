"""Exact linear algebra over the integers and rationals.

Small, dependency-free routines: fraction-free determinants, unimodular
inversion, integer kernels via unimodular row reduction, sparse rank over Q
and the signature of a symmetric matrix by congruence diagonalization.
No floating point anywhere.
"""

from fractions import Fraction

from .core import IntegralityError


def identity_int(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(mat: list[list]) -> list[list]:
    return [list(col) for col in zip(*mat)] if mat else []


def matmul_int(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    if not a or not b:
        return []
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def det_int(mat: list[list[int]]) -> int:
    """Determinant of an integer matrix by fraction-free Bareiss elimination."""
    n = len(mat)
    if n == 0:
        return 1
    a = [row[:] for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def invert_unimodular(mat: list[list[int]]) -> list[list[int]]:
    """Inverse of an integer matrix, asserted to be integral.

    Raises IntegralityError when the matrix is singular or the inverse is not
    integer-valued (determinant not +-1); such a failure means a duality or
    basis assumption broke down.
    """
    n = len(mat)
    if n == 0:
        return []
    a = [[Fraction(v) for v in row] for row in mat]
    inv = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            raise IntegralityError("singular pairing matrix")
        a[col], a[piv] = a[piv], a[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        d = a[col][col]
        a[col] = [v / d for v in a[col]]
        inv[col] = [v / d for v in inv[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
                inv[r] = [v - f * w for v, w in zip(inv[r], inv[col])]
    out = []
    for row in inv:
        ints = []
        for v in row:
            if v.denominator != 1:
                raise IntegralityError("pairing matrix is not unimodular")
            ints.append(int(v))
        out.append(ints)
    return out


def left_kernel_int(rows: list[list[int]]) -> list[list[int]]:
    """Basis of the left kernel {x : x A = 0} of an integer matrix, over Z.

    Row-reduces A by unimodular operations while tracking the transformation,
    so the returned vectors form a basis of the full (saturated) kernel
    lattice.  Vectors are normalized to positive leading entry and sorted by
    leading index.
    """
    m = len(rows)
    if m == 0:
        return []
    ncols = len(rows[0])
    a = [row[:] for row in rows]
    u = identity_int(m)
    rank = 0
    for col in range(ncols):
        if rank == m:
            break
        while True:
            nz = [i for i in range(rank, m) if a[i][col]]
            if not nz:
                break
            i0 = min(nz, key=lambda i: abs(a[i][col]))
            a[rank], a[i0] = a[i0], a[rank]
            u[rank], u[i0] = u[i0], u[rank]
            clean = True
            piv = a[rank][col]
            for i in range(rank + 1, m):
                if a[i][col]:
                    q = a[i][col] // piv
                    if q:
                        a[i] = [x - q * y for x, y in zip(a[i], a[rank])]
                        u[i] = [x - q * y for x, y in zip(u[i], u[rank])]
                    if a[i][col]:
                        clean = False
            if clean:
                break
        if rank < m and a[rank][col]:
            rank += 1
            if rank == m:
                break
    kernel = []
    for i in range(rank, m):
        vec = u[i]
        lead = next((j for j in range(m) if vec[j]), None)
        if lead is not None and vec[lead] < 0:
            vec = [-v for v in vec]
        kernel.append(vec)
    kernel.sort(key=lambda v: next((j for j in range(m) if v[j]), m))
    return kernel


def sparse_rank(rows) -> int:
    """Rank over Q of sparse vectors given as dicts {column index: value}."""
    pivots: dict = {}
    rank = 0
    for row in rows:
        r = {c: Fraction(v) for c, v in row.items() if v}
        while r:
            c = min(r)
            if c not in pivots:
                inv = 1 / r[c]
                pivots[c] = {cc: vv * inv for cc, vv in r.items()}
                rank += 1
                break
            f = r[c]
            for cc, vv in pivots[c].items():
                nv = r.get(cc, 0) - f * vv
                if nv:
                    r[cc] = nv
                else:
                    r.pop(cc, None)
    return rank


def signature_of_symmetric(mat: list[list[int]]) -> int:
    """Signature of a nondegenerate symmetric integer matrix.

    Exact congruence diagonalization over Q with symmetric pivoting; a zero
    diagonal is repaired by a simultaneous row/column addition.  Raises
    ValueError on a non-symmetric or degenerate input.
    """
    n = len(mat)
    for i in range(n):
        for j in range(i + 1, n):
            if mat[i][j] != mat[j][i]:
                raise ValueError("matrix is not symmetric")
    a = [[Fraction(v) for v in row] for row in mat]
    sig = 0
    for k in range(n):
        if a[k][k] == 0:
            swap = next((j for j in range(k + 1, n) if a[j][j]), None)
            if swap is not None:
                a[k], a[swap] = a[swap], a[k]
                for row in a:
                    row[k], row[swap] = row[swap], row[k]
            else:
                off = next((j for j in range(k + 1, n) if a[k][j]), None)
                if off is None:
                    raise ValueError("degenerate symmetric form")
                for j in range(n):
                    a[k][j] += a[off][j]
                for i in range(n):
                    a[i][k] += a[i][off]
        d = a[k][k]
        sig += 1 if d > 0 else -1
        for i in range(k + 1, n):
            if a[i][k]:
                f = a[i][k] / d
                for j in range(k + 1, n):
                    a[i][j] -= f * a[k][j]
                a[i][k] = Fraction(0)
                a[k][i] = Fraction(0)
    return sig
