"""Brute-force verifier over the rationals.

Takes any finite graded-commutative ring given by structure constants,
forms its n-fold tensor power with the signed symmetric-group action
(adjacent factors swap with the Koszul sign), and computes ranks of the
invariant subspaces by symmetrizing a spanning set and row-reducing
exactly.  Multiplication of tensor words is reimplemented here from the
structure constants, independently of the main engine, so products can be
cross-checked between the two code paths.

The oracle certifies ranks and vanishing only; integral structure is the
main engine's job.
"""

import itertools
from fractions import Fraction

from .core import B, UNIT, TensorClass
from .homology import HomologyClass, pontryagin_mul
from . import linalg


class GradedRingSpec:
    """A finite graded-commutative associative ring with unit.

    basis is a list of (label, degree) pairs; products maps (left, right)
    label pairs to {label: coefficient} dicts, with omitted pairs zero and
    unit products implied.  Graded commutativity and associativity are
    validated exhaustively on construction.
    """

    def __init__(self, basis, products):
        self.labels = [label for label, _ in basis]
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("duplicate basis labels")
        self.degree = {label: int(deg) for label, deg in basis}
        if any(d < 0 for d in self.degree.values()):
            raise ValueError("degrees must be >= 0")
        units = [label for label, d in self.degree.items() if d == 0]
        if len(units) != 1:
            raise ValueError("expected exactly one degree-0 basis label (the unit)")
        self.unit = units[0]
        table = {}
        for (left, right), combo in products.items():
            if left not in self.degree or right not in self.degree:
                raise ValueError(f"product involves unknown label ({left}, {right})")
            clean = {lab: int(c) for lab, c in combo.items() if c}
            for lab in clean:
                if lab not in self.degree:
                    raise ValueError(f"product result has unknown label {lab}")
            table[(left, right)] = clean
        self.table = table
        self._validate()

    def mul(self, a: str, b: str) -> dict:
        if a == self.unit:
            return {b: 1}
        if b == self.unit:
            return {a: 1}
        return self.table.get((a, b), {})

    def parity(self, label: str) -> int:
        return self.degree[label] & 1

    def _validate(self):
        labs = self.labels
        for a in labs:
            for b in labs:
                ab = self.mul(a, b)
                da, db = self.degree[a], self.degree[b]
                for lab, c in ab.items():
                    if self.degree[lab] != da + db:
                        raise ValueError(f"product {a}*{b} is not graded")
                sign = -1 if (da & 1) and (db & 1) else 1
                ba = self.mul(b, a)
                if {k: sign * v for k, v in ba.items()} != ab:
                    raise ValueError(f"product is not graded-commutative on ({a}, {b})")
        for a in labs:
            for b in labs:
                for c in labs:
                    left = {}
                    for lab, coeff in self.mul(a, b).items():
                        for lab2, coeff2 in self.mul(lab, c).items():
                            left[lab2] = left.get(lab2, 0) + coeff * coeff2
                    right = {}
                    for lab, coeff in self.mul(b, c).items():
                        for lab2, coeff2 in self.mul(a, lab).items():
                            right[lab2] = right.get(lab2, 0) + coeff * coeff2
                    if {k: v for k, v in left.items() if v} != {k: v for k, v in right.items() if v}:
                        raise ValueError(f"product is not associative on ({a}, {b}, {c})")

    def to_json_obj(self) -> dict:
        return {
            "basis": [{"label": lab, "degree": self.degree[lab]} for lab in self.labels],
            "products": [
                {
                    "left": left,
                    "right": right,
                    "result": [{"coeff": c, "label": lab} for lab, c in sorted(combo.items())],
                }
                for (left, right), combo in sorted(self.table.items())
            ],
        }

    @classmethod
    def from_json_obj(cls, obj) -> "GradedRingSpec":
        basis = [(item["label"], item["degree"]) for item in obj["basis"]]
        products = {}
        for entry in obj.get("products", []):
            combo = {item["label"]: item["coeff"] for item in entry["result"]}
            products[(entry["left"], entry["right"])] = combo
        return cls(basis, products)

    @classmethod
    def surface(cls, g: int) -> "GradedRingSpec":
        """H of a genus-g surface: unit, e1..e2g in degree 1, b in degree 2."""
        basis = [("1", 0)] + [(f"e{i}", 1) for i in range(1, 2 * g + 1)] + [("b", 2)]
        products = {}
        for i in range(1, 2 * g + 1):
            for j in range(1, 2 * g + 1):
                if j == i + 1 and i % 2 == 1:
                    products[(f"e{i}", f"e{j}")] = {"b": 1}
                elif j == i - 1 and i % 2 == 0:
                    products[(f"e{i}", f"e{j}")] = {"b": -1}
                else:
                    products[(f"e{i}", f"e{j}")] = {}
            products[(f"e{i}", "b")] = {}
            products[("b", f"e{i}")] = {}
        products[("b", "b")] = {}
        return cls(basis, products)

    @classmethod
    def wedge_of_circles(cls, k: int) -> "GradedRingSpec":
        """H of a wedge of k circles: all positive-degree products vanish."""
        basis = [("1", 0)] + [(f"a{i}", 1) for i in range(1, k + 1)]
        products = {
            (f"a{i}", f"a{j}"): {}
            for i in range(1, k + 1)
            for j in range(1, k + 1)
        }
        return cls(basis, products)

    @classmethod
    def sphere(cls) -> "GradedRingSpec":
        """H of the 2-sphere: one class in degree 2 squaring to zero."""
        return cls([("1", 0), ("s", 2)], {("s", "s"): {}})


def _permute_word(word: tuple, parities: tuple, perm) -> tuple[int, tuple]:
    """Apply a permutation to a tensor word by adjacent swaps.

    perm[i] is the destination slot of factor i; each adjacent swap of two
    odd factors flips the sign.
    """
    items = [(perm[i], word[i], parities[i]) for i in range(len(word))]
    sign = 1
    changed = True
    while changed:
        changed = False
        for p in range(len(items) - 1):
            if items[p][0] > items[p + 1][0]:
                if items[p][2] and items[p + 1][2]:
                    sign = -sign
                items[p], items[p + 1] = items[p + 1], items[p]
                changed = True
    return sign, tuple(item[1] for item in items)


def invariant_rank(spec: GradedRingSpec, n: int, m: int) -> int:
    """Rank of the degree-m invariants of the n-fold signed tensor power.

    Symmetrizes one word per orbit over the full symmetric group and
    row-reduces the resulting vectors exactly over Q.
    """
    if n < 1:
        raise ValueError("tensor power must be >= 1")
    words = [
        w
        for w in itertools.product(spec.labels, repeat=n)
        if sum(spec.degree[lab] for lab in w) == m
    ]
    index = {w: i for i, w in enumerate(words)}
    reps = sorted({tuple(sorted(w)) for w in words})
    rows = []
    for rep in reps:
        pars = tuple(spec.parity(lab) for lab in rep)
        vec: dict = {}
        for perm in itertools.permutations(range(n)):
            sign, image = _permute_word(rep, pars, perm)
            col = index[image]
            vec[col] = vec.get(col, 0) + sign
        vec = {c: v for c, v in vec.items() if v}
        if vec:
            rows.append(vec)
    return linalg.sparse_rank(rows)


def _word_mul(spec: GradedRingSpec, u: tuple, v: tuple) -> dict:
    """Product of two tensor words, interleaved by explicit adjacent swaps."""
    n = len(u)
    seq = list(u) + list(v)
    pars = [spec.parity(lab) for lab in seq]
    sign = 1
    for p in range(n):
        idx = n + p
        while idx > 2 * p + 1:
            if pars[idx] and pars[idx - 1]:
                sign = -sign
            seq[idx - 1], seq[idx] = seq[idx], seq[idx - 1]
            pars[idx - 1], pars[idx] = pars[idx], pars[idx - 1]
            idx -= 1
    partial = {(): sign}
    for p in range(n):
        combo = spec.mul(seq[2 * p], seq[2 * p + 1])
        if not combo:
            return {}
        new = {}
        for word, c in partial.items():
            for lab, c2 in combo.items():
                new[word + (lab,)] = c * c2
        partial = new
    return partial


def oracle_tensor_mul(spec: GradedRingSpec, x: dict, y: dict) -> dict:
    """Multiply tensor classes given as {word: coeff} via the spec's table."""
    out: dict = {}
    for u, cu in x.items():
        for v, cv in y.items():
            for word, c in _word_mul(spec, u, v).items():
                new = out.get(word, 0) + cu * cv * c
                if new:
                    out[word] = new
                else:
                    out.pop(word, None)
    return out


def _surface_words(x: TensorClass) -> dict:
    """Translate core tensor terms into surface-ring label words."""
    names = {UNIT: "1", B: "b"}
    return {
        tuple(names.get(e, f"e{e}") for e in key): c
        for key, c in x.terms.items()
    }


def invariant_cup_check(spec: GradedRingSpec, n: int, x: TensorClass, y: TensorClass) -> bool:
    """Whether the engine's tensor product agrees with the oracle's.

    x and y are classes in the n-fold power of the surface ring (typically
    pullback images); their product is recomputed from the structure
    constants with swap-by-swap Koszul signs and compared.
    """
    if x.arity != n or y.arity != n:
        raise ValueError("arity mismatch")
    engine = _surface_words(x * y)
    oracle = oracle_tensor_mul(spec, _surface_words(x), _surface_words(y))
    return engine == oracle


def pushforward(t: TensorClass) -> HomologyClass:
    """Transfer of a pure tensor monomial to the Pontryagin ring.

    Units contribute the identity, odd generators their classes, and each
    orientation factor a gamma_1; the factors multiply in order, so
    b (x) b maps to 2 gamma_2.
    """
    if len(t.terms) != 1:
        raise ValueError("pushforward needs a single tensor monomial")
    (key, coeff), = t.terms.items()
    out = HomologyClass.unit() * coeff
    for elt in key:
        if elt == UNIT:
            continue
        factor = HomologyClass.gamma(1) if elt == B else HomologyClass.e(elt)
        out = pontryagin_mul(out, factor)
    return out


def invariant_rank_total(spec: GradedRingSpec, n: int) -> int:
    """Sum of the invariant ranks over all degrees."""
    top = n * max(spec.degree.values())
    return sum(invariant_rank(spec, n, m) for m in range(top + 1))
