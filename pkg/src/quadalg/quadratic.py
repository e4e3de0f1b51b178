"""Quadratic algebras T(V)/(R): duals, graded dimensions, Koszul data,
and truncated multiplication tables.

An algebra is a tuple of generator names plus a canonical subspace R of the
degree-two word coordinates.  All degreewise data (relation spans, quotient
bases, structure constants) is derived from R by exact elimination and
cached, keyed on the presentation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .frobenius import GradedAutomorphism, GradedFDAlgebra
from .linalg import (ConsistencyError, DEFAULT_LIMITS, LinAlgError, Limits,
                     Matrix, ONE, Subspace, Vec, ZERO)
from .tensors import (DegreeOneMap, Tensor, apply_slotwise, index_to_word,
                      preserves_subspace, word_to_index)


def word_label(names, word) -> str:
    if not word:
        return "1"
    return "".join(names[i] for i in word)


@dataclass(frozen=True)
class QuadraticAlgebra:
    """A quadratic presentation: generator names and the relation subspace."""

    names: tuple[str, ...]
    relations: Subspace

    def __post_init__(self):
        n = len(self.names)
        if n == 0:
            raise LinAlgError("at least one generator is required")
        if self.relations.ambient != n * n:
            raise LinAlgError("relation subspace must live in degree-two words")

    @property
    def n(self) -> int:
        return len(self.names)

    @staticmethod
    def from_relation_tensors(names, tensors) -> "QuadraticAlgebra":
        names = tuple(names)
        n = len(names)
        for t in tensors:
            if t.degree != 2 or t.ambient != n:
                raise LinAlgError("relations must be degree-two tensors over the generators")
        space = Subspace.from_spanning([t.to_sparse_map() for t in tensors], n * n)
        return QuadraticAlgebra(names, space)

    def relation_tensors(self) -> tuple[Tensor, ...]:
        return tuple(Tensor.from_vector(r, 2, self.n)
                     for r in self.relations.basis.entries)


def dual_names(names) -> tuple[str, ...]:
    out = tuple(s[:-1] if s.endswith("*") else s + "*" for s in names)
    if len(set(out)) != len(out):
        out = tuple(s + "*" for s in names)
    return out


def quadratic_dual(alg: QuadraticAlgebra) -> QuadraticAlgebra:
    """The quadratic algebra on the dual space with relations R-perp.

    Dual coordinates pair with word coordinates by the plain dot product,
    slot by slot with no sign.
    """
    return QuadraticAlgebra(dual_names(alg.names), alg.relations.annihilator())


@lru_cache(maxsize=None)
def _relation_degree_subspace(alg: QuadraticAlgebra, k: int,
                              limits: Limits) -> Subspace:
    n = alg.n
    limits.check_words(n, k)
    if k < 2:
        return Subspace.zero(n ** k)
    if k == 2:
        return alg.relations
    rows = []
    rel_sparse = [row for _, row in alg.relations._sparse_rows]
    for i in range(k - 1):
        right = k - i - 2
        stride_left = n ** (k - i)
        stride_rel = n ** right
        for u in range(n ** i):
            base_u = u * stride_left
            for row in rel_sparse:
                for v in range(n ** right):
                    rows.append({base_u + c * stride_rel + v: val
                                 for c, val in row.items()})
    return Subspace.from_spanning(rows, n ** k)


def relation_degree_subspace(alg: QuadraticAlgebra, k: int,
                             limits: Limits = DEFAULT_LIMITS) -> Subspace:
    """Span of all degree-k words containing a relation in adjacent slots."""
    return _relation_degree_subspace(alg, k, limits)


def graded_dims(alg: QuadraticAlgebra, bound: int,
                limits: Limits = DEFAULT_LIMITS) -> tuple[int, ...]:
    """Dimensions of the graded components of T(V)/(R) up to the bound."""
    out = []
    for k in range(bound + 1):
        if k == 0:
            out.append(1)
        elif k == 1:
            out.append(alg.n)
        else:
            out.append(alg.n ** k - relation_degree_subspace(alg, k, limits).dim)
    return tuple(out)


@lru_cache(maxsize=None)
def _koszul_component(alg: QuadraticAlgebra, m: int, limits: Limits) -> Subspace:
    n = alg.n
    limits.check_words(n, m)
    if m == 0:
        return Subspace.full(1)
    if m == 1:
        return Subspace.full(n)
    if m == 2:
        return alg.relations
    prev = _koszul_component(alg, m - 1, limits)
    small = prev.kron(Subspace.full(n))
    rel_sparse = [row for _, row in alg.relations._sparse_rows]
    rows = []
    for u in range(n ** (m - 2)):
        base = u * n * n
        for row in rel_sparse:
            rows.append({base + c: val for c, val in row.items()})
    big = Subspace.from_spanning(rows, n ** m)
    return small.intersect(big)


def koszul_component(alg: QuadraticAlgebra, m: int,
                     limits: Limits = DEFAULT_LIMITS) -> Subspace:
    """The degree-m piece of the Koszul complex: all words landing in R
    at every adjacent slot pair."""
    return _koszul_component(alg, m, limits)


@dataclass(frozen=True)
class KoszulCertificate:
    """Outcome of the degree-bounded numeric Koszulness checks.

    This is evidence up to the bound, not a proof: both checks compare
    finitely many graded dimensions.
    """

    bound: int
    dims: tuple[int, ...]
    dual_dims: tuple[int, ...]
    component_dims: tuple[int, ...]
    component_mismatches: tuple[int, ...]
    euler_failures: tuple[int, ...]

    @property
    def passed(self) -> bool:
        return not self.component_mismatches and not self.euler_failures


def numeric_koszul_certificate(alg: QuadraticAlgebra, bound: int,
                               limits: Limits = DEFAULT_LIMITS) -> KoszulCertificate:
    """Check Koszul-type numerics up to the bound.

    Two independent families of identities: the dimension of the degree-m
    Koszul component must equal the degree-m dimension of the dual algebra,
    and the Hilbert series of algebra and dual must multiply to 1 after the
    sign flip, i.e. the alternating convolution of the two dimension
    sequences vanishes in every positive degree up to the bound.
    """
    dual = quadratic_dual(alg)
    dims = graded_dims(alg, bound, limits)
    dual_dims = graded_dims(dual, bound, limits)
    component_dims = tuple(koszul_component(alg, m, limits).dim
                           for m in range(bound + 1))
    mism = tuple(m for m in range(bound + 1) if component_dims[m] != dual_dims[m])
    euler = []
    for k in range(1, bound + 1):
        total = sum((-1) ** j * dims[k - j] * dual_dims[j] for j in range(k + 1))
        if total != 0:
            euler.append(k)
    return KoszulCertificate(bound, dims, dual_dims, component_dims,
                             mism, tuple(euler))


def dual_automorphism(alg: QuadraticAlgebra, phi: DegreeOneMap,
                      check: bool = True) -> DegreeOneMap:
    """Induced map on dual generators (transpose; contravariant on compositions)."""
    if check and not preserves_subspace(phi, alg.relations, 2):
        raise LinAlgError("map does not preserve the relation subspace")
    out = DegreeOneMap(phi.matrix.transpose())
    if check:
        dual = quadratic_dual(alg)
        if not preserves_subspace(out, dual.relations, 2):
            raise ConsistencyError("transpose fails to preserve the dual relations")
    return out


class TruncatedAlgebra:
    """Multiplication tables of T(V)/(R) up to a degree bound.

    The degree-k basis is the set of words whose coordinates are not pivot
    columns of the degree-k relation span; reduction is the canonical
    residue mod that span.
    """

    def __init__(self, alg: QuadraticAlgebra, bound: int, limits: Limits):
        self.algebra = alg
        self.bound = bound
        self.limits = limits
        n = alg.n
        self.rels = tuple(relation_degree_subspace(alg, k, limits)
                          for k in range(bound + 1))
        words = []
        positions = []
        for k in range(bound + 1):
            piv = set(self.rels[k].pivots)
            wk = tuple(i for i in range(n ** k) if i not in piv)
            words.append(wk)
            positions.append({w: p for p, w in enumerate(wk)})
        self.words = tuple(words)
        self.positions = tuple(positions)
        self.dims = tuple(len(w) for w in self.words)
        self.labels = tuple(
            tuple(word_label(alg.names, index_to_word(w, n, k)) for w in self.words[k])
            for k in range(bound + 1))

    def dim(self, k: int) -> int:
        return self.dims[k] if 0 <= k <= self.bound else 0

    def reduce_sparse(self, k: int, sparse) -> Vec:
        res = self.rels[k].reduce_sparse(sparse)
        return tuple(res.get(w, ZERO) for w in self.words[k])

    def reduce_tensor(self, t: Tensor) -> Vec:
        if t.degree > self.bound:
            raise LinAlgError("tensor degree beyond the truncation bound")
        return self.reduce_sparse(t.degree, t.to_sparse_map())

    def lift_sparse(self, k: int, coords) -> dict[int, Fraction]:
        return {w: Fraction(c) for w, c in zip(self.words[k], coords) if c}

    def lift_tensor(self, k: int, coords) -> Tensor:
        n = self.algebra.n
        return Tensor(k, n, tuple(sorted(
            (index_to_word(w, n, k), Fraction(c))
            for w, c in zip(self.words[k], coords) if c)))

    def multiply(self, i: int, u, j: int, v) -> Vec:
        if i + j > self.bound:
            raise LinAlgError("product degree beyond the truncation bound")
        n = self.algebra.n
        stride = n ** j
        acc: dict[int, Fraction] = {}
        for wa, ca in zip(self.words[i], u):
            if not ca:
                continue
            for wb, cb in zip(self.words[j], v):
                if not cb:
                    continue
                idx = wa * stride + wb
                nv = acc.get(idx, ZERO) + ca * cb
                if nv:
                    acc[idx] = nv
                else:
                    acc.pop(idx, None)
        return self.reduce_sparse(i + j, acc)

    def class_from_row_pairings(self, k: int, rows, values) -> Vec:
        """The degree-k class pairing as prescribed against given row vectors.

        The pairing is the coordinate dot product; the relation span in this
        degree must annihilate every row so that the values only depend on
        the class.
        """
        mat = Matrix.from_rows(rows, self.algebra.n ** k)
        for rel_row in self.rels[k].basis.entries:
            for srow in mat.entries:
                if sum((a * b for a, b in zip(rel_row, srow)), ZERO):
                    raise LinAlgError("pairing values are not class functions")
        rep = mat.solve(values)
        if rep is None:
            raise LinAlgError("no element attains the prescribed pairings")
        return self.reduce_sparse(k, {c: v for c, v in enumerate(rep) if v})

    def class_from_pairings(self, k: int, space: Subspace, values) -> Vec:
        """As class_from_row_pairings, against a subspace's canonical basis."""
        if space.ambient != self.algebra.n ** k:
            raise LinAlgError("pairing space lives in the wrong degree")
        return self.class_from_row_pairings(k, space.basis.entries, values)

    def automorphism(self, phi: DegreeOneMap) -> GradedAutomorphism:
        """Extend a relation-preserving degree-one map to all truncations."""
        if not preserves_subspace(phi, self.algebra.relations, 2):
            raise LinAlgError("map does not preserve the relation subspace")
        n = self.algebra.n
        mats = []
        for k in range(self.bound + 1):
            cols = []
            for w in self.words[k]:
                img = apply_slotwise([phi] * k,
                                     Tensor.basis(index_to_word(w, n, k), n))
                cols.append(self.reduce_sparse(k, img.to_sparse_map()))
            if cols:
                mats.append(Matrix.from_rows(zip(*cols), len(cols)))
            else:
                mats.append(Matrix((), 0))
        return GradedAutomorphism(tuple(mats))

    def to_graded_algebra(self, validate: bool = True) -> GradedFDAlgebra:
        mult = {}
        for i in range(self.bound + 1):
            for j in range(self.bound + 1 - i):
                block = []
                for a in range(self.dims[i]):
                    ua = tuple(ONE if x == a else ZERO for x in range(self.dims[i]))
                    row = []
                    for b in range(self.dims[j]):
                        vb = tuple(ONE if x == b else ZERO
                                   for x in range(self.dims[j]))
                        row.append(self.multiply(i, ua, j, vb))
                    block.append(tuple(row))
                mult[(i, j)] = tuple(block)
        return GradedFDAlgebra(self.dims, self.labels, mult, validate=validate)


@lru_cache(maxsize=None)
def _truncated(alg: QuadraticAlgebra, bound: int, limits: Limits) -> TruncatedAlgebra:
    return TruncatedAlgebra(alg, bound, limits)


def truncated_structure(alg: QuadraticAlgebra, bound: int,
                        limits: Limits = DEFAULT_LIMITS) -> TruncatedAlgebra:
    return _truncated(alg, bound, limits)
