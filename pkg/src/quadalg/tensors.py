"""Tensor-power coordinates: words, tensor elements, slot maps, contractions.

A degree-d tensor over an n-dimensional space is stored as a sorted tuple of
(word, coefficient) pairs, where a word is a tuple of d letter indices.
Words are identified with flat coordinates through the big-endian base-n
expansion, so the induced coordinate order is lexicographic on words.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .linalg import LinAlgError, Matrix, ONE, Subspace, Vec, ZERO

Word = tuple[int, ...]


def word_to_index(word: Word, n: int) -> int:
    idx = 0
    for letter in word:
        idx = idx * n + letter
    return idx


def index_to_word(idx: int, n: int, degree: int) -> Word:
    out = [0] * degree
    for pos in range(degree - 1, -1, -1):
        idx, out[pos] = divmod(idx, n)
    return tuple(out)


def all_words(n: int, degree: int):
    return itertools.product(range(n), repeat=degree)


@dataclass(frozen=True)
class Tensor:
    """An element of the degree-th tensor power of an n-dim space."""

    degree: int
    ambient: int
    terms: tuple[tuple[Word, Fraction], ...]

    @staticmethod
    def make(degree: int, ambient: int, terms) -> "Tensor":
        acc: dict[Word, Fraction] = {}
        for word, coeff in (terms.items() if isinstance(terms, dict) else terms):
            c = Fraction(coeff)
            if not c:
                continue
            w = tuple(word)
            if len(w) != degree or any(not 0 <= l < ambient for l in w):
                raise LinAlgError(f"bad word {w} for degree {degree} over n={ambient}")
            nv = acc.get(w, ZERO) + c
            if nv:
                acc[w] = nv
            else:
                acc.pop(w, None)
        return Tensor(degree, ambient, tuple(sorted(acc.items())))

    @staticmethod
    def zero(degree: int, ambient: int) -> "Tensor":
        return Tensor(degree, ambient, ())

    @staticmethod
    def basis(word: Word, ambient: int) -> "Tensor":
        return Tensor.make(len(word), ambient, [(tuple(word), ONE)])

    @cached_property
    def coeffs(self) -> dict[Word, Fraction]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, word: Word) -> Fraction:
        return self.coeffs.get(tuple(word), ZERO)

    def add(self, other: "Tensor") -> "Tensor":
        self._check_shape(other)
        acc = dict(self.terms)
        for w, c in other.terms:
            nv = acc.get(w, ZERO) + c
            if nv:
                acc[w] = nv
            else:
                acc.pop(w, None)
        return Tensor(self.degree, self.ambient, tuple(sorted(acc.items())))

    def sub(self, other: "Tensor") -> "Tensor":
        return self.add(other.scale(-1))

    def neg(self) -> "Tensor":
        return self.scale(-1)

    def scale(self, k) -> "Tensor":
        k = Fraction(k)
        if not k:
            return Tensor.zero(self.degree, self.ambient)
        return Tensor(self.degree, self.ambient,
                      tuple((w, k * c) for w, c in self.terms))

    def tensor(self, other: "Tensor") -> "Tensor":
        if self.ambient != other.ambient:
            raise LinAlgError("ambient mismatch in tensor product")
        acc: dict[Word, Fraction] = {}
        for w1, c1 in self.terms:
            for w2, c2 in other.terms:
                w = w1 + w2
                nv = acc.get(w, ZERO) + c1 * c2
                if nv:
                    acc[w] = nv
                else:
                    acc.pop(w, None)
        return Tensor(self.degree + other.degree, self.ambient,
                      tuple(sorted(acc.items())))

    def to_vector(self) -> Vec:
        n = self.ambient
        out = [ZERO] * (n ** self.degree)
        for w, c in self.terms:
            out[word_to_index(w, n)] = c
        return tuple(out)

    def to_sparse_map(self) -> dict[int, Fraction]:
        n = self.ambient
        return {word_to_index(w, n): c for w, c in self.terms}

    @staticmethod
    def from_vector(vec, degree: int, ambient: int) -> "Tensor":
        terms = []
        for idx, c in enumerate(vec):
            if c:
                terms.append((index_to_word(idx, ambient, degree), Fraction(c)))
        return Tensor(degree, ambient, tuple(terms))

    def _check_shape(self, other: "Tensor") -> None:
        if self.degree != other.degree or self.ambient != other.ambient:
            raise LinAlgError("tensor shape mismatch")

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{''.join(map(str, w))}" for w, c in self.terms)


def tensors_to_subspace(tensors, degree: int, ambient: int) -> Subspace:
    rows = [t.to_sparse_map() for t in tensors]
    return Subspace.from_spanning(rows, ambient ** degree)


def subspace_to_tensors(space: Subspace, degree: int, ambient: int) -> list[Tensor]:
    return [Tensor.from_vector(r, degree, ambient) for r in space.basis.entries]


@dataclass(frozen=True)
class DegreeOneMap:
    """A linear endomorphism of the degree-one space in column convention.

    Column j of ``matrix`` holds the coordinates of the image of the j-th
    basis letter; a coordinate row v maps to matrix . v.
    """

    matrix: Matrix

    @staticmethod
    def identity(n: int) -> "DegreeOneMap":
        return DegreeOneMap(Matrix.identity(n))

    @staticmethod
    def diagonal(values) -> "DegreeOneMap":
        return DegreeOneMap(Matrix.diagonal(values))

    @property
    def n(self) -> int:
        return self.matrix.cols

    def image_of(self, j: int) -> Vec:
        return self.matrix.col(j)

    def apply_vec(self, v) -> Vec:
        return self.matrix.mul_col(v)

    def compose(self, other: "DegreeOneMap") -> "DegreeOneMap":
        return DegreeOneMap(self.matrix @ other.matrix)

    def inverse(self) -> "DegreeOneMap":
        return DegreeOneMap(self.matrix.inverse())

    def power(self, k: int) -> "DegreeOneMap":
        if k < 0:
            return self.inverse().power(-k)
        out = DegreeOneMap.identity(self.n)
        for _ in range(k):
            out = out.compose(self)
        return out

    def is_identity(self) -> bool:
        return self.matrix.is_identity()

    def apply_letter(self, letter: int) -> Tensor:
        return Tensor.make(1, self.n,
                           [((i,), c) for i, c in enumerate(self.image_of(letter))])

    def extend(self, degree: int) -> "MultiDegreeMap":
        """The induced map on the degree-th tensor power."""
        return MultiDegreeMap(tuple([self] * degree))


@dataclass(frozen=True)
class MultiDegreeMap:
    """A slotwise tensor product of degree-one maps (None slots act as id)."""

    slots: tuple[DegreeOneMap | None, ...]

    def apply(self, t: Tensor) -> Tensor:
        return apply_slotwise(self.slots, t)


def apply_slotwise(maps, t: Tensor) -> Tensor:
    """Apply per-slot degree-one maps to a tensor; None means identity."""
    maps = tuple(maps)
    if len(maps) != t.degree:
        raise LinAlgError("slot count does not match tensor degree")
    acc: dict[Word, Fraction] = {}
    for word, coeff in t.terms:
        partial: list[tuple[Word, Fraction]] = [((), coeff)]
        for letter, m in zip(word, maps):
            if m is None:
                partial = [(w + (letter,), c) for w, c in partial]
                continue
            col = m.image_of(letter)
            nxt: list[tuple[Word, Fraction]] = []
            for w, c in partial:
                for i, a in enumerate(col):
                    if a:
                        nxt.append((w + (i,), c * a))
            partial = nxt
            if not partial:
                break
        for w, c in partial:
            nv = acc.get(w, ZERO) + c
            if nv:
                acc[w] = nv
            else:
                acc.pop(w, None)
    return Tensor(t.degree, t.ambient, tuple(sorted(acc.items())))


def tau(d: int, k: int, t: Tensor) -> Tensor:
    """Cycle the first slot of a degree-d tensor into position k.

    On words: (w_0, w_1, ..., w_{d-1}) -> (w_1, ..., w_k, w_0, w_{k+1}, ...).
    k = d-1 is the full one-step rotation; composing the k = d-1 map d times
    gives the identity.
    """
    if t.degree != d:
        raise LinAlgError("degree mismatch in cyclic slot move")
    if not 0 <= k <= d - 1:
        raise LinAlgError("slot position out of range")
    terms = []
    for w, c in t.terms:
        terms.append((w[1:k + 1] + (w[0],) + w[k + 1:], c))
    return Tensor.make(d, t.ambient, terms)


def contract_left(psi: Vec, t: Tensor) -> Tensor:
    """Pair a functional (coordinate row) against the first slot."""
    terms = []
    for w, c in t.terms:
        a = psi[w[0]]
        if a:
            terms.append((w[1:], c * a))
    return Tensor.make(t.degree - 1, t.ambient, terms)


def contract_right(t: Tensor, psi: Vec) -> Tensor:
    """Pair a functional (coordinate row) against the last slot."""
    terms = []
    for w, c in t.terms:
        a = psi[w[-1]]
        if a:
            terms.append((w[:-1], c * a))
    return Tensor.make(t.degree - 1, t.ambient, terms)


def preserves_subspace(phi: DegreeOneMap, space: Subspace, degree: int) -> bool:
    """Whether the slotwise extension of phi maps the subspace into itself."""
    n = phi.n
    if space.ambient != n ** degree:
        raise LinAlgError("subspace ambient does not match the tensor degree")
    ext = tuple([phi] * degree)
    for row in space.basis.entries:
        img = apply_slotwise(ext, Tensor.from_vector(row, degree, n))
        if any(space.reduce_sparse(img.to_sparse_map()).values()):
            return False
    return True
