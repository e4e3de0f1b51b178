"""Shared test utilities: seeded generators and independent oracles."""

from fractions import Fraction
import random

from quadalg import (DegreeOneMap, Matrix, Tensor, apply_slotwise,
                     as_regular_certificate, index_to_word, nakayama_of_algebra,
                     tau, word_to_index)
from quadalg.io import description_to_algebra
from quadalg.presets import corpus

AS_REGULAR = ("kxy", "quantum_plane_q2", "quantum_plane_q3",
              "quantum_plane_qm1", "jordan_plane", "poly3", "quantum3")
DIM2 = AS_REGULAR[:5]


def algebra_of(name):
    return description_to_algebra(corpus()[name])


def cert_of(name):
    # certification is cached on the algebra value, so this stays cheap
    return as_regular_certificate(algebra_of(name))


def twisted_cyclic_space(n, d, sigma):
    """Exact solution space of w = (-1)^(d-1) rot(sigma on first slot)(w).

    Independent of the extraction code path: assembled directly from the
    one-word images.
    """
    rows = []
    amb = n ** d
    sign = Fraction((-1) ** (d - 1))
    for idx in range(amb):
        t = Tensor.basis(index_to_word(idx, n, d), n)
        img = tau(d, d - 1, apply_slotwise([sigma] + [None] * (d - 1), t))
        vec = list(t.to_vector())
        for w, c in img.terms:
            vec[word_to_index(w, n)] -= sign * c
        rows.append(tuple(vec))
    return Matrix.from_rows(rows, amb).transpose().kernel()


def random_member(space, rng, lo=-4, hi=4):
    """A random rational combination of a subspace basis, never zero unless
    the space is."""
    if space.dim == 0:
        return None
    coeffs = [Fraction(rng.randrange(lo, hi + 1)) for _ in range(space.dim)]
    if not any(coeffs):
        coeffs[0] = Fraction(1)
    vec = [Fraction(0)] * space.ambient
    for c, row in zip(coeffs, space.basis_rows()):
        if c:
            for t, v in enumerate(row):
                if v:
                    vec[t] += c * v
    return tuple(vec)


def twist_pool():
    """Corpus-derived degree-one twists: Nakayama maps plus +-identity."""
    pool = []
    for name in AS_REGULAR:
        cert = cert_of(name)
        n = cert.algebra.n
        pool.append((n, nakayama_of_algebra(cert)))
        pool.append((n, DegreeOneMap.identity(n)))
        pool.append((n, DegreeOneMap(Matrix.identity(n).scale(Fraction(-1)))))
    return pool


def random_nu_theta(rng, cert, lo=-3, hi=3):
    n = cert.algebra.n
    nrel = cert.algebra.relations.dim
    nu = Matrix.from_rows(
        [tuple(Fraction(rng.randrange(lo, hi + 1)) for _ in range(n))
         for _ in range(nrel)], n)
    theta = tuple(Fraction(rng.randrange(lo, hi + 1)) for _ in range(nrel))
    return nu, theta


def scalar_twist(alg_fd, k, c):
    """epsilon^k composed with the automorphism induced by multiplying every
    generator by c: degree i matrix is ((-1)^k c)^i times the identity."""
    from quadalg import GradedAutomorphism
    mats = []
    for i in range(alg_fd.length + 1):
        factor = (Fraction(-1) ** (k * i)) * (Fraction(c) ** i)
        mats.append(Matrix.identity(alg_fd.dims[i]).scale(factor))
    return GradedAutomorphism(tuple(mats))


def block_nakayama_oracle(alg_fd, sigma, n_ext):
    """Expected trivial-extension Nakayama: sigma^{-1} on the algebra block,
    sigma-transpose on the dual block, per degree."""
    mats = []
    for i in range(n_ext + 1):
        di = alg_fd.dim(i)
        dni = alg_fd.dim(n_ext - i)
        rows = [[Fraction(0)] * (di + dni) for _ in range(di + dni)]
        if di:
            inv = sigma.matrices[i].inverse()
            for a in range(di):
                for b in range(di):
                    rows[a][b] = inv[a, b]
        if dni:
            t = sigma.matrices[n_ext - i].transpose()
            for a in range(dni):
                for b in range(dni):
                    rows[di + a][di + b] = t[a, b]
        mats.append(Matrix.from_rows([tuple(r) for r in rows], di + dni))
    return tuple(mats)


def seeded(seed):
    return random.Random(seed)
