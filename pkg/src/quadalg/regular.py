"""Degree-bounded certification that a quadratic algebra is regular:
finite-dimensional Frobenius dual + Koszul numerics, and the Nakayama
automorphism extracted from the dual pairing.

The certificate is evidence up to the stated degree bound, not a proof.
Callers that already know the expected global dimension can ask for reduced
bounds through regularity_data.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .frobenius import (FrobeniusStructure, GradedFDAlgebra, NotFrobenius,
                        frobenius_structure)
from .linalg import (ConsistencyError, DEFAULT_LIMITS, LinAlgError, Limits,
                     Matrix)
from .quadratic import (KoszulCertificate, QuadraticAlgebra, TruncatedAlgebra,
                        graded_dims, numeric_koszul_certificate,
                        quadratic_dual, truncated_structure)
from .tensors import DegreeOneMap, preserves_subspace


class NotRegular(Exception):
    """Refutation: the bounded regularity checks failed at some degree."""

    def __init__(self, reason: str, witness_degree: int):
        super().__init__(f"degree {witness_degree}: {reason}")
        self.reason = reason
        self.witness_degree = witness_degree


@dataclass(frozen=True, eq=False)
class RegularityCertificate:
    """Bundle of all data the bounded regularity checks produced."""

    algebra: QuadraticAlgebra
    dual: QuadraticAlgebra
    gldim: int
    bound: int
    dual_dims: tuple[int, ...]
    dual_truncation: TruncatedAlgebra
    dual_fd: GradedFDAlgebra
    frobenius: FrobeniusStructure
    koszul: KoszulCertificate
    limits: Limits


@lru_cache(maxsize=None)
def _certify(alg: QuadraticAlgebra, bound: int, limits: Limits) -> RegularityCertificate:
    dual = quadratic_dual(alg)
    dual_dims = graded_dims(dual, bound, limits)
    if dual_dims[bound] != 0:
        raise NotRegular("dual algebra is still nonzero at the degree bound, "
                         "no finite length is visible", bound)
    d = max(k for k in range(bound + 1) if dual_dims[k] > 0)
    trunc = truncated_structure(dual, d, limits)
    dual_fd = trunc.to_graded_algebra()
    try:
        frob = frobenius_structure(dual_fd)
    except NotFrobenius as nf:
        raise NotRegular(f"dual algebra is not Frobenius: {nf.reason}",
                         nf.witness_degree) from nf
    kos = numeric_koszul_certificate(alg, bound, limits)
    if not kos.passed:
        witness = min(kos.component_mismatches + kos.euler_failures)
        raise NotRegular("Koszul numerics fail", witness)
    return RegularityCertificate(alg, dual, d, bound, dual_dims, trunc,
                                 dual_fd, frob, kos, limits)


def as_regular_certificate(alg: QuadraticAlgebra, bound: int = 5,
                           limits: Limits = DEFAULT_LIMITS) -> RegularityCertificate:
    """Certify regularity up to the bound, or raise NotRegular with a witness."""
    return _certify(alg, bound, limits)


def regularity_data(alg: QuadraticAlgebra, expected_gldim: int,
                    koszul_bound: int | None = None,
                    limits: Limits = DEFAULT_LIMITS) -> RegularityCertificate:
    """Certificate with bounds tightened around a known global dimension."""
    bound = koszul_bound if koszul_bound is not None else expected_gldim + 1
    if bound < expected_gldim + 1:
        raise LinAlgError("bound too small to see the dual terminate")
    cert = _certify(alg, bound, limits)
    if cert.gldim != expected_gldim:
        raise ConsistencyError(f"certified dimension {cert.gldim} does not match "
                               f"the expected {expected_gldim}")
    return cert


def nakayama_of_algebra(cert: RegularityCertificate) -> DegreeOneMap:
    """Nakayama automorphism of the algebra, from the dual pairing data.

    On generators this is the sign-adjusted inverse transpose of the dual
    Nakayama map in degree one.  The result must preserve the relation
    subspace; if it does not, the certificate data is inconsistent.
    """
    d = cert.gldim
    phi1 = cert.frobenius.nakayama.matrices[1]
    xi = DegreeOneMap(phi1.inverse().transpose().scale(Fraction((-1) ** (d + 1))))
    if not preserves_subspace(xi, cert.algebra.relations, 2):
        raise ConsistencyError("extracted Nakayama map does not preserve the relations")
    return xi


def dim2_matrix_form(cert: RegularityCertificate) -> tuple[Matrix, DegreeOneMap]:
    """For a dimension-2 algebra with one relation: the coefficient matrix M
    of the canonical relation, and the Nakayama map recomputed from M.

    The relation is sum_{i,j} M[i][j] x_i (x) x_j; the Nakayama map is
    -M^T M^{-1}.  Cross-checked against the pairing route; a disagreement
    raises ConsistencyError.
    """
    if cert.gldim != 2:
        raise LinAlgError("matrix form requires dimension 2")
    if cert.algebra.relations.dim != 1:
        raise LinAlgError("matrix form requires a single relation")
    n = cert.algebra.n
    row = cert.algebra.relations.basis.entries[0]
    m = Matrix.from_rows([row[i * n:(i + 1) * n] for i in range(n)], n)
    if not m.is_invertible():
        raise LinAlgError("relation coefficient matrix is singular")
    xi = DegreeOneMap((m.transpose() @ m.inverse()).scale(Fraction(-1)))
    if xi.matrix != nakayama_of_algebra(cert).matrix:
        raise ConsistencyError("matrix-form Nakayama disagrees with the pairing route")
    return m, xi
