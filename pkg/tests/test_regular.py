"""Bounded regularity certificates and Nakayama extraction."""

from fractions import Fraction

import pytest

from helpers import AS_REGULAR, DIM2, algebra_of, cert_of
from quadalg import (Matrix, NotRegular, QuadraticAlgebra, Tensor,
                     apply_slotwise, as_regular_certificate, dim2_matrix_form,
                     nakayama_of_algebra, regularity_data)
from quadalg.linalg import ConsistencyError, LinAlgError

F = Fraction

GLDIMS = {"kxy": 2, "quantum_plane_q2": 2, "quantum_plane_q3": 2,
          "quantum_plane_qm1": 2, "jordan_plane": 2,
          "poly3": 3, "quantum3": 3}

# frozen Nakayama matrices (column convention: column j = image of letter j)
NAKAYAMA = {
    "kxy": ((1, 0), (0, 1)),
    "quantum_plane_q2": ((2, 0), (0, F(1, 2))),
    "quantum_plane_q3": ((3, 0), (0, F(1, 3))),
    "quantum_plane_qm1": ((-1, 0), (0, -1)),
    "jordan_plane": ((1, -2), (0, 1)),
    "poly3": ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
    "quantum3": ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
}

# frozen single-relation coefficient matrices, w = sum M[a][b] x_a x_b
RELATION_M = {
    "kxy": ((0, 1), (-1, 0)),
    "quantum_plane_q2": ((0, 1), (-2, 0)),
    "jordan_plane": ((1, -1), (1, 0)),
}


def _mat(rows):
    return Matrix.from_rows(tuple(tuple(F(v) for v in r) for r in rows),
                            len(rows[0]))


def test_certificates_and_gldims():
    for name, d in GLDIMS.items():
        cert = cert_of(name)
        assert cert.gldim == d, name
        assert cert.dual_dims[d] == 1
        assert all(v == 0 for v in cert.dual_dims[d + 1:])
        assert cert.koszul.passed


def test_dual_dims_shapes():
    assert cert_of("kxy").dual_dims == (1, 2, 1, 0, 0, 0)
    assert cert_of("poly3").dual_dims == (1, 3, 3, 1, 0, 0)
    assert cert_of("quantum3").dual_dims == (1, 3, 3, 1, 0, 0)


def test_not_regular_single_monomial_xx():
    alg = QuadraticAlgebra.from_relation_tensors(
        ("x", "y"), [Tensor.make(2, 2, [((0, 0), F(1))])])
    with pytest.raises(NotRegular) as exc:
        as_regular_certificate(alg, 5)
    # dual dims stay (1,2,1,1,1,...): never terminates inside the bound
    assert exc.value.witness_degree == 5


def test_not_regular_xy():
    alg = QuadraticAlgebra.from_relation_tensors(
        ("x", "y"), [Tensor.make(2, 2, [((0, 1), F(1))])])
    with pytest.raises(NotRegular) as exc:
        as_regular_certificate(alg, 5)
    # dual terminates (dims 1,2,1,0,..) but the pairing into the top is
    # degenerate, so the Frobenius step refuses
    assert "Frobenius" in exc.value.reason
    assert exc.value.witness_degree == 1


def test_nakayama_frozen_values():
    for name, rows in NAKAYAMA.items():
        xi = nakayama_of_algebra(cert_of(name))
        assert xi.matrix == _mat(rows), name


def test_nakayama_preserves_relations():
    for name in AS_REGULAR:
        cert = cert_of(name)
        xi = nakayama_of_algebra(cert)
        img = [cert.algebra.relations.reduce(
            apply_slotwise((xi, xi),
                           Tensor.from_vector(row, 2, cert.algebra.n))
            .to_vector())
            for row in cert.algebra.relations.basis.entries]
        assert all(all(v == 0 for v in r) for r in img), name


def test_dim2_matrix_form_goldens():
    for name, rows in RELATION_M.items():
        m, xi = dim2_matrix_form(cert_of(name))
        assert m == _mat(rows), name
        # xi = -M^t M^{-1} for a single relation in two letters
        expect = (_mat(rows).transpose() @ _mat(rows).inverse()).scale(F(-1))
        assert xi.matrix == expect, name


def test_dim2_matrix_form_rejects_dim3():
    with pytest.raises(LinAlgError):
        dim2_matrix_form(cert_of("poly3"))


def test_regularity_data_checks_expected_dimension():
    alg = algebra_of("kxy")
    with pytest.raises(ConsistencyError):
        regularity_data(alg, 3, 5)
    cert = regularity_data(alg, 2, 5)
    assert cert.gldim == 2


def test_regularity_data_bound_guard():
    with pytest.raises(LinAlgError):
        regularity_data(algebra_of("poly3"), 3, 3)


def test_certificate_cache_stability():
    a = cert_of("quantum_plane_q2")
    b = cert_of("quantum_plane_q2")
    assert a is b
