"""Bundled example algebras.

Everything here is a plain AlgebraDescription so the JSON corpus, the CLI
and the tests all share one source of truth.  Degree-one parts of
deformations are given per input relation.
"""

from __future__ import annotations

from fractions import Fraction

from .io import AlgebraDescription


def _terms(*pairs):
    return tuple((Fraction(c), tuple(w)) for c, w in pairs)


def commutative_plane() -> AlgebraDescription:
    return AlgebraDescription(
        ("x", "y"),
        (_terms((1, "xy"), (-1, "yx")),))


def quantum_plane(q) -> AlgebraDescription:
    q = Fraction(q)
    if not q:
        raise ValueError("the twist parameter must be nonzero")
    return AlgebraDescription(
        ("x", "y"),
        (_terms((1, "xy"), (-q, "yx")),))


def jordan_plane() -> AlgebraDescription:
    return AlgebraDescription(
        ("x", "y"),
        (_terms((1, "xy"), (-1, "yx"), (-1, "xx")),))


def polynomial_3() -> AlgebraDescription:
    return AlgebraDescription(
        ("x", "y", "z"),
        (_terms((1, "xy"), (-1, "yx")),
         _terms((1, "xz"), (-1, "zx")),
         _terms((1, "yz"), (-1, "zy"))))


def quantum_3() -> AlgebraDescription:
    # uniform coefficient -1 on each swapped pair
    return AlgebraDescription(
        ("x", "y", "z"),
        (_terms((1, "xy"), (1, "yx")),
         _terms((1, "xz"), (1, "zx")),
         _terms((1, "yz"), (1, "zy"))))


def quantum_weyl() -> AlgebraDescription:
    base = quantum_plane(2)
    return AlgebraDescription(
        base.generators, base.relations,
        nu=((),), theta=(Fraction(1),))


def noncy_deformation() -> AlgebraDescription:
    """xy - 2yx - x: the stock example where the deformed extension fails."""
    base = quantum_plane(2)
    return AlgebraDescription(
        base.generators, base.relations,
        nu=(_terms((1, "x")),), theta=(Fraction(0),))


def heisenberg() -> AlgebraDescription:
    """Enveloping algebra of the 3-dim nilpotent Lie algebra: [x,y] = z."""
    base = polynomial_3()
    return AlgebraDescription(
        base.generators, base.relations,
        nu=(_terms((1, "z")), (), ()),
        theta=(Fraction(0),) * 3,
        domain=True)


def corpus() -> dict[str, AlgebraDescription]:
    return {
        "kxy": commutative_plane(),
        "quantum_plane_q2": quantum_plane(2),
        "quantum_plane_q3": quantum_plane(3),
        "quantum_plane_qm1": quantum_plane(-1),
        "jordan_plane": jordan_plane(),
        "poly3": polynomial_3(),
        "quantum3": quantum_3(),
        "quantum_weyl": quantum_weyl(),
        "deformed_qp_noncy": noncy_deformation(),
        "heisenberg": heisenberg(),
    }
