"""JSON ingestion and serialization for algebra descriptions.

Input documents carry generators, quadratic relations as coeff/word term
lists, an optional degree-one twist matrix (row-vector convention: v maps
to v.S), and an optional deformation section with a degree-one part per
input relation plus a scalar part.  All rationals travel as strings.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .linalg import Matrix, ONE, Vec, ZERO
from .quadratic import QuadraticAlgebra
from .regular import RegularityCertificate
from .pbw import PBWDeformation
from .tensors import DegreeOneMap, Tensor, word_to_index


class ValidationError(ValueError):
    """Raised for structurally invalid input documents."""

    def __init__(self, message, path=""):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path


Term = tuple[Fraction, tuple[str, ...]]


@dataclass(frozen=True)
class AlgebraDescription:
    generators: tuple[str, ...]
    relations: tuple[tuple[Term, ...], ...]
    sigma: DegreeOneMap | None = None
    nu: tuple[tuple[Term, ...], ...] | None = None
    theta: Vec | None = None
    domain: bool | None = None

    @property
    def has_deformation(self) -> bool:
        return self.nu is not None


def _parse_fraction(s, path):
    if not isinstance(s, str):
        raise ValidationError("rationals must be strings", path)
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValidationError(f"bad rational {s!r}: {exc}", path) from None


def _parse_term(obj, names, degree, path):
    if not isinstance(obj, dict) or set(obj) != {"coeff", "word"}:
        raise ValidationError("term must be an object with coeff and word", path)
    coeff = _parse_fraction(obj["coeff"], path + ".coeff")
    word = obj["word"]
    if not isinstance(word, list) or not all(isinstance(w, str) for w in word):
        raise ValidationError("word must be a list of generator names", path + ".word")
    if len(word) != degree:
        kind = "quadratic" if degree == 2 else f"of degree {degree}"
        raise ValidationError(f"relations must be {kind}", path + ".word")
    for w in word:
        if w not in names:
            raise ValidationError(f"undeclared generator {w!r}", path + ".word")
    return coeff, tuple(word)


def _parse_terms(obj, names, degree, path):
    if not isinstance(obj, list):
        raise ValidationError("expected a list of terms", path)
    return tuple(_parse_term(t, names, degree, f"{path}[{i}]")
                 for i, t in enumerate(obj))


def parse_description(text) -> AlgebraDescription:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ValidationError("document must be a JSON object")
    allowed = {"generators", "relations", "sigma", "deformation"}
    extra = set(doc) - allowed
    if extra:
        raise ValidationError(f"unknown fields {sorted(extra)}")
    gens = doc.get("generators")
    if (not isinstance(gens, list) or not gens
            or not all(isinstance(g, str) and g for g in gens)):
        raise ValidationError("generators must be a non-empty list of names",
                              "generators")
    if len(set(gens)) != len(gens):
        raise ValidationError("duplicate generator names", "generators")
    names = tuple(gens)
    rels_doc = doc.get("relations")
    if not isinstance(rels_doc, list):
        raise ValidationError("relations must be a list", "relations")
    relations = []
    for i, rel in enumerate(rels_doc):
        terms = _parse_terms(rel, names, 2, f"relations[{i}]")
        if not terms:
            raise ValidationError("relation has no terms", f"relations[{i}]")
        merged: dict[tuple[str, ...], Fraction] = {}
        for coeff, word in terms:
            merged[word] = merged.get(word, ZERO) + coeff
        if not any(merged.values()):
            raise ValidationError("relation is identically zero", f"relations[{i}]")
        relations.append(terms)
    sigma = None
    if "sigma" in doc:
        mat = doc["sigma"]
        n = len(names)
        if (not isinstance(mat, list) or len(mat) != n
                or not all(isinstance(r, list) and len(r) == n for r in mat)):
            raise ValidationError("sigma must be a square matrix over the "
                                  "generators", "sigma")
        rows = [tuple(_parse_fraction(v, f"sigma[{i}][{j}]")
                      for j, v in enumerate(row)) for i, row in enumerate(mat)]
        # row-vector convention in files; columns act on letters internally
        sigma = DegreeOneMap(Matrix.from_rows(rows, n).transpose())
    nu = None
    theta = None
    domain = None
    if "deformation" in doc:
        dd = doc["deformation"]
        if not isinstance(dd, dict) or set(dd) - {"nu", "theta", "domain"}:
            raise ValidationError("deformation carries nu, theta and an "
                                  "optional domain flag", "deformation")
        nu_doc = dd.get("nu")
        if not isinstance(nu_doc, list) or len(nu_doc) != len(relations):
            raise ValidationError("nu needs one term list per relation",
                                  "deformation.nu")
        nu = tuple(_parse_terms(t, names, 1, f"deformation.nu[{i}]")
                   for i, t in enumerate(nu_doc))
        th_doc = dd.get("theta")
        if not isinstance(th_doc, list) or len(th_doc) != len(relations):
            raise ValidationError("theta needs one scalar per relation",
                                  "deformation.theta")
        theta = tuple(_parse_fraction(v, f"deformation.theta[{i}]")
                      for i, v in enumerate(th_doc))
        if "domain" in dd:
            if not isinstance(dd["domain"], bool):
                raise ValidationError("domain must be a boolean",
                                      "deformation.domain")
            domain = dd["domain"]
    return AlgebraDescription(names, tuple(relations), sigma, nu, theta, domain)


def _terms_to_json(terms):
    return [{"coeff": str(c), "word": list(w)} for c, w in terms]


def serialize_description(desc: AlgebraDescription) -> str:
    doc = {
        "generators": list(desc.generators),
        "relations": [_terms_to_json(rel) for rel in desc.relations],
    }
    if desc.sigma is not None:
        doc["sigma"] = matrix_to_strings(desc.sigma.matrix)
    if desc.has_deformation:
        deform = {
            "nu": [_terms_to_json(t) for t in desc.nu],
            "theta": [str(v) for v in desc.theta],
        }
        if desc.domain is not None:
            deform["domain"] = desc.domain
        doc["deformation"] = deform
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def matrix_to_strings(mat: Matrix):
    """Serialize a column-convention degree-one matrix in the row-vector
    convention used by input files and reports."""
    t = mat.transpose()
    return [[str(v) for v in row] for row in t.entries]


def _terms_to_tensor(terms, names, degree):
    n = len(names)
    pos = {name: i for i, name in enumerate(names)}
    parts = [(tuple(pos[w] for w in word), c) for c, word in terms]
    return Tensor.make(degree, n, parts)


def description_to_algebra(desc: AlgebraDescription) -> QuadraticAlgebra:
    tensors = [_terms_to_tensor(rel, desc.generators, 2)
               for rel in desc.relations]
    return QuadraticAlgebra.from_relation_tensors(desc.generators, tensors)


def description_deformation(desc: AlgebraDescription,
                            cert: RegularityCertificate) -> PBWDeformation:
    """Re-express a per-input-relation deformation on the canonical basis.

    The input relations must be linearly independent; each canonical basis
    vector is solved as a combination of them and the degree-one/scalar
    parts follow the same coefficients.
    """
    if not desc.has_deformation:
        raise ValidationError("document has no deformation section")
    names = desc.generators
    n = len(names)
    input_rows = [_terms_to_tensor(rel, names, 2).to_vector()
                  for rel in desc.relations]
    rel_matrix = Matrix.from_rows(input_rows, n * n)
    if rel_matrix.rank() != len(input_rows):
        raise ValidationError("input relations are linearly dependent",
                              "relations")
    if cert.algebra.relations.dim != len(input_rows):
        raise ValidationError("certificate relations do not match the "
                              "document", "relations")
    nu_in = [_terms_to_tensor(t, names, 1).to_vector() for t in desc.nu]
    solver = rel_matrix.transpose()
    nu_rows = []
    theta = []
    for rho in cert.algebra.relations.basis.entries:
        coeffs = solver.solve(rho)
        if coeffs is None:
            raise ValidationError("canonical relation escapes the input span",
                                  "relations")
        row = [ZERO] * n
        th = ZERO
        for a, ca in enumerate(coeffs):
            if ca:
                for t in range(n):
                    row[t] += ca * nu_in[a][t]
                th += ca * desc.theta[a]
        nu_rows.append(tuple(row))
        theta.append(th)
    return PBWDeformation(cert, Matrix.from_rows(nu_rows, n), tuple(theta),
                          domain=desc.domain)


def tensor_to_terms(t: Tensor, names):
    """Serialize a tensor as coeff/word term objects."""
    return [{"coeff": str(c), "word": [names[i] for i in word]}
            for word, c in t.terms]


def vector_to_terms(vec, names, degree):
    n = len(names)
    t = Tensor.from_vector(vec, degree, n)
    return tensor_to_terms(t, names)
