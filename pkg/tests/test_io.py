"""JSON descriptions: parsing, validation, serialization, corpus parity."""

import json
from fractions import Fraction
from importlib import resources

import pytest

from quadalg import Matrix, regularity_data
from quadalg.io import (ValidationError, description_deformation,
                        description_to_algebra, matrix_to_strings,
                        parse_description, serialize_description)
from quadalg.presets import corpus

F = Fraction


def _corpus_text(name):
    return (resources.files("quadalg") / "corpus" / f"{name}.json").read_text()


def test_corpus_files_match_presets():
    for name, desc in corpus().items():
        parsed = parse_description(_corpus_text(name))
        assert parsed == desc, name


def test_serialize_roundtrip():
    for name, desc in corpus().items():
        assert parse_description(serialize_description(desc)) == desc, name


def test_minimal_document():
    desc = parse_description(json.dumps({
        "generators": ["x", "y"],
        "relations": [[{"coeff": "1", "word": ["x", "y"]},
                       {"coeff": "-1", "word": ["y", "x"]}]],
    }))
    assert desc.generators == ("x", "y")
    alg = description_to_algebra(desc)
    assert alg.relations.dim == 1


def test_sigma_row_convention():
    # file rows give images of generators as row vectors; internally the
    # matrix acts on coordinate columns, so parse transposes
    doc = {"generators": ["x", "y"],
           "relations": [[{"coeff": "1", "word": ["x", "y"]}]],
           "sigma": [["0", "1"], ["-1", "0"]]}
    desc = parse_description(json.dumps(doc))
    assert desc.sigma.matrix == Matrix.from_rows(
        [(F(0), F(-1)), (F(1), F(0))], 2)
    # serialization transposes back
    out = json.loads(serialize_description(desc))
    assert out["sigma"] == [["0", "1"], ["-1", "0"]]
    assert matrix_to_strings(desc.sigma.matrix) == [["0", "1"], ["-1", "0"]]


@pytest.mark.parametrize("doc,path_hint", [
    ({"generators": ["x", "x"], "relations": []}, "generators"),
    ({"generators": ["x", "y"], "relations": [[{"coeff": "1",
        "word": ["x", "y", "x"]}]]}, "quadratic"),
    ({"generators": ["x", "y"], "relations": [[{"coeff": "1",
        "word": ["x", "y"]}, {"coeff": "-1", "word": ["x", "y"]}]]}, "zero"),
    ({"generators": ["x", "y"], "relations": [[{"coeff": "1/0",
        "word": ["x", "y"]}]]}, "rational"),
    ({"generators": ["x", "y"], "relations": [[{"coeff": 0.5,
        "word": ["x", "y"]}]]}, "strings"),
    ({"generators": ["x", "y"], "relations": [], "extra": 1}, "unknown"),
    ({"generators": ["x", "y"], "relations": [[{"coeff": "1",
        "word": ["x", "q"]}]]}, "undeclared"),
    ({"generators": ["x", "y"], "relations": [[{"coeff": "1",
        "word": ["x", "y"]}]], "sigma": [["1", "0"]]}, "sigma"),
    ({"generators": ["x", "y"], "relations": [[{"coeff": "1",
        "word": ["x", "y"]}]],
      "deformation": {"nu": [], "theta": ["0"]}}, "nu"),
    ({"generators": ["x", "y"], "relations": [[{"coeff": "1",
        "word": ["x", "y"]}]],
      "deformation": {"nu": [[]], "theta": []}}, "theta"),
    ({"generators": ["x", "y"], "relations": [[{"coeff": "1",
        "word": ["x", "y"]}]],
      "deformation": {"nu": [[]], "theta": ["0"], "domain": "yes"}}, "domain"),
])
def test_validation_errors(doc, path_hint):
    with pytest.raises(ValidationError) as exc:
        parse_description(json.dumps(doc))
    assert path_hint.lower() in str(exc.value).lower()


def test_invalid_json():
    with pytest.raises(ValidationError):
        parse_description("{nope")
    with pytest.raises(ValidationError):
        parse_description("[1, 2]")


def test_deformation_canonicalization_is_basis_independent():
    # same deformation written on two bases of the same relation space
    base = {"generators": ["x", "y", "z"],
            "relations": [
                [{"coeff": "1", "word": ["x", "y"]},
                 {"coeff": "-1", "word": ["y", "x"]}],
                [{"coeff": "1", "word": ["x", "z"]},
                 {"coeff": "-1", "word": ["z", "x"]}],
                [{"coeff": "1", "word": ["y", "z"]},
                 {"coeff": "-1", "word": ["z", "y"]}]],
            "deformation": {
                "nu": [[{"coeff": "1", "word": ["z"]}], [], []],
                "theta": ["0", "0", "0"]}}
    mixed = {"generators": ["x", "y", "z"],
             "relations": [
                 [{"coeff": "1", "word": ["x", "y"]},
                  {"coeff": "-1", "word": ["y", "x"]},
                  {"coeff": "2", "word": ["x", "z"]},
                  {"coeff": "-2", "word": ["z", "x"]}],
                 [{"coeff": "1", "word": ["x", "z"]},
                  {"coeff": "-1", "word": ["z", "x"]}],
                 [{"coeff": "1", "word": ["y", "z"]},
                  {"coeff": "-1", "word": ["z", "y"]}]],
             "deformation": {
                 "nu": [[{"coeff": "1", "word": ["z"]}], [], []],
                 "theta": ["0", "0", "0"]}}
    da = parse_description(json.dumps(base))
    db = parse_description(json.dumps(mixed))
    alg = description_to_algebra(da)
    assert description_to_algebra(db).relations == alg.relations
    cert = regularity_data(alg, 3, 5)
    fa = description_deformation(da, cert)
    fb = description_deformation(db, cert)
    # r1' = r1 + 2 r2 and nu(r2) = 0, so both writings define the same map
    # on the relation space and must canonicalize identically
    assert fa.nu == fb.nu
    assert fa.theta == fb.theta


def test_deformation_rejects_dependent_relations():
    doc = {"generators": ["x", "y"],
           "relations": [
               [{"coeff": "1", "word": ["x", "y"]},
                {"coeff": "-1", "word": ["y", "x"]}],
               [{"coeff": "2", "word": ["x", "y"]},
                {"coeff": "-2", "word": ["y", "x"]}]],
           "deformation": {"nu": [[], []], "theta": ["0", "0"]}}
    desc = parse_description(json.dumps(doc))
    alg = description_to_algebra(desc)
    cert = regularity_data(alg, 2, 5)
    with pytest.raises(ValidationError):
        description_deformation(desc, cert)


def test_deformation_missing_section():
    desc = parse_description(_corpus_text("kxy"))
    cert = regularity_data(description_to_algebra(desc), 2, 5)
    with pytest.raises(ValidationError):
        description_deformation(desc, cert)


def test_domain_flag_propagates():
    desc = parse_description(_corpus_text("heisenberg"))
    assert desc.domain is True
    cert = regularity_data(description_to_algebra(desc), 3, 5)
    defm = description_deformation(desc, cert)
    assert defm.effective_domain
