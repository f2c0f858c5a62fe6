import json

import pytest

from censtab.catalog import build, standard_entries
from censtab.errors import FileFormatError, NotAssociative, ParseError
from censtab.fileformat import (
    algebra_from_json,
    algebra_to_json,
    certificate_from_json,
    certificate_to_json,
    dump_json,
    load_algebra,
    report_to_json,
    save_algebra,
    verify_report_json,
)
from censtab.stability import algebra_centrally_stable, element_centrally_stable


def test_round_trip_bit_exact(tmp_path):
    for entry in standard_entries():
        path = tmp_path / f"{entry.name}.json"
        save_algebra(entry.algebra, path)
        first = path.read_bytes()
        loaded = load_algebra(path)
        save_algebra(loaded, path)
        assert path.read_bytes() == first
        assert loaded.same_structure(entry.algebra)
        assert loaded.labels == entry.algebra.labels
        assert loaded.unity == entry.algebra.unity


def test_round_trip_prime_field(tmp_path):
    from censtab.scalars import prime_field

    entry = build("matrix_full", n=2, field=prime_field(101))
    path = tmp_path / "gf.json"
    save_algebra(entry.algebra, path)
    loaded = load_algebra(path)
    assert loaded.field == prime_field(101)
    assert loaded.same_structure(entry.algebra)


def test_rejects_malformed_documents():
    good = algebra_to_json(build("truncated_poly", k=2).algebra)

    bad = dict(good)
    del bad["dim"]
    with pytest.raises(FileFormatError):
        algebra_from_json(bad)

    bad = dict(good)
    bad["field"] = "R"
    with pytest.raises(FileFormatError):
        algebra_from_json(bad)

    bad = dict(good)
    bad["table"] = good["table"] + [good["table"][0]]  # duplicate (i, j)
    with pytest.raises(FileFormatError):
        algebra_from_json(bad)

    bad = dict(good)
    bad["extra"] = 1
    with pytest.raises(FileFormatError):
        algebra_from_json(bad)

    bad = dict(good)
    bad["table"] = [[0, 0, [[0, "1.5"]]]]
    with pytest.raises(ParseError):  # scalar grammar violation
        algebra_from_json(bad)


def test_load_validates_associativity():
    doc = {
        "field": "Q",
        "dim": 2,
        "table": [[0, 0, [[1, "1"]]], [0, 1, [[1, "1"]]]],
    }
    with pytest.raises(NotAssociative):
        algebra_from_json(doc)


def test_certificate_json_round_trip():
    for name, kw in (("matrix_full", {"n": 2}), ("ema", {}), ("strict_upper", {"n": 3})):
        alg = build(name, **kw).algebra
        rep = algebra_centrally_stable(alg)
        doc = certificate_to_json(alg.field, rep.certificate)
        back = certificate_from_json(alg.field, doc)
        assert back == rep.certificate


def test_verify_report_json():
    alg = build("ema").algebra
    rep = algebra_centrally_stable(alg)
    doc = report_to_json(alg, rep, command="stable", seed=0, witness_budget=200)
    assert verify_report_json(alg, doc)
    # tamper with the verdict: the certificate kind no longer matches
    doc_bad = json.loads(dump_json(doc))
    doc_bad["verdict"] = "Stable"
    assert not verify_report_json(alg, doc_bad)


def test_verify_element_report_json():
    alg = build("upper_triangular", n=3).algebra
    for i in (0, 1):
        rep = element_centrally_stable(alg.basis_element(i))
        doc = report_to_json(alg, rep, command="element")
        assert verify_report_json(alg, doc)
