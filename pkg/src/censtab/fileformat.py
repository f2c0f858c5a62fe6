"""JSON serialization for algebras and reports.

Algebra files carry the field, the dimension, optional basis labels and the
sparse structure-constant table as [i, j, [[k, "scalar"], ...]] triples with
0-based indices; pairs that are absent multiply to zero.  Scalars are always
strings in the scalar grammar, never floats, so exactness survives the round
trip; exporting a loaded file reproduces it byte for byte.
"""

from __future__ import annotations

import json

from .algebras import Algebra, build_algebra
from .errors import FileFormatError
from .scalars import RATIONALS, FieldSpec, prime_field
from .stability import (
    RadicalGap,
    RadicalMatch,
    StabilityReport,
    StableElementWitness,
    UnstableElementWitness,
    WitnessSearchExhausted,
    verify_certificate,
)


def field_to_json(field: FieldSpec):
    return "Q" if field.p is None else {"GF": field.p}


def field_from_json(doc) -> FieldSpec:
    if doc == "Q":
        return RATIONALS
    if isinstance(doc, dict) and set(doc) == {"GF"}:
        try:
            return prime_field(doc["GF"])
        except ValueError as exc:
            raise FileFormatError(str(exc)) from None
    raise FileFormatError(f"bad field description {doc!r}")


def vector_to_json(field, vec):
    return [field.format(x) for x in vec]


def vector_from_json(field, doc, length=None):
    if not isinstance(doc, list):
        raise FileFormatError("coordinate vector must be a list")
    if length is not None and len(doc) != length:
        raise FileFormatError(f"expected {length} coordinates, got {len(doc)}")
    return tuple(field.parse(str(x)) for x in doc)


def rows_to_json(field, rows):
    return [vector_to_json(field, r) for r in rows]


def algebra_to_json(a: Algebra) -> dict:
    doc = {"field": field_to_json(a.field), "dim": a.dim}
    if a.labels:
        doc["labels"] = list(a.labels)
    table = []
    for (i, j) in sorted(a.table):
        pairs = [[k, a.field.format(c)] for k, c in a.table[(i, j)]]
        table.append([i, j, pairs])
    doc["table"] = table
    return doc


def algebra_from_json(doc) -> Algebra:
    """Parse and fully validate an algebra document (associativity included)."""
    if not isinstance(doc, dict):
        raise FileFormatError("algebra document must be a JSON object")
    for key in ("field", "dim", "table"):
        if key not in doc:
            raise FileFormatError(f"missing member {key!r}")
    unknown = set(doc) - {"field", "dim", "table", "labels"}
    if unknown:
        raise FileFormatError(f"unknown members {sorted(unknown)}")
    field = field_from_json(doc["field"])
    dim = doc["dim"]
    if not isinstance(dim, int) or dim < 0:
        raise FileFormatError("dim must be a non-negative integer")
    labels = doc.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or len(labels) != dim:
            raise FileFormatError("labels must list one string per basis vector")
    table = {}
    if not isinstance(doc["table"], list):
        raise FileFormatError("table must be a list of [i, j, pairs] entries")
    for entry in doc["table"]:
        if not (isinstance(entry, list) and len(entry) == 3):
            raise FileFormatError(f"bad table entry {entry!r}")
        i, j, pairs = entry
        if not (isinstance(i, int) and isinstance(j, int)):
            raise FileFormatError(f"bad indices in table entry {entry!r}")
        if (i, j) in table:
            raise FileFormatError(f"duplicate table entry for ({i}, {j})")
        if not isinstance(pairs, list):
            raise FileFormatError(f"bad product list in entry ({i}, {j})")
        parsed = []
        for pair in pairs:
            if not (isinstance(pair, list) and len(pair) == 2 and isinstance(pair[0], int)):
                raise FileFormatError(f"bad product pair {pair!r} in entry ({i}, {j})")
            parsed.append((pair[0], field.parse(str(pair[1]))))
        table[(i, j)] = parsed
    return build_algebra(field, dim, table, labels)


def dump_json(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def save_algebra(a: Algebra, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_json(algebra_to_json(a)))


def load_algebra(path) -> Algebra:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FileFormatError(f"not valid JSON: {exc}") from None
    return algebra_from_json(doc)


# ---------------------------------------------------------------------------
# Certificates and reports
# ---------------------------------------------------------------------------


def certificate_to_json(field, cert) -> dict:
    if isinstance(cert, StableElementWitness):
        return {
            "kind": cert.kind,
            "element": vector_to_json(field, cert.element),
            "central_part": vector_to_json(field, cert.central_part),
            "ideal_part": vector_to_json(field, cert.ideal_part),
        }
    if isinstance(cert, UnstableElementWitness):
        return {
            "kind": cert.kind,
            "element": vector_to_json(field, cert.element),
            "center_basis": rows_to_json(field, cert.center_rows),
            "ideal_basis": rows_to_json(field, cert.ideal_rows),
            "sum_basis": rows_to_json(field, cert.sum_rows),
        }
    if isinstance(cert, RadicalMatch):
        return {
            "kind": cert.kind,
            "ambient": cert.ambient,
            "radical_basis": rows_to_json(field, cert.radical_rows),
            "center_cap_radical_basis": rows_to_json(field, cert.center_cap_radical_rows),
        }
    if isinstance(cert, RadicalGap):
        return {
            "kind": cert.kind,
            "ambient": cert.ambient,
            "radical_basis": rows_to_json(field, cert.radical_rows),
            "center_cap_radical_basis": rows_to_json(field, cert.center_cap_radical_rows),
            "ideal_basis": rows_to_json(field, cert.ideal_rows),
            "missing_vector": vector_to_json(field, cert.missing_vector),
        }
    if isinstance(cert, WitnessSearchExhausted):
        return {
            "kind": cert.kind,
            "samples_tried": cert.samples_tried,
            "gap": certificate_to_json(field, cert.gap),
        }
    raise TypeError(f"unknown certificate {cert!r}")


def certificate_from_json(field, doc):
    kind = doc.get("kind")
    if kind == "StableElementWitness":
        return StableElementWitness(
            vector_from_json(field, doc["element"]),
            vector_from_json(field, doc["central_part"]),
            vector_from_json(field, doc["ideal_part"]),
        )
    if kind == "UnstableElementWitness":
        return UnstableElementWitness(
            vector_from_json(field, doc["element"]),
            _rows_from_json(field, doc["center_basis"]),
            _rows_from_json(field, doc["ideal_basis"]),
            _rows_from_json(field, doc["sum_basis"]),
        )
    if kind == "RadicalMatch":
        return RadicalMatch(
            _rows_from_json(field, doc["radical_basis"]),
            _rows_from_json(field, doc["center_cap_radical_basis"]),
            doc["ambient"],
        )
    if kind == "RadicalGap":
        return RadicalGap(
            _rows_from_json(field, doc["radical_basis"]),
            _rows_from_json(field, doc["center_cap_radical_basis"]),
            _rows_from_json(field, doc["ideal_basis"]),
            vector_from_json(field, doc["missing_vector"]),
            doc["ambient"],
        )
    if kind == "WitnessSearchExhausted":
        return WitnessSearchExhausted(
            doc["samples_tried"], certificate_from_json(field, doc["gap"])
        )
    raise FileFormatError(f"unknown certificate kind {kind!r}")


def _rows_from_json(field, doc):
    return tuple(vector_from_json(field, row) for row in doc)


def report_to_json(
    a: Algebra,
    report: StabilityReport,
    *,
    command: str,
    seed=None,
    witness_budget=None,
    timings=None,
) -> dict:
    from . import __version__

    bases = {}
    for key, rows in report.bases.items():
        if key == "ambient":
            bases[key] = rows
        else:
            bases[key] = rows_to_json(a.field, rows)
    doc = {
        "command": command,
        "verdict": report.verdict,
        "method": report.method,
        "certificate": certificate_to_json(a.field, report.certificate),
        "bases": bases,
        "version": __version__,
    }
    if seed is not None:
        doc["seed"] = seed
    if witness_budget is not None:
        doc["witness_budget"] = witness_budget
    if timings is not None:
        doc["timings"] = timings
    return doc


def verify_report_json(a: Algebra, doc: dict) -> bool:
    """Replay a serialized report's certificate against an algebra."""
    cert = certificate_from_json(a.field, doc["certificate"])
    report = StabilityReport(doc["verdict"], doc["method"], cert)
    if not verify_certificate(a, report):
        return False
    # the certificate kind must actually support the claimed verdict
    stable_kinds = {"StableElementWitness", "RadicalMatch"}
    is_stable_cert = doc["certificate"]["kind"] in stable_kinds
    return is_stable_cert == (doc["verdict"] == "Stable")
