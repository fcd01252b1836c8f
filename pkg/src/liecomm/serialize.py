"""Algebra and witness files (JSON).

Algebra document::

    {"name": "H(1)", "field": {"p": 2, "k": 1}, "dim": 3,
     "brackets": [{"i": 1, "j": 2, "terms": [{"k": 3, "c": 1}]}]}

Indices are 1-based with ``i < j``; coefficients are canonical field codes.
:func:`emit` is canonical (sorted keys, zero terms dropped, brackets in
``(i, j)`` order, terms in ``k`` order), so ``emit(parse(emit(L)))`` is
byte-identical to ``emit(L)``.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import LieCommError, ParseError
from .gfq import Field, field_from_json
from .analysis.isoclinism import IsoclinismWitness
from .lie_core import LieAlgebra, algebra_create
from .linalg import Matrix


def algebra_to_json(L: LieAlgebra) -> dict:
    n = L.dim
    brackets = []
    for i in range(n):
        for j in range(i + 1, n):
            terms = [{"k": k + 1, "c": c} for k, c in enumerate(L.table[i][j]) if c]
            if terms:
                brackets.append({"i": i + 1, "j": j + 1, "terms": terms})
    doc = {"field": L.field.to_json(), "dim": n, "brackets": brackets}
    if L.name:
        doc["name"] = L.name
    return doc


def canonical_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def emit(L: LieAlgebra) -> str:
    return canonical_json(algebra_to_json(L))


def _int(obj, key, where):
    try:
        v = obj[key]
    except (KeyError, TypeError):
        raise ParseError(f"{where}: missing key {key!r}") from None
    if not isinstance(v, int) or isinstance(v, bool):
        raise ParseError(f"{where}: {key!r} must be an integer, got {v!r}")
    return v


def algebra_from_json(doc) -> LieAlgebra:
    if not isinstance(doc, dict):
        raise ParseError("algebra document must be a JSON object")
    if "field" not in doc or not isinstance(doc["field"], dict):
        raise ParseError("missing 'field' object")
    F: Field = field_from_json(doc["field"])
    n = _int(doc, "dim", "algebra")
    brackets = doc.get("brackets", [])
    if not isinstance(brackets, list):
        raise ParseError("'brackets' must be a list")
    entries = []
    for pos, b in enumerate(brackets):
        where = f"brackets[{pos}]"
        i, j = _int(b, "i", where), _int(b, "j", where)
        terms = b.get("terms")
        if not isinstance(terms, list):
            raise ParseError(f"{where}: 'terms' must be a list")
        for t in terms:
            entries.append((i, j, _int(t, "k", where), _int(t, "c", where)))
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise ParseError("'name' must be a string")
    return algebra_create(F, n, entries, name)


def parse(text: str) -> LieAlgebra:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    return algebra_from_json(doc)


def load(path: str | Path) -> LieAlgebra:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    return parse(text)


def dump(L: LieAlgebra, path: str | Path) -> None:
    Path(path).write_text(emit(L), encoding="utf-8")


def witness_from_json(doc, F: Field) -> IsoclinismWitness:
    try:
        alpha, beta = doc["alpha"], doc["beta"]
    except (KeyError, TypeError):
        raise ParseError("witness needs 'alpha' and 'beta' matrices") from None
    try:
        a = Matrix.from_rows(F, alpha, len(alpha))
        b = Matrix.from_rows(F, beta, len(beta))
    except (LieCommError, TypeError, ValueError) as exc:
        raise ParseError(f"bad witness matrix: {exc}") from None
    return IsoclinismWitness(a, b)


def load_witness(path: str | Path, F: Field) -> IsoclinismWitness:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read witness {path}: {exc}") from None
    return witness_from_json(doc, F)
