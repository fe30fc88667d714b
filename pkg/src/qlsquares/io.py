"""JSON documents for squares and dictionaries, and a matrix-style pretty printer.

Square document::

    {
      "format": "qls/1",
      "order": n,
      "meta": {"name": ..., "note": ...},      (optional)
      "grid": [[[scalar, ...], ...], ...]       n rows of n vectors of n scalars
    }

Scalars are strings in the exact grammar of :mod:`qlsquares.scalar`, so no
floating point is ever written.
"""
from __future__ import annotations

import json
from typing import Mapping

from .constructions import pair_alphabet, phi13_alphabet
from .errors import NotUnit, ParseError, SchemaError
from .linalg import PhaseKey, StateVec, phase_key
from .scalar import ONE, format_scalar, parse_scalar
from .search import Dictionary
from .square import QLSquare

__all__ = [
    "FORMAT",
    "DICT_FORMAT",
    "dumps",
    "loads",
    "save",
    "load",
    "dumps_dictionary",
    "loads_dictionary",
    "pretty",
    "known_alphabets",
]

FORMAT = "qls/1"
DICT_FORMAT = "qls-dict/1"


def _vec_json(v: StateVec) -> str:
    return json.dumps([format_scalar(e) for e in v.entries], separators=(",", ":"))


def to_document(q: QLSquare, name: str | None = None, note: str | None = None) -> dict:
    doc: dict = {"format": FORMAT, "order": q.n}
    meta = {k: v for k, v in (("name", name), ("note", note)) if v is not None}
    if meta:
        doc["meta"] = meta
    doc["grid"] = [[[format_scalar(e) for e in v.entries] for v in row] for row in q.grid]
    return doc


def dumps(q: QLSquare, name: str | None = None, note: str | None = None, compact: bool = False) -> str:
    """Canonical text. The layout is fixed (one row of the square per line) so
    that equal squares with equal metadata serialize to identical bytes."""
    doc = to_document(q, name, note)
    if compact:
        return json.dumps(doc, separators=(",", ":"), ensure_ascii=False)
    head = [f'  "format": {json.dumps(FORMAT)}', f'  "order": {q.n}']
    if "meta" in doc:
        head.append(f'  "meta": {json.dumps(doc["meta"], ensure_ascii=False, separators=(", ", ": "))}')
    rows = ["    [" + ", ".join(_vec_json(v) for v in row) + "]" for row in q.grid]
    grid = '  "grid": [\n' + ",\n".join(rows) + "\n  ]"
    return "{\n" + ",\n".join(head + [grid]) + "\n}\n"


def _locate(text: str, token: str) -> tuple[int | None, int | None]:
    # json gives no value positions; find the first occurrence of the encoded string
    at = text.find(json.dumps(token))
    if at < 0:
        return None, None
    line = text.count("\n", 0, at) + 1
    col = at - (text.rfind("\n", 0, at) + 1) + 1
    return line, col


def _parse_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.pos, line=exc.lineno, column=exc.colno) from None


def _parse_vector(raw, n: int, where: str, text: str) -> StateVec:
    if not isinstance(raw, list) or len(raw) != n:
        raise SchemaError(f"{where}: expected a list of {n} scalar strings")
    out = []
    for k, s in enumerate(raw):
        if not isinstance(s, str):
            raise SchemaError(f"{where}[{k}]: expected a scalar string, got {type(s).__name__}")
        try:
            out.append(parse_scalar(s))
        except ParseError as exc:
            line, col = _locate(text, s)
            raise ParseError(exc.message, exc.position, text=s,
                             where=f"{where}[{k}]", line=line, column=col) from None
    return StateVec(out)


def from_document(doc, text: str = "") -> QLSquare:
    if not isinstance(doc, dict):
        raise SchemaError("top level must be an object")
    if doc.get("format") != FORMAT:
        raise SchemaError(f"format must be {FORMAT!r}, got {doc.get('format')!r}")
    n = doc.get("order")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise SchemaError("order must be a positive integer")
    if "meta" in doc and not isinstance(doc["meta"], dict):
        raise SchemaError("meta must be an object")
    extra = set(doc) - {"format", "order", "meta", "grid"}
    if extra:
        raise SchemaError(f"unknown keys {sorted(extra)}")
    grid = doc.get("grid")
    if not isinstance(grid, list) or len(grid) != n:
        raise SchemaError(f"grid must be a list of {n} rows")
    rows = []
    for i, row in enumerate(grid):
        if not isinstance(row, list) or len(row) != n:
            raise SchemaError(f"grid[{i}] must be a list of {n} vectors")
        vecs = []
        for j, raw in enumerate(row):
            v = _parse_vector(raw, n, f"grid[{i}][{j}]", text)
            if v.norm_sq() != ONE:
                raise NotUnit(f"norm squared {format_scalar(v.norm_sq())}", cell=(i, j))
            vecs.append(v)
        rows.append(vecs)
    return QLSquare(rows)


def loads(text: str) -> QLSquare:
    return from_document(_parse_json(text), text)


def load_meta(text: str) -> dict:
    doc = _parse_json(text)
    return doc.get("meta", {}) if isinstance(doc, dict) else {}


def save(q: QLSquare, path, name: str | None = None, note: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(q, name, note))


def load(path) -> QLSquare:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def dumps_dictionary(d: Dictionary) -> str:
    lines = [f'  {{"name": {json.dumps(nm)}, "vector": {_vec_json(v)}}}' for nm, v in zip(d.names, d.vectors)]
    return ('{\n  "format": ' + json.dumps(DICT_FORMAT) + f',\n  "order": {d.dim},\n  "vectors": [\n'
            + ",\n".join("  " + ln for ln in lines) + "\n  ]\n}\n")


def loads_dictionary(text: str) -> Dictionary:
    doc = _parse_json(text)
    if not isinstance(doc, dict) or doc.get("format") != DICT_FORMAT:
        raise SchemaError(f"format must be {DICT_FORMAT!r}")
    n = doc.get("order")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise SchemaError("order must be a positive integer")
    items = doc.get("vectors")
    if not isinstance(items, list) or not items:
        raise SchemaError("vectors must be a non-empty list")
    names, vecs = [], []
    for k, it in enumerate(items):
        if not isinstance(it, dict) or not isinstance(it.get("name"), str):
            raise SchemaError(f"vectors[{k}] must be an object with a string name")
        names.append(it["name"])
        vecs.append(_parse_vector(it.get("vector"), n, f"vectors[{k}].vector", text))
    return Dictionary.from_vectors(vecs, names)


# -- pretty printing ------------------------------------------------------------

def known_alphabets(n: int) -> list[dict[str, StateVec]]:
    """Named vector sets tried by :func:`pretty`, most generic first."""
    alphas = [pair_alphabet(n)]
    if n == 6:
        alphas.append(phi13_alphabet().entries())
    return alphas


def _namer(alpha: Mapping[str, StateVec]):
    by_key: dict[PhaseKey, tuple[str, StateVec]] = {phase_key(v): (nm, v) for nm, v in alpha.items()}

    def name(v: StateVec) -> str | None:
        hit = by_key.get(phase_key(v))
        if hit is None:
            return None
        nm, ref = hit
        if v == ref:
            return nm
        if v == -ref:
            return "-" + nm
        k = v.support[0]
        return f"({format_scalar(v.entries[k] / ref.entries[k])})*{nm}"

    return name


def pretty(q: QLSquare, alphabet: Mapping[str, StateVec] | None = None) -> str:
    """Aligned grid of names. Without an explicit alphabet the known alphabet naming
    the most cells wins (ties go to the earlier, more generic one); unnamed cells
    print as coordinate tuples."""
    cells = [v for row in q.grid for v in row]
    if alphabet is not None:
        namer = _namer(alphabet)
    else:
        best, namer = -1, None
        for alpha in known_alphabets(q.n):
            f = _namer(alpha)
            hits = sum(f(v) is not None for v in cells)
            if hits > best:
                best, namer = hits, f
    tokens = []
    for row in q.grid:
        out = []
        for v in row:
            nm = namer(v)
            out.append(nm if nm is not None else "(" + ",".join(format_scalar(e) for e in v.entries) + ")")
        tokens.append(out)
    widths = [max(len(tokens[i][j]) for i in range(q.n)) for j in range(q.n)]
    return "\n".join(" ".join(t.ljust(w) for t, w in zip(row, widths)).rstrip() for row in tokens)
