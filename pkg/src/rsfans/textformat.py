"""Plain-text structure files.

Grammar (one directive per line, ``#`` starts a comment, blank lines ignored)::

    name: <word>
    constants: one=<elem> zero=<elem> minus_one=<elem>
    elements: <elem> <elem> ...          # optional in presentation form
    table:                               # explicit form
    <elem> <elem> ...                    # n rows; row i lists e_i * e_j
    ...

or, instead of ``table:``::

    generators: <gen> <gen> ...
    relations:
    <monomial> = <monomial>              # zero or more lines

Element names are whitespace-free tokens.  Monomials accept ``x^2``, ``x²``,
juxtaposition (``xy``), ``*`` or ``·`` between factors, a leading ``-`` or
``−``, and the constants ``1``, ``0``, ``-1``.  In presentation form the
element list, when given, must equal the derived one, and the constants line
must name the derived ``1``, ``0`` and ``-1``.  ``dump`` followed by ``parse``
reproduces the structure exactly.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .ts import FiniteTS, Presentation, StructureError, build_from_presentation, normalize_name


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


_KEYS = ("name", "constants", "elements", "table", "generators", "relations")


def parse(text: str) -> FiniteTS:
    """Parse a structure file into a :class:`FiniteTS`."""
    fields: dict[str, tuple[int, str]] = {}
    block: list[tuple[int, str]] = []
    block_kind = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        head, sep, rest = line.partition(":")
        key = head.strip().lower()
        if sep and key in _KEYS:
            if key in fields:
                raise ParseError(f"duplicate directive {key!r}", lineno)
            fields[key] = (lineno, rest.strip())
            if key in ("table", "relations"):
                if block_kind is not None:
                    raise ParseError("only one of 'table:' or 'relations:' allowed", lineno)
                block_kind = key
                if rest.strip():
                    raise ParseError(f"'{key}:' must be followed by lines, not inline text", lineno,
                                     line.index(":") + 2)
            elif block_kind is not None:
                raise ParseError(f"directive {key!r} after the {block_kind} block", lineno)
            continue
        if block_kind is None:
            raise ParseError(f"unrecognised line {line.strip()!r}", lineno, len(line) - len(line.lstrip()) + 1)
        block.append((lineno, line.strip()))

    name = fields.get("name", (0, "G"))[1] or "G"
    if "generators" in fields or block_kind == "relations":
        return _parse_presentation(fields, block, name)
    if block_kind != "table":
        raise ParseError("missing 'table:' or 'relations:' block", max((l for l, _ in fields.values()), default=1))
    return _parse_table(fields, block, name)


def _constants(fields, names_index, where) -> tuple[int, int, int]:
    if "constants" not in fields:
        raise ParseError("missing 'constants:' line", where)
    lineno, rest = fields["constants"]
    got = {}
    for tok in rest.split():
        k, eq, v = tok.partition("=")
        if not eq or k not in ("one", "zero", "minus_one"):
            raise ParseError(f"bad constant binding {tok!r}", lineno, rest.find(tok) + 12)
        v = normalize_name(v)
        if v not in names_index:
            raise ParseError(f"unknown element {v!r} in constants", lineno, rest.find(tok) + 12)
        got[k] = names_index[v]
    missing = {"one", "zero", "minus_one"} - got.keys()
    if missing:
        raise ParseError(f"constants missing {sorted(missing)}", lineno)
    return got["one"], got["zero"], got["minus_one"]


def _parse_table(fields, block, name) -> FiniteTS:
    if "elements" not in fields:
        raise ParseError("missing 'elements:' line", fields["table"][0])
    el_line, el_text = fields["elements"]
    names = [normalize_name(t) for t in el_text.split()]
    if len(set(names)) != len(names):
        raise ParseError("duplicate element names", el_line)
    idx = {nm: i for i, nm in enumerate(names)}
    n = len(names)
    if len(block) != n:
        raise ParseError(f"table has {len(block)} rows, expected {n}", block[-1][0] if block else fields["table"][0])
    table = np.empty((n, n), dtype=np.int64)
    for i, (lineno, row) in enumerate(block):
        toks = row.split()
        if len(toks) != n:
            raise ParseError(f"row has {len(toks)} entries, expected {n}", lineno)
        col = 0
        for j, tok in enumerate(toks):
            col = row.index(tok, col) + 1
            key = normalize_name(tok)
            if key not in idx:
                raise ParseError(f"unknown element {tok!r}", lineno, col)
            table[i, j] = idx[key]
    one, zero, m1 = _constants(fields, idx, el_line)
    return FiniteTS(tuple(names), table, one, zero, m1, name=name)


def _parse_presentation(fields, block, name) -> FiniteTS:
    if "generators" not in fields:
        raise ParseError("missing 'generators:' line", block[0][0] if block else 1)
    gl, gtext = fields["generators"]
    gens = gtext.split()
    rels = []
    for lineno, line in block:
        try:
            rels.append(Presentation.parse(gens, [line]).relations[0])
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
    try:
        p = Presentation(tuple(gens), tuple(rels))
        Presentation.parse(gens, [])  # validates generator names
        G = build_from_presentation(p, name=name)
    except ValueError as exc:
        raise ParseError(str(exc), gl) from None
    idx = {nm: i for i, nm in enumerate(G.names)}
    if "elements" in fields:
        el_line, el_text = fields["elements"]
        listed = [normalize_name(t) for t in el_text.split()]
        if listed != list(G.names):
            raise ParseError("element list does not match the presented structure: "
                             f"derived {' '.join(G.names)}", el_line)
    if "constants" in fields:
        if _constants(fields, idx, gl) != (G.one, G.zero, G.minus_one):
            raise ParseError("constants do not match the presented structure", fields["constants"][0])
    return G


def dump(G: FiniteTS) -> str:
    """Serialise; presentation-built structures keep their presentation."""
    out = [f"name: {G.name}",
           f"constants: one={G.names[G.one]} zero={G.names[G.zero]} minus_one={G.names[G.minus_one]}",
           "elements: " + " ".join(G.names)]
    if G.presentation is not None:
        out.append("generators: " + " ".join(G.presentation.generators))
        out.append("relations:")
        out += G.presentation.relation_strings()
    else:
        out.append("table:")
        width = max(len(nm) for nm in G.names)
        for row in G.table:
            out.append(" ".join(G.names[j].ljust(width) for j in row).rstrip())
    return "\n".join(out) + "\n"


def load(path: str | Path) -> FiniteTS:
    return parse(Path(path).read_text(encoding="utf-8"))


def save(G: FiniteTS, path: str | Path) -> None:
    Path(path).write_text(dump(G), encoding="utf-8")


__all__ = ["ParseError", "StructureError", "parse", "dump", "load", "save"]
