"""Facet and edge files.

One face (or edge) per line as whitespace-separated 1-based labels, ``#``
comments and blank lines skipped.  An optional ``n=<k>`` line fixes the vertex
count; otherwise it is the largest label seen.
"""

from __future__ import annotations

from pathlib import Path

from .complex import SimplicialComplex, empty_complex, from_facets
from .errors import ComplexError
from .graphs import Graph


class InputError(ComplexError):
    pass


def _parse(text: str, source: str = "<input>") -> tuple[int | None, list[list[int]]]:
    n = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.replace(" ", "").startswith("n="):
            value = line.replace(" ", "")[2:]
            if not value.isdigit():
                raise InputError(f"{source}:{lineno}: bad vertex count {value!r}")
            if n is not None:
                raise InputError(f"{source}:{lineno}: repeated n= header")
            n = int(value)
            continue
        row = []
        for token in line.split():
            if not token.isdigit() or int(token) == 0:
                raise InputError(f"{source}:{lineno}: {token!r} is not a positive integer label")
            row.append(int(token) - 1)
        rows.append(row)
    return n, rows


def _vertex_count(n: int | None, rows: list[list[int]], source: str) -> int:
    top = max((v + 1 for row in rows for v in row), default=0)
    if n is None:
        return top
    if top > n:
        raise InputError(f"{source}: label {top} exceeds n={n}")
    return n


def parse_complex(text: str, source: str = "<input>") -> SimplicialComplex:
    n, rows = _parse(text, source)
    n = _vertex_count(n, rows, source)
    if not rows:
        if n:
            raise InputError(f"{source}: n={n} but no facets")
        return empty_complex()
    try:
        return from_facets(n, rows)
    except ValueError as exc:
        raise InputError(f"{source}: {exc}") from exc


def parse_graph(text: str, source: str = "<input>") -> Graph:
    n, rows = _parse(text, source)
    n = _vertex_count(n, rows, source)
    for row in rows:
        if len(row) != 2:
            raise InputError(f"{source}: edge line {[v + 1 for v in row]} needs two labels")
    try:
        return Graph.from_edges(n, rows)
    except ValueError as exc:
        raise InputError(f"{source}: {exc}") from exc


def read_complex(path) -> SimplicialComplex:
    return parse_complex(_read(path), str(path))


def read_graph(path) -> Graph:
    return parse_graph(_read(path), str(path))


def _read(path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def format_complex(cx: SimplicialComplex) -> str:
    lines = [f"n={cx.n}"]
    for facet in cx.facet_lists():
        lines.append(" ".join(str(v + 1) for v in facet))
    return "\n".join(lines) + "\n"


def format_graph(g: Graph) -> str:
    lines = [f"n={g.n}"] + [f"{a + 1} {b + 1}" for a, b in g.edges()]
    return "\n".join(lines) + "\n"
