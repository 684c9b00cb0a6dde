"""Plain-text formats: fans, coefficient term lists, matrices, diagrams.

Everything is line-oriented ASCII with explicit integers; ``#`` starts a
comment.  Canonical fan printing sorts rays lexicographically and cones by
dimension then generators, so printed files are byte-stable and
parse-print round-trips on canonical files are the identity.

Fan file:            rank N / ray c1 .. cN / cone i j k  (maximal cones suffice)
Term list file:      term coeff i j k      (cone given by ray indices)
Matrix file:         matrix R C / row c1 .. cC   (R times)
Diagram file:        base PATH / node NAME PATH / edge SRC DST
"""

from __future__ import annotations

import os
from typing import Iterable, Sequence

from .errors import ParseError, ToricError
from .fan import Cone, Fan, build_fan

__all__ = [
    "parse_fan",
    "print_fan",
    "parse_terms",
    "print_terms",
    "parse_matrix",
    "parse_diagram",
    "load_fan",
]


def _tokenize(text: str):
    """Yield (line_number, column, word) triples, comments stripped."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = []
        col = 0
        for word in line.split():
            col = line.index(word, col)
            tokens.append((lineno, col + 1, word))
            col += len(word)
        if tokens:
            yield tokens


def _int(token, source):
    lineno, col, word = token
    try:
        return int(word)
    except ValueError:
        raise ParseError(f"expected an integer, got {word!r}", lineno, col, source) from None


def parse_fan(text: str, source: str = "<string>") -> Fan:
    """Parse and validate a fan file; errors carry line and column."""
    rank = None
    rays: list[tuple[int, ...]] = []
    cones: list[list[int]] = []
    saw_cone_line = False
    for tokens in _tokenize(text):
        lineno, col, word = tokens[0]
        args = tokens[1:]
        if word == "rank":
            if rank is not None:
                raise ParseError("duplicate rank line", lineno, col, source)
            if len(args) != 1:
                raise ParseError("rank takes one integer", lineno, col, source)
            rank = _int(args[0], source)
            if rank < 0:
                raise ParseError("rank must be nonnegative", lineno, col, source)
        elif word == "ray":
            if rank is None:
                raise ParseError("ray before rank", lineno, col, source)
            coords = tuple(_int(t, source) for t in args)
            if len(coords) != rank:
                raise ParseError(
                    f"ray needs {rank} coordinates, got {len(coords)}", lineno, col, source
                )
            rays.append(coords)
        elif word == "cone":
            if rank is None:
                raise ParseError("cone before rank", lineno, col, source)
            idx = [_int(t, source) for t in args]
            for t, i in zip(args, idx):
                if not 0 <= i < len(rays):
                    raise ParseError(f"ray index {i} out of range", t[0], t[1], source)
            cones.append(idx)
            saw_cone_line = True
        else:
            raise ParseError(f"unknown directive {word!r}", lineno, col, source)
    if rank is None:
        raise ParseError("empty input: missing rank line", 1, 1, source)
    if rays and not saw_cone_line:
        raise ParseError("rays listed but no cone lines", 1, 1, source)
    try:
        return build_fan(rank, rays, cones)
    except ToricError as exc:
        raise ParseError(str(exc), 1, 1, source) from exc


def print_fan(fan: Fan) -> str:
    """Canonical fan file: rays sorted lexicographically, cones sorted."""
    order = sorted(range(len(fan.rays)), key=lambda i: fan.rays[i])
    renumber = {old: new for new, old in enumerate(order)}
    lines = [f"rank {fan.rank}"]
    for i in order:
        lines.append("ray " + " ".join(str(c) for c in fan.rays[i]))
    maximal = sorted(
        fan.maximal_cones, key=lambda c: (c.dim, tuple(sorted(fan.cone_generators(c))))
    )
    for cone in maximal:
        idx = sorted(renumber[i] for i in cone.ray_indices)
        lines.append(("cone " + " ".join(str(i) for i in idx)).rstrip())
    return "\n".join(lines) + "\n"


def parse_terms(text: str, fan: Fan, source: str = "<string>") -> dict[Cone, int]:
    """Parse ``term coeff i j k`` lines into a cone-coefficient map."""
    out: dict[Cone, int] = {}
    for tokens in _tokenize(text):
        lineno, col, word = tokens[0]
        if word != "term":
            raise ParseError(f"unknown directive {word!r}", lineno, col, source)
        if len(tokens) < 2:
            raise ParseError("term needs a coefficient", lineno, col, source)
        coeff = _int(tokens[1], source)
        idx = [_int(t, source) for t in tokens[2:]]
        for t, i in zip(tokens[2:], idx):
            if not 0 <= i < len(fan.rays):
                raise ParseError(f"ray index {i} out of range", t[0], t[1], source)
        try:
            cone = fan.cone(idx)
        except ToricError as exc:
            raise ParseError(str(exc), lineno, col, source) from exc
        out[cone] = out.get(cone, 0) + coeff
    return out


def print_terms(coeffs, fan: Fan) -> str:
    """Porcelain term lines, cones in canonical order."""
    items = sorted(coeffs.items(), key=lambda cm: fan._sort_key(cm[0]))
    lines = []
    for cone, m in items:
        idx = " ".join(str(i) for i in sorted(cone.ray_indices))
        lines.append(f"term {m} {idx}".rstrip())
    return "\n".join(lines) + ("\n" if lines else "")


def parse_matrix(text: str, source: str = "<string>") -> list[list[int]]:
    """Parse ``matrix R C`` followed by R ``row`` lines."""
    shape = None
    rows: list[list[int]] = []
    for tokens in _tokenize(text):
        lineno, col, word = tokens[0]
        args = tokens[1:]
        if word == "matrix":
            if shape is not None:
                raise ParseError("duplicate matrix line", lineno, col, source)
            if len(args) != 2:
                raise ParseError("matrix takes rows and columns", lineno, col, source)
            shape = (_int(args[0], source), _int(args[1], source))
        elif word == "row":
            if shape is None:
                raise ParseError("row before matrix", lineno, col, source)
            row = [_int(t, source) for t in args]
            if len(row) != shape[1]:
                raise ParseError(
                    f"row needs {shape[1]} entries, got {len(row)}", lineno, col, source
                )
            rows.append(row)
        else:
            raise ParseError(f"unknown directive {word!r}", lineno, col, source)
    if shape is None:
        raise ParseError("empty input: missing matrix line", 1, 1, source)
    if len(rows) != shape[0]:
        raise ParseError(f"expected {shape[0]} rows, got {len(rows)}", 1, 1, source)
    return rows


def load_fan(path: str) -> Fan:
    with open(path, "r", encoding="ascii") as handle:
        return parse_fan(handle.read(), source=path)


def parse_diagram(text: str, source: str = "<string>", directory: str = "."):
    """Resolve a diagram file into (base fan, named node fans, edge name pairs).

    Fan paths are resolved relative to ``directory`` (the diagram file's own
    location when loaded from disk).
    """
    base = None
    nodes: dict[str, Fan] = {}
    edges: list[tuple[str, str]] = []
    for tokens in _tokenize(text):
        lineno, col, word = tokens[0]
        args = tokens[1:]
        if word == "base":
            if base is not None:
                raise ParseError("duplicate base line", lineno, col, source)
            if len(args) != 1:
                raise ParseError("base takes one fan path", lineno, col, source)
            base = load_fan(os.path.join(directory, args[0][2]))
        elif word == "node":
            if len(args) != 2:
                raise ParseError("node takes a name and a fan path", lineno, col, source)
            name = args[0][2]
            if name in nodes:
                raise ParseError(f"duplicate node {name!r}", lineno, col, source)
            nodes[name] = load_fan(os.path.join(directory, args[1][2]))
        elif word == "edge":
            if len(args) != 2:
                raise ParseError("edge takes source and target node names", lineno, col, source)
            src, dst = args[0][2], args[1][2]
            for t, name in zip(args, (src, dst)):
                if name not in nodes:
                    raise ParseError(f"unknown node {name!r}", t[0], t[1], source)
            edges.append((src, dst))
        else:
            raise ParseError(f"unknown directive {word!r}", lineno, col, source)
    if base is None:
        raise ParseError("missing base line", 1, 1, source)
    return base, nodes, edges
