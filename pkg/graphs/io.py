"""
Graph and weight file formats.

Canonical edge list: '#' comment lines, then "n m", then m lines "u v"
(0-based). DIMACS: 'c' comment lines, "p edge n m", then "e u v" lines
(1-based, converted to 0-based on load). Weight files hold "u v w" lines;
a JSON certificate is accepted in their place.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Dict, Iterator, List, Tuple, Union

from core.errors import GraphParseError, InvalidGraph
from graphs.graph import Edge, Graph, edge_key

PathLike = Union[str, Path]


def _content_lines(text: str, comment_prefixes: Tuple[str, ...]) -> Iterator[Tuple[int, List[str]]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith(comment_prefixes):
            continue
        yield lineno, stripped.split()


def _ints(tokens: List[str], lineno: int, expected: int) -> List[int]:
    if len(tokens) != expected:
        raise GraphParseError(f"expected {expected} integers, got {' '.join(tokens)!r}", lineno)
    try:
        return [int(tok) for tok in tokens]
    except ValueError:
        raise GraphParseError(f"non-integer token in {' '.join(tokens)!r}", lineno) from None


def detect_format(text: str) -> str:
    for _, tokens in _content_lines(text, ("#",)):
        return "dimacs" if tokens[0] in {"p", "c", "e"} else "edgelist"
    return "edgelist"


def parse_graph(text: str, fmt: str = "auto") -> Graph:
    if fmt == "auto":
        fmt = detect_format(text)
    if fmt == "dimacs":
        return _parse_dimacs(text)
    if fmt == "edgelist":
        return _parse_edgelist(text)
    raise GraphParseError(f"unknown graph format {fmt!r}")


def _parse_edgelist(text: str) -> Graph:
    lines = _content_lines(text, ("#",))
    header = next(lines, None)
    if header is None:
        raise GraphParseError("missing header line 'n m'")
    header_line, header_tokens = header
    n, m = _ints(header_tokens, header_line, 2)
    if n < 0 or m < 0:
        raise GraphParseError("vertex and edge counts must be nonnegative", header_line)
    pairs: List[Tuple[int, int, int]] = []
    for lineno, tokens in lines:
        u, v = _ints(tokens, lineno, 2)
        pairs.append((lineno, u, v))
    if len(pairs) != m:
        raise GraphParseError(f"header announces {m} edges, found {len(pairs)}", header_line)
    return _build(n, pairs, offset=0)


def _parse_dimacs(text: str) -> Graph:
    n = None
    m = None
    header_line = None
    pairs: List[Tuple[int, int, int]] = []
    for lineno, tokens in _content_lines(text, ("c", "#")):
        kind = tokens[0]
        if kind == "p":
            if n is not None:
                raise GraphParseError("second problem line", lineno)
            if len(tokens) != 4 or tokens[1] not in {"edge", "col"}:
                raise GraphParseError("problem line must read 'p edge n m'", lineno)
            n, m = _ints(tokens[2:], lineno, 2)
            header_line = lineno
        elif kind == "e":
            if n is None:
                raise GraphParseError("edge line before problem line", lineno)
            u, v = _ints(tokens[1:], lineno, 2)
            pairs.append((lineno, u, v))
        else:
            raise GraphParseError(f"unknown DIMACS line type {kind!r}", lineno)
    if n is None:
        raise GraphParseError("missing problem line 'p edge n m'")
    if len(pairs) != m:
        raise GraphParseError(f"problem line announces {m} edges, found {len(pairs)}", header_line)
    return _build(n, pairs, offset=1)


def _build(n: int, pairs: List[Tuple[int, int, int]], offset: int) -> Graph:
    keys = set()
    for lineno, u, v in pairs:
        u, v = u - offset, v - offset
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"edge endpoint outside the vertex range of {n} vertices", lineno)
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u + offset}", lineno)
        key = edge_key(u, v)
        if key in keys:
            raise GraphParseError(f"duplicate edge {u + offset} {v + offset}", lineno)
        keys.add(key)
    try:
        return Graph(n, frozenset(keys))
    except InvalidGraph as exc:
        raise GraphParseError(str(exc)) from exc


def _read_text(path: PathLike) -> str:
    data = Path(path).read_bytes()
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        line = data[: exc.start].count(b"\n") + 1
        raise GraphParseError(f"not UTF-8 text (byte {exc.start})", line) from exc


def read_graph(path: PathLike, fmt: str = "auto") -> Graph:
    return parse_graph(_read_text(path), fmt)


def format_graph(g: Graph, fmt: str = "edgelist", comment: str = "") -> str:
    lines: List[str] = []
    if fmt == "dimacs":
        if comment:
            lines.append(f"c {comment}")
        lines.append(f"p edge {g.n} {g.m}")
        lines.extend(f"e {u + 1} {v + 1}" for u, v in g.sorted_edges())
    else:
        if comment:
            lines.append(f"# {comment}")
        lines.append(f"{g.n} {g.m}")
        lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def parse_weights(text: str) -> Dict[Edge, int]:
    if text.lstrip().startswith("{"):
        return _weights_from_certificate(text)
    weights: Dict[Edge, int] = {}
    for lineno, tokens in _content_lines(text, ("#",)):
        u, v, w = _ints(tokens, lineno, 3)
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u}", lineno)
        key = edge_key(u, v)
        if key in weights:
            raise GraphParseError(f"edge {u} {v} weighted twice", lineno)
        weights[key] = w
    return weights


def _weights_from_certificate(text: str) -> Dict[Edge, int]:
    try:
        document = json.loads(text)
        entries = document["weights"]
        return {edge_key(int(e["u"]), int(e["v"])): int(e["weight"]) for e in entries}
    except (ValueError, KeyError, TypeError) as exc:
        raise GraphParseError(f"unreadable certificate: {exc}") from exc


def read_weights(path: PathLike) -> Dict[Edge, int]:
    return parse_weights(_read_text(path))
