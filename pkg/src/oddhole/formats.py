"""graph6 and DIMACS reading/writing, and corpus manifests.

A corpus manifest is a text file of graph6 lines. Lines that are exactly
``c`` or start with ``c `` are comments; a comment of the form
``c gen key=value ...`` records the generator settings for the graphs that
follow it. graph6 data never contains a space, so a graph whose first byte
is ``c`` (36 vertices) cannot be mistaken for a comment.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, Iterator, TextIO

import numpy as np

from .graph import Graph, GraphError

log = logging.getLogger(__name__)

_HEADER = ">>graph6<<"


class ParseError(ValueError):
    def __init__(self, message: str, offset: int | None = None, line: int | None = None):
        self.reason = message
        self.offset = offset
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"byte {offset}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)


def _size_bytes(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n < 2**36:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError(f"graph6 cannot encode {n} vertices")


def write_graph6(g: Graph) -> str:
    n = g.n
    iu = np.triu_indices(n, 1)
    # column-wise upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    order = np.lexsort((iu[0], iu[1]))
    bits = g.adj[iu[0][order], iu[1][order]]
    pad = (-bits.size) % 6
    bits = np.concatenate([bits, np.zeros(pad, dtype=bool)]).reshape(-1, 6)
    values = bits.astype(np.uint8) @ np.array([32, 16, 8, 4, 2, 1], dtype=np.uint8)
    return (_size_bytes(n) + bytes((values + 63).tolist())).decode("ascii")


def parse_graph6(s: str) -> Graph:
    text = s.rstrip("\r\n")
    start = 0
    if text.startswith(_HEADER):
        start = len(_HEADER)
    data = text[start:].encode("ascii", errors="replace")
    for i, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise ParseError(f"byte {byte!r} outside the graph6 range 63..126", start + i)
    if not data:
        raise ParseError("empty graph6 string", start)

    pos = 0
    if data[0] != 126:
        n = data[0] - 63
        pos = 1
    elif len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise ParseError("truncated 8-byte size field", start + len(data))
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        pos = 8
        if n <= 258047:
            raise ParseError("non-canonical 8-byte size field", start + 2)
    else:
        if len(data) < 4:
            raise ParseError("truncated 4-byte size field", start + len(data))
        n = 0
        for b in data[1:4]:
            n = (n << 6) | (b - 63)
        pos = 4
        if n <= 62:
            raise ParseError("non-canonical 4-byte size field", start + 1)

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < nbytes:
        raise ParseError(f"expected {nbytes} data bytes for n={n}, got {len(body)}", start + len(data))
    if len(body) > nbytes:
        raise ParseError("trailing bytes after graph6 data", start + pos + nbytes)

    raw = np.frombuffer(bytes(body), dtype=np.uint8) - 63
    bits = np.unpackbits(raw[:, None], axis=1)[:, 2:].reshape(-1).astype(bool)
    if bits[nbits:].any():
        raise ParseError("non-zero padding bits", start + pos + nbytes - 1)
    iu = np.triu_indices(n, 1)
    order = np.lexsort((iu[0], iu[1]))
    adj = np.zeros((n, n), dtype=bool)
    adj[iu[0][order], iu[1][order]] = bits[:nbits]
    return Graph(adj | adj.T)


def parse_dimacs(text: str) -> Graph:
    """DIMACS edge format: ``c`` comments, one ``p edge n m`` line, ``e u v`` lines (1-based)."""
    n = None
    declared = 0
    edges: list[tuple[int, int]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        parts = line.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            if n is not None:
                raise ParseError("second problem line", line=lineno)
            if len(parts) != 4:
                raise ParseError("problem line must read 'p edge N M'", line=lineno)
            try:
                n, declared = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError("non-integer size on problem line", line=lineno) from None
            if n < 0 or declared < 0:
                raise ParseError("negative size on problem line", line=lineno)
        elif parts[0] == "e":
            if n is None:
                raise ParseError("edge line before the problem line", line=lineno)
            if len(parts) != 3:
                raise ParseError("edge line must read 'e U V'", line=lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError("non-integer endpoint", line=lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"endpoint out of range 1..{n}", line=lineno)
            if u == v:
                raise ParseError(f"self-loop at vertex {u}", line=lineno)
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"unknown line type {parts[0]!r}", line=lineno)
    if n is None:
        raise ParseError("missing problem line")
    if len(edges) != declared:
        log.warning("DIMACS problem line declares %d edges, found %d", declared, len(edges))
    try:
        return Graph.from_edge_list(n, edges)
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def write_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"] + [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def is_comment(line: str) -> bool:
    return line == "c" or line.startswith("c ")


@dataclass
class CorpusEntry:
    graph: Graph
    meta: dict[str, str] = field(default_factory=dict)
    line: int = 0


def _parse_meta(comment: str) -> dict[str, str] | None:
    parts = comment.split()
    if len(parts) < 2 or parts[1] != "gen":
        return None
    meta = {}
    for token in parts[2:]:
        key, sep, value = token.partition("=")
        if sep:
            meta[key] = value
    return meta


def read_manifest(stream: Iterable[str]) -> Iterator[CorpusEntry]:
    """Yield graphs of a manifest, each with the most recent ``c gen`` settings."""
    meta: dict[str, str] = {}
    for lineno, raw in enumerate(stream, start=1):
        line = raw.rstrip("\r\n")
        if not line.strip():
            continue
        if is_comment(line):
            found = _parse_meta(line)
            if found is not None:
                meta = found
            continue
        try:
            g = parse_graph6(line)
        except ParseError as exc:
            raise ParseError(exc.reason, exc.offset, lineno) from None
        yield CorpusEntry(g, dict(meta), lineno)


def write_manifest(out: TextIO, graphs: Iterable[Graph], meta: dict[str, object] | None = None) -> int:
    count = 0
    if meta:
        out.write("c gen " + " ".join(f"{k}={v}" for k, v in meta.items()) + "\n")
    for g in graphs:
        out.write(write_graph6(g) + "\n")
        count += 1
    return count
