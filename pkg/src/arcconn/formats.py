"""Edge-list and digraph6 parsing/serialization.

Edge list is the human format: a header line "n m", then one "tail head"
line per arc, with '#' comments and blank lines ignored.  digraph6 is the
machine format used by standard graph-generation tools: '&', then chr(63+n)
for n <= 62, then the n*n row-major adjacency bits in 6-bit chunks, each
chunk offset by 63, zero-padded at the end.

Malformed documents raise ParseError with the offending line (edge list) or
byte (digraph6); documents that decode cleanly but violate the oriented-graph
invariants (loops, digons, duplicates) raise InvariantViolation.
"""

from __future__ import annotations

import os
from typing import Iterator

from .digraph import Digraph
from .errors import InvalidDigraph, InvariantViolation, ParseError


def emit_edge_list(D: Digraph) -> str:
    lines = [f"{D.n} {D.m}"]
    lines += [f"{t} {h}" for t, h in D.arcs]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Digraph:
    header: tuple[int, int] | None = None
    arcs: list[tuple[tuple[int, int], int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2 or not all(_is_int(p) for p in parts):
            what = "header 'n m'" if header is None else "arc line 'tail head'"
            raise ParseError(f"expected {what}, got {raw.strip()!r}", line=lineno)
        a, b = int(parts[0]), int(parts[1])
        if header is None:
            header = (a, b)
        else:
            arcs.append(((a, b), lineno))
    if header is None:
        raise ParseError("document has no header line")
    n, m = header
    if n < 0 or m < 0:
        raise ParseError(f"header values must be non-negative, got {n} {m}")
    if len(arcs) != m:
        raise ParseError(f"header claims {m} arcs, document has {len(arcs)}")
    try:
        return Digraph(n, [arc for arc, _ in arcs])
    except InvalidDigraph as exc:
        line = next((ln for arc, ln in arcs if arc == exc.arc), None)
        raise InvariantViolation(str(exc), line=line) from exc


def _is_int(token: str) -> bool:
    try:
        int(token)
    except ValueError:
        return False
    return True


def emit_digraph6(D: Digraph) -> str:
    if D.n > 62:
        raise ParseError("digraph6 emitter handles n <= 62 only")
    n = D.n
    bits = 0
    nbits = n * n
    for t, h in D.arcs:
        bits |= 1 << (nbits - 1 - (t * n + h))
    padded = (nbits + 5) // 6 * 6
    bits <<= padded - nbits
    chars = []
    for shift in range(padded - 6, -1, -6):
        chars.append(chr(63 + (bits >> shift & 0x3F)))
    return "&" + chr(63 + n) + "".join(chars)


def parse_digraph6(text: str) -> Digraph:
    s = text.strip()
    if not s.startswith("&"):
        raise ParseError("digraph6 must start with '&'")
    if len(s) < 2:
        raise ParseError("digraph6 is missing the order byte")
    n = ord(s[1]) - 63
    if not 0 <= n <= 62:
        raise ParseError(f"unsupported order byte at position 1 (n={n})")
    body = s[2:]
    need = (n * n + 5) // 6
    if len(body) != need:
        raise ParseError(f"expected {need} payload bytes for n={n}, got {len(body)}")
    bits = 0
    for i, ch in enumerate(body):
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise ParseError(f"payload byte {ch!r} out of range at position {i + 2}")
        bits = bits << 6 | val
    padded = need * 6
    pad = bits & ((1 << (padded - n * n)) - 1) if padded > n * n else 0
    if pad:
        raise ParseError("nonzero padding bits")
    arcs = []
    for t in range(n):
        for h in range(n):
            if bits >> (padded - 1 - (t * n + h)) & 1:
                arcs.append((t, h))
    try:
        return Digraph(n, arcs)
    except InvalidDigraph as exc:
        raise InvariantViolation(f"digraph6 payload violates invariants: {exc}") from exc


def parse(text: str) -> Digraph:
    """Parse either format, sniffing digraph6 by its leading '&'."""
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("&"):
            return parse_digraph6(line)
        return parse_edge_list(text)
    raise ParseError("document is empty")


def load(path: str | os.PathLike[str]) -> Digraph:
    with open(path, "r", encoding="ascii") as fh:
        return parse(fh.read())


def save(D: Digraph, path: str | os.PathLike[str]) -> None:
    """Write D in the format implied by the extension (.d6 for digraph6)."""
    text = emit_digraph6(D) + "\n" if str(path).endswith(".d6") else emit_edge_list(D)
    with open(path, "w", encoding="ascii") as fh:
        fh.write(text)


def iter_digraph6(text: str) -> Iterator[Digraph]:
    """Parse a multi-graph document with one digraph6 token per line."""
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            yield parse_digraph6(line)
