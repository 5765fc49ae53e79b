"""Graph codecs (graph6, edge-list text) and result-table emission.

graph6 encoding: a size field (chr(63 + n) for n <= 62, '~' plus three
6-bit groups for larger n up to 2^18 - 1) followed by the upper-triangle
adjacency bits in column order x(0,1), x(0,2), x(1,2), x(0,3), ...,
packed six bits per byte, each byte offset by 63. Padding bits are zero.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import InvalidParam, InvariantViolation, ParseError
from .graph import Graph, build_graph

_G6_HEADER = b">>graph6<<"
_G6_MAX_N = 1 << 18


def _as_bytes(data) -> bytes:
    if isinstance(data, str):
        return data.encode("ascii")
    return bytes(data)


def parse_graph6(line) -> Graph:
    """Decode one graph6 record (str or bytes; optional header stripped)."""
    raw = _as_bytes(line).strip()
    if raw.startswith(_G6_HEADER):
        raw = raw[len(_G6_HEADER):]
    if not raw:
        raise ParseError("empty graph6 record", offset=0)
    pos = 0
    if raw[0] == 126:
        if len(raw) >= 2 and raw[1] == 126:
            raise ParseError("graph6 records beyond 2^18 vertices unsupported",
                             offset=1)
        if len(raw) < 4:
            raise ParseError("truncated graph6 size field", offset=len(raw))
        n = 0
        for pos in range(1, 4):
            b = raw[pos]
            if not (63 <= b <= 126):
                raise ParseError(f"size byte {b} outside graph6 range", offset=pos)
            n = (n << 6) | (b - 63)
        pos = 4
    else:
        b = raw[0]
        if not (63 <= b <= 125):
            raise ParseError(f"size byte {b} outside graph6 range", offset=0)
        n = b - 63
        pos = 1
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(raw) - pos != nbytes:
        raise ParseError(
            f"expected {nbytes} data bytes for n={n}, got {len(raw) - pos}",
            offset=pos)
    bits = []
    for i in range(nbytes):
        b = raw[pos + i]
        if not (63 <= b <= 126):
            raise ParseError(f"data byte {b} outside graph6 range", offset=pos + i)
        val = b - 63
        bits.extend((val >> s) & 1 for s in (5, 4, 3, 2, 1, 0))
    if any(bits[nbits:]):
        raise ParseError("nonzero padding bits", offset=pos + nbytes - 1)
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits[idx]:
                edges.append((u, v))
            idx += 1
    return build_graph(n, edges)


def write_graph6(g: Graph) -> str:
    """Canonical graph6 encoding; round-trips through parse_graph6."""
    n = g.n
    if n >= _G6_MAX_N:
        raise InvalidParam(f"graph6 writer supports n < {_G6_MAX_N}, got {n}")
    out = bytearray()
    if n <= 62:
        out.append(63 + n)
    else:
        out.append(126)
        out.extend(63 + ((n >> s) & 63) for s in (12, 6, 0))
    acc = 0
    filled = 0
    for v in range(1, n):
        for u in range(v):
            acc = (acc << 1) | (1 if g.has_edge(u, v) else 0)
            filled += 1
            if filled == 6:
                out.append(63 + acc)
                acc = 0
                filled = 0
    if filled:
        out.append(63 + (acc << (6 - filled)))
    return out.decode("ascii")


def parse_edge_list(text: str) -> Graph:
    """Edge-list text: first line "n <count>", then one "u v" per line."""
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty edge-list input", line=1)
    head = lines[0].split()
    if len(head) != 2 or head[0] != "n":
        raise ParseError('first line must be "n <count>"', line=1)
    try:
        n = int(head[1])
    except ValueError:
        raise ParseError(f"bad vertex count {head[1]!r}", line=1) from None
    if n < 0:
        raise ParseError(f"negative vertex count {n}", line=1)
    edges = []
    for no, raw in enumerate(lines[1:], start=2):
        if not raw.strip():
            continue
        parts = raw.split()
        if len(parts) != 2:
            raise ParseError(f'expected "u v" on line {no}', line=no)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer endpoint on line {no}", line=no) from None
        if not (0 <= u < n) or not (0 <= v < n):
            raise ParseError(f"vertex outside 0..{n - 1} on line {no}", line=no)
        if u == v:
            raise ParseError(f"loop at vertex {u} on line {no}", line=no)
        edges.append((u, v))
    return build_graph(n, edges)


@dataclass(frozen=True)
class ResultRecord:
    """One solver result row; construction re-checks the capture bounds."""

    instance_id: str
    n: int
    m: int
    rad: int | None
    diam: int | None
    girth: int
    rc: int | None
    lb: int
    ub: int | None
    ms: float = 0.0

    def __post_init__(self):
        if "," in self.instance_id:
            raise InvalidParam(f"record id {self.instance_id!r} contains a comma")
        if self.lb != max(0, self.girth // 2 - 1):
            raise InvariantViolation(
                f"lower bound {self.lb} inconsistent with girth {self.girth}")
        if self.rc is not None:
            if self.rad is None or self.ub != max(0, self.rad - 1):
                raise InvariantViolation(
                    f"upper bound {self.ub} inconsistent with radius {self.rad}")
            if not (self.lb <= self.rc <= self.ub):
                raise InvariantViolation(
                    f"rc {self.rc} outside [{self.lb}, {self.ub}] for {self.instance_id}")


_FIELDS = ("instance_id", "n", "m", "rad", "diam", "girth", "rc", "lb", "ub", "ms")
_HEADER = "id,n,m,rad,diam,girth,rc,lb,ub,ms"


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return format(value, "g")
    return str(value)


def emit_results(records, fmt: str = "csv") -> str:
    """Render records as CSV (fixed header, empty cells for missing) or as
    a JSON array with nulls; record order is preserved."""
    if fmt == "csv":
        lines = [_HEADER]
        for rec in records:
            lines.append(",".join(_cell(getattr(rec, f)) for f in _FIELDS))
        return "\n".join(lines) + "\n"
    if fmt == "json":
        payload = []
        for rec in records:
            row = {("id" if f == "instance_id" else f): getattr(rec, f)
                   for f in _FIELDS}
            payload.append(row)
        return json.dumps(payload, indent=2) + "\n"
    raise InvalidParam(f"unknown output format {fmt!r}")
