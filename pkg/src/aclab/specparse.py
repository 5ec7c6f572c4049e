"""Parser for the one-line group spec format.

::

    perm d=5: (0 1)(2 3), (0 1 2 3 4)
    builtin: dihedral(6)
    abelian: 2,4
    wreath: 2,3

Blank lines and ``#`` comments are ignored in files; exactly one spec may
remain.  Errors report 1-based line and column.
"""

from __future__ import annotations

import hashlib
import re

from .errors import ACLabError, ParseError
from .groups import DEFAULT_ORDER_CAP, GroupTable, builtin_group, group_from_permutations

_HEAD = re.compile(r"\s*(perm|builtin|abelian|wreath)\b\s*", re.I)
_DEGREE = re.compile(r"d\s*=\s*(\d+)\s*", re.I)
_INTLIST = re.compile(r"\s*\d+(\s*,\s*\d+)*\s*$")


def _locate(text: str):
    for lineno, raw in enumerate(text.splitlines() or [""], start=1):
        body = raw.split("#", 1)[0]
        if body.strip():
            return lineno, body
    raise ParseError("empty group spec", 1, 1)


def _int_list(body, start, line, end=None):
    chunk = body[start:end]
    if not _INTLIST.match(chunk):
        bad = next((i for i, ch in enumerate(chunk) if not (ch.isdigit() or ch in ", \t")), 0)
        raise ParseError("expected a comma-separated list of integers", line, start + bad + 1)
    return [int(x) for x in chunk.split(",")]


def parse_cycles(text: str, degree: int, *, line: int = 1, offset: int = 0) -> list[int]:
    """Image list of a permutation written as disjoint cycles, e.g. ``(0 1)(2 3)``."""
    perm = list(range(degree))
    moved = set()
    pos = 0
    s = text
    while pos < len(s):
        ch = s[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch != "(":
            raise ParseError(f"expected '(' but found {ch!r}", line, offset + pos + 1)
        close = s.find(")", pos)
        if close < 0:
            raise ParseError("unclosed cycle", line, offset + pos + 1)
        inner = s[pos + 1 : close]
        points = []
        for m in re.finditer(r"\S+", inner):
            tok = m.group()
            col = offset + pos + 2 + m.start()
            if not tok.isdigit():
                raise ParseError(f"bad point {tok!r}", line, col)
            x = int(tok)
            if x >= degree:
                raise ParseError(f"point {x} is outside 0..{degree - 1}", line, col)
            if x in moved or x in points:
                raise ParseError(f"point {x} appears twice", line, col)
            points.append(x)
        for a, b in zip(points, points[1:] + points[:1]):
            perm[a] = b
        moved.update(points)
        pos = close + 1
    return perm


def _split_generators(body: str, start: int):
    """Split on commas outside parentheses, keeping column offsets."""
    parts, depth, begin = [], 0, start
    for i in range(start, len(body)):
        ch = body[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append((begin, body[begin:i]))
            begin = i + 1
    parts.append((begin, body[begin:]))
    return [(b, p) for b, p in parts if p.strip()]


def canonical_spec(text: str) -> str:
    """Normalized spec string used for hashing and display."""
    kind, payload = _parse(text)
    if kind == "perm":
        degree, perms = payload
        return f"perm d={degree}: " + ", ".join(",".join(map(str, p)) for p in perms)
    if kind == "builtin":
        name, params = payload
        return f"builtin: {name}({','.join(map(str, params))})" if params else f"builtin: {name}"
    return f"{kind}: " + ",".join(map(str, payload))


def spec_hash(text: str) -> str:
    return hashlib.sha256(canonical_spec(text).encode()).hexdigest()[:16]


def _parse(text: str):
    line, body = _locate(text)
    m = _HEAD.match(body)
    if not m:
        col = len(body) - len(body.lstrip()) + 1
        raise ParseError("expected one of perm, builtin, abelian, wreath", line, col)
    kind = m.group(1).lower()
    pos = m.end()
    if kind == "perm":
        dm = _DEGREE.match(body, pos)
        if not dm:
            raise ParseError("expected 'd=<degree>'", line, pos + 1)
        degree = int(dm.group(1))
        if degree < 1:
            raise ParseError("degree must be positive", line, dm.start(1) + 1)
        pos = dm.end()
    if pos >= len(body) or body[pos] != ":":
        raise ParseError("expected ':'", line, pos + 1)
    pos += 1
    if kind == "perm":
        perms = [parse_cycles(chunk, degree, line=line, offset=b) for b, chunk in _split_generators(body, pos)]
        return kind, (degree, perms)
    if kind == "builtin":
        bm = re.match(r"\s*([A-Za-z_][A-Za-z_0-9]*)\s*(?:\(([^)]*)\))?\s*$", body[pos:])
        if not bm:
            raise ParseError("expected name(params)", line, pos + 1)
        name = bm.group(1).lower()
        params = []
        if bm.group(2) and bm.group(2).strip():
            params = _int_list(body, pos + bm.start(2), line, pos + bm.end(2))
        return kind, (name, params)
    return kind, _int_list(body, pos, line)


def parse_group_spec(text: str, *, cap: int = DEFAULT_ORDER_CAP) -> GroupTable:
    """Build the group described by ``text``."""
    kind, payload = _parse(text)
    if kind == "perm":
        degree, perms = payload
        G = group_from_permutations(perms, degree=degree, cap=cap)
    elif kind == "builtin":
        name, params = payload
        G = builtin_group(name, *params, cap=cap)
    elif kind == "abelian":
        G = builtin_group("abelian", *payload, cap=cap)
    else:
        from .wreath import wreath_cyclic

        G = wreath_cyclic(payload, cap=cap)
    G.name = canonical_spec(text) if kind == "perm" else G.name
    return G


def parse_tuple(G: GroupTable, ids: str | None = None, perms: str | None = None) -> tuple[int, ...]:
    """Tuple literal from ``"3,4"`` (element ids) or ``"(0 1)|(0 1 2)"`` (permutations)."""
    if ids is not None:
        try:
            t = tuple(int(x) for x in ids.split(",") if x.strip())
        except ValueError:
            raise ParseError(f"bad tuple literal {ids!r}") from None
        if any(not 0 <= x < G.order for x in t):
            raise ParseError(f"tuple entry outside 0..{G.order - 1}")
        return t
    if perms is not None:
        if G.perms is None:
            raise ACLabError("--tuple-perm needs a permutation group")
        degree = G.perms.shape[1]
        out, offset = [], 0
        for chunk in perms.split("|"):
            out.append(G.perm_id(parse_cycles(chunk, degree, offset=offset)))
            offset += len(chunk) + 1
        return tuple(out)
    raise ValueError("no tuple given")
