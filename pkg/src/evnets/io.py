"""Canonical text formats for point sets and mixed (ordered) arrays.

All three formats are line-oriented, UTF-8, LF-terminated. Parsing then
serializing normalizes whitespace; serializing then parsing is the identity.

NET v1 ::

    NET v1
    base <b> m <m> s <s> u <u>
    e <e1> ... <es>
    <one point per line: s digit strings of length m>

MOA v1 ::

    MOA v1
    N <N> k <k> t <t>
    l <l1> ... <lk>
    <N rows of k integers>

MOOA v1 ::

    MOOA v1
    base <b> m <m> s <s> u <u>
    e <e1> ... <es>
    beta <b1> ... <bs>
    <b**m rows of sum(beta) integers>

Digit characters are 0-9 then A-Z, so NET files support bases up to 36.
MOA/MOOA entries are decimal integers and have no such cap.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import EVector, MixedOA, MixedOOA, PointSet
from .errors import FormatError

__all__ = [
    "DIGIT_CHARS", "NetFile",
    "parse_net", "serialize_net",
    "parse_moa", "serialize_moa",
    "parse_mooa", "serialize_mooa",
    "parse_function_tuples",
]

DIGIT_CHARS = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ"
_DIGIT_VALUE = {c: v for v, c in enumerate(DIGIT_CHARS)}


@dataclass(frozen=True)
class NetFile:
    """A parsed NET file: the points plus the claimed quality parameters."""

    points: PointSet
    u: int
    e: EVector


def _lines(text: str) -> list[str]:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    return lines


def _need_line(lines: list[str], idx: int, what: str) -> str:
    if idx >= len(lines):
        raise FormatError(f"missing {what}", line=idx + 1)
    return lines[idx]


def _int_token(tok: str, what: str, line: int) -> int:
    try:
        return int(tok, 10)
    except ValueError:
        raise FormatError(f"{what} must be an integer, got {tok!r}", line=line) from None


def _keyword_header(line: str, keys: tuple[str, ...], lineno: int) -> list[int]:
    toks = line.split()
    if len(toks) != 2 * len(keys) or tuple(toks[0::2]) != keys:
        raise FormatError(
            f"expected header '{' '.join(k + ' <' + k + '>' for k in keys)}', got {line!r}",
            line=lineno)
    return [_int_token(toks[2 * j + 1], keys[j], lineno) for j in range(len(keys))]


def _vector_line(line: str, key: str, count: int, lineno: int) -> list[int]:
    toks = line.split()
    if not toks or toks[0] != key:
        raise FormatError(f"expected '{key} ...' line, got {line!r}", line=lineno)
    if len(toks) != count + 1:
        raise FormatError(f"expected {count} values after '{key}', got {len(toks) - 1}",
                          line=lineno)
    return [_int_token(t, key, lineno) for t in toks[1:]]


def _parse_digit_string(tok: str, base: int, m: int, lineno: int) -> list[int]:
    if len(tok) != m:
        raise FormatError(f"digit string {tok!r} has length {len(tok)}, expected {m}",
                          line=lineno)
    out = []
    for c in tok:
        v = _DIGIT_VALUE.get(c)
        if v is None or v >= base:
            raise FormatError(f"character {c!r} is not a base-{base} digit", line=lineno)
        out.append(v)
    return out


def parse_net(text: str) -> NetFile:
    """Parse a NET v1 file. The number of points is the number of body lines."""
    lines = _lines(text)
    if _need_line(lines, 0, "NET v1 magic line") != "NET v1":
        raise FormatError(f"expected 'NET v1', got {lines[0]!r}", line=1)
    b, m, s, u = _keyword_header(_need_line(lines, 1, "parameter header"),
                                 ("base", "m", "s", "u"), 2)
    if b < 2:
        raise FormatError(f"base must be >= 2, got {b}", line=2)
    if b > 36:
        raise FormatError(f"base {b} exceeds 36, not representable with digit characters",
                          line=2)
    if m < 0 or s < 1 or not 0 <= u <= m:
        raise FormatError(f"invalid parameters base={b} m={m} s={s} u={u}", line=2)
    evals = _vector_line(_need_line(lines, 2, "e-vector line"), "e", s, 3)
    if any(v < 1 for v in evals):
        raise FormatError(f"e-vector entries must be >= 1, got {evals}", line=3)
    body = lines[3:]
    pts = np.zeros((len(body), s, m), dtype=np.int64)
    for r, raw in enumerate(body):
        lineno = 4 + r
        toks = raw.split()
        if m == 0:
            if toks:
                raise FormatError(f"expected blank point line for m=0, got {raw!r}",
                                  line=lineno)
            continue
        if len(toks) != s:
            raise FormatError(f"expected {s} digit strings, got {len(toks)}", line=lineno)
        for i, tok in enumerate(toks):
            pts[r, i, :] = _parse_digit_string(tok, b, m, lineno)
    return NetFile(PointSet(b, pts), u, EVector(tuple(evals)))


def serialize_net(points: PointSet, u: int, e: EVector | tuple[int, ...]) -> str:
    """Serialize a point set with its claimed (u, e) to canonical NET v1 text."""
    e = EVector.coerce(e)
    b, m, s = points.base, points.precision, points.dim
    if b > 36:
        raise FormatError(f"base {b} exceeds 36, not representable with digit characters")
    if e.s != s:
        raise FormatError(f"e-vector has {e.s} entries, point set has {s} coordinates")
    if not 0 <= u <= m:
        raise FormatError(f"claimed u={u} outside [0, {m}]")
    out = ["NET v1", f"base {b} m {m} s {s} u {u}", "e " + " ".join(str(v) for v in e)]
    for n in range(points.count):
        out.append(" ".join(
            "".join(DIGIT_CHARS[d] for d in points.digits[n, i, :]) for i in range(s)))
    return "\n".join(out) + "\n"


def _parse_int_rows(body: list[str], widths: list[int], n_rows: int, first_lineno: int,
                    what: str) -> np.ndarray:
    if len(body) != n_rows:
        raise FormatError(f"expected {n_rows} {what} rows, got {len(body)}",
                          line=first_lineno + min(len(body), n_rows))
    rows = np.zeros((n_rows, len(widths)), dtype=np.int64)
    for r, raw in enumerate(body):
        lineno = first_lineno + r
        toks = raw.split()
        if len(toks) != len(widths):
            raise FormatError(f"expected {len(widths)} entries, got {len(toks)}",
                              line=lineno)
        for j, tok in enumerate(toks):
            v = _int_token(tok, "entry", lineno)
            if not 0 <= v < widths[j]:
                raise FormatError(f"entry {v} outside [0, {widths[j]}) in column {j}",
                                  line=lineno)
            rows[r, j] = v
    return rows


def parse_moa(text: str) -> MixedOA:
    """Parse a MOA v1 file; the header's t becomes the claimed strength."""
    lines = _lines(text)
    if _need_line(lines, 0, "MOA v1 magic line") != "MOA v1":
        raise FormatError(f"expected 'MOA v1', got {lines[0]!r}", line=1)
    n, k, t = _keyword_header(_need_line(lines, 1, "parameter header"), ("N", "k", "t"), 2)
    if n < 1 or k < 1 or not 0 <= t <= k:
        raise FormatError(f"invalid parameters N={n} k={k} t={t}", line=2)
    alphabets = _vector_line(_need_line(lines, 2, "alphabet line"), "l", k, 3)
    if any(l < 2 for l in alphabets):
        raise FormatError(f"alphabet sizes must be >= 2, got {alphabets}", line=3)
    rows = _parse_int_rows(lines[3:], alphabets, n, 4, "array")
    return MixedOA(tuple(alphabets), rows, strength=t)


def serialize_moa(array: MixedOA) -> str:
    """Serialize a mixed array to canonical MOA v1 text."""
    out = [
        "MOA v1",
        f"N {array.runs} k {array.k} t {array.strength}",
        "l " + " ".join(str(l) for l in array.alphabets),
    ]
    for r in range(array.runs):
        out.append(" ".join(str(v) for v in array.rows[r]))
    return "\n".join(out) + "\n"


def parse_mooa(text: str) -> MixedOOA:
    """Parse a MOOA v1 file (exactly base**m body rows)."""
    lines = _lines(text)
    if _need_line(lines, 0, "MOOA v1 magic line") != "MOOA v1":
        raise FormatError(f"expected 'MOOA v1', got {lines[0]!r}", line=1)
    b, m, s, u = _keyword_header(_need_line(lines, 1, "parameter header"),
                                 ("base", "m", "s", "u"), 2)
    if b < 2 or m < 0 or s < 1 or not 0 <= u <= m:
        raise FormatError(f"invalid parameters base={b} m={m} s={s} u={u}", line=2)
    evals = _vector_line(_need_line(lines, 2, "e-vector line"), "e", s, 3)
    if any(v < 1 for v in evals):
        raise FormatError(f"e-vector entries must be >= 1, got {evals}", line=3)
    beta = _vector_line(_need_line(lines, 3, "beta line"), "beta", s, 4)
    for i, (bi, ei) in enumerate(zip(beta, evals)):
        cap = (m - u) // ei
        if not 0 <= bi <= cap:
            raise FormatError(f"beta[{i}]={bi} outside [0, {cap}] allowed by (m-u)/e_i",
                              line=4)
    widths = [b ** ei for bi, ei in zip(beta, evals) for _ in range(bi)]
    if not widths:
        # Zero columns: rows parse as blank lines.
        body = lines[4:]
        n_rows = b ** m
        if len(body) != n_rows:
            raise FormatError(f"expected {n_rows} array rows, got {len(body)}",
                              line=5 + min(len(body), n_rows))
        for r, raw in enumerate(body):
            if raw.split():
                raise FormatError(f"expected blank row for zero columns, got {raw!r}",
                                  line=5 + r)
        rows = np.zeros((n_rows, 0), dtype=np.int64)
    else:
        rows = _parse_int_rows(lines[4:], widths, b ** m, 5, "array")
    return MixedOOA(b, m, u, EVector(tuple(evals)), tuple(beta), rows)


def serialize_mooa(array: MixedOOA) -> str:
    """Serialize an ordered mixed array to canonical MOOA v1 text."""
    out = [
        "MOOA v1",
        f"base {array.base} m {array.m} s {array.dim} u {array.u}",
        "e " + " ".join(str(v) for v in array.e),
        "beta " + " ".join(str(v) for v in array.beta),
    ]
    for r in range(array.runs):
        out.append(" ".join(str(v) for v in array.rows[r]))
    return "\n".join(out) + "\n"


def parse_function_tuples(text: str, array: MixedOOA) -> list:
    """Parse residue-function tuples, one per line, in stored column order.

    Each line holds sum(beta) integers; entry (i, rho) must lie in
    [0, base**e_i). Returns :class:`~evnets.dualcert.FunctionTuple` objects
    bound to ``array``'s base and e-vector.
    """
    from .dualcert import FunctionTuple

    widths = [array.base ** ei for bi, ei in zip(array.beta, array.e) for _ in range(bi)]
    out = []
    for r, raw in enumerate(_lines(text)):
        lineno = r + 1
        toks = raw.split()
        if len(toks) != len(widths):
            raise FormatError(f"expected {len(widths)} residues, got {len(toks)}",
                              line=lineno)
        vals = []
        for j, tok in enumerate(toks):
            v = _int_token(tok, "residue", lineno)
            if not 0 <= v < widths[j]:
                raise FormatError(f"residue {v} outside [0, {widths[j]}) in column {j}",
                                  line=lineno)
            vals.append(v)
        blocks = []
        pos = 0
        for bi in array.beta:
            blocks.append(tuple(vals[pos : pos + bi]))
            pos += bi
        out.append(FunctionTuple(array.base, array.e, tuple(blocks)))
    return out
