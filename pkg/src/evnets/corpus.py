"""Deterministic point-set generators and a desk-scale existence search."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

import numpy as np

from ._util import digit_matrix
from .core import EVector, PointSet
from .errors import ParamError
from .netverify import enumerate_shapes, verify_net

__all__ = [
    "grid_1d", "hammersley", "faure", "digital_net",
    "random_pointset", "flip_digit", "SearchResult", "search_net",
]

# Keep exhaustive searches at desk scale: candidate points per placement.
_SEARCH_CANDIDATE_CAP = 1 << 16


def _check_bm(b: int, m: int) -> None:
    if b < 2:
        raise ParamError(f"base must be >= 2, got {b}")
    if m < 0:
        raise ParamError(f"m must be >= 0, got {m}")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def grid_1d(b: int, m: int) -> PointSet:
    """The one-dimensional grid n / b**m for n = 0, ..., b**m - 1."""
    _check_bm(b, m)
    return PointSet(b, digit_matrix(range(b ** m), m, b)[:, None, :])


def hammersley(b: int, m: int) -> PointSet:
    """Two dimensions: digit-reversed n paired with n / b**m."""
    _check_bm(b, m)
    forward = digit_matrix(range(b ** m), m, b)
    return PointSet(b, np.stack([forward[:, ::-1], forward], axis=1))


def digital_net(b: int, matrices: Sequence[np.ndarray]) -> PointSet:
    """Point set generated by one m x m matrix over Z_b per coordinate.

    Coordinate i of point n carries the digits C_i @ (digits of n, most
    significant first) mod b. The identity matrix in one dimension yields the
    plain grid; the anti-diagonal matrix yields the digit-reversed (radical
    inverse) ordering.
    """
    if not _is_prime(b):
        raise ParamError(f"digital construction needs a prime base, got {b}")
    mats = [np.asarray(c, dtype=np.int64) for c in matrices]
    if not mats:
        raise ParamError("need at least one generating matrix")
    m = mats[0].shape[0]
    for i, c in enumerate(mats):
        if c.shape != (m, m):
            raise ParamError(f"matrix {i} has shape {c.shape}, expected {(m, m)}")
        if c.size and (c.min() < 0 or c.max() >= b):
            raise ParamError(f"matrix {i} entries must lie in [0, {b})")
    nd = digit_matrix(range(b ** m), m, b)
    coords = [(nd @ c.T) % b for c in mats]
    return PointSet(b, np.stack(coords, axis=1))


def faure(b: int, m: int, s: int) -> PointSet:
    """Pascal-matrix digital construction: coordinate i uses P**i mod b.

    Needs a prime base with s <= b. One dimension reduces to a reordered
    grid; the full construction has quality u = 0 at unit resolution.
    """
    _check_bm(b, m)
    if not _is_prime(b):
        raise ParamError(f"Pascal construction needs a prime base, got {b}")
    if not 1 <= s <= b:
        raise ParamError(f"need 1 <= s <= base, got s={s}, base={b}")
    pascal = np.zeros((m, m), dtype=np.int64)
    for r in range(m):
        for c in range(r, m):
            pascal[r, c] = comb(c, r) % b
    mats = []
    acc = np.eye(m, dtype=np.int64)
    for _ in range(s):
        mats.append(acc)
        acc = (acc @ pascal) % b
    return digital_net(b, mats)


def random_pointset(b: int, m: int, s: int, seed: int) -> PointSet:
    """b**m points with independently uniform digits (seeded, reproducible)."""
    _check_bm(b, m)
    if s < 1:
        raise ParamError(f"need at least one coordinate, got s={s}")
    rng = np.random.default_rng(seed)
    return PointSet(b, rng.integers(0, b, size=(b ** m, s, m), dtype=np.int64))


def flip_digit(points: PointSet, n: int, i: int, l: int) -> PointSet:
    """Copy with digit (n, i, l) incremented by 1 modulo the base."""
    if not (0 <= n < points.count and 0 <= i < points.dim
            and 0 <= l < points.precision):
        raise IndexError(f"digit ({n}, {i}, {l}) out of range")
    digits = points.digits.copy()
    digits[n, i, l] = (digits[n, i, l] + 1) % points.base
    return PointSet(points.base, digits)


@dataclass(frozen=True)
class SearchResult:
    """Outcome of an existence search.

    ``status`` is 'found' (with a verified net), 'nonexistent' (the canonical
    search space was exhausted), or 'inconclusive' (the node limit was hit).
    """

    status: str
    net: PointSet | None
    nodes: int

    def __bool__(self) -> bool:
        return self.status == "found"


def _lex_grid_points(b: int, m: int, s: int) -> PointSet:
    """First b**m points of the full digit grid in lexicographic order."""
    return PointSet(b, digit_matrix(range(b ** m), m * s, b).reshape(b ** m, s, m))


def search_net(b: int, m: int, e: EVector | Sequence[int], s: int, u: int,
               node_limit: int | None = None) -> SearchResult:
    """Backtracking existence search for a quality-u net, desk scale only.

    Candidate points are ranked by their concatenated digit string. Two
    soundness-preserving symmetry reductions shrink the space: the box
    structure is invariant under digit-wise translation, so the first point
    can be fixed to the origin, and the property only concerns the point
    multiset, so placements are forced nondecreasing. Each placement bumps
    per-box counters for every budget-maximal shape and prunes on overflow;
    exhausting the reduced space therefore proves nonexistence. Any returned
    net is re-verified before being reported.
    """
    e = EVector.coerce(e)
    if e.s != s:
        raise ParamError(f"e-vector has {e.s} entries, expected s={s}")
    if not 0 <= u <= m:
        raise ParamError(f"need 0 <= u <= m, got u={u}, m={m}")
    _check_bm(b, m)
    if node_limit is not None and node_limit < 0:
        raise ParamError(f"node limit must be >= 0, got {node_limit}")
    if u == m:
        found = _lex_grid_points(b, m, s)
        assert verify_net(found, u, e)
        return SearchResult("found", found, 0)

    n_candidates = b ** (m * s)
    if n_candidates > _SEARCH_CANDIDATE_CAP:
        raise ParamError(f"search space of {n_candidates} candidate points exceeds "
                         f"the desk-scale cap of {_SEARCH_CANDIDATE_CAP}")
    n_points = b ** m
    shapes = enumerate_shapes(m, u, e, "maximal")
    cand_digits = digit_matrix(range(n_candidates), m * s, b).reshape(
        n_candidates, s, m)

    # box_key[c, j]: flattened box index of candidate c under shape j, with
    # per-shape offsets so one counter array serves all shapes.
    offsets = []
    caps = []
    total_boxes = 0
    for d in shapes:
        offsets.append(total_boxes)
        caps.append(b ** (m - sum(d)))
        total_boxes += b ** sum(d)
    box_key = np.zeros((n_candidates, len(shapes)), dtype=np.int64)
    for j, d in enumerate(shapes):
        key = np.zeros(n_candidates, dtype=np.int64)
        for i, di in enumerate(d):
            if di:
                powers = b ** np.arange(di - 1, -1, -1, dtype=np.int64)
                key = key * (b ** di) + cand_digits[:, i, :di] @ powers
        box_key[:, j] = key + offsets[j]
    caps_arr = np.asarray(caps, dtype=np.int64)
    counts = np.zeros(total_boxes, dtype=np.int64)

    chosen: list[int] = []
    nodes = 0
    limit_hit = False
    complete = False

    def place(c: int) -> None:
        counts[box_key[c]] += 1
        chosen.append(c)

    def unplace() -> None:
        counts[box_key[chosen.pop()]] -= 1

    def viable_from(start: int):
        mask = (counts[box_key[start:]] < caps_arr).all(axis=1)
        return iter(np.nonzero(mask)[0] + start)

    place(0)  # canonical origin; fits every cap since caps >= 1
    nodes += 1
    if node_limit is not None and nodes > node_limit:
        return SearchResult("inconclusive", None, nodes)
    # Explicit stack of candidate iterators (one frame per point past the
    # origin) so deep searches cannot hit the interpreter recursion limit.
    stack = [viable_from(0)]
    while stack:
        nxt = next(stack[-1], None)
        if nxt is None:
            stack.pop()
            if len(chosen) > len(stack):
                unplace()
            continue
        if node_limit is not None and nodes >= node_limit:
            limit_hit = True
            break
        c = int(nxt)
        nodes += 1
        place(c)
        if len(chosen) == n_points:
            complete = True
            break
        stack.append(viable_from(c))
    if complete:
        digits = cand_digits[np.asarray(chosen, dtype=np.int64)]
        found = PointSet(b, digits)
        assert verify_net(found, u, e)
        return SearchResult("found", found, nodes)
    if limit_hit:
        return SearchResult("inconclusive", None, nodes)
    return SearchResult("nonexistent", None, nodes)
