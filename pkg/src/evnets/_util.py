"""Small internal helpers: ordered parallel maps and mixed-radix ranking."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Iterator, Sequence, TypeVar

import numpy as np

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(fn: Callable[[T], R], items: Sequence[T], jobs: int = 1) -> Iterator[R]:
    """Apply ``fn`` to ``items``, yielding results in item order.

    ``jobs`` caps the number of worker threads; the result order (and hence
    any first-failure selection done by the caller) never depends on it.
    """
    if jobs is None:
        jobs = 1
    if jobs <= 1 or len(items) <= 1:
        return map(fn, items)
    with ThreadPoolExecutor(max_workers=min(jobs, len(items))) as ex:
        return iter(list(ex.map(fn, items)))


def block_values(digits: np.ndarray, coord: int, start: int, width: int, base: int) -> np.ndarray:
    """Integer encoded by digit positions [start, start+width) of one coordinate.

    ``digits`` has shape (N, s, m) with the most significant digit first, so the
    result for width w lies in {0, ..., base**w - 1}.
    """
    if width == 0:
        return np.zeros(digits.shape[0], dtype=np.int64)
    powers = base ** np.arange(width - 1, -1, -1, dtype=np.int64)
    return digits[:, coord, start : start + width] @ powers


def rank_rows(columns: Sequence[np.ndarray], radices: Sequence[int]) -> np.ndarray:
    """Mixed-radix rank of each row, first column most significant."""
    n = columns[0].shape[0] if columns else 0
    keys = np.zeros(n, dtype=np.int64)
    for col, radix in zip(columns, radices):
        keys = keys * int(radix) + col
    return keys


def unrank(rank: int, radices: Sequence[int]) -> list[int]:
    """Inverse of :func:`rank_rows` for a single rank value."""
    out = [0] * len(radices)
    for j in range(len(radices) - 1, -1, -1):
        rank, out[j] = divmod(rank, int(radices[j]))
    return out


def digit_matrix(values: Iterable[int], width: int, base: int) -> np.ndarray:
    """Base-``base`` digit rows (most significant first) for each value."""
    vals = np.asarray(list(values), dtype=np.int64)
    out = np.empty((vals.shape[0], width), dtype=np.int64)
    for j in range(width - 1, -1, -1):
        out[:, j] = vals % base
        vals = vals // base
    return out
