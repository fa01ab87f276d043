"""Digit-exact data model: point sets, e-vectors, mixed arrays, verdicts.

Points are stored as base-b digit tensors, never as floats, so every
verification below is exact integer counting. ``digits[n, i, l]`` is the
coefficient of b**-(l+1) in coordinate i of point n (most significant digit
first).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np

from .errors import ParamError, PrecisionError

__all__ = ["EVector", "PointSet", "MixedOA", "MixedOOA", "Verdict"]


def _readonly_int_array(a, shape_name: str, ndim: int) -> np.ndarray:
    arr = np.ascontiguousarray(a, dtype=np.int64)
    if arr.ndim != ndim:
        raise ParamError(f"{shape_name} must be {ndim}-dimensional, got shape {arr.shape}")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class EVector:
    """Per-coordinate resolution multiples e = (e_1, ..., e_s), every entry >= 1.

    Coordinate i only admits digit depths that are multiples of e_i. The
    classical single-resolution setting is e = (1, ..., 1).
    """

    e: tuple[int, ...]

    def __post_init__(self):
        e = tuple(int(v) for v in self.e)
        if len(e) == 0:
            raise ParamError("e-vector must have at least one entry")
        if any(v < 1 for v in e):
            raise ParamError(f"e-vector entries must be >= 1, got {e}")
        object.__setattr__(self, "e", e)

    @classmethod
    def coerce(cls, e: "EVector | Sequence[int]") -> "EVector":
        return e if isinstance(e, EVector) else cls(tuple(e))

    @property
    def s(self) -> int:
        return len(self.e)

    @property
    def is_sorted(self) -> bool:
        """True when e_1 <= ... <= e_s; bound formulas require sorted input."""
        return all(a <= b for a, b in zip(self.e, self.e[1:]))

    def sorted(self) -> tuple["EVector", tuple[int, ...]]:
        """Sorted copy plus the coordinate permutation producing it (stable)."""
        perm = tuple(sorted(range(len(self.e)), key=lambda i: (self.e[i], i)))
        return EVector(tuple(self.e[i] for i in perm)), perm

    def __iter__(self):
        return iter(self.e)

    def __len__(self) -> int:
        return len(self.e)

    def __getitem__(self, i):
        return self.e[i]


@dataclass(frozen=True, eq=False)
class PointSet:
    """N points of [0,1)^s held as an (N, s, m) tensor of base-b digits."""

    base: int
    digits: np.ndarray

    def __post_init__(self):
        if int(self.base) < 2:
            raise ParamError(f"base must be >= 2, got {self.base}")
        object.__setattr__(self, "base", int(self.base))
        arr = _readonly_int_array(self.digits, "digits", 3)
        if arr.shape[1] < 1:
            raise ParamError("point sets need at least one coordinate")
        if arr.size and (arr.min() < 0 or arr.max() >= self.base):
            raise ParamError(f"digits must lie in [0, {self.base}), got range "
                             f"[{arr.min()}, {arr.max()}]")
        object.__setattr__(self, "digits", arr)

    @property
    def count(self) -> int:
        """Number of points N."""
        return self.digits.shape[0]

    @property
    def dim(self) -> int:
        """Number of coordinates s."""
        return self.digits.shape[1]

    @property
    def precision(self) -> int:
        """Digits carried per coordinate."""
        return self.digits.shape[2]

    def truncate(self, precision: int) -> "PointSet":
        """Keep only the first ``precision`` digits of every coordinate."""
        if precision < 0:
            raise ParamError(f"precision must be >= 0, got {precision}")
        if precision > self.precision:
            raise PrecisionError(
                f"cannot truncate to {precision} digits, only {self.precision} carried")
        if precision == self.precision:
            return self
        return PointSet(self.base, self.digits[:, :, :precision])

    def coordinate_value(self, n: int, i: int) -> Fraction:
        """Exact value of coordinate i of point n, a rational with denominator b**m."""
        if not (0 <= n < self.count and 0 <= i < self.dim):
            raise IndexError(f"point {n}, coordinate {i} out of range "
                             f"({self.count} points, {self.dim} coordinates)")
        num = 0
        for d in self.digits[n, i, :]:
            num = num * self.base + int(d)
        return Fraction(num, self.base ** self.precision)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PointSet):
            return NotImplemented
        return (self.base == other.base
                and self.digits.shape == other.digits.shape
                and bool(np.array_equal(self.digits, other.digits)))

    def __repr__(self) -> str:
        return (f"PointSet(base={self.base}, count={self.count}, "
                f"dim={self.dim}, precision={self.precision})")


@dataclass(frozen=True, eq=False)
class MixedOA:
    """N x k integer array; column j takes values in {0, ..., alphabets[j]-1}.

    ``strength`` is the claimed strength carried alongside the data (0 when
    nothing has been verified); checking it is a separate operation.
    """

    alphabets: tuple[int, ...]
    rows: np.ndarray
    strength: int = 0

    def __post_init__(self):
        alph = tuple(int(l) for l in self.alphabets)
        if len(alph) == 0:
            raise ParamError("mixed arrays need at least one column")
        if any(l < 2 for l in alph):
            raise ParamError(f"alphabet sizes must be >= 2, got {alph}")
        object.__setattr__(self, "alphabets", alph)
        arr = _readonly_int_array(self.rows, "rows", 2)
        if arr.shape[0] < 1:
            raise ParamError("mixed arrays need at least one row")
        if arr.shape[1] != len(alph):
            raise ParamError(f"rows have {arr.shape[1]} columns, expected {len(alph)}")
        for j, l in enumerate(alph):
            col = arr[:, j]
            if col.min() < 0 or col.max() >= l:
                raise ParamError(f"column {j} must lie in [0, {l})")
        object.__setattr__(self, "rows", arr)
        st = int(self.strength)
        if not 0 <= st <= len(alph):
            raise ParamError(f"claimed strength must lie in [0, {len(alph)}], got {st}")
        object.__setattr__(self, "strength", st)

    @property
    def runs(self) -> int:
        return self.rows.shape[0]

    @property
    def k(self) -> int:
        return self.rows.shape[1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, MixedOA):
            return NotImplemented
        return (self.alphabets == other.alphabets
                and self.strength == other.strength
                and bool(np.array_equal(self.rows, other.rows)))

    def __repr__(self) -> str:
        return (f"MixedOA(runs={self.runs}, alphabets={self.alphabets}, "
                f"strength={self.strength})")


@dataclass(frozen=True, eq=False)
class MixedOOA:
    """Ordered mixed array: b**m rows, beta_i columns per coordinate block.

    Column (i, rho) takes values in {0, ..., b**e_i - 1} and is stored in
    coordinate-major order (all columns of block 0 first). The claimed
    strength is m - u. ``beta_i = 0`` blocks carry no columns, which keeps
    strength-0 arrays (u = m) representable.
    """

    base: int
    m: int
    u: int
    e: EVector
    beta: tuple[int, ...]
    rows: np.ndarray

    def __post_init__(self):
        if int(self.base) < 2:
            raise ParamError(f"base must be >= 2, got {self.base}")
        object.__setattr__(self, "base", int(self.base))
        object.__setattr__(self, "m", int(self.m))
        object.__setattr__(self, "u", int(self.u))
        if self.m < 0 or not 0 <= self.u <= self.m:
            raise ParamError(f"need 0 <= u <= m, got u={self.u}, m={self.m}")
        e = EVector.coerce(self.e)
        object.__setattr__(self, "e", e)
        beta = tuple(int(v) for v in self.beta)
        if len(beta) != e.s:
            raise ParamError(f"beta has {len(beta)} entries, e-vector has {e.s}")
        for i, (bi, ei) in enumerate(zip(beta, e)):
            cap = (self.m - self.u) // ei
            if not 0 <= bi <= cap:
                raise ParamError(
                    f"beta[{i}]={bi} outside [0, {cap}] allowed by (m-u)/e_i")
        object.__setattr__(self, "beta", beta)
        arr = _readonly_int_array(self.rows, "rows", 2)
        if arr.shape[0] != self.base ** self.m:
            raise ParamError(f"expected base**m = {self.base ** self.m} rows, "
                             f"got {arr.shape[0]}")
        if arr.shape[1] != sum(beta):
            raise ParamError(f"expected sum(beta) = {sum(beta)} columns, got {arr.shape[1]}")
        col = 0
        for i, (bi, ei) in enumerate(zip(beta, e)):
            alph = self.base ** ei
            for _ in range(bi):
                c = arr[:, col]
                if c.size and (c.min() < 0 or c.max() >= alph):
                    raise ParamError(f"column {col} (block {i}) must lie in [0, {alph})")
                col += 1
        object.__setattr__(self, "rows", arr)

    @property
    def runs(self) -> int:
        return self.rows.shape[0]

    @property
    def dim(self) -> int:
        return self.e.s

    def block_start(self, i: int) -> int:
        """Index of the first stored column of coordinate block i."""
        return sum(self.beta[:i])

    def column(self, i: int, rho: int) -> np.ndarray:
        """Stored column rho (0-based) of coordinate block i."""
        if not (0 <= i < self.dim and 0 <= rho < self.beta[i]):
            raise IndexError(f"block {i}, column {rho} out of range")
        return self.rows[:, self.block_start(i) + rho]

    def __eq__(self, other) -> bool:
        if not isinstance(other, MixedOOA):
            return NotImplemented
        return (self.base == other.base and self.m == other.m and self.u == other.u
                and self.e == other.e and self.beta == other.beta
                and bool(np.array_equal(self.rows, other.rows)))

    def __repr__(self) -> str:
        return (f"MixedOOA(base={self.base}, m={self.m}, u={self.u}, "
                f"e={self.e.e}, beta={self.beta})")


@dataclass(frozen=True)
class Verdict:
    """Outcome of an exhaustive check: pass, or fail with a witness record.

    The witness is present exactly when the check failed; it names the first
    violation in the check's deterministic enumeration order.
    """

    passed: bool
    witness: Mapping | None = None

    def __post_init__(self):
        if self.passed and self.witness is not None:
            raise ParamError("passing verdicts carry no witness")
        if not self.passed and self.witness is None:
            raise ParamError("failing verdicts must carry a witness")

    def __bool__(self) -> bool:
        return self.passed
