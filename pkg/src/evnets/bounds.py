"""Necessary-condition calculators: Rao-type bounds and sequence conditions.

Everything here is exact integer arithmetic (Python integers, no floats), so
the verdicts are decisions, not estimates. A violated condition proves the
corresponding design cannot exist; a satisfied report is necessary evidence
only, never a construction.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from math import comb, lcm
from typing import Literal, Sequence

from .core import EVector
from .errors import ParamError

__all__ = [
    "Signature", "Condition", "FeasibilityReport",
    "rao_rhs", "rao_feasible", "net_rao_check",
    "seq_kr_check", "seq_lcm_check", "feasibility_report",
]

Pairs = Sequence[tuple[int, int]]

Parity = Literal["even", "odd"]


@dataclass(frozen=True)
class Signature:
    """Canonical alphabet signature: (size, multiplicity) pairs, sizes strictly
    increasing."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple((int(l), int(k)) for l, k in self.pairs)
        if any(l < 2 for l, _ in pairs):
            raise ParamError(f"alphabet sizes must be >= 2, got {pairs}")
        if any(k < 1 for _, k in pairs):
            raise ParamError(f"multiplicities must be >= 1, got {pairs}")
        if any(a >= b for (a, _), (b, _) in zip(pairs, pairs[1:])):
            raise ParamError(f"sizes must be strictly increasing, got {pairs}")
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def from_alphabets(cls, alphabets: Sequence[int]) -> "Signature":
        counts = Counter(int(l) for l in alphabets)
        return cls(tuple((l, counts[l]) for l in sorted(counts)))

    @property
    def columns(self) -> int:
        return sum(k for _, k in self.pairs)

    def __iter__(self):
        return iter(self.pairs)


def _as_pairs(sig: "Signature | Pairs") -> list[tuple[int, int]]:
    pairs = [(int(l), int(k)) for l, k in (sig.pairs if isinstance(sig, Signature) else sig)]
    if any(l < 2 for l, _ in pairs) or any(k < 1 for _, k in pairs):
        raise ParamError(f"need sizes >= 2 and multiplicities >= 1, got {pairs}")
    if any(a > b for (a, _), (b, _) in zip(pairs, pairs[1:])):
        raise ParamError(f"sizes must be nondecreasing, got {pairs}")
    return pairs


def _weighted_sum(ks: Sequence[int], ys: Sequence[int], j: int) -> int:
    """Sum over (r_1, ..., r_v) with sum r_h = j of prod C(k_h, r_h) * y_h**r_h."""
    total = 0
    v = len(ks)

    def rec(h: int, remaining: int, acc: int) -> None:
        nonlocal total
        if h == v:
            if remaining == 0:
                total += acc
            return
        for r in range(remaining + 1):
            c = comb(ks[h], r) if r <= ks[h] else 0
            if c:
                rec(h + 1, remaining - r, acc * c * ys[h] ** r)

    rec(0, j, 1)
    return total


def rao_rhs(sig: "Signature | Pairs", t: int) -> int:
    """Minimum admissible row count for strength t over the given signature.

    For t = 2g the bound is the number of column tuples of weight at most g
    counted with alphabet weights (l - 1); for t = 2g + 1 an extra term runs
    over weight-g tuples avoiding one column of the largest alphabet, scaled
    by (l_v - 1). Sizes must be supplied in nondecreasing order so that the
    odd-case correction attaches to the largest alphabet. Exact integers.
    """
    pairs = _as_pairs(sig)
    if t < 0:
        raise ParamError(f"strength must be >= 0, got {t}")
    g, odd = divmod(t, 2)
    ls = [l for l, _ in pairs]
    ks = [k for _, k in pairs]
    ys = [l - 1 for l in ls]
    total = sum(_weighted_sum(ks, ys, j) for j in range(g + 1))
    if odd:
        if not pairs:
            raise ParamError("odd strength needs at least one column")
        ks_reduced = ks[:-1] + [ks[-1] - 1]
        total += ys[-1] * _weighted_sum(ks_reduced, ys, g)
    return total


def rao_feasible(n_rows: int, sig: "Signature | Pairs", t: int) -> bool:
    """True when the row count clears the strength-t lower bound."""
    if n_rows < 1:
        raise ParamError(f"row count must be >= 1, got {n_rows}")
    return n_rows >= rao_rhs(sig, t)


def _esym_prefix(ys: Sequence[int], gmax: int) -> list[int]:
    """Elementary symmetric sums e_0, ..., e_gmax of ys (coefficients of
    prod (1 + y*X) up to degree gmax)."""
    coeffs = [1] + [0] * gmax
    count = 0
    for y in ys:
        count += 1
        for j in range(min(count, gmax), 0, -1):
            coeffs[j] += y * coeffs[j - 1]
    return coeffs


@dataclass(frozen=True)
class Condition:
    """One evaluated necessary condition.

    ``satisfied`` is true whenever the condition is inapplicable (its
    hypothesis fails, so it constrains nothing); lhs/rhs are reported either
    way for inspection.
    """

    name: str
    applicable: bool
    satisfied: bool
    lhs: int
    rhs: int
    detail: dict | None = None

    def to_json(self) -> dict:
        out = {
            "condition": self.name,
            "applicable": self.applicable,
            "satisfied": self.satisfied,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
        }
        if self.detail is not None:
            out["detail"] = {key: str(v) if isinstance(v, int) else v
                             for key, v in self.detail.items()}
        return out


def net_rao_check(b: int, m: int, e: EVector | Sequence[int], g: int,
                  parity: Parity = "even") -> Condition:
    """Row-count bound specialized to net parameters with alphabet sizes b**e_i.

    The even check (strength 2g) applies when m covers the 2g largest entries
    of e; it requires

        sum_{j=1..g} sum_{i_1<...<i_j} prod (b**e_i - 1)  <=  b**m - 1.

    The odd check (strength 2g + 1) applies when m covers the 2g + 1 largest
    entries and adds (b**e_s - 1) times the weight-g sum over the first s - 1
    coordinates to the left-hand side. Requires e sorted ascending.
    """
    e = EVector.coerce(e)
    if b < 2:
        raise ParamError(f"base must be >= 2, got {b}")
    if m < 0:
        raise ParamError(f"m must be >= 0, got {m}")
    if not e.is_sorted:
        raise ParamError(f"e-vector must be sorted ascending, got {e.e}")
    s = e.s
    ys = [b ** ei - 1 for ei in e]
    if parity == "even":
        if not 1 <= g <= s // 2:
            raise ParamError(f"even check needs 1 <= g <= s/2, got g={g}, s={s}")
        threshold = sum(e.e[s - 2 * g :])
        esym = _esym_prefix(ys, g)
        lhs = sum(esym[1 : g + 1])
    elif parity == "odd":
        if not 1 <= g <= (s - 1) // 2:
            raise ParamError(f"odd check needs 1 <= g <= (s-1)/2, got g={g}, s={s}")
        threshold = sum(e.e[s - (2 * g + 1) :])
        esym = _esym_prefix(ys, g)
        lhs = sum(esym[1 : g + 1]) + ys[-1] * _esym_prefix(ys[:-1], g)[g]
    else:
        raise ParamError(f"parity must be 'even' or 'odd', got {parity!r}")
    rhs = b ** m - 1
    applicable = m >= threshold
    return Condition(
        name=f"rao-{parity}-g{g}",
        applicable=applicable,
        satisfied=(not applicable) or lhs <= rhs,
        lhs=lhs,
        rhs=rhs,
        detail={"m_threshold": threshold},
    )


def seq_kr_check(b: int, e: EVector | Sequence[int]) -> list[Condition]:
    """Per-resolution coordinate budget: at most b**r coordinates may share
    the entry value r."""
    e = EVector.coerce(e)
    if b < 2:
        raise ParamError(f"base must be >= 2, got {b}")
    counts = Counter(e.e)
    out = []
    for r in sorted(counts):
        k = counts[r]
        out.append(Condition(
            name=f"kr-r{r}",
            applicable=True,
            satisfied=k <= b ** r,
            lhs=k,
            rhs=b ** r,
            detail={"value": r, "multiplicity": k},
        ))
    return out


def seq_lcm_check(b: int, e: EVector | Sequence[int],
                  dominance_filter: bool = False) -> list[Condition]:
    """Joint coordinate budget over value subsets.

    For every nonempty subset {r_1, ..., r_w} of distinct e-values with
    L = lcm(r_1, ..., r_w), the coordinates carrying those values must number
    at most b**L. Singleton subsets reproduce :func:`seq_kr_check`. With
    ``dominance_filter`` subsets implied by a superset with the same lcm are
    dropped (off by default so every subset stays auditable).
    """
    e = EVector.coerce(e)
    if b < 2:
        raise ParamError(f"base must be >= 2, got {b}")
    counts = Counter(e.e)
    values = sorted(counts)
    subsets = [sub for w in range(1, len(values) + 1)
               for sub in itertools.combinations(values, w)]
    if dominance_filter:
        kept = []
        for sub in subsets:
            lsub = lcm(*sub)
            implied = any(set(sub) < set(other) and lcm(*other) == lsub
                          for other in subsets)
            if not implied:
                kept.append(sub)
        subsets = kept
    out = []
    for sub in subsets:
        big_l = lcm(*sub)
        k = sum(counts[r] for r in sub)
        out.append(Condition(
            name="lcm-{" + ",".join(str(r) for r in sub) + "}",
            applicable=True,
            satisfied=k <= b ** big_l,
            lhs=k,
            rhs=b ** big_l,
            detail={"values": list(sub), "lcm": big_l},
        ))
    return out


@dataclass(frozen=True)
class FeasibilityReport:
    """All necessary conditions evaluated for one parameter tuple."""

    base: int
    m: int
    e: tuple[int, ...]
    target: str
    conditions: tuple[Condition, ...]

    @property
    def feasible(self) -> bool:
        """False exactly when some applicable condition is violated."""
        return all(c.satisfied for c in self.conditions)

    @property
    def violations(self) -> tuple[Condition, ...]:
        return tuple(c for c in self.conditions if not c.satisfied)

    def to_json(self) -> dict:
        return {
            "base": self.base,
            "m": self.m,
            "e": list(self.e),
            "target": self.target,
            "feasible": self.feasible,
            "conditions": [c.to_json() for c in self.conditions],
        }


def feasibility_report(b: int, m: int, e: EVector | Sequence[int],
                       target: Literal["net", "sequence"] = "net") -> FeasibilityReport:
    """Evaluate every applicable necessary condition for quality-0 parameters.

    target='net' runs the row-count checks for all valid g and both parities
    (none exist for s = 1, so the report is vacuously feasible there).
    target='sequence' adds the per-resolution and lcm coordinate budgets; the
    net checks still run at the given m because every sequence yields nets of
    that order.
    """
    e = EVector.coerce(e)
    if target not in ("net", "sequence"):
        raise ParamError(f"target must be 'net' or 'sequence', got {target!r}")
    e_sorted, _ = e.sorted()
    s = e_sorted.s
    conditions: list[Condition] = []
    for g in range(1, s // 2 + 1):
        conditions.append(net_rao_check(b, m, e_sorted, g, "even"))
    for g in range(1, (s - 1) // 2 + 1):
        conditions.append(net_rao_check(b, m, e_sorted, g, "odd"))
    if target == "sequence":
        conditions.extend(seq_kr_check(b, e_sorted))
        # Singletons are re-reported inside the lcm family by design: the
        # kr-* entries give the per-value view, the lcm-* entries the joint one.
        conditions.extend(c for c in seq_lcm_check(b, e_sorted)
                          if len(c.detail["values"]) > 1)
    return FeasibilityReport(b, m, tuple(e_sorted.e), target, tuple(conditions))
