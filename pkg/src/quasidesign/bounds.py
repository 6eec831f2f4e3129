"""Lower bounds on the degree of recursive differentiability from PMD existence.

A ``(q, k, 1)``-PMD gives a recursively ``(k-3)``-differentiable quasigroup
of order ``q``, hence ``v^r(2, q) >= k``. The existence results for
``k = 4..7`` are stored as data files (residue classes plus exceptions).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

from . import data, formats

RULE_SIZES = (4, 5, 6, 7)
# orders with no pair of orthogonal Latin squares
NO_DIFFERENTIABLE = frozenset({2, 6})


@dataclass(frozen=True)
class BoundRule:
    k: int
    modulus: int
    residues: frozenset[int]
    excluded: frozenset[int] = frozenset()
    # (residue, lo, hi): orders in [lo, hi] of that residue class are excluded
    excluded_ranges: tuple[tuple[int, int, int], ...] = ()

    def applies(self, q: int) -> bool:
        if q < self.k or q % self.modulus not in self.residues or q in self.excluded:
            return False
        r = q % self.modulus
        return not any(r == cls and lo <= q <= hi for cls, lo, hi in self.excluded_ranges)

    @classmethod
    def from_text(cls, k: int, text: str) -> "BoundRule":
        modulus, residues, excluded, ranges = None, set(), set(), []
        for line in formats.content_lines(text):
            key, *vals = line.split()
            nums = [int(x) for x in vals]
            if key == "modulus":
                modulus = nums[0]
            elif key == "residues":
                residues.update(nums)
            elif key == "exclude":
                excluded.update(nums)
            elif key == "exclude_in":
                r, *vs = nums
                if any(x % modulus != r for x in vs):
                    raise ValueError(f"exceptions for k={k}: value outside residue class {r}")
                excluded.update(vs)
            elif key == "range":
                ranges.append((nums[0], nums[1], nums[2]))
            else:
                raise ValueError(f"unknown key {key!r} in exceptions for k={k}")
        if modulus is None:
            raise ValueError(f"exceptions for k={k} have no modulus")
        return cls(k, modulus, frozenset(residues), frozenset(excluded), tuple(ranges))


@lru_cache(maxsize=None)
def bound_rules() -> tuple[BoundRule, ...]:
    return tuple(BoundRule.from_text(k, data.load(f"exceptions_k{k}.txt")) for k in RULE_SIZES)


@dataclass(frozen=True)
class DegreeBound:
    degree: int
    k: int | None
    justification: str

    def __str__(self):
        return f"{self.degree} ({self.justification})"


def degree_lower_bound(q: int) -> DegreeBound:
    """Best degree guaranteed by a known ``(q, k, 1)``-PMD, ``k`` in 4..7."""
    if q < 1:
        raise ValueError(f"order must be positive, got {q}")
    best = None
    for rule in bound_rules():
        if rule.applies(q) and (best is None or rule.k > best.k):
            best = rule
    if best is not None:
        return DegreeBound(best.k - 3, best.k, f"via k={best.k} PMD rule")
    if q in NO_DIFFERENTIABLE:
        return DegreeBound(0, None, "quasigroup only; no recursively differentiable quasigroup exists")
    return DegreeBound(0, None, "quasigroup existence only")


# -- reference table ---------------------------------------------------------------

@dataclass(frozen=True)
class TableCell:
    q: int
    value: float
    old: float | None = None

    @property
    def improved(self) -> bool:
        return self.old is not None


def _cell_value(token: str) -> float:
    return math.inf if token == "inf" else int(token)


@lru_cache(maxsize=None)
def table1() -> dict[int, TableCell]:
    cells = {}
    for line in formats.content_lines(data.load("table1.txt")):
        label, *tokens = line.split()
        for col, token in enumerate(tokens):
            q = int(label) + col or 100
            new, _, old = token.partition("/")
            cells[q] = TableCell(q, _cell_value(new), _cell_value(old) if old else None)
    return cells


@dataclass(frozen=True)
class BoundsTableEntry:
    q: int
    computed: int
    justification: str
    reference: TableCell | None = field(default=None)

    @property
    def improved(self) -> bool:
        return self.reference is not None and self.reference.improved

    @property
    def exceeds_previous(self) -> bool:
        """Computed bound is above the earlier value recorded in the table."""
        if self.reference is None:
            return False
        prior = self.reference.old if self.reference.improved else self.reference.value
        return self.computed > prior

    @property
    def reproduced(self) -> bool | None:
        """For improved cells, whether the computed bound equals the new value."""
        if not self.improved:
            return None
        return self.computed == self.reference.value


def bounds_report(q_max: int = 100) -> list[BoundsTableEntry]:
    ref = table1()
    out = []
    for q in range(1, q_max + 1):
        b = degree_lower_bound(q)
        out.append(BoundsTableEntry(q, b.degree, b.justification, ref.get(q)))
    return out
