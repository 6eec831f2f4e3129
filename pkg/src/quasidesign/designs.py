"""Cyclic Mendelsohn designs and the right-quasigroup cycle structure.

A block is a cyclically ordered tuple of distinct points; a design is a
list of blocks on points ``0..v-1`` in which every ordered pair of distinct
points is consecutive in exactly ``lam`` blocks.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import formats
from .algebra import (
    Groupoid,
    derivatives,
    is_idempotent,
    is_right_quasigroup,
    is_recursively_n_differentiable,
)


class DesignError(ValueError):
    pass


class InternalCheckError(RuntimeError):
    """A property guaranteed by theory failed; indicates a bug or bad data."""


def canonical_rotation(seq: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically least rotation of ``seq``."""
    seq = tuple(seq)
    if not seq:
        return seq
    return min(seq[i:] + seq[:i] for i in range(len(seq)))


@dataclass(frozen=True, order=True)
class Cycle:
    """Cyclically ordered sequence; repeated elements are allowed."""

    elements: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", canonical_rotation(self.elements))

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


@dataclass(frozen=True, order=True)
class Block(Cycle):
    """Cyclically ordered set of distinct points, stored minimum-first."""

    def __post_init__(self):
        if len(self.elements) < 2:
            raise DesignError(f"block {self.elements} has fewer than two points")
        if len(set(self.elements)) != len(self.elements):
            raise DesignError(f"block {self.elements} repeats a point")
        super().__post_init__()


def t_apart_pairs(block: Sequence[int] | Cycle, t: int) -> list[tuple[int, int]]:
    """The ``k`` ordered pairs ``(a_i, a_{i+t})`` with indices mod ``k``."""
    elems = tuple(block)
    k = len(elems)
    if not 1 <= t <= k - 1:
        raise DesignError(f"t must lie in [1, {k - 1}], got {t}")
    return [(elems[i], elems[(i + t) % k]) for i in range(k)]


@dataclass(frozen=True)
class MendelsohnDesign:
    v: int
    k: int
    lam: int
    blocks: tuple[Block, ...] = field(repr=False)

    def __post_init__(self):
        if self.v < 1 or self.k < 2 or self.lam < 1:
            raise DesignError(f"bad parameters v={self.v} k={self.k} lambda={self.lam}")
        blocks = tuple(b if isinstance(b, Block) else Block(tuple(b)) for b in self.blocks)
        for b in blocks:
            if len(b) != self.k:
                raise DesignError(f"block {b.elements} does not have size {self.k}")
            if min(b.elements) < 0 or max(b.elements) >= self.v:
                raise DesignError(f"block {b.elements} has a point outside [0, {self.v})")
        object.__setattr__(self, "blocks", blocks)

    @property
    def expected_block_count(self) -> int | None:
        num = self.lam * self.v * (self.v - 1)
        return num // self.k if num % self.k == 0 else None

    def block_set(self) -> frozenset[Block]:
        return frozenset(self.blocks)

    def to_text(self) -> str:
        return formats.format_design(self.v, self.k, self.lam, (b.elements for b in self.blocks))

    @classmethod
    def from_text(cls, text: str) -> "MendelsohnDesign":
        v, k, lam, blocks = formats.parse_design(text)
        return cls(v, k, lam, tuple(blocks))


def pair_counts(design: MendelsohnDesign, t: int) -> np.ndarray:
    """``v x v`` matrix counting how often each ordered pair is ``t``-apart."""
    counts = np.zeros((design.v, design.v), dtype=np.int64)
    if not design.blocks:
        return counts
    arr = np.array([b.elements for b in design.blocks])
    np.add.at(counts, (arr.ravel(), np.roll(arr, -t, axis=1).ravel()), 1)
    return counts


def _violations(design: MendelsohnDesign, t: int) -> list[tuple[tuple[int, int], int]]:
    counts = pair_counts(design, t)
    bad = counts != design.lam
    np.fill_diagonal(bad, False)
    return [((int(a), int(b)), int(counts[a, b])) for a, b in np.argwhere(bad)]


@dataclass(frozen=True)
class DesignCheck:
    ok: bool
    block_count: int
    expected_block_count: int | None
    violations: list[tuple[tuple[int, int], int]]

    def __bool__(self):
        return self.ok


def verify_design(design: MendelsohnDesign) -> DesignCheck:
    """Check every ordered pair of distinct points is consecutive exactly ``lam`` times."""
    violations = _violations(design, 1)
    expected = design.expected_block_count
    ok = not violations and expected == len(design.blocks)
    return DesignCheck(ok, len(design.blocks), expected, violations)


@dataclass(frozen=True)
class PerfectnessReport:
    max_perfect_l: int
    per_t_violations: dict[int, list[tuple[tuple[int, int], int]]]

    def is_perfect(self, k: int) -> bool:
        return self.max_perfect_l >= k - 1


def perfectness(design: MendelsohnDesign) -> PerfectnessReport:
    per_t = {t: _violations(design, t) for t in range(1, design.k)}
    level = 0
    for t in range(1, design.k):
        if per_t[t]:
            break
        level = t
    return PerfectnessReport(level, per_t)


def directed_standard_construction(design: MendelsohnDesign) -> Groupoid:
    """Idempotent groupoid with ``a * b = c`` whenever ``(..., a, b, c, ...)`` is a block."""
    if design.lam != 1:
        raise DesignError(f"construction needs lambda = 1, got {design.lam}")
    if design.k < 3:
        raise DesignError(f"construction needs k >= 3, got {design.k}")
    check = verify_design(design)
    if not check:
        raise DesignError(
            f"not a ({design.v},{design.k},1)-MD: {len(check.violations)} pair violations, "
            f"{check.block_count} blocks (expected {check.expected_block_count})"
        )
    table = np.full((design.v, design.v), -1, dtype=np.int64)
    np.fill_diagonal(table, np.arange(design.v))
    arr = np.array([b.elements for b in design.blocks])
    table[arr.ravel(), np.roll(arr, -1, axis=1).ravel()] = np.roll(arr, -2, axis=1).ravel()
    G = Groupoid(design.v, table)
    if not is_right_quasigroup(G):
        raise InternalCheckError("standard construction did not give a right quasigroup")
    return G


def cycle_from(G: Groupoid, a: int, b: int) -> Cycle:
    """Cycle of the sequence ``a, b, a*b, b*(a*b), ...`` up to the return of ``(a, b)``."""
    seq = [a, b]
    bound = G.order ** 2 + 2
    x, y = a, b
    while True:
        x, y = y, G(x, y)
        if (x, y) == (a, b):
            break
        seq.append(y)
        if len(seq) > bound:
            raise InternalCheckError(f"sequence from ({a}, {b}) did not return to its start")
    return Cycle(tuple(seq[:-1]))


def cyclic_decomposition(G: Groupoid) -> frozenset[Cycle]:
    """All cycles ``a, b, a*b, ...`` of a right quasigroup, up to rotation."""
    if not is_right_quasigroup(G):
        raise DesignError("cyclic decomposition requires a right quasigroup")
    seen = np.zeros((G.order, G.order), dtype=bool)
    cycles = set()
    for a in range(G.order):
        for b in range(G.order):
            if seen[a, b]:
                continue
            c = cycle_from(G, a, b)
            # every consecutive pair lies on exactly one cycle
            e = c.elements
            for i in range(len(e)):
                seen[e[i], e[(i + 1) % len(e)]] = True
            cycles.add(c)
    return frozenset(cycles)


def nontrivial_cycles(cycles: Iterable[Cycle]) -> frozenset[Cycle]:
    return frozenset(c for c in cycles if len(c) > 1)


def design_from_groupoid(G: Groupoid, k: int | None = None) -> MendelsohnDesign:
    """Reassemble the ``lam = 1`` design whose standard construction is ``G``."""
    cycles = sorted(nontrivial_cycles(cyclic_decomposition(G)))
    lengths = {len(c) for c in cycles}
    if k is not None:
        lengths.add(k)
    if len(lengths) != 1:
        raise DesignError(f"cycles have mixed lengths {sorted(lengths)}")
    return MendelsohnDesign(G.order, lengths.pop(), 1, tuple(Block(c.elements) for c in cycles))


def check_characterization(G: Groupoid, n: int) -> bool:
    """Does ``G`` arise from a ``(q, n+3, 1)``-PMD by the standard construction?

    True iff ``G`` is an idempotent recursively ``n``-differentiable
    quasigroup with ``a *_{n+1} b = a``, ``a *_{n+2} b = b`` and
    ``a *_d b != a`` for ``0 <= d <= n`` on all distinct ``a, b``.
    A true answer is cross-checked by rebuilding the design.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if not is_idempotent(G) or not is_recursively_n_differentiable(G, n):
        return False
    q = G.order
    off = ~np.eye(q, dtype=bool)
    left = np.repeat(np.arange(q)[:, None], q, axis=1)
    right = left.T
    tables = [D.table for D in derivatives(G, n + 2)]
    if not np.array_equal(tables[n + 1][off], left[off]):
        return False
    if not np.array_equal(tables[n + 2][off], right[off]):
        return False
    if any(np.any(tables[d][off] == left[off]) for d in range(n + 1)):
        return False

    try:
        design = design_from_groupoid(G, n + 3)
    except DesignError as exc:
        raise InternalCheckError(f"characterised groupoid has no design: {exc}") from exc
    if design.k != n + 3 or not perfectness(design).is_perfect(design.k) or not verify_design(design):
        raise InternalCheckError(f"cycles of a characterised groupoid are not a ({q},{n + 3},1)-PMD")
    return True
