"""Exhaustive search for small (perfect) Mendelsohn designs with lambda = 1.

The problem is an exact cover: the items are triples ``(t, a, b)`` meaning
"the ordered pair (a, b) is t-apart", for every required ``t`` and every
ordered pair of distinct points; a candidate block covers the ``k`` items
it realises for each ``t``. For a perfect design every ordered pair of
points inside a block is covered exactly once, so the cover is tight.

Symmetry breaking: some block has ``0, 1`` consecutive, and the remaining
points can be relabelled so that block is ``(0, 1, ..., k-1)``. That block
is placed first, which keeps existence answers complete up to relabelling.
"""
from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .designs import Block, MendelsohnDesign

DEFAULT_MAX_PAIRS = 200
DEFAULT_NODE_CAP = 5_000_000


class SearchError(ValueError):
    pass


@dataclass
class SearchResult:
    v: int
    k: int
    perfect: bool
    designs: list[MendelsohnDesign] = field(default_factory=list)
    complete: bool = True
    nodes: int = 0

    @property
    def exists(self) -> bool | None:
        """True if found, False if the search proved nonexistence, None if undecided."""
        if self.designs:
            return True
        return False if self.complete else None


def candidate_blocks(v: int, k: int) -> list[tuple[int, ...]]:
    """Every cyclic block of ``k`` distinct points, written minimum-first, in lexicographic order."""
    out = []
    for first in range(v):
        for rest in itertools.permutations(range(first + 1, v), k - 1):
            out.append((first, *rest))
    return out


def _covered_items(block: tuple[int, ...], ts: range) -> list[tuple[int, int, int]]:
    k = len(block)
    return [(t, block[i], block[(i + t) % k]) for t in ts for i in range(k)]


class _ExactCover:
    """Algorithm X on dict-of-sets columns."""

    def __init__(self, v: int, k: int, perfect: bool):
        self.ts = range(1, k) if perfect else range(1, 2)
        self.blocks = candidate_blocks(v, k)
        self.rows = {i: _covered_items(b, self.ts) for i, b in enumerate(self.blocks)}
        self.cols: dict[tuple[int, int, int], set[int]] = {
            (t, a, b): set() for t in self.ts for a in range(v) for b in range(v) if a != b
        }
        for i, items in self.rows.items():
            if len(set(items)) != len(items):
                continue  # a block that would cover an item twice can never be used
            for item in items:
                self.cols[item].add(i)
        self.nodes = 0

    def select(self, r: int) -> list[set[int]]:
        removed = []
        for j in self.rows[r]:
            for i in self.cols[j]:
                for jj in self.rows[i]:
                    if jj != j:
                        self.cols[jj].discard(i)
            removed.append(self.cols.pop(j))
        return removed

    def deselect(self, r: int, removed: list[set[int]]) -> None:
        for j in reversed(self.rows[r]):
            self.cols[j] = removed.pop()
            for i in self.cols[j]:
                for jj in self.rows[i]:
                    if jj != j:
                        self.cols[jj].add(i)

    def solve(self, partial: list[int], limit: int, node_cap: int, found: list[list[int]]) -> bool:
        """Depth-first search; returns False if the node cap stopped it."""
        if not self.cols:
            found.append(list(partial))
            return True
        self.nodes += 1
        if self.nodes > node_cap:
            return False
        col = min(self.cols, key=lambda c: len(self.cols[c]))
        for r in sorted(self.cols[col]):
            partial.append(r)
            removed = self.select(r)
            ok = self.solve(partial, limit, node_cap, found)
            self.deselect(r, removed)
            partial.pop()
            if not ok:
                return False
            if len(found) >= limit:
                return True
        return True

    def branches(self) -> list[int]:
        """Choices available at the first branching column (after any forced rows)."""
        if not self.cols:
            return []
        col = min(self.cols, key=lambda c: len(self.cols[c]))
        return sorted(self.cols[col])


def _prepare(v: int, k: int, perfect: bool, symmetry_breaking: bool) -> tuple[_ExactCover, list[int]]:
    ec = _ExactCover(v, k, perfect)
    forced = []
    if symmetry_breaking:
        first = ec.blocks.index(tuple(range(k)))
        if all(item in ec.cols for item in ec.rows[first]):
            ec.select(first)
            forced.append(first)
    return ec, forced


def _run_subtree(args) -> tuple[list[list[int]], bool, int]:
    v, k, perfect, symmetry_breaking, branch, limit, node_cap = args
    ec, forced = _prepare(v, k, perfect, symmetry_breaking)
    found: list[list[int]] = []
    partial = list(forced)
    if branch is not None:
        ec.select(branch)
        partial.append(branch)
    complete = ec.solve(partial, limit, node_cap, found)
    return found, complete, ec.nodes


def search_pmd(
    v: int,
    k: int,
    require_perfect: bool = True,
    limit: int = 1,
    *,
    max_pairs: int = DEFAULT_MAX_PAIRS,
    node_cap: int = DEFAULT_NODE_CAP,
    symmetry_breaking: bool = True,
    threads: int | None = 1,
) -> SearchResult:
    """Find up to ``limit`` ``(v, k, 1)`` Mendelsohn designs, perfect if requested.

    An empty, complete result proves that no such design exists. When the
    node cap stops the search, ``complete`` is False. With ``threads > 1``
    the subtrees below the first branching point run in worker processes;
    the returned designs are the same as for a single thread.
    """
    if k < 2 or v < k:
        raise SearchError(f"need 2 <= k <= v, got v={v} k={k}")
    if v * (v - 1) > max_pairs:
        raise SearchError(f"v(v-1) = {v * (v - 1)} exceeds the search bound {max_pairs}")
    if limit < 1:
        raise SearchError("limit must be positive")
    result = SearchResult(v, k, require_perfect)
    if (v * (v - 1)) % k:
        return result  # block count would not be an integer

    threads = threads or os.cpu_count() or 1
    ec, forced = _prepare(v, k, require_perfect, symmetry_breaking)
    if threads > 1 and ec.cols:
        jobs = [(v, k, require_perfect, symmetry_breaking, b, limit, node_cap) for b in ec.branches()]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            outcomes = list(pool.map(_run_subtree, jobs))
        rows: list[list[int]] = []
        for found, complete, nodes in outcomes:
            result.nodes += nodes
            if len(rows) >= limit:
                break
            result.complete = result.complete and complete
            rows.extend(found)
        rows = rows[:limit]
    else:
        rows = []
        result.complete = ec.solve(list(forced), limit, node_cap, rows)
        result.nodes = ec.nodes
    blocks_of = ec.blocks
    result.designs = [
        MendelsohnDesign(v, k, 1, tuple(sorted(Block(blocks_of[i]) for i in sol))) for sol in rows
    ]
    return result
