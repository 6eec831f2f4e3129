"""Finite groupoids, quasigroup checks and recursive derivatives.

A groupoid of order ``q`` is stored as a ``q x q`` integer table with the
row index as the left operand: ``table[a, b] == a * b``.

The recursive derivatives are the operations

    a *_{-2} b = a,   a *_{-1} b = b,
    a *_n b = (a *_{n-2} b) * (a *_{n-1} b)   for n >= 0,

so ``*_0`` is the original operation.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from . import formats


class GroupoidError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Groupoid:
    order: int
    table: np.ndarray = field(repr=False)

    def __post_init__(self):
        table = np.array(self.table, dtype=np.int64, copy=True)
        if self.order < 1:
            raise GroupoidError(f"order must be positive, got {self.order}")
        if table.shape != (self.order, self.order):
            raise GroupoidError(
                f"table has shape {table.shape}, expected {(self.order, self.order)}"
            )
        if table.size and (table.min() < 0 or table.max() >= self.order):
            bad = np.argwhere((table < 0) | (table >= self.order))[0]
            raise GroupoidError(
                f"entry {table[tuple(bad)]} at {tuple(int(i) for i in bad)} "
                f"is outside [0, {self.order})"
            )
        table.setflags(write=False)
        object.__setattr__(self, "table", table)

    def __call__(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def __eq__(self, other):
        if not isinstance(other, Groupoid):
            return NotImplemented
        return self.order == other.order and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash((self.order, self.table.tobytes()))

    def rows(self) -> list[list[int]]:
        return self.table.tolist()

    def to_text(self) -> str:
        return formats.format_table(self.rows())

    @classmethod
    def from_text(cls, text: str) -> "Groupoid":
        order, entries = formats.parse_table(text)
        return cls(order, entries)


def make_groupoid(order: int, entries: Sequence[Sequence[int]]) -> Groupoid:
    return Groupoid(order, entries)


def cyclic_group(q: int) -> Groupoid:
    """Addition modulo ``q``."""
    r = np.arange(q)
    return Groupoid(q, (r[:, None] + r[None, :]) % q)


def linear_groupoid(q: int, alpha: int, beta: int) -> Groupoid:
    """``a * b = alpha*a + beta*b (mod q)``."""
    r = np.arange(q)
    return Groupoid(q, (alpha * r[:, None] + beta * r[None, :]) % q)


def left_projection(q: int) -> Groupoid:
    return Groupoid(q, np.repeat(np.arange(q)[:, None], q, axis=1))


def right_projection(q: int) -> Groupoid:
    return Groupoid(q, np.repeat(np.arange(q)[None, :], q, axis=0))


# -- classification ----------------------------------------------------------

@dataclass(frozen=True)
class QuasigroupReport:
    is_left: bool
    is_right: bool
    is_idempotent: bool

    @property
    def is_quasigroup(self) -> bool:
        return self.is_left and self.is_right


def _rows_are_permutations(table: np.ndarray) -> bool:
    q = table.shape[0]
    return bool(np.all(np.sort(table, axis=1) == np.arange(q)))


def is_left_quasigroup(G: Groupoid) -> bool:
    """Every equation ``a * x = b`` has a unique solution (rows are permutations)."""
    return _rows_are_permutations(G.table)


def is_right_quasigroup(G: Groupoid) -> bool:
    """Every equation ``y * a = b`` has a unique solution (columns are permutations)."""
    return _rows_are_permutations(G.table.T)


def is_quasigroup(G: Groupoid) -> bool:
    return is_left_quasigroup(G) and is_right_quasigroup(G)


def is_idempotent(G: Groupoid) -> bool:
    return bool(np.all(np.diagonal(G.table) == np.arange(G.order)))


def classify(G: Groupoid) -> QuasigroupReport:
    return QuasigroupReport(
        is_left=is_left_quasigroup(G),
        is_right=is_right_quasigroup(G),
        is_idempotent=is_idempotent(G),
    )


# -- recursive derivatives ---------------------------------------------------

def iter_derivative_tables(G: Groupoid) -> Iterator[np.ndarray]:
    """Yield the tables of ``*_{-2}, *_{-1}, *_0, *_1, ...`` without end."""
    q = G.order
    older = np.repeat(np.arange(q)[:, None], q, axis=1)
    newer = np.repeat(np.arange(q)[None, :], q, axis=0)
    yield older
    yield newer
    while True:
        older, newer = newer, G.table[older, newer]
        yield newer


def recursive_derivative(G: Groupoid, n: int) -> Groupoid:
    """Return the ``n``-th recursive derivative ``(X, *_n)`` for ``n >= -2``."""
    if n < -2:
        raise GroupoidError(f"derivative index must be >= -2, got {n}")
    for i, table in enumerate(iter_derivative_tables(G), start=-2):
        if i == n:
            return Groupoid(G.order, table)
    raise AssertionError("unreachable")


def derivatives(G: Groupoid, upto: int) -> list[Groupoid]:
    """Derivatives ``*_0`` through ``*_upto``."""
    out = []
    for i, table in enumerate(iter_derivative_tables(G), start=-2):
        if i > upto:
            break
        if i >= 0:
            out.append(Groupoid(G.order, table))
    return out


def is_recursively_n_differentiable(G: Groupoid, n: int) -> bool:
    if n < 0:
        raise GroupoidError(f"n must be >= 0, got {n}")
    return all(is_quasigroup(D) for D in derivatives(G, n))


@dataclass(frozen=True)
class Degree:
    """Outcome of a capped differentiability search.

    ``value`` is the largest ``n`` with ``*_0 .. *_n`` all quasigroups (``-1``
    when ``G`` itself is not one). When every derivative up to ``cap`` is a
    quasigroup, ``cap_reached`` is set and ``value == cap``.
    """

    value: int
    cap: int
    cap_reached: bool = False

    def __str__(self):
        return "cap-reached" if self.cap_reached else str(self.value)


def differentiability_degree(G: Groupoid, cap: int | None = None) -> Degree:
    if cap is None:
        cap = G.order ** 2
    if cap < 0:
        raise GroupoidError(f"cap must be >= 0, got {cap}")
    tables = iter_derivative_tables(G)
    next(tables), next(tables)
    for n in range(cap + 1):
        D = Groupoid(G.order, next(tables))
        if not is_quasigroup(D):
            return Degree(n - 1, cap)
    return Degree(cap, cap, cap_reached=True)


@dataclass(frozen=True)
class DerivativeChain:
    base: Groupoid
    derivatives: list[Groupoid]
    degree: Degree


def derivative_chain(G: Groupoid, upto: int, cap: int | None = None) -> DerivativeChain:
    return DerivativeChain(G, derivatives(G, upto), differentiability_degree(G, cap))


# -- random quasigroups --------------------------------------------------------

def random_latin_square(q: int, rng: random.Random) -> list[list[int]]:
    """A random Latin square built by randomised cell-by-cell backtracking."""
    square = [[-1] * q for _ in range(q)]
    row_used = [set() for _ in range(q)]
    col_used = [set() for _ in range(q)]

    def fill(cell: int) -> bool:
        if cell == q * q:
            return True
        r, c = divmod(cell, q)
        options = [s for s in range(q) if s not in row_used[r] and s not in col_used[c]]
        rng.shuffle(options)
        for s in options:
            square[r][c] = s
            row_used[r].add(s)
            col_used[c].add(s)
            if fill(cell + 1):
                return True
            row_used[r].discard(s)
            col_used[c].discard(s)
        square[r][c] = -1
        return False

    fill(0)
    # random isotopy to spread the distribution further
    rows, cols, syms = (rng.sample(range(q), q) for _ in range(3))
    return [[syms[square[rows[i]][cols[j]]] for j in range(q)] for i in range(q)]


def random_quasigroup(q: int, seed: int | random.Random | None = 0) -> Groupoid:
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    return Groupoid(q, random_latin_square(q, rng))
