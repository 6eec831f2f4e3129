"""Complete recursive codes, Hamming distance and the Singleton bound."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from .algebra import Groupoid, is_recursively_n_differentiable

DEFAULT_ENUMERATION_CAP = 2 ** 24

Word = tuple[int, ...]


class CodeError(ValueError):
    pass


def hamming_distance(u: Sequence[int], v: Sequence[int]) -> int:
    if len(u) != len(v):
        raise CodeError(f"words have different lengths {len(u)} and {len(v)}")
    return sum(a != b for a, b in zip(u, v))


@dataclass(frozen=True)
class RecursionRule:
    """A function ``f: X^k -> X`` given by its value table.

    ``table`` is a numpy array with ``k`` axes of length ``q``; for ``k = 2``
    it is exactly a Cayley table.
    """

    q: int
    table: np.ndarray

    @property
    def arity(self) -> int:
        return self.table.ndim

    @classmethod
    def from_groupoid(cls, G: Groupoid) -> "RecursionRule":
        return cls(G.order, G.table)

    @classmethod
    def from_function(cls, q: int, k: int, f: Callable[..., int]) -> "RecursionRule":
        table = np.empty((q,) * k, dtype=np.int64)
        for idx in itertools.product(range(q), repeat=k):
            table[idx] = f(*idx)
        return cls(q, table)


def generate_recursive_code(
    rule: RecursionRule | Groupoid,
    n: int,
    q: int | None = None,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> np.ndarray:
    """All words ``u`` of length ``n`` with ``u_l = f(u_{l-k}, ..., u_{l-1})``.

    Returns an array of shape ``(q**k, n)``, one row per seed in
    lexicographic seed order.
    """
    if isinstance(rule, Groupoid):
        rule = RecursionRule.from_groupoid(rule)
    if q is None:
        q = rule.q
    if q != rule.q:
        raise CodeError(f"alphabet size {q} does not match rule of order {rule.q}")
    k = rule.arity
    if n < k:
        raise CodeError(f"length {n} is shorter than the recursion depth {k}")
    size = q ** k
    if size > cap:
        raise CodeError(f"code would have {size} words, above the enumeration cap {cap}")
    words = np.empty((size, n), dtype=np.int64)
    seeds = np.indices((q,) * k).reshape(k, -1).T
    words[:, :k] = seeds
    for col in range(k, n):
        words[:, col] = rule.table[tuple(words[:, col - k + j] for j in range(k))]
    return words


def code_distance(code: np.ndarray | Iterable[Sequence[int]], block_rows: int = 512) -> int:
    """Exact minimum Hamming distance between distinct codewords."""
    words = np.unique(np.asarray(list(code) if not isinstance(code, np.ndarray) else code), axis=0)
    if len(words) < 2:
        raise CodeError("a code needs at least two distinct words to have a distance")
    best = words.shape[1]
    for start in range(0, len(words), block_rows):
        chunk = words[start:start + block_rows]
        # compare the chunk against itself and every later word only
        dist = (chunk[:, None, :] != words[None, start:, :]).sum(axis=2)
        dist[np.tril_indices(len(chunk), 0, m=dist.shape[1])] = best + 1
        best = min(best, int(dist.min()))
    return best


def _exact_log(size: int, q: int) -> int | None:
    """``k`` with ``q**k == size`` if one exists."""
    if q < 2:
        return 0 if size == 1 else None
    k, p = 0, 1
    while p < size:
        p *= q
        k += 1
    return k if p == size else None


@dataclass(frozen=True)
class CodeSummary:
    n: int
    q: int
    size: int
    k: float
    k_integral: bool
    d: int

    @property
    def singleton_defect(self) -> float:
        return self.n - self.k + 1 - self.d

    @property
    def is_mds(self) -> bool:
        return self.k_integral and self.singleton_defect == 0

    def __str__(self):
        k = int(self.k) if self.k_integral else round(self.k, 6)
        return f"[{self.n},{k},{self.d}]_{self.q}"


def summarize(code: np.ndarray | Iterable[Sequence[int]], q: int) -> CodeSummary:
    words = np.unique(np.asarray(list(code) if not isinstance(code, np.ndarray) else code), axis=0)
    if words.size == 0:
        raise CodeError("empty code")
    size, n = words.shape
    exact = _exact_log(size, q)
    k = float(exact) if exact is not None else math.log(size, q)
    d = code_distance(words) if size > 1 else n
    summary = CodeSummary(n=n, q=q, size=size, k=k, k_integral=exact is not None, d=d)
    if exact is not None and d > n - exact + 1:
        raise AssertionError(f"Singleton bound violated by {summary}")
    return summary


@dataclass(frozen=True)
class Theorem1Check:
    n: int
    code: CodeSummary
    differentiable: bool

    @property
    def consistent(self) -> bool:
        return self.code.is_mds == self.differentiable

    def __bool__(self):
        return self.consistent

    def evidence(self) -> str:
        return (
            f"code {self.code} is_mds={self.code.is_mds}; "
            f"recursively ({self.n - 3})-differentiable quasigroup={self.differentiable}"
        )


def theorem1_crosscheck(G: Groupoid, n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> Theorem1Check:
    """Compare the MDS property of the length-``n`` code with ``(n-3)``-differentiability.

    The two sides are computed independently: one from pairwise codeword
    distances, the other from Latin-square checks on derivative tables.
    """
    if n < 3:
        raise CodeError(f"n must be at least 3, got {n}")
    if G.order < 2:
        raise CodeError("codes over a one-letter alphabet have no distance")
    words = generate_recursive_code(G, n, cap=cap)
    summary = summarize(words, G.order)
    return Theorem1Check(n, summary, is_recursively_n_differentiable(G, n - 3))
