"""Base-block development and the explicit order-26 construction."""
from __future__ import annotations

from dataclasses import dataclass, field

from . import data, formats
from .algebra import Groupoid, recursive_derivative
from .designs import (
    Block,
    InternalCheckError,
    MendelsohnDesign,
    directed_standard_construction,
    perfectness,
    verify_design,
)


class SchemeError(ValueError):
    pass


@dataclass(frozen=True)
class DevelopmentScheme:
    """Blocks over residues ``0..m-1`` plus ``s`` fixed infinity points.

    Infinity ``j`` (1-based) is the point ``m + j - 1``. Each base block is
    developed by ``i -> i + 1 (mod m)`` on residues; extra blocks are used
    as they are.
    """

    residue_count: int
    infinity_count: int
    block_size: int
    base_blocks: tuple[tuple[int, ...], ...]
    extra_blocks: tuple[tuple[int, ...], ...] = field(default=())

    @property
    def v(self) -> int:
        return self.residue_count + self.infinity_count

    def shift(self, point: int, j: int) -> int:
        if point >= self.residue_count:
            return point
        return (point + j) % self.residue_count

    @classmethod
    def from_text(cls, text: str) -> "DevelopmentScheme":
        lines = formats.content_lines(text)
        try:
            m, s, k = map(int, lines[0].split())
        except (IndexError, ValueError):
            raise SchemeError("expected header 'residue_count infinity_count block_size'")

        def point(token: str) -> int:
            if token.startswith("inf"):
                j = int(token[3:])
                if not 1 <= j <= s:
                    raise SchemeError(f"no infinity point {token}")
                return m + j - 1
            return int(token)

        base, extra = [], []
        for line in lines[1:]:
            kind, *tokens = line.split()
            block = tuple(point(t) for t in tokens)
            if kind == "base":
                base.append(block)
            elif kind == "extra":
                extra.append(block)
            else:
                raise SchemeError(f"unknown block kind {kind!r}")
        return cls(m, s, k, tuple(base), tuple(extra))


def develop(scheme: DevelopmentScheme, lam: int = 1) -> MendelsohnDesign:
    """Develop every base block through all ``m`` shifts and adjoin the extras.

    The result is not checked for being a design; see ``verify_design``.
    """
    for b in scheme.base_blocks + scheme.extra_blocks:
        if any(not 0 <= p < scheme.v for p in b):
            raise SchemeError(f"block {b} has a point outside [0, {scheme.v})")
    blocks = [
        Block(tuple(scheme.shift(p, j) for p in b))
        for b in scheme.base_blocks
        for j in range(scheme.residue_count)
    ]
    blocks += [Block(b) for b in scheme.extra_blocks]
    return MendelsohnDesign(scheme.v, scheme.block_size, lam, tuple(blocks))


def development_orbits(design: MendelsohnDesign, scheme: DevelopmentScheme) -> list[frozenset[Block]]:
    """Group blocks into orbits under the shift map; extras fixed by it form singleton orbits."""
    remaining = set(design.blocks)
    orbits = []
    for b in design.blocks:
        if b not in remaining:
            continue
        orbit = frozenset(
            Block(tuple(scheme.shift(p, j) for p in b.elements))
            for j in range(scheme.residue_count)
        )
        remaining -= orbit
        orbits.append(orbit)
    return orbits


def scheme_26() -> DevelopmentScheme:
    return DevelopmentScheme.from_text(data.load("blocks26.txt"))


def construct_26_pmd() -> MendelsohnDesign:
    """The (26, 5, 1)-PMD: six base blocks mod 21 plus four blocks on the infinities."""
    design = develop(scheme_26())
    if not verify_design(design) or perfectness(design).max_perfect_l != 4:
        raise InternalCheckError("the order-26 scheme does not develop into a (26,5,1)-PMD")
    return design


def golden_26(derivative: int) -> Groupoid:
    """The published Cayley table of ``*_0``, ``*_1`` or ``*_2`` for the order-26 quasigroup."""
    if derivative not in (0, 1, 2):
        raise ValueError(f"no reference table for derivative {derivative}")
    return Groupoid.from_text(data.load(f"golden26_d{derivative}.txt"))


def construct_26_quasigroup(derivative: int = 0, check: bool = True) -> Groupoid:
    """Standard construction on the order-26 PMD, optionally a derivative of it.

    With ``check`` set, the base and first two derivatives are compared with
    the reference tables and any mismatch raises.
    """
    G = directed_standard_construction(construct_26_pmd())
    if check:
        for d in range(3):
            if recursive_derivative(G, d) != golden_26(d):
                raise InternalCheckError(f"derivative {d} differs from the reference table")
    return recursive_derivative(G, derivative) if derivative else G
