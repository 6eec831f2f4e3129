"""Plain-text file formats shared by every module.

Symbols for orders up to 36 are written ``0-9`` then ``a-z``; larger orders
use decimal integers. Readers accept either spelling, skip blank lines and
treat lines starting with ``#`` as comments.
"""
from __future__ import annotations

import string
from pathlib import Path
from typing import Iterable, Sequence, TextIO

ALPHABET = string.digits + string.ascii_lowercase
SYMBOLIC_LIMIT = len(ALPHABET)


class FormatError(ValueError):
    """Raised when a text file does not follow the expected layout."""


def symbol(x: int, order: int) -> str:
    if order <= SYMBOLIC_LIMIT:
        return ALPHABET[x]
    return str(x)


def parse_symbol(token: str, order: int | None = None) -> int:
    """Decode one token. Multi-character tokens are read as decimal."""
    token = token.strip()
    if not token:
        raise FormatError("empty symbol")
    if len(token) == 1 and token.lower() in ALPHABET:
        value = ALPHABET.index(token.lower())
    elif token.isdigit():
        value = int(token)
    else:
        raise FormatError(f"unrecognised symbol {token!r}")
    if order is not None and not 0 <= value < order:
        raise FormatError(f"symbol {token!r} out of range for order {order}")
    return value


def content_lines(text: str) -> list[str]:
    out = []
    for line in text.splitlines():
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            out.append(stripped)
    return out


def read_text(source: str | Path | TextIO) -> str:
    if hasattr(source, "read"):
        return source.read()
    if str(source) == "-":
        import sys

        return sys.stdin.read()
    return Path(source).read_text(encoding="utf-8")


# -- Cayley tables -----------------------------------------------------------

def parse_table(text: str) -> tuple[int, list[list[int]]]:
    lines = content_lines(text)
    if not lines:
        raise FormatError("empty Cayley table")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "q" or not head[1].isdigit():
        raise FormatError(f"expected header 'q <order>', got {lines[0]!r}")
    order = int(head[1])
    rows = lines[1:]
    if len(rows) != order:
        raise FormatError(f"expected {order} rows, got {len(rows)}")
    entries = []
    for i, row in enumerate(rows):
        tokens = row.split()
        if len(tokens) != order:
            raise FormatError(f"row {i}: expected {order} entries, got {len(tokens)}")
        entries.append([parse_symbol(t, order) for t in tokens])
    return order, entries


def format_table(entries: Sequence[Sequence[int]]) -> str:
    order = len(entries)
    lines = [f"q {order}"]
    lines += [" ".join(symbol(int(x), order) for x in row) for row in entries]
    return "\n".join(lines) + "\n"


# -- designs -------------------------------------------------------------------

def parse_design(text: str) -> tuple[int, int, int, list[tuple[int, ...]]]:
    lines = content_lines(text)
    if not lines:
        raise FormatError("empty design file")
    head = lines[0].split()
    if len(head) != 3 or not all(h.isdigit() for h in head):
        raise FormatError(f"expected header 'v k lambda', got {lines[0]!r}")
    v, k, lam = map(int, head)
    blocks = [tuple(parse_symbol(t, v) for t in line.split()) for line in lines[1:]]
    return v, k, lam, blocks


def format_design(v: int, k: int, lam: int, blocks: Iterable[Sequence[int]]) -> str:
    lines = [f"{v} {k} {lam}"]
    lines += [" ".join(symbol(x, v) for x in b) for b in blocks]
    return "\n".join(lines) + "\n"


# -- word lists ---------------------------------------------------------------

def parse_words(text: str) -> tuple[int, int, list[tuple[int, ...]]]:
    lines = content_lines(text)
    if not lines:
        raise FormatError("empty word list")
    head = lines[0].split()
    if len(head) != 2 or not all(h.isdigit() for h in head):
        raise FormatError(f"expected header 'q n', got {lines[0]!r}")
    q, n = map(int, head)
    words = []
    for line in lines[1:]:
        tokens = line.split()
        # compact form: one run of single-character symbols
        if len(tokens) == 1 and n > 1 and q <= SYMBOLIC_LIMIT:
            tokens = list(tokens[0])
        if len(tokens) != n:
            raise FormatError(f"word {line!r} does not have length {n}")
        words.append(tuple(parse_symbol(t, q) for t in tokens))
    return q, n, words


def format_words(q: int, n: int, words: Iterable[Sequence[int]]) -> str:
    lines = [f"{q} {n}"]
    lines += [" ".join(symbol(x, q) for x in w) for w in words]
    return "\n".join(lines) + "\n"
