"""Bundled reference data with integrity checks."""
from __future__ import annotations

import hashlib
from functools import lru_cache
from importlib import resources


class DataIntegrityError(RuntimeError):
    pass


@lru_cache(maxsize=None)
def _manifest() -> dict[str, str]:
    text = resources.files(__name__).joinpath("checksums.sha256").read_text(encoding="utf-8")
    out = {}
    for line in text.splitlines():
        if line.strip():
            digest, name = line.split()
            out[name] = digest
    return out


@lru_cache(maxsize=None)
def load(name: str) -> str:
    """Return the text of a bundled data file after verifying its checksum."""
    raw = resources.files(__name__).joinpath(name).read_bytes()
    expected = _manifest().get(name)
    if expected is None:
        raise DataIntegrityError(f"{name} is not listed in checksums.sha256")
    if hashlib.sha256(raw).hexdigest() != expected:
        raise DataIntegrityError(f"{name} does not match its recorded checksum")
    return raw.decode("utf-8")
