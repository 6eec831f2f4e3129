import pytest

from quasidesign import data
from quasidesign.algebra import differentiability_degree, recursive_derivative
from quasidesign.constructions import (
    DevelopmentScheme,
    SchemeError,
    construct_26_pmd,
    construct_26_quasigroup,
    develop,
    development_orbits,
    golden_26,
    scheme_26,
)
from quasidesign.designs import Block, pair_counts, verify_design


def test_scheme_26_contents():
    s = scheme_26()
    assert (s.residue_count, s.infinity_count, s.v, s.block_size) == (21, 5, 26, 5)
    assert s.base_blocks[0] == (0, 1, 14, 20, 19)
    assert s.base_blocks[1] == (21, 0, 9, 16, 6)
    assert s.extra_blocks[0] == (21, 22, 23, 24, 25)
    assert len(s.base_blocks) == 6 and len(s.extra_blocks) == 4


def test_develop_examples():
    D = develop(scheme_26())
    assert len(D.blocks) == 6 * 21 + 4 == 130
    assert Block((1, 2, 15, 0, 20)) in D.block_set()
    one = develop(DevelopmentScheme(3, 0, 3, (), ((0, 1, 2),)))
    assert [b.elements for b in one.blocks] == [(0, 1, 2)]
    m1 = develop(DevelopmentScheme(1, 2, 3, ((0, 1, 2),)))
    assert [b.elements for b in m1.blocks] == [(0, 1, 2)]
    with pytest.raises(SchemeError):
        develop(DevelopmentScheme(3, 0, 3, ((0, 1, 5),)))


def test_construct_26_pmd():
    D = construct_26_pmd()
    assert verify_design(D) and len(D.blocks) == 130
    assert Block((22, 0, 10, 8, 12)) in D.block_set()
    for t in range(1, 5):
        counts = pair_counts(D, t)
        off = [counts[a, b] for a in range(26) for b in range(26) if a != b]
        assert len(off) == 650 and set(off) == {1}


def test_construct_26_quasigroup_entries(golden):
    G = construct_26_quasigroup()
    assert G(0, 1) == 14
    assert recursive_derivative(G, 1)(0, 1) == 20
    assert recursive_derivative(G, 2)(0, 1) == 19
    for d in range(3):
        assert construct_26_quasigroup(d) == golden[d]
    assert differentiability_degree(G).value == 2
    third = recursive_derivative(G, 3)
    assert all(third(a, b) == a for a in range(26) for b in range(26))


def test_golden_tables_are_latin_squares(golden):
    for G in golden:
        for row in G.rows():
            assert sorted(row) == list(range(26))
    with pytest.raises(ValueError):
        golden_26(3)


def test_orbits_recover_base_blocks():
    s = scheme_26()
    D = develop(s)
    orbits = development_orbits(D, s)
    assert len(orbits) == 10
    sizes = sorted(len(o) for o in orbits)
    assert sizes == [1] * 4 + [21] * 6
    for base in s.base_blocks:
        assert sum(Block(base) in o for o in orbits) == 1
    for extra in s.extra_blocks:
        assert frozenset({Block(extra)}) in orbits


def test_data_checksum_is_enforced(monkeypatch):
    data.load.cache_clear()
    real = data._manifest()
    monkeypatch.setattr(data, "_manifest", lambda: {**real, "blocks26.txt": "0" * 64})
    with pytest.raises(data.DataIntegrityError):
        data.load("blocks26.txt")
    data.load.cache_clear()
