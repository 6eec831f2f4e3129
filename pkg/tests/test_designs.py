import pytest

from oracles import naive_is_left, naive_is_right, pair_apart_counts, rotations, simulate_cycle
from quasidesign.algebra import (
    cyclic_group,
    differentiability_degree,
    make_groupoid,
    random_quasigroup,
    recursive_derivative,
)
from quasidesign.designs import (
    Block,
    Cycle,
    DesignError,
    MendelsohnDesign,
    check_characterization,
    cycle_from,
    cyclic_decomposition,
    design_from_groupoid,
    directed_standard_construction,
    nontrivial_cycles,
    perfectness,
    t_apart_pairs,
    verify_design,
)
from quasidesign.search import search_pmd


def test_block_canonical_form():
    assert Block((14, 20, 19, 0, 1)).elements == (0, 1, 14, 20, 19)
    assert Block((1, 2, 0)) == Block((0, 1, 2))
    assert Block((0, 2, 1)) != Block((0, 1, 2))
    with pytest.raises(DesignError):
        Block((0, 1, 0))
    assert Cycle((2, 2, 1, 0)).elements == (0, 2, 2, 1)


def test_t_apart_examples():
    b = (0, 1, 14, 20, 19)
    assert set(t_apart_pairs(b, 1)) == {(0, 1), (1, 14), (14, 20), (20, 19), (19, 0)}
    assert set(t_apart_pairs(b, 2)) == {(0, 14), (1, 20), (14, 19), (20, 0), (19, 1)}
    assert t_apart_pairs((0, 1), 1) == [(0, 1), (1, 0)]
    with pytest.raises(DesignError):
        t_apart_pairs(b, 5)
    with pytest.raises(DesignError):
        t_apart_pairs(b, 0)


def test_verify_examples(pmd26, mts3):
    check = verify_design(pmd26)
    assert check.ok and check.block_count == 130 == 26 * 25 // 5
    assert verify_design(mts3)
    under = MendelsohnDesign(3, 3, 1, ((0, 1, 2),))
    check = verify_design(under)
    assert not check
    assert sorted(p for p, c in check.violations) == [(0, 2), (1, 0), (2, 1)]
    assert all(c == 0 for _, c in check.violations)


def test_design_validation_errors():
    with pytest.raises(DesignError):
        MendelsohnDesign(3, 3, 1, ((0, 1, 3),))
    with pytest.raises(DesignError):
        MendelsohnDesign(4, 3, 1, ((0, 1, 2, 3),))


def test_lambda_two_uses_multiset_counts(mts3):
    doubled = MendelsohnDesign(3, 3, 2, mts3.blocks * 2)
    assert verify_design(doubled)
    assert not verify_design(MendelsohnDesign(3, 3, 1, mts3.blocks * 2))


def test_perfectness_examples(pmd26, mts3):
    assert perfectness(pmd26).max_perfect_l == 4
    assert perfectness(mts3).max_perfect_l == 2
    # oracle: count 2-apart pairs by hand
    counts = pair_apart_counts([b.elements for b in mts3.blocks], 2)
    assert sorted(counts) == [(a, b) for a in range(3) for b in range(3) if a != b]
    assert set(counts.values()) == {1}


def test_standard_construction_examples(pmd26, golden, mts3):
    G = directed_standard_construction(pmd26)
    assert G == golden[0]
    assert G(0, 9) == 16 and G(0, 1) == 14
    assert G(21, 0) == 9  # infinity_1 * 0 from block (inf1, 0, 9, 16, 6)
    H = directed_standard_construction(mts3)
    expected = {(0, 1): 2, (1, 2): 0, (2, 0): 1, (0, 2): 1, (2, 1): 0, (1, 0): 2}
    for (a, b), c in expected.items():
        assert H(a, b) == c
    assert all(H(a, a) == a for a in range(3))


def test_standard_construction_rejects_bad_input(mts3):
    with pytest.raises(DesignError):
        directed_standard_construction(MendelsohnDesign(3, 3, 2, mts3.blocks * 2))
    with pytest.raises(DesignError):
        directed_standard_construction(MendelsohnDesign(3, 3, 1, ((0, 1, 2),)))
    with pytest.raises(DesignError):
        directed_standard_construction(MendelsohnDesign(2, 2, 1, ((0, 1),)))


def test_decomposition_examples(q26, pmd26):
    cycles = cyclic_decomposition(q26)
    assert len(cycles) == 156
    assert sum(len(c) == 1 for c in cycles) == 26
    assert {Block(c.elements) for c in nontrivial_cycles(cycles)} == pmd26.block_set()
    Z3 = cyclic_group(3)
    assert cycle_from(Z3, 0, 0).elements == (0,)
    assert cycle_from(Z3, 0, 1).elements == (0, 1, 1, 2, 0, 2, 2, 1)
    # oracle: plain simulation
    assert tuple(simulate_cycle(Z3.rows(), 0, 1)) == (0, 1, 1, 2, 0, 2, 2, 1)


def test_decomposition_requires_right_quasigroup():
    with pytest.raises(DesignError):
        cyclic_decomposition(make_groupoid(2, [[0, 1], [0, 1]]))


@pytest.mark.parametrize("seed", range(10))
def test_decomposition_matches_simulation(seed):
    G = random_quasigroup(5, seed)
    table = G.rows()
    cycles = cyclic_decomposition(G)
    # every ordered pair is consecutive on exactly one cycle
    covered = {}
    for c in cycles:
        e = c.elements
        for i in range(len(e)):
            covered[(e[i], e[(i + 1) % len(e)])] = covered.get((e[i], e[(i + 1) % len(e)]), 0) + 1
    assert len(covered) == 25 and set(covered.values()) == {1}
    for a in range(5):
        for b in range(5):
            sim = simulate_cycle(table, a, b)
            assert any(r in rotations(c.elements) for c in cycles for r in [tuple(sim)])
    for c in cycles:
        e, m = c.elements, len(c)
        for i in range(m):
            assert e[(i + 2) % m] == table[e[i]][e[(i + 1) % m]]


def test_characterization_examples(q26, mts3):
    assert check_characterization(q26, 2)
    assert not check_characterization(q26, 1)
    assert not check_characterization(cyclic_group(3), 1)
    H = directed_standard_construction(mts3)
    assert check_characterization(H, 0)
    assert design_from_groupoid(H).block_set() == mts3.block_set()


SMALL = [(3, 3), (4, 3), (7, 3), (9, 3), (5, 4), (9, 4), (5, 5), (7, 6), (7, 7), (8, 7)]


@pytest.fixture(scope="module")
def small_pmds():
    out = []
    for v, k in SMALL:
        res = search_pmd(v, k, True, limit=3)
        assert res.designs, (v, k)
        out += res.designs
    return out


def test_round_trip_on_searched_designs(small_pmds, pmd26):
    for D in small_pmds + [pmd26]:
        G = directed_standard_construction(D)
        blocks = {Block(c.elements) for c in nontrivial_cycles(cyclic_decomposition(G))}
        assert blocks == D.block_set()


def test_theory_consequences_on_designs(small_pmds, pmd26):
    for D in small_pmds + [pmd26]:
        G = directed_standard_construction(D)
        k = D.k
        level = perfectness(D).max_perfect_l
        for t in range(2, level + 1):
            assert naive_is_left(recursive_derivative(G, t - 2).rows())
            assert naive_is_right(recursive_derivative(G, t - 1).rows())
        top = recursive_derivative(G, k - 2)
        assert all(top(a, b) == a for a in range(D.v) for b in range(D.v))
        deg = differentiability_degree(G)
        assert deg.value == k - 3
        assert check_characterization(G, k - 3)


def test_non_perfect_design_degree():
    # for k = 3, *_0 is a left quasigroup exactly when every pair is 2-apart once
    res = search_pmd(7, 3, False, limit=20)
    for D in res.designs:
        G = directed_standard_construction(D)
        level = perfectness(D).max_perfect_l
        deg = differentiability_degree(G).value
        assert deg <= D.k - 3
        if level >= 2:
            assert deg >= level - 2
        assert deg == (0 if level == 2 else -1)
