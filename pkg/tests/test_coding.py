import random

import pytest

from sixthgroups.coding import (
    MAX_REP_LEN,
    CodingBudgetError,
    CodingTable,
    default_star_conj_bound,
    format_partial_map,
    oracle_aut_extends,
    parse_partial_map,
    sigma_ns_nonempty,
    validate_partial_map,
)
from sixthgroups.graphs import graph
from sixthgroups.words import EMPTY, invert_word, parse_word, power

K2 = graph(2, [(0, 1)])
K1 = graph(1, [])
P3 = graph(3, [(0, 1), (1, 2)])


# Frozen shortlex table for K2 (letter order g0 < G0 < g1 < G1; composites
# take successive multiples of 3 in order of their length-2 representatives).
K2_TABLE = [
    (0, "e"),
    (1, "g0"),
    (2, "G0"),
    (3, "g0 g0"),
    (4, "g1"),
    (5, "G1"),
    (6, "g0 g1"),
    (9, "g0 G1"),
    (12, "G0 G0"),
    (15, "G0 g1"),
    (18, "G0 G1"),
    (21, "g1 g0"),
    (24, "g1 G0"),
    (27, "g1 g1"),
    (30, "G1 g0"),
]

# The single-vertex group is Z/7; codes in terms of the exponent of g0.
K1_EXP_OF_CODE = {0: 0, 1: 1, 2: -1, 3: 2, 6: -2, 9: 3, 12: -3}


def test_k2_table_frozen():
    ct = CodingTable(K2)
    got = ct.enumerate_to(30)
    assert got == [(c, parse_word(w)) for c, w in K2_TABLE]


def test_k2_spec_examples():
    ct = CodingTable(K2)
    assert ct.code_of(EMPTY) == 0
    assert ct.code_of((1,)) == 1
    assert ct.code_of((-1,)) == 2
    assert ct.code_of((2,)) == 4
    assert ct.code_of((-2,)) == 5
    assert ct.code_of((1, 1)) == 3
    assert ct.star(1, 1) == 3
    assert ct.star(0, 21) == 21 and ct.star(21, 0) == 21
    assert ct.star(1, 2) == 0
    assert ct.code_of(power((1,), 7)) == 0  # relator collapses


def test_generator_code_on_three_vertices():
    ct = CodingTable(P3)
    assert ct.code_of((3,)) == 7  # v_2 -> 3*2+1


def test_k1_exhaustion():
    ct = CodingTable(K1)
    table = ct.enumerate_to(100)
    assert sorted(c for c, _ in table) == sorted(K1_EXP_OF_CODE)
    assert not ct.registrable(4)  # no second generator
    assert not ct.registrable(15)  # only 7 elements exist
    assert ct.registrable(12)


def test_k1_star_matches_mod7_arithmetic():
    ct = CodingTable(K1)
    code_of_exp = {e: c for c, e in K1_EXP_OF_CODE.items()}
    for n, en in K1_EXP_OF_CODE.items():
        for m, em in K1_EXP_OF_CODE.items():
            e = (en + em + 3) % 7 - 3  # representative exponent in -3..3
            assert ct.star(n, m) == code_of_exp[e]


def test_inverse_code():
    ct = CodingTable(K2)
    assert ct.inverse_code(1) == 2
    assert ct.inverse_code(6) == ct.code_of((-2, -1))
    for c, _ in ct.enumerate_to(30):
        assert ct.star(c, ct.inverse_code(c)) == 0


def test_code_of_respects_group_equality():
    ct = CodingTable(K2)
    assert ct.code_of(power((1,), 4)) == ct.code_of(power((-1,), 3))
    assert ct.code_of(parse_word("g0 g1 G1")) == 1


def test_word_of_unassigned_raises():
    ct = CodingTable(K1)
    with pytest.raises(KeyError):
        ct.word_of(4)


def test_budget_errors():
    ct = CodingTable(K2, max_elements=5)
    with pytest.raises(CodingBudgetError):
        ct.enumerate_to(30)
    ct2 = CodingTable(K2)
    with pytest.raises(CodingBudgetError):
        # normal form (g0 g1)^5 g0 has length 11 > MAX_REP_LEN
        ct2.code_of(power((1, 2), 5) + (1,))


def test_partial_map_io():
    s = parse_partial_map("# comment\n1 4\n\n3 27\n")
    assert s == {1: 4, 3: 27}
    assert format_partial_map(s) == "1 4\n3 27\n"
    with pytest.raises(ValueError):
        parse_partial_map("1 4\n1 5\n")
    with pytest.raises(ValueError):
        parse_partial_map("1 4\n2 4\n")
    with pytest.raises(ValueError):
        parse_partial_map("x 4\n")
    validate_partial_map({})


def test_sigma_spec_examples():
    ct = CodingTable(K2)
    ok, w = sigma_ns_nonempty(ct, {0: 0}, 0)
    assert ok
    ok, w = sigma_ns_nonempty(ct, {1: 4}, 0)  # v0 -> v1 via the swap
    assert ok and w.k == 0 and w.l == 0 and dict(w.r) == {0: 1}
    ok, _ = sigma_ns_nonempty(ct, {0: 1}, 0)
    assert not ok


def test_sigma_rejects_unregistrable():
    ct = CodingTable(K1)
    ok, _ = sigma_ns_nonempty(ct, {1: 4}, 0)
    assert not ok
    assert not oracle_aut_extends(ct, {1: 4}, 0)


def test_sigma_composite_and_inverse_codes_constrain():
    # on Z/7 the literal generator-level conditions are vacuous for these
    # domains; the action check must reject them
    ct = CodingTable(K1)
    ok, _ = sigma_ns_nonempty(ct, {3: 1}, 0)  # v^2 -> v: impossible
    assert not ok
    assert not oracle_aut_extends(ct, {3: 1}, 0)
    ok, _ = sigma_ns_nonempty(ct, {2: 3}, 0)  # v^-1 -> v^2: impossible
    assert not ok
    assert not oracle_aut_extends(ct, {2: 3}, 0)
    ok, _ = sigma_ns_nonempty(ct, {3: 6}, 0)  # v^2 -> v^-2: inversion
    assert ok
    assert oracle_aut_extends(ct, {3: 6}, 0)


def test_sigma_nontrivial_conjugator():
    ct = CodingTable(K2)
    c = ct.code_of(parse_word("g0 g1 G0"))
    ok, w = sigma_ns_nonempty(ct, {4: c}, 1)
    assert ok and w.k != 0
    assert ct.star(w.k, w.k_inv) == 0
    assert oracle_aut_extends(ct, {4: c}, 1)
    # not reachable without a conjugator
    assert not oracle_aut_extends(ct, {4: c}, 0)
    ok0, _ = sigma_ns_nonempty(ct, {4: c}, 0)
    assert not ok0


def test_default_star_conj_bound():
    ct = CodingTable(K2)
    c = ct.code_of(parse_word("g0 g1 G0"))
    assert default_star_conj_bound(ct, {4: c}) == 1
    assert default_star_conj_bound(ct, {}) == 0


def test_star_random_associativity():
    ct = CodingTable(K2)
    codes = [c for c, _ in ct.enumerate_to(30)]
    rng = random.Random(3)
    for _ in range(100):
        a, b, c = (rng.choice(codes) for _ in range(3))
        assert ct.star(ct.star(a, b), c) == ct.star(a, ct.star(b, c))


def test_max_rep_len_is_sharp():
    # at length 11 two distinct stable words are equal in the group:
    # (g0 g1)^5 g0 and its Dehn complement from the 22-letter relator
    p = CodingTable(K2).pres
    w1 = power((1, 2), 5) + (1,)
    w2 = invert_word(power((2, 1), 5) + (2,))
    assert w1 != w2 and len(w1) == len(w2) == MAX_REP_LEN + 1
    assert p.equal(w1, w2)
