import itertools
import random

import pytest
import sympy

from sixthgroups.graphs import graph
from sixthgroups.randomgraph import (
    PrimeBudgetError,
    adjacent,
    embed_graph,
    extension_witness,
    nth_prime,
    prime_factors,
    prime_index,
)

# p_0 = 2, so sympy.prime(i + 1) is the independent oracle.
FIRST_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41]


def test_nth_prime_frozen():
    assert [nth_prime(i) for i in range(13)] == FIRST_PRIMES
    assert nth_prime(999) == sympy.prime(1000)
    with pytest.raises(ValueError):
        nth_prime(-1)
    with pytest.raises(PrimeBudgetError):
        nth_prime(10, max_index=5)


def test_prime_index_inverts():
    for i in range(0, 200, 7):
        assert prime_index(nth_prime(i)) == i
    with pytest.raises(ValueError):
        prime_index(9)


def test_prime_factors():
    assert prime_factors(1) == []
    assert prime_factors(12) == [2, 3]
    assert prime_factors(97) == [97]
    assert prime_factors(2 * 3 * 5 * 49) == [2, 3, 5, 7]


def test_adjacent_examples():
    assert adjacent(2, 5)  # p_2 = 5 divides 5
    assert not adjacent(4, 9)  # p_4 = 11 does not divide 9; p_9 = 29 not | 4
    assert adjacent(5, 2)  # symmetric
    assert adjacent(3, 7)  # p_3 = 7 divides 7
    with pytest.raises(ValueError):
        adjacent(1, 5)
    with pytest.raises(ValueError):
        adjacent(5, 5)


def test_adjacent_matches_definition():
    for m, n in itertools.combinations(range(2, 40), 2):
        expected = n % sympy.prime(m + 1) == 0 or m % sympy.prime(n + 1) == 0
        assert adjacent(m, n) == expected


def test_extension_witness_small():
    assert extension_witness([], []) == 2
    w = extension_witness({2, 3}, {4})
    assert w == 35  # lcm(p_2, p_3) = 35; no smaller candidate works
    assert adjacent(w, 2) and adjacent(w, 3) and not adjacent(w, 4)


def test_extension_witness_is_least():
    rng = random.Random(5)
    universe = list(range(2, 13))
    for _ in range(30):
        k = rng.randint(0, 4)
        picks = rng.sample(universe, k)
        cut = rng.randint(0, k)
        a, b = set(picks[:cut]), set(picks[cut:])
        w = extension_witness(a, b)
        for x in range(2, w):
            if x in a or x in b:
                continue
            ok = all(adjacent(x, y) for y in a) and not any(
                adjacent(x, z) for z in b
            )
            assert not ok, f"witness {w} not least for {a} {b}: {x}"


def test_extension_witness_rejects_overlap():
    with pytest.raises(ValueError):
        extension_witness({2}, {2})
    with pytest.raises(ValueError):
        extension_witness({1}, set())


def test_embed_path():
    p3 = graph(3, [(0, 1), (1, 2)])
    images = embed_graph(p3)
    assert images == {0: 2, 1: 5, 2: 13}
    for i, j in itertools.combinations(range(3), 2):
        assert adjacent(images[i], images[j]) == p3.adj(i, j)


def test_embed_preserves_adjacency():
    g = graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    images = embed_graph(g)
    assert len(set(images.values())) == 5
    for i, j in itertools.combinations(range(5), 2):
        assert adjacent(images[i], images[j]) == g.adj(i, j)


def test_dense_embedding_exceeds_budget_honestly():
    k8 = graph(8, [(i, j) for i, j in itertools.combinations(range(8), 2)])
    with pytest.raises(PrimeBudgetError):
        embed_graph(k8, max_index=10_000)
