"""Symmetrized relator sets, the C'(1/6) small-cancellation condition,
Dehn's algorithm, and the torsion (order) algorithm for sixth groups.

A relator set is symmetrized: cyclically reduced, closed under inverses
and cyclic permutations.  ``roots`` records each defining relator as a
maximal proper power root^exponent; the order algorithm matches against
these, which is exactly what the torsion theorem for sixth groups licenses.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Optional, Set, Tuple

from .words import (
    EMPTY,
    Word,
    concat,
    cyclic_permutations,
    cyclic_reduce,
    format_word,
    invert_word,
    power,
    reduce_word,
    word_key,
)

INFINITE = math.inf

DEFAULT_DEHN_BUDGET = 10_000


class DehnBudgetError(RuntimeError):
    pass


def primitive_root(w: Word) -> Tuple[Word, int]:
    """Write w = u^k with k maximal (u the primitive root)."""
    n = len(w)
    for p in range(1, n + 1):
        if n % p == 0 and w == w[:p] * (n // p):
            return w[:p], n // p
    raise AssertionError("unreachable")


@dataclass(frozen=True)
class RelatorSet:
    relators: FrozenSet[Word]
    roots: FrozenSet[Tuple[Word, int]]

    def sorted_relators(self):
        return sorted(self.relators, key=word_key)


def symmetrize(seeds: Iterable[Word]) -> RelatorSet:
    relators: Set[Word] = set()
    roots: Set[Tuple[Word, int]] = set()
    for seed in seeds:
        if not seed:
            raise ValueError("empty seed relator")
        core, _ = cyclic_reduce(reduce_word(seed))
        if not core:
            continue
        roots.add(primitive_root(core))
        for w in (core, invert_word(core)):
            relators.update(cyclic_permutations(w))
    return RelatorSet(frozenset(relators), frozenset(roots))


def _common_prefix(w1: Word, w2: Word) -> Word:
    k = 0
    for a, b in zip(w1, w2):
        if a != b:
            break
        k += 1
    return w1[:k]


def pieces(rel: RelatorSet) -> Set[Word]:
    """Maximal common prefixes of ordered pairs of distinct relators.

    Note that a relator is never compared with itself: proper powers such
    as (v0 v1)^11 contribute no pieces through their self-overlaps.
    """
    out: Set[Word] = set()
    rels = rel.sorted_relators()
    for i, r1 in enumerate(rels):
        for j, r2 in enumerate(rels):
            if i == j:
                continue
            u = _common_prefix(r1, r2)
            if u:
                out.add(u)
    return out


def max_piece_length(rel: RelatorSet) -> int:
    ps = pieces(rel)
    return max((len(u) for u in ps), default=0)


def _contains(w: Word, u: Word) -> bool:
    if not u:
        return True
    n, k = len(w), len(u)
    return any(w[i : i + k] == u for i in range(n - k + 1))


def check_c16(rel: RelatorSet) -> bool:
    """Every piece occurring inside a relator r has length < |r|/6."""
    ps = pieces(rel)
    for r in rel.relators:
        for u in ps:
            if len(u) * 6 >= len(r) and _contains(r, u):
                return False
    return True


class _TrieNode:
    __slots__ = ("children", "min_len", "best")

    def __init__(self):
        self.children: Dict[int, _TrieNode] = {}
        self.min_len = None  # length of the shortest relator with this prefix
        self.best: Optional[Word] = None  # that relator (ties: shortlex least)


class Presentation:
    """A group presentation with a prefix trie for fast Dehn steps.

    Immutable after construction; the normal-form cache only memoizes
    pure results.
    """

    def __init__(self, alphabet_size: int, relators: RelatorSet):
        for r in relators.relators:
            for c in r:
                if abs(c) - 1 >= alphabet_size:
                    raise ValueError(
                        f"relator {format_word(r)} uses generator outside "
                        f"alphabet of size {alphabet_size}"
                    )
        self.alphabet_size = alphabet_size
        self.relators = relators
        self._root = _TrieNode()
        for r in relators.sorted_relators():
            node = self._root
            for c in r:
                node = node.children.setdefault(c, _TrieNode())
                if node.min_len is None or len(r) < node.min_len:
                    node.min_len = len(r)
                    node.best = r
        self._nf_cache: Dict[Word, Word] = {}

    def __repr__(self):
        return (
            f"Presentation(alphabet_size={self.alphabet_size}, "
            f"|R|={len(self.relators.relators)})"
        )

    def _find_dehn_step(self, w: Word):
        """Leftmost, then longest subword u that is a prefix of some relator
        r with |u| > |r|/2.  Returns (pos, length, relator) or None."""
        n = len(w)
        for i in range(n):
            node = self._root
            hit = None
            for d in range(i, n):
                node = node.children.get(w[d])
                if node is None:
                    break
                length = d - i + 1
                if 2 * length > node.min_len:
                    hit = (length, node.best)
            if hit is not None:
                return i, hit[0], hit[1]
        return None

    def dehn_reduce(self, w: Word, budget: int = DEFAULT_DEHN_BUDGET) -> Word:
        """Run Dehn's algorithm to a fixed point.  Empty iff w = 1 in G."""
        w = reduce_word(w)
        cached = self._nf_cache.get(w)
        if cached is not None:
            return cached
        orig = w
        steps = 0
        while True:
            step = self._find_dehn_step(w)
            if step is None:
                break
            steps += 1
            if steps > budget:
                raise DehnBudgetError(
                    f"Dehn step budget {budget} exceeded on {format_word(orig)}"
                )
            i, length, r = step
            # r = u . s with u the matched prefix; replace u by s^{-1}.
            complement = invert_word(r[length:])
            w = reduce_word(w[:i] + complement + w[i + length :])
        self._nf_cache[orig] = w
        return w

    def is_identity(self, w: Word, budget: int = DEFAULT_DEHN_BUDGET) -> bool:
        return self.dehn_reduce(w, budget) == EMPTY

    def equal(self, w1: Word, w2: Word, budget: int = DEFAULT_DEHN_BUDGET) -> bool:
        return self.is_identity(concat(w1, invert_word(w2)), budget)

    def cyclic_dehn_reduce(self, w: Word, budget: int = DEFAULT_DEHN_BUDGET) -> Word:
        """Cyclically reduce, then Dehn-reduce rotations until stable."""
        current = self.dehn_reduce(w, budget)
        while True:
            current, _ = cyclic_reduce(current)
            for rot in sorted(
                ({current[i:] + current[:i] for i in range(len(current))} or {EMPTY}),
                key=word_key,
            ):
                reduced = self.dehn_reduce(rot, budget)
                if word_key(reduced) < word_key(rot):
                    current = reduced
                    break
            else:
                return current

    def order(self, w: Word, budget: int = DEFAULT_DEHN_BUDGET):
        """Order of the element w, or INFINITE.

        Valid for sixth groups with populated roots: a finite-order
        element cyclically reduces to a cyclic permutation of a power of
        some root v with v^n a relator.
        """
        core = self.cyclic_dehn_reduce(w, budget)
        if not core:
            return 1
        rotations = {core[i:] + core[:i] for i in range(len(core))}
        for root, n in sorted(self.relators.roots, key=lambda rn: word_key(rn[0])):
            if len(core) % len(root) != 0:
                continue
            k = len(core) // len(root)
            if root * k in rotations or invert_word(root) * k in rotations:
                return n // math.gcd(k, n)
        return INFINITE


def presentation_from_seeds(alphabet_size: int, seeds: Iterable[Word]) -> Presentation:
    return Presentation(alphabet_size, symmetrize(seeds))
