"""The graph-to-group reduction T -> G_T and its canonical-form theory.

G_T is generated by one v_i per vertex, with relators v_i^7, and
(v_i v_j)^11 on edges / (v_i v_j)^13 on non-edges.  Every automorphism
of G_T has the canonical form theta(v_i) = t v_{rho(i)}^eps t^{-1} with
rho a graph automorphism and eps = +/-1; the searches below recover and
verify such witnesses by brute force at desk scale.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple

from .graphs import Graph, automorphisms, graph_iso
from .presentation import DEFAULT_DEHN_BUDGET, Presentation, symmetrize
from .words import (
    EMPTY,
    Word,
    concat,
    gen,
    invert_word,
    power,
    reduce_word,
    word_key,
)

GENERATOR_ORDER = 7
EDGE_ORDER = 11
NONEDGE_ORDER = 13

# Images of v_0 .. v_{n-1}, one reduced word each.
GeneratorMap = Tuple[Word, ...]


def relator_seeds(t: Graph):
    seeds = [power((gen(i),), GENERATOR_ORDER) for i in range(t.n)]
    for i, j in itertools.combinations(range(t.n), 2):
        exp = EDGE_ORDER if t.adj(i, j) else NONEDGE_ORDER
        seeds.append(power((gen(i), gen(j)), exp))
    return seeds


def relators_from_graph(t: Graph) -> Presentation:
    return Presentation(t.n, symmetrize(relator_seeds(t)))


def conjugate(t_word: Word, w: Word) -> Word:
    return reduce_word(t_word + w + invert_word(t_word))


def induced_hom(
    t: Graph,
    s: Graph,
    mapping: Sequence[int],
    epsilon: int = 1,
    conj: Word = EMPTY,
) -> GeneratorMap:
    """Generator map v_i -> conj . v_{mapping(i)}^epsilon . conj^{-1}."""
    if len(set(mapping)) != len(mapping):
        raise ValueError("mapping must be injective")
    if any(not 0 <= v < s.n for v in mapping):
        raise ValueError("mapping target out of range")
    if epsilon not in (-1, 1):
        raise ValueError("epsilon must be +1 or -1")
    return tuple(
        conjugate(conj, (epsilon * gen(mapping[i]),)) for i in range(t.n)
    )


def apply_hom(gm: GeneratorMap, w: Word) -> Word:
    out: Word = EMPTY
    for c in w:
        img = gm[abs(c) - 1]
        out = concat(out, img if c > 0 else invert_word(img))
    return out


def is_homomorphism(
    p_t: Presentation,
    p_s: Presentation,
    gm: GeneratorMap,
    budget: int = DEFAULT_DEHN_BUDGET,
) -> bool:
    """The map extends to G_T -> G_S iff every defining relator maps to 1."""
    if len(gm) != p_t.alphabet_size:
        raise ValueError("generator map has wrong arity")
    for root, exp in p_t.relators.roots:
        if not p_s.is_identity(apply_hom(gm, root * exp), budget):
            return False
    return True


def check_injective_up_to(
    p_t: Presentation,
    p_s: Presentation,
    gm: GeneratorMap,
    length: int,
    budget: int = DEFAULT_DEHN_BUDGET,
) -> bool:
    """Distinct elements of G_T of word length <= length must have
    distinct images in G_S.  Assumes is_homomorphism(gm) already holds."""
    images: Dict[Word, Word] = {}
    for w in reduced_words(p_t.alphabet_size, length):
        nf = p_t.dehn_reduce(w, budget)
        img = p_s.dehn_reduce(apply_hom(gm, w), budget)
        prev = images.get(nf)
        if prev is None:
            images[nf] = img
        elif prev != img:
            # One source element produced two image forms; not a hom.
            return False
    seen: Dict[Word, Word] = {}
    for src, img in images.items():
        if img in seen:
            return False
        seen[img] = src
    return True


def reduced_words(alphabet_size: int, max_len: int):
    """All freely reduced words of length <= max_len, shortlex order."""
    letters = []
    for i in range(alphabet_size):
        letters.append(gen(i))
        letters.append(-gen(i))
    yield EMPTY
    frontier = [EMPTY]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for c in letters:
                if w and w[-1] == -c:
                    continue
                nxt.append(w + (c,))
        yield from nxt
        frontier = nxt


@dataclass(frozen=True)
class CanonicalAuto:
    rho: Tuple[int, ...]
    epsilon: int
    conj: Word


def default_conj_bound(gm: GeneratorMap) -> int:
    # |t v t^{-1}| = 2|t| + 1 without cancellation.
    return max(((len(w) - 1) // 2 for w in gm), default=0)


def aut_canonical_check(
    t: Graph,
    gm: GeneratorMap,
    bound: Optional[int] = None,
    budget: int = DEFAULT_DEHN_BUDGET,
) -> Optional[CanonicalAuto]:
    """Search for (rho, eps, t) with gm(i) = t v_{rho(i)}^eps t^{-1} in G_T.

    Returns the first witness in (rho, eps, conjugator) shortlex order,
    or None.  Together with is_homomorphism, a witness certifies that gm
    defines an automorphism of G_T.
    """
    if bound is None:
        bound = default_conj_bound(gm)
    pres = relators_from_graph(t)
    for rho in automorphisms(t):
        for eps in (1, -1):
            for conj in sorted(reduced_words(t.n, bound), key=word_key):
                if all(
                    pres.equal(gm[i], conjugate(conj, (eps * gen(rho[i]),)), budget)
                    for i in range(t.n)
                ):
                    return CanonicalAuto(rho, eps, conj)
    return None


def iso_search(t: Graph, s: Graph, budget: int = DEFAULT_DEHN_BUDGET):
    """Graph isomorphism rho lifted to a verified group isomorphism.

    Returns (rho, +1) or None.  The verification composes the induced
    maps both ways and checks identity on generators via the word
    problem.
    """
    rho = graph_iso(t, s)
    if rho is None:
        return None
    inv = [0] * s.n
    for i, v in enumerate(rho):
        inv[v] = i
    p_t = relators_from_graph(t)
    p_s = relators_from_graph(s)
    fwd = induced_hom(t, s, rho)
    bwd = induced_hom(s, t, tuple(inv))
    assert is_homomorphism(p_t, p_s, fwd, budget)
    assert is_homomorphism(p_s, p_t, bwd, budget)
    for i in range(t.n):
        if not p_t.equal(apply_hom(bwd, fwd[i]), (gen(i),), budget):
            return None
    for j in range(s.n):
        if not p_s.equal(apply_hom(fwd, bwd[j]), (gen(j),), budget):
            return None
    return rho, 1
