"""The explicit countable random graph on vertices {2, 3, ...}:
m and n are adjacent iff p_m | n or p_n | m, with p_0 = 2, p_1 = 3, ...

The extension-property witness search is exact but not a linear scan:
p_x > x always, so once a candidate x exceeds every vertex in play the
p_x-divides route is dead and a valid x must be a common multiple of
{p_y : y in A}.  The only candidates below that closed form are indices
of primes dividing some member of A.

Vertex values grow roughly like iterated nth-primes under the greedy
embedding, so nth_prime carries an index budget; exceeding it raises
PrimeBudgetError rather than silently stalling.  Primes handed out are
remembered so that indices of huge primes met again as factors can be
recovered without re-sieving.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from typing import Dict, Iterable, List, Set

import numpy as np

from .graphs import Graph

DEFAULT_MAX_PRIME_INDEX = 20_000_000
_SCAN_LIMIT = 2_000_000
_MAX_SIEVE = 200_000_000


class PrimeBudgetError(RuntimeError):
    pass


_primes: np.ndarray = np.array([], dtype=np.int64)
_sieve_limit = 0
_index_of: Dict[int, int] = {}


def _extend_sieve(limit: int) -> None:
    global _primes, _sieve_limit
    if limit <= _sieve_limit:
        return
    if limit > _MAX_SIEVE:
        raise PrimeBudgetError(f"sieve limit {limit} exceeds {_MAX_SIEVE}")
    limit = min(max(limit, 1 << 16, _sieve_limit * 2), _MAX_SIEVE)
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, int(limit**0.5) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    _primes = np.flatnonzero(flags).astype(np.int64)
    _sieve_limit = limit


def nth_prime(i: int, max_index: int = DEFAULT_MAX_PRIME_INDEX) -> int:
    """The i-th prime with p_0 = 2."""
    if i < 0:
        raise ValueError("negative prime index")
    if i > max_index:
        raise PrimeBudgetError(
            f"prime index {i} exceeds budget {max_index}; the requested "
            f"construction is out of desk-scale range"
        )
    while i >= len(_primes):
        # p_i < (i+1)(ln(i+1) + ln ln(i+1)) for i >= 5; pad generously.
        guess = int((i + 1) * (math.log(i + 2) + math.log(math.log(i + 3)) + 2))
        _extend_sieve(max(guess, 1 << 16))
    p = int(_primes[i])
    _index_of[p] = i
    return p


def prime_index(p: int) -> int:
    """Index i with p_i = p.  Works for sieved primes and for primes
    previously produced by nth_prime; raises ValueError on composites
    and PrimeBudgetError when p is an unknown prime out of sieve range."""
    if p in _index_of:
        return _index_of[p]
    if p > _MAX_SIEVE:
        raise PrimeBudgetError(f"cannot locate index of unknown prime {p}")
    _extend_sieve(p)
    i = bisect_left(_primes, p)
    if i >= len(_primes) or int(_primes[i]) != p:
        raise ValueError(f"{p} is not prime")
    _index_of[p] = i
    return i


def prime_factors(y: int) -> List[int]:
    """Distinct prime factors, by trial division up to sqrt(y)."""
    if y < 2:
        return []
    root = math.isqrt(y)
    _extend_sieve(max(min(root + 1, _MAX_SIEVE), 1 << 16))
    if root >= _sieve_limit:
        raise PrimeBudgetError(f"refusing to factor {y}: too large")
    out = []
    rem = y
    for p in _primes[: bisect_left(_primes, root + 1)]:
        p = int(p)
        if p * p > rem:
            break
        if rem % p == 0:
            out.append(p)
            while rem % p == 0:
                rem //= p
    if rem > 1:
        out.append(rem)
    return out


def _check_vertex(v: int) -> None:
    if v < 2:
        raise ValueError(f"vertex {v} out of range: vertices start at 2")


def adjacent(m: int, n: int, max_index: int = DEFAULT_MAX_PRIME_INDEX) -> bool:
    _check_vertex(m)
    _check_vertex(n)
    if m == n:
        raise ValueError("adjacency is only defined for distinct vertices")
    # p_k > k, so p_m can only divide n if m < n (and vice versa).
    if m < n:
        return n % nth_prime(m, max_index) == 0
    return m % nth_prime(n, max_index) == 0


def _valid_witness(x: int, a: Set[int], b: Set[int], max_index: int) -> bool:
    if x < 2 or x in a or x in b:
        return False
    larger = [v for v in a | b if v > x]
    px = nth_prime(x, max_index) if larger else None
    for y in a:
        if y > x:
            if y % px != 0:
                return False
        elif x % nth_prime(y, max_index) != 0:
            return False
    for z in b:
        if z > x:
            if z % px == 0:
                return False
        elif x % nth_prime(z, max_index) == 0:
            return False
    return True


def extension_witness(
    a: Iterable[int],
    b: Iterable[int],
    max_index: int = DEFAULT_MAX_PRIME_INDEX,
) -> int:
    """Least vertex adjacent to everything in a and nothing in b."""
    a, b = set(a), set(b)
    for v in a | b:
        _check_vertex(v)
    if a & b:
        raise ValueError("witness sets must be disjoint")
    if not a:
        # Plain scan; valid vertices have positive density.
        for x in range(2, _SCAN_LIMIT):
            if _valid_witness(x, a, b, max_index):
                return x
        raise PrimeBudgetError("no witness found within scan limit")
    # Candidates below the closed form: indices of primes dividing some
    # y in a (these are the only x with p_x | y available).
    candidates = set()
    for y in a:
        for q in prime_factors(y):
            candidates.add(prime_index(q))
    for x in sorted(candidates):
        if _valid_witness(x, a, b, max_index):
            return x
    # Closed form: common multiples of {p_y : y in a}.
    m = 1
    for y in sorted(a):
        m *= nth_prime(y, max_index)
    for k in range(1, 1001):
        x = k * m
        if _valid_witness(x, a, b, max_index):
            return x
    raise AssertionError("runaway witness search")


def embed_graph(t: Graph, max_index: int = DEFAULT_MAX_PRIME_INDEX) -> Dict[int, int]:
    """Greedy induced embedding of t, vertex by vertex."""
    images: Dict[int, int] = {}
    for v in range(t.n):
        a = {images[u] for u in range(v) if t.adj(u, v)}
        b = {images[u] for u in range(v) if not t.adj(u, v)}
        images[v] = extension_witness(a, b, max_index)
    return images
