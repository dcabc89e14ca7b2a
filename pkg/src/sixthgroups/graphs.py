"""Finite simple graphs on vertices 0..n-1, plus the brute-force oracles
for induced embeddability, isomorphism, rigidity and the tree check.

Everything here is deliberately naive: these functions serve as ground
truth for the group-theoretic machinery, so they must be trivially
correct.  Vertex counts are expected to stay small (n <= 8 or so).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import FrozenSet, Iterator, Optional, Tuple

DEFAULT_MAX_N = 8


class GraphFormatError(ValueError):
    pass


def _norm_edge(i: int, j: int) -> Tuple[int, int]:
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: FrozenSet[Tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("negative vertex count")
        for i, j in self.edges:
            if not (0 <= i < j < self.n):
                raise ValueError(f"edge ({i},{j}) out of range for n={self.n}")

    def adj(self, i: int, j: int) -> bool:
        if i == j:
            return False
        return _norm_edge(i, j) in self.edges

    def neighbors(self, v: int):
        return [u for u in range(self.n) if self.adj(v, u)]


def graph(n: int, edges=()) -> Graph:
    return Graph(n, frozenset(_norm_edge(i, j) for i, j in edges))


def parse_graph(text: str) -> Graph:
    n = None
    edges = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "n":
            if n is not None:
                raise GraphFormatError(f"line {lineno}: duplicate n line")
            if len(parts) != 2 or not parts[1].isdigit():
                raise GraphFormatError(f"line {lineno}: bad n line {line!r}")
            n = int(parts[1])
        elif parts[0] == "e":
            if n is None:
                raise GraphFormatError(f"line {lineno}: edge before n line")
            if len(parts) != 3 or not parts[1].isdigit() or not parts[2].isdigit():
                raise GraphFormatError(f"line {lineno}: bad edge line {line!r}")
            i, j = int(parts[1]), int(parts[2])
            if not i < j:
                raise GraphFormatError(f"line {lineno}: edge must have i < j")
            if j >= n:
                raise GraphFormatError(f"line {lineno}: vertex {j} out of range")
            if (i, j) in edges:
                raise GraphFormatError(f"line {lineno}: duplicate edge ({i},{j})")
            edges.add((i, j))
        else:
            raise GraphFormatError(f"line {lineno}: unknown directive {parts[0]!r}")
    if n is None:
        raise GraphFormatError("missing n line")
    return Graph(n, frozenset(edges))


def format_graph(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines += [f"e {i} {j}" for i, j in sorted(g.edges)]
    return "\n".join(lines) + "\n"


def load_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def all_graphs(n: int) -> Iterator[Graph]:
    """All labeled graphs on n vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, frozenset(p for k, p in enumerate(pairs) if mask >> k & 1))


def _canonical_mask(g: Graph) -> int:
    pairs = list(itertools.combinations(range(g.n), 2))
    best = None
    for perm in itertools.permutations(range(g.n)):
        mask = 0
        for k, (i, j) in enumerate(pairs):
            if g.adj(perm[i], perm[j]):
                mask |= 1 << k
        if best is None or mask < best:
            best = mask
    return 0 if best is None else best


def nonisomorphic_graphs(n: int) -> list:
    """One representative per isomorphism class of graphs on n vertices."""
    seen = {}
    for g in all_graphs(n):
        seen.setdefault(_canonical_mask(g), g)
    return [seen[k] for k in sorted(seen)]


def graphs_up_to(n: int) -> list:
    out = []
    for k in range(1, n + 1):
        out.extend(nonisomorphic_graphs(k))
    return out


def _injections(k: int, n: int):
    # Lexicographic order over the image tuples.
    return itertools.permutations(range(n), k)


def induced_embeds(t: Graph, s: Graph) -> Optional[Tuple[int, ...]]:
    """Lexicographically least induced embedding of t into s, or None.

    Adjacency must be preserved in both directions (the graph quasi-order
    is about induced subgraphs, not subgraphs).
    """
    if t.n > s.n:
        return None
    for f in _injections(t.n, s.n):
        if all(
            t.adj(i, j) == s.adj(f[i], f[j])
            for i, j in itertools.combinations(range(t.n), 2)
        ):
            return f
    return None


def graph_iso(t: Graph, s: Graph) -> Optional[Tuple[int, ...]]:
    if t.n != s.n or len(t.edges) != len(s.edges):
        return None
    return induced_embeds(t, s)


def automorphisms(g: Graph) -> list:
    return [
        perm
        for perm in itertools.permutations(range(g.n))
        if all(
            g.adj(i, j) == g.adj(perm[i], perm[j])
            for i, j in itertools.combinations(range(g.n), 2)
        )
    ]


def is_rigid(g: Graph) -> bool:
    return len(automorphisms(g)) == 1


def is_combinatorial_tree(g: Graph) -> bool:
    if g.n == 0:
        return False
    if len(g.edges) != g.n - 1:
        return False
    seen = {0}
    frontier = [0]
    while frontier:
        v = frontier.pop()
        for u in g.neighbors(v):
            if u not in seen:
                seen.add(u)
                frontier.append(u)
    return len(seen) == g.n
