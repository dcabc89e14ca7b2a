"""Tabulate element orders in the graph groups over all small graphs.

For every isomorphism type up to --max-n vertices, reports the orders of
generators, generator pairs, and a sample of longer words.  The pair
orders read the graph back off the group: 11 on edges, 13 on non-edges.

Usage: python scripts/torsion_spectrum.py [--max-n 4] [--samples 10]
"""

import argparse
import itertools
import random
from collections import Counter

from sixthgroups.graphs import graphs_up_to
from sixthgroups.presentation import INFINITE
from sixthgroups.reduction import reduced_words, relators_from_graph
from sixthgroups.words import gen


def spectrum(t, samples, rng):
    pres = relators_from_graph(t)
    counts = Counter()
    for i in range(t.n):
        counts[pres.order((gen(i),))] += 1
    for i, j in itertools.combinations(range(t.n), 2):
        counts[pres.order((gen(i), gen(j)))] += 1
    pool = [w for w in reduced_words(t.n, 4) if len(w) >= 3]
    for w in rng.sample(pool, min(samples, len(pool))):
        counts[pres.order(w)] += 1
    return counts


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-n", type=int, default=4)
    parser.add_argument("--samples", type=int, default=10)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    rng = random.Random(args.seed)
    for t in graphs_up_to(args.max_n):
        counts = spectrum(t, args.samples, rng)
        shown = ", ".join(
            f"{'INF' if o == INFINITE else int(o)}x{c}"
            for o, c in sorted(counts.items(), key=lambda oc: float(oc[0]))
        )
        print(f"n={t.n} edges={sorted(t.edges)}: {shown}")


if __name__ == "__main__":
    main()
