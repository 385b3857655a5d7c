"""Shared builders and brute-force oracles for the test suite."""

from __future__ import annotations

import itertools
import random

from quiverres import Quiver
from quiverres.quiver import euler_quadratic, positive_roots
from quiverres.reps import Decomposition, directed_partition_1step


def bipartite(vertices, edges, flip: bool = False) -> Quiver:
    """Source-sink orientation of a tree: sources are one colour class."""
    colour = {vertices[0]: 0}
    pending = [vertices[0]]
    while pending:
        v = pending.pop()
        for a, b in edges:
            for x, y in ((a, b), (b, a)):
                if x == v and y not in colour:
                    colour[y] = 1 - colour[v]
                    pending.append(y)
    arrows = []
    for a, b in edges:
        t, h = (a, b) if (colour[a] == 0) != flip else (b, a)
        arrows.append((t, h))
    return Quiver.from_edges(vertices, arrows)


def path_edges(n):
    return [(i, i + 1) for i in range(1, n)]


def type_a(n, flip=False) -> Quiver:
    return bipartite(list(range(1, n + 1)), path_edges(n), flip)


def type_d(n, flip=False) -> Quiver:
    # branch vertex n-2 carries the two short arms n-1 and n
    return bipartite(list(range(1, n + 1)), path_edges(n - 1) + [(n - 2, n)], flip)


def type_e6(flip=False) -> Quiver:
    return bipartite(list(range(1, 7)), [(1, 2), (2, 3), (3, 4), (4, 5), (3, 6)], flip)


def linear_a(n) -> Quiver:
    return Quiver.from_edges(list(range(1, n + 1)), path_edges(n))


def box_roots(q: Quiver, bound: int = 6):
    """Every nonzero d with entries <= bound and E_Q(d) = 1."""
    return sorted(d for d in itertools.product(range(bound + 1), repeat=len(q))
                  if any(d) and euler_quadratic(q, d) == 1)


def random_instances(count: int, seed: int = 20240517, max_rank: int = 5, max_entry: int = 4):
    """Random source-sink A_n / D_n decompositions with a proper 1-step split.

    Yields ``(label, quiver, decomposition, partition)``; deterministic in ``seed``.
    """
    rng = random.Random(seed)
    found = 0
    while found < count:
        kind = rng.choice("AD")
        n = rng.randint(2, max_rank) if kind == "A" else rng.randint(4, max_rank)
        q = (type_a if kind == "A" else type_d)(n, flip=rng.random() < 0.5)
        roots = positive_roots(q)
        pairs, dim = [], [0] * n
        for _ in range(rng.randint(2, 6)):
            r = rng.choice(roots)
            m = rng.randint(1, 2)
            if all(dim[i] + m * r[i] <= max_entry for i in range(n)):
                pairs.append((r, m))
                dim = [dim[i] + m * r[i] for i in range(n)]
        if len({r for r, _ in pairs}) < 2:
            continue
        dec = Decomposition.from_pairs(q, pairs)
        part = directed_partition_1step(q, dec)
        if part is None or not part.first or not part.second:
            continue
        found += 1
        yield f"{kind}{n}", q, dec, part
