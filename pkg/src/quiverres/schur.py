"""Partitions, Littlewood-Richardson products and Weyl dimensions.

Partitions are plain tuples of positive integers in weakly decreasing
order; ``()`` is the empty partition.  LR expansions are dicts mapping a
partition to its (positive) multiplicity.
"""

from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction
from functools import cache
from math import prod


def partition(parts) -> tuple[int, ...]:
    """Validate and strip trailing zeros."""
    p = tuple(int(x) for x in parts)
    if any(x < 0 for x in p) or any(a < b for a, b in itertools.pairwise(p)):
        raise ValueError(f"{parts!r} is not a weakly decreasing sequence of nonnegative integers")
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def conjugate(p) -> tuple[int, ...]:
    p = tuple(p)
    if not p:
        return ()
    return tuple(sum(1 for x in p if x >= j) for j in range(1, p[0] + 1))


def negate_reverse(p, pad_to: int) -> tuple[int, ...]:
    """``(0, ..., 0, -p_last, ..., -p_1)`` of length ``pad_to``."""
    p = tuple(p)
    if len(p) > pad_to:
        raise ValueError(f"partition {p} is longer than {pad_to}")
    return (0,) * (pad_to - len(p)) + tuple(-x for x in reversed(p))


def partitions_in_box(rows: int, cols: int):
    """All partitions with at most ``rows`` parts, each at most ``cols``."""
    def rec(prefix, remaining, bound):
        yield prefix
        if remaining == 0:
            return
        for x in range(min(bound, cols), 0, -1):
            yield from rec(prefix + (x,), remaining - 1, x)

    if rows <= 0 or cols <= 0:
        yield ()
        return
    yield from rec((), rows, cols)


def partitions_of(n: int, max_length: int | None = None, max_part: int | None = None):
    def rec(remaining, bound, length):
        if remaining == 0:
            yield ()
            return
        if max_length is not None and length >= max_length:
            return
        for x in range(min(remaining, bound), 0, -1):
            for rest in rec(remaining - x, x, length + 1):
                yield (x,) + rest

    yield from rec(n, n if max_part is None else max_part, 0)


def lr_product(p, q, max_length: int | None = None) -> dict:
    """LR expansion of s_p * s_q, keeping shapes with at most ``max_length`` rows.

    Counts LR tableaux of shape nu/p and content q: the letters k form a
    horizontal strip added on top of the previous shape, and the reverse
    row reading word is a lattice word (in rows 1..r, the number of k's is at
    most the number of (k-1)'s in rows 1..r-1).
    """
    return dict(_lr_product(tuple(p), tuple(q), max_length))


@cache
def _lr_product(p, q, max_length):
    if not q:
        return {} if max_length is not None and len(p) > max_length else {p: 1}
    if not p:
        return {} if max_length is not None and len(q) > max_length else {q: 1}
    limit = len(p) + len(q) if max_length is None else min(max_length, len(p) + len(q))
    result = Counter()

    def place(shape, k, prev_counts):
        # shape: current rows (length == limit, zero padded); prev_counts: per-row count of letter k-1
        if k > len(q):
            result[partition(shape)] += 1
            return
        need = q[k - 1]
        counts = [0] * limit

        def row(r, left, above_prev, above_k):
            # above_prev: #(k-1) in rows < r ; above_k: #k in rows < r
            if left == 0:
                place(new_shape, k + 1, counts[:])
                return
            if r >= limit:
                return
            cap_strip = shape[r - 1] - shape[r] if r > 0 else left
            cap_lattice = above_prev - above_k if k > 1 else left
            for c in range(min(left, cap_strip, cap_lattice), -1, -1):
                new_shape[r] = shape[r] + c
                counts[r] = c
                row(r + 1, left - c, above_prev + prev_counts[r], above_k + c)
                new_shape[r] = shape[r]
                counts[r] = 0

        new_shape = list(shape)
        row(0, need, 0, 0)

    start = list(p[:limit]) + [0] * (limit - min(len(p), limit))
    if len(p) > limit:
        return {}
    place(start, 1, [0] * limit)
    return dict(result)


def lr_multi(ps, max_length: int | None = None) -> dict:
    """Iterated LR product of several partitions, truncating at each stage."""
    acc = {(): 1}
    for p in ps:
        nxt = Counter()
        for nu, m in acc.items():
            for mu, c in _lr_product(nu, tuple(p), max_length).items():
                nxt[mu] += m * c
        acc = nxt
    return {k: v for k, v in acc.items() if v}


def cauchy_exterior(t: int, rank_r: int, rank_q: int) -> list[tuple[int, ...]]:
    """Shapes lambda with S_lambda R (x) S_lambda' Q* a summand of the t-th exterior power of R (x) Q*."""
    return list(partitions_of(t, max_length=rank_r, max_part=rank_q))


def weyl_polynomial(weight) -> Fraction:
    """The Weyl dimension product evaluated on any integer sequence.

    On a dominant weight this is the dimension; on w it equals
    sign * dim of the Bott-sorted weight, or 0 when w + rho has a repeat.
    """
    w = tuple(weight)
    d = len(w)
    num = prod(w[i] - w[j] + j - i for i in range(d) for j in range(i + 1, d))
    den = prod(j - i for i in range(d) for j in range(i + 1, d))
    return Fraction(num, den)


def weyl_dim(weight, d: int | None = None) -> int:
    """Dimension of the irreducible GL(d)-module with highest weight ``weight``."""
    w = tuple(weight)
    if d is not None and len(w) != d:
        raise ValueError(f"weight {w} does not have length {d}")
    if any(a < b for a, b in itertools.pairwise(w)):
        raise ValueError(f"weight {w} is not dominant")
    v = weyl_polynomial(w)
    assert v.denominator == 1
    return int(v)


def lemma31_holds(p, a: int, b: int) -> bool:
    """Row/column box-count inequality, checked in both orientations."""
    p = tuple(p)
    pc = conjugate(p)

    def one(rows, cols):
        lhs = sum(rows[:a])
        rhs = a * b + sum(cols[b:])
        return lhs <= rhs

    return one(p, pc) and one(pc, p)


def lemma32_holds(p, q, k: int) -> bool:
    """Partial-sum bound for every shape in the LR product of p and q."""
    bound = sum(tuple(p)[:k]) + sum(tuple(q)[:k])
    return all(sum(nu[:k]) <= bound for nu in _lr_product(tuple(p), tuple(q), None))
