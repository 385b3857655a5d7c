"""Bott's algorithm for GL(d) weights on a Grassmannian.

A vertex weight has a quotient block (length gamma) followed by a
subbundle block (length beta).  With rho = (d-1, ..., 1, 0) the weight
w + rho either has a repeated entry (all cohomology vanishes) or is sorted
by N adjacent exchanges, giving H^N with highest weight sort(w + rho) - rho.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .schur import conjugate, negate_reverse


@dataclass(frozen=True)
class GLWeight:
    entries: tuple[int, ...]
    blocks: tuple[int, int]  # (quotient length, subbundle length)

    def __post_init__(self):
        g, b = self.blocks
        if g + b != len(self.entries):
            raise ValueError(f"blocks {self.blocks} do not cover weight {self.entries}")
        for part in (self.entries[:g], self.entries[g:]):
            if any(x < y for x, y in itertools.pairwise(part)):
                raise ValueError(f"block {part} of {self.entries} is not weakly decreasing")

    def __len__(self):
        return len(self.entries)


@dataclass(frozen=True)
class BottResult:
    degree: int
    weight: tuple[int, ...]


def assemble_source_weight(lam, beta: int, gamma: int) -> GLWeight:
    """``(0^gamma, lam)`` with lam padded to length beta (weight of S_lam R)."""
    lam = tuple(lam)
    if len(lam) > beta:
        raise ValueError(f"{lam} has more than {beta} rows")
    return GLWeight((0,) * gamma + lam + (0,) * (beta - len(lam)), (gamma, beta))


def assemble_sink_weight(lam, beta: int, gamma: int) -> GLWeight:
    """Weight of S_{lam'} Q^*: the negated, reversed conjugate padded to gamma, then beta zeros."""
    return sink_weight(conjugate(lam), beta, gamma)


def sink_weight(mu, beta: int, gamma: int) -> GLWeight:
    """Weight of S_mu Q^* on a vertex with subbundle rank beta and quotient rank gamma."""
    mu = tuple(mu)
    if len(mu) > gamma:
        raise ValueError(f"{mu} has more than {gamma} rows")
    return GLWeight(negate_reverse(mu, gamma) + (0,) * beta, (gamma, beta))


def _inversions(seq) -> int:
    # pairs i < j with seq[i] < seq[j]; merge sort count
    def sort(s):
        if len(s) <= 1:
            return s, 0
        mid = len(s) // 2
        left, a = sort(s[:mid])
        right, b = sort(s[mid:])
        merged, count, i, j = [], a + b, 0, 0
        while i < len(left) and j < len(right):
            if left[i] >= right[j]:
                merged.append(left[i])
                i += 1
            else:
                merged.append(right[j])
                count += len(left) - i
                j += 1
        merged.extend(left[i:])
        merged.extend(right[j:])
        return merged, count

    return sort(list(seq))[1]


def bott(w) -> BottResult | None:
    """Cohomology of the line-bundle weight ``w``; ``None`` when it all vanishes."""
    entries = w.entries if isinstance(w, GLWeight) else tuple(w)
    d = len(entries)
    shifted = [x + d - 1 - i for i, x in enumerate(entries)]
    if len(set(shifted)) != d:
        return None
    dominant = tuple(x - (d - 1 - i) for i, x in enumerate(sorted(shifted, reverse=True)))
    return BottResult(_inversions(shifted), dominant)


def bubble_exchanges(w) -> tuple[int, list[tuple[int, ...]]] | None:
    """Literal Bott exchange trace: repeatedly swap an adjacent ascent of w + rho.

    Returns the number of exchanges and the trace of intermediate weights
    (``None`` if a repeat appears).  Kept for auditing :func:`bott`.
    """
    entries = w.entries if isinstance(w, GLWeight) else tuple(w)
    d = len(entries)
    s = [x + d - 1 - i for i, x in enumerate(entries)]
    rho = [d - 1 - i for i in range(d)]
    trace = [tuple(entries)]
    n = 0
    changed = True
    while changed:
        changed = False
        for i in range(d - 1):
            if s[i] == s[i + 1]:
                return None
            if s[i] < s[i + 1]:
                s[i], s[i + 1] = s[i + 1], s[i]
                n += 1
                changed = True
                trace.append(tuple(x - r for x, r in zip(s, rho)))
    if len(set(s)) != d:
        return None
    return n, trace


def exchange_count_u(lam, block: int) -> int:
    """Largest u with lam_u - block >= u (0 if none)."""
    u = 0
    for i, x in enumerate(tuple(lam), 1):
        if x - block >= i:
            u = i
    return u


def source_exchange_formula(lam, gamma: int) -> tuple[int, int]:
    """(u, gamma * u) for a source weight (0^gamma, lam)."""
    u = exchange_count_u(lam, gamma)
    return u, gamma * u


def sink_exchange_formula(mu, beta: int) -> tuple[int, int]:
    """(u, beta * u) for a sink weight (-mu reversed, 0^beta); ``mu`` is the conjugate-side shape."""
    u = exchange_count_u(mu, beta)
    return u, beta * u
