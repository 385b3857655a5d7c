"""Explicit representations of Dynkin quivers over the rationals.

Indecomposables are built with BGP reflection functors; Hom spaces are
kernels of the commuting-square map, and Ext follows from the Euler form
since path algebras of acyclic quivers are hereditary.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache
from itertools import product

from .errors import InvariantViolation, QuiverError
from .linalg import left_kernel, rank
from .quiver import Quiver, classify, euler_bilinear, positive_roots, simple_reflection


@dataclass(frozen=True)
class QuiverRep:
    """Vector spaces Q^dim[x] and, per arrow, a ``dim[head] x dim[tail]`` matrix."""

    quiver: Quiver
    dim: tuple[int, ...]
    maps: dict = field(hash=False, compare=False)

    def __post_init__(self):
        q = self.quiver
        for a, arrow in enumerate(q.arrows):
            t, h = q.ends(a)
            m = self.maps[arrow.id]
            if len(m) != self.dim[h] or any(len(row) != self.dim[t] for row in m):
                raise QuiverError(f"map for arrow {arrow.id!r} does not have shape {self.dim[h]}x{self.dim[t]}")

    def matrix(self, a: int):
        return self.maps[self.quiver.arrows[a].id]


def simple_rep(q: Quiver, x: int) -> QuiverRep:
    dim = tuple(int(i == x) for i in range(len(q)))
    maps = {arrow.id: [[Fraction(0)] * dim[t] for _ in range(dim[h])]
            for arrow, (t, h) in zip(q.arrows, (q.ends(a) for a in range(len(q.arrows))))}
    return QuiverRep(q, dim, maps)


def _admissible_sinks(q: Quiver) -> list[int]:
    """An ordering x1..xn such that x_k is a sink after reflecting at x1..x_{k-1}."""
    order, cur = [], q
    remaining = list(range(len(q)))
    while remaining:
        x = next((v for v in remaining if cur.is_sink(v)), None)
        if x is None:
            raise QuiverError("quiver has an oriented cycle; no admissible ordering")
        order.append(x)
        remaining.remove(x)
        cur = cur.reflect(x)
    return order


def _reflect_source(rep: QuiverRep, x: int, target: Quiver) -> QuiverRep:
    """Reflection functor at a source x of ``rep.quiver``; x becomes a sink of ``target``."""
    q = rep.quiver
    out = q.outgoing(x)
    blocks = []
    phi = []
    for a in out:
        _, h = q.ends(a)
        m = rep.matrix(a)
        blocks.append((a, len(phi), rep.dim[h]))
        phi.extend(m)
    # rows of c span the left kernel of phi, so c is the projection onto coker(phi)
    c = left_kernel(phi, rep.dim[x]) if phi else []
    if len(phi) - len(c) != rep.dim[x]:
        raise InvariantViolation("reflection functor applied to a non-injective source map")
    dim = list(rep.dim)
    dim[x] = len(c)
    maps = dict(rep.maps)
    for a, start, size in blocks:
        maps[q.arrows[a].id] = [row[start:start + size] for row in c]
    return QuiverRep(target, tuple(dim), maps)


@cache
def indecomposable(q: Quiver, root: tuple[int, ...]) -> QuiverRep:
    """The indecomposable representation of dimension ``root`` (a positive root of a Dynkin quiver)."""
    root = q.dim(root)
    if root not in set(positive_roots(q)):
        raise QuiverError(f"{root} is not a positive root of {classify(q)}")
    order = _admissible_sinks(q)
    steps = []
    cur, alpha = q, root
    k = 0
    while True:
        x = order[k % len(order)]
        if sum(alpha) == 1 and alpha[x] == 1:
            break
        reflected = simple_reflection(cur, alpha, x)
        if min(reflected) < 0:
            raise InvariantViolation(f"reflection at sink {x} sent {alpha} to {reflected}")
        steps.append((x, cur))
        alpha, cur = reflected, cur.reflect(x)
        k += 1
    rep = simple_rep(cur, x)
    for x, before in reversed(steps):
        rep = _reflect_source(rep, x, before)
    if rep.dim != root:
        raise InvariantViolation(f"constructed dimension {rep.dim} differs from root {root}")
    return rep


def hom_dim(q: Quiver, m: QuiverRep, n: QuiverRep) -> int:
    """dim Hom(M, N): kernel of (phi_x) -> (N(a) phi_ta - phi_ha M(a))_a."""
    offsets, nvars = [], 0
    for x in range(len(q)):
        offsets.append(nvars)
        nvars += n.dim[x] * m.dim[x]
    if nvars == 0:
        return 0

    def var(x, i, j):  # entry (i, j) of phi_x : M_x -> N_x
        return offsets[x] + i * m.dim[x] + j

    rows = []
    for a in range(len(q.arrows)):
        t, h = q.ends(a)
        ma, na = m.matrix(a), n.matrix(a)
        for r, c in product(range(n.dim[h]), range(m.dim[t])):
            row = [0] * nvars
            for s in range(n.dim[t]):
                if na[r][s]:
                    row[var(t, s, c)] += na[r][s]
            for s in range(m.dim[h]):
                if ma[s][c]:
                    row[var(h, r, s)] -= ma[s][c]
            if any(row):
                rows.append(row)
    return nvars - rank(rows, nvars)


def ext_dim(q: Quiver, m: QuiverRep, n: QuiverRep) -> int:
    e = hom_dim(q, m, n) - euler_bilinear(q, m.dim, n.dim)
    if e < 0:
        raise InvariantViolation(f"negative Ext dimension {e} between {m.dim} and {n.dim}")
    return e


@cache
def _indec_hom_ext(q: Quiver, a: tuple, b: tuple) -> tuple[int, int]:
    xa, xb = indecomposable(q, a), indecomposable(q, b)
    return hom_dim(q, xa, xb), ext_dim(q, xa, xb)


@dataclass(frozen=True)
class Decomposition:
    """Multiplicities of indecomposable summands, keyed by positive root."""

    multiplicities: tuple[tuple[tuple[int, ...], int], ...]

    @classmethod
    def from_pairs(cls, q: Quiver, pairs) -> Decomposition:
        roots = set(positive_roots(q))
        acc: dict = {}
        for root, mult in pairs:
            root = q.dim(root)
            if root not in roots:
                raise QuiverError(f"{root} is not a positive root")
            if mult < 1:
                raise QuiverError(f"multiplicity of {root} must be >= 1, got {mult}")
            acc[root] = acc.get(root, 0) + mult
        return cls(tuple(sorted(acc.items())))

    @property
    def support(self) -> list[tuple[int, ...]]:
        return [r for r, _ in self.multiplicities]

    def dimension(self) -> tuple[int, ...]:
        if not self.multiplicities:
            return ()
        n = len(self.multiplicities[0][0])
        return tuple(sum(m * r[i] for r, m in self.multiplicities) for i in range(n))


def end_dim(q: Quiver, dec: Decomposition) -> int:
    return sum(ma * mb * _indec_hom_ext(q, a, b)[0]
               for a, ma in dec.multiplicities for b, mb in dec.multiplicities)


def orbit_dim(q: Quiver, dec: Decomposition) -> int:
    """dim of the GL-orbit of the direct sum: sum_x d_x^2 - dim End V."""
    d = dec.dimension()
    return sum(n * n for n in d) - end_dim(q, dec)


def orbit_codim(q: Quiver, dec: Decomposition) -> int:
    return q.rep_space_dim(dec.dimension()) - orbit_dim(q, dec)


@dataclass(frozen=True)
class DirectedPartition:
    first: tuple  # I_1
    second: tuple  # I_2, the part spanning the subrepresentation
    beta: tuple[int, ...]


def _split_ok(q, first, second) -> bool:
    for part in (first, second):
        for a in part:
            for b in part:
                if _indec_hom_ext(q, a, b)[1]:
                    return False
    for a in first:
        for b in second:
            if _indec_hom_ext(q, b, a)[0] or _indec_hom_ext(q, a, b)[1]:
                return False
    return True


def directed_partition_1step(q: Quiver, dec: Decomposition) -> DirectedPartition | None:
    """First bipartition of the support satisfying the directedness conditions.

    Proper splits are tried in binary-counter order (bit k set puts the k-th
    support root, in root order, into the second part); the trivial split with
    an empty second part is tried last.
    """
    if not classify(q).is_dynkin:
        return None
    support = dec.support
    mult = dict(dec.multiplicities)
    n = len(support)
    masks = list(range(1, 2 ** n - 1)) + [0]
    for mask in masks:
        second = tuple(r for k, r in enumerate(support) if mask >> k & 1)
        first = tuple(r for k, r in enumerate(support) if not mask >> k & 1)
        if _split_ok(q, first, second):
            beta = tuple(sum(mult[r] * r[i] for r in second) for i in range(len(q)))
            return DirectedPartition(first, second, beta)
    return None


def all_directed_partitions(q: Quiver, dec: Decomposition) -> list[DirectedPartition]:
    support = dec.support
    mult = dict(dec.multiplicities)
    out = []
    for mask in range(2 ** len(support)):
        second = tuple(r for k, r in enumerate(support) if mask >> k & 1)
        first = tuple(r for k, r in enumerate(support) if not mask >> k & 1)
        if _split_ok(q, first, second):
            beta = tuple(sum(mult[r] * r[i] for r in second) for i in range(len(q)))
            out.append(DirectedPartition(first, second, beta))
    return out
