"""Quivers, dimension vectors, the Euler form and positive roots."""

from __future__ import annotations

from collections import Counter, defaultdict
from collections.abc import Mapping
from dataclasses import dataclass
from functools import cached_property

from .errors import QuiverError, UnsupportedQuiver


@dataclass(frozen=True)
class Arrow:
    id: str
    tail: object
    head: object


@dataclass(frozen=True)
class Quiver:
    """A finite quiver.  Vertex and arrow order is the declared input order.

    Vertex ids may be strings or integers; dictionaries keyed by vertex (as
    they come out of JSON) are matched on ``str(vertex)``.
    """

    vertices: tuple
    arrows: tuple[Arrow, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "arrows", tuple(self.arrows))
        keys = [str(v) for v in self.vertices]
        if len(set(keys)) != len(keys):
            raise QuiverError(f"duplicate vertex ids in {list(self.vertices)}")
        ids = [a.id for a in self.arrows]
        if len(set(ids)) != len(ids):
            dup = sorted(k for k, c in Counter(ids).items() if c > 1)
            raise QuiverError(f"duplicate arrow ids {dup}")
        known = set(keys)
        for a in self.arrows:
            if str(a.tail) not in known or str(a.head) not in known:
                raise QuiverError(f"arrow {a.id!r} joins undeclared vertices {a.tail!r} -> {a.head!r}")
            if str(a.tail) == str(a.head):
                raise QuiverError(f"arrow {a.id!r} is a loop; loops are not supported")

    @classmethod
    def from_edges(cls, vertices, edges) -> Quiver:
        """Build a quiver from ``(tail, head)`` pairs, naming arrows ``a1, a2, ...``."""
        return cls(tuple(vertices), tuple(Arrow(f"a{i}", t, h) for i, (t, h) in enumerate(edges, 1)))

    @cached_property
    def _index(self) -> dict:
        return {str(v): i for i, v in enumerate(self.vertices)}

    def index(self, v) -> int:
        try:
            return self._index[str(v)]
        except KeyError:
            raise QuiverError(f"unknown vertex {v!r}") from None

    def vertex(self, key):
        """The declared vertex whose id prints as ``key``."""
        return self.vertices[self.index(key)]

    @cached_property
    def _arrow_ends(self) -> tuple[tuple[int, int], ...]:
        return tuple((self.index(a.tail), self.index(a.head)) for a in self.arrows)

    def ends(self, a: int) -> tuple[int, int]:
        """Tail and head vertex *indices* of the a-th arrow."""
        return self._arrow_ends[a]

    def outgoing(self, x: int) -> list[int]:
        return [k for k, (t, _) in enumerate(self._arrow_ends) if t == x]

    def incoming(self, x: int) -> list[int]:
        return [k for k, (_, h) in enumerate(self._arrow_ends) if h == x]

    def is_source(self, x: int) -> bool:
        return not self.incoming(x)

    def is_sink(self, x: int) -> bool:
        return not self.outgoing(x)

    def __len__(self):
        return len(self.vertices)

    def dim(self, d) -> tuple[int, ...]:
        """Normalise a dimension vector (mapping or sequence) to a tuple in vertex order."""
        if isinstance(d, Mapping):
            keys = {str(k) for k in d}
            expected = set(self._index)
            if keys != expected:
                raise QuiverError(
                    f"dimension vector keys {sorted(keys)} do not match vertices {sorted(expected)}"
                )
            out = [0] * len(self.vertices)
            for k, val in d.items():
                out[self._index[str(k)]] = val
        else:
            out = list(d)
            if len(out) != len(self.vertices):
                raise QuiverError(f"dimension vector {out} has length {len(out)}, expected {len(self.vertices)}")
        for val in out:
            if isinstance(val, bool) or not isinstance(val, int) or val < 0:
                raise QuiverError(f"dimension vector entries must be nonnegative integers, got {out}")
        return tuple(out)

    def as_mapping(self, d) -> dict:
        return {str(v): n for v, n in zip(self.vertices, self.dim(d))}

    def reflect(self, x: int) -> Quiver:
        """Reverse every arrow incident to vertex index ``x`` (arrow ids are kept)."""
        arrows = []
        for a, (t, h) in zip(self.arrows, self._arrow_ends):
            if t == x or h == x:
                arrows.append(Arrow(a.id, a.head, a.tail))
            else:
                arrows.append(a)
        return Quiver(self.vertices, tuple(arrows))

    def rep_space_dim(self, d) -> int:
        d = self.dim(d)
        return sum(d[t] * d[h] for t, h in self._arrow_ends)

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "arrows": [{"id": a.id, "from": a.tail, "to": a.head} for a in self.arrows],
        }


def validate_source_sink(q: Quiver) -> bool:
    """True iff no vertex has both an incoming and an outgoing arrow."""
    return all(q.is_source(x) or q.is_sink(x) for x in range(len(q)))


def euler_quadratic(q: Quiver, d) -> int:
    d = q.dim(d)
    return sum(n * n for n in d) - sum(d[q.ends(a)[0]] * d[q.ends(a)[1]] for a in range(len(q.arrows)))


def euler_bilinear(q: Quiver, d, e) -> int:
    """The (non-symmetric) Euler form <d, e>; <d, d> equals :func:`euler_quadratic`."""
    d, e = q.dim(d), q.dim(e)
    total = sum(x * y for x, y in zip(d, e))
    for a in range(len(q.arrows)):
        t, h = q.ends(a)
        total -= d[t] * e[h]
    return total


def symmetric_form(q: Quiver, d, e) -> int:
    return euler_bilinear(q, d, e) + euler_bilinear(q, e, d)


@dataclass(frozen=True)
class GraphClass:
    kind: str  # "dynkin", "extended" or "other"
    family: str | None = None  # "A", "D", "E"
    rank: int | None = None

    @property
    def is_dynkin(self) -> bool:
        return self.kind == "dynkin"

    @property
    def is_extended(self) -> bool:
        return self.kind == "extended"

    @property
    def label(self) -> str:
        if self.kind == "other":
            return "other"
        name = f"{self.family}{self.rank}"
        return name if self.kind == "dynkin" else "~" + name

    def __str__(self):
        return self.label


def connected_components(q: Quiver) -> list[list]:
    adj = defaultdict(set)
    for a in range(len(q.arrows)):
        t, h = q.ends(a)
        adj[t].add(h)
        adj[h].add(t)
    seen, comps = set(), []
    for start in range(len(q)):
        if start in seen:
            continue
        stack, comp = [start], []
        seen.add(start)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        comps.append([q.vertices[i] for i in sorted(comp)])
    return comps


_E_ARMS = {(1, 2, 2): ("dynkin", "E", 6), (1, 2, 3): ("dynkin", "E", 7), (1, 2, 4): ("dynkin", "E", 8),
           (2, 2, 2): ("extended", "E", 6), (1, 3, 3): ("extended", "E", 7), (1, 2, 5): ("extended", "E", 8)}


def classify(q: Quiver) -> GraphClass:
    """ADE / extended ADE / other type of the underlying graph."""
    comps = connected_components(q)
    if len(comps) != 1:
        raise QuiverError(f"quiver is disconnected; components: {comps}")
    n = len(q)
    edges = Counter(frozenset(q.ends(a)) for a in range(len(q.arrows)))
    if any(m > 1 for m in edges.values()):
        if n == 2 and len(edges) == 1 and sum(edges.values()) == 2:
            return GraphClass("extended", "A", 1)
        return GraphClass("other")
    deg = Counter()
    for e in edges:
        for x in e:
            deg[x] += 1
    if len(edges) == n:
        if all(deg[x] == 2 for x in range(n)):
            return GraphClass("extended", "A", n - 1)
        return GraphClass("other")
    if len(edges) != n - 1:
        return GraphClass("other")
    if n == 1 or max(deg.values()) <= 2:
        return GraphClass("dynkin", "A", n)

    nbrs = defaultdict(list)
    for e in edges:
        x, y = tuple(e)
        nbrs[x].append(y)
        nbrs[y].append(x)

    def arm(branch, first):
        length, prev, cur = 1, branch, first
        while deg[cur] == 2:
            prev, cur = cur, next(y for y in nbrs[cur] if y != prev)
            length += 1
        return length, cur

    branches = [x for x in range(n) if deg[x] >= 3]
    if len(branches) == 1:
        b = branches[0]
        arms = sorted(arm(b, y)[0] for y in nbrs[b])
        if deg[b] == 4:
            return GraphClass("extended", "D", 4) if arms == [1, 1, 1, 1] else GraphClass("other")
        if deg[b] > 4:
            return GraphClass("other")
        if arms[0] == arms[1] == 1:
            return GraphClass("dynkin", "D", n)
        kind = _E_ARMS.get(tuple(arms))
        return GraphClass(*kind) if kind else GraphClass("other")
    if len(branches) == 2 and all(deg[b] == 3 for b in branches):
        # ~D_n: each branch vertex carries two leaves
        for b in branches:
            leaves = [y for y in nbrs[b] if deg[y] == 1]
            if len(leaves) != 2:
                return GraphClass("other")
        return GraphClass("extended", "D", n - 1)
    return GraphClass("other")


def positive_roots(q: Quiver) -> list[tuple[int, ...]]:
    """Positive roots of a Dynkin quiver, sorted lexicographically in vertex order.

    Generated as the closure of the simple roots under simple reflections,
    keeping the positive vectors; these are exactly the d >= 0 with E_Q(d) = 1.
    """
    cls = classify(q)
    if not cls.is_dynkin:
        raise UnsupportedQuiver(f"positive roots are only enumerated for Dynkin quivers, got {cls}")
    n = len(q)
    simples = [tuple(int(i == x) for i in range(n)) for x in range(n)]
    found = set(simples)
    frontier = list(simples)
    while frontier:
        nxt = []
        for root in frontier:
            for x, e in enumerate(simples):
                c = symmetric_form(q, root, e)
                img = tuple(r - c * s for r, s in zip(root, e))
                if min(img) >= 0 and max(img) > 0 and img not in found:
                    found.add(img)
                    nxt.append(img)
        frontier = nxt
    return sorted(found)


def simple_reflection(q: Quiver, d, x: int) -> tuple[int, ...]:
    """s_x(d) = d - (d, e_x) e_x on the root lattice (entries may be negative)."""
    d = tuple(d)
    if len(d) != len(q):
        raise QuiverError(f"vector {d} has length {len(d)}, expected {len(q)}")
    c = 2 * d[x]
    for a in range(len(q.arrows)):
        t, h = q.ends(a)
        if t == x:
            c -= d[h]
        if h == x:
            c -= d[t]
    return tuple(r - c if i == x else r for i, r in enumerate(d))
