"""De Bruijn graphs, weighted subgraphs induced by frequency vectors,
exact Eulerian-cycle counting (BEST theorem), and sequence enumeration."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .errors import DomainError, ResourceCapError
from .freqspace import FrequencyVector
from .seqcore import CyclicSequence, canonicalize

DEFAULT_SEQUENCE_CAP = 20


@dataclass(frozen=True)
class DeBruijnGraph:
    """G_l(p): vertices are the l^p words of length p (0-based indices),
    edges the l^(p+1) words of length p+1."""

    l: int
    p: int

    def __post_init__(self):
        if self.l < 2 or self.p < 0:
            raise DomainError("need l >= 2 and p >= 0")

    @property
    def vertex_count(self) -> int:
        return self.l**self.p

    @property
    def edge_count(self) -> int:
        return self.l ** (self.p + 1)

    def edge_endpoints(self, edge: int) -> tuple[int, int]:
        """Tail = first p letters of the edge word, head = last p letters."""
        if not (0 <= edge < self.edge_count):
            raise DomainError(f"edge index {edge} out of range")
        return edge // self.l, edge % self.vertex_count

    def adjacency(self) -> list[list[int]]:
        """Dense adjacency matrix; test/reference use only (small p)."""
        size = self.vertex_count
        mat = [[0] * size for _ in range(size)]
        for e in range(self.edge_count):
            t, h = self.edge_endpoints(e)
            mat[t][h] += 1
        return mat


class Multigraph:
    """Directed multigraph with an explicit vertex set and edge multiplicities."""

    def __init__(self, vertices: Iterable = (), edges: dict | None = None):
        self.vertices = set(vertices)
        self.edges: dict[tuple, int] = {}
        for (u, v), m in (edges or {}).items():
            self.add_edge(u, v, m)

    def add_edge(self, u, v, mult: int = 1):
        if mult < 0:
            raise DomainError("edge multiplicity must be non-negative")
        if mult == 0:
            return
        self.vertices.add(u)
        self.vertices.add(v)
        self.edges[(u, v)] = self.edges.get((u, v), 0) + mult

    def out_degree(self, v) -> int:
        return sum(m for (u, _), m in self.edges.items() if u == v)

    def in_degree(self, v) -> int:
        return sum(m for (_, w), m in self.edges.items() if w == v)

    def edge_total(self) -> int:
        return sum(self.edges.values())

    def is_balanced(self) -> bool:
        out: dict = {}
        inc: dict = {}
        for (u, v), m in self.edges.items():
            out[u] = out.get(u, 0) + m
            inc[v] = inc.get(v, 0) + m
        return all(out.get(v, 0) == inc.get(v, 0) for v in self.vertices)

    def is_connected(self) -> bool:
        """Connectivity of the undirected support over vertices that carry
        at least one edge; an edgeless graph is not connected."""
        active = set()
        for (u, v), m in self.edges.items():
            if m > 0:
                active.add(u)
                active.add(v)
        if not active:
            return False
        nbrs: dict = {v: set() for v in active}
        for (u, v), m in self.edges.items():
            nbrs[u].add(v)
            nbrs[v].add(u)
        start = next(iter(active))
        seen = {start}
        stack = [start]
        while stack:
            for w in nbrs[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen == active


class WeightedSubgraph:
    """Edge-weighted subgraph of G_l(p) induced by a level-(p+1) frequency
    vector: weight of edge j is the window count Z_j."""

    def __init__(self, base: DeBruijnGraph, weights: dict[int, int]):
        self.base = base
        self.weights = {e: w for e, w in weights.items() if w}
        for e, w in self.weights.items():
            if w < 0:
                raise DomainError("edge weights must be non-negative")
            if not (0 <= e < base.edge_count):
                raise DomainError(f"edge index {e} out of range")

    @classmethod
    def from_frequency(cls, z: FrequencyVector) -> "WeightedSubgraph":
        if z.p < 1:
            raise DomainError("need a frequency vector at level >= 1")
        base = DeBruijnGraph(z.l, z.p - 1)
        return cls(base, dict(z.items()))

    def vertices(self) -> set[int]:
        out = set()
        for e in self.weights:
            t, h = self.base.edge_endpoints(e)
            out.add(t)
            out.add(h)
        return out

    def to_multigraph(self) -> Multigraph:
        g = Multigraph()
        for e, w in self.weights.items():
            t, h = self.base.edge_endpoints(e)
            g.add_edge(t, h, w)
        return g

    def is_connected(self) -> bool:
        return self.to_multigraph().is_connected()

    def to_dot(self) -> str:
        """DOT text with vertex labels = words and edge labels = weights."""
        l, p = self.base.l, self.base.p

        def label(v: int) -> str:
            digits = []
            for _ in range(p):
                digits.append(str(v % l))
                v //= l
            return "".join(reversed(digits)) if digits else "()"

        lines = ["digraph debruijn {"]
        for v in sorted(self.vertices()):
            lines.append(f'  v{v} [label="{label(v)}"];')
        for e in sorted(self.weights):
            t, h = self.base.edge_endpoints(e)
            lines.append(f'  v{t} -> v{h} [label="{self.weights[e]}"];')
        lines.append("}")
        return "\n".join(lines)


def subgraph_from_frequency(z: FrequencyVector) -> WeightedSubgraph:
    """Weighted subgraph A[Z] of G_l(p) induced by a level-(p+1) vector."""
    return WeightedSubgraph.from_frequency(z)


def full_graph(l: int, p: int) -> WeightedSubgraph:
    """G_l(p) with unit weight on every edge."""
    base = DeBruijnGraph(l, p)
    return WeightedSubgraph(base, {e: 1 for e in range(base.edge_count)})


def integer_determinant(mat: list[list[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    m = [row[:] for row in mat]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[-1][-1]


def count_eulerian_cycles(g: Multigraph | WeightedSubgraph) -> int:
    """Eulerian cycles of a connected balanced directed multigraph with
    distinguishable edges, via the BEST theorem.

    Cofactor of the Laplacian (first row/column dropped) times the product
    of (out-degree - 1)! over vertices.
    """
    if isinstance(g, WeightedSubgraph):
        g = g.to_multigraph()
    if not g.edges:
        raise DomainError("graph has no edges")
    if not g.is_balanced():
        raise DomainError("graph is not balanced")
    if not g.is_connected():
        raise DomainError("graph is not connected")
    active = sorted(v for v in g.vertices if any(m for (u, w), m in g.edges.items() if u == v or w == v))
    idx = {v: i for i, v in enumerate(active)}
    k = len(active)
    lap = [[0] * k for _ in range(k)]
    out = [0] * k
    for (u, v), m in g.edges.items():
        iu, iv = idx[u], idx[v]
        out[iu] += m
        lap[iu][iu] += m
        lap[iu][iv] -= m
    minor = [row[1:] for row in lap[1:]]
    cof = integer_determinant(minor)
    result = cof
    for d in out:
        result *= math.factorial(d - 1)
    return result


def count_debruijn_sequences(l: int, p: int) -> int:
    """(l!)^(l^(p-1)) / l^p, exact."""
    if p < 1 or l < 2:
        raise DomainError("need p >= 1 and l >= 2")
    num = math.factorial(l) ** (l ** (p - 1))
    assert num % l**p == 0
    return num // l**p


def enumerate_sequences_with_frequency(
    z: FrequencyVector, cap_n: int = DEFAULT_SEQUENCE_CAP
) -> list[CyclicSequence]:
    """All distinct cyclic sequences whose level-p window counts equal z.

    Exhaustive Eulerian-circuit backtracking on the weighted multigraph,
    with rotation dedup via canonicalization. Empty when the subgraph is
    disconnected.
    """
    if z.p < 1:
        raise DomainError("need a frequency vector at level >= 1")
    n, l = z.n, z.l
    if n > cap_n:
        raise ResourceCapError(f"n = {n} exceeds the enumeration cap {cap_n}")
    vsize = l ** (z.p - 1)
    # Flow balance at each vertex (precondition for realizability).
    out: dict[int, int] = {}
    inc: dict[int, int] = {}
    for e, w in z.items():
        t, h = e // l, e % vsize
        out[t] = out.get(t, 0) + w
        inc[h] = inc.get(h, 0) + w
    for v in set(out) | set(inc):
        if out.get(v, 0) != inc.get(v, 0):
            raise DomainError("frequency vector is not flow-balanced")
    sub = WeightedSubgraph.from_frequency(z)
    if not sub.is_connected():
        return []

    remaining = dict(z.items())
    start_edge = min(remaining)
    start_vertex = start_edge // l
    found: set[CyclicSequence] = set()
    letters: list[int] = []

    def walk(vertex: int, used: int):
        if used == n:
            if vertex == start_vertex:
                found.add(canonicalize(letters, l))
            return
        base = vertex * l
        for a in range(l):
            e = base + a
            w = remaining.get(e, 0)
            if w:
                remaining[e] = w - 1
                letters.append(a)
                walk(e % vsize, used + 1)
                letters.pop()
                remaining[e] = w

    # Fixing the first traversed edge collapses rotations of each circuit.
    remaining[start_edge] -= 1
    letters.append(start_edge % l)
    walk(start_edge % vsize, 1)
    return sorted(found, key=lambda s: s.index(), reverse=True)


def contract_doubled_edges(sub: WeightedSubgraph) -> Multigraph:
    """Minor obtained by contracting every weight-2 edge; weight-1 edges kept.

    All weights must lie in {0, 1, 2}. The result is suitable for
    count_eulerian_cycles (a weight-2 self-loop on a merged class vanishes).
    """
    for w in sub.weights.values():
        if w > 2:
            raise DomainError("contraction requires edge weights in {0, 1, 2}")
    parent: dict[int, int] = {}

    def find(v: int) -> int:
        while parent.get(v, v) != v:
            parent[v] = parent.get(parent[v], parent[v])
            v = parent[v]
        return v

    for e, w in sub.weights.items():
        t, h = sub.base.edge_endpoints(e)
        parent.setdefault(t, t)
        parent.setdefault(h, h)
        if w == 2:
            rt, rh = find(t), find(h)
            if rt != rh:
                parent[rt] = rh
    minor = Multigraph(vertices={find(v) for v in parent})
    for e, w in sub.weights.items():
        if w == 1:
            t, h = sub.base.edge_endpoints(e)
            minor.add_edge(find(t), find(h), 1)
    return minor
