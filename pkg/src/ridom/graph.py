"""Simple undirected graphs stored as bitset adjacency rows.

Vertices are dense integers ``0..n-1``. Row ``adj[v]`` is an int whose bit
``u`` is set iff ``uv`` is an edge. Graphs are immutable once built.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Raised for malformed graph input."""


def popcount(x: int) -> int:
    return bin(x).count("1")


def iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise GraphError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {v} refers to a vertex outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"adjacency not symmetric at ({v}, {u})")

    @classmethod
    def trusted(cls, n: int, adj: tuple[int, ...]) -> Graph:
        """Build without validation; for hot enumeration loops only."""
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(row) for row in self.adj]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def is_independent(self, mask: int) -> bool:
        for v in iter_bits(mask):
            if self.adj[v] & mask:
                return False
        return True

    def closed_neighborhood(self, mask: int) -> int:
        out = mask
        for v in iter_bits(mask):
            out |= self.adj[v]
        return out

    def is_dominating(self, mask: int) -> bool:
        return self.closed_neighborhood(mask) == self.vertex_mask

    def induced_subgraph(self, vertices: Iterable[int]) -> Graph:
        """Subgraph induced on ``vertices``, relabelled in ascending order."""
        verts = sorted(set(vertices))
        index = {v: i for i, v in enumerate(verts)}
        rows = []
        for v in verts:
            row = 0
            for u in iter_bits(self.adj[v]):
                if u in index:
                    row |= 1 << index[u]
            rows.append(row)
        return Graph(len(verts), tuple(rows))

    def remove_vertex(self, x: int) -> Graph:
        return self.induced_subgraph(v for v in range(self.n) if v != x)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    if n < 0:
        raise GraphError("vertex count must be nonnegative")
    rows = [0] * n
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop edge ({u}, {v})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def from_edge_mask(n: int, mask: int) -> Graph:
    """Graph whose edges are the set bits of ``mask`` over the pairs of :func:`pair_list`."""
    rows = [0] * n
    for bit, (u, v) in enumerate(pair_list(n)):
        if mask >> bit & 1:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def pair_list(n: int) -> list[tuple[int, int]]:
    """Vertex pairs in graph6 column order: (0,1), (0,2), (1,2), (0,3), ..."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def edge_mask(g: Graph) -> int:
    mask = 0
    for bit, (u, v) in enumerate(pair_list(g.n)):
        if g.adj[u] >> v & 1:
            mask |= 1 << bit
    return mask


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def disjoint_union(*graphs: Graph) -> Graph:
    rows: list[int] = []
    offset = 0
    for g in graphs:
        rows.extend(row << offset for row in g.adj)
        offset += g.n
    return Graph(offset, tuple(rows))


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """G □ H with vertex (a, b) flattened to ``a * h.n + b``."""
    if g.n == 0 or h.n == 0:
        raise GraphError("Cartesian product needs two nonempty factors")
    m = h.n
    rows = []
    for a in range(g.n):
        for b in range(m):
            row = h.adj[b] << (a * m)
            for a2 in iter_bits(g.adj[a]):
                row |= 1 << (a2 * m + b)
            rows.append(row)
    return Graph(g.n * m, tuple(rows))


def flatten_pair(g_vertex: int, h_vertex: int, h_order: int) -> int:
    return g_vertex * h_order + h_vertex


def unflatten(index: int, h_order: int) -> tuple[int, int]:
    return divmod(index, h_order)


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest vertex."""
    seen = 0
    comps = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(list(iter_bits(comp)))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.num_edges() == g.n - 1 and is_connected(g)


# -- named families ---------------------------------------------------------

FAMILY_MINIMUM = {
    "path": 1,
    "cycle": 3,
    "star": 2,
    "starplus": 3,
    "complete": 1,
    "empty": 1,
}


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """S_n: star of order n, center 0."""
    return from_edge_list(n, [(0, i) for i in range(1, n)])


def star_plus_graph(n: int) -> Graph:
    """S_n^+: S_n plus the leaf edge (1, 2)."""
    return from_edge_list(n, [(0, i) for i in range(1, n)] + [(1, 2)])


def complete_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, j) for j in range(n) for i in range(j)])


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_multipartite(parts: Sequence[int]) -> Graph:
    parts = list(parts)
    if not parts or any(p <= 0 for p in parts):
        raise GraphError("part sizes must be positive")
    if parts != sorted(parts):
        raise GraphError("part sizes must be nondecreasing")
    owner = [i for i, p in enumerate(parts) for _ in range(p)]
    n = len(owner)
    return from_edge_list(n, [(u, v) for v in range(n) for u in range(v) if owner[u] != owner[v]])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, outer + spokes + inner)


_BUILDERS = {
    "path": path_graph,
    "cycle": cycle_graph,
    "star": star_graph,
    "starplus": star_plus_graph,
    "complete": complete_graph,
    "empty": empty_graph,
}


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    args: tuple[int, ...]

    @classmethod
    def parse(cls, text: str) -> FamilySpec:
        """Parse ``name:args``, e.g. ``path:5`` or ``kmulti:2,3,3``."""
        name, sep, rest = text.strip().partition(":")
        if not sep or not rest:
            raise GraphError(f"family spec {text!r} must look like name:args")
        try:
            args = tuple(int(a) for a in rest.split(","))
        except ValueError:
            raise GraphError(f"non-integer argument in family spec {text!r}") from None
        kind = name.lower()
        if kind in ("multipartite", "completemultipartite"):
            kind = "kmulti"
        if kind not in _BUILDERS and kind != "kmulti":
            raise GraphError(f"unknown family {name!r}")
        return cls(kind, args)

    def __str__(self) -> str:
        return f"{self.kind}:{','.join(map(str, self.args))}"


def build_family(spec: FamilySpec) -> Graph:
    if spec.kind == "kmulti":
        return complete_multipartite(spec.args)
    if len(spec.args) != 1:
        raise GraphError(f"family {spec.kind} takes exactly one order argument")
    (n,) = spec.args
    if n < FAMILY_MINIMUM[spec.kind]:
        raise GraphError(f"{spec.kind} needs order >= {FAMILY_MINIMUM[spec.kind]}, got {n}")
    return _BUILDERS[spec.kind](n)


# -- edge-list text format ----------------------------------------------------

def parse_edge_list_text(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v``; ``#`` starts a comment."""
    tokens: list[list[int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            tokens.append([int(t) for t in line.split()])
        except ValueError:
            raise GraphError(f"line {lineno}: expected integers, got {raw!r}") from None
    if not tokens or len(tokens[0]) != 2:
        raise GraphError("edge list must start with a line 'n m'")
    n, m = tokens[0]
    body = tokens[1:]
    if len(body) != m:
        raise GraphError(f"header announces {m} edges but {len(body)} were given")
    for row in body:
        if len(row) != 2:
            raise GraphError(f"edge line {row} must have two endpoints")
    return from_edge_list(n, body)


def format_edge_list_text(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"
