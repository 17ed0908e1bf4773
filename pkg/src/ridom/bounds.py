"""Cheap bounds on the k-rainbow independent domination number."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, GraphError, is_connected, iter_bits, popcount

STRATEGIES = ("degree", "index")


@dataclass(frozen=True)
class PartialGid:
    """Peeled parts ``V_1..V_k`` followed by the remainder ``V_0`` (bitmasks)."""

    parts: tuple[int, ...]
    remainder: int

    @property
    def k(self) -> int:
        return len(self.parts)

    def labels(self, n: int) -> tuple[int, ...]:
        out = [0] * n
        for i, part in enumerate(self.parts, 1):
            for v in iter_bits(part):
                out[v] = i
        return tuple(out)

    def is_valid_for(self, g: Graph) -> bool:
        """Re-check the peeling invariants: disjoint cover, each part maximal independent in what was left."""
        left = g.vertex_mask
        for part in self.parts:
            if part & ~left or not g.is_independent(part):
                return False
            for v in iter_bits(left & ~part):
                if not g.adj[v] & part:
                    return False
            left &= ~part
        return left == self.remainder


def _greedy_mis(g: Graph, left: int, strategy: str) -> int:
    if strategy == "degree":
        order = sorted(iter_bits(left), key=lambda v: (-popcount(g.adj[v] & left), v))
    elif strategy == "index":
        order = list(iter_bits(left))
    else:
        raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
    chosen = blocked = 0
    for v in order:
        if not blocked >> v & 1:
            chosen |= 1 << v
            blocked |= g.adj[v] | 1 << v
    return chosen


def partial_gid_bound(g: Graph, k: int, strategy: str = "degree") -> tuple[int, PartialGid]:
    """Upper bound from greedily peeling ``k`` maximal independent sets.

    Every leftover vertex has a neighbour in each peeled part, so labelling
    part ``i`` with colour ``i`` is a valid kRiDF. If the graph runs out
    before ``k`` parts are peeled the later parts are empty, nothing is left
    over, and the bound degenerates to ``n``.
    """
    if k < 1:
        raise ValueError("k must be positive")
    left = g.vertex_mask
    parts = []
    for _ in range(k):
        part = _greedy_mis(g, left, strategy) if left else 0
        parts.append(part)
        left &= ~part
    gid = PartialGid(tuple(parts), left)
    return g.n - popcount(left), gid


def degree_lower_bound(g: Graph, k: int) -> int:
    # Includes degree-0 vertices, which can never be labelled 0 either.
    low_degree = sum(1 for row in g.adj if popcount(row) < k)
    return max(min(g.n, k), low_degree)


def check_value_k_characterization(g: Graph, k: int) -> bool:
    """True iff ``n == k`` or some k-set is completely joined to all other vertices."""
    if k < 1:
        raise ValueError("k must be positive")
    if g.n < k:
        raise GraphError(f"need n >= k, got n={g.n}, k={k}")
    if not is_connected(g):
        raise GraphError("characterization applies to connected graphs only")
    if g.n == k:
        return True
    full = g.vertex_mask
    candidates = [v for v in range(g.n) if popcount(g.adj[v]) >= g.n - k]
    for subset in combinations(candidates, k):
        s = 0
        for v in subset:
            s |= 1 << v
        outside = full & ~s
        if all(outside & ~g.adj[v] == 0 for v in subset):
            return True
    return False
