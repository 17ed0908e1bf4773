"""Graph corpora: every labelled graph on n vertices, labelled trees via Pruefer codes, graph6 files."""

from __future__ import annotations

import heapq
import random
from itertools import product
from pathlib import Path
from typing import Iterator, Optional, Sequence

from ..graph import Graph, GraphError, pair_list
from ..graph6 import read_graph6_lines

MAX_LABELED_ORDER = 7
MAX_TREE_ORDER = 12


def labeled_graphs(n: int) -> Iterator[tuple[int, Graph]]:
    """Yield ``(edge_mask, graph)`` for all 2^(n choose 2) labelled graphs on ``n`` vertices."""
    if not 0 <= n <= MAX_LABELED_ORDER:
        raise ValueError(f"built-in labelled corpus supports 0 <= n <= {MAX_LABELED_ORDER}, got {n}")
    pairs = pair_list(n)
    m = len(pairs)
    rows = [0] * n
    # Gray-code walk: one edge flips per step.
    yield 0, Graph.trusted(n, tuple(rows))
    prev = 0
    for step in range(1, 1 << m):
        gray = step ^ (step >> 1)
        bit = (gray ^ prev).bit_length() - 1
        u, v = pairs[bit]
        rows[u] ^= 1 << v
        rows[v] ^= 1 << u
        prev = gray
        yield gray, Graph.trusted(n, tuple(rows))


def read_corpus(path: str | Path, n: Optional[int] = None) -> list[Graph]:
    """Read a graph6 corpus file; if ``n`` is given every graph must have that order."""
    try:
        text = Path(path).read_text(encoding="ascii")
    except (OSError, UnicodeDecodeError) as exc:
        raise GraphError(f"cannot read corpus {path}: {exc}") from None
    graphs = read_graph6_lines(text.splitlines())
    if n is not None:
        for idx, g in enumerate(graphs, 1):
            if g.n != n:
                raise GraphError(f"corpus {path}: graph {idx} has order {g.n}, expected {n}")
    return graphs


# -- trees ----------------------------------------------------------------------

def prufer_decode(code: Sequence[int], n: int) -> Graph:
    if n < 2:
        raise ValueError("Pruefer codes describe trees with at least 2 vertices")
    if len(code) != n - 2:
        raise ValueError(f"code length {len(code)} does not match n - 2 = {n - 2}")
    degree = [1] * n
    for x in code:
        if not 0 <= x < n:
            raise ValueError(f"code entry {x} outside 0..{n - 1}")
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    rows = [0] * n
    for x in code:
        leaf = heapq.heappop(leaves)
        rows[leaf] |= 1 << x
        rows[x] |= 1 << leaf
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    a, b = heapq.heappop(leaves), heapq.heappop(leaves)
    rows[a] |= 1 << b
    rows[b] |= 1 << a
    return Graph.trusted(n, tuple(rows))


def prufer_encode(tree: Graph) -> tuple[int, ...]:
    n = tree.n
    if n < 2 or tree.num_edges() != n - 1:
        raise ValueError("not a tree on at least 2 vertices")
    rows = list(tree.adj)
    degree = [bin(r).count("1") for r in rows]
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    code = []
    for _ in range(n - 2):
        leaf = heapq.heappop(leaves)
        parent = rows[leaf].bit_length() - 1
        code.append(parent)
        rows[parent] &= ~(1 << leaf)
        rows[leaf] = 0
        degree[parent] -= 1
        if degree[parent] == 1:
            heapq.heappush(leaves, parent)
    return tuple(code)


def enumerate_trees(n: int) -> Iterator[Graph]:
    """All n^(n-2) labelled trees on ``n`` vertices, in Pruefer-code order."""
    if not 2 <= n <= MAX_TREE_ORDER:
        raise ValueError(f"tree enumeration supports 2 <= n <= {MAX_TREE_ORDER}, got {n}")
    for code in product(range(n), repeat=n - 2):
        yield prufer_decode(code, n)


def random_trees(n: int, count: int, seed: int = 0) -> Iterator[Graph]:
    """``count`` uniformly random labelled trees (uniform Pruefer codes)."""
    if not 2 <= n <= MAX_TREE_ORDER:
        raise ValueError(f"tree sampling supports 2 <= n <= {MAX_TREE_ORDER}, got {n}")
    rng = random.Random(seed)
    for _ in range(count):
        yield prufer_decode([rng.randrange(n) for _ in range(n - 2)], n)


def _tree_centers(adj: Sequence[int]) -> list[int]:
    n = len(adj)
    if n <= 2:
        return list(range(n))
    degree = [bin(r).count("1") for r in adj]
    layer = [v for v in range(n) if degree[v] <= 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            r = adj[v]
            while r:
                low = r & -r
                u = low.bit_length() - 1
                degree[u] -= 1
                if degree[u] == 1:
                    nxt.append(u)
                r ^= low
        layer = nxt
    return layer


def _rooted_code(adj: Sequence[int], root: int, parent: int) -> str:
    children = []
    r = adj[root]
    while r:
        low = r & -r
        u = low.bit_length() - 1
        if u != parent:
            children.append(_rooted_code(adj, u, root))
        r ^= low
    children.sort()
    return "(" + "".join(children) + ")"


def tree_certificate(tree: Graph) -> str:
    """Canonical string of a tree: equal certificates iff the trees are isomorphic."""
    return min(_rooted_code(tree.adj, c, -1) for c in _tree_centers(tree.adj))
