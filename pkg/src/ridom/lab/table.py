"""Vectorised evaluation of the k-rainbow independent domination number over a whole labelled corpus.

Every labelled graph on ``n`` vertices is an edge mask over the pairs of
:func:`ridom.graph.pair_list`. For each candidate labelling ``f`` (taken in
order of increasing weight, colours in first-use order) both kRiDF
conditions are plain mask tests against the edge mask, so one numpy pass
decides ``f`` for every graph at once. A graph's value is the weight of the
first labelling it accepts.

This route shares no code with the branch-and-bound solver and serves as
its cross-check as well as the engine for the n = 7 scan.
"""

from __future__ import annotations

from itertools import product

import numpy as np

from ..graph import pair_list

MAX_TABLE_ORDER = 7


def _first_use_ordered(labels: tuple[int, ...]) -> bool:
    top = 0
    for x in labels:
        if x > top + 1:
            return False
        top = max(top, x)
    return True


def _labeling_masks(labels, k, bit):
    """Return ``(forbid, needs)`` edge masks, or None if no graph can accept ``labels``."""
    n = len(labels)
    forbid = 0
    for v in range(n):
        for u in range(v):
            if labels[u] and labels[u] == labels[v]:
                forbid |= bit[u][v]
    needs = []
    for v in range(n):
        if labels[v]:
            continue
        for c in range(1, k + 1):
            need = 0
            for u in range(n):
                if labels[u] == c:
                    need |= bit[u][v]
            if not need:
                return None
            needs.append(need)
    return forbid, needs


def labeled_rik_table(n: int, k: int) -> np.ndarray:
    """Array ``t`` with ``t[mask]`` = value for the labelled graph with edge mask ``mask``."""
    if not 0 <= n <= MAX_TABLE_ORDER:
        raise ValueError(f"table evaluation supports 0 <= n <= {MAX_TABLE_ORDER}, got {n}")
    if k < 1:
        raise ValueError("k must be positive")
    pairs = pair_list(n)
    bit = [[0] * n for _ in range(n)]
    for idx, (u, v) in enumerate(pairs):
        bit[u][v] = bit[v][u] = 1 << idx
    size = 1 << len(pairs)
    values = np.full(size, n, dtype=np.uint8)
    if n == 0:
        values[:] = 0
        return values

    by_weight: dict[int, list] = {}
    for labels in product(range(k + 1), repeat=n):
        if not _first_use_ordered(labels):
            continue
        masks = _labeling_masks(labels, k, bit)
        if masks is not None:
            by_weight.setdefault(sum(1 for x in labels if x), []).append(masks)

    index = np.arange(size, dtype=np.uint32)
    edges = index.copy()
    for weight in sorted(by_weight):
        if edges.size == 0:
            break
        hit = np.zeros(edges.size, dtype=bool)
        for forbid, needs in by_weight[weight]:
            ok = (edges & np.uint32(forbid)) == 0
            for need in needs:
                ok &= (edges & np.uint32(need)) != 0
            hit |= ok
        values[index[hit]] = weight
        keep = ~hit
        index = index[keep]
        edges = edges[keep]
    return values


def complement_mask(mask: int, n: int) -> int:
    return ((1 << (n * (n - 1) // 2)) - 1) ^ mask
