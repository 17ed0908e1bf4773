"""Exact solvers for rainbow independent domination and related invariants.

All searches work on bitset rows (see :mod:`ridom.graph`). The main entry
point is :func:`solve_rik`; the rest are comparators and oracles used to
cross-check it.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from typing import Iterator, Optional, Union

from .bounds import degree_lower_bound, partial_gid_bound
from .graph import Graph, cartesian_product, complete_graph, connected_components, iter_bits, popcount

GUARD_ENV = "RIDOM_GUARD_VERTICES"
DEFAULT_PRODUCT_GUARD = 40
ENUMERATION_GUARD = 12


class GuardExceeded(RuntimeError):
    """Instance too large for an exhaustive routine."""


@dataclass(frozen=True)
class RikLabeling:
    """Integer labelling ``f: V -> {0..k}``; colour classes must be independent."""

    k: int
    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("k must be positive")
        for v, x in enumerate(self.labels):
            if not 0 <= x <= self.k:
                raise ValueError(f"label {x} at vertex {v} outside 0..{self.k}")

    @property
    def weight(self) -> int:
        return sum(1 for x in self.labels if x)

    def classes(self) -> list[int]:
        """Bitmasks ``V_0, V_1, ..., V_k``."""
        out = [0] * (self.k + 1)
        for v, x in enumerate(self.labels):
            out[x] |= 1 << v
        return out

    def labelled_mask(self) -> int:
        mask = 0
        for v, x in enumerate(self.labels):
            if x:
                mask |= 1 << v
        return mask

    def encode(self) -> Union[str, list[int]]:
        if self.k <= 9:
            return "".join(map(str, self.labels))
        return list(self.labels)


@dataclass(frozen=True)
class RainbowSetLabeling:
    """Set-valued labelling ``f: V -> 2^[k]``, weight is the total label size."""

    k: int
    labels: tuple[frozenset, ...]

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("k must be positive")
        for v, s in enumerate(self.labels):
            if not s <= frozenset(range(1, self.k + 1)):
                raise ValueError(f"label {sorted(s)} at vertex {v} not a subset of 1..{self.k}")

    @property
    def weight(self) -> int:
        return sum(len(s) for s in self.labels)

    def support(self) -> int:
        mask = 0
        for v, s in enumerate(self.labels):
            if s:
                mask |= 1 << v
        return mask

    def encode(self) -> list[list[int]]:
        return [sorted(s) for s in self.labels]


Labeling = Union[RikLabeling, RainbowSetLabeling]


@dataclass
class SearchStats:
    nodes: int = 0
    elapsed: float = 0.0
    root_upper: Optional[int] = None
    root_lower: Optional[int] = None


@dataclass
class SolveResult:
    value: int
    witness: Optional[Labeling] = None
    stats: SearchStats = field(default_factory=SearchStats)


# -- verifiers ------------------------------------------------------------------

def verify_rik(g: Graph, f: RikLabeling) -> bool:
    if len(f.labels) != g.n:
        raise ValueError(f"labelling has {len(f.labels)} entries for a graph of order {g.n}")
    classes = f.classes()
    for c in range(1, f.k + 1):
        if not g.is_independent(classes[c]):
            return False
    for v in iter_bits(classes[0]):
        for c in range(1, f.k + 1):
            if not g.adj[v] & classes[c]:
                return False
    return True


def verify_rainbow(g: Graph, f: RainbowSetLabeling, independent: bool = False) -> bool:
    """Check the kRDF condition, plus independence of the support if requested."""
    if len(f.labels) != g.n:
        raise ValueError(f"labelling has {len(f.labels)} entries for a graph of order {g.n}")
    everything = frozenset(range(1, f.k + 1))
    for v, s in enumerate(f.labels):
        if s:
            continue
        seen: set[int] = set()
        for u in iter_bits(g.adj[v]):
            seen |= f.labels[u]
        if seen != everything:
            return False
    if independent and not g.is_independent(f.support()):
        return False
    return True


# -- k-rainbow independent domination -------------------------------------------

def _degree_order(adj: tuple[int, ...]) -> list[int]:
    return sorted(range(len(adj)), key=lambda v: (-popcount(adj[v]), v))


def _rik_search(adj, k, order, limit, mode="min", symmetry=True, cap=0, stats=None):
    """Depth-first search over labellings of weight < ``limit``.

    ``mode`` is ``"min"`` (tighten ``limit`` on every hit, return the best),
    ``"first"`` (return the first hit in search order) or ``"all"`` (collect
    every hit, up to ``cap``). Returns ``(best_weight, labels)`` for the
    first two modes and a list of label tuples for ``"all"``.
    """
    n = len(adj)
    colours = range(1, k + 1)
    colmask = [0] * (k + 1)
    nbr = [0] * (k + 1)
    labels = [0] * n
    st = {"unassigned": (1 << n) - 1, "zeros": 0, "weight": 0, "maxcol": 0, "limit": limit}
    best: list = [None, None]
    found: list[tuple[int, ...]] = []
    nodes = 0

    def lower_bound():
        unassigned = st["unassigned"]
        zeros = st["zeros"]
        forced = 0
        missing = 0
        for c in colours:
            cm = colmask[c]
            cover = cm | (unassigned & ~nbr[c])
            lacking = False
            z = zeros
            while z:
                low = z & -z
                w = adj[low.bit_length() - 1]
                if not w & cover:
                    return None
                if not lacking and not w & cm:
                    lacking = True
                z ^= low
            if lacking:
                missing += 1
            u = unassigned & ~forced
            while u:
                low = u & -u
                if not adj[low.bit_length() - 1] & cover:
                    forced |= low
                u ^= low
        return st["weight"] + max(popcount(forced), missing)

    def rec(pos):
        nonlocal nodes
        nodes += 1
        lb = lower_bound()
        if lb is None or lb >= st["limit"]:
            return False
        if pos == n:
            if mode == "all":
                found.append(tuple(labels))
                return 0 < cap <= len(found)
            best[0], best[1] = st["weight"], tuple(labels)
            if mode == "first":
                return True
            st["limit"] = st["weight"]
            return False
        v = order[pos]
        bit = 1 << v
        row = adj[v]
        st["unassigned"] &= ~bit
        st["zeros"] |= bit
        labels[v] = 0
        if rec(pos + 1):
            return True
        st["zeros"] &= ~bit
        maxcol = st["maxcol"]
        top = min(maxcol + 1, k) if symmetry else k
        st["weight"] += 1
        for c in range(1, top + 1):
            if row & colmask[c]:
                continue
            prev_nbr = nbr[c]
            colmask[c] |= bit
            nbr[c] |= row
            labels[v] = c
            if c > maxcol:
                st["maxcol"] = c
            hit = rec(pos + 1)
            st["maxcol"] = maxcol
            colmask[c] &= ~bit
            nbr[c] = prev_nbr
            if hit:
                return True
        labels[v] = 0
        st["weight"] -= 1
        st["unassigned"] |= bit
        return False

    rec(0)
    if stats is not None:
        stats.nodes += nodes
    if mode == "all":
        return found
    return best[0], best[1]


def _first_fit_colouring(adj: tuple[int, ...], k: int) -> tuple[int, ...]:
    labels = [0] * len(adj)
    for v in range(len(adj)):
        used = {labels[u] for u in iter_bits(adj[v]) if u < v}
        labels[v] = next(c for c in range(1, k + 1) if c not in used)
    return tuple(labels)


def _solve_rik_connected(g: Graph, k: int, stats: SearchStats, symmetry: bool, strategy: str):
    n = g.n
    if n <= k or g.max_degree() < k:
        # Nothing can be labelled 0; first-fit is the lexicographically least proper colouring.
        return n, _first_fit_colouring(g.adj, k), n, n
    upper, _ = partial_gid_bound(g, k, strategy)
    lower = degree_lower_bound(g, k)
    value = upper
    if lower < upper:
        best, _ = _rik_search(g.adj, k, _degree_order(g.adj), upper, "min", symmetry, stats=stats)
        if best is not None:
            value = best
    _, labels = _rik_search(g.adj, k, list(range(n)), value + 1, "first", True, stats=stats)
    return value, labels, lower, upper


def solve_rik(g: Graph, k: int, symmetry: bool = True, strategy: str = "degree") -> SolveResult:
    """Minimum weight of a kRiDF of ``g`` with the lexicographically least optimal witness.

    Components are solved independently and their optima summed.
    """
    if k < 1:
        raise ValueError("k must be positive")
    start = time.perf_counter()
    stats = SearchStats(root_upper=0, root_lower=0)
    labels = [0] * g.n
    total = 0
    for comp in connected_components(g):
        sub = g.induced_subgraph(comp) if len(comp) < g.n else g
        value, sub_labels, lower, upper = _solve_rik_connected(sub, k, stats, symmetry, strategy)
        total += value
        stats.root_lower += lower
        stats.root_upper += upper
        for v, x in zip(comp, sub_labels):
            labels[v] = x
    stats.elapsed = time.perf_counter() - start
    return SolveResult(total, RikLabeling(k, tuple(labels)), stats)


def enumerate_optimal_rik(g: Graph, k: int, cap: int = 10_000) -> list[RikLabeling]:
    """Every minimum-weight kRiDF (colour permutations included), up to ``cap``."""
    if g.n > ENUMERATION_GUARD:
        raise GuardExceeded(f"enumeration limited to n <= {ENUMERATION_GUARD}, got {g.n}")
    if cap <= 0:
        raise ValueError("cap must be positive")
    value = solve_rik(g, k).value
    found = _rik_search(g.adj, k, list(range(g.n)), value + 1, "all", symmetry=False, cap=cap)
    return [RikLabeling(k, labels) for labels in found]


# -- independent sets ------------------------------------------------------------

def maximal_independent_sets(g: Graph) -> Iterator[int]:
    """Yield every maximal independent set as a bitmask (Bron-Kerbosch with pivoting on the complement)."""
    full = g.vertex_mask
    adj = g.adj

    def bk(r, p, x):
        if not p and not x:
            yield r
            return
        px = p | x
        pivot = min(iter_bits(px), key=lambda u: popcount(p & (adj[u] | 1 << u)))
        for v in iter_bits(p & (adj[pivot] | 1 << pivot)):
            keep = full & ~adj[v] & ~(1 << v)
            yield from bk(r | 1 << v, p & keep, x & keep)
            p &= ~(1 << v)
            x |= 1 << v

    if g.n == 0:
        yield 0
        return
    yield from bk(0, full, 0)


def _min_maximal_independent(g: Graph, stats: Optional[SearchStats] = None) -> int:
    """Smallest maximal independent set, as a bitmask."""
    full = g.vertex_mask
    adj = g.adj
    best = [g.n + 1, 0]
    nodes = 0

    def bk(r, size, p, x):
        nonlocal nodes
        nodes += 1
        if not p:
            if not x and size < best[0]:
                best[0], best[1] = size, r
            return
        if size + 1 >= best[0]:
            return
        px = p | x
        pivot = min(iter_bits(px), key=lambda u: popcount(p & (adj[u] | 1 << u)))
        for v in iter_bits(p & (adj[pivot] | 1 << pivot)):
            keep = full & ~adj[v] & ~(1 << v)
            bk(r | 1 << v, size + 1, p & keep, x & keep)
            p &= ~(1 << v)
            x |= 1 << v

    if g.n == 0:
        return 0
    bk(0, 0, full, 0)
    if stats is not None:
        stats.nodes += nodes
    return best[1]


def independent_domination_number(g: Graph) -> SolveResult:
    start = time.perf_counter()
    stats = SearchStats()
    mask = _min_maximal_independent(g, stats)
    stats.elapsed = time.perf_counter() - start
    labels = tuple(1 if mask >> v & 1 else 0 for v in range(g.n))
    return SolveResult(popcount(mask), RikLabeling(1, labels), stats)


def _alpha(adj: tuple[int, ...], mask: int, memo: dict) -> int:
    if not mask:
        return 0
    if mask in memo:
        return memo[mask]
    pick = -1
    pick_deg = -1
    for v in iter_bits(mask):
        d = popcount(adj[v] & mask)
        if d <= 1:
            # A vertex of degree <= 1 always belongs to some maximum independent set.
            result = 1 + _alpha(adj, mask & ~adj[v] & ~(1 << v), memo)
            memo[mask] = result
            return result
        if d > pick_deg:
            pick, pick_deg = v, d
    bit = 1 << pick
    result = max(_alpha(adj, mask & ~bit, memo), 1 + _alpha(adj, mask & ~adj[pick] & ~bit, memo))
    memo[mask] = result
    return result


def independence_number(g: Graph) -> int:
    return _alpha(g.adj, g.vertex_mask, {})


def domination_number(g: Graph) -> int:
    full = g.vertex_mask
    closed = [row | 1 << v for v, row in enumerate(g.adj)]
    max_cover = max((popcount(c) for c in closed), default=1)
    best = [g.n]

    def rec(dominated, count):
        if dominated == full:
            best[0] = min(best[0], count)
            return
        rest = popcount(full & ~dominated)
        if count + -(-rest // max_cover) >= best[0]:
            return
        target = min(iter_bits(full & ~dominated), key=lambda u: popcount(closed[u]))
        for v in sorted(iter_bits(closed[target]), key=lambda w: -popcount(closed[w] & ~dominated)):
            rec(dominated | closed[v], count + 1)

    if g.n:
        rec(0, 0)
    return best[0] if g.n else 0


# -- set-valued rainbow labellings -----------------------------------------------

def _rainbow_search(g: Graph, k: int, independent: bool, stats: SearchStats):
    adj = g.adj
    n = g.n
    order = _degree_order(adj)
    colours = range(k)
    choices = sorted(range(1, 1 << k), key=lambda s: (popcount(s), s))
    cm = [0] * k
    labels = [0] * n
    st = {"unassigned": (1 << n) - 1, "empties": 0, "support": 0, "blocked": 0, "weight": 0,
          "limit": k * n + 1}
    best: list = [None, None]
    nodes = 0

    def lower_bound():
        unassigned = st["unassigned"]
        avail = unassigned & ~st["blocked"] if independent else unassigned
        forced = 0
        missing = 0
        for c in colours:
            cover = cm[c] | avail
            lacking = False
            for w in iter_bits(st["empties"]):
                if not adj[w] & cover:
                    return None
                if not adj[w] & cm[c]:
                    lacking = True
            missing += lacking
            for u in iter_bits(unassigned & ~forced):
                if not adj[u] & cover:
                    forced |= 1 << u
        if independent and forced & st["blocked"]:
            return None
        return st["weight"] + max(popcount(forced), missing)

    def rec(pos):
        nonlocal nodes
        nodes += 1
        lb = lower_bound()
        if lb is None or lb >= st["limit"]:
            return
        if pos == n:
            best[0], best[1] = st["weight"], tuple(labels)
            st["limit"] = st["weight"]
            return
        v = order[pos]
        bit = 1 << v
        st["unassigned"] &= ~bit
        st["empties"] |= bit
        labels[v] = 0
        rec(pos + 1)
        st["empties"] &= ~bit
        if not (independent and st["blocked"] & bit):
            saved_blocked = st["blocked"]
            if independent:
                st["blocked"] |= adj[v]
            for s in choices:
                w = popcount(s)
                for c in colours:
                    if s >> c & 1:
                        cm[c] |= bit
                st["weight"] += w
                labels[v] = s
                rec(pos + 1)
                st["weight"] -= w
                for c in colours:
                    cm[c] &= ~bit
            st["blocked"] = saved_blocked
            labels[v] = 0
        st["unassigned"] |= bit

    rec(0)
    stats.nodes += nodes
    return best[0], best[1]


def _rainbow_result(g: Graph, k: int, independent: bool) -> SolveResult:
    if k < 1:
        raise ValueError("k must be positive")
    start = time.perf_counter()
    stats = SearchStats()
    value, masks = _rainbow_search(g, k, independent, stats)
    labels = tuple(frozenset(c + 1 for c in range(k) if s >> c & 1) for s in masks)
    stats.elapsed = time.perf_counter() - start
    return SolveResult(value, RainbowSetLabeling(k, labels), stats)


def rainbow_domination_number(g: Graph, k: int) -> SolveResult:
    return _rainbow_result(g, k, independent=False)


def independent_rainbow_domination_number(g: Graph, k: int) -> SolveResult:
    return _rainbow_result(g, k, independent=True)


# -- product oracle --------------------------------------------------------------

def product_guard() -> int:
    raw = os.environ.get(GUARD_ENV)
    if raw is None:
        return DEFAULT_PRODUCT_GUARD
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{GUARD_ENV} must be a positive integer, got {raw!r}") from None
    if value <= 0:
        raise ValueError(f"{GUARD_ENV} must be a positive integer, got {raw!r}")
    return value


def _product_min_set(g: Graph, k: int, guard: Optional[int] = None) -> int:
    if k < 1:
        raise ValueError("k must be positive")
    guard = product_guard() if guard is None else guard
    if g.n * k > guard:
        raise GuardExceeded(f"product has {g.n * k} vertices, guard is {guard}")
    if g.n == 0:
        return 0
    return _min_maximal_independent(cartesian_product(g, complete_graph(k)))


def oracle_rik_via_product(g: Graph, k: int, guard: Optional[int] = None) -> int:
    """Independent domination number of ``g □ K_k``, by maximal independent set enumeration.

    ``guard`` caps ``n * k``; it defaults to ``$RIDOM_GUARD_VERTICES`` or 40.
    """
    return popcount(_product_min_set(g, k, guard))


def labeling_from_product_set(n: int, k: int, mask: int) -> RikLabeling:
    """Read a kRiDF off an independent dominating set of ``G □ K_k``: vertex ``g`` gets ``i`` when ``(g, i)`` is chosen."""
    labels = [0] * n
    for x in iter_bits(mask):
        g_vertex, layer = divmod(x, k)
        if labels[g_vertex]:
            raise ValueError(f"set is not independent: two vertices in the K_k-layer of {g_vertex}")
        labels[g_vertex] = layer + 1
    return RikLabeling(k, tuple(labels))


def oracle_rik_witness(g: Graph, k: int, guard: Optional[int] = None) -> RikLabeling:
    return labeling_from_product_set(g.n, k, _product_min_set(g, k, guard))
