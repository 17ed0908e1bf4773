"""Brute-force reference computations, deliberately naive and independent of ridom's search code.

Graphs here are plain ``(n, edge set)`` pairs so nothing from the package's
bitset layer is reused.
"""

from itertools import combinations, product


def edge_set(g):
    return {frozenset(e) for e in g.edges()}


def nbrs(n, edges):
    out = {v: set() for v in range(n)}
    for e in edges:
        u, v = tuple(e)
        out[u].add(v)
        out[v].add(u)
    return out


def is_rik(n, edges, k, labels):
    nb = nbrs(n, edges)
    for e in edges:
        u, v = tuple(e)
        if labels[u] and labels[u] == labels[v]:
            return False
    for v in range(n):
        if labels[v] == 0:
            seen = {labels[u] for u in nb[v]}
            if not all(c in seen for c in range(1, k + 1)):
                return False
    return True


def brute_rik(n, edges, k):
    """Minimum weight over all (k+1)^n labellings."""
    return min(sum(1 for x in f if x) for f in product(range(k + 1), repeat=n) if is_rik(n, edges, k, f))


def brute_rik_optima(n, edges, k):
    best = brute_rik(n, edges, k)
    return sorted(f for f in product(range(k + 1), repeat=n)
                  if is_rik(n, edges, k, f) and sum(1 for x in f if x) == best)


def _independent(s, edges):
    return all(frozenset(p) not in edges for p in combinations(s, 2))


def _dominating(n, s, nb):
    covered = set(s)
    for v in s:
        covered |= nb[v]
    return len(covered) == n


def brute_maximal_independent_sets(n, edges):
    nb = nbrs(n, edges)
    out = []
    for r in range(n + 1):
        for s in combinations(range(n), r):
            if _independent(s, edges) and _dominating(n, s, nb):
                out.append(frozenset(s))
    return out


def brute_i(n, edges):
    return min(len(s) for s in brute_maximal_independent_sets(n, edges))


def brute_alpha(n, edges):
    return max((r for r in range(n + 1) for s in combinations(range(n), r) if _independent(s, edges)), default=0)


def brute_gamma(n, edges):
    nb = nbrs(n, edges)
    for r in range(n + 1):
        if any(_dominating(n, s, nb) for s in combinations(range(n), r)):
            return r


def _subsets(k):
    return [frozenset(c for c in range(1, k + 1) if m >> (c - 1) & 1) for m in range(1 << k)]


def brute_rainbow(n, edges, k, independent=False):
    """Minimum total label size over all (2^k)^n set labellings."""
    nb = nbrs(n, edges)
    full = frozenset(range(1, k + 1))
    best = None
    for f in product(_subsets(k), repeat=n):
        w = sum(len(s) for s in f)
        if best is not None and w >= best:
            continue
        ok = True
        for v in range(n):
            if not f[v]:
                seen = frozenset().union(*(f[u] for u in nb[v]))
                if seen != full:
                    ok = False
                    break
        if ok and independent:
            ok = _independent([v for v in range(n) if f[v]], edges)
        if ok:
            best = w
    return best


def graph6_bits(n, edges):
    """Reference graph6 encoder written straight from the format description."""
    bits = [1 if frozenset((i, j)) in edges else 0 for j in range(1, n) for i in range(j)]
    while len(bits) % 6:
        bits.append(0)
    out = [chr(n + 63)]
    for i in range(0, len(bits), 6):
        out.append(chr(int("".join(map(str, bits[i:i + 6])), 2) + 63))
    return "".join(out)
