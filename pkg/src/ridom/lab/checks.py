"""Single-graph checks of the structural claims about the 2-rainbow independent domination number.

Each check returns True when the claim holds on the given graph (vacuous
premises count as holding) and raises ``GraphError`` when the graph is
outside the claim's scope.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from ..graph import Graph, GraphError, complement, connected_components, is_tree, popcount
from ..solvers import (
    ENUMERATION_GUARD,
    GuardExceeded,
    enumerate_optimal_rik,
    independent_domination_number,
    solve_rik,
)

ENUMERATION_CAP = 1_000_000


def _require_tree(t: Graph) -> None:
    if t.n < 2 or not is_tree(t):
        raise GraphError("expected a tree with at least 2 vertices")


def rik2(g: Graph) -> int:
    return solve_rik(g, 2).value


def check_tree_theorem(t: Graph) -> bool:
    _require_tree(t)
    return independent_domination_number(t).value < rik2(t)


def leaves(g: Graph) -> list[int]:
    return [v for v in range(g.n) if popcount(g.adj[v]) == 1]


def tree_values(t: Graph) -> tuple[int, int]:
    return independent_domination_number(t).value, rik2(t)


def check_leaf_lemmas(t: Graph, values: Callable[[Graph], tuple[int, int]] = tree_values) -> bool:
    """Removing any leaf lowers i and the 2-rainbow value by 0 or 1.

    ``values`` maps a tree to ``(i, value)``; scans pass a memoised version.
    """
    _require_tree(t)
    i_t, r_t = values(t)
    for x in leaves(t):
        i_s, r_s = values(t.remove_vertex(x))
        if i_t - i_s not in (0, 1) or r_t - r_s not in (0, 1):
            return False
    return True


def _checked_optima(g: Graph, k: int):
    optima = enumerate_optimal_rik(g, k, cap=ENUMERATION_CAP)
    if len(optima) >= ENUMERATION_CAP:
        raise GuardExceeded(f"more than {ENUMERATION_CAP} optimal labellings; enumeration not exhaustive")
    return optima


def check_leaf_observation(g: Graph) -> bool:
    """Every degree-1 vertex is labelled in every optimal 2-labelling."""
    if any(row == 0 for row in g.adj):
        raise GraphError("graph has an isolated vertex")
    leaf_list = leaves(g)
    if not leaf_list:
        return True
    return all(f.labels[x] for f in _checked_optima(g, 2) for x in leaf_list)


def check_components_lemma(g: Graph) -> bool:
    """Value n iff every component is K_1 or K_2; then the complement has value 2 (n >= 2)."""
    value = rik2(g)
    small = all(len(c) <= 2 for c in connected_components(g))
    if (value == g.n) != small:
        return False
    if value == g.n and g.n >= 2:
        return rik2(complement(g)) == 2
    return True


def universal_vertices(g: Graph) -> list[int]:
    full = g.vertex_mask
    return [v for v in range(g.n) if g.adj[v] | 1 << v == full]


def is_star_or_star_plus(g: Graph) -> bool:
    """S_n or S_n^+: a universal vertex with at most one edge among its neighbours."""
    centers = universal_vertices(g)
    if g.n < 2 or not centers:
        return False
    return g.num_edges() - (g.n - 1) <= 1


def check_star_lemma(g: Graph) -> bool:
    if g.n < 3:
        raise GraphError("star lemma needs n >= 3")
    if not universal_vertices(g) or rik2(g) != g.n - 1:
        return True
    return is_star_or_star_plus(g)


def check_corollary_independence(g: Graph, k: int) -> bool:
    """If i(G) equals the k-value, every optimal labelling has an independent labelled set."""
    if g.n > ENUMERATION_GUARD:
        raise GuardExceeded(f"enumeration limited to n <= {ENUMERATION_GUARD}, got {g.n}")
    if independent_domination_number(g).value != solve_rik(g, k).value:
        return True
    return all(g.is_independent(f.labelled_mask()) for f in _checked_optima(g, k))


@dataclass(frozen=True)
class NordhausGaddum:
    value: int
    complement_value: int
    n: int

    @property
    def sum(self) -> int:
        return self.value + self.complement_value

    @property
    def attains_lower(self) -> bool:
        return self.sum == 5

    @property
    def attains_upper(self) -> bool:
        return self.sum == self.n + 3

    @property
    def within_bounds(self) -> bool:
        return 5 <= self.sum <= self.n + 3


def check_nordhaus_gaddum(g: Graph) -> NordhausGaddum:
    if g.n < 3:
        raise GraphError("Nordhaus-Gaddum bounds need n >= 3")
    return NordhausGaddum(rik2(g), rik2(complement(g)), g.n)
