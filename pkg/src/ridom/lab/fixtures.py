"""Hard-coded small graphs with known values.

Vertex numbering:

* ``incomparability_graph``: top vertices 0, 1, 2 are joined to every
  bottom vertex 3..6, plus the single top edge 0-1.
* ``figure2_left``: top row 0..5 and bottom row 6..11 (top ``t`` is vertex
  ``t``, bottom ``b`` is ``6 + b``). Tops 0, 1 see bottoms 2..5; tops 2, 3
  see bottoms 0, 1, 4, 5; tops 4, 5 see bottoms 0..3.
* ``figure2_right``: hubs 0 and 5 share the four neighbours 1..4; hubs 5
  and 8 share the two neighbours 6, 7.
"""

from __future__ import annotations

from ..graph import Graph, from_edge_list
from ..solvers import RikLabeling


def incomparability_graph() -> Graph:
    edges = [(t, b) for t in range(3) for b in range(3, 7)] + [(0, 1)]
    return from_edge_list(7, edges)


def figure2_left() -> Graph:
    sees = {0: (2, 3, 4, 5), 1: (2, 3, 4, 5), 2: (0, 1, 4, 5), 3: (0, 1, 4, 5), 4: (0, 1, 2, 3), 5: (0, 1, 2, 3)}
    return from_edge_list(12, [(t, 6 + b) for t, bottoms in sees.items() for b in bottoms])


def figure2_left_labeling() -> RikLabeling:
    labels = [0] * 12
    labels[0], labels[1], labels[6], labels[7] = 1, 2, 1, 2
    return RikLabeling(2, tuple(labels))


def figure2_right() -> Graph:
    edges = [(0, v) for v in range(1, 5)] + [(5, v) for v in range(1, 5)]
    edges += [(5, 6), (5, 7), (8, 6), (8, 7)]
    return from_edge_list(9, edges)


def figure2_right_labeling() -> RikLabeling:
    labels = [0] * 9
    labels[0], labels[5], labels[8] = 1, 2, 1
    return RikLabeling(2, tuple(labels))
