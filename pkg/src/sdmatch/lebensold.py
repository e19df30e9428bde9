"""k disjoint X-saturating matchings: counting condition and construction.

The counting condition is checked by exhaustive subset enumeration (oracle
grade, desk scale only). The constructive route builds a degree factor with
g = f = k on X and 0..k on Y, then splits it into color classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .coloring import konig_color
from .flow import DegreeBounds, gf_factor
from .graph import BipartiteGraph, Matching


@dataclass(frozen=True)
class LebensoldVerdict:
    holds: bool
    violating_set: Optional[tuple[int, ...]]


def lebensold_condition(graph: BipartiteGraph, k: int,
                        subset_limit: int = 20) -> LebensoldVerdict:
    """Check sum_y min(k, |N(y) cap W|) >= k|W| for every W subset of X.

    Returns the lexicographically least violating subset when the condition
    fails. Brute force over 2^nx subsets; refuses nx > subset_limit.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if graph.nx > subset_limit:
        raise ValueError(f"nx={graph.nx} exceeds subset limit {subset_limit}")
    violators: list[tuple[int, ...]] = []
    for mask in range(1 << graph.nx):
        members = [x for x in range(graph.nx) if mask >> x & 1]
        total = 0
        for y in range(graph.ny):
            inter = sum(1 for x in graph.y_adj[y] if mask >> x & 1)
            total += min(k, inter)
        if total < k * len(members):
            violators.append(tuple(members))
    if not violators:
        return LebensoldVerdict(True, None)
    return LebensoldVerdict(False, min(violators))


def k_disjoint_saturating(graph: BipartiteGraph, k: int) -> Optional[list[Matching]]:
    """k pairwise edge-disjoint X-saturating matchings, or None.

    Construction: (g,f)-factor with g = f = k on X, g = 0 and f = k on Y,
    then a proper k-coloring of the factor; each color class is one matching.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if graph.nx == 0:
        return [Matching(()) for _ in range(k)]
    bounds = DegreeBounds.uniform(graph, k, k, 0, k)
    factor = gf_factor(graph, bounds)
    if factor is None:
        return None
    sub = BipartiteGraph.from_edges(graph.nx, graph.ny, factor)
    coloring = konig_color(sub)
    # every X vertex has degree exactly k, so the palette is exactly k
    return [coloring.color_class(c) for c in range(1, k + 1)]
