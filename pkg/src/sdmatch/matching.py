"""Maximum bipartite matching and Hall-condition certificates.

The augmenting-path kernel is compiled (Cython) when the extension built;
otherwise the pure-Python twin is used. Both produce identical matchings.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .graph import BipartiteGraph, Matching

try:
    from . import _matchcore as _kernel  # type: ignore[attr-defined]
except ImportError:  # pragma: no cover - depends on build environment
    from . import _matchpy as _kernel

ACTIVE_KERNEL: str = _kernel.KERNEL_NAME


@dataclass(frozen=True)
class HallCertificate:
    """Either an X-saturating matching or a violating set W with |N(W)| < |W|."""

    saturating_matching: Optional[Matching]
    violator: Optional[tuple[int, ...]]


def _csr(graph: BipartiteGraph) -> tuple[list[int], list[int]]:
    indptr = [0]
    indices: list[int] = []
    for x in range(graph.nx):
        indices.extend(graph.adj[x])
        indptr.append(len(indices))
    return indptr, indices


def match_x_array(graph: BipartiteGraph) -> list[int]:
    """Per-X-vertex mate array (-1 for unmatched) from the active kernel."""
    indptr, indices = _csr(graph)
    return _kernel.max_matching_csr(graph.nx, graph.ny, indptr, indices)


def max_matching(graph: BipartiteGraph) -> Matching:
    """Deterministic maximum matching (ascending x, ascending neighbor scan)."""
    mx = match_x_array(graph)
    return Matching.from_edges((x, y) for x, y in enumerate(mx) if y != -1)


def has_x_saturating_matching(graph: BipartiteGraph) -> bool:
    return all(y != -1 for y in match_x_array(graph))


def x_saturating_certificate(graph: BipartiteGraph) -> HallCertificate:
    """An X-saturating matching, or a Hall violator built from alternating paths."""
    mx = match_x_array(graph)
    unmatched = [x for x, y in enumerate(mx) if y == -1]
    if not unmatched:
        return HallCertificate(
            Matching.from_edges((x, y) for x, y in enumerate(mx)), None
        )
    my = [-1] * graph.ny
    for x, y in enumerate(mx):
        if y != -1:
            my[y] = x
    # X vertices reachable from the lowest unmatched one by alternating paths:
    # unmatched edge into Y, matched edge back into X.
    root = unmatched[0]
    seen_x = {root}
    seen_y: set[int] = set()
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in graph.adj[x]:
            if y in seen_y:
                continue
            seen_y.add(y)
            x2 = my[y]
            if x2 != -1 and x2 not in seen_x:
                seen_x.add(x2)
                queue.append(x2)
    # Every y in seen_y is matched (else an augmenting path would exist),
    # and N(seen_x) = seen_y, so |N(W)| = |W| - 1 < |W|.
    return HallCertificate(None, tuple(sorted(seen_x)))
