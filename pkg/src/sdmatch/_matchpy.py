"""Pure-Python augmenting-path matching kernel.

Twin of the compiled kernel in _matchcore.pyx; both must produce identical
output: X vertices are processed in ascending order and neighbor lists are
scanned ascending, which fixes the matching uniquely.
"""

from __future__ import annotations

KERNEL_NAME = "python"


def max_matching_csr(nx: int, ny: int, indptr: list[int], indices: list[int]) -> list[int]:
    """Maximum matching on a CSR adjacency; returns match_x (y index or -1)."""
    match_x = [-1] * nx
    match_y = [-1] * ny

    def augment(x: int, visited: list[bool]) -> bool:
        for i in range(indptr[x], indptr[x + 1]):
            y = indices[i]
            if visited[y]:
                continue
            visited[y] = True
            if match_y[y] == -1 or augment(match_y[y], visited):
                match_x[x] = y
                match_y[y] = x
                return True
        return False

    for x in range(nx):
        augment(x, [False] * ny)
    return match_x
