# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled augmenting-path matching kernel.

Twin of _matchpy.max_matching_csr: identical scan order, identical output.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memset

KERNEL_NAME = "cython"


cdef bint _augment(int x, int* indptr, int* indices, int* match_x,
                   int* match_y, char* visited) noexcept:
    cdef int i, y
    for i in range(indptr[x], indptr[x + 1]):
        y = indices[i]
        if visited[y]:
            continue
        visited[y] = 1
        if match_y[y] == -1 or _augment(match_y[y], indptr, indices,
                                        match_x, match_y, visited):
            match_x[x] = y
            match_y[y] = x
            return True
    return False


def max_matching_csr(int nx, int ny, indptr, indices):
    """Maximum matching on a CSR adjacency; returns match_x (y index or -1)."""
    cdef int m = len(indices)
    cdef int* c_indptr = <int*> malloc((nx + 1) * sizeof(int))
    cdef int* c_indices = <int*> malloc(m * sizeof(int) if m > 0 else sizeof(int))
    cdef int* match_x = <int*> malloc(nx * sizeof(int) if nx > 0 else sizeof(int))
    cdef int* match_y = <int*> malloc(ny * sizeof(int) if ny > 0 else sizeof(int))
    cdef char* visited = <char*> malloc(ny if ny > 0 else 1)
    if not (c_indptr and c_indices and match_x and match_y and visited):
        free(c_indptr); free(c_indices); free(match_x); free(match_y); free(visited)
        raise MemoryError()
    cdef int i, x
    try:
        for i in range(nx + 1):
            c_indptr[i] = indptr[i]
        for i in range(m):
            c_indices[i] = indices[i]
        for i in range(nx):
            match_x[i] = -1
        for i in range(ny):
            match_y[i] = -1
        for x in range(nx):
            if ny > 0:
                memset(visited, 0, ny)
            _augment(x, c_indptr, c_indices, match_x, match_y, visited)
        return [match_x[i] for i in range(nx)]
    finally:
        free(c_indptr); free(c_indices); free(match_x); free(match_y); free(visited)
