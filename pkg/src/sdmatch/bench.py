"""Timing tables: compiled vs pure matching kernel, and solver workloads."""

from __future__ import annotations

import random
import time
from typing import IO, Callable

from . import _matchpy
from .graph import BipartiteGraph, SdmInstance
from .matching import ACTIVE_KERNEL, _csr

try:
    from . import _matchcore  # type: ignore[attr-defined]
except ImportError:  # pragma: no cover
    _matchcore = None


def _random_graph(rng: random.Random, nx: int, ny: int, density: float) -> BipartiteGraph:
    edges = [(x, y) for x in range(nx) for y in range(ny) if rng.random() < density]
    return BipartiteGraph.from_edges(nx, ny, edges)


def _time(fn: Callable[[], object], repeats: int = 3) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def _bench_kernels(out: IO[str]) -> None:
    rng = random.Random(20240611)
    sizes = [(50, 50, 0.2), (200, 200, 0.1), (400, 400, 0.05)]
    out.write(f"active kernel: {ACTIVE_KERNEL}\n")
    out.write(f"{'size':>12} {'python_ms':>10} {'cython_ms':>10} {'speedup':>8}\n")
    for nx, ny, density in sizes:
        g = _random_graph(rng, nx, ny, density)
        indptr, indices = _csr(g)
        t_py = _time(lambda: _matchpy.max_matching_csr(nx, ny, indptr, indices))
        if _matchcore is not None:
            t_cy = _time(lambda: _matchcore.max_matching_csr(nx, ny, indptr, indices))
            ratio = f"{t_py / t_cy:8.1f}" if t_cy > 0 else "     inf"
            out.write(f"{nx}x{ny:>6} {t_py * 1e3:10.2f} {t_cy * 1e3:10.2f} {ratio}\n")
        else:
            out.write(f"{nx}x{ny:>6} {t_py * 1e3:10.2f} {'n/a':>10} {'n/a':>8}\n")


def _bench_solvers(out: IO[str]) -> None:
    from .lebensold import k_disjoint_saturating, lebensold_condition
    from .solve import count_spairs_exact, solve

    rng = random.Random(7)
    out.write(f"{'workload':<32} {'ms':>10}\n")

    graphs = [_random_graph(rng, 5, 5, 0.6) for _ in range(50)]

    def oracle_sweep() -> None:
        for g in graphs:
            if g.num_edges() <= 16:
                count_spairs_exact(SdmInstance.make(g, range(min(2, g.nx))))

    def lebensold_sweep() -> None:
        for g in graphs:
            for k in (1, 2, 3):
                lebensold_condition(g, k)
                k_disjoint_saturating(g, k)

    def dispatch_sweep() -> None:
        for g in graphs:
            solve(SdmInstance.make(g, range(g.nx - 1, g.nx)))

    for name, fn in [("oracle count, 50 graphs", oracle_sweep),
                     ("lebensold k=1..3, 50 graphs", lebensold_sweep),
                     ("solve dispatch, 50 graphs", dispatch_sweep)]:
        out.write(f"{name:<32} {_time(fn, repeats=1) * 1e3:10.2f}\n")


SUITES = {
    "kernels": _bench_kernels,
    "solvers": _bench_solvers,
}


def run_suite(name: str, out: IO[str]) -> None:
    SUITES[name](out)
