"""Deterministic worker pools for the enumeration outer loops.

Work is partitioned over the outer f-index of a holomorph run; results are
merged back in index order, so totals are identical for any worker count.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Iterator

_CONTEXT = {}


def default_jobs() -> int:
    raw = os.environ.get("HGS_JOBS", "")
    if raw.strip():
        try:
            jobs = int(raw)
        except ValueError:
            raise ValueError(f"HGS_JOBS must be an integer, got {raw!r}")
        return max(1, jobs)
    return 1


def _init_crossed_worker(n_pickle, g_pickle) -> None:
    import pickle

    from .holomorph import build_holomorph
    from .morphisms import enumerate_homomorphisms

    N = pickle.loads(n_pickle)
    G = pickle.loads(g_pickle)
    hol = build_holomorph(N)
    _CONTEXT["hol"] = hol
    _CONTEXT["f_list"] = list(enumerate_homomorphisms(G, hol.aut.carrier))


def _count_one(fi: int) -> tuple[int, int]:
    from .holomorph import crossed_homomorphisms

    hol = _CONTEXT["hol"]
    f = _CONTEXT["f_list"][fi]
    count = sum(1 for _ in crossed_homomorphisms(hol, f, bijective_only=True))
    return fi, count


def parallel_crossed_counts(N, G, f_total: int, start_index: int,
                            jobs: int) -> Iterator[tuple[int, int]]:
    """Per-f bijective crossed-homomorphism counts, yielded in f order."""
    import pickle

    n_pickle = pickle.dumps(N)
    g_pickle = pickle.dumps(G)
    indices = range(start_index, f_total)
    with ProcessPoolExecutor(
        max_workers=jobs,
        initializer=_init_crossed_worker,
        initargs=(n_pickle, g_pickle),
    ) as pool:
        yield from pool.map(_count_one, indices)
