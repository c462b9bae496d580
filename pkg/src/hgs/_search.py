"""Staged backtracking over generator images.

The engine fixes images for one generator at a time.  After each assignment
it extends the candidate map along the left-factorization word tree of the
subgroup generated so far (element = gen * parent) and checks every
generator-against-element product available at that stage, so bad branches
die on the first violated pair.  Survivors of a total assignment still get a
full n^2 multiplicativity check before being emitted.
"""

from __future__ import annotations

from typing import Iterator, Sequence

import numpy as np


class StageData:
    """Word-tree stages for a fixed group and effective generator chain."""

    __slots__ = ("gens", "nodes", "checks", "stage_sizes", "order")

    def __init__(self, mul: np.ndarray, gens: Sequence[int]):
        n = mul.shape[0]
        self.order = n
        mul_rows = mul.tolist()
        member_list: list[int] = [0]
        member_set = {0}
        eff_gens: list[int] = []
        self.nodes: list[list[tuple[int, int, int]]] = []
        self.checks: list[list[tuple[int, int, int]]] = []
        self.stage_sizes: list[int] = []
        for g in gens:
            if g in member_set:
                continue  # redundant generator: its image is forced anyway
            k = len(eff_gens)
            eff_gens.append(int(g))
            prev_count = len(member_list)
            nodes: list[tuple[int, int, int]] = []
            tree_edge: set[tuple[int, int]] = set()
            pos = 0
            while pos < len(member_list):
                x = member_list[pos]
                pos += 1
                for gi in range(k + 1):
                    y = mul_rows[eff_gens[gi]][x]
                    if y not in member_set:
                        member_set.add(y)
                        member_list.append(y)
                        nodes.append((y, gi, x))
                        tree_edge.add((gi, x))
            checks: list[tuple[int, int, int]] = []
            new_members = member_list[prev_count:]
            for gi in range(k + 1):
                targets = member_list if gi == k else new_members
                row = mul_rows[eff_gens[gi]]
                s = eff_gens[gi]
                for w in targets:
                    if (gi, w) in tree_edge:
                        continue
                    checks.append((s, w, row[w]))
            self.nodes.append(nodes)
            self.checks.append(checks)
            self.stage_sizes.append(len(member_list))
        self.gens = eff_gens
        if len(member_list) != n:
            raise ValueError("generators do not generate the group")


def stage_data(G) -> StageData:
    """StageData for a FiniteGroup, cached on the group."""
    key = "stage_data"
    if key not in G._cache:
        G._cache[key] = StageData(G.mul, G.gens)
    return G._cache[key]


def full_hom_check(mulS: np.ndarray, mulT: np.ndarray, img: np.ndarray) -> bool:
    """Exhaustive pair check img[x*y] == img[x]*img[y]."""
    return bool(np.array_equal(img[mulS], mulT[img][:, img]))


def iter_hom_images(
    S,
    T,
    candidates: Sequence[Sequence[int]],
    *,
    bijective: bool = False,
) -> Iterator[np.ndarray]:
    """All maps S -> T that are homomorphisms on the given generator images.

    ``candidates[k]`` lists allowed images for the k-th effective generator of
    S, tried in the given order; emission order is the lexicographic order of
    generator-image tuples, so it is deterministic.
    """
    sd = stage_data(S)
    nS, nT = S.order, T.order
    if len(candidates) != len(sd.gens):
        raise ValueError("need one candidate list per effective generator")
    if not sd.gens:
        yield np.zeros(nS, dtype=np.int32)
        return
    mulT_rows = T.mul_rows()
    mulS_arr, mulT_arr = S.mul, T.mul
    img = [-1] * nS
    img[0] = 0
    used = bytearray(nT)
    used[0] = 1
    n_stages = len(sd.gens)

    def drive(k: int) -> Iterator[np.ndarray]:
        nodes = sd.nodes[k]
        checks = sd.checks[k]
        gen_elt = sd.gens[k]
        gens = sd.gens
        for x in candidates[k]:
            if bijective and used[x]:
                continue
            img[gen_elt] = x
            if bijective:
                used[x] = 1
            trail = [gen_elt]
            ok = True
            for e, gi, par in nodes:
                if e == gen_elt:
                    continue
                v = mulT_rows[img[gens[gi]]][img[par]]
                if bijective and used[v]:
                    ok = False
                    break
                img[e] = v
                if bijective:
                    used[v] = 1
                trail.append(e)
            if ok:
                for s, w, u in checks:
                    if img[u] != mulT_rows[img[s]][img[w]]:
                        ok = False
                        break
            if ok:
                if k + 1 < n_stages:
                    yield from drive(k + 1)
                else:
                    final = np.array(img, dtype=np.int32)
                    if full_hom_check(mulS_arr, mulT_arr, final):
                        yield final
            for e in trail:
                if bijective:
                    used[img[e]] = 0
                img[e] = -1

    yield from drive(0)
