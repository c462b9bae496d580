"""Homomorphism enumeration and automorphism group construction."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from . import _search
from .groups import (
    CapExceededError,
    FiniteGroup,
    GroupError,
    Subgroup,
    center,
    fingerprint,
    table_cap,
    _readonly,
)


class Homomorphism:
    """A total map between finite groups, stored as an image sequence.

    Construction runs the exhaustive pair check, so every instance in
    circulation is a verified homomorphism.
    """

    __slots__ = ("source", "target", "images")

    def __init__(self, source: FiniteGroup, target: FiniteGroup, images,
                 *, _checked: bool = False):
        images = np.ascontiguousarray(np.asarray(images, dtype=np.int32))
        if images.shape != (source.order,):
            raise GroupError("image sequence length must equal the source order")
        if images[0] != 0:
            raise GroupError("homomorphism must send identity to identity")
        if not _checked and not _search.full_hom_check(source.mul, target.mul, images):
            raise GroupError("map is not multiplicative")
        self.source = source
        self.target = target
        self.images = _readonly(images)

    def __call__(self, x: int) -> int:
        return int(self.images[x])

    def kernel(self) -> Subgroup:
        return Subgroup(self.source, np.flatnonzero(self.images == 0))

    def image(self) -> Subgroup:
        return Subgroup(self.target, np.unique(self.images))

    def is_injective(self) -> bool:
        return len(np.unique(self.images)) == self.source.order

    def is_surjective(self) -> bool:
        return len(np.unique(self.images)) == self.target.order

    def is_bijective(self) -> bool:
        return self.source.order == self.target.order and self.is_injective()

    def inverse_images(self) -> np.ndarray:
        """For a bijective map, the inverse image sequence."""
        if not self.is_bijective():
            raise GroupError("only bijective homomorphisms can be inverted")
        inv = np.empty(self.source.order, dtype=np.int32)
        inv[self.images] = np.arange(self.source.order, dtype=np.int32)
        return inv

    def __repr__(self) -> str:
        return (f"<Homomorphism {self.source.name or '?'} -> "
                f"{self.target.name or '?'}>")


@dataclass
class AutomorphismGroup:
    """Aut(base) with its own multiplication table.

    ``perms[i]`` realizes carrier element i as a permutation of the base
    group; ``inner`` marks the inner automorphisms inside the carrier.
    """

    base: FiniteGroup
    carrier: FiniteGroup
    perms: np.ndarray  # (|Aut|, |base|)
    inner: Subgroup
    _base_points: tuple[int, ...]
    _index: dict

    def apply(self, aut_index: int, x: int) -> int:
        return int(self.perms[aut_index, x])

    def perm_index(self, perm: np.ndarray) -> int:
        """Carrier index of an automorphism given as a permutation of base."""
        key = tuple(int(perm[b]) for b in self._base_points)
        try:
            return self._index[key]
        except KeyError:
            raise GroupError("permutation is not an automorphism of the base group")

    def action_hom(self, aut_index: int) -> Homomorphism:
        return Homomorphism(self.base, self.base, self.perms[aut_index], _checked=True)

    @property
    def order(self) -> int:
        return self.carrier.order

    def out_order(self) -> int:
        return self.carrier.order // self.inner.size


def _invariant_bins(G: FiniteGroup) -> dict[tuple[int, int], list[int]]:
    bins: dict[tuple[int, int], list[int]] = {}
    sizes = G.class_sizes_by_element()
    for x in range(G.order):
        bins.setdefault((int(G.elt_order[x]), int(sizes[x])), []).append(x)
    return bins


def _aut_candidates(G: FiniteGroup) -> list[list[int]]:
    """Per-generator image candidates: same element order, same class size."""
    sd = _search.stage_data(G)
    bins = _invariant_bins(G)
    sizes = G.class_sizes_by_element()
    out = []
    for g in sd.gens:
        out.append(bins[(int(G.elt_order[g]), int(sizes[g]))])
    return out


def automorphism_group(G: FiniteGroup) -> AutomorphismGroup:
    """All automorphisms of G by backtracking over generator images."""
    if "aut" in G._cache:
        return G._cache["aut"]
    if G.order > table_cap():
        raise CapExceededError(
            f"automorphism search capped at order {table_cap()}")
    sd = _search.stage_data(G)
    found = list(_search.iter_hom_images(G, G, _aut_candidates(G), bijective=True))
    if not found:
        raise GroupError("automorphism search lost the identity map")
    perms = np.stack(found).astype(np.int32)
    # carrier ordering: identity first, the rest by image-sequence order
    ident = np.arange(G.order, dtype=np.int32)
    keys = [tuple(int(p[b]) for b in sd.gens) for p in perms]
    order_idx = sorted(range(len(found)), key=lambda i: tuple(perms[i].tolist()))
    ident_pos = next(i for i in order_idx if np.array_equal(perms[i], ident))
    order_idx.remove(ident_pos)
    order_idx.insert(0, ident_pos)
    perms = perms[order_idx]
    keys = [keys[i] for i in order_idx]
    index = {k: i for i, k in enumerate(keys)}
    if len(index) != len(keys):
        raise GroupError("automorphism action is not faithful on generators")
    m = len(keys)
    base_pts = tuple(sd.gens)
    base_cols = list(base_pts)
    base_imgs = perms[:, base_cols]
    rows = []
    for a in range(m):
        composed = perms[a][base_imgs].tolist()  # row b = key of perms[a] o perms[b]
        rows.append([index[tuple(c)] for c in composed])
    mul = np.array(rows, dtype=np.int32)
    carrier = FiniteGroup(mul, name=f"Aut({G.name})" if G.name else "Aut",
                          validate=False, assume_associative=True)
    try:
        inner_idx = sorted({
            index[tuple(int(G.mul[G.mul[g, b], G.inv[g]]) for b in base_pts)]
            for g in range(G.order)
        })
    except KeyError:
        raise GroupError("a conjugation map is missing from the automorphism search")
    inner = Subgroup(carrier, np.array(inner_idx, dtype=np.int64))
    z = center(G).size
    if inner.size * z != G.order:
        raise GroupError("inner automorphism count disagrees with the center")
    aut = AutomorphismGroup(G, carrier, _readonly(perms), inner, base_pts, index)
    G._cache["aut"] = aut
    return aut


def _hom_candidates(S: FiniteGroup, T: FiniteGroup) -> list[list[int]]:
    sd = _search.stage_data(S)
    by_divisor: dict[int, list[int]] = {}
    out = []
    for g in sd.gens:
        m = int(S.elt_order[g])
        if m not in by_divisor:
            by_divisor[m] = [t for t in range(T.order) if m % int(T.elt_order[t]) == 0]
        out.append(by_divisor[m])
    return out


def enumerate_homomorphisms(
    S: FiniteGroup,
    T: FiniteGroup,
    *,
    kernel_filter: Optional[Subgroup] = None,
    surjective_to: Optional[Subgroup] = None,
) -> Iterator[Homomorphism]:
    """Every homomorphism S -> T exactly once, in a deterministic order.

    Optional filters keep only maps with the given kernel, or with image
    equal to the given subgroup of T; both are applied after verification.
    """
    if kernel_filter is not None and kernel_filter.parent is not S:
        raise GroupError("kernel_filter must be a subgroup of the source")
    if surjective_to is not None and surjective_to.parent is not T:
        raise GroupError("surjective_to must be a subgroup of the target")
    for img in _search.iter_hom_images(S, T, _hom_candidates(S, T)):
        if kernel_filter is not None:
            ker = np.flatnonzero(img == 0)
            if not np.array_equal(ker, kernel_filter.members):
                continue
        if surjective_to is not None:
            if not np.array_equal(np.unique(img), surjective_to.members):
                continue
        yield Homomorphism(S, T, img, _checked=True)


def fixed_points(phi: Homomorphism, psi: Homomorphism) -> np.ndarray:
    """Elements where the two maps agree; size one means fixed point free."""
    if phi.source is not psi.source or phi.target is not psi.target:
        raise GroupError("fixed points need a shared source and target")
    return np.flatnonzero(phi.images == psi.images)


def is_fixed_point_free(phi: Homomorphism, psi: Homomorphism) -> bool:
    return len(fixed_points(phi, psi)) == 1


def are_isomorphic(G: FiniteGroup, H: FiniteGroup) -> Optional[Homomorphism]:
    """An explicit isomorphism G -> H, or None.

    Invariant fingerprints reject most non-isomorphic pairs before any
    search; the remainder backtracks over generator images restricted to
    elements of equal order and class size.
    """
    if G.order != H.order:
        return None
    if fingerprint(G) != fingerprint(H):
        return None
    sd = _search.stage_data(G)
    bins = _invariant_bins(H)
    sizes = G.class_sizes_by_element()
    candidates = []
    for g in sd.gens:
        key = (int(G.elt_order[g]), int(sizes[g]))
        if key not in bins:
            return None
        candidates.append(bins[key])
    for img in _search.iter_hom_images(G, H, candidates, bijective=True):
        return Homomorphism(G, H, img, _checked=True)
    return None
