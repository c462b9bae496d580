"""Holomorph machinery: crossed homomorphisms and regular subgroups.

Hol(N) is the semidirect product rho(N) x| Aut(N) inside Perm(N).  It is kept
as pairs (eta, alpha) acting on N by x -> alpha(x) * eta^-1; the full
permutation group on N is never materialized.  A regular subgroup of Hol(N)
isomorphic to G is parametrized by a homomorphism f: G -> Aut(N) together
with a bijective crossed homomorphism g: G -> N with respect to f, i.e.

    g(d1 * d2) = g(d1) * f(d1)(g(d2))        for all d1, d2,

and the subgroup is {(g(d), f(d)) : d in G}.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Optional, Sequence

import numpy as np

from . import _search
from .groups import (
    FiniteGroup,
    GroupError,
    Subgroup,
    _readonly,
    quotient_group,
)
from .morphisms import (
    AutomorphismGroup,
    Homomorphism,
    automorphism_group,
    enumerate_homomorphisms,
)

HOL_CONVENTION = "rho-semidirect-v1"


class EngineError(Exception):
    """An internal invariant failed; indicates a bug, not bad input."""


class Holomorph:
    """Hol(N) as pairs (eta, alpha), alpha indexed into Aut(N)'s carrier."""

    def __init__(self, base: FiniteGroup, aut: AutomorphismGroup):
        self.base = base
        self.aut = aut
        self.order = base.order * aut.order

    def pair_mul(self, p: tuple[int, int], q: tuple[int, int]) -> tuple[int, int]:
        e1, a1 = p
        e2, a2 = q
        return (int(self.base.mul[e1, self.aut.perms[a1, e2]]),
                int(self.aut.carrier.mul[a1, a2]))

    def pair_inv(self, p: tuple[int, int]) -> tuple[int, int]:
        e, a = p
        ai = int(self.aut.carrier.inv[a])
        return (int(self.aut.perms[ai, self.base.inv[e]]), ai)

    def pair_order(self, p: tuple[int, int]) -> int:
        q = p
        k = 1
        while q != (0, 0):
            q = self.pair_mul(q, p)
            k += 1
        return k

    def pair_perm(self, p: tuple[int, int]) -> np.ndarray:
        """The pair as a permutation of the base set: x -> alpha(x) * eta^-1."""
        e, a = p
        return self.base.mul[self.aut.perms[a], self.base.inv[e]]

    def lambda_pair(self, eta: int) -> tuple[int, int]:
        """Left translation by eta as a holomorph pair."""
        base = self.base
        conj_key = base.mul[base.mul[eta, np.arange(base.order)], base.inv[eta]]
        return (int(base.inv[eta]), self.aut.perm_index(conj_key))

    def rho_pair(self, eta: int) -> tuple[int, int]:
        """Right translation by eta^-1 as a holomorph pair."""
        return (int(eta), 0)

    def all_pair_perms(self) -> np.ndarray:
        """Permutation image of the whole holomorph (small bases only)."""
        n, m = self.base.order, self.aut.order
        out = np.empty((n * m, n), dtype=np.int32)
        for e in range(n):
            col = self.base.inv[e]
            out[e * m:(e + 1) * m] = self.base.mul[self.aut.perms, col]
        return out

    def __repr__(self) -> str:
        return f"<Holomorph of {self.base.name or '?'} order {self.order}>"


def build_holomorph(N: FiniteGroup) -> Holomorph:
    if "holomorph" not in N._cache:
        N._cache["holomorph"] = Holomorph(N, automorphism_group(N))
    return N._cache["holomorph"]


# -- crossed homomorphisms -----------------------------------------------------


@dataclass
class CrossedHom:
    """A pair (f, g) with g a crossed homomorphism with respect to f."""

    hol: Holomorph
    f: Homomorphism  # G -> Aut(N) carrier
    g: np.ndarray    # |G| indices into N
    bijective: bool

    @property
    def source(self) -> FiniteGroup:
        return self.f.source

    def pairs(self) -> list[tuple[int, int]]:
        return [(int(self.g[d]), int(self.f.images[d])) for d in range(len(self.g))]

    def subgroup_key(self) -> tuple[int, ...]:
        """Canonical key for the regular subgroup this pair parametrizes."""
        m = self.hol.aut.order
        return tuple(sorted(int(self.g[d]) * m + int(self.f.images[d])
                            for d in range(len(self.g))))

    def verify(self) -> bool:
        """Exhaustive pair check of the crossed relation."""
        return crossed_relation_holds(self.hol, self.f, self.g)


def crossed_relation_holds(hol: Holomorph, f: Homomorphism, g: np.ndarray) -> bool:
    G = f.source
    N = hol.base
    F = hol.aut.perms[f.images]          # row d = f(d) acting on N
    applied = F[np.arange(G.order)[:, None], g[None, :]]
    rhs = N.mul[g[:, None], applied]
    return bool(np.array_equal(g[G.mul], rhs))


def _crossed_candidates(hol: Holomorph, f: Homomorphism,
                        bijective_only: bool) -> list[list[int]]:
    """Per-generator g-image candidates, pruned by holomorph pair order."""
    G = f.source
    sd = _search.stage_data(G)
    out = []
    for s in sd.gens:
        target_order = int(G.elt_order[s])
        a = int(f.images[s])
        allowed = []
        for x in range(hol.base.order):
            k = hol.pair_order((x, a))
            if bijective_only:
                ok = k == target_order
            else:
                ok = target_order % k == 0
            if ok:
                allowed.append(x)
        out.append(allowed)
    return out


def crossed_homomorphisms(
    hol: Holomorph,
    f: Homomorphism,
    *,
    bijective_only: bool = False,
) -> Iterator[CrossedHom]:
    """All crossed homomorphisms g: G -> N with respect to f, DFS order.

    Generator images are assigned in ascending index order; each partial
    assignment is extended along the word tree and rejected on the first
    violated product (or repeated value, when ``bijective_only``).  Fully
    assigned maps get the exhaustive pair check before emission.
    """
    G = f.source
    N = hol.base
    if f.target is not hol.aut.carrier:
        raise GroupError("f must land in the automorphism carrier of the holomorph")
    sd = _search.stage_data(G)
    nG, nN = G.order, N.order
    if not sd.gens:
        if not (bijective_only and nN != 1):
            g = np.zeros(1, dtype=np.int32)
            yield CrossedHom(hol, f, _readonly(g), bijective=(nN == 1))
        return
    candidates = _crossed_candidates(hol, f, bijective_only)
    mulN_rows = N.mul_rows()
    # permutation rows of f at the generators, as plain lists
    frow = {s: hol.aut.perms[int(f.images[s])].tolist() for s in sd.gens}
    img = [-1] * nG
    img[0] = 0
    used = bytearray(nN)
    used[0] = 1
    n_stages = len(sd.gens)

    def drive(k: int) -> Iterator[CrossedHom]:
        nodes = sd.nodes[k]
        checks = sd.checks[k]
        gen_elt = sd.gens[k]
        gens = sd.gens
        for x in candidates[k]:
            if bijective_only and used[x]:
                continue
            img[gen_elt] = x
            if bijective_only:
                used[x] = 1
            trail = [gen_elt]
            ok = True
            for e, gi, par in nodes:
                if e == gen_elt:
                    continue
                s = gens[gi]
                v = mulN_rows[img[s]][frow[s][img[par]]]
                if bijective_only and used[v]:
                    ok = False
                    break
                img[e] = v
                if bijective_only:
                    used[v] = 1
                trail.append(e)
            if ok:
                for s, w, u in checks:
                    if img[u] != mulN_rows[img[s]][frow[s][img[w]]]:
                        ok = False
                        break
            if ok:
                if k + 1 < n_stages:
                    yield from drive(k + 1)
                else:
                    g = np.array(img, dtype=np.int32)
                    if crossed_relation_holds(hol, f, g):
                        bij = bool(len(np.unique(g)) == nN) if nG == nN else False
                        if not bijective_only or bij:
                            yield CrossedHom(hol, f, _readonly(g), bijective=bij)
            for e in trail:
                if bijective_only:
                    used[img[e]] = 0
                img[e] = -1

    yield from drive(0)


def derive_h(c: CrossedHom) -> Homomorphism:
    """The companion map h(d) = conj(g(d)) . f(d), valued in Aut(N)."""
    hol = c.hol
    G = c.source
    N = hol.base
    base_pts = np.array(hol.aut._base_points, dtype=np.int64)
    images = np.empty(G.order, dtype=np.int32)
    for d in range(G.order):
        gd = int(c.g[d])
        fp = hol.aut.perms[int(c.f.images[d])]
        key_vals = N.mul[N.mul[gd, fp[base_pts]], N.inv[gd]]
        images[d] = hol.aut._index.get(tuple(int(v) for v in key_vals), -1)
        if images[d] < 0:
            raise EngineError("conj(g(d)).f(d) is not an automorphism of N")
    try:
        return Homomorphism(G, hol.aut.carrier, images)
    except GroupError as exc:
        raise EngineError(f"derived map h is not a homomorphism: {exc}") from exc


# -- quotient induction --------------------------------------------------------


def is_characteristic(aut: AutomorphismGroup, H: Subgroup) -> bool:
    if H.parent is not aut.base:
        raise GroupError("subgroup does not live in the automorphism base")
    mask = H.member_mask()
    return bool(mask[aut.perms[:, H.members]].all())


def induce_on_quotient(c: CrossedHom, L: Subgroup) -> tuple[CrossedHom, Subgroup]:
    """Push (f, g) to N/L for a characteristic subgroup L of N.

    Returns the induced crossed homomorphism on the quotient and the
    preimage subgroup g^-1(L) of the source.
    """
    hol = c.hol
    N = hol.base
    if not is_characteristic(hol.aut, L):
        raise GroupError("induction requires a characteristic subgroup")
    G = c.source
    Q, coset_of = quotient_group(N, L, name=f"{N.name}/|{L.size}|" if N.name else None)
    autQ = automorphism_group(Q)
    reps = np.empty(Q.order, dtype=np.int64)
    reps[coset_of] = np.arange(N.order)  # one representative per coset
    # map each automorphism of N appearing in f to its induced action on Q
    induced_cache: dict[int, int] = {}
    h_images = np.empty(G.order, dtype=np.int32)
    base_pts = list(autQ._base_points)
    for d in range(G.order):
        a = int(c.f.images[d])
        if a not in induced_cache:
            perm_q = coset_of[hol.aut.perms[a][reps]]
            induced_cache[a] = autQ.perm_index(perm_q)
        h_images[d] = induced_cache[a]
    f_bar = Homomorphism(G, autQ.carrier, h_images)
    g_bar = coset_of[c.g].astype(np.int32)
    hol_q = build_holomorph(Q)
    if not crossed_relation_holds(hol_q, f_bar, g_bar):
        raise EngineError("induced map is not a crossed homomorphism")
    bij = bool(len(np.unique(g_bar)) == Q.order) if G.order == Q.order else False
    induced = CrossedHom(hol_q, f_bar, _readonly(g_bar), bijective=bij)
    preimage = Subgroup(G, np.flatnonzero(np.isin(c.g, L.members)))
    return induced, preimage


# -- regular subgroups ---------------------------------------------------------


@dataclass
class RegularSubgroup:
    """A regular subgroup of Perm(X), stored by its member permutations."""

    base: FiniteGroup          # the set X acted on, with its own group law
    members: np.ndarray        # (|X|, |X|) permutation rows, sorted canonically
    ambient: str               # "perm" or "holomorph"
    iso_label: str | None = None

    def __post_init__(self):
        members = np.asarray(self.members, dtype=np.int32)
        order = np.lexsort(members.T[::-1])
        members = members[order]
        self.members = _readonly(members)
        n = self.base.order
        if members.shape != (n, n):
            raise GroupError("regular subgroup must have one member per point")
        evals = members[:, 0]
        if len(np.unique(evals)) != n:
            raise GroupError("evaluation at the identity is not bijective")

    def member_set(self) -> set[bytes]:
        return {np.ascontiguousarray(row).tobytes() for row in self.members}

    def key(self) -> tuple[bytes, ...]:
        return tuple(np.ascontiguousarray(row).tobytes() for row in self.members)

    def as_group(self, name: str | None = None) -> FiniteGroup:
        """The subgroup as an abstract group, indexed by evaluation at 0.

        Point x names the unique member sending 0 to x, so the product of
        points x and y is simply row_x[y]; the member table itself is the
        Cayley table.
        """
        n = self.base.order
        by_eval = np.empty(n, dtype=np.int64)
        by_eval[self.members[:, 0]] = np.arange(n)
        table = self.members[by_eval]
        return FiniteGroup(table.astype(np.int32), name=name,
                           validate=n <= 128, assume_associative=n > 128)


def is_subgroup_of_perms(members: np.ndarray) -> bool:
    keys = {np.ascontiguousarray(r).tobytes() for r in members}
    for i in range(len(members)):
        comp = members[i][members]
        for row in comp:
            if np.ascontiguousarray(row).tobytes() not in keys:
                return False
    return True


def normalized_by(D: RegularSubgroup, conjugator_perms: Sequence[np.ndarray]) -> bool:
    """True when every conjugator keeps D's member set fixed setwise."""
    keys = D.member_set()
    for e in conjugator_perms:
        e = np.asarray(e, dtype=np.int32)
        e_inv = np.empty_like(e)
        e_inv[e] = np.arange(len(e), dtype=np.int32)
        conj = e[D.members[:, e_inv]]
        for row in conj:
            if np.ascontiguousarray(row).tobytes() not in keys:
                return False
    return True


def lambda_perms(G: FiniteGroup, elements: Optional[Sequence[int]] = None) -> np.ndarray:
    """Left-translation permutations x -> g x."""
    if elements is None:
        return G.mul.copy()
    return G.mul[np.asarray(elements, dtype=np.int64)]


def rho_perms(G: FiniteGroup, elements: Optional[Sequence[int]] = None) -> np.ndarray:
    """Right-translation permutations x -> x g^-1."""
    if elements is None:
        elements = np.arange(G.order)
    elements = np.asarray(elements, dtype=np.int64)
    return G.mul.T[G.inv[elements]]


def dual_regular_subgroup(D: RegularSubgroup) -> RegularSubgroup:
    """Centralizer of a regular subgroup in the full symmetric group.

    Solved through the regular action: the unique member sending the
    identity point to x plays the role of x under evaluation, and the dual's
    members are the transported right translations.
    """
    n = D.base.order
    members = D.members
    by_eval = np.empty(n, dtype=np.int64)
    by_eval[members[:, 0]] = np.arange(n)
    DX = members[by_eval]        # DX[x] = the member with DX[x][0] == x
    dual_members = DX[:, members[:, 0]].T.copy()
    dual = RegularSubgroup(D.base, dual_members, ambient="perm")
    if not is_subgroup_of_perms(dual.members):
        raise EngineError("centralizer transport did not produce a subgroup")
    for d in members:
        if not np.array_equal(d[dual.members], dual.members[:, d]):
            raise EngineError("dual member fails to centralize")
    return dual


def regular_subgroup_from_crossed(c: CrossedHom, iso_label: str | None = None) -> RegularSubgroup:
    hol = c.hol
    rows = np.stack([hol.pair_perm((int(c.g[d]), int(c.f.images[d])))
                     for d in range(c.source.order)])
    return RegularSubgroup(hol.base, rows, ambient="holomorph", iso_label=iso_label)


# -- counting runs with checkpoints --------------------------------------------


def group_digest(G: FiniteGroup) -> str:
    h = hashlib.sha256()
    h.update(str(G.order).encode())
    h.update(np.ascontiguousarray(G.mul).tobytes())
    h.update(str(list(G.gens)).encode())
    return h.hexdigest()[:16]


@dataclass
class Checkpoint:
    g_digest: str
    n_digest: str
    convention: str
    f_index: int          # last completed outer index, -1 for none
    pair_count: int

    def write(self, path: Path) -> None:
        lines = [
            "hgs-checkpoint/1",
            f"g-digest: {self.g_digest}",
            f"n-digest: {self.n_digest}",
            f"convention: {self.convention}",
            f"f-index: {self.f_index}",
            f"pair-count: {self.pair_count}",
        ]
        tmp = path.with_suffix(path.suffix + ".tmp")
        tmp.write_text("\n".join(lines) + "\n", encoding="utf-8")
        tmp.replace(path)

    @staticmethod
    def read(path: Path) -> "Checkpoint":
        lines = path.read_text(encoding="utf-8").splitlines()
        if not lines or lines[0].strip() != "hgs-checkpoint/1":
            raise GroupError(f"{path}: not a checkpoint file")
        fields = {}
        for i, line in enumerate(lines[1:], start=2):
            if not line.strip():
                continue
            if ":" not in line:
                raise GroupError(f"{path}: line {i}: expected 'field: value'")
            k, v = line.split(":", 1)
            fields[k.strip()] = v.strip()
        try:
            return Checkpoint(
                g_digest=fields["g-digest"],
                n_digest=fields["n-digest"],
                convention=fields["convention"],
                f_index=int(fields["f-index"]),
                pair_count=int(fields["pair-count"]),
            )
        except KeyError as exc:
            raise GroupError(f"{path}: missing checkpoint field {exc}")


@dataclass
class RegularSubgroupCount:
    pair_count: int
    subgroup_count: int
    samples: list[RegularSubgroup]
    f_total: int


def count_bijective_crossed(hol: Holomorph, f: Homomorphism,
                            collect: bool = False) -> tuple[int, list]:
    count = 0
    keys = []
    for c in crossed_homomorphisms(hol, f, bijective_only=True):
        count += 1
        if collect:
            keys.append(c.subgroup_key())
    return count, keys


def regular_subgroups_in_holomorph(
    N: FiniteGroup,
    G: FiniteGroup,
    *,
    collect_subgroups: bool = False,
    checkpoint_path: Optional[Path] = None,
    jobs: int = 1,
    log=None,
) -> RegularSubgroupCount:
    """Count (and optionally collect) regular subgroups of Hol(N) isomorphic to G.

    The outer loop runs over f in Hom(G, Aut(N)) in a fixed order, so a
    checkpoint records the last completed f-index and the running pair count;
    resuming from it reproduces identical totals.
    """
    if N.order != G.order:
        raise GroupError("regular subgroups need |N| = |G|")
    hol = build_holomorph(N)
    aut_g_order = automorphism_group(G).order
    f_list = list(enumerate_homomorphisms(G, hol.aut.carrier))
    start_index = 0
    pair_count = 0
    ckpt = None
    if checkpoint_path is not None:
        checkpoint_path = Path(checkpoint_path)
        if collect_subgroups:
            raise GroupError("checkpointing is only supported for counting runs")
        if checkpoint_path.exists():
            ckpt = Checkpoint.read(checkpoint_path)
            if (ckpt.g_digest != group_digest(G) or ckpt.n_digest != group_digest(N)
                    or ckpt.convention != HOL_CONVENTION):
                raise GroupError(f"{checkpoint_path}: checkpoint belongs to a different run")
            start_index = ckpt.f_index + 1
            pair_count = ckpt.pair_count
    seen_keys: dict[tuple, int] = {}
    sample_pairs: list[CrossedHom] = []

    if jobs > 1:
        if collect_subgroups:
            raise GroupError("subgroup collection runs are serial; drop jobs")
        from .parallel import parallel_crossed_counts
        results = parallel_crossed_counts(N, G, len(f_list), start_index, jobs)
        for fi, count in results:
            pair_count += count
            if checkpoint_path is not None:
                Checkpoint(group_digest(G), group_digest(N), HOL_CONVENTION,
                           fi, pair_count).write(checkpoint_path)
            if log:
                log(fi, len(f_list), pair_count)
    else:
        for fi in range(start_index, len(f_list)):
            f = f_list[fi]
            count = 0
            for c in crossed_homomorphisms(hol, f, bijective_only=True):
                count += 1
                if collect_subgroups:
                    key = c.subgroup_key()
                    if key not in seen_keys:
                        seen_keys[key] = fi
                        sample_pairs.append(c)
            pair_count += count
            if checkpoint_path is not None:
                Checkpoint(group_digest(G), group_digest(N), HOL_CONVENTION,
                           fi, pair_count).write(checkpoint_path)
            if log:
                log(fi, len(f_list), pair_count)

    if pair_count % aut_g_order != 0:
        raise EngineError(
            f"pair count {pair_count} not divisible by |Aut(G)| = {aut_g_order}")
    samples = [regular_subgroup_from_crossed(c) for c in sample_pairs]
    if collect_subgroups and len(samples) != pair_count // aut_g_order:
        raise EngineError("collected subgroup count disagrees with the pair count")
    return RegularSubgroupCount(pair_count, pair_count // aut_g_order,
                                samples, len(f_list))


# -- normalizer identity (desk-scale literal check) -----------------------------


def holomorph_equals_translation_normalizers(G: FiniteGroup) -> bool:
    """Check Norm(lambda(G)) = image of Hol(G) = Norm(rho(G)) inside Perm(G).

    Exhaustive over all |G|! permutations, so callers cap |G| at 6.
    """
    from itertools import permutations
    n = G.order
    if n > 6:
        raise GroupError("normalizer identity check is capped at order 6")
    hol = build_holomorph(G)
    hol_keys = {np.ascontiguousarray(r).tobytes() for r in hol.all_pair_perms()}
    lam = {np.ascontiguousarray(r).tobytes() for r in lambda_perms(G)}
    rho = {np.ascontiguousarray(r).tobytes() for r in rho_perms(G)}
    lam_rows = lambda_perms(G)
    rho_rows = rho_perms(G)
    norm_lam = set()
    norm_rho = set()
    for p in permutations(range(n)):
        arr = np.array(p, dtype=np.int32)
        inv = np.empty(n, dtype=np.int32)
        inv[arr] = np.arange(n, dtype=np.int32)
        if all(np.ascontiguousarray(arr[row[inv]]).tobytes() in lam for row in lam_rows):
            norm_lam.add(arr.tobytes())
        if all(np.ascontiguousarray(arr[row[inv]]).tobytes() in rho for row in rho_rows):
            norm_rho.add(arr.tobytes())
    return norm_lam == hol_keys == norm_rho
