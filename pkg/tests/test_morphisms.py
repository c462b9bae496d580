import numpy as np
import pytest

from hgs.catalog import resolve_spec
from hgs.groups import GroupError, normal_subgroups
from hgs.morphisms import (
    Homomorphism,
    are_isomorphic,
    automorphism_group,
    enumerate_homomorphisms,
    fixed_points,
    is_fixed_point_free,
)


def test_homomorphism_rejects_non_multiplicative(S5):
    images = np.zeros(120, dtype=np.int32)
    images[1] = 1
    with pytest.raises(GroupError):
        Homomorphism(S5, S5, images)


def test_aut_a5_is_s5(A5):
    aut = automorphism_group(A5)
    assert aut.order == 120
    assert aut.inner.size == 60
    assert aut.out_order() == 2
    assert are_isomorphic(aut.carrier, resolve_spec("S5")) is not None


def test_aut_a6_has_order_1440(A6):
    aut = automorphism_group(A6)
    assert aut.order == 1440
    assert aut.inner.size == 360
    assert aut.out_order() == 4


def test_aut_c4_is_units_mod_4():
    assert automorphism_group(resolve_spec("C4")).order == 2


def test_aut_action_is_faithful(A5):
    aut = automorphism_group(A5)
    keys = {row.tobytes() for row in aut.perms}
    assert len(keys) == aut.order


def test_aut_carrier_multiplication_is_composition(A5):
    aut = automorphism_group(A5)
    rng = np.random.default_rng(11)
    for _ in range(25):
        a, b = rng.integers(0, aut.order, 2)
        composed = aut.perms[a][aut.perms[b]]
        c = int(aut.carrier.mul[a, b])
        assert np.array_equal(aut.perms[c], composed)


def test_hom_c2_to_c3_only_trivial():
    C2 = resolve_spec("C2")
    C3 = resolve_spec("C3")
    homs = list(enumerate_homomorphisms(C2, C3))
    assert len(homs) == 1
    assert homs[0].images.tolist() == [0, 0]


def test_hom_a5_to_c2_only_trivial(A5):
    homs = list(enumerate_homomorphisms(A5, resolve_spec("C2")))
    assert len(homs) == 1


def test_hom_s3_to_s3_count():
    S3 = resolve_spec("S3")
    homs = list(enumerate_homomorphisms(S3, S3))
    # trivial + 3 sign-like maps onto each order-2 subgroup + 6 automorphisms
    assert len(homs) == 10
    assert len([h for h in homs if h.is_bijective()]) == 6


def test_hom_enumeration_is_deterministic():
    S3 = resolve_spec("S3")
    first = [h.images.tolist() for h in enumerate_homomorphisms(S3, S3)]
    second = [h.images.tolist() for h in enumerate_homomorphisms(S3, S3)]
    assert first == second


def test_kernel_filter(A5xC2):
    PGL = resolve_spec("PGL(2,9)")
    c2 = [s for s in normal_subgroups(A5xC2) if s.size == 2][0]
    S5 = resolve_spec("S5")
    count = sum(1 for _ in enumerate_homomorphisms(A5xC2, S5, kernel_filter=c2))
    # maps killing the C2 factor restrict to embeddings of A5: |Aut(A5)| of them
    assert count == 120


def test_surjective_filter():
    C4 = resolve_spec("C4")
    C2 = resolve_spec("C2")
    from hgs.groups import full_subgroup
    onto = list(enumerate_homomorphisms(C4, C2, surjective_to=full_subgroup(C2)))
    assert len(onto) == 1


def test_fixed_points_diagonal(A5):
    aut = automorphism_group(A5)
    ident = aut.action_hom(0)
    assert len(fixed_points(ident, ident)) == 60
    assert not is_fixed_point_free(ident, ident)


def test_fixed_points_of_inner_automorphism(A5):
    aut = automorphism_group(A5)
    five = int(np.flatnonzero(A5.elt_order == 5)[0])
    conj_perm = A5.mul[A5.mul[five, np.arange(60)], A5.inv[five]]
    idx = aut.perm_index(conj_perm)
    fp = fixed_points(aut.action_hom(idx), aut.action_hom(0))
    assert len(fp) == 5  # centralizer of a 5-cycle in A5


def test_fixed_points_requires_shared_endpoints(A5, S5):
    aut = automorphism_group(A5)
    with pytest.raises(GroupError):
        fixed_points(aut.action_hom(0), Homomorphism(S5, S5, np.arange(120)))


def test_are_isomorphic_rejects_c4_v4():
    assert are_isomorphic(resolve_spec("C4"), resolve_spec("V4")) is None


def test_are_isomorphic_reflexive_and_symmetric(small_catalog):
    for label, G in small_catalog.items():
        iso = are_isomorphic(G, G)
        assert iso is not None and iso.is_bijective()
    assert are_isomorphic(small_catalog["D4"], small_catalog["Q8"]) is None
    assert are_isomorphic(small_catalog["Q8"], small_catalog["D4"]) is None


def test_pgl29_not_isomorphic_to_s6():
    PGL = resolve_spec("PGL(2,9)")
    S6 = resolve_spec("S6")
    assert PGL.order == S6.order == 720
    # PGL(2,9) has elements of order 8, S6 does not
    assert (PGL.elt_order == 8).any()
    assert not (S6.elt_order == 8).any()
    assert are_isomorphic(PGL, S6) is None


def test_isomorphism_images_are_verified(A5):
    iso = are_isomorphic(A5, resolve_spec("PSL(2,4)"))
    assert iso is not None
    img = iso.images
    T = iso.target
    assert np.array_equal(img[A5.mul], T.mul[img][:, img])
    # symmetry: the reverse direction succeeds too
    assert are_isomorphic(resolve_spec("PSL(2,4)"), A5) is not None
