import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hgs import perms as P
from hgs.catalog import resolve_spec
from hgs.groups import (
    CapExceededError,
    GroupError,
    Subgroup,
    center,
    centralizer,
    commutator_subgroup,
    direct_product,
    from_mul_table,
    from_perm_gens,
    is_perfect,
    is_solvable,
    normal_subgroups,
    order_census,
    quotient_group,
    subgroup_closure,
)


def test_c2_from_table():
    G = from_mul_table([[0, 1], [1, 0]], name="C2")
    assert G.order == 2
    assert G.elt_order.tolist() == [1, 2]
    assert G.inv.tolist() == [0, 1]


def test_rejects_non_associative_table():
    # a quasigroup table with identity but broken associativity
    table = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(GroupError, match="associativity"):
        from_mul_table(table)


def test_rejects_bad_identity_and_bad_rows():
    with pytest.raises(GroupError, match="identity"):
        from_mul_table([[1, 0], [0, 1]])
    with pytest.raises(GroupError, match="not a permutation"):
        from_mul_table([[0, 1], [1, 1]])


def test_a5_closure_from_cycle_generators():
    a = P.parse_cycles("(0 1 2 3 4)", 5)
    b = P.parse_cycles("(2 3 4)", 5)
    G = from_perm_gens([a, b], name="A5")
    assert G.order == 60
    assert order_census(G, 2) == 15
    assert center(G).size == 1


def test_closure_cap_enforced():
    a = P.parse_cycles("(0 1 2 3 4)", 5)
    b = P.parse_cycles("(2 3 4)", 5)
    with pytest.raises(CapExceededError):
        from_perm_gens([a, b], element_cap=10)


def test_rejects_non_bijective_generator():
    with pytest.raises(GroupError, match="bijection"):
        from_perm_gens([np.array([0, 0, 1], dtype=np.int32)])


def test_s5_normal_subgroup_lattice(S5):
    subs = normal_subgroups(S5)
    assert [s.size for s in subs] == [1, 60, 120]
    a5 = subs[1]
    assert a5.is_normal()


def test_order_census_regions(S5):
    a5 = [s for s in normal_subgroups(S5) if s.size == 60][0]
    assert order_census(S5, 2, "inside", a5) == 15
    assert order_census(S5, 2, "outside", a5) == 10
    assert order_census(S5, 2) == 25
    assert order_census(S5, 1) == 1


def test_census_partitions_group(S5):
    total = sum(order_census(S5, int(k)) for k in np.unique(S5.elt_order))
    assert total == S5.order


def test_centralizer_of_transposition(S5):
    # index of (0 1) in the S5 table
    transpositions = np.flatnonzero(S5.elt_order == 2)
    sizes = {centralizer(S5, int(t)).size for t in transpositions}
    assert 12 in sizes  # 2 * |S3| for a single transposition
    assert centralizer(S5, 0).size == 120


def test_centralizer_contains_element_and_center(A5):
    for x in [0, 3, 17]:
        c = centralizer(A5, x)
        assert c.contains(x)
        assert c.contains(0)


def test_centralizer_contains_center_of_product(A5xC2):
    z = center(A5xC2)
    for x in [0, 5, 33, 119]:
        c = centralizer(A5xC2, x)
        assert all(c.contains(int(m)) for m in z.members)


def test_perm_rep_is_injective_and_multiplicative(A5):
    rep = A5.perm_rep
    assert rep is not None
    keys = {row.tobytes() for row in rep.images}
    assert len(keys) == A5.order
    rng = np.random.default_rng(5)
    for _ in range(20):
        x, y = rng.integers(0, A5.order, 2)
        composed = rep.images[x][rep.images[y]]
        assert np.array_equal(rep.images[A5.mul[x, y]], composed)


def test_subgroup_closure_of_five_cycle(S5):
    five = int(np.flatnonzero(S5.elt_order == 5)[0])
    H = subgroup_closure(S5, [five])
    assert H.size == 5


def test_subgroup_closure_identity_only(S5):
    assert subgroup_closure(S5, []).size == 1


def test_direct_product_structure(A5):
    C2 = from_mul_table([[0, 1], [1, 0]], name="C2")
    G = direct_product(A5, C2)
    assert G.order == 120
    assert center(G).size == 2
    assert sorted(s.size for s in normal_subgroups(G)) == [1, 2, 60, 120]


def test_quotient_by_center():
    SL = resolve_spec("SL(2,9)")
    Z = center(SL)
    assert Z.size == 2
    Q, coset_of = quotient_group(SL, Z)
    assert Q.order == 360
    assert coset_of[0] == 0


def test_commutator_and_solvability(S5, A5):
    assert commutator_subgroup(S5).size == 60
    assert is_perfect(A5)
    assert not is_perfect(S5)
    assert not is_solvable(S5)
    assert is_solvable(resolve_spec("D4"))


def test_subgroup_validation_rejects_non_closed(S5):
    with pytest.raises(GroupError):
        Subgroup(S5, np.array([0, 1, 2], dtype=np.int64))


def test_conjugacy_classes_partition(S5):
    classes = S5.conjugacy_classes()
    assert sum(len(c) for c in classes) == S5.order
    # S5 has 7 classes: 1, 10, 15, 20, 20, 24, 30
    assert sorted(len(c) for c in classes) == [1, 10, 15, 20, 20, 24, 30]


@given(st.integers(min_value=1, max_value=24))
@settings(max_examples=20, deadline=None)
def test_cyclic_group_census_properties(n):
    G = resolve_spec(f"C{n}")
    assert G.order == n
    # element orders in a cyclic group are divisors; census counts are phi(d)
    for k in np.unique(G.elt_order):
        assert n % int(k) == 0
    total = sum(order_census(G, int(k)) for k in np.unique(G.elt_order))
    assert total == n


def test_word_tree_reaches_everything(S5):
    assert (S5.tree_gen[1:] >= 0).all()
    # every non-identity element factors as gen * parent
    for x in range(1, S5.order):
        g = S5.gens[S5.tree_gen[x]]
        assert S5.mul[g, S5.tree_parent[x]] == x
