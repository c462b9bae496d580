#!/usr/bin/env python3
"""Tour of the group core: tables, censuses, subgroup structure.

Builds A5 and S5 from cycle generators, inspects element-order censuses,
centers, centralizers, and the normal subgroup lattice.
"""

import numpy as np

from hgs import (
    center,
    centralizer,
    normal_subgroups,
    order_census,
    resolve_spec,
    subgroup_closure,
)

A5 = resolve_spec("A5")
S5 = resolve_spec("S5")

print("A5 has order", A5.order)
print("element-order census of A5:")
for k in np.unique(A5.elt_order):
    print(f"  order {k}: {order_census(A5, int(k))} elements")

print("\ncenter of A5 has size", center(A5).size, "(trivial: A5 is simple)")

socle = [s for s in normal_subgroups(S5) if s.size == 60][0]
print("\nnormal subgroups of S5:", [s.size for s in normal_subgroups(S5)])
print("involutions inside A5:", order_census(S5, 2, "inside", socle))
print("involutions outside A5 (the transpositions):",
      order_census(S5, 2, "outside", socle))

transposition = int(np.flatnonzero(S5.elt_order == 2)[0])
print("\na centralizer of an involution has size",
      centralizer(S5, transposition).size)

five_cycle = int(np.flatnonzero(S5.elt_order == 5)[0])
print("closure of a 5-cycle has size", subgroup_closure(S5, [five_cycle]).size)
