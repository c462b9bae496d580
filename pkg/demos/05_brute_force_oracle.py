#!/usr/bin/env python3
"""The brute-force oracle against the holomorph route, and duality.

At order 8 the full symmetric group S8 still has only 2760 regular
subgroups, so every count can be checked against a direct enumeration.
The centralizer duals pair up the counted subgroups: non-abelian ones come
in distinct pairs of the same isomorphism type, abelian ones are self-dual.
"""

from hgs import (
    count_brute_force,
    count_byott,
    dual_regular_subgroup,
    resolve_spec,
)

labels = ["C8", "C4xC2", "C2xC2xC2", "D4", "Q8"]
groups = {label: resolve_spec(label) for label in labels}

print("e(G, N) at order 8, oracle vs holomorph route:")
header = " ".join(f"{label:>9}" for label in labels)
print(f"{'':12} {header}")
for gl in labels:
    brute = count_brute_force(groups[gl], groups, g_label=gl)
    cells = []
    for nl in labels:
        b = brute.counts.get(nl, 0)
        y = count_byott(groups[gl], groups[nl]).value
        cells.append(f"{b}={y}" if b == y else f"{b}!={y}")
    print(f"{gl:12} " + " ".join(f"{c:>9}" for c in cells))

print("\ndual pairing of the subgroups counted for G = Q8:")
brute = count_brute_force(groups["Q8"], groups, g_label="Q8")
for D in brute.subgroups:
    dual = dual_regular_subgroup(D)
    tag = "self-dual" if dual.key() == D.key() else "paired"
    print(f"  type {D.iso_label:<10} {tag}")
