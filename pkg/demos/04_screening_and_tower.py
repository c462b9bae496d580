#!/usr/bin/env python3
"""Screening candidate types at order 720, and the Aut(A6) tower.

PGL(2,9) and M10 are the two almost simple groups with socle A6 of index 2
other than S6.  The screen shows why the double cover SL(2,9) admits no
structures (an exact-commutation lifting condition fails, with an explicit
witness pair), while A6 x C2 passes the shape test.
"""

from hgs import (
    catalog_aut6_tower,
    count_product_type,
    count_self_type,
    normal_subgroups,
    order_census,
    resolve_spec,
    screen_candidate,
)

tower = catalog_aut6_tower()
print("index-2 subgroups of Aut(A6), labeled by outer element orders:")
for label in ("S6", "PGL(2,9)", "M10"):
    G = tower[label]
    socle = [s for s in normal_subgroups(G) if s.size == 360][0]
    outer_involutions = order_census(G, 2, "outside", socle)
    print(f"  {label:<10} outer involutions: {outer_involutions}")

PGL = resolve_spec("PGL(2,9)")
M10 = resolve_spec("M10")

print("\nclosed-form counts:")
for G, label in ((PGL, "PGL(2,9)"), (M10, "M10")):
    print(f"  e({label},{label}) =",
          count_self_type(G, g_label=label).value)
    print(f"  e({label},A6xC2) =",
          count_product_type(G, g_label=label).value)

print("\nscreening the double cover SL(2,9) against PGL(2,9):")
report = screen_candidate(PGL, resolve_spec("SL(2,9)"), "PGL(2,9)", "SL(2,9)")
print("  verdict:", report.shape_verdict, "-", report.reason)
cond3 = report.conditions["condition-3"]
pair = cond3.witness["counterexamples"][0]
print(f"  witness: elements {pair['zeta_tilde']} and {pair['eta']} commute "
      f"modulo the center but not exactly")

print("\nscreening A6 x C2 (must be allowed, since its count is 72):")
print("  verdict:", screen_candidate(PGL, resolve_spec("AxCp(A6,2)")).shape_verdict)
