"""The running example: the shape-(3,3,1) abelian ideal inside sl_6.

Walks through the orbit labels, their dimensions, and the two canonical
sets that mark the dense orbits in the ideal and in its dual.

Run:  python3 demos/02_orbits_in_an_ideal.py
"""

from borel_orbits import (
    build_root_system,
    ideal_from_shape,
    lower_canonical,
    orbit_dims,
    strongly_orth_subsets,
    upper_canonical,
)

rs = build_root_system("A5")
ideal = ideal_from_shape(rs, [3, 3, 1])


def show(roots):
    return "{" + ",".join(sorted(rs.root_label(i) for i in roots)) + "}"


print("ideal of shape (3,3,1):", show(ideal), f"(dim {len(ideal)})")

# Orbits in the ideal (and in its dual) are labelled by the strongly
# orthogonal subsets of its root set: here 20 of them.
subsets = strongly_orth_subsets(rs, ideal)
print(f"\n{len(subsets)} orbit labels; dimensions primal/dual:")
for s in subsets:
    da, ds = orbit_dims(rs, ideal, s)
    print(f"  {show(s):32s} dim {da}   dual dim {ds}")

# The lower canonical set is grown from minimal layers and labels the
# dense orbit in the ideal; the upper one, from maximal layers, labels
# the dense orbit in the dual.  Their sizes may differ.
cl = lower_canonical(rs, ideal)
cu = upper_canonical(rs, ideal)
print("\nlower canonical set:", show(cl), "-> dense, dim", orbit_dims(rs, ideal, cl)[0])
print("upper canonical set:", show(cu), "-> dense dual, dim", orbit_dims(rs, ideal, cu)[1])
