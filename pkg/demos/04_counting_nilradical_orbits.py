"""Orbit counts in abelian nilradicals, enumerated and in closed form.

Run:  python3 demos/04_counting_nilradical_orbits.py
"""

from borel_orbits import (
    anr_nodes,
    anr_statistic,
    build_root_system,
    c_count,
    d_count,
    rectangle_count,
    symmetry_bijection,
)
from borel_orbits.anr import anr_ideal
from borel_orbits.orbits import strongly_orth_subsets

# Abelian nilradicals sit at the simple roots whose coefficient in the
# highest root is 1; G2, F4 and E8 have none.
for name in ("A4", "B4", "C4", "D5", "E6", "E7", "G2"):
    rs = build_root_system(name)
    nodes = [n + 1 for n in anr_nodes(rs)]
    print(f"{name}: nilradical nodes {nodes if nodes else 'none'}")

print("\ncounts by label size (enumerated | total):")
for name, node in [("B4", 0), ("D5", 4), ("C4", 3), ("E6", 0), ("E7", 6)]:
    rs = build_root_system(name)
    t = anr_statistic(rs, node)
    print(f"  {name} alpha_{node + 1}: {' '.join(map(str, t.counts))} | {t.total}")

# The same numbers in closed form: rectangles for type A, a pfaffian-style
# count for the spinor cases, and its symplectic refinement.
print("\nclosed forms:")
print("  2x3 rectangle:", [rectangle_count(2, 3, k) for k in range(3)])
print("  d(5, k):      ", [d_count(5, k) for k in range(3)])
print("  c(4, k):      ", [c_count(4, k) for k in range(5)], "(palindromic)")

# The palindromic symmetry c(n,k) = c(n,n-k) comes from an index bijection:
# keep the short roots, move the long ones to the untouched indices.
rs = build_root_system("C3")
ideal = anr_ideal(rs, 2)
print("\nC3 symmetry bijection:")
for s in strongly_orth_subsets(rs, ideal)[:8]:
    image = symmetry_bijection(rs, s)
    show = lambda x: "{" + ",".join(sorted(rs.root_label(i) for i in x)) + "}"
    print(f"  {show(s):24s} <-> {show(image)}")
