"""Build root systems and poke at roots, orderings and orthogonality.

Run:  python3 demos/01_root_systems.py
"""

from borel_orbits import (
    build_root_system,
    dominance_leq,
    is_root,
    min_elements,
    strongly_orthogonal,
)

# Every simple type is built from its Cartan data; D3 (isomorphic to A3)
# is allowed, matching the convention D_n for n >= 3.
for name in ("A5", "B3", "C4", "D4", "E8", "F4", "G2"):
    rs = build_root_system(name)
    print(f"{name}: {rs.num_positive} positive roots, "
          f"theta = {rs.root_label(rs.theta_index)}")

# The G2 table contains the three roots that make up its unique maximal
# abelian ideal.
g2 = build_root_system("G2")
print("\nG2 contains 3a+2b:", is_root(g2, (3, 2)))
print("G2 positive roots:", [g2.root_label(i) for i in range(6)])

# Strong orthogonality asks that neither the sum nor the difference of
# two roots is a root; in the simply-laced types it is plain orthogonality.
c2 = build_root_system("C2")
print("\nC2: 2e1, 2e2 strongly orthogonal:",
      strongly_orthogonal(c2, c2.parse_root("2e1"), c2.parse_root("2e2")))
print("C2: e1+e2, e1-e2 strongly orthogonal:",
      strongly_orthogonal(c2, c2.parse_root("e1+e2"), c2.parse_root("e1-e2")),
      "(their difference is 2e2)")

# The dominance order compares coefficient vectors; minimal elements of a
# set of roots play the role of south-west corners of a Young diagram.
a5 = build_root_system("A5")
some = [a5.parse_root(t) for t in ("e1-e4", "e2-e4", "e2-e6", "e3-e6")]
print("\nA5 sample set minimal elements:",
      sorted(a5.root_label(i) for i in min_elements(a5, some)))
print("e2-e4 below e1-e4:", dominance_leq(a5, a5.parse_root("e2-e4"),
                                          a5.parse_root("e1-e4")))
