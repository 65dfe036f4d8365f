"""Evidence for the involution description of dual-orbit closures.

For abelian nilradicals the dual-orbit dimension appears to equal
(l(sigma_S) + #S)/2 and the closure order appears to match the Bruhat
order on the involutions sigma_S.  The checker verifies those statements
orbit by orbit and reports violations; it proves nothing.  For general
maximal abelian ideals the statements fail, and the 5-dimensional ideal
of D4 is the smallest witness.

Run:  python3 demos/06_conjecture_evidence.py
"""

from borel_orbits import (
    build_root_system,
    conjecture_check,
    maximal_abelian_ideals,
    maximal_ideal_report,
    min_elements,
)

for name, node in [("C3", 2), ("D4", 0), ("E6", 0)]:
    rs = build_root_system(name)
    rep = conjecture_check(rs, node)
    print(f"{name} alpha_{node + 1}: {len(rep.rows)} orbits, clean: {rep.ok()}, "
          f"covers: {len(rep.covers)}, rank-graded: {rep.rank_graded}")

# The D4 counterexample: its fourth maximal abelian ideal is not a
# nilradical, and there the formula and the order comparison both break.
rs = build_root_system("D4")
ideal = next(a for a in maximal_abelian_ideals(rs) if len(a) == 5)
rep = maximal_ideal_report(rs, ideal)
print(f"\nD4 5-dim maximal ideal: clean: {rep.ok()}")
s = tuple(sorted(min_elements(rs, ideal)))
row = next(r for r in rep.rows if r.orth_set == s)
names = ",".join(rs.root_label(i) for i in s)
print(f"  S = {{{names}}} (the minimal elements, also the lower canonical set)")
print(f"  dual dim {row.dim_actual} but (l + #S)/2 = "
      f"({row.sigma_length} + {row.sigma_abs_length})/2 = {row.formula_value}")
print(f"  formula violations: {len(rep.formula_violations)} of {len(rep.rows)} orbits")
print(f"  monotonicity violations: {len(rep.monotonicity_violations)}")
