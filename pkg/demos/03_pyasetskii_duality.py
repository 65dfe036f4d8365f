"""The Pyasetskii correspondence between orbits in an ideal and its dual.

The dual label of S is the upper-canonical set of the residual set
J_S = ideal minus (S and its upward shift).  The zero orbit pairs with
the dense dual orbit and vice versa.

Run:  python3 demos/03_pyasetskii_duality.py
"""

from borel_orbits import (
    build_root_system,
    ideal_from_shape,
    kostant_cascade,
    krull_dims,
    lower_canonical,
    pyasetskii_map,
    pyasetskii_report,
    residual_set,
    shift_up,
    upper_canonical,
)

rs = build_root_system("A5")
ideal = ideal_from_shape(rs, [3, 3, 1])


def show(roots):
    return "{" + ",".join(sorted(rs.root_label(i) for i in roots)) + "}"


s = frozenset({rs.parse_root("e1-e4"), rs.parse_root("e2-e6")})
print("S          =", show(s))
print("M_S        =", show(shift_up(rs, s)))
print("J_S        =", show(residual_set(rs, ideal, s)))

table = pyasetskii_map(rs, ideal)
print("dual of S  =", show(table[s]))
print("dual of {} =", show(table[frozenset()]), "= C^u:",
      table[frozenset()] == upper_canonical(rs, ideal))
print("dual of C^l =", show(table[lower_canonical(rs, ideal)]))

# The map is only defined primal-to-dual; whether applying it twice gives
# the identity is an observation we report, not a theorem we assume.
print("\nobserved properties:", pyasetskii_report(rs, ideal))

# Krull dimensions of the unipotent invariant algebras = sizes of the two
# canonical sets; here they differ (3 against 2).
print("Krull dimensions (p, m):", krull_dims(rs, ideal))

# The upper-canonical construction applied to all positive roots is
# Kostant's cascade; for sl_6 it is the antidiagonal.
print("cascade:", show(kostant_cascade(rs)))
