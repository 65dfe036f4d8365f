"""Reduce explicit vectors of an abelian ideal to canonical representatives.

Every reduction records a transcript of root-group parameters plus a
final torus scaling; replaying the transcript on the input reproduces
the reached vector exactly, in exact rational arithmetic.

Run:  python3 demos/05_normal_form_reduction.py
"""

import random
from fractions import Fraction

from borel_orbits import build_root_system, ideal_from_shape, lower_canonical
from borel_orbits.normal_form import (
    apply_b_element,
    random_b_element,
    random_vector,
    reduce_in_dual,
    reduce_in_ideal,
    replay,
)
from borel_orbits.orbits import pyasetskii_dual, residual_set, upper_canonical

rs = build_root_system("A5")
ideal = ideal_from_shape(rs, [3, 3, 1])


def show(roots):
    return "{" + ",".join(sorted(rs.root_label(i) for i in roots)) + "}"


# A two-term vector: one kill step along e1-e2 removes the higher term.
v = {rs.parse_root("e1-e4"): Fraction(1), rs.parse_root("e2-e4"): Fraction(1)}
s, transcript = reduce_in_ideal(rs, ideal, v)
print("reduce e_{e1-e4} + e_{e2-e4}:")
print("  label:", show(s))
for delta, t in transcript.steps:
    print(f"  step: exp({t} ad e_{rs.root_label(delta)})")
print("  replay reproduces result:", replay(rs, ideal, transcript, v) == transcript.result)

# A generic vector with full support lies in the dense orbit, so it
# reduces to the lower canonical set; dually, to the upper one.
rng = random.Random(20344)
generic = random_vector(rs, ideal, rng)
s, _ = reduce_in_ideal(rs, ideal, generic)
print("\ngeneric vector reduces to C^l:", s == lower_canonical(rs, ideal))
s, _ = reduce_in_dual(rs, ideal, random_vector(rs, ideal, rng))
print("generic covector reduces to C^u:", s == upper_canonical(rs, ideal))

# Moving a canonical representative around by a random Borel element and
# reducing recovers the same label, and the replay lands exactly on e_S.
s0 = frozenset({rs.parse_root("e1-e4"), rs.parse_root("e2-e6")})
base = {g: Fraction(1) for g in s0}
moved = apply_b_element(rs, ideal, random_b_element(rs, rng), base)
s, transcript = reduce_in_ideal(rs, ideal, moved)
print("\nB-moved e_S recovers S:", s == s0,
      "| replay hits e_S exactly:", replay(rs, ideal, transcript, moved) == base)

# A generic covector supported on the residual set J_S reduces to the
# Pyasetskii dual of S, computed combinatorially.
xi = random_vector(rs, residual_set(rs, ideal, s0), rng)
s, _ = reduce_in_dual(rs, ideal, xi)
print("J_S-supported covector reduces to the dual label:",
      s == pyasetskii_dual(rs, ideal, s0), show(s))
