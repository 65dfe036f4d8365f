"""Reduction of (co)vectors of an abelian ideal to canonical representatives.

The layered procedure peels minimal (resp. maximal) support elements,
kills the shifted coefficients with root-group elements whose parameter
solves an exact linear equation, and finishes with a torus scaling.
Every step is recorded in a transcript whose replay reproduces the
reached vector exactly.

Over the rationals the final scaling to all-ones coefficients is not
always possible (it may require extracting roots); the transcript
reports whether it was.  Inputs lying in the rational orbit of a
canonical representative always normalise fully.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Tuple

from . import orbits
from .chevalley import StructureTable, ad_exp_action, build_structure_table, coad_exp_action
from .ideals import check_abelian_ideal, ideal_generated
from .intlin import nth_root_fraction, smith_normal_form
from .root_system import RootSystem, max_elements, min_elements, strongly_orthogonal


@dataclass(frozen=True)
class ReductionTranscript:
    """Audit trail of one reduction: root-group steps plus a torus step."""

    side: str                               # "primal" or "dual"
    steps: Tuple[Tuple[int, Fraction], ...]  # (positive-root index, parameter)
    torus: Tuple[Fraction, ...]              # per-simple-coordinate scalings
    normalized: bool                         # True iff result has all coefficients 1
    result: dict                             # vector reached, root index -> coefficient

    def to_json(self, rs: RootSystem) -> dict:
        return {
            "side": self.side,
            "steps": [[rs.root_label(d), str(t)] for d, t in self.steps],
            "torus": [str(x) for x in self.torus],
            "normalized": self.normalized,
            "result": {rs.root_label(i): str(c) for i, c in sorted(self.result.items())},
        }


def char_value(lam: Tuple[Fraction, ...], coeffs, sign: int = 1) -> Fraction:
    """Value of the torus character with the given simple coordinates."""
    val = Fraction(1)
    for l, c in zip(lam, coeffs):
        if c:
            val *= l ** (sign * c)
    return val


def _clean_vector(rs: RootSystem, ideal: frozenset, v: Mapping[int, Fraction]) -> dict:
    out = {}
    for k, c in v.items():
        c = Fraction(c)
        if c == 0:
            continue
        if k not in ideal:
            raise ValueError(f"support root {rs.root_label(k)} lies outside the ideal")
        out[k] = c
    return out


def _solve_scalings(rs: RootSystem, roots, targets, sign: int = 1):
    """Rational lambda with prod lambda_i^(sign*coeff) = target per root, or None."""
    n = rs.rank
    if not roots:
        return tuple(Fraction(1) for _ in range(n))
    c = [[sign * x for x in rs.positive_roots[g]] for g in roots]
    u, d, v = smith_normal_form(c)
    k = len(roots)
    s = []
    for j in range(k):
        val = Fraction(1)
        for r in range(k):
            if u[j][r]:
                val *= Fraction(targets[r]) ** u[j][r]
        s.append(val)
    y = [Fraction(1)] * n
    for j in range(k):
        dj = d[j][j] if j < n else 0
        if dj == 0:
            if s[j] != 1:
                return None
        else:
            root = nth_root_fraction(s[j], dj)
            if root is None:
                return None
            y[j] = root
    lam = []
    for i in range(n):
        val = Fraction(1)
        for j in range(n):
            if v[i][j] and y[j] != 1:
                val *= y[j] ** v[i][j]
        lam.append(val)
    lam = tuple(lam)
    for g, tgt in zip(roots, targets):
        if char_value(lam, rs.positive_roots[g], sign) != tgt:
            raise AssertionError("torus solver produced an inconsistent solution")
    return lam


def _apply_torus(rs: RootSystem, lam, v: dict, sign: int) -> dict:
    return {k: c * char_value(lam, rs.positive_roots[k], sign) for k, c in v.items()}


def _check_strongly_orthogonal(rs: RootSystem, items) -> None:
    items = sorted(items)
    for x in range(len(items)):
        for y in range(x + 1, len(items)):
            if not strongly_orthogonal(rs, items[x], items[y]):
                raise AssertionError(
                    f"accumulated set is not strongly orthogonal: "
                    f"{rs.root_label(items[x])}, {rs.root_label(items[y])}")


def _assert_linear_kill(rs: RootSystem, supp, nu: int, delta: int) -> None:
    # only the k=1 source may carry support, otherwise the kill is not linear
    cur = nu
    k = 0
    while True:
        prev = rs.diff_index[cur][delta]
        if prev < 0:
            return
        k += 1
        if k >= 2 and prev in supp:
            raise AssertionError("kill step would be nonlinear; minimality violated")
        cur = prev


def reduce_in_ideal(rs: RootSystem, ideal: Iterable[int], v: Mapping[int, Fraction],
                    table: Optional[StructureTable] = None):
    """Reduce a vector of the ideal to its orbit label S and a transcript."""
    a = check_abelian_ideal(rs, ideal)
    if table is None:
        table = build_structure_table(rs)
    vec = _clean_vector(rs, a, v)
    steps = []
    acc: list = []
    while True:
        rest = set(vec) - set(acc)
        if not rest:
            break
        acc.extend(sorted(min_elements(rs, rest)))
        _check_strongly_orthogonal(rs, acc)
        while True:
            shifted = orbits.shift_up(rs, acc)
            targets = shifted & set(vec)
            if not targets:
                break
            nu = min(min_elements(rs, targets))
            gamma = next(g for g in acc if rs.diff_index[nu][g] >= 0)
            delta = rs.diff_index[nu][gamma]
            _assert_linear_kill(rs, set(vec), nu, delta)
            n = table.structure_constant(1, delta, 1, gamma)
            t = -vec[nu] / (n * vec[gamma])
            before = {g: vec[g] for g in acc}
            old_gen = ideal_generated(rs, targets)
            vec = ad_exp_action(table, delta, t, vec, a)
            steps.append((delta, t))
            if nu in vec:
                raise AssertionError("kill step failed to remove its target")
            if any(vec.get(g) != c for g, c in before.items()):
                raise AssertionError("kill step changed a coefficient on S")
            new_gen = ideal_generated(rs, shifted & set(vec))
            if not new_gen < old_gen:
                raise AssertionError("kill phase is not making progress")
    s = frozenset(acc)
    if set(vec) != s:
        raise AssertionError("reduction finished with support different from S")
    order = sorted(s)
    lam = _solve_scalings(rs, order, [1 / vec[g] for g in order], sign=1)
    normalized = lam is not None
    if normalized:
        vec = _apply_torus(rs, lam, vec, 1)
    else:
        lam = tuple(Fraction(1) for _ in range(rs.rank))
    transcript = ReductionTranscript("primal", tuple(steps), lam, normalized, dict(vec))
    return s, transcript


def _downward_hull(rs: RootSystem, ideal: frozenset, roots) -> frozenset:
    out = set()
    for m in ideal:
        for g in roots:
            if rs.up_masks[m] & (1 << g):
                out.add(m)
                break
    return frozenset(out)


def reduce_in_dual(rs: RootSystem, ideal: Iterable[int], xi: Mapping[int, Fraction],
                   table: Optional[StructureTable] = None):
    """Dual-side reduction, peeling maximal support layers downwards."""
    a = check_abelian_ideal(rs, ideal)
    if table is None:
        table = build_structure_table(rs)
    vec = _clean_vector(rs, a, xi)
    steps = []
    acc: list = []
    while True:
        rest = set(vec) - set(acc)
        if not rest:
            break
        acc.extend(sorted(max_elements(rs, rest)))
        _check_strongly_orthogonal(rs, acc)
        while True:
            shifted = orbits.shift_down(rs, a, acc)
            targets = shifted & set(vec)
            if not targets:
                break
            nu = min(max_elements(rs, targets))
            gamma = next(g for g in acc if rs.diff_index[g][nu] >= 0)
            delta = rs.diff_index[gamma][nu]
            # sources above nu along delta beyond gamma would break linearity
            above = rs.sum_index[nu][delta]
            cur = above
            k = 1
            while cur >= 0:
                if k >= 2 and cur in vec:
                    raise AssertionError("dual kill step would be nonlinear")
                cur = rs.sum_index[cur][delta]
                k += 1
            n = table.structure_constant(1, delta, -1, gamma)
            t = -vec[nu] / (n * vec[gamma])
            before = {g: vec[g] for g in acc}
            old_hull = _downward_hull(rs, a, targets)
            vec = coad_exp_action(table, delta, t, vec, a)
            steps.append((delta, t))
            if nu in vec:
                raise AssertionError("dual kill step failed to remove its target")
            if any(vec.get(g) != c for g, c in before.items()):
                raise AssertionError("dual kill step changed a coefficient on S")
            new_hull = _downward_hull(rs, a, shifted & set(vec))
            if not new_hull < old_hull:
                raise AssertionError("dual kill phase is not making progress")
    s = frozenset(acc)
    if set(vec) != s:
        raise AssertionError("dual reduction finished with support different from S")
    order = sorted(s)
    lam = _solve_scalings(rs, order, [1 / vec[g] for g in order], sign=-1)
    normalized = lam is not None
    if normalized:
        vec = _apply_torus(rs, lam, vec, -1)
    else:
        lam = tuple(Fraction(1) for _ in range(rs.rank))
    transcript = ReductionTranscript("dual", tuple(steps), lam, normalized, dict(vec))
    return s, transcript


def replay(rs: RootSystem, ideal: Iterable[int], transcript: ReductionTranscript,
           v: Mapping[int, Fraction], table: Optional[StructureTable] = None) -> dict:
    """Apply the recorded steps to a vector; must reproduce transcript.result."""
    a = check_abelian_ideal(rs, ideal)
    if table is None:
        table = build_structure_table(rs)
    vec = _clean_vector(rs, a, v)
    action = ad_exp_action if transcript.side == "primal" else coad_exp_action
    sign = 1 if transcript.side == "primal" else -1
    for delta, t in transcript.steps:
        vec = action(table, delta, t, vec, a)
    return _apply_torus(rs, transcript.torus, vec, sign)


def replay_supports(rs: RootSystem, ideal: Iterable[int], transcript: ReductionTranscript,
                    v: Mapping[int, Fraction],
                    table: Optional[StructureTable] = None) -> list:
    """Supports of every intermediate vector along a transcript replay."""
    a = check_abelian_ideal(rs, ideal)
    if table is None:
        table = build_structure_table(rs)
    vec = _clean_vector(rs, a, v)
    action = ad_exp_action if transcript.side == "primal" else coad_exp_action
    supports = [frozenset(vec)]
    for delta, t in transcript.steps:
        vec = action(table, delta, t, vec, a)
        supports.append(frozenset(vec))
    return supports


def orbit_of_vector(rs: RootSystem, ideal: Iterable[int], v: Mapping[int, Fraction],
                    side: str = "primal") -> orbits.OrbitRecord:
    """Reduce a (co)vector and return the orbit record of its label."""
    if side not in ("primal", "dual"):
        raise ValueError("side must be 'primal' or 'dual'")
    if side == "primal":
        s, _ = reduce_in_ideal(rs, ideal, v)
    else:
        s, _ = reduce_in_dual(rs, ideal, v)
    return orbits.orbit_record(rs, ideal, s)


# -- randomised inputs for the property checks ---------------------------

def random_rational(rng: random.Random, max_num: int = 10 ** 6, max_den: int = 1000) -> Fraction:
    """Nonzero rational with numerator up to max_num, random sign."""
    return Fraction(rng.choice((1, -1)) * rng.randint(1, max_num), rng.randint(1, max_den))


def random_vector(rs: RootSystem, support: Iterable[int], rng: random.Random,
                  max_num: int = 10 ** 6) -> dict:
    return {g: random_rational(rng, max_num) for g in sorted(support)}


def random_b_element(rs: RootSystem, rng: random.Random, max_steps: int = 10) -> list:
    """A word of at most max_steps root-group and torus steps."""
    ops = []
    for _ in range(rng.randint(1, max_steps)):
        if rng.random() < 0.3:
            lam = tuple(random_rational(rng, 12, 5) for _ in range(rs.rank))
            ops.append(("torus", lam))
        else:
            ops.append(("unipotent", rng.randrange(rs.num_positive),
                        random_rational(rng, 20, 7)))
    return ops


def apply_b_element(rs: RootSystem, ideal: Iterable[int], ops, v: Mapping[int, Fraction],
                    side: str = "primal", table: Optional[StructureTable] = None) -> dict:
    a = check_abelian_ideal(rs, ideal)
    if table is None:
        table = build_structure_table(rs)
    sign = 1 if side == "primal" else -1
    action = ad_exp_action if side == "primal" else coad_exp_action
    vec = _clean_vector(rs, a, v)
    for op in ops:
        if op[0] == "torus":
            vec = _apply_torus(rs, op[1], vec, sign)
        else:
            vec = action(table, op[1], op[2], vec, a)
    return vec
