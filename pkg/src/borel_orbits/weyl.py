"""Weyl group elements as integer matrices on simple-root coordinates.

Elements are never enumerated group-wide; everything needed here
(lengths, Bruhat comparisons, longest elements of Levi subgroups,
involutions attached to strongly orthogonal sets) is computed from the
matrix action on the root table.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Tuple

from .intlin import matrix_rank
from .root_system import RootSystem, strongly_orthogonal


@dataclass(frozen=True)
class WeylElement:
    """Action on simple-root coordinates; column j is the image of alpha_j."""

    matrix: Tuple[Tuple[int, ...], ...]

    def act(self, coeffs) -> tuple:
        return tuple(sum(row[j] * coeffs[j] for j in range(len(coeffs)) if coeffs[j])
                     for row in self.matrix)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        a, b = self.matrix, other.matrix
        n = len(a)
        return WeylElement(tuple(
            tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
            for i in range(n)))

    def is_identity(self) -> bool:
        n = len(self.matrix)
        return all(self.matrix[i][j] == (1 if i == j else 0)
                   for i in range(n) for j in range(n))


@dataclass(frozen=True)
class Involution:
    """A Weyl involution together with the strongly orthogonal set defining it."""

    element: WeylElement
    orth_set: frozenset

    def to_json(self, rs: RootSystem) -> dict:
        return {
            "orth_set": sorted(rs.root_label(i) for i in self.orth_set),
            "length": length(rs, self.element),
            "abs_length": absolute_length(rs, self.element),
        }


def identity(rs: RootSystem) -> WeylElement:
    n = rs.rank
    return WeylElement(tuple(tuple(1 if i == j else 0 for j in range(n))
                             for i in range(n)))


def reflect(rs: RootSystem, gamma: int, mu: int) -> tuple:
    """Coefficient vector of the reflection of root mu in root gamma."""
    g = rs.positive_roots[gamma]
    m = rs.positive_roots[mu]
    coef = 2 * rs.inner(mu, gamma) / rs.inner(gamma, gamma)
    if coef.denominator != 1:
        raise AssertionError("reflection pairing must be integral")
    c = int(coef)
    return tuple(a - c * b for a, b in zip(m, g))


def reflection(rs: RootSystem, gamma: int) -> WeylElement:
    """The reflection in a positive root, as a matrix."""
    g = rs.positive_roots[gamma]
    norm = rs.inner(gamma, gamma)
    n = rs.rank
    cols = []
    for j in range(n):
        # <alpha_j, gamma^vee> from the stored form
        val = 2 * sum(g[i] * rs.form[i][j] for i in range(n) if g[i]) / norm
        if val.denominator != 1:
            raise AssertionError("reflection pairing must be integral")
        c = int(val)
        col = [(1 if i == j else 0) - c * g[i] for i in range(n)]
        cols.append(col)
    return WeylElement(tuple(tuple(cols[j][i] for j in range(n)) for i in range(n)))


def sigma_of_orth_set(rs: RootSystem, orth_set: Iterable[int]) -> Involution:
    """Product of the commuting reflections over a strongly orthogonal set."""
    s = frozenset(orth_set)
    items = sorted(s)
    for a in range(len(items)):
        for b in range(a + 1, len(items)):
            if not strongly_orthogonal(rs, items[a], items[b]):
                raise ValueError(
                    f"{rs.root_label(items[a])} and {rs.root_label(items[b])} "
                    "are not strongly orthogonal")
    w = identity(rs)
    for i in items:
        w = w * reflection(rs, i)
    sq = w * w
    if not sq.is_identity():
        raise AssertionError("product of commuting reflections must be an involution")
    return Involution(element=w, orth_set=s)


def _image_sign(image: tuple) -> int:
    for x in image:
        if x > 0:
            return 1
        if x < 0:
            return -1
    raise AssertionError("zero image of a root under a Weyl element")


def length(rs: RootSystem, w: WeylElement) -> int:
    """Number of positive roots sent to negative roots."""
    cache = getattr(rs, "_length_cache", None)
    if cache is None:
        cache = {}
        rs._length_cache = cache
    hit = cache.get(w.matrix)
    if hit is not None:
        return hit
    m = w.matrix
    n = rs.rank
    count = 0
    for r in rs.positive_roots:
        for i in range(n):
            v = 0
            row = m[i]
            for j in range(n):
                if r[j]:
                    v += row[j] * r[j]
            if v:
                if v < 0:
                    count += 1
                break
    cache[w.matrix] = count
    return count


def absolute_length(rs: RootSystem, w: WeylElement) -> int:
    """Rank of (identity - w) on the coordinate space."""
    n = rs.rank
    m = [[(1 if i == j else 0) - w.matrix[i][j] for j in range(n)] for i in range(n)]
    return matrix_rank(m)


def _pairing_columns(rs: RootSystem):
    # nonzero <alpha_j, alpha_i^vee> pairs, per i; used for right multiplication
    cols = []
    for i in range(rs.rank):
        cols.append(tuple((j, rs.cartan[i][j]) for j in range(rs.rank)
                          if rs.cartan[i][j]))
    return cols


def _right_multiply_simple(m, i, pairs):
    # m -> m * s_i in place; column ops only touch Dynkin neighbours of i
    coli = [row[i] for row in m]
    for j, c in pairs[i]:
        for r, cr in enumerate(coli):
            if cr:
                m[r][j] -= c * cr


def _column_sign(m, j) -> int:
    for row in m:
        if row[j] > 0:
            return 1
        if row[j] < 0:
            return -1
    raise AssertionError("zero column in a Weyl matrix")


def _descent_chain(rs: RootSystem, w: WeylElement, lw: int) -> tuple:
    """Simple-root positions descending w to the identity, left to right."""
    cache = getattr(rs, "_descent_chains", None)
    if cache is None:
        cache = {}
        rs._descent_chains = cache
    hit = cache.get(w.matrix)
    if hit is not None:
        return hit
    pairs = _pairing_cache(rs)
    wm = [list(row) for row in w.matrix]
    n = rs.rank
    chain = []
    for _ in range(lw):
        i = next(j for j in range(n) if _column_sign(wm, j) < 0)
        _right_multiply_simple(wm, i, pairs)
        chain.append(i)
    if any(wm[i][j] != (1 if i == j else 0) for i in range(n) for j in range(n)):
        raise AssertionError("descent chain did not reach the identity")
    chain = tuple(chain)
    cache[w.matrix] = chain
    return chain


def _pairing_cache(rs: RootSystem):
    pairs = getattr(rs, "_pairing_cols", None)
    if pairs is None:
        pairs = _pairing_columns(rs)
        rs._pairing_cols = pairs
    return pairs


def bruhat_leq(rs: RootSystem, u: WeylElement, w: WeylElement) -> bool:
    """Bruhat order comparison via the lifting-property descent on w."""
    if u == w:
        return True
    cache = getattr(rs, "_bruhat_cache", None)
    if cache is None:
        cache = {}
        rs._bruhat_cache = cache
    key = (u.matrix, w.matrix)
    hit = cache.get(key)
    if hit is not None:
        return hit
    lu = length(rs, u)
    lw = length(rs, w)
    if lu >= lw:
        res = False
    else:
        pairs = _pairing_cache(rs)
        um = [list(row) for row in u.matrix]
        n = rs.rank
        for i in _descent_chain(rs, w, lw):
            if _column_sign(um, i) < 0:
                _right_multiply_simple(um, i, pairs)
        res = all(um[i][j] == (1 if i == j else 0)
                  for i in range(n) for j in range(n))
    cache[key] = res
    return res


def longest_element(rs: RootSystem, simple_nodes: Iterable[int]) -> WeylElement:
    """Longest element of the parabolic W_L generated by the given simple roots.

    Nodes are 0-based simple-root positions.  Greedy ascent: keep applying
    a generator that sends its own simple root to a positive root.
    """
    nodes = sorted(set(simple_nodes))
    for i in nodes:
        if not 0 <= i < rs.rank:
            raise ValueError(f"simple-root position {i} out of range")
    gens = {i: reflection(rs, rs.simple_indices[i]) for i in nodes}
    w = identity(rs)
    alpha = {i: rs.positive_roots[rs.simple_indices[i]] for i in nodes}
    while True:
        for i in nodes:
            if _image_sign(w.act(alpha[i])) > 0:
                w = w * gens[i]
                break
        else:
            return w
