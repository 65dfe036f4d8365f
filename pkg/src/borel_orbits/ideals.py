"""Combinatorial ad-nilpotent and abelian ideals of the positive roots.

An ideal is an upward-closed subset of the positive roots; it is
abelian when no two of its members sum to a root.  Ideals are plain
frozensets of root indices, canonically ordered by (size, sorted
indices) wherever lists of them are produced.
"""

from __future__ import annotations

from typing import Iterable, List, Tuple

from .root_system import RootSystem, min_elements


def _mask_of(roots: Iterable[int]) -> int:
    m = 0
    for i in roots:
        m |= 1 << i
    return m


def _set_of(mask: int) -> frozenset:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def is_ideal(rs: RootSystem, roots: Iterable[int]) -> bool:
    """Upward closure under adding positive roots.

    Closure under adding simple roots suffices: any dominance step
    between roots factors through simple-root additions.
    """
    s = set(roots)
    for i in s:
        for k in rs.simple_indices:
            j = rs.sum_index[i][k]
            if j >= 0 and j not in s:
                return False
    return True


def is_abelian(rs: RootSystem, roots: Iterable[int]) -> bool:
    items = sorted(roots)
    for a in range(len(items)):
        for b in range(a, len(items)):
            if rs.sum_index[items[a]][items[b]] >= 0:
                return False
    return True


def ideal_generated(rs: RootSystem, generators: Iterable[int]) -> frozenset:
    """Smallest ideal containing the generators: all roots above them."""
    mask = 0
    for g in generators:
        mask |= rs.up_masks[g]
    return _set_of(mask)


def check_abelian_ideal(rs: RootSystem, roots: Iterable[int]) -> frozenset:
    s = frozenset(roots)
    if not is_ideal(rs, s):
        raise ValueError("root set is not upward closed")
    if not is_abelian(rs, s):
        raise ValueError("ideal is not abelian")
    return s


def enumerate_abelian_ideals(rs: RootSystem) -> List[frozenset]:
    """All abelian ideals, ordered by (size, root-index sequence).

    Depth-first over roots in decreasing height: a root may join only
    when all its upper covers are already in (upward closure) and no
    chosen root sums with it to a root (abelian).
    """
    npos = rs.num_positive
    order = sorted(range(npos), key=lambda i: (-rs.heights[i], rs.positive_roots[i]))
    covers = []
    for i in range(npos):
        cov = 0
        for k in rs.simple_indices:
            j = rs.sum_index[i][k]
            if j >= 0:
                cov |= 1 << j
        covers.append(cov)
    bad = []
    for i in range(npos):
        m = 0
        for j in range(npos):
            if rs.sum_index[i][j] >= 0:
                m |= 1 << j
        bad.append(m)

    found: List[int] = []

    def rec(pos: int, cur: int):
        if pos == npos:
            found.append(cur)
            return
        i = order[pos]
        rec(pos + 1, cur)
        if (covers[i] & cur) == covers[i] and not (bad[i] & cur):
            rec(pos + 1, cur | (1 << i))

    rec(0, 0)
    ideals = [_set_of(m) for m in set(found)]
    ideals.sort(key=lambda s: (len(s), sorted(s)))
    return ideals


def maximal_abelian_ideals(rs: RootSystem) -> List[frozenset]:
    """Abelian ideals not properly contained in another abelian ideal."""
    all_ideals = enumerate_abelian_ideals(rs)
    out = [a for a in all_ideals
           if not any(a < b for b in all_ideals)]
    out.sort(key=lambda s: (len(s), sorted(s)))
    return out


def abelian_nilradicals(rs: RootSystem) -> List[Tuple[int, frozenset]]:
    """(node, ideal) for each simple root with coefficient 1 in theta.

    Nodes are 0-based positions; the ideal is the nilradical of the
    corresponding maximal parabolic, all roots whose coefficient at the
    node equals 1.
    """
    out = []
    for node in range(rs.rank):
        if rs.theta[node] != 1:
            continue
        ideal = frozenset(i for i, r in enumerate(rs.positive_roots) if r[node] == 1)
        if any(r[node] > 1 for r in rs.positive_roots):
            raise AssertionError("coefficient above 1 at a supposedly minuscule node")
        out.append((node, ideal))
    return out


def ideal_from_shape(rs: RootSystem, rows: Iterable[int]) -> frozenset:
    """Type-A ideal from right-justified Young-diagram row lengths.

    Row i of length r covers the roots e_i - e_j with j in the last r
    columns of the staircase for sl_{rank+1}.
    """
    if rs.type.family != "A":
        raise ValueError("Young-diagram shapes only make sense in type A")
    rows = [int(r) for r in rows]
    n = rs.rank + 1
    if any(r < 1 for r in rows):
        raise ValueError("row lengths must be positive")
    if any(rows[i] < rows[i + 1] for i in range(len(rows) - 1)):
        raise ValueError("row lengths must be weakly decreasing")
    if len(rows) > n - 1 or any(rows[i] > n - 1 - i for i in range(len(rows))):
        raise ValueError(f"shape {rows} does not fit inside the staircase for {rs.type}")
    picked = set()
    for i, r in enumerate(rows, start=1):
        for j in range(n - r + 1, n + 1):
            # e_i - e_j = alpha_i + ... + alpha_{j-1}
            coeffs = [0] * rs.rank
            for k in range(i, j):
                coeffs[k - 1] = 1
            picked.add(rs.index_of(coeffs))
    ideal = frozenset(picked)
    if not is_ideal(rs, ideal):
        raise AssertionError("shape did not produce an upward-closed set")
    return ideal
