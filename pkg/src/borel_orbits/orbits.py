"""Strongly orthogonal subsets and the B-orbit combinatorics they label.

For an abelian ideal with root set A, the strongly orthogonal subsets
S of A label both the orbits in the ideal and in its dual.  The key
derived sets are

    M_S  = (S + positives) meet positives   (upward shift),
    M*_S = (S - positives) meet A           (downward shift inside A),
    J_S  = A minus (S and M_S),

with orbit dimensions #S + #M_S and #S + #M*_S.  The lower and upper
canonical sets, Kostant's cascade and the combinatorial Pyasetskii
dual are all instances of one min/max layer-peeling scheme.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple

from . import weyl
from .ideals import check_abelian_ideal, is_abelian
from .root_system import RootSystem, max_elements, min_elements, strongly_orthogonal


def strongly_orth_subsets(rs: RootSystem, ideal: Iterable[int]) -> List[frozenset]:
    """All strongly orthogonal subsets of an abelian ideal, incl. the empty set.

    Ordered by (size, root indices).
    """
    a = check_abelian_ideal(rs, ideal)
    elems = sorted(a)
    masks = rs.orth_masks
    out: List[frozenset] = []

    def rec(start: int, chosen: list, allowed: int):
        out.append(frozenset(chosen))
        for pos in range(start, len(elems)):
            i = elems[pos]
            if allowed & (1 << i):
                chosen.append(i)
                rec(pos + 1, chosen, allowed & masks[i])
                chosen.pop()

    rec(0, [], (1 << rs.num_positive) - 1)
    out.sort(key=lambda s: (len(s), sorted(s)))
    return out


def shift_up(rs: RootSystem, s: Iterable[int]) -> frozenset:
    """M_S: roots of the form gamma + delta with gamma in S, delta positive."""
    out = set()
    for g in s:
        row = rs.sum_index[g]
        for d in range(rs.num_positive):
            k = row[d]
            if k >= 0:
                out.add(k)
    return frozenset(out)


def shift_down(rs: RootSystem, ideal: Iterable[int], s: Iterable[int]) -> frozenset:
    """M*_S: roots gamma - delta landing inside the ideal (not just in Delta+)."""
    a = frozenset(ideal)
    out = set()
    for g in s:
        row = rs.diff_index[g]
        for d in range(rs.num_positive):
            k = row[d]
            if k >= 0 and k in a:
                out.add(k)
    return frozenset(out)


def orbit_dims(rs: RootSystem, ideal: Iterable[int], s: Iterable[int]) -> Tuple[int, int]:
    """(dimension in the ideal, dimension in its dual) of the orbit of S."""
    ss = frozenset(s)
    return (len(ss) + len(shift_up(rs, ss)),
            len(ss) + len(shift_down(rs, ideal, ss)))


def lower_canonical(rs: RootSystem, ideal: Iterable[int]) -> frozenset:
    """Iterated min-layer peeling; labels the dense orbit in the ideal."""
    a = check_abelian_ideal(rs, ideal)
    remaining = set(a)
    result = set()
    while remaining:
        layer = min_elements(rs, remaining)
        result |= layer
        remaining -= layer
        remaining -= shift_up(rs, layer)
    return frozenset(result)


def _peel_max(rs: RootSystem, carrier: frozenset) -> frozenset:
    remaining = set(carrier)
    result = set()
    while remaining:
        layer = max_elements(rs, remaining)
        result |= layer
        remaining -= layer
        remaining -= shift_down(rs, carrier, layer)
    return frozenset(result)


def upper_canonical(rs: RootSystem, carrier: Iterable[int]) -> frozenset:
    """Iterated max-layer peeling inside a sum-free carrier.

    The carrier must be contained in some abelian ideal's root set, i.e.
    no two of its members may sum to a root; that is what guarantees the
    result is strongly orthogonal.  For the peeling applied to all of
    Delta+ use :func:`kostant_cascade`.
    """
    c = frozenset(carrier)
    if not is_abelian(rs, c):
        raise ValueError(
            "carrier has two roots whose sum is a root; "
            "it lies in no abelian ideal and the peeled set may fail strong orthogonality")
    return _peel_max(rs, c)


def kostant_cascade(rs: RootSystem) -> frozenset:
    """Max-layer peeling of all positive roots; strongly orthogonal."""
    cached = getattr(rs, "_cascade", None)
    if cached is not None:
        return cached
    result = _peel_max(rs, frozenset(range(rs.num_positive)))
    items = sorted(result)
    for x in range(len(items)):
        for y in range(x + 1, len(items)):
            if not strongly_orthogonal(rs, items[x], items[y]):
                raise AssertionError("cascade produced a non strongly orthogonal set")
    rs._cascade = result
    return result


def pyasetskii_dual(rs: RootSystem, ideal: Iterable[int], s: Iterable[int]) -> frozenset:
    """The dual-orbit label: upper-canonical set of J_S."""
    a = frozenset(ideal)
    ss = frozenset(s)
    j = a - ss - shift_up(rs, ss)
    return upper_canonical(rs, j)


def residual_set(rs: RootSystem, ideal: Iterable[int], s: Iterable[int]) -> frozenset:
    """J_S = ideal minus (S and M_S)."""
    a = frozenset(ideal)
    ss = frozenset(s)
    return a - ss - shift_up(rs, ss)


def pyasetskii_map(rs: RootSystem, ideal: Iterable[int]) -> Dict[frozenset, frozenset]:
    """The full duality table S -> S_dual over all of the ideal's subsets."""
    return {s: pyasetskii_dual(rs, ideal, s) for s in strongly_orth_subsets(rs, ideal)}


def pyasetskii_report(rs: RootSystem, ideal: Iterable[int]) -> dict:
    """Observed properties of the duality map on one ideal.

    The map is only defined in the primal-to-dual direction; whether it
    squares to the identity is reported, never assumed.
    """
    table = pyasetskii_map(rs, ideal)
    values = list(table.values())
    bijective = len(set(values)) == len(values)
    double_identity = all(table[table[s]] == s for s in table) if bijective else False
    return {
        "orbits": len(table),
        "bijective": bijective,
        "double_is_identity": double_identity,
    }


def krull_dims(rs: RootSystem, ideal: Iterable[int]) -> Tuple[int, int]:
    """Krull dimensions of the unipotent invariant algebras: (#C^l, #C^u).

    These also count the codimension-1 orbits in the ideal and its dual.
    """
    a = check_abelian_ideal(rs, ideal)
    return len(lower_canonical(rs, a)), len(upper_canonical(rs, a))


def borel_index(rs: RootSystem) -> int:
    """Index of the Borel subalgebra: rank minus cascade size."""
    return rs.rank - len(kostant_cascade(rs))


@dataclass(frozen=True)
class DimEstimate:
    lhs: int
    rhs: int
    equality: bool
    cascade_inside: bool


def dim_estimate_report(rs: RootSystem, ideal: Iterable[int]) -> DimEstimate:
    """Both sides of 2 dim a <= dim u + #cascade, plus the equality witness."""
    a = check_abelian_ideal(rs, ideal)
    cascade = kostant_cascade(rs)
    lhs = 2 * len(a)
    rhs = rs.num_positive + len(cascade)
    return DimEstimate(lhs=lhs, rhs=rhs, equality=lhs == rhs,
                       cascade_inside=cascade <= a)


@dataclass(frozen=True)
class OrbitRecord:
    """Numerical data of one orbit label S inside a fixed abelian ideal."""

    orth_set: Tuple[int, ...]
    dim_in_a: int
    dim_in_a_star: int
    m_up: Tuple[int, ...]
    m_down: Tuple[int, ...]
    j_set: Tuple[int, ...]
    dual: Tuple[int, ...]
    sigma_length: int
    sigma_abs_length: int

    def to_json(self, rs: RootSystem) -> dict:
        def names(part):
            return sorted(rs.root_label(i) for i in part)

        return {
            "orth_set": names(self.orth_set),
            "dim_in_a": self.dim_in_a,
            "dim_in_a_star": self.dim_in_a_star,
            "m_up": names(self.m_up),
            "m_down": names(self.m_down),
            "j_set": names(self.j_set),
            "dual": names(self.dual),
            "sigma_length": self.sigma_length,
            "sigma_abs_length": self.sigma_abs_length,
        }


def orbit_record(rs: RootSystem, ideal: Iterable[int], s: Iterable[int]) -> OrbitRecord:
    a = check_abelian_ideal(rs, ideal)
    ss = frozenset(s)
    if not ss <= a:
        raise ValueError("orbit label must lie inside the ideal")
    m_up = shift_up(rs, ss)
    m_down = shift_down(rs, a, ss)
    j = a - ss - m_up
    dual = upper_canonical(rs, j)
    sigma = weyl.sigma_of_orth_set(rs, ss)
    abs_len = weyl.absolute_length(rs, sigma.element)
    if abs_len != len(ss):
        raise AssertionError("absolute length of sigma_S must equal #S")
    return OrbitRecord(
        orth_set=tuple(sorted(ss)),
        dim_in_a=len(ss) + len(m_up),
        dim_in_a_star=len(ss) + len(m_down),
        m_up=tuple(sorted(m_up)),
        m_down=tuple(sorted(m_down)),
        j_set=tuple(sorted(j)),
        dual=tuple(sorted(dual)),
        sigma_length=weyl.length(rs, sigma.element),
        sigma_abs_length=abs_len,
    )
