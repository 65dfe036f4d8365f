"""Finite simple root systems over exact rationals.

A root system is built once from its Cartan data and is immutable
afterwards.  Positive roots are stored as integer coefficient vectors
over the simple-root basis and indexed in a fixed deterministic order
(height, then lexicographic coefficients); the rest of the package
refers to positive roots by these indices and to root subsets as
frozensets of indices.

Simple-root numbering follows the Bourbaki convention for every family.
The bilinear form is normalised so that long roots have squared length
2, which keeps every Cartan pairing an exact integer.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence

_RANK_RULES = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 3,  # D3 is permitted; it is isomorphic to A3
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}

_POSITIVE_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


@dataclass(frozen=True)
class SimpleType:
    """A simple Lie type such as A5, D4 or E7."""

    family: str
    rank: int

    def __post_init__(self):
        fam = str(self.family).upper()
        object.__setattr__(self, "family", fam)
        if fam not in _RANK_RULES:
            raise ValueError(f"unknown family {self.family!r}")
        if not isinstance(self.rank, int) or not _RANK_RULES[fam](self.rank):
            raise ValueError(f"invalid rank {self.rank} for family {fam}")

    @classmethod
    def parse(cls, text) -> "SimpleType":
        if isinstance(text, SimpleType):
            return text
        m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", str(text))
        if not m:
            raise ValueError(f"cannot parse simple type from {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self):
        return f"{self.family}{self.rank}"


def _unit(i: int, dim: int) -> list:
    v = [Fraction(0)] * dim
    v[i] = Fraction(1)
    return v


def _eps_simple_roots(typ: SimpleType):
    """Simple roots in epsilon coordinates and the scale of the form.

    The inner product on epsilon space is ``scale * dot``; the scale is
    chosen so that long roots get squared length 2.
    """
    fam, n = typ.family, typ.rank
    if fam == "A":
        dim = n + 1
        simples = [[a - b for a, b in zip(_unit(i, dim), _unit(i + 1, dim))]
                   for i in range(n)]
        return simples, Fraction(1), dim
    if fam == "B":
        simples = [[a - b for a, b in zip(_unit(i, n), _unit(i + 1, n))]
                   for i in range(n - 1)]
        simples.append(_unit(n - 1, n))
        return simples, Fraction(1), n
    if fam == "C":
        simples = [[a - b for a, b in zip(_unit(i, n), _unit(i + 1, n))]
                   for i in range(n - 1)]
        simples.append([2 * x for x in _unit(n - 1, n)])
        return simples, Fraction(1, 2), n
    if fam == "D":
        simples = [[a - b for a, b in zip(_unit(i, n), _unit(i + 1, n))]
                   for i in range(n - 1)]
        simples.append([a + b for a, b in zip(_unit(n - 2, n), _unit(n - 1, n))])
        return simples, Fraction(1), n
    if fam == "E":
        h = Fraction(1, 2)
        e8 = [
            [h, -h, -h, -h, -h, -h, -h, h],
            [1, 1, 0, 0, 0, 0, 0, 0],
            [-1, 1, 0, 0, 0, 0, 0, 0],
            [0, -1, 1, 0, 0, 0, 0, 0],
            [0, 0, -1, 1, 0, 0, 0, 0],
            [0, 0, 0, -1, 1, 0, 0, 0],
            [0, 0, 0, 0, -1, 1, 0, 0],
            [0, 0, 0, 0, 0, -1, 1, 0],
        ]
        simples = [[Fraction(x) for x in row] for row in e8[:n]]
        return simples, Fraction(1), 8
    if fam == "F":
        h = Fraction(1, 2)
        simples = [
            [0, 1, -1, 0],
            [0, 0, 1, -1],
            [0, 0, 0, 1],
            [h, -h, -h, -h],
        ]
        return [[Fraction(x) for x in row] for row in simples], Fraction(1), 4
    if fam == "G":
        simples = [[1, -1, 0], [-2, 1, 1]]
        return [[Fraction(x) for x in row] for row in simples], Fraction(1, 3), 3
    raise AssertionError(fam)


class RootSystem:
    """All positive roots of one simple type plus derived lookup tables.

    Instances are created through :func:`build_root_system`, cached per
    type and safe to share; every attribute is fixed at construction.
    """

    def __init__(self, typ: SimpleType):
        self.type = typ
        n = typ.rank
        self.rank = n

        eps_simples, scale, eps_dim = _eps_simple_roots(typ)
        self._eps_simples = eps_simples
        self._eps_scale = scale
        self._eps_dim = eps_dim

        form = [[scale * sum(a * b for a, b in zip(eps_simples[i], eps_simples[j]))
                 for j in range(n)] for i in range(n)]
        self.form = tuple(tuple(row) for row in form)
        cartan = []
        for i in range(n):
            row = []
            for j in range(n):
                val = 2 * form[i][j] / form[i][i]
                if val.denominator != 1:
                    raise AssertionError("non-integral Cartan entry")
                row.append(int(val))
            cartan.append(tuple(row))
        self.cartan = tuple(cartan)

        self.positive_roots = self._generate()
        self.num_positive = len(self.positive_roots)
        expected = _POSITIVE_COUNTS[typ.family](n)
        if self.num_positive != expected:
            raise AssertionError(
                f"{typ}: generated {self.num_positive} positive roots, expected {expected}")
        self.root_index = {r: i for i, r in enumerate(self.positive_roots)}
        self.heights = tuple(sum(r) for r in self.positive_roots)
        self.theta_index = self.num_positive - 1
        theta = self.positive_roots[self.theta_index]
        for r in self.positive_roots:
            if any(t - c < 0 for t, c in zip(theta, r)):
                raise AssertionError("highest root is not dominance-maximal")
        self.theta = theta

        norms = []
        for r in self.positive_roots:
            norms.append(self._form_value(r, r))
        self.root_norms = tuple(norms)
        maxnorm = max(norms)
        if maxnorm != 2:
            raise AssertionError("long roots are not normalised to squared length 2")
        self.long = tuple(v == 2 for v in norms)

        npos = self.num_positive
        sum_idx = [[-1] * npos for _ in range(npos)]
        diff_idx = [[-1] * npos for _ in range(npos)]
        for i, ri in enumerate(self.positive_roots):
            for j, rj in enumerate(self.positive_roots):
                s = tuple(a + b for a, b in zip(ri, rj))
                k = self.root_index.get(s)
                if k is not None:
                    sum_idx[i][j] = k
                d = tuple(a - b for a, b in zip(ri, rj))
                k = self.root_index.get(d)
                if k is not None:
                    diff_idx[i][j] = k
        self.sum_index = tuple(tuple(row) for row in sum_idx)
        self.diff_index = tuple(tuple(row) for row in diff_idx)

        # dominance: up_masks[i] has bit j set iff root_j >= root_i
        up = []
        for i, ri in enumerate(self.positive_roots):
            mask = 0
            for j, rj in enumerate(self.positive_roots):
                if all(b - a >= 0 for a, b in zip(ri, rj)):
                    mask |= 1 << j
            up.append(mask)
        self.up_masks = tuple(up)

        orth = []
        for i in range(npos):
            mask = 0
            for j in range(npos):
                if i != j and sum_idx[i][j] < 0 and diff_idx[i][j] < 0 and diff_idx[j][i] < 0:
                    mask |= 1 << j
            orth.append(mask)
        self.orth_masks = tuple(orth)

        self.simple_indices = tuple(
            self.root_index[tuple(_unit_int(i, n))] for i in range(n))
        self._eps_strings = self._build_eps_strings()
        self._inner_cache = {}

    # -- basic queries -------------------------------------------------

    def _form_value(self, u: Sequence[int], v: Sequence[int]) -> Fraction:
        total = Fraction(0)
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if b:
                    total += a * b * self.form[i][j]
        return total

    def inner(self, i: int, j: int) -> Fraction:
        """Bilinear form value of two positive roots, by index."""
        key = (i, j) if i <= j else (j, i)
        val = self._inner_cache.get(key)
        if val is None:
            val = self._form_value(self.positive_roots[key[0]], self.positive_roots[key[1]])
            self._inner_cache[key] = val
        return val

    def cartan_pairing(self, mu: Sequence[int], i: int) -> int:
        """<mu, alpha_i^vee> for a coefficient vector mu."""
        return sum(c * self.cartan[i][j] for j, c in enumerate(mu) if c)

    def height(self, i: int) -> int:
        return self.heights[i]

    def is_long(self, i: int) -> bool:
        return self.long[i]

    def index_of(self, coeffs: Sequence[int]) -> int:
        idx = self.root_index.get(tuple(coeffs))
        if idx is None:
            raise ValueError(f"{tuple(coeffs)} is not a positive root of {self.type}")
        return idx

    # -- generation ----------------------------------------------------

    def _generate(self):
        n = self.rank
        simples = [tuple(_unit_int(i, n)) for i in range(n)]
        known = set(simples)
        layer = list(simples)
        while layer:
            nxt = []
            for beta in layer:
                for i in range(n):
                    # p = number of string steps below beta along alpha_i
                    p = 0
                    cur = list(beta)
                    while True:
                        cur[i] -= 1
                        t = tuple(cur)
                        neg = tuple(-x for x in cur)
                        if t in known or neg in known:
                            p += 1
                        else:
                            break
                    if p - self.cartan_pairing(beta, i) >= 1:
                        cand = list(beta)
                        cand[i] += 1
                        cand = tuple(cand)
                        if cand not in known:
                            known.add(cand)
                            nxt.append(cand)
            layer = nxt
        return tuple(sorted(known, key=lambda r: (sum(r), r)))

    # -- epsilon presentation (classical families only) ----------------

    def _eps_vector(self, coeffs: Sequence[int]):
        dim = self._eps_dim
        out = [Fraction(0)] * dim
        for i, c in enumerate(coeffs):
            if c:
                for k in range(dim):
                    out[k] += c * self._eps_simples[i][k]
        return out

    def _build_eps_strings(self):
        if self.type.family not in "ABCD":
            return None
        out = []
        for r in self.positive_roots:
            vec = self._eps_vector(r)
            support = [(k, v) for k, v in enumerate(vec) if v]
            s = None
            if len(support) == 2:
                (a, va), (b, vb) = support
                if va == 1 and vb == -1:
                    s = f"e{a + 1}-e{b + 1}"
                elif va == 1 and vb == 1:
                    s = f"e{a + 1}+e{b + 1}"
            elif len(support) == 1:
                (a, va), = support
                if va == 1:
                    s = f"e{a + 1}"
                elif va == 2:
                    s = f"2e{a + 1}"
            if s is None:
                raise AssertionError(f"unrecognised classical root {r}")
            out.append(s)
        return tuple(out)

    def eps_string(self, i: int) -> Optional[str]:
        """Epsilon-notation of a positive root, or None outside A-D."""
        if self._eps_strings is None:
            return None
        return self._eps_strings[i]

    def root_label(self, i: int) -> str:
        s = self.eps_string(i)
        if s is not None:
            return s
        return "[" + ",".join(str(c) for c in self.positive_roots[i]) + "]"

    def parse_root(self, text: str) -> int:
        """Index of a positive root given as an eps string or [c1,...,cn]."""
        text = text.strip()
        if text.startswith("["):
            if not text.endswith("]"):
                raise ValueError(f"unbalanced coefficient tuple {text!r}")
            parts = [p.strip() for p in text[1:-1].split(",")]
            coeffs = tuple(int(p) for p in parts)
            if len(coeffs) != self.rank:
                raise ValueError(
                    f"expected {self.rank} coefficients, got {len(coeffs)}")
            return self.index_of(coeffs)
        if self._eps_strings is None:
            raise ValueError(
                f"epsilon notation is only available for classical types, not {self.type}")
        try:
            return self._eps_strings.index(text)
        except ValueError:
            raise ValueError(f"{text!r} is not a positive root of {self.type}") from None

    def root_json(self, i: int) -> dict:
        return {"coeffs": list(self.positive_roots[i]), "eps": self.eps_string(i)}

    def __repr__(self):
        return f"RootSystem({self.type}, {self.num_positive} positive roots)"


def _unit_int(i: int, n: int):
    v = [0] * n
    v[i] = 1
    return v


@lru_cache(maxsize=None)
def _build_cached(family: str, rank: int) -> RootSystem:
    return RootSystem(SimpleType(family, rank))


def build_root_system(typ) -> RootSystem:
    """Build (or fetch the cached) root system of a simple type."""
    t = SimpleType.parse(typ)
    return _build_cached(t.family, t.rank)


def is_root(rs: RootSystem, coeffs: Sequence[int]) -> bool:
    """True iff the coefficient vector is a root (of either sign)."""
    v = tuple(coeffs)
    if len(v) != rs.rank:
        raise ValueError(f"expected {rs.rank} coefficients, got {len(v)}")
    return v in rs.root_index or tuple(-x for x in v) in rs.root_index


def strongly_orthogonal(rs: RootSystem, i: int, j: int) -> bool:
    """True iff neither the sum nor the difference of the two roots is a root."""
    if i == j:
        raise ValueError("strong orthogonality is only defined for distinct roots")
    res = bool(rs.orth_masks[i] & (1 << j))
    if res and rs.inner(i, j) != 0:
        raise AssertionError("strongly orthogonal roots must be orthogonal")
    return res


def dominance_leq(rs: RootSystem, i: int, j: int) -> bool:
    """mu <= nu in the dominance order: nu - mu has nonnegative coefficients."""
    return bool(rs.up_masks[i] & (1 << j))


def min_elements(rs: RootSystem, roots: Iterable[int]) -> frozenset:
    s = set(roots)
    return frozenset(i for i in s
                     if not any(j != i and dominance_leq(rs, j, i) for j in s))


def max_elements(rs: RootSystem, roots: Iterable[int]) -> frozenset:
    s = set(roots)
    return frozenset(i for i in s
                     if not any(j != i and dominance_leq(rs, i, j) for j in s))


# Bourbaki node index for each Vinberg-Onishchik node index, E types only.
# Every other family has identical numbering in the two conventions.
_VINBERG_TO_BOURBAKI = {
    ("E", 6): {1: 1, 2: 3, 3: 4, 4: 5, 5: 6, 6: 2},
    ("E", 7): {1: 7, 2: 6, 3: 5, 4: 4, 5: 3, 6: 1, 7: 2},
    ("E", 8): {1: 8, 2: 7, 3: 6, 4: 5, 5: 4, 6: 3, 7: 1, 8: 2},
}


def node_to_bourbaki(rs: RootSystem, node: int, convention: str = "bourbaki") -> int:
    """Translate a 1-based simple-root number into Bourbaki numbering."""
    if convention not in ("bourbaki", "vinberg"):
        raise ValueError(f"unknown numbering convention {convention!r}")
    if not 1 <= node <= rs.rank:
        raise ValueError(f"node {node} out of range for {rs.type}")
    if convention == "vinberg":
        table = _VINBERG_TO_BOURBAKI.get((rs.type.family, rs.rank))
        if table:
            return table[node]
    return node


def node_from_bourbaki(rs: RootSystem, node: int, convention: str = "bourbaki") -> int:
    if convention == "vinberg":
        table = _VINBERG_TO_BOURBAKI.get((rs.type.family, rs.rank))
        if table:
            inv = {v: k for k, v in table.items()}
            return inv[node]
    return node
