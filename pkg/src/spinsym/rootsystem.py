"""Exact root data for the simple Lie types A-G.

All vectors live in the classical orthogonal presentation of each family
(type A uses rank+1 coordinates on the sum-zero hyperplane; G2 sits in a
3-dimensional sum-zero space; E6 and E7 use the standard 8-coordinate
realization, since their root lattices admit no rational orthogonal basis
of dimension equal to the rank).  Every coordinate is a
``fractions.Fraction``; there is no floating point anywhere in the
library.

Two bilinear forms matter:

* ``basic_form``: the W-invariant form normalized so long roots have
  squared length 2,
* the Killing-normalized form ``killing_inner_product``, which is
  ``basic_form / (2 h_vee)`` with ``h_vee`` the dual Coxeter number.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import (
    DimensionMismatchError,
    InvalidRankError,
    NotARootError,
    NotDominantError,
    NotIntegralError,
)

FAMILIES = ("A", "B", "C", "D", "E", "F", "G")

# Minimal admissible rank per family.  The low-rank coincidences C2 ~ B2
# and D3 ~ A3 are deliberately accepted; they produce isomorphic data.
_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}

_DUAL_COXETER = {
    "E": {6: 12, 7: 18, 8: 30},
    "F": {4: 9},
    "G": {2: 4},
}

_WEYL_ORDER_EXC = {
    ("G", 2): 12,
    ("F", 4): 1152,
    ("E", 6): 51840,
    ("E", 7): 2903040,
    ("E", 8): 696729600,
}


class Weight:
    """An exact rational vector in the ambient weight space.

    Immutable; equality and hashing are componentwise and exact.
    """

    __slots__ = ("coords",)

    def __init__(self, coords: Iterable):
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in coords))

    def __setattr__(self, name, value):
        raise AttributeError("Weight is immutable")

    @staticmethod
    def zero(dim: int) -> "Weight":
        return Weight((0,) * dim)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __add__(self, other: "Weight") -> "Weight":
        if len(self.coords) != len(other.coords):
            raise DimensionMismatchError(
                f"cannot add vectors of dimension {len(self.coords)} and {len(other.coords)}"
            )
        return Weight(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: "Weight") -> "Weight":
        if len(self.coords) != len(other.coords):
            raise DimensionMismatchError(
                f"cannot subtract vectors of dimension {len(self.coords)} and {len(other.coords)}"
            )
        return Weight(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self) -> "Weight":
        return Weight(-a for a in self.coords)

    def __mul__(self, scalar) -> "Weight":
        s = Fraction(scalar)
        return Weight(a * s for a in self.coords)

    __rmul__ = __mul__

    def dot(self, other: "Weight") -> Fraction:
        """Plain coordinate dot product (no normalization)."""
        if len(self.coords) != len(other.coords):
            raise DimensionMismatchError(
                f"cannot pair vectors of dimension {len(self.coords)} and {len(other.coords)}"
            )
        return sum((a * b for a, b in zip(self.coords, other.coords)), Fraction(0))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __eq__(self, other) -> bool:
        return isinstance(other, Weight) and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __repr__(self) -> str:
        return "Weight(%s)" % (", ".join(str(c) for c in self.coords))


@dataclass(frozen=True)
class SimpleType:
    """A simple Lie type: family letter plus rank."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidRankError(f"unknown family {self.family!r}")
        r = self.rank
        if self.family == "E":
            if r not in (6, 7, 8):
                raise InvalidRankError(f"E{r} is not a simple type")
        elif self.family == "F":
            if r != 4:
                raise InvalidRankError(f"F{r} is not a simple type")
        elif self.family == "G":
            if r != 2:
                raise InvalidRankError(f"G{r} is not a simple type")
        elif r < _MIN_RANK[self.family]:
            raise InvalidRankError(f"{self.family}{r}: rank must be >= {_MIN_RANK[self.family]}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def _simple_root_vectors(t: SimpleType) -> list[Weight]:
    f, r = t.family, t.rank
    if f == "A":
        d = r + 1
        return [Weight([1 if j == i else -1 if j == i + 1 else 0 for j in range(d)]) for i in range(r)]
    if f in ("B", "C", "D"):
        def e(i, j=None, sj=1):
            v = [0] * r
            v[i] = 1
            if j is not None:
                v[j] = sj
            return Weight(v)

        simples = [Weight([1 if k == i else -1 if k == i + 1 else 0 for k in range(r)]) for i in range(r - 1)]
        if f == "B":
            simples.append(e(r - 1))
        elif f == "C":
            simples.append(Weight([0] * (r - 1) + [2]))
        else:
            simples.append(e(r - 2, r - 1))
        return simples
    if f == "G":
        return [Weight([1, -1, 0]), Weight([-2, 1, 1])]
    if f == "F":
        return [
            Weight([0, 1, -1, 0]),
            Weight([0, 0, 1, -1]),
            Weight([0, 0, 0, 1]),
            Weight([Fraction(1, 2), Fraction(-1, 2), Fraction(-1, 2), Fraction(-1, 2)]),
        ]
    # E family: Bourbaki coordinates in R^8; E6/E7 take leading subsets.
    half = Fraction(1, 2)
    e8 = [
        Weight([half, -half, -half, -half, -half, -half, -half, half]),
        Weight([1, 1, 0, 0, 0, 0, 0, 0]),
        Weight([-1, 1, 0, 0, 0, 0, 0, 0]),
        Weight([0, -1, 1, 0, 0, 0, 0, 0]),
        Weight([0, 0, -1, 1, 0, 0, 0, 0]),
        Weight([0, 0, 0, -1, 1, 0, 0, 0]),
        Weight([0, 0, 0, 0, -1, 1, 0, 0]),
        Weight([0, 0, 0, 0, 0, -1, 1, 0]),
    ]
    return e8[: t.rank]


def _form_factor(t: SimpleType) -> Fraction:
    # basic_form = factor * (plain dot product) in these realizations
    if t.family == "C":
        return Fraction(1, 2)
    if t.family == "G":
        return Fraction(1, 3)
    return Fraction(1)


def _dual_coxeter(t: SimpleType) -> int:
    f, r = t.family, t.rank
    if f == "A":
        return r + 1
    if f == "B":
        return 2 * r - 1
    if f == "C":
        return r + 1
    if f == "D":
        return 2 * r - 2
    return _DUAL_COXETER[f][r]


def positive_root_count(t: SimpleType) -> int:
    """Closed-form number of positive roots."""
    f, r = t.family, t.rank
    if f == "A":
        return r * (r + 1) // 2
    if f in ("B", "C"):
        return r * r
    if f == "D":
        return r * (r - 1)
    return {("G", 2): 6, ("F", 4): 24, ("E", 6): 36, ("E", 7): 63, ("E", 8): 120}[(f, r)]


def weyl_group_order(t: SimpleType) -> int:
    """|W| for the simple type."""
    f, r = t.family, t.rank
    fact = 1
    for k in range(2, r + 1):
        fact *= k
    if f == "A":
        return fact * (r + 1)
    if f in ("B", "C"):
        return (2 ** r) * fact
    if f == "D":
        return (2 ** (r - 1)) * fact
    return _WEYL_ORDER_EXC[(f, r)]


def _invert_fraction_matrix(m: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    n = len(m)
    aug = [[Fraction(m[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next(row for row in range(col, n) if aug[row][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for row in range(n):
            if row != col and aug[row][col] != 0:
                factor = aug[row][col]
                aug[row] = [a - factor * b for a, b in zip(aug[row], aug[col])]
    return [row[n:] for row in aug]


class RootSystem:
    """Immutable root datum of a simple type.

    Built through :func:`build_root_system`; all attributes are plain data
    and safe for unrestricted concurrent reads.
    """

    def __init__(self, type_: SimpleType):
        self.type = type_
        self.simple_roots: tuple[Weight, ...] = tuple(_simple_root_vectors(type_))
        self.ambient_dim = len(self.simple_roots[0])
        self.form_factor = _form_factor(type_)
        self.dual_coxeter = _dual_coxeter(type_)

        pos, coeffs = self._close_positive_roots()
        order = sorted(range(len(pos)), key=lambda i: (sum(coeffs[i]), pos[i].coords))
        self.positive_roots: tuple[Weight, ...] = tuple(pos[i] for i in order)
        self._pos_coefficients = {pos[i]: coeffs[i] for i in range(len(pos))}
        expected = positive_root_count(type_)
        if len(self.positive_roots) != expected:
            raise AssertionError(
                f"{type_}: generated {len(self.positive_roots)} positive roots, expected {expected}"
            )

        self.roots = frozenset(self.positive_roots) | frozenset(-a for a in self.positive_roots)
        self.cartan_matrix: tuple[tuple[int, ...], ...] = tuple(
            tuple(self._int_pairing(a, b) for b in self.simple_roots) for a in self.simple_roots
        )

        inv = _invert_fraction_matrix(self.cartan_matrix)
        self.fundamental_weights: tuple[Weight, ...] = tuple(
            _linear_combination(inv[i], self.simple_roots) for i in range(type_.rank)
        )
        half = Fraction(1, 2)
        self.weyl_vector = _linear_combination([half] * len(self.positive_roots), self.positive_roots)
        rho = self.fundamental_weights[0]
        for w in self.fundamental_weights[1:]:
            rho = rho + w
        if rho != self.weyl_vector:
            raise AssertionError(f"{type_}: sum of fundamental weights != half-sum of positive roots")

        self.highest_root = max(self.positive_roots, key=lambda a: sum(self._pos_coefficients[a]))
        self.weyl_order = weyl_group_order(type_)

        # Dual basis to the simple roots under the plain dot product,
        # spanning the same subspace; used to read off simple-root
        # coefficients of lattice vectors.
        gram = [[a.dot(b) for b in self.simple_roots] for a in self.simple_roots]
        ginv = _invert_fraction_matrix(gram)
        self._dual_basis: tuple[Weight, ...] = tuple(
            _linear_combination(ginv[i], self.simple_roots) for i in range(type_.rank)
        )

    @staticmethod
    def _int_pairing(a: Weight, b: Weight) -> int:
        val = 2 * a.dot(b) / b.dot(b)
        if val.denominator != 1:
            raise AssertionError("non-integral Cartan pairing")
        return int(val)

    def _close_positive_roots(self):
        simples = self.simple_roots
        r = len(simples)
        coeff = {simples[i]: tuple(int(j == i) for j in range(r)) for i in range(r)}
        level = list(simples)
        while level:
            nxt = []
            for beta in level:
                for i, alpha in enumerate(simples):
                    # root string: beta + alpha is a root iff p - <beta, alpha^vee> > 0
                    p = 0
                    v = beta - alpha
                    while v in coeff:
                        p += 1
                        v = v - alpha
                    if p - self._int_pairing(beta, alpha) > 0:
                        gamma = beta + alpha
                        if gamma not in coeff:
                            c = list(coeff[beta])
                            c[i] += 1
                            coeff[gamma] = tuple(c)
                            nxt.append(gamma)
            level = nxt
        roots = list(coeff)
        return roots, [coeff[a] for a in roots]

    # -- forms -------------------------------------------------------------

    def basic_form(self, u: Weight, v: Weight) -> Fraction:
        """W-invariant form with long roots of squared length 2."""
        if len(u) != self.ambient_dim or len(v) != self.ambient_dim:
            raise DimensionMismatchError(
                f"expected ambient dimension {self.ambient_dim}"
            )
        return self.form_factor * u.dot(v)

    def killing(self, u: Weight, v: Weight) -> Fraction:
        return self.basic_form(u, v) / (2 * self.dual_coxeter)

    # -- coefficients ------------------------------------------------------

    def root_coefficients(self, root: Weight) -> tuple[int, ...]:
        """Expansion of a root in the simple-root basis."""
        c = self._pos_coefficients.get(root)
        if c is not None:
            return c
        c = self._pos_coefficients.get(-root)
        if c is not None:
            return tuple(-x for x in c)
        raise NotARootError(f"{root!r} is not a root of {self.type}")

    def expand_in_simple_roots(self, v: Weight) -> Optional[tuple[Fraction, ...]]:
        """Coefficients of ``v`` over the simple roots, or None if ``v`` is
        outside their span."""
        coeffs = tuple(v.dot(d) for d in self._dual_basis)
        rebuilt = _linear_combination(coeffs, self.simple_roots)
        if rebuilt.coords != v.coords:
            return None
        return coeffs

    def height(self, root: Weight) -> int:
        return sum(self.root_coefficients(root))

    def __repr__(self) -> str:
        return f"RootSystem({self.type})"


def _linear_combination(coeffs: Sequence, vectors: Sequence[Weight]) -> Weight:
    dim = len(vectors[0])
    acc = [Fraction(0)] * dim
    for c, v in zip(coeffs, vectors):
        if c == 0:
            continue
        fc = Fraction(c)
        for k, x in enumerate(v.coords):
            acc[k] += fc * x
    return Weight(acc)


@functools.lru_cache(maxsize=None)
def build_root_system(type_: SimpleType) -> RootSystem:
    """Construct (and cache) the root system of a simple type."""
    return RootSystem(type_)


def killing_inner_product(rs: RootSystem, u: Weight, v: Weight) -> Fraction:
    """Inner product induced by the sign-changed Killing form:
    basic form divided by twice the dual Coxeter number."""
    return rs.killing(u, v)


def coroot_pairing(rs: RootSystem, lam: Weight, alpha: Weight) -> Fraction:
    """2<lam, alpha>/<alpha, alpha>; independent of form normalization."""
    if alpha not in rs.roots:
        raise NotARootError(f"{alpha!r} is not a root of {rs.type}")
    if len(lam) != rs.ambient_dim:
        raise DimensionMismatchError(f"expected ambient dimension {rs.ambient_dim}")
    return 2 * lam.dot(alpha) / alpha.dot(alpha)


def simple_system(positives: Sequence[Weight]) -> tuple[Weight, ...]:
    """Indecomposable elements of a positive system (its simple roots)."""
    pos = set(positives)
    decomposable = set()
    plist = list(pos)
    for i, a in enumerate(plist):
        for b in plist[i:]:
            s = a + b
            if s in pos:
                decomposable.add(s)
    return tuple(sorted((a for a in pos if a not in decomposable), key=lambda w: w.coords))


def is_dominant(rs: RootSystem, lam: Weight, positives: Optional[Sequence[Weight]] = None) -> bool:
    """True iff ``lam`` pairs nonnegatively with every simple coroot of the
    given positive system (defaults to the full positive system of G)."""
    simples = rs.simple_roots if positives is None else simple_system(positives)
    return all(coroot_pairing(rs, lam, a) >= 0 for a in simples)


def _check_dominant_integral(rs: RootSystem, lam: Weight, simples: Sequence[Weight]) -> None:
    for a in simples:
        p = coroot_pairing(rs, lam, a)
        if p < 0:
            raise NotDominantError(f"pairing with {a!r} is {p}")
        if p.denominator != 1:
            raise NotIntegralError(f"pairing with {a!r} is {p}")


def weyl_dimension(
    rs: RootSystem,
    lam: Weight,
    positives: Optional[Sequence[Weight]] = None,
    delta: Optional[Weight] = None,
) -> int:
    """Dimension of the irreducible with highest weight ``lam``:
    prod over positive roots of <lam+delta, a> / <delta, a>.

    With ``positives``/``delta`` given, computes the dimension for that
    subsystem instead (components of ``lam`` orthogonal to it drop out).
    """
    if positives is None:
        positives = rs.positive_roots
        simples = rs.simple_roots
        delta = rs.weyl_vector
    else:
        simples = simple_system(positives)
        if delta is None:
            delta = _linear_combination([Fraction(1, 2)] * len(positives), list(positives)) if positives else Weight.zero(rs.ambient_dim)
    _check_dominant_integral(rs, lam, simples)
    num = Fraction(1)
    shifted = lam + delta
    for a in positives:
        num *= shifted.dot(a) / delta.dot(a)
    if num.denominator != 1:
        raise AssertionError("Weyl dimension did not come out integral")
    return int(num)


def dominance_leq(rs: RootSystem, lower: Weight, upper: Weight) -> bool:
    """Dominance order: ``lower`` precedes ``upper`` iff their difference is
    a nonnegative integer combination of simple roots."""
    coeffs = rs.expand_in_simple_roots(upper - lower)
    if coeffs is None:
        return False
    return all(c.denominator == 1 and c >= 0 for c in coeffs)


def half_sum(vectors: Sequence[Weight], dim: int) -> Weight:
    if not vectors:
        return Weight.zero(dim)
    return _linear_combination([Fraction(1, 2)] * len(vectors), list(vectors))
