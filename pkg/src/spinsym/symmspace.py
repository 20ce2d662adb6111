"""Equal-rank symmetric pairs (Phi_G, Phi_K) and the catalog of spaces.

A pair is specified by the simple roots of Phi_K+ inside a fixed positive
system of G.  Validation enforces that Phi_K is a closed subsystem, that
the compact/noncompact split is a Z2-grading of the root set, and that
noncompact roots exist.  The spin flag tests integrality of the coroot
pairings of delta_n against the simple roots of G: the spinor weights are
delta_n minus sums of distinct positive noncompact roots, so the isotropy
representation lifts to Spin exactly when delta_n is a weight of the
simply-connected group.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import (
    NoNoncompactError,
    NotARootError,
    NotClosedError,
    NotGradedError,
    NotSimpleListError,
)
from .rootsystem import (
    RootSystem,
    SimpleType,
    Weight,
    build_root_system,
    coroot_pairing,
    half_sum,
    simple_system,
)
from .weyl import identify_components, subsystem_weyl_order


@dataclass(frozen=True)
class SymmetricPair:
    """The root datum of an equal-rank pair G/K with the Killing metric.

    ``dim`` is the real dimension n of G/K (the number of noncompact
    roots); the scalar curvature of the sign-changed Killing metric is
    n/2.
    """

    g: RootSystem
    k_simple_roots: tuple[Weight, ...]
    k_positives: tuple[Weight, ...]
    noncompact_positives: tuple[Weight, ...]
    delta_k: Weight
    delta_n: Weight
    dim: int
    scal: Fraction
    spin: bool

    @property
    def delta_g(self) -> Weight:
        return self.g.weyl_vector

    def k_weyl_order(self) -> int:
        return subsystem_weyl_order(self.k_simple_roots, self.k_positives)

    def k_description(self) -> str:
        comps = identify_components(self.k_simple_roots, self.k_positives)
        parts = [str(t) for t in comps]
        torus = self.g.type.rank - sum(t.rank for t in comps)
        if torus == 1:
            parts.append("T")
        elif torus > 1:
            parts.append(f"T^{torus}")
        return " x ".join(parts) if parts else "T^%d" % self.g.type.rank

    def __repr__(self) -> str:
        return f"SymmetricPair({self.g.type}/{self.k_description()}, n={self.dim})"


def build_pair(g: RootSystem, k_simple_roots: Sequence[Weight]) -> SymmetricPair:
    """Validate and assemble a symmetric pair from K-simple roots.

    Raises NOT_A_ROOT / NOT_SIMPLE_LIST / NOT_CLOSED / NOT_GRADED /
    NO_NONCOMPACT on invalid input, in that order of checking.
    """
    k_list = [Weight(a) if not isinstance(a, Weight) else a for a in k_simple_roots]
    pos_set = set(g.positive_roots)
    for a in k_list:
        if a not in g.roots:
            raise NotARootError(f"{a!r} is not a root of {g.type}")
        if a not in pos_set:
            raise NotSimpleListError(f"{a!r} is not a positive root of {g.type}")
    if len(set(k_list)) != len(k_list):
        raise NotSimpleListError("duplicate K-simple roots")
    if k_list and _rank(k_list) != len(k_list):
        raise NotSimpleListError("listed K-simple roots are linearly dependent")

    # closure of the K-positive system inside Phi_G+
    k_pos = set(k_list)
    frontier = list(k_list)
    while frontier:
        nxt = []
        for beta in frontier:
            for alpha in k_list:
                gamma = beta + alpha
                if gamma in g.roots and gamma not in k_pos:
                    k_pos.add(gamma)
                    nxt.append(gamma)
        frontier = nxt

    if set(simple_system(tuple(k_pos))) != set(k_list):
        raise NotSimpleListError(
            "listed roots are not the simple system of the subsystem they generate"
        )

    k_full = k_pos | {-a for a in k_pos}
    k_members = frozenset(k_full)
    for a in k_full:
        for b in k_full:
            s = a + b
            if s in g.roots and s not in k_members:
                raise NotClosedError(
                    f"{a!r} + {b!r} is a root outside the compact subsystem"
                )

    noncompact_pos = [a for a in g.positive_roots if a not in k_pos]
    if not noncompact_pos:
        raise NoNoncompactError("the compact subsystem exhausts the root system (K = G)")

    n_full = set(noncompact_pos) | {-a for a in noncompact_pos}
    for a in n_full:
        for b in n_full:
            s = a + b
            if s in g.roots and s not in k_members:
                raise NotGradedError(
                    f"{a!r} + {b!r} is a noncompact root: the split is not a Z2-grading"
                )
    for a in k_full:
        for b in n_full:
            s = a + b
            if s in g.roots and s in k_members:
                raise NotGradedError(
                    f"{a!r} + {b!r} lands in the compact subsystem: not a Z2-grading"
                )

    k_positives = tuple(sorted(k_pos, key=lambda w: (_height_key(g, w), w.coords)))
    n_positives = tuple(sorted(noncompact_pos, key=lambda w: (_height_key(g, w), w.coords)))
    delta_k = half_sum(k_positives, g.ambient_dim)
    delta_n = g.weyl_vector - delta_k
    assert delta_n == half_sum(n_positives, g.ambient_dim)
    n = 2 * len(n_positives)

    return SymmetricPair(
        g=g,
        k_simple_roots=tuple(sorted(k_list, key=lambda w: w.coords)),
        k_positives=k_positives,
        noncompact_positives=n_positives,
        delta_k=delta_k,
        delta_n=delta_n,
        dim=n,
        scal=Fraction(n, 2),
        spin=_spin_obstruction(g, delta_n) is None,
    )


def _height_key(g: RootSystem, w: Weight) -> int:
    return g.height(w)


def _rank(vectors: Sequence[Weight]) -> int:
    rows = [list(v.coords) for v in vectors]
    rank = 0
    cols = len(rows[0])
    pivot_col = 0
    for row_i in range(len(rows)):
        while pivot_col < cols:
            pivot = next((r for r in range(row_i, len(rows)) if rows[r][pivot_col] != 0), None)
            if pivot is None:
                pivot_col += 1
                continue
            rows[row_i], rows[pivot] = rows[pivot], rows[row_i]
            pv = rows[row_i][pivot_col]
            rows[row_i] = [x / pv for x in rows[row_i]]
            for r in range(len(rows)):
                if r != row_i and rows[r][pivot_col] != 0:
                    f = rows[r][pivot_col]
                    rows[r] = [a - f * b for a, b in zip(rows[r], rows[row_i])]
            rank += 1
            pivot_col += 1
            break
    return rank


def _spin_obstruction(g: RootSystem, delta_n: Weight) -> Optional[tuple[Weight, Fraction]]:
    for a in g.simple_roots:
        p = coroot_pairing(g, delta_n, a)
        if p.denominator != 1:
            return a, p
    return None


def check_spin(pair: SymmetricPair) -> bool:
    """True iff delta_n pairs integrally with every simple coroot of G."""
    return spin_obstruction(pair) is None


def spin_obstruction(pair: SymmetricPair) -> Optional[tuple[Weight, Fraction]]:
    """The first G-simple root whose coroot pairing with delta_n is
    non-integral, with the offending value; None when the pair is spin."""
    return _spin_obstruction(pair.g, pair.delta_n)


def strange_formula_check(pair: SymmetricPair) -> tuple[Fraction, Fraction, bool]:
    """Exact check of |delta_G|^2 - |delta_K|^2 = n/16 in the Killing
    normalization."""
    g = pair.g
    lhs = g.killing(g.weyl_vector, g.weyl_vector) - g.killing(pair.delta_k, pair.delta_k)
    rhs = Fraction(pair.dim, 16)
    return lhs, rhs, lhs == rhs


# -- catalog ------------------------------------------------------------------


@dataclass(frozen=True)
class CatalogEntry:
    """A named equal-rank spin symmetric space, stored as self-validating
    data (the K-simple roots, not diagram bookkeeping)."""

    name: str
    g_type: SimpleType
    k_simple_roots: tuple[Weight, ...]
    notes: str

    def build(self) -> SymmetricPair:
        return _build_entry(self)


@functools.lru_cache(maxsize=None)
def _build_entry(entry: "CatalogEntry") -> SymmetricPair:
    return build_pair(build_root_system(entry.g_type), entry.k_simple_roots)


def _chain(lo: int, hi: int, dim: int) -> list[Weight]:
    """Simple roots e_i - e_{i+1} for lo <= i < hi (0-based coordinates)."""
    out = []
    for i in range(lo, hi):
        v = [0] * dim
        v[i], v[i + 1] = 1, -1
        out.append(Weight(v))
    return out


def _unit(i: int, dim: int, second: Optional[int] = None, sign: int = 1, scale: int = 1) -> Weight:
    v = [0] * dim
    v[i] = scale
    if second is not None:
        v[second] = sign * scale
    return Weight(v)


def _d_block(lo: int, hi: int, dim: int) -> list[Weight]:
    """Simple roots of a D-type block on coordinates [lo, hi)."""
    if hi - lo <= 1:
        return []
    out = _chain(lo, hi - 1, dim)
    out.append(_unit(hi - 2, dim, hi - 1))
    return out


def _b_block(lo: int, hi: int, dim: int) -> list[Weight]:
    size = hi - lo
    if size == 0:
        return []
    out = _chain(lo, hi - 1, dim)
    out.append(_unit(hi - 1, dim))
    return out


def _c_block(lo: int, hi: int, dim: int) -> list[Weight]:
    out = _chain(lo, hi - 1, dim)
    out.append(_unit(hi - 1, dim, scale=2))
    return out


def _bds_k_simples(rs: RootSystem, node: int) -> tuple[Weight, ...]:
    """K-simple roots for removal of one extended-diagram node: the roots
    whose coefficient at the removed node is divisible by its mark."""
    mark = rs.root_coefficients(rs.highest_root)[node]
    members = [
        a for a in rs.positive_roots if rs.root_coefficients(a)[node] % mark == 0
    ]
    return simple_system(members)


def _levi_k_simples(rs: RootSystem, node: int) -> tuple[Weight, ...]:
    members = [a for a in rs.positive_roots if rs.root_coefficients(a)[node] == 0]
    return simple_system(members)


def _catalog_candidates() -> list[CatalogEntry]:
    entries: list[CatalogEntry] = []

    for m in range(1, 7):
        if m == 1:
            gt = SimpleType("A", 1)
            ks: tuple[Weight, ...] = ()
        else:
            gt = SimpleType("B", m)
            ks = tuple(_d_block(0, m, m))
        entries.append(
            CatalogEntry(
                f"sphere-even({m})",
                gt,
                ks,
                f"even sphere S^{2 * m} = SO({2 * m + 1})/SO({2 * m})",
            )
        )

    for total in (2, 4, 6, 8):
        for p in range(1, total // 2 + 1):
            q = total - p
            dim = total
            ks = tuple(a for i, a in enumerate(_chain(0, total - 1, dim)) if i != p - 1)
            entries.append(
                CatalogEntry(
                    f"AIII({p},{q})",
                    SimpleType("A", total - 1),
                    ks,
                    f"complex Grassmannian SU({total})/S(U({p})xU({q}))",
                )
            )

    for p in range(2, 7, 2):
        for q in range(p, 13 - p, 2):
            if p + q < 6:
                continue
            m = (p + q) // 2
            ks = tuple(_d_block(0, p // 2, m) + _d_block(p // 2, m, m))
            entries.append(
                CatalogEntry(
                    f"BDI({p},{q})",
                    SimpleType("D", m),
                    ks,
                    f"real Grassmannian SO({p + q})/SO({p})xSO({q})",
                )
            )

    for n in range(2, 6):
        entries.append(
            CatalogEntry(
                f"CI({n})",
                SimpleType("C", n),
                tuple(_chain(0, n - 1, n)),
                f"Sp({n})/U({n})",
            )
        )

    for p in range(1, 3):
        for q in range(p, 5 - p):
            total = p + q
            ks = tuple(_c_block(0, p, total) + _c_block(p, total, total))
            entries.append(
                CatalogEntry(
                    f"CII({p},{q})",
                    SimpleType("C", total),
                    ks,
                    f"quaternionic Grassmannian Sp({total})/Sp({p})xSp({q})",
                )
            )

    for n in range(3, 7):
        entries.append(
            CatalogEntry(
                f"DIII({n})",
                SimpleType("D", n),
                tuple(_chain(0, n - 1, n)),
                f"SO({2 * n})/U({n})",
            )
        )

    exceptional = [
        ("GI", SimpleType("G", 2), "bds", 1, "G2/SO(4)"),
        ("FI", SimpleType("F", 4), "bds", 0, "F4/Sp(3)Sp(1)"),
        ("FII", SimpleType("F", 4), "bds", 3, "Cayley plane F4/Spin(9)"),
        ("EII", SimpleType("E", 6), "bds", 1, "E6/SU(6)Sp(1)"),
        ("EIII", SimpleType("E", 6), "levi", 0, "E6/Spin(10)U(1)"),
        ("EV", SimpleType("E", 7), "bds", 1, "E7/SU(8)"),
        ("EVI", SimpleType("E", 7), "bds", 0, "E7/Spin(12)Sp(1)"),
        ("EVII", SimpleType("E", 7), "levi", 6, "E7/E6 U(1)"),
        ("EVIII", SimpleType("E", 8), "bds", 0, "E8/Spin(16)"),
        ("EIX", SimpleType("E", 8), "bds", 7, "E8/E7 Sp(1)"),
    ]
    for name, gt, kind, node, notes in exceptional:
        rs = build_root_system(gt)
        ks = _bds_k_simples(rs, node) if kind == "bds" else _levi_k_simples(rs, node)
        entries.append(CatalogEntry(name, gt, ks, notes))

    return entries


@functools.lru_cache(maxsize=1)
def catalog() -> tuple[CatalogEntry, ...]:
    """All built-in equal-rank irreducible pairs that carry a spin
    structure.  Candidates failing the spin test are dropped here; the
    constructions themselves stay available through build_pair."""
    out = []
    for entry in _catalog_candidates():
        pair = entry.build()
        if pair.spin:
            out.append(entry)
    return tuple(out)


def catalog_entry(name: str) -> CatalogEntry:
    for entry in catalog():
        if entry.name == name:
            return entry
    raise KeyError(f"no catalog entry named {name!r}")


def parse_pair_document(doc: dict) -> tuple[str, SymmetricPair]:
    """Resolve a pair-specification document.

    Either ``{"catalog": "<name>"}`` or
    ``{"g": {"family": "B", "rank": 2}, "k_simple_roots": [[1,-1],[1,1]]}``
    with coordinates given as integers or "p/q" strings.
    Returns (display name, pair).
    """
    if not isinstance(doc, dict):
        raise ValueError("pair document must be a JSON object")
    if "catalog" in doc:
        entry = catalog_entry(str(doc["catalog"]))
        return entry.name, entry.build()
    if "g" not in doc or "k_simple_roots" not in doc:
        raise ValueError('pair document needs "catalog" or "g" plus "k_simple_roots"')
    gspec = doc["g"]
    try:
        gt = SimpleType(str(gspec["family"]).upper(), int(gspec["rank"]))
    except (KeyError, TypeError) as exc:
        raise ValueError(f'malformed "g" specification: {exc}') from exc
    roots = []
    for row in doc["k_simple_roots"]:
        roots.append(Weight([Fraction(str(c)) for c in row]))
    g = build_root_system(gt)
    return f"{gt}-pair", build_pair(g, roots)
