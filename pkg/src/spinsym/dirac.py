"""Spin decomposition and the Dirac spectrum of an equal-rank pair.

The square of the first Dirac eigenvalue of a spin pair is

    2 * min_w |beta_w|^2 + n/8,      beta_w = w.delta_G - delta_K,

the minimum running over the coset transversal W enumerated in
:mod:`spinsym.weyl`; norms use the Killing normalization.  Everything
here is exact; the module also carries the independent brute-force
oracles (spinor weight enumeration, highest-weight extraction, full
character computation via the Freudenthal recursion) used to verify the
closed formula, and the cutoff scan of Spec(D^2) = {c_gamma + n/16}.
"""

from __future__ import annotations

import functools
import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping, Sequence, Union

from . import _kernels as kernels
from .errors import (
    CapExceededError,
    InconsistentCharacterError,
    NotDominantError,
    NotIntegralError,
    NotSpinError,
)
from .rootsystem import (
    RootSystem,
    Weight,
    _invert_fraction_matrix,
    _linear_combination,
    dominance_leq,
    weyl_dimension,
)
from .symmspace import SymmetricPair, spin_obstruction
from .weyl import KostantSet, WeylElement, enumerate_kostant_set

logger = logging.getLogger(__name__)

BRANCHING_DIM_CAP = 10 ** 6
SPIN_ORACLE_CAP = 20


# -- positive systems usable for both G and (possibly reducible) K ----------


@dataclass(frozen=True)
class _PosSystem:
    ambient_dim: int
    simples: tuple[Weight, ...]
    positives: tuple[Weight, ...]
    delta: Weight
    duals: tuple[Weight, ...]  # dual basis to the simples under the plain dot


def _make_system(ambient_dim: int, simples, positives, delta) -> _PosSystem:
    simples = tuple(simples)
    if simples:
        gram = [[a.dot(b) for b in simples] for a in simples]
        ginv = _invert_fraction_matrix(gram)
        duals = tuple(_linear_combination(ginv[i], list(simples)) for i in range(len(simples)))
    else:
        duals = ()
    return _PosSystem(ambient_dim, simples, tuple(positives), delta, duals)


@functools.lru_cache(maxsize=None)
def _g_system(rs: RootSystem) -> _PosSystem:
    return _make_system(rs.ambient_dim, rs.simple_roots, rs.positive_roots, rs.weyl_vector)


@functools.lru_cache(maxsize=None)
def _k_system(pair: SymmetricPair) -> _PosSystem:
    return _make_system(
        pair.g.ambient_dim, pair.k_simple_roots, pair.k_positives, pair.delta_k
    )


def _sys_coroot(lam: Weight, a: Weight) -> Fraction:
    return 2 * lam.dot(a) / a.dot(a)


def _sys_is_dominant(sys: _PosSystem, lam: Weight) -> bool:
    return all(_sys_coroot(lam, a) >= 0 for a in sys.simples)


def _sys_check_highest(sys: _PosSystem, lam: Weight) -> None:
    for a in sys.simples:
        p = _sys_coroot(lam, a)
        if p < 0:
            raise NotDominantError(f"pairing of {lam!r} with {a!r} is {p}")
        if p.denominator != 1:
            raise NotIntegralError(f"pairing of {lam!r} with {a!r} is {p}")


def _sys_dimension(sys: _PosSystem, lam: Weight) -> int:
    _sys_check_highest(sys, lam)
    num = Fraction(1)
    shifted = lam + sys.delta
    for a in sys.positives:
        num *= shifted.dot(a) / sys.delta.dot(a)
    if num.denominator != 1 or num <= 0:
        raise AssertionError("dimension formula did not produce a positive integer")
    return int(num)


# -- scaled-integer plumbing --------------------------------------------------


def _common_scale(vectors: Iterable[Weight]) -> int:
    s = 1
    for v in vectors:
        for c in v.coords:
            s = lcm(s, c.denominator)
    return s


def _scaled(v: Weight, s: int) -> tuple[int, ...]:
    out = []
    for c in v.coords:
        x = c * s
        if x.denominator != 1:
            raise AssertionError(f"scale {s} does not clear denominator of {c}")
        out.append(int(x))
    return tuple(out)


def _unscaled(t: Sequence[int], s: int) -> Weight:
    return Weight(Fraction(x, s) for x in t)


@functools.lru_cache(maxsize=64)
def _scaled_system(sys: _PosSystem, scale: int):
    simples = tuple(_scaled(a, scale) for a in sys.simples)
    norms = tuple(sum(x * x for x in a) for a in simples)
    positives = tuple(_scaled(a, scale) for a in sys.positives)
    # duals scaled by their own denominator lcm; coefficient of alpha_i in a
    # lattice vector v is dot(v_scaled, duals_scaled[i]) / (scale * dual_lcm)
    dual_lcm = _common_scale(sys.duals) if sys.duals else 1
    duals = tuple(_scaled(d, dual_lcm) for d in sys.duals)
    return simples, norms, positives, duals, dual_lcm


def _dominant_support_scaled(sys: _PosSystem, lam: Weight, scale: int):
    """All dominant weights of the irreducible with highest weight ``lam``
    (equivalently: all system-dominant points of lam minus a nonnegative
    integer combination of simple roots), with their depths.

    Complete because the dominant conjugates along any chain of single
    root subtractions inside the weight diagram stay inside this set.
    """
    simples, norms, positives, duals, dual_lcm = _scaled_system(sys, scale)
    lam_s = _scaled(lam, scale)
    shifts = list(positives) + [tuple(-x for x in p) for p in positives]
    div = scale * dual_lcm

    def depth_of(cand):
        total = 0
        for d in duals:
            num = sum((l - c) * y for l, c, y in zip(lam_s, cand, d))
            coeff, rem = divmod(num, div)
            if rem or coeff < 0:
                return None
            total += coeff
        return total

    seen = {lam_s: 0}
    frontier = [lam_s]
    while frontier:
        nxt = []
        for v in frontier:
            for gamma in shifts:
                cand = kernels.dominant_conjugate(
                    tuple(x - y for x, y in zip(v, gamma)), simples, norms
                )
                if cand in seen:
                    continue
                depth = depth_of(cand)
                if depth is None:
                    continue
                seen[cand] = depth
                nxt.append(cand)
        frontier = nxt
    return list(seen.items())


_char_cache: dict = {}
_CHAR_CACHE_MAX_ENTRIES = 256
_CHAR_CACHE_MAX_SIZE = 120000


def _character_scaled(sys: _PosSystem, lam: Weight, scale: int) -> dict:
    """Full weight multiset (scaled tuples -> multiplicities) of the
    system-irreducible with highest weight ``lam``."""
    key = (sys, lam, scale)
    hit = _char_cache.get(key)
    if hit is not None:
        return hit
    if not sys.simples:
        result = {_scaled(lam, scale): 1}
    else:
        simples, norms, positives, duals, dual_lcm = _scaled_system(sys, scale)
        doms = _dominant_support_scaled(sys, lam, scale)
        delta_s = _scaled(sys.delta, scale)
        mults = kernels.freudenthal(
            _scaled(lam, scale), positives, delta_s, simples, norms, doms
        )
        result = {}
        for v, m in mults.items():
            for u in kernels.weyl_orbit(v, simples, norms):
                result[u] = m
        if sum(result.values()) != _sys_dimension(sys, lam):
            raise AssertionError("character size disagrees with the dimension formula")
    if len(result) <= _CHAR_CACHE_MAX_SIZE and len(_char_cache) < _CHAR_CACHE_MAX_ENTRIES:
        _char_cache[key] = result
    return result


def _character(sys: _PosSystem, lam: Weight) -> dict[Weight, int]:
    _sys_check_highest(sys, lam)
    scale = _common_scale((lam, sys.delta) + sys.simples + sys.positives)
    return {
        _unscaled(t, scale): m for t, m in _character_scaled(sys, lam, scale).items()
    }


# -- public character/branching operations -----------------------------------


def freudenthal_multiplicities(
    rs: RootSystem, lam: Weight, cap: int = BRANCHING_DIM_CAP
) -> dict[Weight, int]:
    """All weights of the G-irreducible with highest weight ``lam``, by the
    Freudenthal recursion; the multiplicity sum equals the Weyl dimension."""
    dim = weyl_dimension(rs, lam)
    if dim > cap:
        raise CapExceededError(f"dim {dim} exceeds cap {cap}")
    return _character(_g_system(rs), lam)


def decompose_into_k_irreps(
    pair: SymmetricPair, weights: Union[Mapping[Weight, int], Iterable[Weight]]
) -> dict[Weight, int]:
    """Decompose a K-Weyl-invariant weight multiset into K-irreducibles by
    iterated highest-weight extraction (largest |mu + delta_K| first)."""
    counter: Counter = Counter()
    if isinstance(weights, Mapping):
        for w, m in weights.items():
            counter[w] += m
    else:
        for w in weights:
            counter[w] += 1
    if not counter:
        return {}

    sys = _k_system(pair)
    scale = _common_scale(
        tuple(counter) + (sys.delta,) + sys.simples + sys.positives
    )
    simples, norms, _pos, _duals, _dl = _scaled_system(sys, scale)
    delta_s = _scaled(sys.delta, scale)
    table = {_scaled(w, scale): m for w, m in counter.items()}

    def shifted_norm(t):
        return sum((x + d) ** 2 for x, d in zip(t, delta_s))

    dominants = [
        t
        for t in table
        if all(2 * sum(x * y for x, y in zip(t, a)) >= 0 for a in simples)
    ]
    dominants.sort(key=lambda t: (shifted_norm(t), t), reverse=True)

    out: dict[Weight, int] = {}
    for mu in dominants:
        m = table.get(mu, 0)
        if m == 0:
            continue
        mu_weight = _unscaled(mu, scale)
        out[mu_weight] = m
        for t, cm in _character_scaled(sys, mu_weight, scale).items():
            nv = table.get(t, 0) - m * cm
            if nv < 0:
                raise InconsistentCharacterError(
                    f"subtracting {m} x V({mu_weight!r}) drove {_unscaled(t, scale)!r} negative"
                )
            if nv:
                table[t] = nv
            else:
                table.pop(t, None)
    if table:
        leftover = _unscaled(next(iter(table)), scale)
        raise InconsistentCharacterError(
            f"multiset is not a sum of K-characters: leftover at {leftover!r}"
        )
    return out


def branching_multiplicity(
    pair: SymmetricPair,
    lam: Weight,
    mu: Weight,
    cap: int = BRANCHING_DIM_CAP,
) -> int:
    """Multiplicity of the K-irreducible ``mu`` in the restriction of the
    G-irreducible ``lam`` (same maximal torus: weights restrict as they
    are)."""
    dim = weyl_dimension(pair.g, lam)
    if dim > cap:
        raise CapExceededError(f"dim V({lam!r}) = {dim} exceeds cap {cap}")
    decomp = decompose_into_k_irreps(pair, _character(_g_system(pair.g), lam))
    return decomp.get(mu, 0)


def casimir_eigenvalue(rs: RootSystem, lam: Weight) -> Fraction:
    """<lam + delta, lam + delta> - <delta, delta> under the Killing
    normalization (the Casimir scalar on the irreducible of highest
    weight lam)."""
    _sys_check_highest(_g_system(rs), lam)
    delta = rs.weyl_vector
    return rs.killing(lam + delta, lam + delta) - rs.killing(delta, delta)


# -- the spin representation ---------------------------------------------------


@dataclass(frozen=True)
class SpinComponent:
    """One irreducible K-component of the spin representation."""

    w: WeylElement
    beta: Weight
    norm2: Fraction
    dim: int
    pair: SymmetricPair = field(repr=False)

    def beta_g(self) -> Weight:
        """w^{-1}.beta = delta_G - w^{-1}.delta_K, the G-conjugated highest
        weight."""
        return self.w.inverse().apply(self.beta)


@functools.lru_cache(maxsize=None)
def kostant_set(pair: SymmetricPair) -> KostantSet:
    return enumerate_kostant_set(pair.g, pair.k_positives)


def _require_spin(pair: SymmetricPair) -> None:
    if not pair.spin:
        obstruction = spin_obstruction(pair)
        raise NotSpinError(
            f"pair is not spin: delta_n pairs to {obstruction[1]} with coroot of {obstruction[0]!r}"
        )


@functools.lru_cache(maxsize=None)
def spin_decomposition(pair: SymmetricPair) -> tuple[SpinComponent, ...]:
    """The K-irreducible components (w, beta_w, dims) of the spin
    representation; dimensions add up to 2^(n/2) exactly."""
    _require_spin(pair)
    g = pair.g
    sys = _k_system(pair)
    delta_g = g.weyl_vector
    norm_dg = g.killing(delta_g, delta_g)
    comps = []
    for w in kostant_set(pair):
        beta = w.apply(delta_g) - pair.delta_k
        if not _sys_is_dominant(sys, beta):
            raise AssertionError(f"beta_w not K-dominant for word {w.word}")
        if g.killing(beta + pair.delta_k, beta + pair.delta_k) != norm_dg:
            raise AssertionError("|beta + delta_K| != |delta_G|")
        comps.append(
            SpinComponent(
                w=w,
                beta=beta,
                norm2=g.killing(beta, beta),
                dim=_sys_dimension(sys, beta),
                pair=pair,
            )
        )
    total = sum(c.dim for c in comps)
    if total != 2 ** (pair.dim // 2):
        raise AssertionError(f"spin dimensions add to {total}, expected 2^{pair.dim // 2}")
    comps.sort(key=lambda c: (c.norm2, tuple(-x for x in c.beta.coords)))
    return tuple(comps)


def minimal_norm_components(components: Sequence[SpinComponent]) -> list[SpinComponent]:
    least = min(c.norm2 for c in components)
    return [c for c in components if c.norm2 == least]


def dominance_maximal(components: Sequence[SpinComponent]) -> list[SpinComponent]:
    """Components whose beta is maximal in the dominance order among the
    given ones."""
    rs = components[0].pair.g
    out = []
    for c in components:
        if not any(
            other.beta != c.beta and dominance_leq(rs, c.beta, other.beta)
            for other in components
        ):
            out.append(c)
    return out


def select_w0(components: Sequence[SpinComponent]) -> SpinComponent:
    """A minimal-norm component, chosen dominance-maximal among the minima;
    remaining ties (pairwise incomparable betas) break toward the
    lexicographically largest beta and are logged."""
    if not components:
        raise ValueError("empty component list")
    minima = minimal_norm_components(components)
    maximal = dominance_maximal(minima)
    if len(maximal) > 1:
        logger.warning(
            "%d dominance-incomparable minimal-norm spin components (norm %s); "
            "reporting the lexicographically largest beta",
            len(maximal),
            minima[0].norm2,
        )
    return max(maximal, key=lambda c: c.beta.coords)


def check_lemma1(pair: SymmetricPair, w0_component: SpinComponent) -> bool:
    """Whether w0^{-1}.beta_{w0} is G-dominant (required for the closed
    eigenvalue formula to be attained by an actual representation)."""
    beta_g = w0_component.beta_g()
    return all(beta_g.dot(a) >= 0 for a in pair.g.simple_roots)


def first_eigenvalue_squared(pair: SymmetricPair) -> Fraction:
    """2 min_w |beta_w|^2 + n/8."""
    comps = spin_decomposition(pair)
    return 2 * min(c.norm2 for c in comps) + Fraction(pair.dim, 8)


def first_eigenvalue_squared_remark(pair: SymmetricPair) -> Fraction:
    """The same number evaluated through the expanded form
    2|delta_G|^2 + 2|delta_K|^2 - 4 max_w <w.delta_G, delta_K> + n/8."""
    _require_spin(pair)
    g = pair.g
    delta_g, delta_k = g.weyl_vector, pair.delta_k
    best = max(g.killing(w.apply(delta_g), delta_k) for w in kostant_set(pair))
    return (
        2 * g.killing(delta_g, delta_g)
        + 2 * g.killing(delta_k, delta_k)
        - 4 * best
        + Fraction(pair.dim, 8)
    )


# -- brute-force oracles -------------------------------------------------------


def spin_weights_bruteforce(pair: SymmetricPair, cap: int = SPIN_ORACLE_CAP) -> Counter:
    """The 2^(n/2) spinor weights delta_n - (sum of a subset of the
    positive noncompact roots), as an exact multiset."""
    n_pos = pair.noncompact_positives
    if len(n_pos) > cap:
        raise CapExceededError(
            f"{len(n_pos)} positive noncompact roots exceed the oracle cap {cap}"
        )
    scale = _common_scale((pair.delta_n,) + n_pos)
    table = kernels.subset_sums(
        _scaled(pair.delta_n, scale), [_scaled(a, scale) for a in n_pos]
    )
    return Counter({_unscaled(t, scale): m for t, m in table.items()})


# -- spectrum ------------------------------------------------------------------


@dataclass(frozen=True)
class SpectrumLine:
    """One Peter-Weyl block contributing eigenvalue casimir + n/16."""

    eigenvalue: Fraction
    g_highest_weight: Weight
    casimir: Fraction
    hom_dim: int
    multiplicity: int


def spectrum_below(
    pair: SymmetricPair,
    cutoff,
    branching_cap: int = BRANCHING_DIM_CAP,
) -> list[SpectrumLine]:
    """All eigenvalues of D^2 up to ``cutoff``: Casimir scalars c of
    G-irreducibles whose restriction meets the spin representation, shifted
    by n/16.  Complete below the cutoff; raises CAP_EXCEEDED if a candidate
    under the cutoff is too large to branch."""
    _require_spin(pair)
    cutoff = Fraction(cutoff)
    g = pair.g
    n16 = Fraction(pair.dim, 16)
    c_max = cutoff - n16
    if c_max < 0:
        return []

    comps = spin_decomposition(pair)
    betas = [c.beta for c in comps]
    delta = g.weyl_vector
    bound = g.killing(delta, delta) + c_max
    fundamentals = g.fundamental_weights

    candidates: list[Weight] = []

    def scan(idx: int, lam: Weight) -> None:
        if idx == len(fundamentals):
            candidates.append(lam)
            return
        current = lam
        while g.killing(current + delta, current + delta) <= bound:
            scan(idx + 1, current)
            current = current + fundamentals[idx]

    scan(0, Weight.zero(g.ambient_dim))

    gsys = _g_system(g)
    lines = []
    for lam in candidates:
        c = casimir_eigenvalue(g, lam)
        dim = weyl_dimension(g, lam)
        if dim > branching_cap:
            raise CapExceededError(
                f"candidate {lam!r} below the cutoff has dimension {dim} > {branching_cap}"
            )
        decomp = decompose_into_k_irreps(pair, _character(gsys, lam))
        hom = sum(decomp.get(beta, 0) for beta in betas)
        if hom > 0:
            lines.append(
                SpectrumLine(
                    eigenvalue=c + n16,
                    g_highest_weight=lam,
                    casimir=c,
                    hom_dim=hom,
                    multiplicity=dim * hom,
                )
            )
    lines.sort(key=lambda l: (l.eigenvalue, l.g_highest_weight.coords))
    return lines
