"""Exact Weyl group machinery.

Elements are stored by their rational action matrix on the ambient space
(equality means equality of actions; reduced words are bookkeeping only).
The module also enumerates the coset transversal

    W = { w in W_G : w . Phi_G+  contains  Phi_K+ }

for an equal-rank subsystem, by breadth-first search through the weak
order: whenever ``w`` lies in W and ``l(w s_i) = l(w) - 1``, the inversion
set of ``(w s_i)^-1`` is a subset of the one of ``w^-1``, so ``w s_i``
lies in W as well.  W is therefore a lower set and BFS from the identity
is complete.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import (
    CapExceededError,
    DimensionMismatchError,
    InvalidSubsystemError,
    NotARootError,
)
from .rootsystem import (
    RootSystem,
    SimpleType,
    Weight,
    coroot_pairing,
    simple_system,
    weyl_group_order,
)


class WeylElement:
    """A Weyl group element given by its exact linear action."""

    __slots__ = ("matrix", "word", "length")

    def __init__(self, matrix, word=(), length: Optional[int] = None):
        self.matrix = tuple(tuple(Fraction(x) for x in row) for row in matrix)
        self.word = tuple(word)
        self.length = len(self.word) if length is None else length

    def apply(self, lam: Weight) -> Weight:
        if len(lam) != len(self.matrix):
            raise DimensionMismatchError(
                f"element acts on dimension {len(self.matrix)}, got {len(lam)}"
            )
        return Weight(
            sum((row[j] * lam.coords[j] for j in range(len(row))), Fraction(0))
            for row in self.matrix
        )

    def inverse(self) -> "WeylElement":
        # The action is orthogonal for the (scaled-dot) invariant form,
        # so the inverse matrix is the transpose.
        n = len(self.matrix)
        return WeylElement(
            tuple(tuple(self.matrix[j][i] for j in range(n)) for i in range(n)),
            tuple(reversed(self.word)),
            self.length,
        )

    def is_identity(self) -> bool:
        return all(
            self.matrix[i][j] == (1 if i == j else 0)
            for i in range(len(self.matrix))
            for j in range(len(self.matrix))
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, WeylElement) and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def __repr__(self) -> str:
        return f"WeylElement(word={'.'.join(map(str, self.word)) or 'e'})"


def identity_element(dim: int) -> WeylElement:
    return WeylElement(
        tuple(tuple(Fraction(int(i == j)) for j in range(dim)) for i in range(dim)),
        (),
        0,
    )


def apply(w: WeylElement, lam: Weight) -> Weight:
    return w.apply(lam)


def reflect(rs: RootSystem, lam: Weight, alpha: Weight) -> Weight:
    """Reflection of ``lam`` across the hyperplane orthogonal to the root
    ``alpha``: lam - <lam, alpha^vee> alpha."""
    c = coroot_pairing(rs, lam, alpha)  # raises NotARootError / dim errors
    if c == 0:
        return lam
    return lam - c * alpha


def reflection_element(rs: RootSystem, alpha: Weight) -> WeylElement:
    if alpha not in rs.roots:
        raise NotARootError(f"{alpha!r} is not a root of {rs.type}")
    dim = rs.ambient_dim
    basis = [Weight([int(i == j) for i in range(dim)]) for j in range(dim)]
    norm = alpha.dot(alpha)
    cols = [e - (2 * e.dot(alpha) / norm) * alpha for e in basis]
    matrix = tuple(tuple(cols[j].coords[i] for j in range(dim)) for i in range(dim))
    word = ()
    for i, a in enumerate(rs.simple_roots):
        if a == alpha:
            word = (i,)
            break
    el = WeylElement(matrix, word, None)
    el.length = inversion_length(rs, el)
    return el


def _matmul(a, b):
    n = len(a)
    return tuple(
        tuple(sum((a[i][k] * b[k][j] for k in range(n)), Fraction(0)) for j in range(n))
        for i in range(n)
    )


def compose(rs: RootSystem, first: WeylElement, second: WeylElement) -> WeylElement:
    """first o second (apply ``second``, then ``first``).  The concatenated
    word need not be reduced; the length is recomputed from inversions."""
    el = WeylElement(_matmul(first.matrix, second.matrix), first.word + second.word, None)
    el.length = inversion_length(rs, el)
    return el


def inversion_length(rs: RootSystem, w: WeylElement) -> int:
    """Number of positive roots sent to negative roots by ``w``."""
    pos = set(rs.positive_roots)
    return sum(1 for a in rs.positive_roots if w.apply(a) not in pos)


def full_orbit(rs: RootSystem, lam: Weight, cap: int = 100000) -> frozenset[Weight]:
    """Full W-orbit of a weight via BFS with simple reflections."""
    seen = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for v in frontier:
            for a in rs.simple_roots:
                u = reflect(rs, v, a)
                if u not in seen:
                    if len(seen) >= cap:
                        raise CapExceededError(f"orbit exceeds cap {cap}")
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return frozenset(seen)


def dominant_representative(
    rs: RootSystem, lam: Weight, positives: Optional[Sequence[Weight]] = None
) -> tuple[Weight, WeylElement]:
    """The dominant element of the orbit of ``lam`` together with one
    element mapping ``lam`` to it.  Fixpoint on dominant input."""
    simples = rs.simple_roots if positives is None else simple_system(positives)
    w = identity_element(rs.ambient_dim)
    v = lam
    moved = True
    while moved:
        moved = False
        for a in simples:
            if coroot_pairing(rs, v, a) < 0:
                v = reflect(rs, v, a)
                w = compose(rs, reflection_element(rs, a), w)
                moved = True
                break
    return v, w


def full_weyl_group(rs: RootSystem, cap: int = 1000000) -> list[WeylElement]:
    """All elements of W_G by BFS (deduplicated through the regular orbit
    of the Weyl vector).  Intended for brute-force cross-checks."""
    if rs.weyl_order > cap:
        raise CapExceededError(f"|W({rs.type})| = {rs.weyl_order} exceeds cap {cap}")
    gens = [reflection_element(rs, a) for a in rs.simple_roots]
    delta = rs.weyl_vector
    ident = identity_element(rs.ambient_dim)
    seen = {delta.coords: ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for w in frontier:
            for i, s in enumerate(gens):
                # Right multiplication; BFS level equals length, since the
                # first discovery of an element uses a reduced word.
                el = WeylElement(_matmul(w.matrix, s.matrix), w.word + (i,), w.length + 1)
                key = el.apply(delta).coords
                if key not in seen:
                    seen[key] = el
                    nxt.append(el)
        frontier = nxt
    elements = list(seen.values())
    if len(elements) != rs.weyl_order:
        raise AssertionError(f"enumerated {len(elements)} elements, expected {rs.weyl_order}")
    return elements


# -- subsystem bookkeeping --------------------------------------------------


def _component_split(k_simples: Sequence[Weight]) -> list[list[int]]:
    n = len(k_simples)
    seen = [False] * n
    comps = []
    for i in range(n):
        if seen[i]:
            continue
        stack, comp = [i], []
        seen[i] = True
        while stack:
            a = stack.pop()
            comp.append(a)
            for b in range(n):
                if not seen[b] and k_simples[a].dot(k_simples[b]) != 0:
                    seen[b] = True
                    stack.append(b)
        comps.append(sorted(comp))
    return comps


def identify_components(
    k_simples: Sequence[Weight], k_positives: Sequence[Weight]
) -> list[SimpleType]:
    """Classify the irreducible components of a closed subsystem given by
    its simple system, by rank, root count and length data."""
    if not k_simples:
        return []
    gram = [[a.dot(b) for b in k_simples] for a in k_simples]
    from .rootsystem import _invert_fraction_matrix, _linear_combination

    ginv = _invert_fraction_matrix(gram)
    duals = [_linear_combination(ginv[i], list(k_simples)) for i in range(len(k_simples))]

    comps = _component_split(k_simples)
    index_of = {}
    for ci, comp in enumerate(comps):
        for i in comp:
            index_of[i] = ci
    per_comp: list[list[Weight]] = [[] for _ in comps]
    for p in k_positives:
        owners = {index_of[i] for i, d in enumerate(duals) if p.dot(d) != 0}
        if len(owners) != 1:
            raise InvalidSubsystemError("positive root spans several components")
        per_comp[owners.pop()].append(p)

    types = []
    for comp, roots in zip(comps, per_comp):
        rank = len(comp)
        count = len(roots)
        norms = {p.dot(p) for p in roots}
        if len(norms) == 1:
            if count == rank * (rank + 1) // 2:
                fam = "A"
            elif count == rank * (rank - 1):
                fam = "D"
            elif (rank, count) in ((6, 36), (7, 63), (8, 120)):
                fam = "E"
            else:
                raise InvalidSubsystemError(
                    f"unrecognized simply-laced component: rank {rank}, {count} positive roots"
                )
        elif rank == 2 and count == 6:
            fam = "G"
        elif rank == 4 and count == 24:
            fam = "F"
        elif count == rank * rank:
            # B and C have equal Weyl group orders; the long-root count
            # only matters for display (rank 2 is genuinely ambiguous)
            n_long = sum(1 for p in roots if p.dot(p) == max(norms))
            fam = "B" if rank == 2 or n_long == rank * (rank - 1) else "C"
        else:
            raise InvalidSubsystemError(
                f"unrecognized component: rank {rank}, {count} positive roots"
            )
        types.append(SimpleType(fam, rank))
    return types


def subsystem_weyl_order(k_simples: Sequence[Weight], k_positives: Sequence[Weight]) -> int:
    order = 1
    for t in identify_components(k_simples, k_positives):
        order *= weyl_group_order(t)
    return order


# -- the coset transversal ---------------------------------------------------


@dataclass(frozen=True)
class KostantSet:
    """The transversal {w : w.Phi_G+ contains Phi_K+}, of size |W_G|/|W_K|."""

    elements: tuple[WeylElement, ...]
    k_simples: tuple[Weight, ...]
    w_g_order: int
    w_k_order: int

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def kostant_membership(rs: RootSystem, w: WeylElement, k_simples: Sequence[Weight]) -> bool:
    """w.Phi_G+ contains Phi_K+ iff <w.delta_G, a> > 0 for each K-simple a
    (delta_G is regular, and positivity of a root is positivity against
    the dominant regular vector)."""
    image = w.apply(rs.weyl_vector)
    return all(image.dot(a) > 0 for a in k_simples)


def enumerate_kostant_set(rs: RootSystem, k_positives: Sequence[Weight]) -> KostantSet:
    pos_set = set(rs.positive_roots)
    for a in k_positives:
        if a not in pos_set:
            raise InvalidSubsystemError(f"{a!r} is not a positive root of {rs.type}")
    k_simples = simple_system(k_positives)
    closure = set(k_simples)
    grew = True
    while grew:
        grew = False
        for beta in list(closure):
            for alpha in k_simples:
                gamma = beta + alpha
                if gamma in rs.roots and gamma not in closure:
                    closure.add(gamma)
                    grew = True
    if closure != set(k_positives):
        raise InvalidSubsystemError(
            "k_positives is not the full positive system generated by its simple roots"
        )
    w_k_order = subsystem_weyl_order(k_simples, k_positives)
    expected = rs.weyl_order // w_k_order

    gens = [reflection_element(rs, a) for a in rs.simple_roots]
    delta = rs.weyl_vector
    ident = identity_element(rs.ambient_dim)
    found = {delta.coords: ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for w in frontier:
            for i, s in enumerate(gens):
                if not _positive_vector_image(w, rs.simple_roots[i], pos_set):
                    continue  # descent: already visited at a lower level
                el = WeylElement(_matmul(w.matrix, s.matrix), w.word + (i,), w.length + 1)
                image = el.apply(delta)
                if image.coords in found:
                    continue
                if all(image.dot(a) > 0 for a in k_simples):
                    found[image.coords] = el
                    nxt.append(el)
        frontier = nxt
    elements = sorted(found.values(), key=lambda e: (e.length, e.word))
    if len(elements) != expected:
        raise AssertionError(
            f"Kostant set has {len(elements)} elements, expected {rs.weyl_order}/{w_k_order}"
        )
    return KostantSet(tuple(elements), tuple(k_simples), rs.weyl_order, w_k_order)


def _positive_vector_image(w: WeylElement, root: Weight, pos_set) -> bool:
    return w.apply(root) in pos_set
