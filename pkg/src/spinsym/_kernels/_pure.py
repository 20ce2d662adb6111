"""Pure-Python kernels.

All functions work on tuples of plain integers: callers pre-scale rational
coordinates by a common denominator.  Coroot pairings 2<v,a>/<a,a> of the
vectors passed in are required to be integers (weight-lattice data); every
division below asserts exactness.
"""


def _dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def dominant_conjugate(v, simples, norms):
    """The dominant W-conjugate of ``v`` (all pairings made nonnegative)."""
    v = tuple(v)
    moved = True
    while moved:
        moved = False
        for a, na in zip(simples, norms):
            num = 2 * _dot(v, a)
            if num < 0:
                c, rem = divmod(num, na)
                if rem:
                    raise ValueError("non-integral coroot pairing in kernel input")
                v = tuple(x - c * y for x, y in zip(v, a))
                moved = True
    return v


def weyl_orbit(v, simples, norms):
    """Full orbit of ``v`` under the group generated by the reflections in
    ``simples``; reflections are only applied downward (positive pairing),
    which reaches every element starting from any one of them."""
    start = dominant_conjugate(v, simples, norms)
    seen = {start}
    stack = [start]
    out = [start]
    while stack:
        u = stack.pop()
        for a, na in zip(simples, norms):
            num = 2 * _dot(u, a)
            if num > 0:
                c, rem = divmod(num, na)
                if rem:
                    raise ValueError("non-integral coroot pairing in kernel input")
                t = tuple(x - c * y for x, y in zip(u, a))
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
                    out.append(t)
    return out


def freudenthal(lam, positives, delta, simples, norms, dominants):
    """Multiplicities of the dominant weights of the irreducible with
    highest weight ``lam``.

    ``dominants`` is the complete list of (weight, height) pairs with
    ``height`` the number of simple roots subtracted from ``lam``; the
    recursion processes them upward in height and looks multiplicities up
    through dominant conjugation.
    """
    lam = tuple(lam)
    shifted_lam = tuple(x + d for x, d in zip(lam, delta))
    top = _dot(shifted_lam, shifted_lam)
    mult = {}
    for v, _h in sorted(dominants, key=lambda t: (t[1], t[0])):
        if v == lam:
            mult[lam] = 1
            continue
        total = 0
        for a in positives:
            u = tuple(x + y for x, y in zip(v, a))
            while True:
                m = mult.get(dominant_conjugate(u, simples, norms))
                if m is None:
                    break
                total += m * _dot(u, a)
                u = tuple(x + y for x, y in zip(u, a))
        shifted = tuple(x + d for x, d in zip(v, delta))
        denom = top - _dot(shifted, shifted)
        if denom <= 0:
            raise ValueError("dominant list is not strictly below the highest weight")
        q, rem = divmod(2 * total, denom)
        if rem or q <= 0:
            raise ValueError("Freudenthal recursion produced a non-multiplicity")
        mult[v] = q
    return mult


def subset_sums(base, vectors):
    """Multiset {base - sum(A) : A subset of vectors} as a dict."""
    acc = {tuple(base): 1}
    for v in vectors:
        nxt = dict(acc)
        for key, m in acc.items():
            shifted = tuple(x - y for x, y in zip(key, v))
            nxt[shifted] = nxt.get(shifted, 0) + m
        acc = nxt
    return acc
