# distutils: language = c++
# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same contracts as ``spinsym._kernels._pure``.

Inputs are tuples of plain integers (callers pre-scale rationals); coroot
pairings of all inputs must be integral, and every division checks
exactness.  Result ordering of ``weyl_orbit`` is unspecified (callers
treat orbits as sets).
"""

from cython.operator cimport dereference as deref, preincrement as inc
from libcpp.map cimport map as cmap
from libcpp.set cimport set as cset
from libcpp.vector cimport vector

ctypedef long long ll
ctypedef vector[ll] vec


cdef inline ll _dot(const vec& a, const vec& b):
    cdef ll s = 0
    cdef size_t i
    for i in range(a.size()):
        s += a[i] * b[i]
    return s


cdef vec _to_vec(obj):
    cdef vec v
    for x in obj:
        v.push_back(<ll> x)
    return v


cdef tuple _to_tuple(const vec& v):
    cdef size_t i
    return tuple([v[i] for i in range(v.size())])


cdef int _conj_inplace(vec& v, const vector[vec]& simples, const vector[ll]& norms) except -1:
    cdef bint moved = True
    cdef size_t i, k
    cdef ll num, c
    while moved:
        moved = False
        for i in range(simples.size()):
            num = 2 * _dot(v, simples[i])
            if num < 0:
                c = num / norms[i]
                if c * norms[i] != num:
                    raise ValueError("non-integral coroot pairing in kernel input")
                for k in range(v.size()):
                    v[k] = v[k] - c * simples[i][k]
                moved = True
    return 0


cdef void _load_system(simples, norms, vector[vec]* S, vector[ll]* N):
    for s in simples:
        S.push_back(_to_vec(s))
    for n in norms:
        N.push_back(<ll> n)


def dominant_conjugate(v, simples, norms):
    """The dominant conjugate of ``v`` under the reflections in ``simples``."""
    cdef vector[vec] S
    cdef vector[ll] N
    _load_system(simples, norms, &S, &N)
    cdef vec w = _to_vec(v)
    _conj_inplace(w, S, N)
    return _to_tuple(w)


def weyl_orbit(v, simples, norms):
    """Full orbit of ``v`` (as a list of tuples, order unspecified)."""
    cdef vector[vec] S
    cdef vector[ll] N
    _load_system(simples, norms, &S, &N)
    cdef vec start = _to_vec(v)
    _conj_inplace(start, S, N)

    cdef cset[vec] seen
    cdef vector[vec] stack
    seen.insert(start)
    stack.push_back(start)
    out = [_to_tuple(start)]

    cdef vec u, t
    cdef size_t i, k
    cdef ll num, c
    while not stack.empty():
        u = stack.back()
        stack.pop_back()
        for i in range(S.size()):
            num = 2 * _dot(u, S[i])
            if num > 0:
                c = num / N[i]
                if c * N[i] != num:
                    raise ValueError("non-integral coroot pairing in kernel input")
                t = u
                for k in range(t.size()):
                    t[k] = t[k] - c * S[i][k]
                if seen.insert(t).second:
                    stack.push_back(t)
                    out.append(_to_tuple(t))
    return out


def freudenthal(lam, positives, delta, simples, norms, dominants):
    """Dominant-weight multiplicities of the irreducible with highest
    weight ``lam``; see the pure twin for the contract."""
    cdef vector[vec] S, P
    cdef vector[ll] N
    _load_system(simples, norms, &S, &N)
    for p in positives:
        P.push_back(_to_vec(p))

    cdef vec lamv = _to_vec(lam)
    cdef vec deltav = _to_vec(delta)
    cdef vec shifted = lamv
    cdef size_t k
    for k in range(shifted.size()):
        shifted[k] = shifted[k] + deltav[k]
    cdef ll top = _dot(shifted, shifted)

    cdef cmap[vec, ll] mult
    cdef cmap[vec, ll].iterator it
    cdef vec v, u, uc
    cdef size_t i
    cdef ll total, denom, q, m
    cdef bint is_lam

    for wt, _h in sorted(dominants, key=lambda t: (t[1], t[0])):
        v = _to_vec(wt)
        is_lam = True
        for k in range(v.size()):
            if v[k] != lamv[k]:
                is_lam = False
                break
        if is_lam:
            mult[v] = 1
            continue
        total = 0
        for i in range(P.size()):
            u = v
            for k in range(u.size()):
                u[k] = u[k] + P[i][k]
            while True:
                uc = u
                _conj_inplace(uc, S, N)
                it = mult.find(uc)
                if it == mult.end():
                    break
                total += deref(it).second * _dot(u, P[i])
                for k in range(u.size()):
                    u[k] = u[k] + P[i][k]
        uc = v
        for k in range(uc.size()):
            uc[k] = uc[k] + deltav[k]
        denom = top - _dot(uc, uc)
        if denom <= 0:
            raise ValueError("dominant list is not strictly below the highest weight")
        q = (2 * total) / denom
        if q * denom != 2 * total or q <= 0:
            raise ValueError("Freudenthal recursion produced a non-multiplicity")
        mult[v] = q

    result = {}
    it = mult.begin()
    while it != mult.end():
        result[_to_tuple(deref(it).first)] = deref(it).second
        inc(it)
    return result


def subset_sums(base, vectors):
    """Multiset {base - sum(A) : A subset of vectors} as a dict."""
    cdef cmap[vec, ll] acc, nxt
    cdef cmap[vec, ll].iterator it
    acc[_to_vec(base)] = 1
    cdef vec vv, key
    cdef size_t k
    for v in vectors:
        vv = _to_vec(v)
        nxt = acc
        it = acc.begin()
        while it != acc.end():
            key = deref(it).first
            for k in range(key.size()):
                key[k] = key[k] - vv[k]
            nxt[key] = nxt[key] + deref(it).second
            inc(it)
        acc.swap(nxt)
    result = {}
    it = acc.begin()
    while it != acc.end():
        result[_to_tuple(deref(it).first)] = deref(it).second
        inc(it)
    return result
