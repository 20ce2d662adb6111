"""Acceptance criteria, one test per criterion.

Every check is an exact rational identity or an integer equality computed
against an independent route (closed-form counts, brute-force group
filtering, exhaustive spinor-weight enumeration, the Friedrich equality
on round spheres).  Each test prints a single PASS line with its own
runtime and asserts the stated budget.
"""

import time
from fractions import Fraction

import pytest

from spinsym import (
    NotSpinError,
    SimpleType,
    Weight,
    build_pair,
    build_root_system,
    casimir_eigenvalue,
    catalog,
    decompose_into_k_irreps,
    first_eigenvalue_squared,
    first_eigenvalue_squared_remark,
    branching_multiplicity,
    check_lemma1,
    full_weyl_group,
    kostant_set,
    spectrum_below,
    spin_decomposition,
    spin_weights_bruteforce,
    strange_formula_check,
    weyl_dimension,
)
from spinsym.dirac import dominance_maximal, minimal_norm_components, select_w0
from spinsym.weyl import kostant_membership

ORACLE_LIMIT = 16
BRANCHING_CAP = 10 ** 6


@pytest.fixture(scope="module")
def pairs():
    """All catalog pairs with their spin decompositions warmed, so each
    criterion times its own verification pass, not shared setup."""
    out = {}
    for entry in catalog():
        pair = entry.build()
        spin_decomposition(pair)
        out[entry.name] = pair
    return out


def _report(name, elapsed, budget, detail=""):
    print(f"ACCEPTANCE {name}: PASS ({elapsed:.2f}s, budget {budget}s) {detail}")
    assert elapsed < budget, f"{name} exceeded its runtime budget"


def test_strange_formula(pairs):
    t0 = time.time()
    for name, pair in pairs.items():
        lhs, rhs, ok = strange_formula_check(pair)
        assert ok, (name, lhs, rhs)
    _report("strange-formula", time.time() - t0, 1, f"[{len(pairs)} spaces]")


def test_even_sphere_eigenvalues(pairs):
    t0 = time.time()
    for m in range(1, 7):
        pair = pairs[f"sphere-even({m})"]
        # independent oracle: the Friedrich-equality closed form on round
        # spheres, n^2/(8(n-1)) with n = 2m
        expected = Fraction((2 * m) ** 2, 8 * (2 * m - 1))
        got = first_eigenvalue_squared(pair)
        assert got == expected, (m, got, expected)
    assert first_eigenvalue_squared(pairs["sphere-even(1)"]) == Fraction(1, 2)
    assert first_eigenvalue_squared(pairs["sphere-even(2)"]) == Fraction(2, 3)
    assert first_eigenvalue_squared(pairs["sphere-even(3)"]) == Fraction(9, 10)
    _report("even-spheres-friedrich", time.time() - t0, 1)


def test_formula_identity(pairs):
    t0 = time.time()
    for name, pair in pairs.items():
        eq1 = first_eigenvalue_squared(pair)
        eq2 = first_eigenvalue_squared_remark(pair)
        assert eq1 == eq2, (name, eq1, eq2)
    _report("min-form-equals-max-form", time.time() - t0, 1, f"[{len(pairs)} spaces]")


def test_kostant_set(pairs):
    t0 = time.time()
    checked_brute = 0
    group_cache = {}
    for name, pair in pairs.items():
        ks = kostant_set(pair)
        assert len(ks) * ks.w_k_order == ks.w_g_order, name
        if pair.g.weyl_order <= 2000:
            key = pair.g.type
            if key not in group_cache:
                group_cache[key] = full_weyl_group(pair.g)
            brute = {
                w.apply(pair.g.weyl_vector).coords
                for w in group_cache[key]
                if kostant_membership(pair.g, w, ks.k_simples)
            }
            bfs = {w.apply(pair.g.weyl_vector).coords for w in ks}
            assert bfs == brute, name
            checked_brute += 1
    _report(
        "kostant-transversal",
        time.time() - t0,
        30,
        f"[{len(pairs)} cardinalities, {checked_brute} brute-forced]",
    )


def test_spinor_weight_oracle(pairs):
    t0 = time.time()
    checked = 0
    for name, pair in pairs.items():
        if len(pair.noncompact_positives) > ORACLE_LIMIT:
            continue
        weights = spin_weights_bruteforce(pair)
        assert sum(weights.values()) == 2 ** len(pair.noncompact_positives)
        oracle = decompose_into_k_irreps(pair, weights)
        comps = spin_decomposition(pair)
        assert oracle == {c.beta: 1 for c in comps}, name
        assert sum(c.dim for c in comps) == 2 ** (pair.dim // 2), name
        checked += 1
    _report("spinor-weight-oracle", time.time() - t0, 300, f"[{checked} spaces]")


def test_lemma1(pairs):
    t0 = time.time()
    for name, pair in pairs.items():
        comps = spin_decomposition(pair)
        for comp in dominance_maximal(minimal_norm_components(comps)):
            assert check_lemma1(pair, comp), (name, comp.beta)
    _report("lemma1-dominance", time.time() - t0, 1, f"[{len(pairs)} spaces]")


def test_lemma2(pairs):
    t0 = time.time()
    checked = 0
    for name, pair in pairs.items():
        w0 = select_w0(spin_decomposition(pair))
        beta_g = w0.beta_g()
        if weyl_dimension(pair.g, beta_g) > BRANCHING_CAP:
            continue
        assert branching_multiplicity(pair, beta_g, w0.beta) >= 1, name
        checked += 1
    _report("lemma2-branching", time.time() - t0, 300, f"[{checked} spaces]")


def test_lemmas34_spectrum(pairs):
    t0 = time.time()
    checked = 0
    for name, pair in pairs.items():
        if pair.g.type.rank > 4:
            continue
        eq1 = first_eigenvalue_squared(pair)
        lines = spectrum_below(pair, eq1 + 1)
        assert lines, name
        least = lines[0]
        assert least.eigenvalue == eq1, (name, least.eigenvalue, eq1)
        min_norm = min(c.norm2 for c in spin_decomposition(pair))
        assert least.casimir == 2 * min_norm + Fraction(pair.dim, 16), name
        checked += 1
    # the hand-checked low spectrum of the 2-sphere
    s2_lines = spectrum_below(pairs["sphere-even(1)"], 3)
    assert [l.eigenvalue for l in s2_lines] == [Fraction(1, 2), Fraction(2)]
    _report("spectrum-minimality", time.time() - t0, 600, f"[{checked} scans]")


def test_casimir_normalization():
    t0 = time.time()
    types = (
        [SimpleType("A", r) for r in range(1, 9)]
        + [SimpleType("B", r) for r in range(2, 9)]
        + [SimpleType("C", r) for r in range(2, 9)]
        + [SimpleType("D", r) for r in range(3, 9)]
        + [SimpleType("E", r) for r in (6, 7, 8)]
        + [SimpleType("F", 4), SimpleType("G", 2)]
    )
    for t in types:
        rs = build_root_system(t)
        assert casimir_eigenvalue(rs, rs.highest_root) == 1, t
    _report("casimir-normalization", time.time() - t0, 1, f"[{len(types)} types]")


def test_spin_detection():
    t0 = time.time()
    a2 = build_root_system(SimpleType("A", 2))
    cp2 = build_pair(a2, [Weight([1, -1, 0])])
    assert not cp2.spin
    with pytest.raises(NotSpinError):
        first_eigenvalue_squared(cp2)
    b2 = build_root_system(SimpleType("B", 2))
    s4 = build_pair(b2, [Weight([1, -1]), Weight([1, 1])])
    assert s4.spin
    a1 = build_root_system(SimpleType("A", 1))
    s2 = build_pair(a1, [])
    assert s2.spin
    _report("spin-detection", time.time() - t0, 1)
