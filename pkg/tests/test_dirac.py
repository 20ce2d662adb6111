"""Spin decomposition, eigenvalue formulas, Freudenthal characters,
branching, and the spectrum scan."""

import random
from collections import Counter
from fractions import Fraction

import pytest

from spinsym import (
    CapExceededError,
    NotSpinError,
    SimpleType,
    Weight,
    branching_multiplicity,
    build_pair,
    build_root_system,
    casimir_eigenvalue,
    catalog_entry,
    check_lemma1,
    decompose_into_k_irreps,
    first_eigenvalue_squared,
    first_eigenvalue_squared_remark,
    freudenthal_multiplicities,
    select_w0,
    spectrum_below,
    spin_decomposition,
    spin_weights_bruteforce,
    weyl_dimension,
)
from spinsym.dirac import dominance_maximal, minimal_norm_components

A1 = build_root_system(SimpleType("A", 1))
ALPHA = A1.positive_roots[0]


@pytest.fixture(scope="module")
def s2():
    return catalog_entry("sphere-even(1)").build()


@pytest.fixture(scope="module")
def s4():
    return catalog_entry("sphere-even(2)").build()


def test_spin_decomposition_s2(s2):
    comps = spin_decomposition(s2)
    betas = {c.beta for c in comps}
    assert betas == {Fraction(1, 2) * ALPHA, Fraction(-1, 2) * ALPHA}
    assert all(c.dim == 1 for c in comps)
    assert sum(c.dim for c in comps) == 2


def test_spin_decomposition_s4(s4):
    comps = spin_decomposition(s4)
    half = Fraction(1, 2)
    assert [c.beta for c in comps] == [Weight([half, half]), Weight([half, -half])]
    assert [c.dim for c in comps] == [2, 2]
    assert {c.norm2 for c in comps} == {Fraction(1, 12)}


def test_spin_decomposition_requires_spin():
    a2 = build_root_system(SimpleType("A", 2))
    cp2 = build_pair(a2, [Weight([1, -1, 0])])
    with pytest.raises(NotSpinError):
        spin_decomposition(cp2)
    with pytest.raises(NotSpinError):
        first_eigenvalue_squared(cp2)
    with pytest.raises(NotSpinError):
        spectrum_below(cp2, 3)


def test_select_w0(s2, s4):
    half = Fraction(1, 2)
    w0 = select_w0(spin_decomposition(s4))
    assert w0.beta == Weight([half, half])
    w0_s2 = select_w0(spin_decomposition(s2))
    assert w0_s2.beta == half * ALPHA
    single = [spin_decomposition(s4)[0]]
    assert select_w0(single) is single[0]


def test_select_w0_empty():
    with pytest.raises(ValueError):
        select_w0([])


def test_weyl_dimension_for_subsystem(s4):
    # dimension formula against an explicit positive subsystem
    half = Fraction(1, 2)
    dim = weyl_dimension(
        s4.g, Weight([half, half]), positives=s4.k_positives, delta=s4.delta_k
    )
    assert dim == 2


def test_select_w0_dominance_reasoning(s4):
    comps = spin_decomposition(s4)
    minima = minimal_norm_components(comps)
    assert len(minima) == 2  # equal norms on the sphere
    maximal = dominance_maximal(minima)
    assert len(maximal) == 1  # difference is the simple root e2


def test_check_lemma1(s2, s4):
    for pair in (s2, s4):
        w0 = select_w0(spin_decomposition(pair))
        assert check_lemma1(pair, w0)
    w0 = select_w0(spin_decomposition(s4))
    assert w0.beta_g() == Weight([Fraction(1, 2), Fraction(1, 2)])
    w0_s2 = select_w0(spin_decomposition(s2))
    assert w0_s2.beta_g() == A1.weyl_vector


def test_first_eigenvalue_spheres(s2, s4):
    assert first_eigenvalue_squared(s2) == Fraction(1, 2)
    assert first_eigenvalue_squared(s4) == Fraction(2, 3)
    s6 = catalog_entry("sphere-even(3)").build()
    assert first_eigenvalue_squared(s6) == Fraction(9, 10)


def test_remark_formula_matches(s2, s4):
    for pair in (s2, s4, catalog_entry("CI(3)").build(), catalog_entry("GI").build()):
        assert first_eigenvalue_squared(pair) == first_eigenvalue_squared_remark(pair)


def test_casimir_eigenvalue():
    assert casimir_eigenvalue(A1, Weight.zero(2)) == 0
    assert casimir_eigenvalue(A1, Fraction(1, 2) * ALPHA) == Fraction(3, 8)
    for t in (SimpleType("A", 4), SimpleType("B", 3), SimpleType("C", 4),
              SimpleType("D", 4), SimpleType("G", 2), SimpleType("F", 4),
              SimpleType("E", 6)):
        rs = build_root_system(t)
        assert casimir_eigenvalue(rs, rs.highest_root) == 1


def test_spin_weights_bruteforce(s2, s4):
    assert dict(spin_weights_bruteforce(s2)) == {
        Fraction(1, 2) * ALPHA: 1,
        Fraction(-1, 2) * ALPHA: 1,
    }
    half = Fraction(1, 2)
    weights = spin_weights_bruteforce(s4)
    assert dict(weights) == {
        Weight([half, half]): 1,
        Weight([half, -half]): 1,
        Weight([-half, half]): 1,
        Weight([-half, -half]): 1,
    }
    s8 = catalog_entry("sphere-even(4)").build()
    assert sum(spin_weights_bruteforce(s8).values()) == 2 ** (s8.dim // 2)


def test_spin_weights_cap():
    big = catalog_entry("EVIII").build()
    with pytest.raises(CapExceededError):
        spin_weights_bruteforce(big)


def test_freudenthal_small():
    assert freudenthal_multiplicities(A1, Weight.zero(2)) == {Weight.zero(2): 1}
    adj = freudenthal_multiplicities(A1, ALPHA)
    assert adj == {ALPHA: 1, Weight.zero(2): 1, -ALPHA: 1}
    b2 = build_root_system(SimpleType("B", 2))
    adj2 = freudenthal_multiplicities(b2, Weight([1, 1]))
    assert adj2[Weight.zero(2)] == 2
    assert sum(adj2.values()) == 10
    assert all(adj2[w] == adj2[-w] for w in adj2)


def test_freudenthal_sum_rule_random():
    rng = random.Random(19)
    for t in (SimpleType("A", 2), SimpleType("B", 2), SimpleType("G", 2), SimpleType("C", 3)):
        rs = build_root_system(t)
        for _ in range(3):
            coeffs = [rng.randint(0, 2) for _ in range(t.rank)]
            lam = Weight.zero(rs.ambient_dim)
            for c, w in zip(coeffs, rs.fundamental_weights):
                lam = lam + c * w
            mults = freudenthal_multiplicities(rs, lam)
            assert sum(mults.values()) == weyl_dimension(rs, lam)


def test_freudenthal_cap():
    e8 = build_root_system(SimpleType("E", 8))
    with pytest.raises(CapExceededError):
        freudenthal_multiplicities(e8, e8.fundamental_weights[3])  # huge rep


def test_decompose_oracle_matches_closed_form(s2, s4):
    for pair in (s2, s4, catalog_entry("sphere-even(3)").build(),
                 catalog_entry("AIII(2,2)").build(), catalog_entry("GI").build()):
        oracle = decompose_into_k_irreps(pair, spin_weights_bruteforce(pair))
        assert oracle == {c.beta: 1 for c in spin_decomposition(pair)}


def test_decompose_single_orbit(s4):
    # a single K-irreducible character decomposes to itself
    mu = Weight([Fraction(1, 2), Fraction(1, 2)])
    from spinsym.dirac import _character, _k_system

    char = _character(_k_system(s4), mu)
    assert decompose_into_k_irreps(s4, char) == {mu: 1}


def test_decompose_inconsistent_input(s4):
    from spinsym import InconsistentCharacterError

    bad = Counter({Weight([Fraction(1, 2), Fraction(1, 2)]): 1, Weight([5, 7]): 1})
    with pytest.raises(InconsistentCharacterError):
        decompose_into_k_irreps(s4, bad)


def test_branching_examples(s2, s4):
    half_alpha = Fraction(1, 2) * ALPHA
    assert branching_multiplicity(s2, Weight.zero(2), Weight.zero(2)) == 1
    assert branching_multiplicity(s2, half_alpha, half_alpha) == 1
    assert branching_multiplicity(s2, half_alpha, Fraction(-1, 2) * ALPHA) == 1
    w0 = select_w0(spin_decomposition(s4))
    assert branching_multiplicity(s4, w0.beta_g(), w0.beta) >= 1


def test_branching_sum_rule(s4):
    # restriction preserves total dimension
    from spinsym.dirac import _character, _g_system, _k_system, _sys_dimension

    lam = Weight([1, 0])
    decomp = decompose_into_k_irreps(s4, _character(_g_system(s4.g), lam))
    ksys = _k_system(s4)
    total = sum(m * _sys_dimension(ksys, mu) for mu, m in decomp.items())
    assert total == weyl_dimension(s4.g, lam) == 5


def test_branching_cap(s4):
    with pytest.raises(CapExceededError):
        branching_multiplicity(s4, Weight([20, 0]), Weight.zero(2), cap=10)


def test_spectrum_s2(s2):
    lines = spectrum_below(s2, 3)
    assert [(l.eigenvalue, l.hom_dim, l.multiplicity) for l in lines] == [
        (Fraction(1, 2), 2, 4),
        (Fraction(2), 2, 8),
    ]
    assert lines[0].casimir == Fraction(3, 8)
    assert all(l.eigenvalue == l.casimir + Fraction(s2.dim, 16) for l in lines)


def test_spectrum_empty_below_floor(s2, s4):
    for pair in (s2, s4):
        assert spectrum_below(pair, Fraction(pair.dim, 8)) == []


def test_spectrum_minimum_is_closed_formula(s4):
    for pair in (s4, catalog_entry("AIII(1,3)").build(), catalog_entry("CII(1,2)").build()):
        eq1 = first_eigenvalue_squared(pair)
        lines = spectrum_below(pair, eq1 + 1)
        assert lines, pair
        assert lines[0].eigenvalue == eq1
        comps = spin_decomposition(pair)
        n16 = Fraction(pair.dim, 16)
        assert lines[0].casimir == 2 * min(c.norm2 for c in comps) + n16


def test_spectrum_cross_presentations():
    # S^4 realized in B2 and in C2 must give identical spectra
    b_lines = spectrum_below(catalog_entry("sphere-even(2)").build(), 2)
    c_lines = spectrum_below(catalog_entry("CII(1,1)").build(), 2)
    assert [(l.eigenvalue, l.hom_dim, l.multiplicity) for l in b_lines] == [
        (l.eigenvalue, l.hom_dim, l.multiplicity) for l in c_lines
    ]


@pytest.mark.parametrize(
    "one,other",
    [
        ("AIII(2,2)", "BDI(2,4)"),  # Gr_2(C^4) is the quadric Q_4
        ("DIII(3)", "AIII(1,3)"),  # both are CP^3
        ("DIII(4)", "BDI(2,6)"),  # SO(8)/U(4) is Q_6 through triality
    ],
)
def test_spectrum_accidental_isomorphisms(one, other):
    # isomorphic spaces reached through different root data must agree on
    # the whole low spectrum, not just the first eigenvalue
    pa = catalog_entry(one).build()
    pb = catalog_entry(other).build()
    assert pa.dim == pb.dim
    ea, eb = first_eigenvalue_squared(pa), first_eigenvalue_squared(pb)
    assert ea == eb
    la = [(l.eigenvalue, l.hom_dim, l.multiplicity) for l in spectrum_below(pa, ea + 1)]
    lb = [(l.eigenvalue, l.hom_dim, l.multiplicity) for l in spectrum_below(pb, eb + 1)]
    assert la == lb


def test_casimir_identity_at_minimizer():
    # casimir(beta_G_w0) = 2 |beta_w0|^2 + n/16, exactly, on every space
    from spinsym import catalog

    for entry in catalog():
        pair = entry.build()
        w0 = select_w0(spin_decomposition(pair))
        val = casimir_eigenvalue(pair.g, w0.beta_g())
        assert val == 2 * w0.norm2 + Fraction(pair.dim, 16), entry.name


def test_freudenthal_orbit_invariance():
    from spinsym import full_orbit

    b2 = build_root_system(SimpleType("B", 2))
    lam = Weight([2, 1])
    mults = freudenthal_multiplicities(b2, lam)
    for w, m in mults.items():
        assert all(mults[u] == m for u in full_orbit(b2, w))


def test_dimension_mismatch_errors():
    from spinsym import DimensionMismatchError, apply, identity_element, killing_inner_product, reflect
    from spinsym import NotARootError

    b2 = build_root_system(SimpleType("B", 2))
    with pytest.raises(DimensionMismatchError):
        killing_inner_product(b2, Weight([1, 0, 0]), Weight([1, 0, 0]))
    with pytest.raises(DimensionMismatchError):
        apply(identity_element(2), Weight([1, 0, 0]))
    with pytest.raises(NotARootError):
        reflect(b2, Weight([1, 0]), Weight([3, 3]))


def test_friedrich_lower_bound_catalog():
    # universal bound lambda_1^2 >= n Scal / (4(n-1)) = n^2/(8(n-1)) for any
    # compact spin manifold, with equality exactly on round spheres
    from spinsym import catalog

    for entry in catalog():
        pair = entry.build()
        n = pair.dim
        bound = Fraction(n * n, 8 * (n - 1))
        eq1 = first_eigenvalue_squared(pair)
        assert eq1 >= bound, entry.name
        is_sphere = entry.name.startswith("sphere-even(") or entry.name in (
            "AIII(1,1)",
            "CII(1,1)",
        )
        assert (eq1 == bound) == is_sphere, entry.name


def test_kirchberg_bound_on_kaehler_entries():
    # Kaehler (Hermitian) spaces obey the complex-dimension bounds
    # (m+1)/(4m) Scal for odd m and m/(4(m-1)) Scal for even m, the odd
    # equality case being exactly the odd projective spaces
    from spinsym import catalog
    from spinsym.weyl import identify_components

    projective = {"sphere-even(1)", "AIII(1,1)", "AIII(1,3)", "AIII(1,5)", "AIII(1,7)", "DIII(3)"}
    seen_hermitian = set()
    for entry in catalog():
        pair = entry.build()
        semisimple_rank = sum(
            t.rank for t in identify_components(pair.k_simple_roots, pair.k_positives)
        )
        if semisimple_rank == pair.g.type.rank:
            continue  # no central torus in K: not Hermitian
        seen_hermitian.add(entry.name)
        m = pair.dim // 2
        if m % 2 == 1:
            bound = Fraction(m + 1, 4 * m) * pair.scal
        else:
            bound = Fraction(m, 4 * (m - 1)) * pair.scal
        val = first_eigenvalue_squared(pair)
        assert val >= bound, entry.name
        assert (val == bound) == (entry.name in projective), entry.name
    assert projective <= seen_hermitian


def test_quaternionic_bound_on_wolf_entries():
    # quaternionic-Kaehler spaces obey (m+3)/(m+2) Scal/4 in quaternionic
    # dimension m, with equality exactly on quaternionic projective space
    wolf = {
        "CII(1,1)": 1, "CII(1,2)": 2, "CII(1,3)": 3,
        "AIII(2,2)": 2, "AIII(2,4)": 4, "AIII(2,6)": 6,
        "BDI(4,4)": 4, "BDI(4,6)": 6, "BDI(4,8)": 8,
        "GI": 2, "EII": 10, "EVI": 16, "EIX": 28,
    }
    for name, m in wolf.items():
        pair = catalog_entry(name).build()
        assert pair.dim == 4 * m, name
        bound = Fraction(m + 3, m + 2) * pair.scal / 4
        val = first_eigenvalue_squared(pair)
        assert val >= bound, name
        assert (val == bound) == name.startswith("CII(1,"), name


def test_components_sorted():
    for name in ("EIII", "BDI(4,6)", "CI(5)"):
        from spinsym import catalog_entry as ce

        comps = spin_decomposition(ce(name).build())
        keys = [(c.norm2, tuple(-x for x in c.beta.coords)) for c in comps]
        assert keys == sorted(keys)


def test_component_invariants_catalog_sample():
    for name in ("sphere-even(5)", "DIII(4)", "BDI(2,6)", "EII"):
        pair = catalog_entry(name).build()
        comps = spin_decomposition(pair)
        n16 = Fraction(pair.dim, 16)
        dg = pair.g.killing(pair.delta_g, pair.delta_g)
        for c in comps:
            shifted = c.beta + pair.delta_k
            assert pair.g.killing(shifted, shifted) == dg
            assert (
                pair.g.killing(shifted, shifted) - pair.g.killing(pair.delta_k, pair.delta_k)
                == n16
            )
        assert sum(c.dim for c in comps) == 2 ** (pair.dim // 2)
