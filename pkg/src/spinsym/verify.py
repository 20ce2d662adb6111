"""The per-pair verification battery behind ``spinsym verify``.

Each check is an exact identity; a failing check reports both sides.
Checks that only make sense under a cap (the exhaustive spinor-weight
oracle, branching of the minimizing representation) report ``skip``
beyond it rather than silently passing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .dirac import (
    BRANCHING_DIM_CAP,
    branching_multiplicity,
    check_lemma1,
    dominance_maximal,
    first_eigenvalue_squared,
    first_eigenvalue_squared_remark,
    kostant_set,
    minimal_norm_components,
    select_w0,
    spectrum_below,
    spin_decomposition,
    spin_weights_bruteforce,
    decompose_into_k_irreps,
)
from .errors import CapExceededError, SpinsymError
from .rootsystem import weyl_dimension
from .symmspace import SymmetricPair, strange_formula_check

ORACLE_LIMIT = 16


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # "pass" | "fail" | "skip"
    detail: str

    @property
    def ok(self) -> bool:
        return self.status != "fail"


def _result(name: str, ok: bool, detail: str) -> CheckResult:
    return CheckResult(name, "pass" if ok else "fail", detail)


def run_checks(
    pair: SymmetricPair,
    spectrum_cutoff: Optional[Fraction] = None,
    oracle_limit: int = ORACLE_LIMIT,
    branching_cap: int = BRANCHING_DIM_CAP,
) -> list[CheckResult]:
    out: list[CheckResult] = []
    g = pair.g

    lhs, rhs, ok = strange_formula_check(pair)
    out.append(_result("strange-formula", ok, f"|dG|^2-|dK|^2 = {lhs}, n/16 = {rhs}"))

    ks = kostant_set(pair)
    out.append(
        _result(
            "kostant-cardinality",
            len(ks) * ks.w_k_order == ks.w_g_order,
            f"|W| = {len(ks)}, |W_K| = {ks.w_k_order}, |W_G| = {ks.w_g_order}",
        )
    )

    comps = spin_decomposition(pair)
    total = sum(c.dim for c in comps)
    expected = 2 ** (pair.dim // 2)
    out.append(
        _result("spin-dimension-sum", total == expected, f"sum dims = {total}, 2^(n/2) = {expected}")
    )

    n16 = Fraction(pair.dim, 16)
    bad = []
    for c in comps:
        val = g.killing(c.beta + pair.delta_k, c.beta + pair.delta_k) - g.killing(
            pair.delta_k, pair.delta_k
        )
        if val != n16:
            bad.append((c.beta, val))
    out.append(
        _result(
            "component-casimir-n16",
            not bad,
            "each |beta+dK|^2-|dK|^2 = n/16" if not bad else f"failures: {bad[:3]}",
        )
    )

    eq1 = first_eigenvalue_squared(pair)
    eq2 = first_eigenvalue_squared_remark(pair)
    out.append(_result("closed-formula-identity", eq1 == eq2, f"min form = {eq1}, max form = {eq2}"))

    minima = minimal_norm_components(comps)
    maximal = dominance_maximal(minima)
    lemma1_bad = [c.beta for c in maximal if not check_lemma1(pair, c)]
    note = f"{len(minima)} minima, {len(maximal)} dominance-maximal"
    if len(maximal) > 1:
        note += " (incomparable minima present)"
    out.append(
        _result(
            "lemma1-dominance",
            not lemma1_bad,
            note if not lemma1_bad else f"non-dominant beta_G for beta in {lemma1_bad}",
        )
    )

    if len(pair.noncompact_positives) <= oracle_limit:
        oracle = decompose_into_k_irreps(pair, spin_weights_bruteforce(pair))
        expected_multiset = {c.beta: 1 for c in comps}
        out.append(
            _result(
                "spinor-oracle-decomposition",
                oracle == expected_multiset,
                f"{len(oracle)} components from {2 ** len(pair.noncompact_positives)} spinor weights",
            )
        )
    else:
        out.append(
            CheckResult(
                "spinor-oracle-decomposition",
                "skip",
                f"|Phi_n+| = {len(pair.noncompact_positives)} > {oracle_limit}",
            )
        )

    w0 = select_w0(comps)
    beta_g = w0.beta_g()
    try:
        dim0 = weyl_dimension(g, beta_g)
    except SpinsymError as exc:
        dim0 = None
        out.append(_result("lemma2-branching", False, f"beta_G invalid: {exc}"))
    if dim0 is not None:
        if dim0 <= branching_cap:
            mult = branching_multiplicity(pair, beta_g, w0.beta, cap=branching_cap)
            out.append(
                _result(
                    "lemma2-branching",
                    mult >= 1,
                    f"m(V({dim0})|K, beta_w0) = {mult}",
                )
            )
        else:
            out.append(
                CheckResult("lemma2-branching", "skip", f"dim V(beta_G) = {dim0} > {branching_cap}")
            )

    if spectrum_cutoff is not None:
        cutoff = Fraction(spectrum_cutoff)
        try:
            lines = spectrum_below(pair, cutoff, branching_cap=branching_cap)
        except CapExceededError as exc:
            out.append(_result("spectrum-minimality", False, f"cap exceeded: {exc}"))
        else:
            if cutoff < eq1:
                out.append(
                    _result(
                        "spectrum-minimality",
                        not lines,
                        f"cutoff {cutoff} below lambda_1^2 = {eq1}: {len(lines)} lines",
                    )
                )
            elif not lines:
                out.append(_result("spectrum-minimality", False, "scan returned no eigenvalues"))
            else:
                least = lines[0]
                cas_ok = least.casimir == 2 * min(c.norm2 for c in comps) + n16
                out.append(
                    _result(
                        "spectrum-minimality",
                        least.eigenvalue == eq1 and cas_ok,
                        f"min of scan = {least.eigenvalue}, closed formula = {eq1}, "
                        f"casimir identity {'holds' if cas_ok else 'fails'}",
                    )
                )
    return out
