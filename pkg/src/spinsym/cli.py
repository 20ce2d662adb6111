"""Command-line interface.

Subcommands: ``list``, ``eigenvalue``, ``decompose``, ``spectrum``,
``verify``.  Spaces are addressed by catalog name or by an inline JSON
pair file (``--pair-file``).  All rationals in structured output are
exact integer pairs; decimal renderings in text output are approximate
and marked as such.

Exit codes: 0 success, 1 verification failure, 2 invalid input, 3 cap
exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional

from .dirac import (
    check_lemma1,
    first_eigenvalue_squared,
    first_eigenvalue_squared_remark,
    select_w0,
    spectrum_below,
    spin_decomposition,
)
from .errors import CapExceededError, SpinsymError
from .symmspace import SymmetricPair, catalog, catalog_entry, parse_pair_document, strange_formula_check
from .verify import run_checks


def _rat(x) -> dict:
    f = Fraction(x)
    return {"num": f.numerator, "den": f.denominator}


def _rat_text(x) -> str:
    f = Fraction(x)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator} (~ {float(f):.6g})"


def _frac_text(x) -> str:
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _coords_text(coord_dicts) -> str:
    return ", ".join(_frac_text(Fraction(d["num"], d["den"])) for d in coord_dicts)


def _resolve(args) -> tuple[str, SymmetricPair]:
    if getattr(args, "pair_file", None):
        with open(args.pair_file, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
        return parse_pair_document(doc)
    if not getattr(args, "space", None):
        raise ValueError("give a catalog space name or --pair-file")
    try:
        entry = catalog_entry(args.space)
    except KeyError as exc:
        raise ValueError(str(exc)) from exc
    return entry.name, entry.build()


def _report(name: str, pair: SymmetricPair, spectrum=None) -> dict:
    comps = spin_decomposition(pair)
    w0 = select_w0(comps)
    lhs, rhs, sf_ok = strange_formula_check(pair)
    eig = first_eigenvalue_squared(pair)
    report = {
        "space": name,
        "g": str(pair.g.type),
        "k": pair.k_description(),
        "n": pair.dim,
        "scal": _rat(pair.scal),
        "spin": pair.spin,
        "strange_formula": {"lhs": _rat(lhs), "rhs": _rat(rhs), "ok": sf_ok},
        "components": [
            {
                "word": list(c.w.word),
                "beta": [_rat(x) for x in c.beta.coords],
                "norm2": _rat(c.norm2),
                "dim": c.dim,
            }
            for c in comps
        ],
        "w0": {
            "word": list(w0.w.word),
            "beta": [_rat(x) for x in w0.beta.coords],
            "beta_g": [_rat(x) for x in w0.beta_g().coords],
        },
        "lemma1_ok": check_lemma1(pair, w0),
        "lambda1_squared": _rat(eig),
        "eq2_value": _rat(first_eigenvalue_squared_remark(pair)),
    }
    if spectrum is not None:
        report["spectrum"] = [
            {
                "eigenvalue": _rat(l.eigenvalue),
                "g_highest_weight": [_rat(x) for x in l.g_highest_weight.coords],
                "casimir": _rat(l.casimir),
                "hom_dim": l.hom_dim,
                "multiplicity": l.multiplicity,
            }
            for l in spectrum
        ]
    return report


def _print_report(report: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(report, indent=2))
        return
    print(f"space        : {report['space']}   (G = {report['g']}, K = {report['k']})")
    print(f"n            : {report['n']}    scal = {_dict_rat_text(report['scal'])}")
    print(f"spin         : {report['spin']}")
    sf = report["strange_formula"]
    print(
        "strange form : |dG|^2-|dK|^2 = "
        f"{_dict_rat_text(sf['lhs'])}, n/16 = {_dict_rat_text(sf['rhs'])}  [{'ok' if sf['ok'] else 'FAIL'}]"
    )
    print(f"components   : {len(report['components'])} (spin rep dim 2^(n/2))")
    for c in report["components"]:
        beta = _coords_text(c["beta"])
        norm = _frac_text(Fraction(c["norm2"]["num"], c["norm2"]["den"]))
        print(f"   beta = ({beta})   |beta|^2 = {norm}   dim = {c['dim']}")
    w0 = report["w0"]
    print(f"w0           : word {'.'.join(map(str, w0['word'])) or 'e'}")
    print(f"   beta_w0   = ({_coords_text(w0['beta'])})")
    print(f"   beta_G    = ({_coords_text(w0['beta_g'])})")
    print(f"lemma1       : {'ok' if report['lemma1_ok'] else 'FAIL'}")
    print(f"lambda1^2    : {_dict_rat_text(report['lambda1_squared'])}")
    print(f"eq2 value    : {_dict_rat_text(report['eq2_value'])}")
    if "spectrum" in report:
        print("spectrum of D^2 (eigenvalue, highest weight, hom dim, multiplicity):")
        for line in report["spectrum"]:
            print(
                f"   {_dict_rat_text(line['eigenvalue']):<22} ({_coords_text(line['g_highest_weight'])})"
                f"   hom {line['hom_dim']}   mult {line['multiplicity']}"
            )


def _dict_rat_text(d: dict) -> str:
    return _rat_text(Fraction(d["num"], d["den"]))


def _cmd_list(args) -> int:
    rows = []
    for entry in catalog():
        pair = entry.build()
        rows.append(
            {
                "name": entry.name,
                "g": str(entry.g_type),
                "k": pair.k_description(),
                "n": pair.dim,
                "spin": pair.spin,
                "notes": entry.notes,
            }
        )
    if args.format == "json":
        print(json.dumps(rows, indent=2))
    else:
        width = max(len(r["name"]) for r in rows)
        for r in rows:
            print(
                f"{r['name']:<{width}}  G={r['g']:<3} K={r['k']:<18} n={r['n']:<4} {r['notes']}"
            )
    return 0


def _cmd_eigenvalue(args) -> int:
    name, pair = _resolve(args)
    _print_report(_report(name, pair), args.format)
    return 0


def _cmd_decompose(args) -> int:
    return _cmd_eigenvalue(args)


def _cmd_spectrum(args) -> int:
    name, pair = _resolve(args)
    cutoff = Fraction(args.cutoff)
    lines = spectrum_below(pair, cutoff)
    _print_report(_report(name, pair, spectrum=lines), args.format)
    return 0


def _cmd_verify(args) -> int:
    cutoff = Fraction(args.spectrum_cutoff) if args.spectrum_cutoff else None
    if args.all:
        targets = [(e.name, e.build()) for e in catalog()]
    else:
        targets = [_resolve(args)]
    failed = 0
    results_doc = []
    for name, pair in targets:
        results = run_checks(pair, spectrum_cutoff=cutoff)
        results_doc.append(
            {
                "space": name,
                "checks": [
                    {"name": r.name, "status": r.status, "detail": r.detail} for r in results
                ],
            }
        )
        for r in results:
            if r.status == "fail":
                failed += 1
        if args.format != "json":
            print(f"== {name}")
            for r in results:
                print(f"   [{r.status.upper():<4}] {r.name}: {r.detail}")
    if args.format == "json":
        print(json.dumps(results_doc, indent=2))
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinsym",
        description="Exact Dirac spectra on equal-rank compact spin symmetric spaces",
    )
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p_list = sub.add_parser("list", help="list the catalog of spaces")
    p_list.set_defaults(func=_cmd_list)

    for cmd, fn, help_text in (
        ("eigenvalue", _cmd_eigenvalue, "first eigenvalue of D^2 and the spin decomposition"),
        ("decompose", _cmd_decompose, "spin representation decomposition under K"),
    ):
        p = sub.add_parser(cmd, help=help_text)
        p.add_argument("space", nargs="?", help="catalog name, e.g. sphere-even(2)")
        p.add_argument("--pair-file", help="JSON pair specification file")
        p.set_defaults(func=fn)

    p_spec = sub.add_parser("spectrum", help="all eigenvalues of D^2 up to a cutoff")
    p_spec.add_argument("space", nargs="?")
    p_spec.add_argument("--pair-file")
    p_spec.add_argument("--cutoff", required=True, help="rational cutoff, e.g. 3 or 10/3")
    p_spec.set_defaults(func=_cmd_spectrum)

    p_ver = sub.add_parser("verify", help="run the exact verification battery")
    p_ver.add_argument("space", nargs="?")
    p_ver.add_argument("--pair-file")
    p_ver.add_argument("--all", action="store_true", help="verify every catalog entry")
    p_ver.add_argument("--spectrum-cutoff", help="also scan the spectrum up to this cutoff")
    p_ver.set_defaults(func=_cmd_verify)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapExceededError as exc:
        print(f"error [CAP_EXCEEDED]: {exc}", file=sys.stderr)
        return 3
    except SpinsymError as exc:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return 2
    except (ValueError, TypeError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
