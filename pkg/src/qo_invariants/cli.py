"""Command-line front end.

Input is a JSON document such as::

    {"branch": [["2/7", "4/5"], ["5/14", "1"], ["2", "19/10"]], "strict": false}

Exit status is 0 on success, 1 for invalid input and 2 when a proved identity
fails to hold (which indicates a bug, never bad input).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .branch import (CharacteristicTuple, DerivationSequence, derivation_sequence,
                     suffix_degrees, transverse_euler, validate)
from .comparison import verify_comparison
from .errors import InvalidInputError, TheoremViolation
from .invariants import betti_report, xi_sequence
from .zeta import CycloProduct, horizontal_zeta, vertical_zeta

EXIT_OK, EXIT_INVALID, EXIT_VIOLATION = 0, 1, 2

_FRACTION_RE = re.compile(r"[+-]?\d+(?:/\d+)?")


@dataclass(frozen=True)
class InputDocument:
    branch: Tuple[Tuple[Fraction, Fraction], ...]
    strict: bool = False

    def characteristic_tuple(self) -> CharacteristicTuple:
        return CharacteristicTuple(self.branch)


def parse_fraction(text: Any) -> Fraction:
    if not isinstance(text, str) or not _FRACTION_RE.fullmatch(text):
        raise InvalidInputError("malformed-fraction", f"not a fraction string: {text!r}")
    _, _, den = text.partition("/")
    if den and int(den) == 0:
        raise InvalidInputError("malformed-fraction", f"zero denominator in {text!r}")
    return Fraction(text)


def _no_duplicates(pairs):
    seen = {}
    for key, value in pairs:
        if key in seen:
            raise InvalidInputError("duplicate-key", f"duplicate key {key!r}")
        seen[key] = value
    return seen


def parse_input(text: str) -> InputDocument:
    """Parse an input document.  Validation of the branch itself is left to
    :func:`qo_invariants.branch.validate`."""
    try:
        doc = json.loads(text, object_pairs_hook=_no_duplicates)
    except json.JSONDecodeError as exc:
        raise InvalidInputError(
            "syntax", f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise InvalidInputError("syntax", "top level must be an object")
    unknown = set(doc) - {"branch", "strict"}
    if unknown:
        raise InvalidInputError("unknown-key", f"unknown keys: {sorted(unknown)}")
    if "branch" not in doc:
        raise InvalidInputError("missing-branch", 'missing key "branch"')
    raw = doc["branch"]
    if not isinstance(raw, list):
        raise InvalidInputError("syntax", '"branch" must be an array')
    if not raw:
        raise InvalidInputError("empty", "a branch needs at least one term")
    terms = []
    for j, pair in enumerate(raw, 1):
        if not isinstance(pair, list) or len(pair) != 2:
            raise InvalidInputError("syntax", f"term {j} must be a 2-element array")
        terms.append((parse_fraction(pair[0]), parse_fraction(pair[1])))
    strict = doc.get("strict", False)
    if not isinstance(strict, bool):
        raise InvalidInputError("syntax", '"strict" must be a boolean')
    return InputDocument(tuple(terms), strict)


def render_input(doc: InputDocument) -> str:
    return json.dumps({"branch": [[str(a), str(b)] for a, b in doc.branch],
                       "strict": doc.strict}, sort_keys=True)


def _pairs(branch: CharacteristicTuple) -> List[List[str]]:
    return [[str(a), str(b)] for a, b in branch.terms]


def _zeta(p: CycloProduct) -> Dict[str, Any]:
    return {"factors": p.to_list(),
            "normal_form": [[d, e] for d, e in p.normal_form().items()]}


def _axis_section(seq: DerivationSequence) -> Dict[str, Any]:
    degrees = suffix_degrees(seq)
    chi = transverse_euler(seq)
    xi = xi_sequence(seq)
    H, V = horizontal_zeta(seq), vertical_zeta(seq)
    levels = [{"k": k, "branch": _pairs(lv.branch), "invariants": lv.invariants.as_dict(),
               "degree": degrees[k], "euler": chi[k], "xi": xi[k]}
              for k, lv in enumerate(seq.levels)]
    consistency = {
        "horizontal_degree_is_euler": H.degree_sum() == chi[0],
        "vertical_degree_is_euler": V.degree_sum() == chi[0],
        "vertical_multiplicity_is_1_minus_xi": V.tm1_multiplicity() == 1 - xi[0],
    }
    return {"levels": levels, "zeta": {"horizontal": _zeta(H), "vertical": _zeta(V)},
            "checks": consistency}


def build_report(doc: InputDocument, axes: Sequence[int] = (1, 2)) -> Dict[str, Any]:
    """Run the whole pipeline and return the report as plain JSON-ready data."""
    branch = validate(doc.characteristic_tuple(), strict=doc.strict)
    seqs = {axis: derivation_sequence(branch, axis) for axis in axes}
    first = seqs[axes[0]]
    report: Dict[str, Any] = {
        "input": {"branch": _pairs(branch), "strict": doc.strict},
        "degrees": {
            "d": suffix_degrees(first)[0],
            "suffix": suffix_degrees(first),
            "d_bullet": first.d_bullets(),
            "c_bullet": first.c_bullets(),
        },
        "axes": {str(axis): _axis_section(seq) for axis, seq in seqs.items()},
    }
    if 1 in seqs and 2 in seqs:
        comp = verify_comparison(seqs[1], seqs[2])
        report["comparison"] = {
            "pairs": [{"level": p.level, "U": p.U.to_lists(), "M": p.M.to_lists()}
                      for p in comp.pairs],
            "checks": [{"name": c.name, "level": c.level, "passed": c.passed,
                        "witness": c.witness} for c in comp.checks],
            "ok": comp.ok,
        }
        report["betti"] = betti_report(seqs[1], seqs[2]).as_dict()
    else:
        xi = xi_sequence(first)
        report["betti"] = {"xi_levels": xi, "xi": xi[0], "h1_vertical": xi[0] + 1}
    return report


def _all_checks(report: Dict[str, Any]) -> List[Tuple[str, bool]]:
    out = []
    for axis, section in report["axes"].items():
        out += [(f"axis {axis}: {name}", ok) for name, ok in section["checks"].items()]
    comp = report.get("comparison")
    if comp:
        by_name: Dict[str, bool] = {}
        for c in comp["checks"]:
            by_name[c["name"]] = by_name.get(c["name"], True) and c["passed"]
        out += list(by_name.items())
    if "h1_boundary" in report["betti"]:
        out.append(("boundary betti number even", report["betti"]["h1_boundary"] % 2 == 0))
    return out


def _format_text(report: Dict[str, Any]) -> str:
    lines = ["branch: " + " + ".join(f"x1^{a} x2^{b}" for a, b in report["input"]["branch"])]
    deg = report["degrees"]
    lines.append(f"degree d = {deg['d']}; d^(k) = {deg['suffix']}")
    lines.append(f"d_bullet^(k) = {deg['d_bullet']}; c_bullet^(k) = {deg['c_bullet']}")
    for axis, section in report["axes"].items():
        lines.append(f"\naxis {axis}")
        for lv in section["levels"]:
            terms = " + ".join(f"x1^{a} x2^{b}" for a, b in lv["branch"])
            lines.append(f"  k={lv['k']}: {terms}")
            lines.append(f"       chi={lv['euler']} xi={lv['xi']} {lv['invariants']}")
        for kind in ("horizontal", "vertical"):
            lines.append(f"  {kind} zeta: {_zeta_text(section['zeta'][kind]['factors'])}")
    comp = report.get("comparison")
    if comp:
        lines.append("\ncomparison")
        for p in comp["pairs"]:
            lines.append(f"  k={p['level']}: U={_mat_text(p['U'])}  M={_mat_text(p['M'])}")
    lines.append("\nbetti")
    for key, value in report["betti"].items():
        lines.append(f"  {key} = {value}")
    lines.append("\nchecks")
    for name, ok in _all_checks(report):
        lines.append(f"  {'PASS' if ok else 'FAIL'} {name}")
    return "\n".join(lines)


def _zeta_text(factors) -> str:
    return str(CycloProduct(factors))


def _mat_text(rows) -> str:
    return "[[" + "], [".join(", ".join(r) for r in rows) + "]]"


def run(doc: InputDocument, mode: str = "report", axes: Sequence[int] = (1, 2)
        ) -> Tuple[Dict[str, Any], int]:
    """Return ``(document, exit status)`` for one of the modes report, verify, zeta."""
    report = build_report(doc, axes)
    checks = _all_checks(report)
    status = EXIT_OK if all(ok for _, ok in checks) else EXIT_VIOLATION
    if mode == "report":
        return report, status
    if mode == "verify":
        return {"checks": [{"name": n, "passed": ok} for n, ok in checks],
                "ok": status == EXIT_OK}, status
    if mode == "zeta":
        return {f"{kind}_{axis}": report["axes"][axis]["zeta"][kind]["factors"]
                for axis in report["axes"] for kind in ("horizontal", "vertical")}, status
    raise ValueError(f"unknown mode {mode!r}")


def _render(document: Dict[str, Any], mode: str, fmt: str) -> str:
    if fmt == "structured":
        return json.dumps(document, sort_keys=True, indent=2)
    if mode == "report":
        return _format_text(document)
    if mode == "verify":
        return "\n".join(f"{'PASS' if c['passed'] else 'FAIL'} {c['name']}"
                         for c in document["checks"])
    return "\n".join(f"{key}: {_zeta_text(value)}" for key, value in sorted(document.items()))


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = argparse.ArgumentParser(
        prog="qo-invariants",
        description="Invariants of a reduced quasi-ordinary surface prototype.")
    parser.add_argument("--mode", choices=["report", "verify", "zeta"], default="report")
    parser.add_argument("--axis", choices=["1", "2", "both"], default="both")
    parser.add_argument("--strict", action="store_true",
                        help="also require every term to be essential")
    parser.add_argument("--format", choices=["text", "structured"], default="text")
    parser.add_argument("file", nargs="?", help="input document (default: stdin)")
    args = parser.parse_args(argv)

    axes = (1, 2) if args.axis == "both" else (int(args.axis),)
    try:
        if args.file:
            with open(args.file) as fh:
                text = fh.read()
        else:
            text = sys.stdin.read()
        doc = parse_input(text)
        if args.strict and not doc.strict:
            doc = InputDocument(doc.branch, True)
        document, status = run(doc, args.mode, axes)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except InvalidInputError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except TheoremViolation as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    print(_render(document, args.mode, args.format))
    return status


if __name__ == "__main__":
    sys.exit(main())
