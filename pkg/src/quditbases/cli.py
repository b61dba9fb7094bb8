"""Command line front end with exact symbolic text and deterministic JSON.

Exit codes: 0 on success with every verification passing, 1 when a
verification fails (the witness is included in the output), 2 on usage
errors. Text output renders scalars in q-notation with the conductor
stated in a header line; JSON output uses canonical scalar strings, so
identical requests produce byte-identical documents.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from .cyclotomic import Cyclotomic, root_of_unity
from .entanglement import classify_basis
from .mub import (
    certify_unbiased,
    computational_basis,
    mub_basis,
    mub_set,
    mub_vector,
    two_qubit_mub_set,
)
from .operators import clock_matrix, phased_shift_matrix, shift_matrix, su2_report, weyl_report
from .pauli import MAX_ENUMERATION_DIM, enumerate_group
from .states import Basis, StateVector

MAX_EXACT_DIM = 16
MAX_SU2_DIM = 64


class UsageError(Exception):
    pass


def _require_dim(value: int, upper: int) -> int:
    if not 1 <= value <= upper:
        raise UsageError(f"d must lie in 1..{upper}")
    return value


def _require_in_zd(value: int, dim: int, name: str) -> int:
    if not 0 <= value < dim:
        raise UsageError(f"{name} must lie in 0..{dim - 1}")
    return value


# ----------------------------------------------------------------------
# symbolic text rendering

def _scalar_text(value: Cyclotomic, dim: int) -> str:
    """Render in q-notation (q = exp(2*pi*i/d)) where the value is a q power."""
    rational = value.as_rational()
    if rational is not None:
        return str(rational)
    n = value.conductor
    for sign, prefix in ((1, ""), (-1, "-")):
        for exponent in range(1, n):
            if value == root_of_unity(n, exponent) * sign:
                power = Fraction(exponent * dim, n)
                if power == 1:
                    return f"{prefix}q"
                text = power.numerator if power.denominator == 1 else f"({power})"
                return f"{prefix}q^{text}"
    return f"({value})"


def _rational_sqrt(value: Fraction) -> Fraction | None:
    p = math.isqrt(value.numerator)
    q = math.isqrt(value.denominator)
    if p * p == value.numerator and q * q == value.denominator:
        return Fraction(p, q)
    return None


def _vector_text(vec: StateVector, dim: int) -> str:
    entries = ", ".join(_scalar_text(e, dim) for e in vec.entries)
    scale = vec.scale_sq
    if scale == 1:
        return f"({entries})"
    root = _rational_sqrt(scale)
    if root is not None:
        return f"{root}*({entries})"
    if scale.numerator == 1:
        return f"({entries})/sqrt({scale.denominator})"
    return f"sqrt({scale})*({entries})"


def _basis_text(basis: Basis) -> list[str]:
    lines = [f"basis {basis.label} (dim {basis.dim}):"]
    for i, vec in enumerate(basis.vectors):
        lines.append(f"  [{i}] {_vector_text(vec, basis.dim)}")
    return lines


def _matrix_text(rows, dim: int) -> list[str]:
    return ["  [" + ", ".join(_scalar_text(e, dim) for e in row) + "]" for row in rows]


def _header(dim: int, conductor: int | None = None) -> str:
    conductor = 2 * dim if conductor is None else conductor
    return f"conductor {conductor}; q = exp(2*pi*i/{dim})"


# ----------------------------------------------------------------------
# subcommands: each returns (exit_code, json_payload, text_lines)

def _cmd_basis(args) -> tuple[int, dict, list[str]]:
    dim = _require_dim(args.d, MAX_EXACT_DIM)
    if args.alpha is not None:
        if args.a is None:
            raise UsageError("--alpha needs --a")
        a = _require_in_zd(args.a, dim, "a")
        alpha = _require_in_zd(args.alpha, dim, "alpha")
        vector = mub_vector(dim, a, alpha)
        lines = [_header(dim), f"|a={a}, alpha={alpha}> = {_vector_text(vector, dim)}"]
        return 0, vector.to_json_dict(), lines
    if args.a is None:
        basis = computational_basis(dim)
    else:
        basis = mub_basis(dim, _require_in_zd(args.a, dim, "a"))
    payload = basis.to_json_dict()
    return 0, payload, [_header(dim)] + _basis_text(basis)


def _cmd_mub_set(args) -> tuple[int, dict, list[str]]:
    dim = _require_dim(args.d, MAX_EXACT_DIM)
    if dim < 2:
        raise UsageError("mub-set needs d >= 2")
    if args.full:
        bases = [mub_basis(dim, a) for a in range(dim)]
        bases.append(computational_basis(dim))
        certificate = certify_unbiased(bases)
    else:
        bases, certificate = mub_set(dim)
    payload = certificate.to_json_dict()
    payload["vectors"] = [b.to_json_dict() for b in bases]
    lines = [_header(dim), f"bases: {', '.join(certificate.basis_labels)}"]
    for pair in certificate.pairs:
        lines.append(f"  {pair.first} vs {pair.second}: {pair.verdict}")
        if pair.witness is not None:
            w = pair.witness
            lines.append(
                f"    witness: vectors ({w.first_index}, {w.second_index}) "
                f"with |overlap|^2 = {w.overlap_sq}"
            )
    lines.append(f"maximal: {certificate.maximal}")
    if certificate.flag:
        lines.append(f"flag: {certificate.flag}")
    code = 0 if certificate.all_unbiased else 1
    return code, payload, lines


def _cmd_two_qubit(args) -> tuple[int, dict, list[str]]:
    bases, certificate = two_qubit_mub_set()
    payload = certificate.to_json_dict()
    payload["vectors"] = [b.to_json_dict() for b in bases]
    lines = [_header(4)]
    for basis in bases:
        lines.extend(_basis_text(basis))
    lines.append(f"maximal: {certificate.maximal}")
    return (0 if certificate.maximal else 1), payload, lines


def _report_lines(report) -> list[str]:
    lines = [f"report {report.name} (dim {report.dim}):"]
    for check in report.checks:
        status = "pass" if check.passed else "FAIL"
        residual = "" if check.max_residual is None else f" residual={check.max_residual:.3e}"
        kind = "exact" if check.exact else "float"
        lines.append(f"  [{status}] {check.check} ({kind}){residual}")
    return lines


def _cmd_verify_weyl(args) -> tuple[int, dict, list[str]]:
    dim = _require_dim(args.d, MAX_EXACT_DIM)
    report = weyl_report(dim)
    return (0 if report.passed else 1), report.to_json_dict(), _report_lines(report)


def _cmd_verify_su2(args) -> tuple[int, dict, list[str]]:
    dim = _require_dim(args.d, MAX_SU2_DIM)
    values = [_require_in_zd(args.a, dim, "a")] if args.a is not None else range(dim)
    reports = [su2_report(dim, a, args.tolerance) for a in values]
    payload = {
        "dim": dim,
        "tolerance": args.tolerance,
        "passed": all(r.passed for r in reports),
        "reports": [r.to_json_dict() for r in reports],
    }
    lines: list[str] = []
    for report in reports:
        lines.extend(_report_lines(report))
    return (0 if payload["passed"] else 1), payload, lines


def _cmd_pauli_group(args) -> tuple[int, dict, list[str]]:
    dim = _require_dim(args.d, MAX_ENUMERATION_DIM)
    if dim < 2:
        raise UsageError("pauli-group needs d >= 2")
    report = enumerate_group(dim)
    lines = [
        f"generalized Pauli group, d = {dim}",
        f"  order: {report.order}",
        f"  closure: {report.closure}",
        f"  matrix oracle agreement: {report.faithful} ({report.sampled_pairs} pairs)",
        f"  associative: {report.associative}",
        f"  inverses: {report.inverses_ok}",
        f"  unitary: {report.unitary}",
        f"  passed: {report.passed}",
    ]
    return (0 if report.passed else 1), report.to_json_dict(), lines


def _cmd_entangle(args) -> tuple[int, dict, list[str]]:
    bases, _ = two_qubit_mub_set()
    classifications = [classify_basis(b, 2) for b in bases]
    payload = {
        "factor_dim": 2,
        "bases": [c.to_json_dict() for c in classifications],
    }
    lines = ["determinant entanglement classes for the five two-qubit bases:"]
    for c in classifications:
        values = ", ".join(
            "0" if r.det_abs_sq == 0 else str(r.det_abs_sq) for r in c.results
        )
        lines.append(f"  {c.label}: {c.summary} (|det A|^2 = {values})")
    return 0, payload, lines


def _cmd_operator(args) -> tuple[int, dict, list[str]]:
    dim = _require_dim(args.d, MAX_EXACT_DIM)
    x = shift_matrix(dim)
    z = clock_matrix(dim)
    payload = {
        "dim": dim,
        "conductor": dim,
        "x": x.to_json_dict()["rows"],
        "z": z.to_json_dict()["rows"],
    }
    lines = [_header(dim, conductor=dim), "shift operator X:"]
    lines.extend(_matrix_text(x.rows, dim))
    lines.append("clock operator Z:")
    lines.extend(_matrix_text(z.rows, dim))
    if args.a is not None:
        a = _require_in_zd(args.a, dim, "a")
        v = phased_shift_matrix(dim, a)
        payload["a"] = a
        payload["phased_shift"] = v.to_json_dict()["rows"]
        lines.append(f"phased shift (a = {a}):")
        lines.extend(_matrix_text(v.rows, dim))
    return 0, payload, lines


_COMMANDS = {
    "basis": _cmd_basis,
    "mub-set": _cmd_mub_set,
    "two-qubit-mubs": _cmd_two_qubit,
    "verify-weyl": _cmd_verify_weyl,
    "verify-su2": _cmd_verify_su2,
    "pauli-group": _cmd_pauli_group,
    "entangle": _cmd_entangle,
    "operator": _cmd_operator,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quditbases",
        description=(
            "Construct qudit bases and certify their properties in exact "
            "cyclotomic arithmetic."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str, d: bool = True, a: bool = False, tol: bool = False):
        p = sub.add_parser(name, help=help_text)
        if d:
            p.add_argument("--d", type=int, required=True, help="space dimension")
        if a:
            p.add_argument("--a", type=int, default=None, help="phased shift index in Z_d")
        if tol:
            p.add_argument(
                "--tolerance", type=float, default=1e-12,
                help="float residual tolerance (default 1e-12)",
            )
        p.add_argument(
            "--format", choices=("text", "json"), default="text",
            help="output format (default text)",
        )
        p.add_argument("--out", default=None, help="write output to this file")
        return p

    p = add("basis", "print the computational basis or a phased-shift eigenbasis", a=True)
    p.add_argument("--alpha", type=int, default=None, help="print one eigenvector only")
    p = add("mub-set", "construct and certify the MUB family for d")
    p.add_argument(
        "--full", action="store_true",
        help="certify all d eigenbases plus the computational basis even for composite d",
    )
    add("two-qubit-mubs", "the five mutually unbiased bases of two qubits", d=False)
    add("verify-weyl", "verify the clock-and-shift relations exactly")
    add("verify-su2", "verify the su(2) ladder identities", a=True, tol=True)
    add("pauli-group", "enumerate and verify the generalized Pauli group")
    add("entangle", "classify the two-qubit bases by the determinant measure", d=False)
    add("operator", "print the shift, clock and phased-shift matrices", a=True)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, payload, lines = _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    if args.format == "json":
        output = json.dumps(payload, indent=2) + "\n"
    else:
        output = "\n".join(lines) + "\n"

    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(output)
    else:
        sys.stdout.write(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
