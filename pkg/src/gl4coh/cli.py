"""Command-line entry point: `gl4coh <verb> [flags]`.

Exit codes: 0 ok, 1 usage or domain error, 2 validation mismatch,
3 invariant failure.
"""

from __future__ import annotations

import argparse
import sys

from . import render
from .arithcoh import (AxiomViolation, DegenerationError, classify_gl3_weight, composition_from_name,
                       gl3_cohomology, parabolic_cohomology, parabolic_name)
from .boundary import (ValidationMismatch, boundary_cohomology, build_e1_sheet, diagram, gl4_cohomology, gl4_weight,
                       theorem_table)
from .euler import CentralizerConstantTable, chi_gl2, chi_gl3_detailed, chi_gl4
from .gl2coh import gl2_cohomology
from .spectral import InvariantFailure
from .torsion import KernelFamily, TorsionClass, resultant_factor, trace_module
from .weights import SymStd, Weight
from .weyl import Composition

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_INVARIANT = 0, 1, 2, 3
FORMATS = ("table", "json", "tex")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace("[", "").replace("]", "").split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _even_n(args, minimum: int = 4) -> int:
    if args.n is None:
        raise UsageError("--n is required")
    if args.n < minimum or args.n % 2:
        raise UsageError(f"--n must be even and >= {minimum}")
    return args.n


def _composition(args) -> Composition:
    if args.blocks is None:
        raise UsageError("--blocks is required")
    if not args.blocks or any(b < 1 for b in args.blocks):
        raise UsageError("--blocks must be positive")
    return Composition(args.blocks)


def _weight(args, rank: int | None = None) -> Weight:
    if args.lam is None:
        raise UsageError("--lambda is required")
    lam = Weight(args.lam)
    if rank is not None and lam.rank != rank:
        raise UsageError(f"--lambda must have {rank} entries")
    if not lam.is_dominant():
        raise UsageError(f"--lambda {lam} is not dominant")
    return lam


def _family_k(text: str) -> str:
    return text.replace(" ", "")


# --- verbs ------------------------------------------------------------------------

def cmd_weyl_table(args) -> str:
    if args.n is not None:
        rows = render.weyl_table_rows(_even_n(args))
    else:
        rows = render.weyl_table_rows()
    return render.tabular(rows, args.format)


def cmd_kostant(args) -> str:
    c = _composition(args)
    if args.lam is None and args.n is None:
        if c.rank != 4:
            raise UsageError("symbolic display needs a composition of 4")
        return render.nilradical_display(c)
    lam = _weight(args, c.rank) if args.lam is not None else gl4_weight(_even_n(args))
    if lam.rank != c.rank:
        raise UsageError("--blocks and --lambda have different ranks")
    return render.tabular(render.kostant_rows(c, lam), args.format)


def _torsion_module(args):
    if args.k is None or args.k < 0:
        raise UsageError("--k >= 0 is required")
    fam = _family_k(args.family or "S^k")
    if fam in ("S^k", "L[k,0,0]"):
        return SymStd(3, args.k)
    if fam == "L[k,1,0]":
        return KernelFamily(args.k)
    if fam in ("S^k(x)det", "L[k+1,1,1]"):
        return SymStd(3, args.k, 1)
    raise UsageError(f"unknown --family {args.family}")


def cmd_trace(args) -> str:
    if not args.blocks_text:
        raise UsageError("--blocks is required, e.g. --blocks T6,1")
    try:
        a = TorsionClass(args.blocks_text)
    except (KeyError, ValueError) as exc:
        raise UsageError(f"bad torsion class: {exc}")
    mod = _torsion_module(args)
    if isinstance(mod, SymStd) and a.rank != 3:
        mod = SymStd(a.rank, mod.k, mod.det)
    tr = trace_module(a, mod)
    rf = resultant_factor(a)
    if args.format == "json":
        return render.dumps({"class": str(a), "k": args.k, "trace": tr, "resultant": rf})
    return f"Tr({a} | {args.family or 'S^k'}, k={args.k}) = {tr}\n|R({a})| = {rf}\n"


def cmd_euler(args) -> str:
    constants = CentralizerConstantTable.load(args.constants) if args.constants else None
    if args.gl2:
        if args.k is None or args.k < 0:
            raise UsageError("--k >= 0 is required")
        value, detail = chi_gl2(args.k, 1 if args.det else 0), None
    elif args.gl4:
        value, detail = chi_gl4(_even_n(args)), None
    else:
        if args.lam is not None:
            from .euler import gl3_descriptor
            mod = gl3_descriptor(_weight(args, 3))
        else:
            mod = _torsion_module(args)
        res = chi_gl3_detailed(mod, constants)
        value, detail = int(res), res
    if args.format == "json":
        out = {"chi": value}
        if detail is not None:
            out["terms"] = [{"class": c, "constant": str(k), "trace": t, "contribution": str(v)}
                            for c, k, t, v in detail.breakdown]
        return render.dumps(out)
    return f"{value}\n"


def cmd_gl2(args) -> str:
    lam = _weight(args, 2)
    h = gl2_cohomology(lam[0], lam[1])
    if args.format == "json":
        return render.dumps(h.to_json())
    return h.render() + "\n"


def cmd_gl3(args) -> str:
    if args.lam is not None:
        lam = _weight(args, 3)
        try:
            classify_gl3_weight(lam)
        except ValueError as exc:
            raise UsageError(str(exc))
        h = gl3_cohomology(lam)
    else:
        if args.family is None:
            raise UsageError("--family or --lambda is required")
        try:
            h = gl3_cohomology(_family_k(args.family), _even_n(args))
        except ValueError as exc:
            raise UsageError(str(exc))
    return render.render_cohomology(h, args.format)


def cmd_parabolic(args) -> str:
    c = _composition(args)
    if c.rank == 4 and args.n is None and args.lam is None:
        return render.parabolic_display(c, overlines=True, fmt="tex" if args.format == "tex" else "table")
    lam = _weight(args, c.rank) if args.lam is not None else gl4_weight(_even_n(args))
    return render.render_cohomology(parabolic_cohomology(c, lam, args.n), args.format)


def cmd_boundary(args) -> str:
    n = _even_n(args)
    result = boundary_cohomology(n)
    if args.diagram:
        return diagram(result.page.sheet, result.page)
    return render.render_boundary(result, args.format)


def cmd_gl4(args) -> str:
    if args.n is None or args.n < 4:
        raise UsageError("--n >= 4 is required")
    return render.render_gl4(gl4_cohomology(args.n), args.format)


def cmd_table(args) -> str:
    if args.n_max is None or args.n_max < 4:
        raise UsageError("--n-max >= 4 is required")
    return render.render_theorem_table(theorem_table(args.n_max), args.format)


def cmd_verify(args) -> str:
    from .invariants import run_all
    n_max = args.n_max or 200
    if n_max < 6:
        raise UsageError("--n-max must be >= 6")
    results = run_all(n_max=n_max, fixtures=args.fixtures)
    failed = [r for r in results if not r.ok]
    text = "".join(r.line() + "\n" for r in results)
    text += f"{len(results) - len(failed)} passed, {len(failed)} failed\n"
    if failed:
        raise _VerifyFailed(text)
    return text


class _VerifyFailed(Exception):
    pass


VERBS = {
    "weyl-table": cmd_weyl_table, "kostant": cmd_kostant, "trace": cmd_trace, "euler": cmd_euler,
    "gl2": cmd_gl2, "gl3": cmd_gl3, "parabolic": cmd_parabolic, "boundary": cmd_boundary,
    "gl4": cmd_gl4, "table": cmd_table, "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gl4coh", description="Cohomology of GL_4(Z) with coefficients S^{n-4}V_4 (x) det.")
    parser.add_argument("verb", choices=sorted(VERBS))
    parser.add_argument("--n", type=int)
    parser.add_argument("--n-max", type=int, dest="n_max")
    parser.add_argument("--blocks", dest="blocks_raw", metavar="BLOCKS", help="composition such as 3,1, or a torsion class such as T6,1")
    parser.add_argument("--lambda", type=_ints, dest="lam", metavar="LAMBDA", help="weight, e.g. 9,1,1,1")
    parser.add_argument("--family")
    parser.add_argument("--k", type=int)
    parser.add_argument("--format", choices=FORMATS, default="table")
    parser.add_argument("--constants", help="JSON file overriding |R(A)| chi(C(A)) by class")
    parser.add_argument("--fixtures", help="directory of golden tables for verify")
    parser.add_argument("--gl2", action="store_true")
    parser.add_argument("--gl3", action="store_true")
    parser.add_argument("--gl4", action="store_true")
    parser.add_argument("--det", action="store_true", help="twist by det (euler --gl2)")
    parser.add_argument("--diagram", action="store_true", help="emit the boundary cover as a DOT graph")
    return parser


def run(argv=None) -> tuple[int, str, str]:
    """Parse argv and execute; returns (exit code, stdout text, stderr text)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (exc.code if isinstance(exc.code, int) else EXIT_USAGE), "", ""
    args.blocks_text = args.blocks_raw
    args.blocks = None
    if args.blocks_raw and args.verb != "trace":
        try:
            args.blocks = _ints(args.blocks_raw)
        except argparse.ArgumentTypeError as exc:
            return EXIT_USAGE, "", f"gl4coh: error: {exc}\n"
    try:
        return EXIT_OK, VERBS[args.verb](args), ""
    except UsageError as exc:
        return EXIT_USAGE, "", f"gl4coh: error: {exc}\n"
    except _VerifyFailed as exc:
        return EXIT_INVARIANT, str(exc), ""
    except ValidationMismatch as exc:
        return EXIT_MISMATCH, "", f"gl4coh: validation mismatch: {exc}\n"
    except (InvariantFailure, AxiomViolation, DegenerationError, render.PatternMismatch) as exc:
        return EXIT_INVARIANT, "", f"gl4coh: invariant failure: {exc}\n"
    except ValueError as exc:
        return EXIT_USAGE, "", f"gl4coh: error: {exc}\n"


def main(argv=None) -> int:
    code, out, err = run(argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
