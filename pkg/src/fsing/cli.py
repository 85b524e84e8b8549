"""Command-line front end: job parsing, input files, report emission.

Subcommands
-----------
fpt         nu-values and certified threshold intervals for an ideal
lct-lp      build and solve the threshold LP, with the uniqueness check
howald      Newton-polyhedron threshold of a monomial (term) ideal
correspond  sweep primes and compare Fedder outcomes with the LP value
fermat      Frobenius-action injectivity for Fermat hypersurfaces

Exit codes: 0 success, 1 computational error, 2 usage error.  All numeric
output is exact (rationals printed as ``a/b``).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import correspondence, fedder, fermat, newton
from .errors import FormatError, FsingError, UsageError
from .fedder import CompleteIntersectionPair
from .polynomials import SparsePolynomial, poly_parse


@dataclass
class JobSpec:
    """A validated command invocation, ready to run."""

    command: str
    polys: list[str] = field(default_factory=list)
    file: str | None = None
    nvars: int | None = None
    ci_count: int = 0
    p: int | None = None
    e: int = 1
    d: int | None = None
    t: Fraction | None = None
    count: int = 4
    modulus: int | None = None
    skip: tuple[int, ...] = ()
    primes_list: tuple[int, ...] | None = None
    primes_spec: tuple[int, int, int] | None = None  # (residue, modulus, count)
    dump_matrix: bool = False
    program_file: str | None = None
    dump_program: bool = False
    out: str | None = None
    format: str = "text"


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # raise instead of sys.exit so parse_job is pure
        raise UsageError(message)


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.split(",") if v.strip())
    except ValueError as exc:
        raise UsageError(f"bad integer list {text!r}") from exc


def _parse_primes_spec(text: str) -> tuple[int, int, int]:
    """'1mod3:3' -> (residue 1, modulus 3, count 3)."""
    try:
        head, count = text.split(":")
        residue, modulus = head.split("mod")
        return int(residue), int(modulus), int(count)
    except ValueError as exc:
        raise UsageError(f"bad primes spec {text!r}; expected RmodM:COUNT") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fsing", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", help="write output to this file instead of stdout")
        p.add_argument("--format", choices=["text", "machine"], default="text")

    p_fpt = sub.add_parser("fpt", help="nu-values and threshold intervals")
    p_fpt.add_argument("--poly", action="append", default=[], help="ideal generator (repeatable)")
    p_fpt.add_argument("--file", help=".fsin input file")
    p_fpt.add_argument("-n", type=int, help="variable count (with --poly)")
    p_fpt.add_argument("-p", type=int, required=True, help="prime")
    p_fpt.add_argument("-e", type=int, default=1, help="largest Frobenius exponent")
    common(p_fpt)

    p_lct = sub.add_parser("lct-lp", help="solve the threshold LP")
    p_lct.add_argument("--poly", action="append", default=[])
    p_lct.add_argument("--file", help=".fsin input file")
    p_lct.add_argument("--program-file", help="read a program table directly")
    p_lct.add_argument("--dump-program", action="store_true",
                       help="also print the program as a text table")
    p_lct.add_argument("-n", type=int)
    p_lct.add_argument("-c", type=int, default=0, help="complete-intersection count")
    common(p_lct)

    p_how = sub.add_parser("howald", help="Newton-polyhedron threshold")
    p_how.add_argument("--poly", action="append", default=[],
                       help="polynomial whose terms generate the monomial ideal")
    p_how.add_argument("--file", help=".fsin input file")
    p_how.add_argument("-n", type=int)
    common(p_how)

    p_cor = sub.add_parser("correspond", help="prime sweep vs LP prediction")
    p_cor.add_argument("--file", help=".fsin input file")
    p_cor.add_argument("--poly", action="append", default=[])
    p_cor.add_argument("-n", type=int)
    p_cor.add_argument("-c", type=int, default=0)
    p_cor.add_argument("--t", help="threshold override (rational, e.g. 2 or 5/6)")
    p_cor.add_argument("-e", type=int, default=1)
    p_cor.add_argument("--count", type=int, default=4, help="primes to test")
    p_cor.add_argument("--modulus", type=int, help="override the congruence modulus")
    p_cor.add_argument("--skip", default="", help="comma-separated primes to exclude")
    p_cor.add_argument("--primes-list", help="comma-separated explicit primes")
    common(p_cor)

    p_fer = sub.add_parser("fermat", help="Frobenius injectivity sweep")
    p_fer.add_argument("-n", type=int, required=True)
    p_fer.add_argument("-d", type=int, required=True)
    p_fer.add_argument("-p", type=int, help="single prime")
    p_fer.add_argument("--primes", help="primes spec RmodM:COUNT, e.g. 1mod3:3")
    p_fer.add_argument("--dump-matrix", action="store_true")
    common(p_fer)

    return parser


def parse_job(argv: list[str]) -> JobSpec:
    """Validate the command line into a JobSpec (UsageError on bad input)."""
    ns = build_parser().parse_args(argv)
    spec = JobSpec(command=ns.command, out=ns.out, format=ns.format)

    if ns.command in ("fpt", "lct-lp", "howald", "correspond"):
        spec.polys = list(ns.poly)
        spec.file = ns.file
        spec.nvars = ns.n
        if ns.command == "lct-lp":
            spec.program_file = ns.program_file
            spec.dump_program = ns.dump_program
        sources = [bool(spec.polys), bool(spec.file), bool(spec.program_file)]
        if sum(sources) > 1:
            raise UsageError("--poly, --file, and --program-file are mutually exclusive")
        if sum(sources) == 0:
            raise UsageError("one of --poly or --file is required")
        if spec.polys and spec.nvars is None:
            raise UsageError("-n is required with --poly")

    if ns.command == "fpt":
        spec.p = ns.p
        spec.e = ns.e
        if spec.e < 1:
            raise UsageError("-e must be >= 1")
    elif ns.command == "lct-lp":
        spec.ci_count = ns.c
    elif ns.command == "correspond":
        spec.ci_count = ns.c
        spec.e = ns.e
        spec.count = ns.count
        spec.modulus = ns.modulus
        spec.skip = _int_list(ns.skip)
        if ns.t is not None:
            try:
                spec.t = Fraction(ns.t)
            except (ValueError, ZeroDivisionError) as exc:
                raise UsageError(f"bad rational {ns.t!r}") from exc
        if ns.primes_list:
            spec.primes_list = _int_list(ns.primes_list)
    elif ns.command == "fermat":
        spec.nvars = ns.n
        spec.d = ns.d
        spec.p = ns.p
        spec.dump_matrix = ns.dump_matrix
        if ns.primes:
            spec.primes_spec = _parse_primes_spec(ns.primes)
        if spec.p is None and spec.primes_spec is None:
            raise UsageError("fermat needs -p or --primes")
        if spec.p is not None and spec.primes_spec is not None:
            raise UsageError("-p and --primes are mutually exclusive")

    return spec


# ---------------------------------------------------------------------------
# .fsin input files


def parse_pair_text(text: str) -> CompleteIntersectionPair:
    """Parse the line-oriented .fsin format.

    Directives: ``n <int>``, ``c <int>``, then one polynomial per line in
    the poly grammar, then optional ``t <rational>`` and
    ``witness <poly> <r>``.  Blank lines and ``#`` comments are ignored.
    """
    nvars: int | None = None
    ci_count = 0
    polys: list[SparsePolynomial] = []
    t = Fraction(1)
    witness = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        if head == "n":
            nvars = int(rest)
            continue
        if head == "c":
            ci_count = int(rest)
            continue
        if head == "t":
            t = Fraction(rest.strip())
            continue
        if head == "witness":
            parts = rest.rsplit(None, 1)
            if len(parts) != 2:
                raise FormatError(f"line {lineno}: witness needs a polynomial and an index")
            if nvars is None:
                raise FormatError(f"line {lineno}: 'n' must come before the witness")
            witness = (poly_parse(parts[0], nvars), int(parts[1]))
            continue
        if nvars is None:
            raise FormatError(f"line {lineno}: 'n' must come before any polynomial")
        polys.append(poly_parse(line, nvars))
    if nvars is None:
        raise FormatError("missing 'n' directive")
    if ci_count > len(polys):
        raise FormatError("c exceeds the number of polynomials")
    return CompleteIntersectionPair(
        nvars=nvars,
        ci_gens=tuple(polys[:ci_count]),
        aux_gens=tuple(polys[ci_count:]),
        t=t,
        witness=witness,
    )


def _load_pair(spec: JobSpec, default_t: Fraction = Fraction(1)) -> CompleteIntersectionPair:
    if spec.file:
        with open(spec.file, "r", encoding="utf-8") as fh:
            return parse_pair_text(fh.read())
    gens = [poly_parse(text, spec.nvars) for text in spec.polys]
    return CompleteIntersectionPair(
        nvars=spec.nvars,
        ci_gens=tuple(gens[: spec.ci_count]),
        aux_gens=tuple(gens[spec.ci_count:]),
        t=default_t,
    )


# ---------------------------------------------------------------------------
# job execution


def _emit(spec: JobSpec, text: str):
    if spec.out:
        with open(spec.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _run_fpt(spec: JobSpec) -> str:
    pair = _load_pair(spec)
    gens = list(pair.ci_gens) + list(pair.aux_gens)
    estimates = fedder.fpt_estimate(gens, spec.p, spec.e)
    if spec.format == "machine":
        payload = {
            "command": "fpt",
            "p": spec.p,
            "estimates": [
                {"e": est.e, "nu": est.nu, "lower": str(est.lower), "upper": str(est.upper)}
                for est in estimates
            ],
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    lines = [
        f"e: {est.e}  nu: {est.nu}  interval: [{est.lower}, {est.upper}]"
        for est in estimates
    ]
    return "\n".join(lines) + "\n"


def _run_lct_lp(spec: JobSpec) -> str:
    pair = _load_pair(spec)
    prog = newton.build_program(list(pair.ci_gens) + list(pair.aux_gens), pair.ci_count)
    sol = newton.solve_lct_lp(prog)
    unique = newton.uniqueness_check(prog, sol) if sol.status == "optimal" else None
    if spec.format == "machine":
        payload = {
            "command": "lct-lp",
            "status": sol.status,
            "value": None if sol.value is None else str(sol.value),
            "unique": unique,
            "weights": None if sol.primal is None else [str(v) for v in sol.primal],
            "dual": None if sol.dual is None else [str(v) for v in sol.dual],
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    lines = [f"status: {sol.status}"]
    if sol.status == "optimal":
        lines.append(f"value: {sol.value}")
        lines.append(f"unique: {str(unique).lower()}")
        lines.append("weights: " + ",".join(str(v) for v in sol.primal))
        lines.append("dual: " + ",".join(str(v) for v in sol.dual))
    return "\n".join(lines) + "\n"


def _run_howald(spec: JobSpec) -> str:
    pair = _load_pair(spec)
    monomials = []
    for f in list(pair.ci_gens) + list(pair.aux_gens):
        monomials.extend(f.exponents())
    value = newton.howald_lct(monomials, pair.nvars)
    if spec.format == "machine":
        payload = {"command": "howald", "lct": str(value), "monomials": len(monomials)}
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    return f"lct: {value}\n"


def _run_correspond(spec: JobSpec) -> str:
    pair = _load_pair(spec)
    report = correspondence.run_correspondence(
        pair,
        e=spec.e,
        t_override=spec.t,
        count=spec.count,
        modulus_override=spec.modulus,
        skip=spec.skip,
        primes_override=spec.primes_list,
    )
    if spec.format == "machine":
        return correspondence.report_to_json(report)
    return correspondence.report_to_text(report)


def _run_fermat(spec: JobSpec) -> str:
    if spec.primes_spec is not None:
        residue, modulus, count = spec.primes_spec
        from .modular import primes_in_progression

        primes = primes_in_progression(residue, modulus, count)
    else:
        primes = [spec.p]
    results = []
    for p in primes:
        injective = fermat.frobenius_injective(spec.nvars, spec.d, p)
        results.append((p, injective))
    if spec.format == "machine":
        payload = {
            "command": "fermat",
            "n": spec.nvars,
            "d": spec.d,
            "results": [{"p": p, "injective": ok} for p, ok in results],
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    lines = [f"p: {p}  injective: {str(ok).lower()}" for p, ok in results]
    if spec.dump_matrix:
        for p, _ in results:
            if spec.d > spec.nvars:
                lines.append(fermat.matrix_to_text(fermat.build_frobenius_matrix(
                    spec.nvars, spec.d, p)).rstrip("\n"))
            else:
                lines.append(f"p: {p}  (empty basis, no matrix)")
    return "\n".join(lines) + "\n"


_RUNNERS = {
    "fpt": _run_fpt,
    "lct-lp": _run_lct_lp,
    "howald": _run_howald,
    "correspond": _run_correspond,
    "fermat": _run_fermat,
}


def run_job(spec: JobSpec) -> int:
    """Dispatch a validated job; returns the process exit code."""
    try:
        output = _RUNNERS[spec.command](spec)
        _emit(spec, output)
    except FsingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        spec = parse_job(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    return run_job(spec)


if __name__ == "__main__":
    sys.exit(main())
