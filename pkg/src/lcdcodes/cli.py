"""Command line front end: ``lcdcodes <command> ...``.

Exit status is 0 on success (a "not LCD" verdict is a success), 2 for usage
errors, and the ``exit_code`` of the raised :class:`LCDError` otherwise; the
error identifier is printed to stderr as ``error[Ident]: message``.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from lcdcodes import codes, constructions, lcd
from lcdcodes.codefile import (
    category_of,
    format_codefile,
    parse_field,
    read_codefile,
)
from lcdcodes.codes import (
    DEFAULT_LIMIT,
    EUCLIDEAN,
    HERMITIAN,
    TRACE_HERMITIAN,
    InnerProductKind,
    LinearCode,
)
from lcdcodes.errors import (
    CategoryMismatch,
    EvenCharacteristic,
    LCDError,
    NoSquareRootOfMinusOne,
    ParseError,
    TooLarge,
)
from lcdcodes.field import default_field, find_alpha, sqrt_minus_one
from lcdcodes.report import Report, vector_value

INNERS = (EUCLIDEAN, HERMITIAN, TRACE_HERMITIAN)


def _params(C) -> str:
    if isinstance(C, LinearCode):
        return f"[{C.n}, {C.k}]_{C.spec.q}"
    return f"({C.n}, {C.spec.r}^{C.ell})_{C.spec.q}"


def _params_with_d(C, d) -> str:
    if isinstance(C, LinearCode):
        return f"[{C.n}, {C.k}, {d}]_{C.spec.q}"
    return f"({C.n}, {C.spec.r}^{C.ell}, {d})_{C.spec.q}"


def _alpha_entry(report: Report, kind: InnerProductKind) -> None:
    if kind.name == TRACE_HERMITIAN:
        report.add("alpha", str(kind.alpha) if kind.alpha is not None else "none (even q)")


def _require_linear(C, inner: str) -> LinearCode:
    if not isinstance(C, LinearCode):
        raise CategoryMismatch(f"{inner} needs a 'linear' code file")
    return C


def _try_min_distance(C, limit: int):
    if C.size == 1:
        return None
    try:
        return codes.min_distance(C, limit)
    except TooLarge:
        return None


# ---------------------------------------------------------------------------


def cmd_check(path: str, inner: str, oracle: bool = False, limit: int = DEFAULT_LIMIT) -> Report:
    C = read_codefile(path)
    report = Report(f"check {path} --inner {inner}" + (" --oracle" if oracle else ""))
    report.add("field", C.spec.describe())
    report.add("category", category_of(C))
    report.add("parameters", _params(C))
    report.add("inner", inner)
    kind = InnerProductKind(inner).resolved(C.spec)
    _alpha_entry(report, kind)

    verdict = None
    if inner == HERMITIAN:
        verdict = lcd.hermitian_lcd_check(_require_linear(C, inner))
        report.add("gram", verdict.matrix)
    elif inner == TRACE_HERMITIAN:
        verdict = lcd.trace_hermitian_lcd_check(C)
        report.add("delta", verdict.matrix)
    else:
        _require_linear(C, inner)
    if verdict is not None:
        report.add("det", str(verdict.det))
        report.add("lcd", verdict.lcd)

    if oracle or verdict is None:
        hull = codes.hull_oracle(C, kind)
        report.add("hull_basis", hull)
        report.add("hull_dimension", hull.nrows)
        hull_lcd = hull.nrows == 0
        if oracle:
            if C.size > limit:
                raise TooLarge(f"oracle enumeration of {C.size} codewords exceeds --limit {limit}")
            brute = codes.hull_brute_force(C, kind, limit)
            report.add("hull_words_enumerated", len(brute))
            hull_lcd = hull_lcd and not brute
        if verdict is None:
            report.add("lcd", hull_lcd)
        else:
            report.add("oracle_agrees", hull_lcd == verdict.lcd)
    return report


def cmd_dual(path: str, inner: str) -> Report:
    C = read_codefile(path)
    kind = InnerProductKind(inner).resolved(C.spec)
    D = codes.dual(C, kind)
    report = Report(f"dual {path} --inner {inner}")
    report.add("field", C.spec.describe())
    report.add("inner", inner)
    _alpha_entry(report, kind)
    report.add("parameters", _params(C))
    report.add("dual_parameters", _params(D))
    report.add("dual_generator", D.generator)
    report.add("codefile", format_codefile(D, [f"{inner} dual of {path}"]))
    return report


def cmd_project(path: str, inner: str, vector_text: str) -> Report:
    C = read_codefile(path)
    spec = C.spec
    tokens = vector_text.replace(",", " ").split()
    if len(tokens) != C.n:
        raise ParseError(f"vector needs {C.n} entries, got {len(tokens)}")
    v = tuple(spec.parse(t) for t in tokens)
    report = Report(f"project {path} --inner {inner} --vector '{vector_text}'")
    report.add("field", spec.describe())
    report.add("inner", inner)
    report.add("vector", vector_value(v))
    if inner == HERMITIAN:
        P = lcd.hermitian_projection(_require_linear(C, inner))
        report.add("projection_matrix", P)
        image = P.vecmul(v)
        check = lcd.verify_projection(lcd.matrix_map(P), C, HERMITIAN)
    elif inner == TRACE_HERMITIAN:
        proj = lcd.TraceHermitianProjection(C)
        report.add("alpha", str(proj.alpha) if proj.alpha is not None else "none (even q)")
        image = proj(v)
        check = lcd.verify_projection(proj, C, InnerProductKind(TRACE_HERMITIAN, proj.alpha))
    else:
        raise CategoryMismatch("projections are defined for hermitian and trace-hermitian products")
    report.add("image", vector_value(image))
    report.add("residual", vector_value(a - b for a, b in zip(v, image)))
    report.add("projection_checks", {
        "idempotent": check.idempotent,
        "fixes_code": check.fixes_code,
        "kills_dual": check.kills_dual,
        "image_kernel_orthogonal": check.image_kernel_orthogonal,
    })
    return report


def cmd_mindist(path: str, limit: int = DEFAULT_LIMIT) -> Report:
    C = read_codefile(path)
    d = codes.min_distance(C, limit)
    report = Report(f"mindist {path}")
    report.add("field", C.spec.describe())
    report.add("size", C.size)
    report.add("min_distance", d)
    report.add("parameters", _params_with_d(C, d))
    return report


def cmd_standard_form(path: str) -> Report:
    C = read_codefile(path)
    report = Report(f"standard-form {path}")
    report.add("field", C.spec.describe())
    report.add("category", category_of(C))
    if isinstance(C, LinearCode):
        sf = constructions.standard_form_linear(C)
        report.add("k", sf.k)
        report.add("column_permutation", list(sf.column_permutation))
        report.add("generator", sf.code.generator)
        report.add("P", sf.P)
    else:
        sfs = constructions.standard_form_subfield(C)
        report.add("k", sfs.k)
        report.add("column_permutation", list(sfs.column_permutation))
        report.add("kept_input", sfs.preserved)
        report.add("generator", sfs.code.generator)
        report.add("A", sfs.A)
        report.add("B", sfs.B)
        sf = sfs
    report.add("codefile", format_codefile(sf.code, [f"standard form of {path}"]))
    return report


def cmd_construct(
    path: str, theorem: str, limit: int = DEFAULT_LIMIT, output: str | None = None, strict: bool = True
) -> Report:
    C = read_codefile(path)
    spec = C.spec
    out, sf = constructions.construct(C, theorem, strict=strict)
    report = Report(f"construct {path} --theorem {theorem}")
    report.add("field", spec.describe())
    report.add("theorem", theorem)
    if theorem.endswith("ii"):
        report.add("lambda", str(sqrt_minus_one(spec)))
    report.add("column_permutation", list(sf.column_permutation))
    report.add("standard_form_k", sf.k)
    d_in = _try_min_distance(sf.code, limit)
    d_out = _try_min_distance(out, limit)
    report.add("input_parameters", _params_with_d(sf.code, "?" if d_in is None else d_in))
    report.add("parameters", _params_with_d(out, "?" if d_out is None else d_out))
    if isinstance(out, LinearCode):
        verdict = lcd.hermitian_lcd_check(out)
        report.add("gram", verdict.matrix)
    else:
        verdict = lcd.trace_hermitian_lcd_check(out)
        report.add("alpha", str(find_alpha(spec)) if spec.odd else "none (even q)")
        report.add("delta", verdict.matrix)
    report.add("lcd", verdict.lcd)
    report.add("generator", out.generator)
    text = format_codefile(out, [f"construction {theorem} applied to {path}"])
    report.add("codefile", text)
    if output:
        Path(output).write_text(text)
        report.add("written", output)
    return report


def cmd_field_info(field_text: str | None = None, q: int | None = None) -> Report:
    spec = parse_field(field_text) if field_text else default_field(q or 4)
    report = Report("field-info " + (field_text or f"--q {q or 4}"))
    report.add("field", spec.describe())
    report.add("p", spec.p)
    report.add("r", spec.r)
    report.add("q", spec.q)
    report.add("omega", str(spec.omega))
    report.add("trace_omega", str(spec.omega.trace()))
    report.add("subfield", [str(a) for a in spec.subfield_elements()])
    try:
        report.add("alpha", str(find_alpha(spec)))
    except EvenCharacteristic:
        report.add("alpha", "none (even q)")
    try:
        report.add("lambda", str(sqrt_minus_one(spec)))
    except NoSquareRootOfMinusOne:
        report.add("lambda", "none (r != 1 mod 4)")
    report.add("omega_powers", [str(spec.omega ** k) for k in range(spec.q - 1)])
    return report


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text", help="output format")
    common.add_argument("--limit", type=int, default=DEFAULT_LIMIT, help="max codewords to enumerate")

    parser = argparse.ArgumentParser(prog="lcdcodes", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="LCD criterion (and optional hull oracle)")
    p.add_argument("file")
    p.add_argument("--inner", choices=INNERS, default=HERMITIAN)
    p.add_argument("--oracle", action="store_true", help="also compute the hull from the definition")

    p = sub.add_parser("dual", parents=[common], help="dual code")
    p.add_argument("file")
    p.add_argument("--inner", choices=INNERS, default=HERMITIAN)

    p = sub.add_parser("project", parents=[common], help="apply the orthogonal projection to a vector")
    p.add_argument("file")
    p.add_argument("--inner", choices=(HERMITIAN, TRACE_HERMITIAN), default=HERMITIAN)
    p.add_argument("--vector", required=True, help="entries separated by spaces or commas")

    p = sub.add_parser("mindist", parents=[common], help="minimum distance by enumeration")
    p.add_argument("file")

    p = sub.add_parser("standard-form", parents=[common], help="standard-form generator")
    p.add_argument("file")

    p = sub.add_parser("construct", parents=[common], help="LCD construction from a code")
    p.add_argument("file")
    p.add_argument("--theorem", choices=constructions.THEOREMS, required=True)
    p.add_argument("--output", "-o", help="write the constructed code file here")
    p.add_argument("--unchecked", action="store_true", help="skip the B-block hypothesis check")

    p = sub.add_parser("field-info", parents=[common], help="describe a field")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--field", help="e.g. 'GF(3^2) mod 2,2,1'")
    g.add_argument("--q", type=int, help="use the default modulus for this q")
    return parser


def run(argv: list[str] | None = None) -> tuple[Report, argparse.Namespace]:
    args = build_parser().parse_args(argv)
    if args.command == "check":
        return cmd_check(args.file, args.inner, args.oracle, args.limit), args
    if args.command == "dual":
        return cmd_dual(args.file, args.inner), args
    if args.command == "project":
        return cmd_project(args.file, args.inner, args.vector), args
    if args.command == "mindist":
        return cmd_mindist(args.file, args.limit), args
    if args.command == "standard-form":
        return cmd_standard_form(args.file), args
    if args.command == "construct":
        return cmd_construct(args.file, args.theorem, args.limit, args.output, not args.unchecked), args
    return cmd_field_info(args.field, args.q), args


def main(argv: list[str] | None = None) -> int:
    try:
        report, args = run(argv)
    except LCDError as exc:
        print(f"error[{exc.ident}]: {exc}", file=sys.stderr)
        return exc.exit_code
    sys.stdout.write(report.render(args.format))
    return 0


if __name__ == "__main__":
    sys.exit(main())
