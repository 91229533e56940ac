from argparse import Namespace
from fractions import Fraction

from algebra.models.domain import GF, QQ
from cli.routes.command_router import CommandRouter, argument
from cli.schemas.report import Report
from cli.services.matrix_file_service import get_matrix_file_service
from cli.services.report_service import get_report_service
from common.errors.exceptions import InvalidParameterError
from pencil.enum.elementary_form_kind import ElementaryFormKind
from pencil.models.pencil import Pencil
from pencil.services.kronecker_service import get_kronecker_service
from pencil.services.pencil_service import get_pencil_service

pencil_router = CommandRouter(tag="pencil")

P = argument("p", help="matrix file P of the pencil uP + vQ")
Q = argument("q", help="matrix file Q of the pencil uP + vQ")


@pencil_router.command("pencil-eldiv", "Finite and infinite elementary divisors of uP + vQ", P, Q)
def pencil_eldiv(args: Namespace) -> Report:
    files = get_matrix_file_service()
    (p, q), texts = files.read_matrices(args.p, args.q)
    invariants = get_pencil_service().pencil_divisors(Pencil(p, q))
    lines = [f"det(uP + vQ) = {invariants.determinant}"]
    if invariants.regular:
        lines.append(", ".join(d.render() for d in invariants.divisors))
    else:
        lines.append(invariants.diagnosis)
        lines.append(f"generic rank {invariants.generic_rank} of {invariants.size}")
    return Report(
        kind="pencil-eldiv",
        input_digest=get_report_service().digest(*texts),
        invariants={
            "regular": invariants.regular,
            "generic_rank": invariants.generic_rank,
            "determinant": invariants.determinant,
            "invariant_factors": invariants.invariant_factors,
            "finite": invariants.finite,
            "infinite": invariants.infinite,
        },
        lines=lines,
    )


@pencil_router.command(
    "pencil-equiv",
    "Strict equivalence of uP + vQ and uP2 + vQ2 with witnesses H, K",
    P,
    Q,
    argument("p2", help="matrix file P2"),
    argument("q2", help="matrix file Q2"),
)
def pencil_equiv(args: Namespace) -> Report:
    files = get_matrix_file_service()
    reports = get_report_service()
    (p, q, p2, q2), texts = files.read_matrices(args.p, args.q, args.p2, args.q2)
    result = get_pencil_service().pencil_equivalent(Pencil(p, q), Pencil(p2, q2))
    transforms = {}
    transform_lines = []
    if result.h is not None:
        transforms = {"H": result.h, "K": result.k}
        transform_lines = [
            "Hᵀ(uP + vQ)K = uP2 + vQ2",
            *reports.matrix_lines("H", result.h),
            *reports.matrix_lines("K", result.k),
        ]
    return Report(
        kind="pencil-equiv",
        input_digest=reports.digest(*texts),
        invariants={"equivalent": result.equivalent, "note": result.note},
        transforms=transforms,
        lines=[
            "EQUIVALENT" if result.equivalent else "NOT EQUIVALENT",
            *([f"note: {result.note}"] if result.note else []),
        ],
        transform_lines=transform_lines,
    )


@pencil_router.command("pencil-canon", "Weierstrass canonical pencil of uP + vQ with X, Y", P, Q)
def pencil_canon(args: Namespace) -> Report:
    files = get_matrix_file_service()
    reports = get_report_service()
    (p, q), texts = files.read_matrices(args.p, args.q)
    reduction = get_pencil_service().canonical_reduction(Pencil(p, q))
    canonical = reduction.canonical
    return Report(
        kind="pencil-canon",
        input_digest=reports.digest(*texts),
        invariants={"P": canonical.p, "Q": canonical.q},
        transforms={"X": reduction.left, "Y": reduction.right},
        verified=reduction.verified,
        lines=[*reports.matrix_lines("P₀", canonical.p), *reports.matrix_lines("Q₀", canonical.q)],
        transform_lines=[
            "X(uP + vQ)Y = uP₀ + vQ₀",
            *reports.matrix_lines("X", reduction.left),
            *reports.matrix_lines("Y", reduction.right),
        ],
    )


@pencil_router.command(
    "kron-form",
    "Elementary bilinear form M of kind I, II or III and det(uM + vMᵀ)",
    argument("--kind", required=True, choices=[k.value for k in ElementaryFormKind]),
    argument("--size", required=True, type=int),
    argument("--a", default=None, help="form III parameter a"),
    argument("--b", default=None, help="form III parameter b"),
    argument("--modulus", type=int, default=None, help="work over GF(p) instead of Q"),
)
def kron_form(args: Namespace) -> Report:
    reports = get_report_service()
    domain = QQ if args.modulus is None else GF(args.modulus)
    kind = ElementaryFormKind(args.kind)
    a, b = _parameter(args.a, "a"), _parameter(args.b, "b")
    form = get_kronecker_service().kronecker_elementary_form(kind, args.size, a, b, domain)
    if form.sign is None:
        relation = "does not match ±expected"
    else:
        relation = f"= {'+' if form.sign > 0 else '−'}expected"
    return Report(
        kind="kron-form",
        input_digest=reports.digest(f"{kind.value} {args.size} {args.a} {args.b} {domain}"),
        invariants={
            "form": kind.value,
            "size": args.size,
            "matrix": form.matrix,
            "determinant": form.determinant,
            "expected": form.expected,
            "sign": form.sign,
        },
        verified=form.matches,
        lines=[
            *reports.matrix_lines("M", form.matrix),
            f"det(uM + vMᵀ) = {form.determinant}",
            f"expected {form.expected}; determinant {relation}",
        ],
    )


def _parameter(text: str | None, name: str) -> Fraction | None:
    if text is None:
        return None
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise InvalidParameterError(f"kron-form: --{name} {text!r} is not a rational number") from None
