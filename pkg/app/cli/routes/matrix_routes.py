from argparse import Namespace

from canonical.enum.form_kind import FormKind
from canonical.schemas.canonical_result import CanonicalResult
from canonical.services.canonical_service import get_canonical_service
from cli.routes.command_router import CommandRouter, argument
from cli.schemas.report import Report
from cli.services.matrix_file_service import get_matrix_file_service
from cli.services.report_service import get_report_service
from matrix.services.matrix_service import get_matrix_service
from smith.services.smith_service import get_smith_service

matrix_router = CommandRouter(tag="matrix")

MATRIX = argument("matrix", help="matrix file")


@matrix_router.command(
    "smith",
    "Smith normal form of λI − A with unimodular U, V (or of A itself over Z)",
    MATRIX,
    argument("--integer", action="store_true", help="treat A as an integer matrix"),
)
def smith(args: Namespace) -> Report:
    files = get_matrix_file_service()
    reports = get_report_service()
    smith_service = get_smith_service()
    matrix_service = get_matrix_service()

    a, text = files.read_matrix(args.matrix)
    if args.integer:
        m = files.to_integer(a)
        data = smith_service.integer_divisor_data(m)
    else:
        m = matrix_service.characteristic_matrix(a)
        data = smith_service.polynomial_divisor_data(m, str(a.domain))
    result = smith_service.smith_form(m)
    verified = (
        result.u @ m @ result.v == result.s
        and smith_service.is_unimodular(result.u)
        and smith_service.is_unimodular(result.v)
    )
    subject = "A" if args.integer else "λI − A"
    return Report(
        kind="smith",
        input_digest=reports.digest(text),
        invariants={
            "domain": data.domain,
            "rank": data.rank,
            "diagonal": result.diagonal,
            "gcd_chain": data.gcd_chain,
            "elementary_divisors": data.elementary_divisors,
        },
        transforms={"U": result.u, "V": result.v},
        verified=verified,
        lines=[
            f"S = diag({', '.join(str(d) for d in result.diagonal)})",
            f"elementary divisors: {data.render_elementary_divisors() or 'none'}",
        ],
        transform_lines=[
            f"U·({subject})·V = S",
            *reports.matrix_lines("U", result.u),
            *reports.matrix_lines("V", result.v),
        ],
    )


@matrix_router.command("invfactors", "Invariant factors and the determinantal divisor chain of λI − A", MATRIX)
def invfactors(args: Namespace) -> Report:
    files = get_matrix_file_service()
    a, text = files.read_matrix(args.matrix)
    data = get_smith_service().divisor_data(a)
    nontrivial = data.nontrivial_invariant_factors
    return Report(
        kind="invfactors",
        input_digest=get_report_service().digest(text),
        invariants={"invariant_factors": nontrivial, "gcd_chain": data.gcd_chain},
        lines=[
            f"invariant factors: {', '.join(str(f) for f in nontrivial)}",
            *(f"D{k} = {d}" for k, d in enumerate(data.gcd_chain, start=1)),
        ],
    )


@matrix_router.command("eldiv", "Elementary divisors of λI − A", MATRIX)
def eldiv(args: Namespace) -> Report:
    files = get_matrix_file_service()
    a, text = files.read_matrix(args.matrix)
    data = get_smith_service().divisor_data(a)
    lines = [data.render_elementary_divisors()]
    if data.unsplit:
        lines.append("note: some factors exceed the factoring degree cap and are reported unsplit")
    return Report(
        kind="eldiv",
        input_digest=get_report_service().digest(text),
        invariants={
            "domain": data.domain,
            "elementary_divisors": data.elementary_divisors,
            "unsplit": data.unsplit,
        },
        lines=lines,
    )


def _canonical_report(args: Namespace, kind: FormKind) -> Report:
    files = get_matrix_file_service()
    reports = get_report_service()
    canonical_service = get_canonical_service()

    a, text = files.read_matrix(args.matrix)
    match kind:
        case FormKind.RATIONAL:
            result: CanonicalResult = canonical_service.rational_canonical_form(a)
        case FormKind.PRIMARY:
            result = canonical_service.primary_form(a)
        case FormKind.JORDAN:
            result = canonical_service.jordan_form(a)
    blocks = [b.render() for b in result.blocks]
    invariants = {"blocks": blocks, "form": result.matrix}
    lines = [f"{kind.title()}: {' ⊕ '.join(blocks)}", *reports.matrix_lines("F", result.matrix)]
    if result.jordan is not None:
        invariants["jordan"] = [[value, sizes] for value, sizes in result.jordan.blocks]
        lines.append(f"block sizes: {result.jordan.render()}")
    return Report(
        kind=kind.value,
        input_digest=reports.digest(text),
        invariants=invariants,
        transforms={"T": result.transform},
        verified=result.verified,
        lines=lines,
        transform_lines=["A·T = T·F", *reports.matrix_lines("T", result.transform)],
    )


@matrix_router.command("rcf", "Frobenius form: companion blocks of the invariant factors", MATRIX)
def rcf(args: Namespace) -> Report:
    return _canonical_report(args, FormKind.RATIONAL)


@matrix_router.command("primary", "Primary rational form: one block per elementary divisor", MATRIX)
def primary(args: Namespace) -> Report:
    return _canonical_report(args, FormKind.PRIMARY)


@matrix_router.command("jordan", "Jordan form; refused when a divisor has no root in the field", MATRIX)
def jordan(args: Namespace) -> Report:
    return _canonical_report(args, FormKind.JORDAN)


@matrix_router.command(
    "similar",
    "Decide similarity of A and B and exhibit W with A·W = W·B",
    argument("first", help="matrix file A"),
    argument("second", help="matrix file B"),
)
def similar(args: Namespace) -> Report:
    files = get_matrix_file_service()
    reports = get_report_service()
    (a, b), texts = files.read_matrices(args.first, args.second)
    result = get_canonical_service().similar(a, b)
    transforms = {}
    transform_lines = []
    if result.similar:
        transforms["W"] = result.witness
        transform_lines = ["A·W = W·B", *reports.matrix_lines("W", result.witness)]
    return Report(
        kind="similar",
        input_digest=reports.digest(*texts),
        invariants={
            "similar": result.similar,
            "invariant_factors_a": result.invariants_a,
            "invariant_factors_b": result.invariants_b,
        },
        transforms=transforms,
        verified=result.verified or not result.similar,
        lines=[
            "SIMILAR" if result.similar else "NOT SIMILAR",
            f"invariant factors of A: {', '.join(str(f) for f in result.invariants_a)}",
            f"invariant factors of B: {', '.join(str(f) for f in result.invariants_b)}",
        ],
        transform_lines=transform_lines,
    )
