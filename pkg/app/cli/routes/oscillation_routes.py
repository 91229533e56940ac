from argparse import Namespace

from cli.routes.command_router import CommandRouter, argument
from cli.schemas.report import Report
from cli.services.matrix_file_service import get_matrix_file_service
from cli.services.report_service import get_report_service
from common.errors.exceptions import IrrationalSpectrumError
from common.log.logger import logger
from oscillations.services.oscillation_service import get_oscillation_service

oscillation_router = CommandRouter(tag="oscillations")


@oscillation_router.command(
    "oscillate",
    "Modes, stability verdicts and inertia of M·y'' + K·y = 0",
    argument("mass", help="matrix file M (symmetric positive definite)"),
    argument("stiffness", help="matrix file K (symmetric)"),
)
def oscillate(args: Namespace) -> Report:
    files = get_matrix_file_service()
    reports = get_report_service()
    oscillation_service = get_oscillation_service()

    (m, k), texts = files.read_matrices(args.mass, args.stiffness)
    system = oscillation_service.system(m, k)
    report = oscillation_service.mode_report(system)
    inertia = oscillation_service.inertia(k)
    verdicts = report.verdicts

    lines = report.render()
    lines.append(
        f"inertia of K: {inertia.signature} (positive, negative, zero) by {inertia.method.value}"
    )
    transforms = {}
    transform_lines = []
    verified = verdicts.real_rooted
    try:
        modal = oscillation_service.modal_congruence(system)
    except IrrationalSpectrumError as e:
        logger.info(f"No rational modal congruence: {e}")
        lines.append("note: spectrum is not rational, no rational modal congruence")
    else:
        verified = verified and modal.verified
        transforms["C"] = modal.transform
        transform_lines = [
            "CᵀMC and CᵀKC diagonal",
            *reports.matrix_lines("C", modal.transform),
            f"diag(CᵀMC) = ({', '.join(str(x) for x in modal.mass_diagonal)})",
            f"diag(CᵀKC) = ({', '.join(str(x) for x in modal.stiffness_diagonal)})",
        ]

    return Report(
        kind="oscillate",
        input_digest=reports.digest(*texts),
        invariants={
            "characteristic_polynomial": report.characteristic_polynomial,
            "roots": [
                {
                    "interval": r.interval.render(),
                    "multiplicity": r.multiplicity,
                    "minimal_polynomial": r.minimal_polynomial,
                }
                for r in verdicts.roots
            ],
            "modes": [
                {
                    "index": mode.index,
                    "kind": mode.kind.value,
                    "frequency": mode.frequency,
                    "degenerate": mode.vector.degenerate,
                    "vectors": [list(v.col(0)) for v in mode.vector.vectors],
                    "polynomial_vectors": mode.vector.polynomial_vectors,
                }
                for mode in report.modes
            ],
            "real_rooted": verdicts.real_rooted,
            "lagrange": verdicts.lagrange.value,
            "weierstrass": verdicts.weierstrass.value,
            "solution": report.solution,
            "inertia": list(inertia.signature),
        },
        transforms=transforms,
        verified=verified,
        lines=lines,
        transform_lines=transform_lines,
    )
