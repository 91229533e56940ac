import json

from algebra.models.domain import QQ
from cli.schemas.report import Report
from cli.services.report_service import ReportService, get_report_service
from matrix.models.mat import Mat
from matrix.services.matrix_service import MatrixService
from support import lam, qmat


def test_digest_separates_inputs() -> None:
    reports = get_report_service()
    assert reports.digest("ab", "c") != reports.digest("a", "bc")
    assert reports.digest("x") == reports.digest("x")


def test_plain_values(matrix_service: MatrixService) -> None:
    reports = get_report_service()
    char = matrix_service.characteristic_matrix(qmat([[1, 2], [0, 3]]))
    assert reports.plain(char) == [["x-1", "-2"], ["0", "x-3"]]
    assert reports.plain({"f": lam(1, 0, -2), "flag": True, "n": [1, None]}) == {
        "f": "x^2-2",
        "flag": True,
        "n": [1, None],
    }
    assert reports.plain(QQ(-1) / 2) == "-1/2"


def test_json_is_sorted_and_drops_transforms_on_request() -> None:
    reports = ReportService(indent=2)
    report = Report(
        kind="rcf",
        input_digest="abc",
        invariants={"z": 1, "a": Mat.identity(1, QQ)},
        transforms={"T": Mat.identity(1, QQ)},
        lines=["hidden"],
    )
    full = json.loads(reports.to_json(report))
    assert full == {
        "kind": "rcf",
        "input_digest": "abc",
        "verified": True,
        "invariants": {"a": [["1"]], "z": 1},
        "transforms": {"T": [["1"]]},
    }
    assert json.loads(reports.to_json(report, with_transforms=False))["transforms"] == {}
    assert reports.to_json(report) == reports.to_json(report)


def test_text_rendering() -> None:
    reports = get_report_service()
    report = Report(kind="x", input_digest="", invariants={}, lines=["a"], transform_lines=["b"])
    assert reports.render(report, as_json=False, with_transforms=True) == "a\nb"
    assert reports.render(report, as_json=False, with_transforms=False) == "a"
    lines = reports.matrix_lines("T", qmat([[1, 0], [0, 1]]))
    assert lines[0].startswith("T = ")
    assert all(line.startswith("    ") for line in lines[1:])
