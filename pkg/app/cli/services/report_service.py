import hashlib
import json
from typing import Any

from algebra.models.binary_form import BinaryForm, HomogeneousPoint
from algebra.models.domain import FieldScalar
from algebra.models.poly import Poly
from cli.config.cli_config import cli_settings
from cli.schemas.report import Report
from matrix.models.mat import Mat
from pencil.schemas.pencil_invariants import PencilDivisor
from smith.schemas.divisor_data import ElementaryDivisor


class ReportService:
    def __init__(self, indent: int) -> None:
        self._indent = indent

    def digest(self, *texts: str) -> str:
        h = hashlib.sha256()
        for text in texts:
            h.update(text.encode("utf-8"))
            h.update(b"\0")
        return h.hexdigest()

    def plain(self, value: Any) -> Any:
        """JSON-ready value: polynomials in machine syntax, matrices as row-major string grids."""
        match value:
            case bool() | int() | str() | None:
                return value
            case Mat():
                return [[self._entry(x) for x in row] for row in value.rows()]
            case Poly() | BinaryForm() | ElementaryDivisor() | PencilDivisor():
                return value.render(machine=True)
            case FieldScalar() | HomogeneousPoint():
                return str(value)
            case dict():
                return {str(k): self.plain(v) for k, v in value.items()}
            case list() | tuple():
                return [self.plain(x) for x in value]
            case _:
                return str(value)

    def _entry(self, x: Any) -> str:
        return x.render(machine=True) if isinstance(x, Poly) else str(x)

    def matrix_lines(self, name: str, m: Mat) -> list[str]:
        body = m.render().splitlines()
        pad = " " * (len(name) + 3)
        return [f"{name} = {body[0]}"] + [pad + line for line in body[1:]]

    def to_json(self, report: Report, with_transforms: bool = True) -> str:
        data = report.model_dump(include={"kind", "input_digest", "verified"})
        data["invariants"] = self.plain(report.invariants)
        data["transforms"] = self.plain(report.transforms) if with_transforms else {}
        return json.dumps(data, sort_keys=True, ensure_ascii=False, indent=self._indent)

    def to_text(self, report: Report, with_transforms: bool = True) -> str:
        lines = list(report.lines)
        if with_transforms:
            lines.extend(report.transform_lines)
        return "\n".join(lines)

    def render(self, report: Report, as_json: bool, with_transforms: bool) -> str:
        if as_json:
            return self.to_json(report, with_transforms)
        return self.to_text(report, with_transforms)


def get_report_service() -> ReportService:
    return ReportService(indent=cli_settings.JSON_INDENT)
