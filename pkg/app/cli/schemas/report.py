from typing import Any

from pydantic import BaseModel, ConfigDict, Field


class Report(BaseModel):
    """What one subcommand emits; ``lines`` and ``transform_lines`` are the human rendering."""

    kind: str
    input_digest: str
    invariants: dict[str, Any]
    transforms: dict[str, Any] = Field(default_factory=dict)
    verified: bool = True

    lines: list[str] = Field(default_factory=list, exclude=True)
    transform_lines: list[str] = Field(default_factory=list, exclude=True)

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)
