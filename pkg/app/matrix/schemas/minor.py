from typing import Any, NamedTuple


class Minor(NamedTuple):
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    value: Any
