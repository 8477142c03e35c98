"""Reference ground-state root tables bundled with the package.

Four separation scans at fixed wedge angles (pi/2, pi/6, pi/3, pi/8)
ship as CSV data: 20 rows each over r = 0 ... 3.0 Bohr, with the root x
quoted to 7 decimals.  They serve as the regression anchor for the
secular solver and as the comparison target of the ``validate`` command.
"""

import csv
import math
from importlib import resources

__all__ = ["REFERENCE_ALPHAS", "load_reference_roots", "reference_keys"]

REFERENCE_ALPHAS: dict[str, float] = {
    "pi/2": math.pi / 2.0,
    "pi/6": math.pi / 6.0,
    "pi/3": math.pi / 3.0,
    "pi/8": math.pi / 8.0,
}

_FILES: dict[str, str] = {
    "pi/2": "roots_alpha_pi_over_2.csv",
    "pi/6": "roots_alpha_pi_over_6.csv",
    "pi/3": "roots_alpha_pi_over_3.csv",
    "pi/8": "roots_alpha_pi_over_8.csv",
}


def reference_keys() -> tuple[str, ...]:
    """The wedge-angle labels with bundled tables, in bundled order."""
    return tuple(_FILES)


def load_reference_roots(key: str) -> list[tuple[float, float]]:
    """(r, x) rows of the bundled table for a wedge-angle label.

    Args:
        key: one of the labels in :data:`REFERENCE_ALPHAS`, e.g. "pi/6".

    Raises:
        ValueError: for an unknown label.
    """
    try:
        filename = _FILES[key]
    except KeyError:
        known = ", ".join(sorted(_FILES))
        raise ValueError(f"unknown reference table {key!r}; known: {known}") from None
    text = resources.files(__package__).joinpath("data", filename).read_text()
    rows: list[tuple[float, float]] = []
    reader = csv.reader(
        line for line in text.splitlines() if line and not line.startswith("#")
    )
    header = next(reader)
    if header != ["R", "x"]:
        raise ValueError(f"unexpected header in {filename}: {header!r}")
    for record in reader:
        rows.append((float(record[0]), float(record[1])))
    return rows
