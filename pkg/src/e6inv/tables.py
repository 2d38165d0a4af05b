"""Shipped data tables and the errata file format.

Tables are pipe-separated text files in src/e6inv/data/ with '#' comments;
polynomials use the e6inv.poly text format.  An errata file maps check ids
to corrected right-hand sides:

    id | corrected_rhs | note [| author]

Every loaded erratum must itself verify to zero residual when applied; a
failing erratum is reported as bad-erratum and fails the run.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path


def load_table(filename: str, ncols: int) -> list[list[str]]:
    text = resources.files("e6inv.data").joinpath(filename).read_text()
    return parse_table(text, ncols, filename)


def parse_table(text: str, ncols: int, source: str) -> list[list[str]]:
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = [p.strip() for p in line.split("|")]
        if len(parts) < ncols:
            raise ValueError(f"{source}:{lineno}: expected {ncols} columns")
        rows.append(parts)
    return rows


@dataclass
class Erratum:
    check_id: str
    corrected_rhs: str
    note: str
    author: str = ""


class Errata:
    """Corrections keyed by check id; shipped file by default."""

    def __init__(self, entries: dict[str, Erratum]):
        self.entries = entries
        self.used: set[str] = set()

    @classmethod
    def load(cls, path: str | Path | None = None) -> "Errata":
        if path is None:
            text = resources.files("e6inv.data").joinpath("corrections.txt").read_text()
            source = "corrections.txt"
        else:
            text = Path(path).read_text()
            source = str(path)
        entries = {}
        for row in parse_table(text, 3, source):
            entries[row[0]] = Erratum(
                row[0], row[1], row[2], row[3] if len(row) > 3 else ""
            )
        return cls(entries)

    @classmethod
    def empty(cls) -> "Errata":
        return cls({})

    def get(self, check_id: str) -> Erratum | None:
        e = self.entries.get(check_id)
        if e is not None:
            self.used.add(check_id)
        return e
