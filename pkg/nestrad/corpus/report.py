import json
from dataclasses import dataclass, field
from typing import Any

import pandas as pd

from nestrad.corpus.corpus import EntryResult
from nestrad.identity.records import Status

ENTRY_FIELDS = ("id", "status", "lhs_terms", "rhs_terms", "interesting", "elapsed_ms")


def summarize(entries: list[EntryResult], structural_errors: int = 0) -> dict[str, int]:
    return {
        "verified": sum(r.status == Status.VERIFIED for r in entries),
        "refuted": sum(
            r.status in (Status.REFUTED, Status.REFUTED_BRANCH) for r in entries
        ),
        "errors": sum(r.is_error for r in entries) + structural_errors,
        "unexpected": sum(not r.matches for r in entries),
    }


@dataclass
class RunReport:
    """The outcome of a corpus run, serializable with `to_json`."""

    entries: list[EntryResult]
    version: str
    precision: int
    structural_errors: list[str] = field(default_factory=list)

    @property
    def summary(self) -> dict[str, int]:
        return summarize(self.entries, len(self.structural_errors))

    @property
    def ok(self) -> bool:
        return not self.structural_errors and all(r.matches for r in self.entries)

    def to_dict(self) -> dict[str, Any]:
        entries = []
        for r in self.entries:
            data = {name: getattr(r, name) for name in ENTRY_FIELDS}
            data["status"] = str(r.status)
            data["expect"] = r.expect
            entries.append(data)
        return {
            "version": self.version,
            "precision": self.precision,
            "entries": entries,
            "summary": self.summary,
            "structural_errors": self.structural_errors,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_frame(self) -> pd.DataFrame:
        df = pd.DataFrame.from_records(
            [{name: getattr(r, name) for name in ENTRY_FIELDS} for r in self.entries],
            columns=list(ENTRY_FIELDS),
        )
        df["expect"] = [r.expect for r in self.entries]
        df["match"] = [r.matches for r in self.entries]
        return df

    def __str__(self) -> str:
        summary = ", ".join(f"{k}: {v}" for k, v in self.summary.items())
        if not self.entries:
            return f"no entries ({summary})"
        return f"{self.to_frame().to_string(index=False)}\n\n{summary}"
