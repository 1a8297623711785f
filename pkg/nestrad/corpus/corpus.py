import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from pathlib import Path

from tqdm import tqdm

from nestrad.algebra.element import RadicalElement
from nestrad.config import DEFAULT_PRECISION
from nestrad.errors import CorpusError, NestradError
from nestrad.identity.engine import interestingness, numeric_agreement, verify_record
from nestrad.identity.records import IdentityRecord, Status, side_terms
from nestrad.parser.lower import NestedClaim, QuotientClaim, lower_text

logger = logging.getLogger(__name__)

DEFAULT_CORPUS = Path(__file__).parent / "data" / "identities.jsonl"
EXPECTATIONS = ("verified", "refuted")
FIELDS = ("id", "lhs", "rhs", "expect", "source")


@dataclass(frozen=True)
class CorpusEntry:
    id: str
    lhs: str
    rhs: str
    expect: str
    source: str = ""


@dataclass(frozen=True)
class EntryResult:
    id: str
    status: str
    lhs_terms: int
    rhs_terms: int
    interesting: bool
    elapsed_ms: float
    expect: str
    numeric_agreement: bool | None = None
    note: str = ""

    @property
    def is_error(self) -> bool:
        return self.status in ("error", Status.INDETERMINATE)

    @property
    def matches(self) -> bool:
        """True if the status agrees with the expectation of the corpus entry."""
        if self.expect == "verified":
            return self.status == Status.VERIFIED
        return self.status in (Status.REFUTED, Status.REFUTED_BRANCH)


def parse_entry(line: str, line_number: int) -> CorpusEntry:
    try:
        data = json.loads(line)
    except json.JSONDecodeError as e:
        raise CorpusError(line_number, f"invalid JSON ({e.msg})") from e
    if not isinstance(data, dict):
        raise CorpusError(line_number, "entry is not a JSON object")
    missing = [name for name in FIELDS[:4] if not isinstance(data.get(name), str)]
    if missing:
        raise CorpusError(line_number, f"missing or non-string fields {missing}")
    if data["expect"] not in EXPECTATIONS:
        raise CorpusError(line_number, f"expect must be one of {EXPECTATIONS}")
    for side in ("lhs", "rhs"):
        try:
            lower_text(data[side])
        except (NestradError, ZeroDivisionError) as e:
            raise CorpusError(line_number, f"{side} does not parse: {e}") from e
    return CorpusEntry(**{name: data.get(name, "") for name in FIELDS})


def load_corpus(path: Path) -> tuple[list[CorpusEntry], list[CorpusError]]:
    """
    Read a JSON Lines corpus. Blank lines are ignored.

    Args:
        path (Path): the corpus file

    Returns:
        tuple[list[CorpusEntry], list[CorpusError]]: the valid entries in file order,
            and one error per malformed line (bad JSON, missing fields, duplicate id,
            an expression that does not parse)
    """
    entries: list[CorpusEntry] = []
    errors: list[CorpusError] = []
    seen: set[str] = set()
    with open(path, encoding="utf-8") as f:
        for line_number, line in enumerate(f, start=1):
            if not line.strip():
                continue
            try:
                entry = parse_entry(line, line_number)
                if entry.id in seen:
                    raise CorpusError(line_number, f"duplicate id {entry.id}")
            except CorpusError as e:
                logger.error(str(e))
                errors.append(e)
                continue
            seen.add(entry.id)
            entries.append(entry)
    logger.info(f"Loaded {len(entries)} entries from {path} ({len(errors)} malformed)")
    return entries, errors


def entry_record(entry: CorpusEntry) -> IdentityRecord:
    """
    The unverified record of an entry. An element on the left-hand side becomes the
    degree 1 claim; a root of a quotient on the right-hand side is flattened.
    """
    lhs = lower_text(entry.lhs)
    rhs = lower_text(entry.rhs)
    claim = NestedClaim(1, lhs) if isinstance(lhs, RadicalElement) else lhs
    if isinstance(rhs, QuotientClaim):
        rhs = rhs.flatten()
    return IdentityRecord(entry.id, claim, rhs, source=entry.source)


def run_entry(entry: CorpusEntry, precision_bits: int = DEFAULT_PRECISION) -> EntryResult:
    start = time.perf_counter()
    try:
        record = verify_record(entry_record(entry))
        numeric = None
        if record.status == Status.VERIFIED:
            numeric = numeric_agreement(record, precision_bits)
            score = interestingness(record)
            lhs_terms, rhs_terms, interesting = (
                score.lhs_terms,
                score.rhs_terms,
                score.interesting,
            )
        else:
            lhs_terms, rhs_terms = side_terms(record.claim), side_terms(record.rhs)
            interesting = False
        status, note = str(record.status), record.note
    except (NestradError, ZeroDivisionError) as e:
        logger.error(f"Entry {entry.id} failed: {e}")
        status, note, numeric = "error", str(e), None
        lhs_terms = rhs_terms = 0
        interesting = False
    elapsed = (time.perf_counter() - start) * 1000
    if numeric is False:
        logger.error(f"Entry {entry.id} verified exactly but disagrees numerically")
    logger.debug(f"Entry {entry.id}: {status} in {elapsed:.1f} ms")
    return EntryResult(
        entry.id,
        status,
        lhs_terms,
        rhs_terms,
        interesting,
        round(elapsed, 3),
        entry.expect,
        numeric,
        note,
    )


def run_corpus(
    entries: list[CorpusEntry],
    workers: int = 1,
    progress: bool = True,
    precision_bits: int = DEFAULT_PRECISION,
) -> list[EntryResult]:
    """
    Verify every entry. Results follow corpus order whatever the number of workers.

    Args:
        entries (list[CorpusEntry]): the entries
        workers (int, optional): processes. Defaults to 1.
        progress (bool, optional): show a progress bar. Defaults to True.
        precision_bits (int, optional): precision of the numeric cross-check.
            Defaults to DEFAULT_PRECISION.

    Returns:
        list[EntryResult]: one result per entry
    """
    logger.info(f"Verifying {len(entries)} entries")
    run = partial(run_entry, precision_bits=precision_bits)
    bar = partial(tqdm, total=len(entries), desc="Verifying", disable=not progress)
    if workers > 1 and len(entries) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            results = list(bar(executor.map(run, entries)))
    else:
        results = [run(entry) for entry in bar(entries)]
    mismatched = [r.id for r in results if not r.matches]
    logger.info(f"Verified {len(results)} entries, {len(mismatched)} unexpected")
    return results
