"""Append-only sign store plus the live co-occurrence table.

One record per line::

    <id> <saved_at ISO-8601Z> <SWT1 string>[ L"<label>"]

Ids are zero-padded 8-digit decimals assigned monotonically; the counter
is derived from the existing records at startup. The hint table is
derivable state: it is rebuilt from the records when the store opens and
advanced by record_sign on every save. The line is flushed and fsynced
*before* the in-memory record and table are installed, so a crash leaves
either both applied (after recovery-by-rebuild) or neither.

Startup is strict: a line that does not parse raises CorruptRecordError
with its line number rather than being skipped.
"""

from __future__ import annotations

import os
import re
import threading
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Callable, NamedTuple

from .catalog import Catalog
from .errors import CorruptRecordError, RecordNotFoundError, StorageError
from .hints import CooccurrenceTable, record_sign
from .notation import parse_text, serialize_text
from .sign import Sign

_ID_RE = re.compile(r"^\d{8}$")
_TS_FORMAT = "%Y-%m-%dT%H:%M:%SZ"


@dataclass(frozen=True)
class SignRecord:
    """A persisted sign plus its denormalized glyph list."""

    id: str
    sign: Sign
    saved_at: datetime
    glyph_list: tuple[str, ...]

    @classmethod
    def of(cls, record_id: str, sign: Sign, saved_at: datetime) -> SignRecord:
        return cls(
            id=record_id,
            sign=sign,
            saved_at=saved_at,
            glyph_list=tuple(p.glyph_id for p in sign.placements),
        )


class SignSummary(NamedTuple):
    id: str
    label: str | None
    saved_at: datetime
    glyph_count: int


def _escape_label(label: str) -> str:
    return label.replace("\\", "\\\\").replace('"', '\\"')


def _format_record(record: SignRecord) -> str:
    ts = record.saved_at.strftime(_TS_FORMAT)
    line = f"{record.id} {ts} {serialize_text(record.sign)}"
    if record.sign.label is not None:
        line += f' L"{_escape_label(record.sign.label)}"'
    return line


def _parse_label(tail: str, line_no: int) -> str:
    if not tail.startswith('L"') or not tail.endswith('"') or len(tail) < 3:
        raise CorruptRecordError(f"line {line_no}: malformed label field")
    body = tail[2:-1]
    out: list[str] = []
    i = 0
    while i < len(body):
        ch = body[i]
        if ch == "\\":
            if i + 1 >= len(body) or body[i + 1] not in '"\\':
                raise CorruptRecordError(f"line {line_no}: bad label escape")
            out.append(body[i + 1])
            i += 2
        elif ch == '"':
            raise CorruptRecordError(f"line {line_no}: unescaped quote in label")
        else:
            out.append(ch)
            i += 1
    return "".join(out)


def _parse_record(line: str, line_no: int, catalog: Catalog) -> SignRecord:
    parts = line.split(" ", 2)
    if len(parts) != 3:
        raise CorruptRecordError(f"line {line_no}: expected '<id> <timestamp> <notation>'")
    record_id, ts_text, rest = parts
    if not _ID_RE.match(record_id):
        raise CorruptRecordError(f"line {line_no}: malformed record id {record_id!r}")
    try:
        saved_at = datetime.strptime(ts_text, _TS_FORMAT).replace(tzinfo=timezone.utc)
    except ValueError:
        raise CorruptRecordError(f"line {line_no}: malformed timestamp {ts_text!r}") from None
    label: str | None = None
    space = rest.find(" ")
    if space != -1:
        swt, tail = rest[:space], rest[space + 1 :]
        label = _parse_label(tail, line_no)
    else:
        swt = rest
    try:
        sign = parse_text(swt, catalog)
    except Exception as exc:
        raise CorruptRecordError(f"line {line_no}: {exc}") from exc
    sign = Sign(
        canvas_w=sign.canvas_w,
        canvas_h=sign.canvas_h,
        placements=sign.placements,
        id=record_id,
        label=label,
    )
    return SignRecord.of(record_id, sign, saved_at)


class SignStore:
    """Single-writer persistent corpus; reads are lock-free snapshots."""

    def __init__(self, path: str | Path, catalog: Catalog, *, clock: Callable[[], datetime] | None = None):
        self.path = Path(path)
        self.catalog = catalog
        self._clock = clock or (lambda: datetime.now(timezone.utc))
        self._lock = threading.Lock()
        self._records: list[SignRecord] = []
        self._by_id: dict[str, SignRecord] = {}
        self._counter = 0
        self.table = CooccurrenceTable.empty()
        self._load()

    def _load(self) -> None:
        if not self.path.exists():
            return
        text = self.path.read_text(encoding="utf-8")
        table = CooccurrenceTable.empty()
        for line_no, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            record = _parse_record(line, line_no, self.catalog)
            if record.id in self._by_id:
                raise CorruptRecordError(f"line {line_no}: duplicate record id {record.id}")
            self._records.append(record)
            self._by_id[record.id] = record
            self._counter = max(self._counter, int(record.id))
            table = record_sign(table, record.sign, self.catalog)
        self._records.sort(key=lambda r: r.id)
        self.table = table

    # -- writes ----------------------------------------------------------

    def save(self, sign: Sign, label: str | None = None) -> SignRecord:
        """Persist the sign durably, assign its id, advance the hint table.

        The appended line hits disk before any in-memory state changes; a
        failed write aborts with store and table untouched.
        """
        if label is None:
            label = sign.label
        if label is not None and ("\n" in label or "\r" in label):
            raise StorageError("label must not contain newlines")
        for p in sign.placements:
            self.catalog.get_glyph(p.glyph_id)

        with self._lock:
            record_id = f"{self._counter + 1:08d}"
            saved_at = self._clock().astimezone(timezone.utc).replace(microsecond=0)
            stored_sign = Sign(
                canvas_w=sign.canvas_w,
                canvas_h=sign.canvas_h,
                placements=sign.placements,
                id=record_id,
                label=label,
            )
            record = SignRecord.of(record_id, stored_sign, saved_at)
            line = _format_record(record)
            try:
                with open(self.path, "a", encoding="utf-8") as fh:
                    fh.write(line + "\n")
                    fh.flush()
                    os.fsync(fh.fileno())
            except OSError as exc:
                raise StorageError(f"could not persist record: {exc}") from exc
            new_table = record_sign(self.table, stored_sign, self.catalog)
            self._counter += 1
            self._records.append(record)
            self._by_id[record_id] = record
            self.table = new_table
            return record

    # -- reads -----------------------------------------------------------

    @property
    def sign_total(self) -> int:
        return len(self._records)

    def load(self, record_id: str) -> SignRecord:
        try:
            return self._by_id[record_id]
        except KeyError:
            raise RecordNotFoundError(record_id) from None

    def list_signs(self, offset: int = 0, limit: int = 50) -> list[SignSummary]:
        """Stable id-ascending page of record summaries."""
        if offset < 0:
            raise ValueError(f"offset must be >= 0, got {offset}")
        if limit < 1:
            raise ValueError(f"limit must be >= 1, got {limit}")
        page = self._records[offset : offset + limit]
        return [
            SignSummary(r.id, r.sign.label, r.saved_at, len(r.glyph_list))
            for r in page
        ]

    def all_signs(self) -> list[Sign]:
        """Every stored sign, id-ascending (rebuild oracle input)."""
        return [r.sign for r in self._records]
