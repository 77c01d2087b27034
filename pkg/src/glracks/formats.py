"""On-disk formats: structure records, checkpoints, and the bracketed
rack-library interchange syntax.

All files are line-oriented text.  Image arrays are written 1-based to match
printed tables; internal representation stays 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .glrack import GLFlags, GLRack, check_gl, down_map, flags as compute_flags
from .perm import Permutation, print_cycles
from .racks import Rack, RackError, check_rack

__all__ = [
    "StructureRecord",
    "RecordFormatError",
    "BracketParseError",
    "AmbiguousOrientationError",
    "parse_record_line",
    "format_record_line",
    "read_records",
    "write_records",
    "format_record_table",
    "append_checkpoint",
    "read_checkpoint",
    "parse_bracketed_lists",
    "ingest_rack_library",
]


class RecordFormatError(ValueError):
    """Malformed or inconsistent structure-record text."""


@dataclass(frozen=True)
class StructureRecord:
    """One rack or GL-rack, as stored in results files.

    On load, ``s`` must pass rack validation; when ``u`` is present the pair
    must pass GL validation; when ``d`` is present it must equal the derived
    down map exactly.
    """

    n: int
    s: tuple[tuple[int, ...], ...]  # 0-based image arrays
    u: Optional[tuple[int, ...]] = None
    d: Optional[tuple[int, ...]] = None
    flags: Optional[GLFlags] = None
    rack_index: Optional[int] = None

    def rack(self) -> Rack:
        return check_rack(self.n, self.s)

    def glrack(self) -> Optional[GLRack]:
        if self.u is None:
            return None
        return check_gl(self.rack(), Permutation(self.u))

    def validate(self) -> None:
        """Full cross-check; raises on any inconsistency."""
        rack = self.rack()
        if self.u is not None:
            gl = check_gl(rack, Permutation(self.u))
            if self.d is not None:
                derived = down_map(gl)
                if tuple(derived.images) != self.d:
                    raise RecordFormatError(
                        f"stored d {_one_based(self.d)} != derived down map "
                        f"{_one_based(derived.images)}"
                    )
            if self.flags is not None and compute_flags(gl) != self.flags:
                raise RecordFormatError("stored flags disagree with recomputation")
        elif self.d is not None:
            raise RecordFormatError("d present without u")


def _one_based(images: Sequence[int]) -> str:
    return ",".join(str(i + 1) for i in images)


def _parse_images(text: str, n: int, what: str) -> tuple[int, ...]:
    try:
        values = [int(t) for t in text.split(",")] if text else []
    except ValueError as exc:
        raise RecordFormatError(f"bad {what} array {text!r}") from exc
    if len(values) != n or sorted(values) != list(range(1, n + 1)):
        raise RecordFormatError(f"{what} array {text!r} is not 1-based over 1..{n}")
    return tuple(v - 1 for v in values)


_BOOL = {"0": False, "1": True, "true": True, "false": False}


def parse_record_line(line: str) -> StructureRecord:
    fields: dict[str, str] = {}
    for token in line.split():
        if "=" not in token:
            raise RecordFormatError(f"bad token {token!r} in record line")
        key, value = token.split("=", 1)
        if key in fields:
            raise RecordFormatError(f"duplicate field {key!r}")
        fields[key] = value
    if "n" not in fields or "s" not in fields:
        raise RecordFormatError("record line must carry n= and s=")
    try:
        n = int(fields.pop("n"))
    except ValueError as exc:
        raise RecordFormatError("bad n field") from exc
    rows = fields.pop("s").split(";") if n else []
    if n and len(rows) != n:
        raise RecordFormatError(f"expected {n} rows in s, got {len(rows)}")
    s = tuple(_parse_images(row, n, "s") for row in rows)
    u = _parse_images(fields.pop("u"), n, "u") if "u" in fields else None
    d = _parse_images(fields.pop("d"), n, "d") if "d" in fields else None
    rack_index = None
    if "rack" in fields:
        rack_index = int(fields.pop("rack"))
    fl = None
    flag_keys = ("quandle", "medial", "legendrian")
    if any(k in fields for k in flag_keys):
        if not all(k in fields for k in flag_keys):
            raise RecordFormatError("flags must be given all together or not at all")
        try:
            fl = GLFlags(
                gl_quandle=_BOOL[fields.pop("quandle").lower()],
                medial=_BOOL[fields.pop("medial").lower()],
                legendrian=_BOOL[fields.pop("legendrian").lower()],
            )
        except KeyError as exc:
            raise RecordFormatError(f"bad flag value: {exc}") from exc
    if fields:
        raise RecordFormatError(f"unknown fields: {sorted(fields)}")
    return StructureRecord(n=n, s=s, u=u, d=d, flags=fl, rack_index=rack_index)


def format_record_line(record: StructureRecord) -> str:
    parts = [f"n={record.n}"]
    if record.rack_index is not None:
        parts.append(f"rack={record.rack_index}")
    parts.append("s=" + ";".join(_one_based(row) for row in record.s))
    if record.u is not None:
        parts.append("u=" + _one_based(record.u))
    if record.d is not None:
        parts.append("d=" + _one_based(record.d))
    if record.flags is not None:
        parts.append(f"quandle={int(record.flags.gl_quandle)}")
        parts.append(f"medial={int(record.flags.medial)}")
        parts.append(f"legendrian={int(record.flags.legendrian)}")
    return " ".join(parts)


def read_records(path: str, validate: bool = True) -> list[StructureRecord]:
    records = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line or line.startswith("#") or line.startswith("watermark"):
                continue
            try:
                record = parse_record_line(line)
                if validate:
                    record.validate()
            except (RecordFormatError, RackError, ValueError) as exc:
                raise RecordFormatError(f"{path}:{lineno}: {exc}") from exc
            records.append(record)
    return records


def write_records(path: str, records: Iterable[StructureRecord]) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("# glracks structure records v1\n")
        for record in records:
            fh.write(format_record_line(record) + "\n")


def format_record_table(record: StructureRecord) -> str:
    """Human-readable one-liner in cycle notation, matching printed tables."""
    s_part = "[" + ",".join(
        print_cycles(Permutation(row)) for row in record.s
    ) + "]"
    parts = [f"n={record.n}", s_part]
    if record.u is not None:
        u_txt = print_cycles(Permutation(record.u))
        d_txt = print_cycles(Permutation(record.d)) if record.d is not None else "?"
        parts.append(f"[{u_txt},{d_txt}]")
    if record.flags is not None:
        parts.append(
            f"quandle={'yes' if record.flags.gl_quandle else 'no'} "
            f"medial={'yes' if record.flags.medial else 'no'} "
            f"legendrian={'yes' if record.flags.legendrian else 'no'}"
        )
    return "  ".join(parts)


# ---------------------------------------------------------------------------
# Checkpoints


def append_checkpoint(path: str, completed: list) -> None:
    """Append finished racks' records plus per-rack watermarks.

    ``completed`` holds ``(rack_index, class_records)`` pairs.
    """
    from .classify import ClassRecord  # local import to avoid a cycle

    with open(path, "a", encoding="utf-8") as fh:
        for rack_index, records in completed:
            for rec in records:
                sr = StructureRecord(
                    n=rec.n,
                    s=rec.rack.tables(),
                    u=rec.u.images,
                    d=rec.d.images,
                    flags=rec.flags,
                    rack_index=rec.rack_index,
                )
                fh.write(format_record_line(sr) + "\n")
            fh.write(f"watermark rack={rack_index}\n")


def read_checkpoint(path: str, racks: Sequence[Rack]):
    """Recover completed rack indices and their records from a checkpoint.

    Records after the last watermark for a rack not yet watermarked are
    discarded (the rack will be redone), so an interrupted run resumes to
    the same final output as an uninterrupted one.
    """
    from .classify import ClassRecord

    import os

    done: set[int] = set()
    records: list[ClassRecord] = []
    if not os.path.exists(path):
        return done, records
    pending: list[StructureRecord] = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if line.startswith("watermark"):
                token = line.split()[1]
                rack_index = int(token.split("=", 1)[1])
                done.add(rack_index)
                for sr in pending:
                    gl = sr.glrack()
                    records.append(
                        ClassRecord(
                            n=sr.n,
                            rack_index=sr.rack_index,
                            rack=gl.rack,
                            u=gl.u,
                            d=Permutation(sr.d),
                            flags=sr.flags,
                        )
                    )
                pending = []
            else:
                sr = parse_record_line(line)
                sr.validate()
                pending.append(sr)
    return done, records


# ---------------------------------------------------------------------------
# Bracketed-list interchange (external rack libraries)


class BracketParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class AmbiguousOrientationError(ValueError):
    """Both table orientations validate; an explicit flag is required."""


def parse_bracketed_lists(text: str):
    """Parse nested bracketed integer lists, e.g. ``[[[1,2],[2,1]], ...]``.

    Returns the top-level value (a possibly nested list of ints).  Errors
    carry 1-based line and column positions.
    """
    pos = 0
    line = 1
    col = 1
    length = len(text)

    def error(message: str):
        return BracketParseError(message, line, col)

    def advance(k: int = 1):
        nonlocal pos, line, col
        for _ in range(k):
            if pos < length and text[pos] == "\n":
                line += 1
                col = 1
            else:
                col += 1
            pos += 1

    def skip_ws():
        while pos < length and text[pos] in " \t\r\n":
            advance()

    def parse_value():
        skip_ws()
        if pos >= length:
            raise error("unexpected end of input")
        ch = text[pos]
        if ch == "[":
            advance()
            items = []
            skip_ws()
            if pos < length and text[pos] == "]":
                advance()
                return items
            while True:
                items.append(parse_value())
                skip_ws()
                if pos >= length:
                    raise error("unterminated list")
                if text[pos] == ",":
                    advance()
                    continue
                if text[pos] == "]":
                    advance()
                    return items
                raise error(f"expected ',' or ']', found {text[pos]!r}")
        if ch == "-" or ch.isdigit():
            start = pos
            if ch == "-":
                advance()
            if pos >= length or not text[pos].isdigit():
                raise error("malformed integer")
            while pos < length and text[pos].isdigit():
                advance()
            return int(text[start:pos])
        raise error(f"unexpected character {ch!r}")

    value = parse_value()
    skip_ws()
    if pos < length:
        raise error(f"trailing content {text[pos]!r}")
    return value


def _racks_from_tables(tables, transpose: bool) -> list[Rack]:
    """Interpret each table as 1-based s-rows (or s-columns if transposed)."""
    racks = []
    for table in tables:
        if not isinstance(table, list) or not all(isinstance(r, list) for r in table):
            raise RackError("each rack entry must be a list of integer rows")
        n = len(table)
        if any(len(row) != n for row in table):
            raise RackError(f"rack table is not square (order {n})")
        for row in table:
            for v in row:
                if not isinstance(v, int) or not 1 <= v <= n:
                    raise RackError(f"table entry {v!r} outside 1..{n}")
        if transpose:
            rows = [[table[x][y] - 1 for x in range(n)] for y in range(n)]
        else:
            rows = [[v - 1 for v in row] for row in table]
        racks.append(check_rack(n, rows))
    return racks


def ingest_rack_library(path: str, orientation: str = "auto") -> list[Rack]:
    """Load and validate racks from an external bracketed-list library file.

    ``orientation`` selects how a table entry ``T[x][y]`` is read:
    ``"rows"`` means ``s_x(y)``, ``"cols"`` means ``s_y(x)``, and ``"auto"``
    tries both and requires exactly one to validate across the whole file.
    """
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    tables = parse_bracketed_lists(text)
    if not isinstance(tables, list):
        raise RackError("library file must contain a top-level list of racks")
    if orientation == "rows":
        return _racks_from_tables(tables, transpose=False)
    if orientation == "cols":
        return _racks_from_tables(tables, transpose=True)
    if orientation != "auto":
        raise ValueError(f"unknown orientation {orientation!r}")
    outcomes = {}
    for name, transpose in (("rows", False), ("cols", True)):
        try:
            outcomes[name] = _racks_from_tables(tables, transpose)
        except RackError as exc:
            outcomes[name] = exc
    rows_ok = not isinstance(outcomes["rows"], Exception)
    cols_ok = not isinstance(outcomes["cols"], Exception)
    if rows_ok and cols_ok:
        # Identical interpretations (symmetric tables) are not ambiguous.
        if [r.tables() for r in outcomes["rows"]] == [
            r.tables() for r in outcomes["cols"]
        ]:
            return outcomes["rows"]
        raise AmbiguousOrientationError(
            "both orientations validate; pass orientation='rows' or 'cols'"
        )
    if rows_ok:
        return outcomes["rows"]
    if cols_ok:
        return outcomes["cols"]
    raise RackError(
        f"neither orientation validates: rows: {outcomes['rows']}; "
        f"cols: {outcomes['cols']}"
    )
