"""Command-line surface: validation, enumeration, classification, reports.

Exit codes: 0 success/exhaustive, 1 validation failure, 2 budget exceeded or
non-exhaustive result, 3 I/O or parse error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from . import classify as _classify
from . import formats
from .formats import StructureRecord, RecordFormatError
from .functors import functor_f, functor_g
from .glrack import down_map, flags
from .morphisms import aut_group, enumerate_homs, hom_rack, inn_group
from .perm import print_cycles
from .racks import RackError, associated_quandle, medialization

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_NONEXHAUSTIVE = 2
EXIT_IO = 3


def _load_records(path: str, validate: bool = True) -> list[StructureRecord]:
    try:
        return formats.read_records(path, validate=validate)
    except FileNotFoundError as exc:
        raise SystemExit(_fail(str(exc), EXIT_IO))
    except RecordFormatError as exc:
        raise SystemExit(_fail(str(exc), EXIT_INVALID))


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _emit_records(records: list[StructureRecord], out: Optional[str], table: bool) -> None:
    if out is not None:
        formats.write_records(out, records)
    else:
        for rec in records:
            print(
                formats.format_record_table(rec) if table else formats.format_record_line(rec)
            )


def _record_for_class(rec: _classify.ClassRecord) -> StructureRecord:
    return StructureRecord(
        n=rec.n,
        s=rec.rack.tables(),
        u=rec.u.images,
        d=rec.d.images,
        flags=rec.flags,
        rack_index=rec.rack_index,
    )


def cmd_check(args) -> int:
    try:
        with open(args.file, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        return _fail(str(exc), EXIT_IO)
    violations = 0
    count = 0
    for lineno, line in enumerate(lines, start=1):
        line = line.strip()
        if not line or line.startswith("#") or line.startswith("watermark"):
            continue
        count += 1
        try:
            record = formats.parse_record_line(line)
            record.validate()
        except (RecordFormatError, RackError, ValueError) as exc:
            violations += 1
            print(f"{args.file}:{lineno}: INVALID: {exc}")
            continue
        print(f"{args.file}:{lineno}: ok")
    print(f"{count - violations}/{count} structures valid")
    return EXIT_OK if violations == 0 else EXIT_INVALID


def cmd_classify(args) -> int:
    if args.n > _classify.LONG_RUN_THRESHOLD and not args.long_run:
        return _fail(f"order {args.n} requires --long-run", EXIT_NONEXHAUSTIVE)
    racks = None
    if args.source != "enumerate":
        try:
            racks = formats.ingest_rack_library(args.source)
        except (OSError, formats.BracketParseError) as exc:
            return _fail(str(exc), EXIT_IO)
        except (RackError, formats.AmbiguousOrientationError) as exc:
            return _fail(str(exc), EXIT_INVALID)
        if any(r.n != args.n for r in racks):
            return _fail("library racks do not all have the requested order", EXIT_INVALID)
    try:
        result = _classify.classify_gl(
            args.n,
            racks,
            quandles_only=args.quandles,
            medial_only=args.medial,
            long_run=args.long_run,
            jobs=args.jobs,
            checkpoint_path=args.checkpoint,
        )
    except MemoryError:
        return _fail("classification ran out of memory", EXIT_NONEXHAUSTIVE)
    _emit_records([_record_for_class(r) for r in result.records], args.out, args.table)
    if result.exhaustive and args.source == "enumerate" and not (args.quandles or args.medial):
        report = _classify.count_report(args.n, result)
        print(
            f"n={report.n} g={report.g} g_m={report.g_m} g_q={report.g_q} "
            f"g_qm={report.g_qm} r={report.r} r_m={report.r_m} "
            f"r_q={report.r_q} r_qm={report.r_qm}"
        )
    else:
        print(f"n={args.n} records={len(result.records)}")
    if not result.exhaustive:
        for diag in result.diagnostics:
            print(f"non-exhaustive: {diag}", file=sys.stderr)
        return EXIT_NONEXHAUSTIVE
    return EXIT_OK


def cmd_enumerate_racks(args) -> int:
    if args.n > _classify.LONG_RUN_THRESHOLD and not args.long_run:
        return _fail(f"order {args.n} requires --long-run", EXIT_NONEXHAUSTIVE)
    racks = _classify.enumerate_racks(args.n, long_run=args.long_run)
    records = [
        StructureRecord(n=args.n, s=r.tables(), rack_index=i)
        for i, r in enumerate(racks)
    ]
    _emit_records(records, args.out, args.table)
    print(f"n={args.n} racks={len(racks)}")
    return EXIT_OK


def cmd_aut(args) -> int:
    for rec in _load_records(args.file):
        rack = rec.rack()
        aut = aut_group(rack)
        inn = inn_group(rack)
        print(f"n={rec.n} |Aut|={aut.order} |Inn|={inn.order}")
    return EXIT_OK


def cmd_glstructures(args) -> int:
    for rec in _load_records(args.file):
        rack = rec.rack()
        aut = aut_group(rack)
        structures = _classify.gl_structures(rack, aut)
        classes = _classify.gl_classes(rack, aut)
        reps = " ".join(print_cycles(u) for u, _size in classes)
        print(
            f"n={rec.n} structures={structures.order} classes={len(classes)} reps=[{reps}]"
        )
    return EXIT_OK


def cmd_functor(args) -> int:
    out_records = []
    for rec in _load_records(args.file):
        if args.direction == "f":
            gl = functor_f(rec.rack())
            out_records.append(
                StructureRecord(
                    n=gl.n,
                    s=gl.rack.tables(),
                    u=gl.u.images,
                    d=down_map(gl).images,
                    flags=flags(gl),
                )
            )
        else:
            gl = rec.glrack()
            if gl is None:
                return _fail("functor g requires records with a u field", EXIT_INVALID)
            rack = functor_g(gl)
            out_records.append(StructureRecord(n=rack.n, s=rack.tables()))
    _emit_records(out_records, args.out, args.table)
    return EXIT_OK


def cmd_hom(args) -> int:
    source_recs = _load_records(args.source)
    target_recs = _load_records(args.target)
    if len(source_recs) != 1 or len(target_recs) != 1:
        return _fail("hom expects exactly one structure per file", EXIT_INVALID)
    source = source_recs[0].rack()
    target = target_recs[0].rack()
    if args.rack_structure:
        rack, homs = hom_rack(source, target)
        print(f"homs={len(homs)}")
        print(
            formats.format_record_line(StructureRecord(n=rack.n, s=rack.tables()))
        )
    else:
        homs = enumerate_homs(source, target)
        for phi in homs:
            print(",".join(str(v + 1) for v in phi) if phi else "()")
        print(f"homs={len(homs)}")
    return EXIT_OK


def cmd_quotient(args) -> int:
    out_records = []
    for rec in _load_records(args.file):
        rack = rec.rack()
        if args.kind == "assoc":
            quotient, proj = associated_quandle(rack)
        else:
            quotient, proj = medialization(rack)
        out_records.append(StructureRecord(n=quotient.n, s=quotient.tables()))
        print("projection:", ",".join(str(v + 1) for v in proj))
    _emit_records(out_records, args.out, args.table)
    return EXIT_OK


def cmd_count(args) -> int:
    if args.n > _classify.LONG_RUN_THRESHOLD and not args.long_run:
        return _fail(f"order {args.n} requires --long-run", EXIT_NONEXHAUSTIVE)
    report = _classify.count_report(args.n, long_run=args.long_run, jobs=args.jobs)
    print(
        f"n={report.n} g={report.g} g_m={report.g_m} g_q={report.g_q} "
        f"g_qm={report.g_qm} r={report.r} r_m={report.r_m} "
        f"r_q={report.r_q} r_qm={report.r_qm}"
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="glracks", description="Finite rack and GL-rack computations."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate a structure-record file")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("classify", help="classify GL-racks of a given order")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--source", default="enumerate", help="'enumerate' or a rack-library file")
    p.add_argument("--quandles", action="store_true", help="keep only GL-quandles")
    p.add_argument("--medial", action="store_true", help="keep only medial GL-racks")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--long-run", action="store_true")
    p.add_argument("--checkpoint", default=None, help="append-only checkpoint file")
    p.add_argument("--out", default=None)
    p.add_argument("--table", action="store_true", help="human-readable cycle notation")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("enumerate-racks", help="racks of a given order up to isomorphism")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--long-run", action="store_true")
    p.add_argument("--out", default=None)
    p.add_argument("--table", action="store_true")
    p.set_defaults(func=cmd_enumerate_racks)

    p = sub.add_parser("aut", help="automorphism and inner group orders")
    p.add_argument("file")
    p.set_defaults(func=cmd_aut)

    p = sub.add_parser("glstructures", help="GL-structures and their classes per rack")
    p.add_argument("file")
    p.set_defaults(func=cmd_glstructures)

    p = sub.add_parser("functor", help="apply the rack/GL-quandle twist functors")
    p.add_argument("direction", choices=["f", "g"])
    p.add_argument("file")
    p.add_argument("--out", default=None)
    p.add_argument("--table", action="store_true")
    p.set_defaults(func=cmd_functor)

    p = sub.add_parser("hom", help="enumerate rack homomorphisms")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--rack-structure", action="store_true", help="print the hom rack")
    p.set_defaults(func=cmd_hom)

    p = sub.add_parser("quotient", help="associated quandle or medialization")
    p.add_argument("kind", choices=["assoc", "medial"])
    p.add_argument("file")
    p.add_argument("--out", default=None)
    p.add_argument("--table", action="store_true")
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("count", help="the eight per-order counts")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--long-run", action="store_true")
    p.set_defaults(func=cmd_count)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SystemExit:
        raise
    except formats.BracketParseError as exc:
        return _fail(str(exc), EXIT_IO)
    except (RackError, RecordFormatError) as exc:
        return _fail(str(exc), EXIT_INVALID)


if __name__ == "__main__":
    sys.exit(main())
