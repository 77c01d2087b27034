"""Exhaustive enumeration and GL-structure classification of finite racks.

The rack enumerator backtracks over assignments ``s_0, ..., s_{n-1}``,
propagating the forced identity ``s_{s_x(y)} = s_x s_y s_x^-1`` as soon as
both sides are determined, then deduplicates the labeled racks into
isomorphism classes by removing relabeling orbits from the smallest
representative up.

GL-structures on each rack are computed as the centralizer of the inner
automorphism group inside the full automorphism group; isomorphism classes
of GL-structures are conjugacy orbits under the automorphism group.  The
naive filter of all of ``S_n`` is kept as a cross-check oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .glrack import GLFlags, GLRack, check_gl, flags, is_gl_structure
from .morphisms import aut_group
from .perm import (
    GroupTooLargeError,
    Permutation,
    SmallGroup,
    centralizer,
    symmetric_group,
)
from .racks import Rack, check_rack, is_medial, is_quandle, theta

__all__ = [
    "ClassRecord",
    "CountReport",
    "ClassificationResult",
    "LongRunRequired",
    "gl_structures",
    "gl_structures_brute",
    "gl_classes",
    "enumerate_racks",
    "classify_gl",
    "count_report",
]

MAX_ORDER = 8
LONG_RUN_THRESHOLD = 6


class LongRunRequired(ValueError):
    """Raised when an order beyond the interactive threshold is requested
    without the explicit long-run opt-in."""


# ---------------------------------------------------------------------------
# Labeled rack enumeration


def _labeled_racks(n: int) -> list[bytes]:
    """All rack structures on {0..n-1}, each flattened to n*n bytes.

    Backtracking with forced-conjugate propagation: once ``s_a`` and ``s_b``
    are known, ``s_{s_a(b)}`` must equal ``s_a s_b s_a^-1``.
    """
    if n == 0:
        return [b""]
    perms = [tuple(p) for p in itertools.permutations(range(n))]
    rows: list[Optional[tuple[int, ...]]] = [None] * n
    assigned: list[int] = []
    results: list[bytes] = []
    rng = range(n)

    def try_assign(x: int, p: tuple[int, ...], trail: list[int]) -> bool:
        stack = [(x, p)]
        while stack:
            i, q = stack.pop()
            cur = rows[i]
            if cur is not None:
                if cur != q:
                    return False
                continue
            rows[i] = q
            trail.append(i)
            assigned.append(i)
            for j in assigned:
                rj = rows[j]
                # pair (i, j): s_{q[j]} = q rj q^-1
                conj = [0] * n
                for k in rng:
                    conj[q[k]] = q[rj[k]]
                stack.append((q[j], tuple(conj)))
                if j != i:
                    # pair (j, i): s_{rj[i]} = rj q rj^-1
                    conj = [0] * n
                    for k in rng:
                        conj[rj[k]] = rj[q[k]]
                    stack.append((rj[i], tuple(conj)))
        return True

    def undo(trail: list[int]) -> None:
        for i in reversed(trail):
            rows[i] = None
            assigned.pop()

    def candidate_ok(x: int, p: tuple[int, ...]) -> bool:
        """Cheap rejection against already-assigned rows before committing."""
        rc = rows[p[x]]
        if rc is not None and rc != p:  # s_{s_x(x)} = s_x
            return False
        for j in assigned:
            rj = rows[j]
            rc = rows[p[j]]
            if rc is not None:
                # needs rc = p rj p^-1
                for k in rng:
                    if rc[p[k]] != p[rj[k]]:
                        return False
            rc = rows[rj[x]]
            if rc is not None:
                # needs rc = rj p rj^-1
                for k in rng:
                    if rc[rj[k]] != rj[p[k]]:
                        return False
        return True

    def search() -> None:
        x = next((i for i in rng if rows[i] is None), None)
        if x is None:
            flat = bytearray()
            for row in rows:
                flat.extend(row)  # type: ignore[arg-type]
            results.append(bytes(flat))
            return
        for p in perms:
            if not candidate_ok(x, p):
                continue
            trail: list[int] = []
            if try_assign(x, p, trail):
                search()
            undo(trail)

    search()
    return results


def _relabel(flat: bytes, n: int, p: tuple[int, ...], pinv: tuple[int, ...]) -> bytes:
    """Relabel a flattened rack by p: new s_{p(x)} = p s_x p^-1."""
    out = bytearray(n * n)
    for x in range(n):
        base = pinv[x] * n
        off = x * n
        for j in range(n):
            out[off + j] = p[flat[base + pinv[j]]]
    return bytes(out)


def _dedupe_by_orbits(labeled: list[bytes], n: int) -> list[bytes]:
    """One lexicographically-least representative per relabeling orbit."""
    if n == 0:
        return [b""]
    perms = [tuple(p) for p in itertools.permutations(range(n))]
    inverses = []
    for p in perms:
        pinv = [0] * n
        for i, j in enumerate(p):
            pinv[j] = i
        inverses.append(tuple(pinv))
    remaining = set(labeled)
    reps = []
    while remaining:
        rep = min(remaining)
        orbit = {
            _relabel(rep, n, p, pinv) for p, pinv in zip(perms, inverses)
        }
        remaining -= orbit
        reps.append(rep)
    reps.sort()
    return reps


def _unflatten(flat: bytes, n: int) -> Rack:
    s = [tuple(flat[x * n : (x + 1) * n]) for x in range(n)]
    return check_rack(n, s)


def enumerate_racks(n: int, long_run: bool = False) -> list[Rack]:
    """All racks of order ``n`` up to isomorphism, deterministically ordered.

    Orders above 6 must be requested with ``long_run=True``; 8 is the
    supported maximum.
    """
    if n < 0 or n > MAX_ORDER:
        raise ValueError(f"order must be in 0..{MAX_ORDER}, got {n}")
    if n > LONG_RUN_THRESHOLD and not long_run:
        raise LongRunRequired(f"order {n} requires the long-run opt-in")
    labeled = _labeled_racks(n)
    reps = _dedupe_by_orbits(labeled, n)
    return [_unflatten(flat, n) for flat in reps]


# ---------------------------------------------------------------------------
# GL-structures on a fixed rack


def gl_structures(rack: Rack, aut: Optional[SmallGroup] = None) -> SmallGroup:
    """The group U of GL-structures: the centralizer of ``Inn R`` in
    ``Aut R``.  Normality in Aut R is guaranteed; tests assert it."""
    if aut is None:
        aut = aut_group(rack)
    return centralizer(aut, rack.s)


def gl_structures_brute(rack: Rack) -> list[Permutation]:
    """Oracle: filter every permutation of the carrier through the
    GL-structure definition directly."""
    return [
        u
        for u in symmetric_group(rack.n).elements
        if is_gl_structure(rack, u)
    ]


def gl_classes(
    rack: Rack, aut: Optional[SmallGroup] = None
) -> list[tuple[Permutation, int]]:
    """Isomorphism classes of GL-structures on ``rack``.

    Partition of U under conjugation by the full automorphism group (not by
    U itself, which would be wrong); each class is reported as its
    lexicographically least member with the class size, ordered by
    representative.
    """
    if aut is None:
        aut = aut_group(rack)
    structures = gl_structures(rack, aut)
    n = rack.n
    remaining = {u.images for u in structures.elements}
    aut_images = [g.images for g in aut.elements]
    classes = []
    while remaining:
        a = min(remaining)
        orbit = set()
        for gi in aut_images:
            conj = [0] * n
            for i in range(n):
                conj[gi[i]] = gi[a[i]]
            orbit.add(tuple(conj))
        orbit &= remaining  # orbit lies in U by normality; intersect defensively
        remaining -= orbit
        classes.append((Permutation.unchecked(a), len(orbit)))
    classes.sort(key=lambda item: item[0].images)
    return classes


# ---------------------------------------------------------------------------
# Full classification


@dataclass(frozen=True)
class ClassRecord:
    """One representative per GL-rack isomorphism class."""

    n: int
    rack_index: int
    rack: Rack
    u: Permutation
    d: Permutation
    flags: GLFlags
    aut_glr_order: Optional[int] = None

    def glrack(self) -> GLRack:
        return check_gl(self.rack, self.u)


@dataclass(frozen=True)
class CountReport:
    """The eight per-order counts: GL-racks and racks, each total, medial,
    quandle, and medial-quandle."""

    n: int
    g: int
    g_m: int
    g_q: int
    g_qm: int
    r: int
    r_m: int
    r_q: int
    r_qm: int


@dataclass
class ClassificationResult:
    n: int
    racks: list[Rack]
    records: list[ClassRecord]
    diagnostics: list[str] = field(default_factory=list)

    @property
    def exhaustive(self) -> bool:
        return not self.diagnostics


def _classify_one_rack(
    args: tuple[int, int, Rack, bool]
) -> tuple[int, list[ClassRecord], Optional[str]]:
    n, rack_index, rack, with_aut_glr = args
    try:
        aut = aut_group(rack)
        classes = gl_classes(rack, aut)
        th_inv = theta(rack).inverse()
        quandle = is_quandle(rack)
        medial = is_medial(rack)
        records = []
        for u, _size in classes:
            gl = check_gl(rack, u)
            d = th_inv * u.inverse()
            fl = GLFlags(
                gl_quandle=quandle,
                medial=medial,
                legendrian=theta(rack) == u.inverse() ** 2,
            )
            aut_order = centralizer(aut, [u]).order if with_aut_glr else None
            records.append(
                ClassRecord(n, rack_index, rack, u, d, fl, aut_order)
            )
        return rack_index, records, None
    except (GroupTooLargeError, MemoryError) as exc:
        return rack_index, [], f"rack {rack_index}: {exc}"


def classify_gl(
    n: int,
    racks: Optional[Sequence[Rack]] = None,
    *,
    quandles_only: bool = False,
    medial_only: bool = False,
    long_run: bool = False,
    jobs: int = 1,
    with_aut_glr: bool = False,
    checkpoint_path: Optional[str] = None,
    checkpoint_every: int = 1000,
) -> ClassificationResult:
    """Classify all GL-racks of order ``n`` up to isomorphism.

    ``racks`` defaults to :func:`enumerate_racks`; pass an ingested library
    list to classify external data.  The global result has one record per
    GL-rack isomorphism class because GL-isomorphic structures have
    isomorphic underlying racks and the rack list holds one rack per class.
    Per-rack failures are recorded as diagnostics and make the result
    non-exhaustive rather than aborting the whole run.
    """
    if racks is None:
        racks = enumerate_racks(n, long_run=long_run)
    tasks = [(n, i, rack, with_aut_glr) for i, rack in enumerate(racks)]

    done_indices: set[int] = set()
    records: list[ClassRecord] = []
    diagnostics: list[str] = []

    if checkpoint_path is not None:
        from . import formats

        done_indices, records = formats.read_checkpoint(checkpoint_path, racks)
        tasks = [t for t in tasks if t[1] not in done_indices]

    if jobs > 1:
        import multiprocessing

        with multiprocessing.Pool(jobs) as pool:
            outcomes = pool.map(_classify_one_rack, tasks)
    else:
        outcomes = []
        pending_checkpoint: list[tuple[int, list[ClassRecord]]] = []
        for task in tasks:
            outcome = _classify_one_rack(task)
            outcomes.append(outcome)
            if checkpoint_path is not None:
                pending_checkpoint.append((outcome[0], outcome[1]))
                if len(pending_checkpoint) >= checkpoint_every:
                    from . import formats

                    formats.append_checkpoint(checkpoint_path, pending_checkpoint)
                    pending_checkpoint = []
        if checkpoint_path is not None and pending_checkpoint:
            from . import formats

            formats.append_checkpoint(checkpoint_path, pending_checkpoint)

    for _index, recs, error in outcomes:
        records.extend(recs)
        if error is not None:
            diagnostics.append(error)

    if quandles_only:
        records = [r for r in records if r.flags.gl_quandle]
    if medial_only:
        records = [r for r in records if r.flags.medial]
    records.sort(key=lambda r: (r.rack_index, r.u.images))
    return ClassificationResult(n, list(racks), records, diagnostics)


def count_report(
    n: int,
    result: Optional[ClassificationResult] = None,
    *,
    long_run: bool = False,
    jobs: int = 1,
) -> CountReport:
    """The eight per-order isomorphism counts."""
    if result is None:
        result = classify_gl(n, long_run=long_run, jobs=jobs)
    if not result.exhaustive:
        raise RuntimeError(
            "cannot report counts from a non-exhaustive classification: "
            + "; ".join(result.diagnostics)
        )
    recs = result.records
    rack_quandle = [is_quandle(r) for r in result.racks]
    rack_medial = [is_medial(r) for r in result.racks]
    return CountReport(
        n=n,
        g=len(recs),
        g_m=sum(1 for r in recs if r.flags.medial),
        g_q=sum(1 for r in recs if r.flags.gl_quandle),
        g_qm=sum(1 for r in recs if r.flags.gl_quandle and r.flags.medial),
        r=len(result.racks),
        r_m=sum(rack_medial),
        r_q=sum(rack_quandle),
        r_qm=sum(q and m for q, m in zip(rack_quandle, rack_medial)),
    )
