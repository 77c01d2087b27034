"""Permutation arithmetic and small, fully materialized permutation groups.

Permutations act on the points ``{0, ..., n-1}``.  Composition is right to
left throughout: ``(a * b)(i) == a(b(i))``, i.e. ``b`` is applied first.
Printed cycle notation is 1-based; see :func:`parse_cycles` and
:func:`print_cycles`.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from functools import total_ordering
from typing import Iterable, Iterator, Optional, Sequence

__all__ = [
    "Permutation",
    "SmallGroup",
    "DegreeMismatchError",
    "GroupTooLargeError",
    "CycleParseError",
    "compose",
    "inverse",
    "parse_cycles",
    "print_cycles",
    "closure",
    "centralizer",
    "are_conjugate",
    "conjugacy_classes",
]

DEFAULT_GROUP_CAP = math.factorial(10)


class DegreeMismatchError(ValueError):
    """Raised when operands act on point sets of different sizes."""


class GroupTooLargeError(RuntimeError):
    """Raised when a closure exceeds the materialization cap."""


class CycleParseError(ValueError):
    """Raised on malformed, repeated, or out-of-range cycle text."""


@total_ordering
class Permutation:
    """An immutable bijection on ``{0, ..., n-1}``, stored as an image array.

    ``p.images[i]`` is the image of ``i``.  The empty tuple is the unique
    permutation of degree 0.
    """

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a bijection on 0..{len(images) - 1}: {images!r}")
        object.__setattr__(self, "images", images)

    @staticmethod
    def identity(degree: int) -> "Permutation":
        return Permutation(range(degree))

    @staticmethod
    def unchecked(images: tuple[int, ...]) -> "Permutation":
        """Wrap a tuple already known to be a bijection (hot paths only)."""
        p = object.__new__(Permutation)
        object.__setattr__(p, "images", images)
        return p

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation.unchecked(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles of length >= 2, each starting at its smallest
        point, ordered by smallest moved point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start] or self.images[start] == start:
                continue
            cyc = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                seen[j] = True
                cyc.append(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        """Cycle lengths including fixed points, sorted descending."""
        lengths = [len(c) for c in self.cycles()]
        fixed = self.degree - sum(lengths)
        return tuple(sorted(lengths + [1] * fixed, reverse=True))

    def order(self) -> int:
        return math.lcm(1, *(len(c) for c in self.cycles()))

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    def __reduce__(self):
        # __slots__ plus the frozen __setattr__ breaks default pickling
        return (Permutation.unchecked, (self.images,))

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"

    def __str__(self) -> str:
        return print_cycles(self)


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Right-to-left composition: apply ``b`` first, then ``a``."""
    if a.degree != b.degree:
        raise DegreeMismatchError(f"degrees differ: {a.degree} vs {b.degree}")
    ai = a.images
    return Permutation.unchecked(tuple(ai[j] for j in b.images))


def inverse(a: Permutation) -> Permutation:
    return a.inverse()


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse 1-based disjoint-cycle notation, e.g. ``"(13)(24)"`` or ``"id"``.

    Points above 9 must be separated by commas or whitespace, e.g.
    ``"(1,10,3)"``; single-digit cycles may be written without separators.
    """
    text = text.strip()
    if text in ("id", "()", ""):
        return Permutation.identity(degree)
    stripped = _CYCLE_RE.sub("", text)
    if stripped.strip():
        raise CycleParseError(f"malformed cycle text: {text!r}")
    images = list(range(degree))
    used: set[int] = set()
    for body in _CYCLE_RE.findall(text):
        body = body.strip()
        if not body:
            raise CycleParseError("empty cycle '()'; use 'id' for the identity")
        if re.search(r"[,\s]", body):
            points_txt = [t for t in re.split(r"[,\s]+", body) if t]
        else:
            points_txt = list(body)
        points = []
        for t in points_txt:
            if not t.isdigit():
                raise CycleParseError(f"bad point {t!r} in {text!r}")
            p = int(t)
            if not 1 <= p <= degree:
                raise CycleParseError(f"point {p} out of range 1..{degree}")
            if p - 1 in used:
                raise CycleParseError(f"repeated point {p} in {text!r}")
            used.add(p - 1)
            points.append(p - 1)
        if len(points) < 2:
            raise CycleParseError(f"cycle of length {len(points)} in {text!r}")
        for i, p in enumerate(points):
            images[p] = points[(i + 1) % len(points)]
    return Permutation(images)


def print_cycles(a: Permutation) -> str:
    """1-based disjoint-cycle notation; the identity prints as ``"id"``.

    Inverse of :func:`parse_cycles`: cycles are sorted by smallest moved
    point and each starts at its smallest point.
    """
    cycles = a.cycles()
    if not cycles:
        return "id"
    sep = "," if a.degree > 9 else ""
    return "".join("(" + sep.join(str(p + 1) for p in c) + ")" for c in cycles)


@dataclass(frozen=True)
class SmallGroup:
    """A permutation group with its complete element list materialized.

    ``elements`` is the closure of ``generators``, sorted lexicographically
    on image arrays; this ordering makes representatives reproducible.
    """

    degree: int
    generators: tuple[Permutation, ...]
    elements: tuple[Permutation, ...]
    _members: frozenset = field(repr=False, compare=False, default=None)

    def __post_init__(self):
        object.__setattr__(self, "_members", frozenset(p.images for p in self.elements))

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p: Permutation) -> bool:
        return p.images in self._members

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)

    def is_abelian(self) -> bool:
        gens = self.generators if self.generators else self.elements
        return all((a * b).images == (b * a).images for a in gens for b in gens)

    def is_symmetric(self) -> bool:
        """Whether this group is the full symmetric group on its points."""
        return len(self.elements) == math.factorial(self.degree)


def symmetric_group(degree: int) -> SmallGroup:
    """The full symmetric group S_degree, materialized."""
    import itertools

    elements = tuple(
        Permutation.unchecked(p) for p in itertools.permutations(range(degree))
    )
    gens: tuple[Permutation, ...]
    if degree >= 2:
        transposition = list(range(degree))
        transposition[0], transposition[1] = 1, 0
        cycle = list(range(1, degree)) + [0]
        gens = (Permutation(transposition), Permutation(cycle))
    else:
        gens = ()
    return SmallGroup(degree, gens, elements)


def closure(
    generators: Iterable[Permutation], degree: Optional[int] = None, cap: int = DEFAULT_GROUP_CAP
) -> SmallGroup:
    """Materialize the group generated by ``generators``.

    Breadth-first product closure; raises :class:`GroupTooLargeError` once
    more than ``cap`` elements are found.  ``degree`` is required when the
    generator list is empty (the result is then the trivial group).
    """
    gens = list(generators)
    if gens:
        degs = {g.degree for g in gens}
        if len(degs) != 1:
            raise DegreeMismatchError(f"mixed generator degrees: {sorted(degs)}")
        if degree is not None and degree != gens[0].degree:
            raise DegreeMismatchError("stated degree disagrees with generators")
        degree = gens[0].degree
    elif degree is None:
        raise ValueError("degree required for an empty generator list")

    identity = tuple(range(degree))
    seen = {identity}
    frontier = [identity]
    gen_images = [g.images for g in gens]
    while frontier:
        new = []
        for elem in frontier:
            for g in gen_images:
                prod = tuple(g[j] for j in elem)
                if prod not in seen:
                    seen.add(prod)
                    if len(seen) > cap:
                        raise GroupTooLargeError(
                            f"closure exceeds cap of {cap} elements"
                        )
                    new.append(prod)
        frontier = new
    elements = tuple(Permutation.unchecked(t) for t in sorted(seen))
    return SmallGroup(degree, tuple(gens), elements)


def centralizer(group: SmallGroup, others: Iterable[Permutation]) -> SmallGroup:
    """The subgroup of ``group`` commuting with every permutation in ``others``."""
    others = list(others)
    for s in others:
        if s.degree != group.degree:
            raise DegreeMismatchError("centralized elements must match group degree")
    other_images = [s.images for s in others]
    members = []
    for g in group.elements:
        gi = g.images
        if all(
            tuple(gi[j] for j in si) == tuple(si[j] for j in gi) for si in other_images
        ):
            members.append(g)
    return SmallGroup(group.degree, tuple(members), tuple(members))


def _conjugating_for_same_cycle_type(a: Permutation, b: Permutation) -> Permutation:
    """A permutation g with g a g^-1 = b, assuming equal cycle types."""
    by_len_a: dict[int, list[tuple[int, ...]]] = {}
    by_len_b: dict[int, list[tuple[int, ...]]] = {}
    for cyc in a.cycles():
        by_len_a.setdefault(len(cyc), []).append(cyc)
    for cyc in b.cycles():
        by_len_b.setdefault(len(cyc), []).append(cyc)
    images = [None] * a.degree
    for length, cycs_a in by_len_a.items():
        for ca, cb in zip(cycs_a, by_len_b[length]):
            for pa, pb in zip(ca, cb):
                images[pa] = pb
    fixed_a = [i for i in range(a.degree) if images[i] is None]
    fixed_b = sorted(set(range(b.degree)) - {j for j in images if j is not None})
    for pa, pb in zip(fixed_a, fixed_b):
        images[pa] = pb
    return Permutation(images)  # full check; a wrong witness would be a bug


def are_conjugate(
    group: SmallGroup, a: Permutation, b: Permutation
) -> tuple[bool, Optional[Permutation]]:
    """Decide whether ``g a g^-1 = b`` for some ``g`` in ``group``.

    Returns ``(True, witness)`` or ``(False, None)``.  When ``group`` is the
    full symmetric group, conjugacy is decided by cycle-type equality and the
    witness is constructed directly.
    """
    if a.degree != group.degree or b.degree != group.degree:
        raise DegreeMismatchError("permutations must match group degree")
    if a == b:
        return True, Permutation.identity(group.degree)
    if group.is_symmetric():
        if a.cycle_type() != b.cycle_type():
            return False, None
        return True, _conjugating_for_same_cycle_type(a, b)
    bi = b.images
    for g in group.elements:
        gi = g.images
        # g a g^-1 == b  <=>  g(a(i)) == b(g(i)) for all i
        if all(gi[a.images[i]] == bi[gi[i]] for i in range(group.degree)):
            return True, g
    return False, None


def conjugacy_classes(group: SmallGroup) -> list[tuple[Permutation, ...]]:
    """Partition of ``group.elements`` into conjugacy classes.

    Each class lists its lexicographically least member first and the rest in
    sorted order; classes are ordered by representative.
    """
    remaining = {p.images for p in group.elements}
    classes = []
    elems = [g.images for g in group.elements]
    n = group.degree
    while remaining:
        a = min(remaining)
        orbit = set()
        for gi in elems:
            conj = [0] * n
            for i in range(n):
                conj[gi[i]] = gi[a[i]]
            orbit.add(tuple(conj))
        remaining -= orbit
        classes.append(tuple(Permutation.unchecked(t) for t in sorted(orbit)))
    classes.sort(key=lambda cls: cls[0].images)
    return classes
