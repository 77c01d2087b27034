"""Finite racks: axioms, derived structure, constructors, and quotients.

A rack is a finite carrier ``{0, ..., n-1}`` together with one permutation
``s[x]`` per element, satisfying self-distributivity
``s_x s_y = s_{s_x(y)} s_x``.  Quandles additionally fix every point:
``s_x(x) = x``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .perm import (
    GroupTooLargeError,
    Permutation,
    SmallGroup,
    closure,
    DEFAULT_GROUP_CAP,
)

__all__ = [
    "Rack",
    "RackProfile",
    "RackError",
    "NotABijectionError",
    "SelfDistributivityError",
    "check_rack",
    "is_quandle",
    "is_medial",
    "is_left_distributive",
    "transvection_group",
    "dual",
    "theta",
    "permutation_rack",
    "trivial_quandle",
    "takasaki",
    "dihedral",
    "conjugation_quandle",
    "associated_quandle",
    "medialization",
    "profile",
    "is_subrack",
]


class RackError(ValueError):
    """Base class for rack validation failures."""


class NotABijectionError(RackError):
    def __init__(self, x: int, reason: str = ""):
        self.x = x
        super().__init__(f"s[{x}] is not a bijection on the carrier" + (f": {reason}" if reason else ""))


class SelfDistributivityError(RackError):
    def __init__(self, x: int, y: int):
        self.x = x
        self.y = y
        super().__init__(f"self-distributivity fails at (x={x}, y={y}): s_x s_y != s_(s_x(y)) s_x")


@dataclass(frozen=True)
class Rack:
    """A validated finite rack.  Construct via :func:`check_rack`."""

    n: int
    s: tuple[Permutation, ...]

    def tables(self) -> tuple[tuple[int, ...], ...]:
        """The image arrays of the ``s_x``, row ``x`` being ``s[x].images``."""
        return tuple(p.images for p in self.s)

    def __repr__(self) -> str:
        return f"Rack(n={self.n}, s={[str(p) for p in self.s]})"


def check_rack(n: int, s: Sequence[Permutation | Sequence[int]]) -> Rack:
    """Validate and build a rack, reporting the first violated axiom.

    Raises :class:`NotABijectionError` at the first ``x`` where ``s[x]`` is
    not a bijection, else :class:`SelfDistributivityError` at the first
    failing pair ``(x, y)``.
    """
    if len(s) != n:
        raise RackError(f"expected {n} permutations, got {len(s)}")
    perms = []
    for x, entry in enumerate(s):
        if isinstance(entry, Permutation):
            if entry.degree != n:
                raise NotABijectionError(x, f"degree {entry.degree} != {n}")
            perms.append(entry)
        else:
            try:
                p = Permutation(entry)
            except ValueError as exc:
                raise NotABijectionError(x, str(exc)) from exc
            if p.degree != n:
                raise NotABijectionError(x, f"degree {p.degree} != {n}")
            perms.append(p)
    rows = [p.images for p in perms]
    for x in range(n):
        rx = rows[x]
        for y in range(n):
            ry = rows[y]
            rz = rows[rx[y]]
            # s_x(s_y(i)) == s_{s_x(y)}(s_x(i)) for all i
            if any(rx[ry[i]] != rz[rx[i]] for i in range(n)):
                raise SelfDistributivityError(x, y)
    return Rack(n, tuple(perms))


def is_quandle(rack: Rack) -> bool:
    return all(p.images[x] == x for x, p in enumerate(rack.s))


def is_medial(rack: Rack) -> bool:
    """Whether ``s_{s_x(z)} s_y == s_{s_x(y)} s_z`` for all triples."""
    rows = rack.tables()
    n = rack.n
    for x in range(n):
        rx = rows[x]
        for y in range(n):
            ry = rows[y]
            for z in range(y + 1, n):  # symmetric in (y, z)
                rz = rows[z]
                left_outer = rows[rx[z]]
                right_outer = rows[rx[y]]
                if any(left_outer[ry[i]] != right_outer[rz[i]] for i in range(n)):
                    return False
    return True


def is_left_distributive(rack: Rack) -> bool:
    """Whether ``s_{s_a(b)}(x) == s_{s_a(x)}(s_b(x))`` for all a, b, x."""
    rows = rack.tables()
    n = rack.n
    for a in range(n):
        ra = rows[a]
        for b in range(n):
            target = rows[ra[b]]
            rb = rows[b]
            if any(target[x] != rows[ra[x]][rb[x]] for x in range(n)):
                return False
    return True


def transvection_group(rack: Rack, cap: int = DEFAULT_GROUP_CAP) -> SmallGroup:
    """Closure of ``{s_x s_y^-1}``; abelian exactly when the rack is medial."""
    gens = []
    seen = set()
    for p in rack.s:
        for q in rack.s:
            g = p * q.inverse()
            if g.images not in seen:
                seen.add(g.images)
                gens.append(g)
    return closure(gens, degree=rack.n, cap=cap)


def inn_group(rack: Rack, cap: int = DEFAULT_GROUP_CAP) -> SmallGroup:
    """The inner automorphism group, the closure of ``{s_x}``."""
    gens = []
    seen = set()
    for p in rack.s:
        if p.images not in seen:
            seen.add(p.images)
            gens.append(p)
    return closure(gens, degree=rack.n, cap=cap)


def dual(rack: Rack) -> Rack:
    """The dual rack, with every ``s_x`` replaced by its inverse."""
    return check_rack(rack.n, [p.inverse() for p in rack.s])


def theta(rack: Rack) -> Permutation:
    """The canonical automorphism ``x -> s_x(x)``.

    Bijectivity is forced by the rack axioms; a non-bijective result would
    indicate corrupted input and raises ``ValueError``.
    """
    return Permutation([p.images[x] for x, p in enumerate(rack.s)])


# ---------------------------------------------------------------------------
# Constructors


def permutation_rack(n: int, sigma: Permutation) -> Rack:
    """The constant-action rack where every ``s_x`` is ``sigma``."""
    if sigma.degree != n:
        raise RackError(f"sigma has degree {sigma.degree}, expected {n}")
    return check_rack(n, [sigma] * n)


def trivial_quandle(n: int) -> Rack:
    return permutation_rack(n, Permutation.identity(n))


def takasaki(m: int) -> Rack:
    """The Takasaki kei on Z/m: ``s_b(a) = 2b - a``."""
    if m < 1:
        raise RackError("takasaki requires m >= 1")
    s = [Permutation([(2 * b - a) % m for a in range(m)]) for b in range(m)]
    return check_rack(m, s)


def dihedral(m: int) -> Rack:
    """The dihedral quandle R_m, i.e. the Takasaki kei on Z/m."""
    return takasaki(m)


def _validate_cayley_table(table: Sequence[Sequence[int]]) -> tuple[int, list[int]]:
    """Check a multiplication table is a group; return (identity, inverses)."""
    m = len(table)
    for row in table:
        if len(row) != m or sorted(row) != list(range(m)):
            raise RackError("Cayley table rows must be permutations of 0..m-1")
    for j in range(m):
        if sorted(table[i][j] for i in range(m)) != list(range(m)):
            raise RackError("Cayley table columns must be permutations of 0..m-1")
    identity = None
    for e in range(m):
        if all(table[e][x] == x and table[x][e] == x for x in range(m)):
            identity = e
            break
    if identity is None:
        raise RackError("Cayley table has no identity element")
    for a in range(m):
        for b in range(m):
            for c in range(m):
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    raise RackError(f"Cayley table is not associative at ({a},{b},{c})")
    inverses = [0] * m
    for a in range(m):
        inv = next(b for b in range(m) if table[a][b] == identity)
        inverses[a] = inv
    return identity, inverses


def conjugation_quandle(
    cayley_table: Sequence[Sequence[int]], subset: Optional[Sequence[int]] = None
) -> Rack:
    """The conjugation quandle on a conjugation-closed subset of a group.

    ``cayley_table[a][b]`` is the product ``a * b``; ``subset`` defaults to
    the whole group.  ``s_x(y) = x y x^-1``.
    """
    m = len(cayley_table)
    _, inverses = _validate_cayley_table(cayley_table)
    carrier = sorted(set(range(m) if subset is None else subset))
    if subset is not None and any(not 0 <= g < m for g in carrier):
        raise RackError("subset contains elements outside the group")
    index = {g: i for i, g in enumerate(carrier)}
    n = len(carrier)
    s = []
    for x in carrier:
        images = []
        for y in carrier:
            z = cayley_table[cayley_table[x][y]][inverses[x]]
            if z not in index:
                raise RackError(f"subset is not closed under conjugation: {x}*{y}*{x}^-1 = {z}")
            images.append(index[z])
        s.append(Permutation(images))
    return check_rack(n, s)


# ---------------------------------------------------------------------------
# Congruence quotients


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if ry < rx:
            rx, ry = ry, rx
        self.parent[ry] = rx
        return True


def _finest_congruence(rack: Rack, seed_pairs: list[tuple[int, int]]) -> list[int]:
    """Close ``seed_pairs`` to the finest congruence compatible with the rack
    operations; returns a class label per element (the least member).

    Worklist fixpoint: whenever x ~ y is discovered, force
    ``s_z(x) ~ s_z(y)``, ``s_x(z) ~ s_y(z)``, and ``s_x^-1(z) ~ s_y^-1(z)``
    for all z.
    """
    n = rack.n
    uf = _UnionFind(n)
    rows = rack.tables()
    inv_rows = tuple(p.inverse().images for p in rack.s)
    work = [pair for pair in seed_pairs if uf.union(*pair)]
    while work:
        x, y = work.pop()
        for z in range(n):
            for a, b in (
                (rows[z][x], rows[z][y]),
                (rows[x][z], rows[y][z]),
                (inv_rows[x][z], inv_rows[y][z]),
            ):
                if uf.union(a, b):
                    work.append((a, b))
    return [uf.find(x) for x in range(n)]


def _quotient_by_labels(rack: Rack, labels: list[int]) -> tuple[Rack, list[int]]:
    """Quotient rack and projection, representatives being least members."""
    reps = sorted(set(labels))
    idx = {r: i for i, r in enumerate(reps)}
    proj = [idx[lbl] for lbl in labels]
    m = len(reps)
    rows = rack.tables()
    s = []
    for r in reps:
        images = [proj[rows[r][rep]] for rep in reps]
        s.append(Permutation(images))
    return check_rack(m, s), proj


def associated_quandle(rack: Rack) -> tuple[Rack, list[int]]:
    """Quotient by the finest congruence with ``s_x(x) ~ x``; a quandle.

    Returns the quotient and the projection as a list mapping each element
    to its class index.
    """
    seeds = [(p.images[x], x) for x, p in enumerate(rack.s)]
    quotient, proj = _quotient_by_labels(rack, _finest_congruence(rack, seeds))
    assert is_quandle(quotient)
    return quotient, proj


def medialization(rack: Rack) -> tuple[Rack, list[int]]:
    """Quotient by the finest congruence forcing the mediality identity."""
    n = rack.n
    rows = rack.tables()
    seeds = []
    for x in range(n):
        rx = rows[x]
        for y in range(n):
            ry = rows[y]
            for z in range(n):
                rz = rows[z]
                left = rows[rx[z]]
                right = rows[rx[y]]
                for a in range(n):
                    u, v = left[ry[a]], right[rz[a]]
                    if u != v:
                        seeds.append((u, v))
    quotient, proj = _quotient_by_labels(rack, _finest_congruence(rack, seeds))
    assert is_medial(quotient)
    return quotient, proj


# ---------------------------------------------------------------------------
# Profiles and subracks


@dataclass(frozen=True)
class RackProfile:
    """Cheap isomorphism invariants; equality is necessary for isomorphism,
    never sufficient (profiles can collide)."""

    quandle: bool
    medial: bool
    theta_cycle_type: tuple[int, ...]
    s_cycle_types: tuple[tuple[int, ...], ...]
    inn_order: Optional[int]


def profile(rack: Rack, cap: int = DEFAULT_GROUP_CAP) -> RackProfile:
    try:
        inn_order = inn_group(rack, cap=cap).order
    except GroupTooLargeError:
        inn_order = None
    return RackProfile(
        quandle=is_quandle(rack),
        medial=is_medial(rack),
        theta_cycle_type=theta(rack).cycle_type(),
        s_cycle_types=tuple(sorted(p.cycle_type() for p in rack.s)),
        inn_order=inn_order,
    )


def is_subrack(rack: Rack, subset: Sequence[int]) -> bool:
    """Whether ``subset`` is closed under ``s_y`` and ``s_y^-1`` for y in it."""
    members = set(subset)
    for y in members:
        p = rack.s[y]
        inv = p.inverse()
        for z in members:
            if p.images[z] not in members or inv.images[z] not in members:
                return False
    return True
