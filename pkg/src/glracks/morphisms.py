"""Homomorphisms, isomorphisms, and automorphism groups of (GL-)racks.

Maps between carriers are plain tuples of ints: ``phi[x]`` is the image of
``x``.  Enumeration is by backtracking with constraint propagation; the
exhaustive ``|S|^|R|`` loop is kept as a test oracle behind
``brute_force=True``.
"""

from __future__ import annotations

import itertools
from typing import Callable, Optional, Sequence

from .glrack import GLRack, check_gl
from .perm import Permutation, SmallGroup, centralizer, closure
from .racks import Rack, check_rack, is_medial, is_quandle, profile

__all__ = [
    "SearchBudgetExceeded",
    "is_rack_hom",
    "enumerate_homs",
    "find_iso",
    "is_isomorphic",
    "aut_group",
    "inn_group",
    "is_gl_hom",
    "enumerate_gl_homs",
    "find_gl_iso",
    "aut_glr",
    "hom_rack",
    "hom_glrack",
    "is_bihom",
    "is_gl_bihom",
]

Map = tuple[int, ...]


class SearchBudgetExceeded(RuntimeError):
    """Raised when a backtracking search exceeds its node budget; never
    silently reported as an empty or negative result."""


def is_rack_hom(source: Rack, target: Rack, phi: Sequence[int]) -> bool:
    """Whether ``phi s_x = t_phi(x) phi`` holds at every x."""
    if len(phi) != source.n:
        return False
    if any(not 0 <= v < target.n for v in phi):
        return False
    s_rows = source.tables()
    t_rows = target.tables()
    for x in range(source.n):
        sx = s_rows[x]
        tx = t_rows[phi[x]]
        if any(phi[sx[y]] != tx[phi[y]] for y in range(source.n)):
            return False
    return True


def _extend_ok(
    s_rows, t_rows, phi: list[Optional[int]], x: int, v: int
) -> bool:
    """Check all hom constraints among assigned points after phi[x] = v."""
    n = len(phi)
    for y in range(n):
        w = phi[y]
        if w is None:
            continue
        # pair (x, y): phi(s_x(y)) == t_v(phi(y))
        img = phi[s_rows[x][y]]
        if img is not None and img != t_rows[v][w]:
            return False
        # pair (y, x): phi(s_y(x)) == t_w(phi(x))
        img = phi[s_rows[y][x]]
        if img is not None and img != t_rows[w][v]:
            return False
    return True


def enumerate_homs(
    source: Rack,
    target: Rack,
    *,
    extra_constraint: Optional[Callable[[list[Optional[int]], int, int], bool]] = None,
    injective: bool = False,
    budget: Optional[int] = None,
    brute_force: bool = False,
) -> list[Map]:
    """All rack homomorphisms from ``source`` to ``target``, lexicographic.

    Backtracking on the first unassigned point, pruning with the hom identity
    as soon as both arguments of a constraint are assigned.
    ``extra_constraint(phi, x, v)`` can impose additional pointwise
    conditions (used for GL-equivariance).  ``budget`` caps visited search
    nodes; exceeding it raises :class:`SearchBudgetExceeded`.
    """
    n, m = source.n, target.n
    if n == 0:
        return [()]
    if brute_force:
        out = []
        for phi in itertools.product(range(m), repeat=n):
            if injective and len(set(phi)) != n:
                continue
            if not is_rack_hom(source, target, phi):
                continue
            if extra_constraint is not None and not all(
                extra_constraint(list(phi), x, phi[x]) for x in range(n)
            ):
                continue
            out.append(phi)
        return out

    s_rows = source.tables()
    t_rows = target.tables()
    phi: list[Optional[int]] = [None] * n
    used = [False] * m
    results: list[Map] = []
    nodes = 0

    def search(x: int) -> None:
        nonlocal nodes
        if x == n:
            results.append(tuple(phi))  # type: ignore[arg-type]
            return
        for v in range(m):
            if injective and used[v]:
                continue
            nodes += 1
            if budget is not None and nodes > budget:
                raise SearchBudgetExceeded(f"hom search exceeded {budget} nodes")
            phi[x] = v
            if _extend_ok(s_rows, t_rows, phi, x, v) and (
                extra_constraint is None or extra_constraint(phi, x, v)
            ):
                if injective:
                    used[v] = True
                search(x + 1)
                if injective:
                    used[v] = False
            phi[x] = None

    search(0)
    return results


def _iso_candidates_by_cycle_type(source: Rack, target: Rack):
    """For each source point, the target points with matching s cycle type."""
    t_types = [p.cycle_type() for p in target.s]
    return [
        [v for v in range(target.n) if t_types[v] == p.cycle_type()]
        for p in source.s
    ]


def find_iso(
    source: Rack, target: Rack, budget: Optional[int] = None
) -> Optional[Permutation]:
    """A witness rack isomorphism, or ``None``.

    Fast-rejects on profile mismatch, then backtracks over bijections whose
    point images match ``s_x`` cycle types; the search is complete within
    that (sound) restriction.
    """
    if source.n != target.n:
        return None
    if profile(source) != profile(target):
        return None
    candidates = _iso_candidates_by_cycle_type(source, target)
    if any(not c for c in candidates):
        return None
    s_rows = source.tables()
    t_rows = target.tables()
    n = source.n
    phi: list[Optional[int]] = [None] * n
    used = [False] * n
    nodes = 0

    def search(x: int) -> Optional[Permutation]:
        nonlocal nodes
        if x == n:
            return Permutation(phi)  # type: ignore[arg-type]
        for v in candidates[x]:
            if used[v]:
                continue
            nodes += 1
            if budget is not None and nodes > budget:
                raise SearchBudgetExceeded(f"iso search exceeded {budget} nodes")
            phi[x] = v
            if _extend_ok(s_rows, t_rows, phi, x, v):
                used[v] = True
                found = search(x + 1)
                if found is not None:
                    return found
                used[v] = False
            phi[x] = None
        return None

    if n == 0:
        return Permutation(())
    return search(0)


def is_isomorphic(source: Rack, target: Rack) -> bool:
    return find_iso(source, target) is not None


def aut_group(rack: Rack, budget: Optional[int] = None) -> SmallGroup:
    """All rack automorphisms, materialized as a :class:`SmallGroup`."""
    autos = enumerate_homs(rack, rack, injective=True, budget=budget)
    elements = tuple(Permutation(phi) for phi in autos)
    return SmallGroup(rack.n, elements, tuple(sorted(elements)))


def inn_group(rack: Rack) -> SmallGroup:
    """The inner automorphism group, generated by the ``s_x``."""
    gens = []
    seen = set()
    for p in rack.s:
        if p.images not in seen:
            seen.add(p.images)
            gens.append(p)
    return closure(gens, degree=rack.n)


# ---------------------------------------------------------------------------
# GL-rack morphisms


def is_gl_hom(g1: GLRack, g2: GLRack, phi: Sequence[int]) -> bool:
    """Rack hom plus u-equivariance: ``phi u_1 = u_2 phi``."""
    if not is_rack_hom(g1.rack, g2.rack, phi):
        return False
    u1, u2 = g1.u.images, g2.u.images
    return all(phi[u1[x]] == u2[phi[x]] for x in range(g1.n))


def _u_equivariance(u1: Permutation, u2: Permutation):
    u1i, u2i = u1.images, u2.images

    def constraint(phi: list[Optional[int]], x: int, v: int) -> bool:
        # phi(u1(x)) == u2(v), checked in both directions around x
        img = phi[u1i[x]]
        if img is not None and img != u2i[v]:
            return False
        y = u1i.index(x)  # u1^-1(x); u1 degrees are small
        img = phi[y]
        if img is not None and u2i[img] != v:
            return False
        return True

    return constraint


def enumerate_gl_homs(
    g1: GLRack, g2: GLRack, budget: Optional[int] = None, brute_force: bool = False
) -> list[Map]:
    return enumerate_homs(
        g1.rack,
        g2.rack,
        extra_constraint=_u_equivariance(g1.u, g2.u),
        budget=budget,
        brute_force=brute_force,
    )


def find_gl_iso(
    g1: GLRack, g2: GLRack, budget: Optional[int] = None
) -> Optional[Permutation]:
    """A witness GL-rack isomorphism, or ``None``."""
    if g1.n != g2.n:
        return None
    if g1.u.cycle_type() != g2.u.cycle_type():
        return None
    iso = find_iso(g1.rack, g2.rack, budget=budget)
    if iso is None:
        return None
    # restart the bijection search with the u constraint included
    if g1.n == 0:
        return Permutation(())
    candidates = _iso_candidates_by_cycle_type(g1.rack, g2.rack)
    s_rows = g1.rack.tables()
    t_rows = g2.rack.tables()
    u_ok = _u_equivariance(g1.u, g2.u)
    n = g1.n
    phi: list[Optional[int]] = [None] * n
    used = [False] * n
    nodes = 0

    def search(x: int) -> Optional[Permutation]:
        nonlocal nodes
        if x == n:
            return Permutation(phi)  # type: ignore[arg-type]
        for v in candidates[x]:
            if used[v]:
                continue
            nodes += 1
            if budget is not None and nodes > budget:
                raise SearchBudgetExceeded(f"GL-iso search exceeded {budget} nodes")
            phi[x] = v
            if _extend_ok(s_rows, t_rows, phi, x, v) and u_ok(phi, x, v):
                used[v] = True
                found = search(x + 1)
                if found is not None:
                    return found
                used[v] = False
            phi[x] = None
        return None

    return search(0)


def aut_glr(gl: GLRack, via_centralizer: bool = True) -> SmallGroup:
    """The GL-rack automorphism group, ``C_{Aut R}(u)``.

    With ``via_centralizer=False``, enumerates GL-automorphisms directly by
    backtracking; both routes must agree (tested).
    """
    if via_centralizer:
        return centralizer(aut_group(gl.rack), [gl.u])
    autos = enumerate_homs(
        gl.rack,
        gl.rack,
        extra_constraint=_u_equivariance(gl.u, gl.u),
        injective=True,
    )
    elements = tuple(sorted(Permutation(phi) for phi in autos))
    return SmallGroup(gl.n, elements, elements)


# ---------------------------------------------------------------------------
# Hom racks


def hom_rack(
    source: Rack, target: Rack, budget: Optional[int] = None
) -> tuple[Rack, list[Map]]:
    """The canonical medial rack on ``Hom(source, target)``.

    Requires ``target`` medial.  The carrier is the hom list in lexicographic
    order; the structure is pointwise: ``t~_g(f)(x) = t_{g(x)}(f(x))``.
    Returns the rack together with the carrier list.
    """
    if not is_medial(target):
        raise ValueError("hom_rack requires a medial target rack")
    homs = enumerate_homs(source, target, budget=budget)
    index = {phi: i for i, phi in enumerate(homs)}
    t_rows = target.tables()
    s = []
    for g in homs:
        images = []
        for f in homs:
            h = tuple(t_rows[g[x]][f[x]] for x in range(source.n))
            images.append(index[h])
        s.append(Permutation(images))
    rack = check_rack(len(homs), s)
    assert is_medial(rack)
    if is_quandle(source) or is_quandle(target):
        assert is_quandle(rack)
    return rack, homs


def hom_glrack(
    g1: GLRack, g2: GLRack, budget: Optional[int] = None
) -> tuple[GLRack, list[Map]]:
    """The canonical medial GL-rack on the GL-hom-set.

    Requires ``g2``'s underlying rack medial.  The carrier is the GL-hom
    list in lexicographic order; verified to be a subrack of the full hom
    rack; ``u`` acts by postcomposition with ``u_2``.
    """
    if not is_medial(g2.rack):
        raise ValueError("hom_glrack requires a medial target rack")
    full_rack, full_homs = hom_rack(g1.rack, g2.rack, budget=budget)
    gl_homs = [phi for phi in full_homs if is_gl_hom(g1, g2, phi)]
    positions = [i for i, phi in enumerate(full_homs) if is_gl_hom(g1, g2, phi)]
    pos_index = {p: i for i, p in enumerate(positions)}
    # subrack condition in the ambient hom rack
    for p in positions:
        row = full_rack.s[p]
        inv = row.inverse()
        for q in positions:
            if row.images[q] not in pos_index or inv.images[q] not in pos_index:
                raise AssertionError("GL-hom-set is not a subrack of the hom rack")
    m = len(gl_homs)
    s = [
        Permutation([pos_index[full_rack.s[p].images[q]] for q in positions])
        for p in positions
    ]
    rack = check_rack(m, s)
    index = {phi: i for i, phi in enumerate(gl_homs)}
    u2 = g2.u.images
    u = Permutation(
        [index[tuple(u2[v] for v in phi)] for phi in gl_homs]
    )
    gl = check_gl(rack, u)
    assert is_medial(rack)
    return gl, gl_homs


# ---------------------------------------------------------------------------
# Bihomomorphisms


def is_bihom(
    r1: Rack, r2: Rack, r3: Rack, beta: Callable[[int, int], int]
) -> bool:
    """Whether ``beta`` on the product carrier is a rack bihomomorphism:
    every slice ``beta(-, y)`` and ``beta(x, -)`` is a rack homomorphism."""
    for y in range(r2.n):
        if not is_rack_hom(r1, r3, tuple(beta(x, y) for x in range(r1.n))):
            return False
    for x in range(r1.n):
        if not is_rack_hom(r2, r3, tuple(beta(x, y) for y in range(r2.n))):
            return False
    return True


def is_gl_bihom(
    g1: GLRack, g2: GLRack, g3: GLRack, beta: Callable[[int, int], int]
) -> bool:
    for y in range(g2.n):
        if not is_gl_hom(g1, g3, tuple(beta(x, y) for x in range(g1.n))):
            return False
    for x in range(g1.n):
        if not is_gl_hom(g2, g3, tuple(beta(x, y) for y in range(g2.n))):
            return False
    return True
