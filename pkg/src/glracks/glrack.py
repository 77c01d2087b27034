"""GL-racks: racks with a distinguished commuting automorphism.

A GL-structure on a rack is an automorphism ``u`` that commutes with every
``s_x``; the derived down map ``d = theta^-1 u^-1`` recovers the
bi-Legendrian presentation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .perm import Permutation
from .racks import Rack, RackError, is_medial, is_quandle, theta

__all__ = [
    "GLRack",
    "GLFlags",
    "GLRackError",
    "NotAutomorphismError",
    "DoesNotCommuteError",
    "check_gl",
    "is_gl_structure",
    "down_map",
    "is_legendrian",
    "flags",
]


class GLRackError(RackError):
    """Base class for GL-structure validation failures."""


class NotAutomorphismError(GLRackError):
    def __init__(self, x: int):
        self.x = x
        super().__init__(f"u is not a rack automorphism: u s_x != s_u(x) u at x={x}")


class DoesNotCommuteError(GLRackError):
    def __init__(self, x: int):
        self.x = x
        super().__init__(f"u does not commute with s_x at x={x}")


@dataclass(frozen=True)
class GLRack:
    """A validated GL-rack.  Construct via :func:`check_gl`."""

    rack: Rack
    u: Permutation

    @property
    def n(self) -> int:
        return self.rack.n

    def __repr__(self) -> str:
        return f"GLRack(rack={self.rack!r}, u={self.u})"


@dataclass(frozen=True)
class GLFlags:
    gl_quandle: bool
    medial: bool
    legendrian: bool


def check_gl(rack: Rack, u: Permutation) -> GLRack:
    """Validate that ``u`` is a GL-structure on ``rack``.

    Raises :class:`NotAutomorphismError` at the first ``x`` where
    ``u s_x != s_u(x) u``, else :class:`DoesNotCommuteError` at the first
    ``x`` where ``u s_x != s_x u``.
    """
    if u.degree != rack.n:
        raise GLRackError(f"u has degree {u.degree}, rack has order {rack.n}")
    ui = u.images
    rows = rack.tables()
    n = rack.n
    for x in range(n):
        rx = rows[x]
        target = rows[ui[x]]
        if any(ui[rx[i]] != target[ui[i]] for i in range(n)):
            raise NotAutomorphismError(x)
    for x in range(n):
        rx = rows[x]
        if any(ui[rx[i]] != rx[ui[i]] for i in range(n)):
            raise DoesNotCommuteError(x)
    return GLRack(rack, u)


def is_gl_structure(rack: Rack, u: Permutation) -> bool:
    try:
        check_gl(rack, u)
    except GLRackError:
        return False
    return True


def down_map(gl: GLRack) -> Permutation:
    """The down map ``d = theta^-1 u^-1`` of the bi-Legendrian presentation."""
    return theta(gl.rack).inverse() * gl.u.inverse()


def is_legendrian(gl: GLRack) -> bool:
    """Whether ``theta = u^-2``, i.e. the GL-rack is a Legendrian rack."""
    return theta(gl.rack) == gl.u.inverse() ** 2


def flags(gl: GLRack) -> GLFlags:
    return GLFlags(
        gl_quandle=is_quandle(gl.rack),
        medial=is_medial(gl.rack),
        legendrian=is_legendrian(gl),
    )
