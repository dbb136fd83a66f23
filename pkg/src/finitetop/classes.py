"""Classical generalized open sets: regular, pre-, semi-, alpha-, beta- and b-open.

Each predicate is a containment test against an Int/Cl composite. The
pre/semi interiors and closures use their closed forms; the remaining
class interiors and closures scan all subsets of the ground set.
"""
from __future__ import annotations

from dataclasses import dataclass, fields
from typing import Callable

from finitetop.topology import Topology

Predicate = Callable[[Topology, int], bool]


class ClosureDiagnostic(RuntimeError):
    """Intersection of a closed class over the supersets of S left the class."""


def is_regular_open(t: Topology, s: int) -> bool:
    return s == t.interior(t.closure(s))


def is_regular_closed(t: Topology, s: int) -> bool:
    return s == t.closure(t.interior(s))


def is_pre_open(t: Topology, s: int) -> bool:
    return s & ~t.interior(t.closure(s)) == 0


def is_semi_open(t: Topology, s: int) -> bool:
    return s & ~t.closure(t.interior(s)) == 0


def is_alpha_open(t: Topology, s: int) -> bool:
    return s & ~t.interior(t.closure(t.interior(s))) == 0


def is_beta_open(t: Topology, s: int) -> bool:
    return s & ~t.closure(t.interior(t.closure(s))) == 0


def is_b_open(t: Topology, s: int) -> bool:
    return s & ~(t.closure(t.interior(s)) | t.interior(t.closure(s))) == 0


def _closed_variant(pred: Predicate) -> Predicate:
    def closed(t: Topology, s: int) -> bool:
        return pred(t, t.full & ~s)

    closed.__name__ = pred.__name__.replace("_open", "_closed")
    return closed


is_pre_closed = _closed_variant(is_pre_open)
is_semi_closed = _closed_variant(is_semi_open)
is_alpha_closed = _closed_variant(is_alpha_open)
is_beta_closed = _closed_variant(is_beta_open)
is_b_closed = _closed_variant(is_b_open)


# closed forms for pre/semi interior and closure
def p_int(t: Topology, s: int) -> int:
    return s & t.interior(t.closure(s))


def p_cl(t: Topology, s: int) -> int:
    return s | t.closure(t.interior(s))


def s_int(t: Topology, s: int) -> int:
    return s & t.closure(t.interior(s))


def s_cl(t: Topology, s: int) -> int:
    return s | t.interior(t.closure(s))


def class_interior(t: Topology, s: int, is_member: Predicate) -> int:
    """Union of all class members contained in ``s`` (full subset scan)."""
    out = 0
    for u in range(t.full + 1):
        if u & ~s == 0 and is_member(t, u):
            out |= u
    return out


def class_closure(t: Topology, s: int, is_member: Predicate, check: bool = True) -> int:
    """Intersection of all sets containing ``s`` whose complement is a class member.

    With ``check`` the result is re-tested for membership in the closed class
    and :class:`ClosureDiagnostic` is raised if it fell out.
    """
    full = t.full
    out = full
    for c in range(full + 1):
        if s & ~c == 0 and is_member(t, full & ~c):
            out &= c
    if check and not is_member(t, full & ~out):
        raise ClosureDiagnostic(
            f"intersection of closed-class supersets of {t.ground.labels(s)} is not itself in the class"
        )
    return out


def p_int_scan(t: Topology, s: int) -> int:
    return class_interior(t, s, is_pre_open)


def p_cl_scan(t: Topology, s: int) -> int:
    return class_closure(t, s, is_pre_open)


def s_int_scan(t: Topology, s: int) -> int:
    return class_interior(t, s, is_semi_open)


def s_cl_scan(t: Topology, s: int) -> int:
    return class_closure(t, s, is_semi_open)


def beta_int(t: Topology, s: int) -> int:
    return class_interior(t, s, is_beta_open)


def beta_cl(t: Topology, s: int) -> int:
    return class_closure(t, s, is_beta_open)


def b_int_classical(t: Topology, s: int) -> int:
    return class_interior(t, s, is_b_open)


def b_cl_classical(t: Topology, s: int) -> int:
    return class_closure(t, s, is_b_open)


@dataclass(frozen=True)
class ClassFlags:
    open: bool
    closed: bool
    regular_open: bool
    regular_closed: bool
    pre_open: bool
    pre_closed: bool
    semi_open: bool
    semi_closed: bool
    alpha_open: bool
    alpha_closed: bool
    beta_open: bool
    beta_closed: bool
    b_open: bool
    b_closed: bool

    def to_json(self) -> dict[str, bool]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


OPEN_CLASSES: dict[str, Predicate] = {
    "open": lambda t, s: t.is_open(s),
    "regular_open": is_regular_open,
    "pre_open": is_pre_open,
    "semi_open": is_semi_open,
    "alpha_open": is_alpha_open,
    "beta_open": is_beta_open,
    "b_open": is_b_open,
}


def classify(t: Topology, s: int) -> ClassFlags:
    comp = t.full & ~s
    flags = {}
    for name, pred in OPEN_CLASSES.items():
        flags[name] = pred(t, s)
        flags[name.replace("_open", "_closed") if name != "open" else "closed"] = pred(t, comp)
    return ClassFlags(**flags)
