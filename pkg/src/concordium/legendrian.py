"""Classical invariants of Legendrian knots and winding-number-one patterns.

Only the bookkeeping of (tb, rot) is modelled: stabilization, iteration and
composition of patterns, the untwisted Legendrian satellite, the tau lower
bound coming from the slice-Bennequin type inequality
``tb + |rot| <= 2 tau - 1``, and tb/rot read off a front diagram.

Sign convention: a positive stabilization raises rot by one.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import asdict, dataclass, replace
from functools import reduce
from typing import Iterable, TypeVar

__all__ = [
    "LegendrianKnotInfo",
    "PatternInvariants",
    "FrontDiagram",
    "MalformedFrontError",
    "CORE",
    "FRONT_EVENTS",
    "stabilize",
    "stabilize_many",
    "iterate_pattern",
    "iterate_by_composition",
    "compose_patterns",
    "legendrian_satellite",
    "tau_lower_bound_from_legendrian",
    "ray_criterion",
    "front_tb_rot",
    "knot_from_json",
    "knot_to_json",
    "pattern_from_json",
    "pattern_to_json",
    "front_from_json",
    "front_to_json",
]


@dataclass(frozen=True)
class LegendrianKnotInfo:
    tb: int
    rot: int


@dataclass(frozen=True)
class PatternInvariants:
    """(tb, rot) of a Legendrian pattern diagram plus its solid-torus data.

    ``n_plus``/``n_minus`` are the minimal positive/negative intersection
    counts with a meridian disk; ``None`` means unknown. ``tau_of_PU`` is tau
    of the pattern applied to the unknot, ``None`` when unknown. tb and rot
    are ``None`` when no Legendrian diagram is at hand.
    """

    tb: int | None
    rot: int | None
    winding: int = 1
    n_plus: int | None = None
    n_minus: int | None = None
    tau_of_PU: int | None = 0
    pu_unknotted: bool = True

    def __post_init__(self):
        for name in ("n_plus", "n_minus"):
            v = getattr(self, name)
            if v is not None and v < 0:
                raise ValueError(f"{name} must be nonnegative, got {v}")
        if self.n_plus is not None and self.n_minus is not None:
            if self.n_plus - self.n_minus != self.winding:
                raise ValueError(
                    f"n_plus - n_minus = {self.n_plus - self.n_minus} does not equal winding {self.winding}"
                )
        if self.pu_unknotted and self.tau_of_PU not in (0, None):
            raise ValueError("P(U) unknotted forces tau(P(U)) = 0")
        if self.pu_unknotted and self.tau_of_PU is None:
            object.__setattr__(self, "tau_of_PU", 0)

    def is_core(self) -> bool:
        """True when the data pins the pattern down as the core of the solid torus.

        A pattern meeting a meridian disk exactly once with P(U) unknotted is
        isotopic to the core.
        """
        return self.n_plus == 1 and self.n_minus == 0 and self.pu_unknotted


# the core of the solid torus; (P^0, eta(P^0)) is the Hopf link
CORE = PatternInvariants(tb=0, rot=0, winding=1, n_plus=1, n_minus=0, tau_of_PU=0, pu_unknotted=True)

_T = TypeVar("_T", LegendrianKnotInfo, PatternInvariants)


def _sign(sign: str | int) -> int:
    if sign in ("+", 1):
        return 1
    if sign in ("-", -1):
        return -1
    raise ValueError(f"stabilization sign must be '+' or '-', got {sign!r}")


def stabilize(x: _T, sign: str | int) -> _T:
    """One stabilization: tb drops by one, rot moves by +-1."""
    if x.tb is None or x.rot is None:
        raise ValueError("cannot stabilize without a Legendrian diagram (tb/rot unknown)")
    return replace(x, tb=x.tb - 1, rot=x.rot + _sign(sign))


def stabilize_many(x: _T, signs: Iterable[str | int]) -> _T:
    """Apply stabilizations in order, e.g. ``stabilize_many(q, "++")``."""
    for s in signs:
        x = stabilize(x, s)
    return x


def _check_iterable(p: PatternInvariants) -> None:
    if p.winding != 1:
        raise ValueError("iteration implemented for winding one only")
    if p.tb != 0:
        raise ValueError("iteration requires tb = 0")


def compose_patterns(p: PatternInvariants, q: PatternInvariants) -> PatternInvariants:
    """Invariants of the Legendrian satellite of diagram ``p`` along ``q``.

    tb and rot add (both tb are zero). The core is a two-sided identity;
    otherwise n_plus/n_minus are dropped since no composition law for them
    is available.
    """
    _check_iterable(p)
    _check_iterable(q)
    if q.is_core():
        return p
    if p.is_core():
        return q
    unknotted = p.pu_unknotted and q.pu_unknotted
    return PatternInvariants(
        tb=0,
        rot=p.rot + q.rot,
        winding=1,
        n_plus=None,
        n_minus=None,
        tau_of_PU=0 if unknotted else None,
        pu_unknotted=unknotted,
    )


def iterate_pattern(p: PatternInvariants, i: int) -> PatternInvariants:
    """The i-fold self composite; ``i = 0`` gives the core for any pattern."""
    if i < 0:
        raise ValueError(f"iteration count must be nonnegative, got {i}")
    if i == 0:
        return CORE
    _check_iterable(p)
    if i == 1 or p.is_core():
        return p
    # same answer as folding compose_patterns, without the O(i) loop
    return PatternInvariants(
        tb=0,
        rot=i * p.rot,
        winding=1,
        n_plus=None,
        n_minus=None,
        tau_of_PU=0 if p.pu_unknotted else None,
        pu_unknotted=p.pu_unknotted,
    )


def iterate_by_composition(p: PatternInvariants, i: int) -> PatternInvariants:
    """Reference implementation of :func:`iterate_pattern` as a fold."""
    if i == 0:
        return CORE
    return reduce(compose_patterns, [p] * i, CORE)


def legendrian_satellite(p: PatternInvariants, k: LegendrianKnotInfo) -> LegendrianKnotInfo:
    """Untwisted Legendrian satellite of companion ``k`` with pattern ``p``.

    Restricted to winding number one and companions with tb = 0, where both
    tb and rot are additive.
    """
    if p.tb is None or p.rot is None:
        raise ValueError("pattern has no Legendrian diagram (tb/rot unknown)")
    if k.tb != 0:
        raise ValueError("companion must have tb = 0 for the untwisted Legendrian satellite")
    if p.winding != 1:
        raise ValueError("Legendrian satellite implemented for winding one only")
    return LegendrianKnotInfo(tb=p.tb + k.tb, rot=p.rot + k.rot)


def tau_lower_bound_from_legendrian(k: LegendrianKnotInfo) -> int:
    """Smallest integer tau with tb + |rot| <= 2 tau - 1."""
    return -(-(k.tb + abs(k.rot) + 1) // 2)


def ray_criterion(p: PatternInvariants) -> bool:
    """Sufficient condition for the iterates of ``p`` to be pairwise distinct
    as operators on exotic concordance."""
    if p.tb is None or p.rot is None:
        return False
    return p.pu_unknotted and p.winding == 1 and p.tb > 0 and p.tb + p.rot >= 2


# --- fronts -----------------------------------------------------------------

FRONT_EVENTS = ("L_up", "L_down", "R_up", "R_down", "X+", "X-")


class MalformedFrontError(ValueError):
    pass


@dataclass(frozen=True)
class FrontDiagram:
    """A front as a flat list of cusp and crossing events.

    Cusps carry the direction the knot is traversed through them. Order is
    kept for serialization; the invariants only depend on the counts.
    """

    events: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "events", tuple(self.events))
        bad = [e for e in self.events if e not in FRONT_EVENTS]
        if bad:
            raise MalformedFrontError(f"unknown front events {bad}; expected one of {FRONT_EVENTS}")

    def counts(self) -> Counter:
        return Counter(self.events)


def front_tb_rot(f: FrontDiagram) -> LegendrianKnotInfo:
    """tb = writhe - cusps/2 and rot = (down cusps - up cusps)/2."""
    n = f.counts()
    left = n["L_up"] + n["L_down"]
    right = n["R_up"] + n["R_down"]
    if left != right:
        raise MalformedFrontError(f"{left} left cusps but {right} right cusps")
    if left == 0:
        raise MalformedFrontError("a closed front has at least one pair of cusps")
    cusps = left + right
    up = n["L_up"] + n["R_up"]
    down = n["L_down"] + n["R_down"]
    tb = n["X+"] - n["X-"] - cusps // 2
    rot = (down - up) // 2
    # cusps is even here, so down - up is even too
    if (tb + abs(rot)) % 2 == 0:
        raise MalformedFrontError(
            f"tb={tb}, rot={rot} have the same parity; this cannot be a one-component front"
        )
    return LegendrianKnotInfo(tb=tb, rot=rot)


# --- JSON -------------------------------------------------------------------


def _load(obj):
    return json.loads(obj) if isinstance(obj, str) else obj


def _int(obj: dict, key: str, default=...):
    if key not in obj:
        if default is ...:
            raise ValueError(f"missing field {key!r}")
        return default
    v = obj[key]
    if v is None and default is None:
        return None
    if not isinstance(v, int) or isinstance(v, bool):
        raise ValueError(f"field {key!r} must be an integer, got {v!r}")
    return v


def knot_to_json(k: LegendrianKnotInfo) -> dict:
    return asdict(k)


def knot_from_json(obj) -> LegendrianKnotInfo:
    obj = _load(obj)
    return LegendrianKnotInfo(tb=_int(obj, "tb"), rot=_int(obj, "rot"))


def pattern_to_json(p: PatternInvariants) -> dict:
    return {
        "tb": p.tb,
        "rot": p.rot,
        "winding": p.winding,
        "n_plus": p.n_plus,
        "n_minus": p.n_minus,
        "tau_pu": p.tau_of_PU,
        "pu_unknotted": p.pu_unknotted,
    }


def pattern_from_json(obj) -> PatternInvariants:
    obj = _load(obj)
    unknotted = obj.get("pu_unknotted", True)
    if not isinstance(unknotted, bool):
        raise ValueError(f"field 'pu_unknotted' must be a boolean, got {unknotted!r}")
    return PatternInvariants(
        tb=_int(obj, "tb", None),
        rot=_int(obj, "rot", None),
        winding=_int(obj, "winding", 1),
        n_plus=_int(obj, "n_plus", None),
        n_minus=_int(obj, "n_minus", None),
        tau_of_PU=_int(obj, "tau_pu", None),
        pu_unknotted=unknotted,
    )


def front_to_json(f: FrontDiagram) -> dict:
    return {"events": list(f.events)}


def front_from_json(obj) -> FrontDiagram:
    obj = _load(obj)
    if not isinstance(obj, dict) or not isinstance(obj.get("events"), list):
        raise MalformedFrontError("front JSON needs an 'events' list")
    return FrontDiagram(tuple(obj["events"]))
