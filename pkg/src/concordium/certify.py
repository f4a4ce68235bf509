"""Tau intervals and replayable distinctness certificates.

A certificate is a list of steps. Each step names an operation, its
arguments and its result, all as plain JSON values, so a verifier can
re-execute every step and check that results feed into later steps as
claimed (see :func:`verify_certificate`).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Callable

from . import fixtures
from .laurent import LaurentPoly, is_unit, poly_from_json, poly_to_json
from .legendrian import (
    LegendrianKnotInfo,
    PatternInvariants,
    iterate_pattern,
    knot_from_json,
    knot_to_json,
    legendrian_satellite,
    pattern_from_json,
    pattern_to_json,
    ray_criterion,
    stabilize_many,
    tau_lower_bound_from_legendrian,
)

__all__ = [
    "CITES",
    "CONCLUSIONS",
    "TauInterval",
    "Step",
    "Certificate",
    "CertificateError",
    "roberts_interval",
    "plamenevskaya_interval",
    "disjoint",
    "certify_qi_vs_ckrs",
    "certify_distinct_iterates",
    "certify_not_topologically_hopf",
    "verify_certificate",
    "certificate_from_json",
    "render_text",
]

CITES = frozenset(
    {
        "CDR14-Prop2.3",  # concordant links induce the same satellite operator
        "Ray15-criterion",
        "Plam04-Thm1",
        "Rob12-Thm1.2",
        "Ng01-Rem2.4",
        "Ray15-Lem2.4",
        "arithmetic",
        "Davis06",  # Alexander polynomial one => topologically concordant to Hopf
        "Kaw78",  # Alexander polynomial is a concordance invariant
    }
)

DISTINCT = "distinct"
INCONCLUSIVE = "inconclusive"
DISTINCT_ITERATES = "distinct iterates"
CRITERION_FAILS = "criterion not satisfied"
NO_OBSTRUCTION = "no obstruction"
NOT_TOP_HOPF = "not topologically concordant"

CONCLUSIONS = frozenset({DISTINCT, INCONCLUSIVE, DISTINCT_ITERATES, CRITERION_FAILS, NO_OBSTRUCTION, NOT_TOP_HOPF})


class CertificateError(ValueError):
    """A certificate failed replay."""


@dataclass(frozen=True)
class TauInterval:
    """Integer interval; ``None`` endpoints stand for -inf / +inf."""

    lo: int | None = None
    hi: int | None = None

    def __post_init__(self):
        if self.lo is not None and self.hi is not None and self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    def __contains__(self, tau: int) -> bool:
        return (self.lo is None or self.lo <= tau) and (self.hi is None or tau <= self.hi)

    def width(self) -> int | None:
        if self.lo is None or self.hi is None:
            return None
        return self.hi - self.lo

    def __str__(self) -> str:
        lo = "(-inf" if self.lo is None else f"[{self.lo}"
        hi = "+inf)" if self.hi is None else f"{self.hi}]"
        return f"{lo}, {hi}"

    def to_json(self) -> dict:
        return {"lo": self.lo, "hi": self.hi}

    @classmethod
    def from_json(cls, obj: dict) -> TauInterval:
        return cls(lo=obj.get("lo"), hi=obj.get("hi"))


def roberts_interval(p: PatternInvariants, tau_K: int) -> TauInterval:
    """Interval for tau(P(K)) from tau(K) and the pattern's meridian data:

        |tau(P(K)) - tau(P(U)) - w tau(K)| <= n_plus + w
    """
    if p.n_plus is None:
        raise ValueError("Roberts bound needs n₊")
    if p.winding < 1:
        raise ValueError(f"Roberts bound applied to winding >= 1 only, got {p.winding}")
    if p.tau_of_PU is None:
        raise ValueError("Roberts bound needs tau(P(U))")
    center = p.tau_of_PU + p.winding * tau_K
    slack = p.n_plus + p.winding
    return TauInterval(center - slack, center + slack)


def plamenevskaya_interval(k: LegendrianKnotInfo) -> TauInterval:
    return TauInterval(lo=tau_lower_bound_from_legendrian(k), hi=None)


def disjoint(a: TauInterval, b: TauInterval) -> bool:
    def below(x: TauInterval, y: TauInterval) -> bool:
        return x.hi is not None and y.lo is not None and x.hi < y.lo

    return below(a, b) or below(b, a)


# --- replayable operations --------------------------------------------------
# Each takes and returns JSON values only.


def _op_given_pattern(pattern):
    return pattern_to_json(pattern_from_json(pattern))


def _op_stabilize(pattern, signs):
    return pattern_to_json(stabilize_many(pattern_from_json(pattern), signs))


def _op_iterate(pattern, i):
    return pattern_to_json(iterate_pattern(pattern_from_json(pattern), i))


def _op_satellite(pattern, companion):
    return knot_to_json(legendrian_satellite(pattern_from_json(pattern), knot_from_json(companion)))


def _op_plamenevskaya(knot):
    return plamenevskaya_interval(knot_from_json(knot)).to_json()


def _op_roberts(pattern, tau_K):
    return roberts_interval(pattern_from_json(pattern), tau_K).to_json()


def _op_ray_criterion(pattern):
    return ray_criterion(pattern_from_json(pattern))


def _op_is_unit(poly):
    return is_unit(poly_from_json(poly))


def _op_conclude_ckrs(a, b):
    return DISTINCT if disjoint(TauInterval.from_json(a), TauInterval.from_json(b)) else INCONCLUSIVE


def _op_connected_sum_corollary(criterion):
    return bool(criterion)


def _op_conclude_iterates(criterion):
    return DISTINCT_ITERATES if criterion else CRITERION_FAILS


def _op_conclude_hopf_top(unit):
    return NO_OBSTRUCTION if unit else NOT_TOP_HOPF


OPS: dict[str, Callable[..., Any]] = {
    "given_pattern": _op_given_pattern,
    "stabilize": _op_stabilize,
    "iterate": _op_iterate,
    "satellite": _op_satellite,
    "plamenevskaya": _op_plamenevskaya,
    "roberts": _op_roberts,
    "ray_criterion": _op_ray_criterion,
    "is_unit": _op_is_unit,
    "connected_sum_corollary": _op_connected_sum_corollary,
    "conclude_ckrs": _op_conclude_ckrs,
    "conclude_iterates": _op_conclude_iterates,
    "conclude_hopf_top": _op_conclude_hopf_top,
}


@dataclass(frozen=True)
class Step:
    claim: str
    cite: str
    data: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.cite not in CITES:
            raise ValueError(f"unknown citation tag {self.cite!r}")

    @property
    def result(self):
        return self.data.get("result")

    def to_json(self) -> dict:
        return {"claim": self.claim, "cite": self.cite, "data": json.loads(json.dumps(self.data))}


@dataclass(frozen=True)
class Certificate:
    conclusion: str
    steps: tuple[Step, ...]

    def to_json(self) -> dict:
        return {"conclusion": self.conclusion, "steps": [s.to_json() for s in self.steps]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def certificate_from_json(obj: dict | str) -> Certificate:
    if isinstance(obj, str):
        obj = json.loads(obj)
    steps = tuple(Step(claim=s["claim"], cite=s["cite"], data=s.get("data", {})) for s in obj["steps"])
    return Certificate(conclusion=obj["conclusion"], steps=steps)


class _Builder:
    def __init__(self):
        self.steps: list[Step] = []

    def run(self, claim: str, cite: str, op: str, uses: dict[str, int] | None = None, **args) -> int:
        """Execute ``op`` and record it; returns the 1-based step number.

        ``uses`` maps argument names to earlier step numbers whose results
        are fed in.
        """
        uses = uses or {}
        for name, k in uses.items():
            args[name] = self.steps[k - 1].result
        result = OPS[op](**args)
        data = {"op": op, "args": args, "result": result}
        if uses:
            data["uses"] = dict(uses)
        self.steps.append(Step(claim=claim.format(result=result, **args), cite=cite, data=data))
        return len(self.steps)

    def finish(self) -> Certificate:
        return Certificate(conclusion=self.steps[-1].result, steps=tuple(self.steps))


def certify_qi_vs_ckrs(
    i: int,
    pattern: PatternInvariants | None = None,
    companion: LegendrianKnotInfo | None = None,
    ckrs: PatternInvariants | None = None,
    tau_companion: int = fixtures.TAU_RHT,
) -> Certificate:
    """Compare (Q^i, eta(Q^i)) with every CKRS link l_J using the right-handed trefoil.

    A Legendrian representative of Q^i(RHT) bounds tau from below, the
    satellite inequality bounds tau(L_J(RHT)) from above; disjoint ranges
    mean the induced satellite operators differ. Returns ``"inconclusive"``
    rather than guessing when the ranges meet.
    """
    if i < 1:
        raise ValueError(f"i must be a positive integer, got {i} (i = 0 is the Hopf link itself)")
    if pattern is None:
        pattern = fixtures.pattern_Q()
    if companion is None:
        companion = fixtures.trefoil_legendrian()
    if ckrs is None:
        ckrs = fixtures.ckrs_pattern()

    b = _Builder()
    s1 = b.run(
        "Legendrian diagram of the pattern Q: tb={result[tb]}, rot={result[rot]}",
        "arithmetic",
        "given_pattern",
        pattern=pattern_to_json(pattern),
    )
    s2 = b.run(
        "stabilize twice ({signs}): tb={result[tb]}, rot={result[rot]}",
        "arithmetic",
        "stabilize",
        uses={"pattern": s1},
        signs="++",
    )
    s3 = b.run(
        "self-satellite {i} times (winding one, tb=0): tb={result[tb]}, rot={result[rot]}",
        "Ray15-Lem2.4",
        "iterate",
        uses={"pattern": s2},
        i=i,
    )
    s4 = b.run(
        "Legendrian satellite with the trefoil representative (tb={companion[tb]}, rot={companion[rot]}): "
        "tb={result[tb]}, rot={result[rot]}",
        "Ng01-Rem2.4",
        "satellite",
        uses={"pattern": s3},
        companion=knot_to_json(companion),
    )
    s5 = b.run(
        f"tb + |rot| <= 2 tau - 1 gives tau(Q^{i}(RHT)) in [{{result[lo]}}, +inf)",
        "Plam04-Thm1",
        "plamenevskaya",
        uses={"knot": s4},
    )
    s6 = b.run(
        "satellite tau bound with tau(RHT)={tau_K}: tau(L_J(RHT)) in [{result[lo]}, {result[hi]}] for every J",
        "Rob12-Thm1.2",
        "roberts",
        pattern=pattern_to_json(ckrs),
        tau_K=tau_companion,
    )
    b.run(
        "disjoint tau ranges force different satellite operators, hence non-concordant links: {result}",
        "CDR14-Prop2.3",
        "conclude_ckrs",
        uses={"a": s5, "b": s6},
    )
    return b.finish()


def certify_distinct_iterates(p: PatternInvariants | None = None) -> Certificate:
    """Certificate that the links (P^i, eta(P^i)) are pairwise non-concordant."""
    if p is None:
        p = fixtures.pattern_Q()
    b = _Builder()
    s1 = b.run(
        "Legendrian pattern diagram: tb={result[tb]}, rot={result[rot]}, winding={result[winding]}, "
        "P(U) unknotted={result[pu_unknotted]}",
        "arithmetic",
        "given_pattern",
        pattern=pattern_to_json(p),
    )
    s2 = b.run(
        "P(U) unknotted, winding one, tb > 0 and tb + rot >= 2: {result}",
        "Ray15-criterion",
        "ray_criterion",
        uses={"pattern": s1},
    )
    if b.steps[-1].result:
        b.run(
            "P^i(K) = J # K for all K would force J slice (take K = U) and then P^i = id; "
            "so no (P^i, eta(P^i)), i >= 1, is concordant to the Hopf link with a knot "
            "tied in the first component: {result}",
            "CDR14-Prop2.3",
            "connected_sum_corollary",
            uses={"criterion": s2},
        )
        claim = (
            "iterates P^i induce pairwise distinct operators on exotic concordance, so "
            "(P^i, eta(P^i)) and (P^j, eta(P^j)) are not smoothly concordant for all i != j >= 0 "
            "(j = 0 is the Hopf link): {result}"
        )
    else:
        claim = "distinctness criterion fails; nothing is concluded: {result}"
    b.run(claim, "CDR14-Prop2.3", "conclude_iterates", uses={"criterion": s2})
    return b.finish()


def certify_not_topologically_hopf(poly: LaurentPoly) -> Certificate:
    """Alexander-polynomial test against topological concordance to the Hopf link."""
    b = _Builder()
    s1 = b.run(
        f"multivariable Alexander polynomial {poly} is a unit +-t1^a t2^b: {{result}}",
        "arithmetic",
        "is_unit",
        poly=poly_to_json(poly),
    )
    if b.steps[-1].result:
        b.run(
            "Alexander-trivial, so topologically concordant to the Hopf link; no obstruction: {result}",
            "Davis06",
            "conclude_hopf_top",
            uses={"unit": s1},
        )
    else:
        b.run(
            "the Hopf link has Alexander polynomial one and the polynomial is a concordance "
            "invariant, so this link is {result} to the Hopf link",
            "Kaw78",
            "conclude_hopf_top",
            uses={"unit": s1},
        )
    return b.finish()


def verify_certificate(cert: Certificate) -> bool:
    """Replay every step of ``cert``; raise :class:`CertificateError` on any mismatch."""
    if not cert.steps:
        raise CertificateError("certificate has no steps")
    if cert.conclusion not in CONCLUSIONS:
        raise CertificateError(f"unknown conclusion {cert.conclusion!r}")
    for n, step in enumerate(cert.steps, start=1):
        if step.cite not in CITES:
            raise CertificateError(f"step {n}: unknown citation {step.cite!r}")
        data = step.data
        op = data.get("op")
        if op not in OPS:
            raise CertificateError(f"step {n}: unknown operation {op!r}")
        args = data.get("args", {})
        for name, k in data.get("uses", {}).items():
            if not (isinstance(k, int) and 1 <= k < n):
                raise CertificateError(f"step {n}: argument {name!r} refers to invalid step {k!r}")
            if args.get(name) != cert.steps[k - 1].result:
                raise CertificateError(f"step {n}: argument {name!r} does not match result of step {k}")
        try:
            recomputed = OPS[op](**args)
        except (TypeError, ValueError, KeyError) as exc:
            raise CertificateError(f"step {n}: {op} failed on replay: {exc}") from exc
        if recomputed != data.get("result"):
            raise CertificateError(f"step {n}: {op} gives {recomputed!r}, certificate says {data.get('result')!r}")
    last = cert.steps[-1].data["op"]
    if not last.startswith("conclude_"):
        raise CertificateError("final step is not a conclusion")
    if cert.steps[-1].result != cert.conclusion:
        raise CertificateError("stated conclusion differs from the final step")
    return True


def render_text(cert: Certificate) -> str:
    lines = []
    for n, step in enumerate(cert.steps, start=1):
        lines.append(f"{n}. {step.claim}  [{step.cite}]")
    lines.append(f"Conclusion: {cert.conclusion}")
    return "\n".join(lines)
