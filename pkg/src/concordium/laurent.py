"""Exact two-variable Laurent polynomials over the integers.

Elements of Z[t1^{+-1}, t2^{+-1}] are stored as a sorted tuple of
``(exp1, exp2, coeff)`` triples with nonzero coefficients. Python ints give
arbitrary precision for free.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Mapping
from typing import Union

__all__ = [
    "LaurentPoly",
    "ZERO",
    "ONE",
    "T1",
    "T2",
    "monomial",
    "add",
    "mul",
    "negate",
    "normalize_up_to_units",
    "is_unit",
    "equal_up_to_units",
    "eval_at_ones",
    "invert_variables",
    "poly_from_json",
    "poly_to_json",
]

Exponent = tuple[int, int]
Coercible = Union["LaurentPoly", int]


class LaurentPoly:
    """Immutable Laurent polynomial in t1, t2 with integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, int] | Iterable[tuple[int, int, int]] = ()):
        collected: dict[Exponent, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else (((a, b), c) for a, b, c in terms)
        for (a, b), c in items:
            if not all(isinstance(v, int) and not isinstance(v, bool) for v in (a, b, c)):
                raise TypeError(f"exponents and coefficients must be ints, got {(a, b, c)!r}")
            key = (a, b)
            collected[key] = collected.get(key, 0) + c
        self._terms = tuple(sorted((a, b, c) for (a, b), c in collected.items() if c != 0))
        self._hash = None

    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls({(0, 0): c})

    @classmethod
    def _coerce(cls, other: Coercible) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return cls.const(other)
        return NotImplemented

    @property
    def terms(self) -> tuple[tuple[int, int, int], ...]:
        """Lex-sorted ``(exp1, exp2, coeff)`` triples."""
        return self._terms

    def as_dict(self) -> dict[Exponent, int]:
        return {(a, b): c for a, b, c in self._terms}

    def coeff(self, exp1: int, exp2: int) -> int:
        for a, b, c in self._terms:
            if (a, b) == (exp1, exp2):
                return c
        return 0

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            # constants must hash like the ints they compare equal to
            if not self._terms:
                self._hash = hash(0)
            elif len(self._terms) == 1 and self._terms[0][:2] == (0, 0):
                self._hash = hash(self._terms[0][2])
            else:
                self._hash = hash(self._terms)
        return self._hash

    def __add__(self, other: Coercible) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return LaurentPoly(self._terms + other._terms)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly((a, b, -c) for a, b, c in self._terms)

    def __sub__(self, other: Coercible) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Coercible) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other: Coercible) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[Exponent, int] = {}
        for a1, b1, c1 in self._terms:
            for a2, b2, c2 in other._terms:
                key = (a1 + a2, b1 + b2)
                out[key] = out.get(key, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if not is_unit(self):
                raise ValueError("only units have negative powers")
            (a, b, c), = self._terms
            return LaurentPoly({(-a, -b): c}) ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        # highest degree first reads more naturally
        parts = []
        for a, b, c in reversed(self._terms):
            factors = [_var("t1", a), _var("t2", b)]
            mono = "*".join(f for f in factors if f)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def _var(name: str, e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return name
    return f"{name}^{e}"


def monomial(coeff: int = 1, exp1: int = 0, exp2: int = 0) -> LaurentPoly:
    return LaurentPoly({(exp1, exp2): coeff})


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
T1 = monomial(1, 1, 0)
T2 = monomial(1, 0, 1)


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def negate(p: LaurentPoly) -> LaurentPoly:
    return -p


def normalize_up_to_units(p: LaurentPoly) -> LaurentPoly:
    """Canonical representative of the orbit of ``p`` under units +-t1^a t2^b.

    Both minimal exponents are shifted to zero, then the sign is chosen so the
    lexicographically smallest term has a positive coefficient.
    """
    if p.is_zero():
        return ZERO
    min1 = min(a for a, _, _ in p.terms)
    min2 = min(b for _, b, _ in p.terms)
    sign = 1 if p.terms[0][2] > 0 else -1
    # shifting preserves lex order, so terms[0] stays the smallest term
    return LaurentPoly((a - min1, b - min2, sign * c) for a, b, c in p.terms)


def is_unit(p: LaurentPoly) -> bool:
    return len(p.terms) == 1 and abs(p.terms[0][2]) == 1


def equal_up_to_units(p: LaurentPoly, q: LaurentPoly) -> bool:
    return normalize_up_to_units(p) == normalize_up_to_units(q)


def eval_at_ones(p: LaurentPoly) -> int:
    """Value at t1 = t2 = 1, i.e. the sum of the coefficients."""
    return sum(c for _, _, c in p.terms)


def invert_variables(p: LaurentPoly) -> LaurentPoly:
    """Substitute t1 -> 1/t1 and t2 -> 1/t2."""
    return LaurentPoly((-a, -b, c) for a, b, c in p.terms)


def poly_to_json(p: LaurentPoly) -> dict:
    return {"terms": [{"c": c, "e": [a, b]} for a, b, c in p.terms]}


def poly_from_json(obj: dict | str) -> LaurentPoly:
    """Parse ``{"terms": [{"c": int, "e": [int, int]}, ...]}``.

    Terms may be unsorted or repeat an exponent; repeats are summed.
    Bare integers are accepted as constants.
    """
    if isinstance(obj, str):
        obj = json.loads(obj)
    if isinstance(obj, int) and not isinstance(obj, bool):
        return LaurentPoly.const(obj)
    if not isinstance(obj, dict) or "terms" not in obj:
        raise ValueError(f"expected a polynomial object with a 'terms' list, got {obj!r}")
    triples = []
    for term in obj["terms"]:
        try:
            c = term["c"]
            a, b = term["e"]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed polynomial term {term!r}") from exc
        triples.append((a, b, c))
    return LaurentPoly(triples)
