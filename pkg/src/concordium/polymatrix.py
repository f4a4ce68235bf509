"""Square matrices over the Laurent ring and their determinants."""

from __future__ import annotations

import json
from collections.abc import Sequence

from .laurent import (
    ONE,
    ZERO,
    LaurentPoly,
    is_unit,
    normalize_up_to_units,
    poly_from_json,
    poly_to_json,
)

__all__ = [
    "EmptyMatrixError",
    "PolyMatrix",
    "det",
    "alexander_polynomial",
    "is_alexander_trivial",
    "matrix_from_json",
    "matrix_to_json",
]

MAX_DIM = 16


class EmptyMatrixError(ValueError):
    """Raised when asking for the determinant of a 0x0 matrix."""


class PolyMatrix:
    """An n x n matrix of :class:`LaurentPoly`, stored row-major and immutable."""

    __slots__ = ("n", "entries")

    def __init__(self, rows: Sequence[Sequence[LaurentPoly | int]]):
        rows = [list(r) for r in rows]
        n = len(rows)
        for i, r in enumerate(rows):
            if len(r) != n:
                raise ValueError(f"row {i} has length {len(r)}, expected {n}: matrix must be square")
        self.n = n
        self.entries: tuple[LaurentPoly, ...] = tuple(
            e if isinstance(e, LaurentPoly) else LaurentPoly.const(e) for r in rows for e in r
        )

    @classmethod
    def identity(cls, n: int) -> PolyMatrix:
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    def __getitem__(self, ij: tuple[int, int]) -> LaurentPoly:
        i, j = ij
        return self.entries[i * self.n + j]

    def rows(self) -> list[list[LaurentPoly]]:
        return [list(self.entries[i * self.n:(i + 1) * self.n]) for i in range(self.n)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.n == other.n and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.n, self.entries))

    def __matmul__(self, other: PolyMatrix) -> PolyMatrix:
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        n = self.n
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = ZERO
                for k in range(n):
                    acc = acc + self[i, k] * other[k, j]
                row.append(acc)
            out.append(row)
        return PolyMatrix(out)

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(e) for e in r) for r in self.rows())
        return f"PolyMatrix([{body}])"


def det(m: PolyMatrix) -> LaurentPoly:
    """Determinant by Laplace expansion along rows, memoized on column subsets.

    Row k is expanded against the set of columns not yet used by rows
    0..k-1, so each minor is keyed by a bitmask and computed once. Only ring
    operations are used, which keeps the result exact in a ring without
    division.
    """
    n = m.n
    if n == 0:
        raise EmptyMatrixError("determinant of an empty (0x0) matrix")
    if n > MAX_DIM:
        raise ValueError(f"dimension {n} exceeds supported maximum {MAX_DIM}")
    entries = m.entries
    full = (1 << n) - 1
    memo: dict[int, LaurentPoly] = {0: ONE}

    def minor(mask: int) -> LaurentPoly:
        # rows n - popcount(mask) .. n-1 against the columns in mask
        hit = memo.get(mask)
        if hit is not None:
            return hit
        row = n - bin(mask).count("1")
        acc = ZERO
        sign = 1
        for j in range(n):
            bit = 1 << j
            if not mask & bit:
                continue
            a = entries[row * n + j]
            if a:
                sub = minor(mask & ~bit)
                if sub:
                    term = a * sub
                    acc = acc + term if sign > 0 else acc - term
            sign = -sign
        memo[mask] = acc
        return acc

    return minor(full)


def alexander_polynomial(m: PolyMatrix) -> LaurentPoly:
    """Order of the module presented by ``m``, in unit-normalized form."""
    return normalize_up_to_units(det(m))


def is_alexander_trivial(m: PolyMatrix) -> bool:
    return is_unit(det(m))


def matrix_to_json(m: PolyMatrix) -> dict:
    return {"n": m.n, "entries": [[poly_to_json(e) for e in r] for r in m.rows()]}


def matrix_from_json(obj: dict | str) -> PolyMatrix:
    if isinstance(obj, str):
        obj = json.loads(obj)
    try:
        n = obj["n"]
        raw = obj["entries"]
    except (KeyError, TypeError) as exc:
        raise ValueError("matrix JSON needs 'n' and 'entries'") from exc
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"'n' must be a nonnegative integer, got {n!r}")
    if len(raw) != n or any(len(r) != n for r in raw):
        raise ValueError(f"'entries' must be an {n}x{n} array")
    return PolyMatrix([[poly_from_json(e) for e in r] for r in raw])
