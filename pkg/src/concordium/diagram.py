"""Link diagrams reduced to signed crossing lists: writhe and linking numbers."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from itertools import combinations

__all__ = ["Crossing", "CrossingList", "linking_number", "writhe", "diagram_from_json", "diagram_to_json"]


@dataclass(frozen=True)
class Crossing:
    sign: int
    over: str
    under: str

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"crossing sign must be +1 or -1, got {self.sign!r}")


@dataclass(frozen=True)
class CrossingList:
    """Oriented link diagram kept only as (sign, over, under) triples.

    Planarity is not checked. What is checked: every label is a declared
    component, and each pair of components has an even inter-component sign
    sum, so linking numbers are integers.
    """

    components: tuple[str, ...]
    crossings: tuple[Crossing, ...]

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        object.__setattr__(self, "crossings", tuple(self.crossings))
        if len(set(self.components)) != len(self.components):
            raise ValueError(f"duplicate component labels in {self.components}")
        known = set(self.components)
        for c in self.crossings:
            for label in (c.over, c.under):
                if label not in known:
                    raise ValueError(f"crossing refers to unknown component {label!r}")
        sums = Counter()
        for c in self.crossings:
            if c.over != c.under:
                sums[frozenset((c.over, c.under))] += c.sign
        for pair, total in sums.items():
            if total % 2:
                a, b = sorted(pair)
                raise ValueError(f"odd crossing-sign sum {total} between {a!r} and {b!r}")

    def mirror(self) -> CrossingList:
        return CrossingList(self.components, tuple(Crossing(-c.sign, c.under, c.over) for c in self.crossings))

    def reverse(self, label: str) -> CrossingList:
        """Reverse the orientation of one component."""
        self._check(label)
        flipped = tuple(
            Crossing(-c.sign if (c.over == label) != (c.under == label) else c.sign, c.over, c.under)
            for c in self.crossings
        )
        return CrossingList(self.components, flipped)

    def linking_matrix(self) -> dict[tuple[str, str], int]:
        return {(a, b): linking_number(self, a, b) for a, b in combinations(self.components, 2)}

    def _check(self, label: str) -> None:
        if label not in self.components:
            raise ValueError(f"unknown component {label!r}")


def linking_number(d: CrossingList, a: str, b: str) -> int:
    d._check(a)
    d._check(b)
    if a == b:
        raise ValueError("linking number needs two distinct components")
    total = sum(c.sign for c in d.crossings if {c.over, c.under} == {a, b})
    return total // 2


def writhe(d: CrossingList, a: str) -> int:
    """Sum of signs of the self-crossings of component ``a``."""
    d._check(a)
    return sum(c.sign for c in d.crossings if c.over == a and c.under == a)


def diagram_to_json(d: CrossingList) -> dict:
    return {
        "components": list(d.components),
        "crossings": [{"s": c.sign, "over": c.over, "under": c.under} for c in d.crossings],
    }


def diagram_from_json(obj) -> CrossingList:
    if isinstance(obj, str):
        obj = json.loads(obj)
    try:
        comps = obj["components"]
        crossings = [Crossing(x["s"], x["over"], x["under"]) for x in obj["crossings"]]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed diagram JSON: {exc}") from exc
    return CrossingList(tuple(comps), tuple(crossings))
