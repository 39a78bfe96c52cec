"""Support/cosupport bookkeeping for the perverse t-structure on a surface,
plus the weight of the cohomology of a pure smooth sheaf.

Strata are user-declared with their dimension-function values and the
degree sets where the stalk and costalk complexes are nonzero; the checker
verifies the defining inequalities rather than computing the functors.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import EmptyInputError, GraphFormatError

# delta(x) = 2 - dim of the local ring at x; presets for the three kinds of
# points on a surface.
DELTA_PRESETS = {"generic": 2, "curve": 1, "point": 0}


@dataclass(frozen=True)
class StratumProfile:
    """One stratum: its dimension-function value and the degrees where the
    restriction (stalk) and exceptional restriction (costalk) of the
    complex under test have cohomology."""

    label: str
    delta: int
    stalk_degrees: frozenset[int]
    costalk_degrees: frozenset[int]

    def __post_init__(self):
        if not 0 <= self.delta <= 2:
            raise ValueError(f"surface strata have delta in 0..2, got {self.delta}")
        object.__setattr__(self, "stalk_degrees", frozenset(int(x) for x in self.stalk_degrees))
        object.__setattr__(self, "costalk_degrees", frozenset(int(x) for x in self.costalk_degrees))

    @classmethod
    def of(cls, label: str, delta: int, stalk: Iterable[int], costalk: Iterable[int]) -> "StratumProfile":
        return cls(label, delta, frozenset(stalk), frozenset(costalk))


@dataclass(frozen=True)
class PerversityVerdict:
    left_ok: bool
    right_ok: bool

    @property
    def perverse(self) -> bool:
        return self.left_ok and self.right_ok


def check_perverse(strata: Sequence[StratumProfile]) -> PerversityVerdict:
    """Support condition: every stratum's stalk degrees are <= -delta.
    Cosupport condition: every costalk degree is >= -delta.  Perverse means
    both.  Strata with empty degree sets pass vacuously."""
    if not strata:
        raise EmptyInputError("need at least one stratum")
    left_ok = all(max(s.stalk_degrees) <= -s.delta for s in strata if s.stalk_degrees)
    right_ok = all(min(s.costalk_degrees) >= -s.delta for s in strata if s.costalk_degrees)
    return PerversityVerdict(left_ok=left_ok, right_ok=right_ok)


def weight_of_cohomology(n: int, w: int) -> int:
    """Weight of the degree-n cohomology of a smooth sheaf punctually pure
    of weight w on a complete surface with rational singularities: n + w."""
    return n + w


# ---------------------------------------------------------------------------
# Strata JSON

def strata_from_obj(obj) -> tuple[StratumProfile, ...]:
    if not isinstance(obj, dict):
        raise GraphFormatError("strata input must be a JSON object")
    unknown = set(obj) - {"strata"}
    if unknown:
        raise GraphFormatError(f"strata input: unknown keys {sorted(unknown)}")
    items = obj.get("strata")
    if not isinstance(items, list):
        raise GraphFormatError("strata input: 'strata' must be an array")
    out = []
    for i, sobj in enumerate(items):
        where = f"strata[{i}]"
        if not isinstance(sobj, dict):
            raise GraphFormatError(f"{where}: must be an object")
        unknown = set(sobj) - {"label", "delta", "stalk", "costalk"}
        if unknown:
            raise GraphFormatError(f"{where}: unknown keys {sorted(unknown)}")
        label = sobj.get("label")
        if not isinstance(label, str):
            raise GraphFormatError(f"{where}: 'label' must be a string")
        if "delta" in sobj:
            delta = sobj["delta"]
            if type(delta) is not int:
                raise GraphFormatError(f"{where}: 'delta' must be an integer")
        elif label in DELTA_PRESETS:
            delta = DELTA_PRESETS[label]
        else:
            raise GraphFormatError(
                f"{where}: 'delta' required unless label is one of {sorted(DELTA_PRESETS)}")
        degree_sets = {}
        for key in ("stalk", "costalk"):
            vals = sobj.get(key, [])
            if not isinstance(vals, list) or any(type(x) is not int for x in vals):
                raise GraphFormatError(f"{where}: {key!r} must be an array of integers")
            degree_sets[key] = vals
        try:
            out.append(StratumProfile.of(label, delta, degree_sets["stalk"], degree_sets["costalk"]))
        except ValueError as exc:
            raise GraphFormatError(f"{where}: {exc}") from exc
    return tuple(out)


def parse_strata(text: str) -> tuple[StratumProfile, ...]:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"invalid JSON: {exc}") from exc
    return strata_from_obj(obj)
