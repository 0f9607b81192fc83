"""Agreement core of two families and the initial-segment trichotomy."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .choice import ChoiceFunction
from .errors import GroundMismatch, NotRegular, TheoremViolation
from .regular import least_of_chain, verify_regular
from .sets import SubsetFamily


class Relation(str, Enum):
    EQUAL = "Equal"
    LEFT_INITIAL = "LeftIsInitialSegmentOfRight"
    RIGHT_INITIAL = "RightIsInitialSegmentOfLeft"


@dataclass(frozen=True)
class ComparabilityVerdict:
    relation: Relation
    core: SubsetFamily

    def to_json(self) -> dict:
        return {"relation": self.relation.value, "core": [str(s) for s in self.core]}


def _lower_masks(ms, p):
    return frozenset(q for q in ms if q & ~p == 0 and q != p)


def agreement_core(left: SubsetFamily, right: SubsetFamily) -> SubsetFamily:
    """Common members whose strict lower sets agree in both families."""
    if left.ground != right.ground:
        raise GroundMismatch("families live over different ground sets")
    lm, rm = left.masks, right.masks
    common = set(rm)
    keep = [s for s in left.members
            if s.mask in common and _lower_masks(lm, s.mask) == _lower_masks(rm, s.mask)]
    return SubsetFamily._canonical(left.ground, keep)


def is_initial_segment(short: SubsetFamily, long: SubsetFamily) -> bool:
    """``short`` is contained in ``long`` and nothing new sits below any of its members."""
    if not short.issubset(long):
        return False
    extra = set(long.masks) - set(short.masks)
    return not any(e & ~p == 0 for e in extra for p in short.masks)


def compare_regular(left: SubsetFamily, right: SubsetFamily, phi: ChoiceFunction) -> ComparabilityVerdict:
    """Classify two regular families as equal or one an initial segment of the other.

    Raises :class:`NotRegular` when an input fails :func:`verify_regular`.  A
    :class:`TheoremViolation` means the dichotomy itself broke, which would
    point at a bug; it carries the least members of both differences.
    """
    for side, fam in (("left", left), ("right", right)):
        report = verify_regular(fam, phi)
        if not report.overall:
            raise NotRegular(side, report)
    core = agreement_core(left, right)
    is_left, is_right = core == left, core == right
    if is_left and is_right:
        return ComparabilityVerdict(Relation.EQUAL, core)
    if is_left and is_initial_segment(left, right):
        return ComparabilityVerdict(Relation.LEFT_INITIAL, core)
    if is_right and is_initial_segment(right, left):
        return ComparabilityVerdict(Relation.RIGHT_INITIAL, core)
    r1 = least_of_chain(left - core) if len(left - core) else None
    r2 = least_of_chain(right - core) if len(right - core) else None
    raise TheoremViolation(left, right, core, r1, r2)
