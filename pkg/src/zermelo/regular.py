"""Canonical chains and the four regularity conditions on families of subsets.

A family ``P`` of subsets of ``A`` is *regular* for a choice function when

1. it is a chain under inclusion,
2. every nonempty subfamily has an inclusion-least member (equal to its
   intersection),
3. it contains the empty set,
4. every nonempty member ``p`` equals ``p1 | {alpha(p1)}`` where ``p1`` is the
   union of the members strictly below ``p``.

:func:`build_chain` produces the canonical chain ``0, 0+1, 0+1+1, ...``;
:func:`verify_regular` checks an arbitrary family and returns witnesses for
every failed condition.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .choice import ChoiceFunction, alpha, alpha_mask
from .errors import EmptyFamily, GroundMismatch, NotAChain, WitnessMismatch
from .rng import SplitMix64
from .sets import (
    GroundSet,
    Subset,
    SubsetFamily,
    bits,
    family_intersection,
    lower_union_mask,
)

EXHAUSTIVE_LIMIT = 16
SAMPLED_SUBFAMILIES = 1000


def successor(phi: ChoiceFunction, p: Subset) -> Subset:
    """``p`` together with the fresh atom ``alpha(p)``."""
    return p.with_atom(alpha(phi, p))


@dataclass(frozen=True)
class Chain:
    ground: GroundSet
    stages: tuple[Subset, ...]

    def __len__(self) -> int:
        return len(self.stages)

    def __iter__(self):
        return iter(self.stages)

    def __getitem__(self, k):
        return self.stages[k]

    def family(self) -> SubsetFamily:
        return SubsetFamily._canonical(self.ground, self.stages)

    def prefix(self, k: int) -> SubsetFamily:
        """The first ``k`` stages (``k >= 1``) as a family."""
        if not 1 <= k <= len(self.stages):
            raise ValueError(f"prefix length must lie in 1..{len(self.stages)}")
        return SubsetFamily._canonical(self.ground, self.stages[:k])

    def prefixes(self) -> list[SubsetFamily]:
        return [self.prefix(k) for k in range(1, len(self.stages) + 1)]

    def to_json(self) -> list[list[str]]:
        return [s.labels() for s in self.stages]


def build_chain(ground: GroundSet, phi: ChoiceFunction) -> Chain:
    if phi.ground != ground:
        raise GroundMismatch("choice function is over a different ground set")
    full = ground.full_mask
    p = 0
    stages = [Subset(ground, 0)]
    for _ in range(ground.size):
        p |= 1 << alpha_mask(phi, p)
        stages.append(Subset(ground, p))
    if p != full:
        raise WitnessMismatch(f"chain stopped at {Subset(ground, p)} after {ground.size} steps")
    return Chain(ground, tuple(stages))


@dataclass(frozen=True)
class ConditionResult:
    """Outcome of one regularity condition.

    ``passed`` is ``None`` when the condition was skipped because an earlier
    one already failed in fail-fast mode.
    """

    name: str
    passed: Optional[bool]
    witness: tuple = ()
    note: str = ""
    checked: int = 0

    def to_json(self) -> dict:
        out = {"pass": self.passed, "checked": self.checked}
        if self.note:
            out["note"] = self.note
        if self.witness:
            out["witness"] = [str(w) for w in self.witness]
        return out


@dataclass(frozen=True)
class RegularityReport:
    cond1_linear: ConditionResult
    cond2_well: ConditionResult
    cond3_empty: ConditionResult
    cond4_successor: ConditionResult
    cond2_mode: str = "exhaustive"
    sample_seed: Optional[int] = None

    @property
    def conditions(self) -> tuple[ConditionResult, ...]:
        return (self.cond1_linear, self.cond2_well, self.cond3_empty, self.cond4_successor)

    @property
    def overall(self) -> bool:
        return all(c.passed is True for c in self.conditions)

    def __bool__(self) -> bool:
        return self.overall

    def failed(self) -> list[str]:
        return [c.name for c in self.conditions if c.passed is False]

    def summary(self) -> str:
        if self.overall:
            return "regular"
        parts = []
        for c in self.conditions:
            if c.passed is False:
                parts.append(f"{c.name} fails" + (f" at {', '.join(map(str, c.witness))}" if c.witness else ""))
        return "; ".join(parts)

    def to_json(self) -> dict:
        out = {
            "cond1": self.cond1_linear.to_json(),
            "cond2": dict(self.cond2_well.to_json(), mode=self.cond2_mode),
            "cond3": self.cond3_empty.to_json(),
            "cond4": self.cond4_successor.to_json(),
            "overall": self.overall,
        }
        if self.sample_seed is not None:
            out["cond2"]["sample_seed"] = self.sample_seed
        return out


def _check_linear(ground, ms):
    # Canonical order sorts by cardinality, so the family is a chain iff each
    # member is contained in the next; a failing neighbour pair is incomparable.
    for i in range(len(ms) - 1):
        a, b = ms[i], ms[i + 1]
        if a & ~b:
            pair = (Subset(ground, a), Subset(ground, b))
            return ConditionResult("cond1", False, pair, "incomparable pair", i + 1)
    return ConditionResult("cond1", True, checked=max(len(ms) - 1, 0))


def _least_and_meet(gamma):
    # canonical order puts any inclusion-least member first
    first = gamma[0]
    meet = -1
    least = first
    for m in gamma:
        meet &= m
        if first & ~m:
            least = None
    return least, meet


def _subfamilies(k, rng, samples):
    if rng is None:
        yield from range(1, 1 << k)
        return
    for i in range(k):
        yield 1 << i
    for i, j in combinations(range(k), 2):
        yield 1 << i | 1 << j
    for _ in range(samples):
        sel = 0
        while not sel:
            sel = rng.bits(k)
        yield sel


def _check_well(ground, ms, sample_seed, samples, limit):
    k = len(ms)
    rng = None if k <= limit else SplitMix64(sample_seed)
    checked = 0
    for sel in _subfamilies(k, rng, samples):
        gamma = [ms[i] for i in bits(sel)]
        checked += 1
        least, meet = _least_and_meet(gamma)
        if least is None:
            wit = (SubsetFamily.from_masks(ground, gamma),)
            return ConditionResult("cond2", False, wit, "subfamily without a least member", checked)
        if least != meet:
            wit = (SubsetFamily.from_masks(ground, gamma),)
            return ConditionResult("cond2", False, wit, "least member differs from intersection", checked)
    return ConditionResult("cond2", True, checked=checked)


def _check_successor(ground, phi, ms):
    checked = 0
    for p in ms:
        if not p:
            continue
        checked += 1
        p1 = lower_union_mask(ms, p)
        if p1 == p:
            # predecessors already cover p, so no fresh atom can produce it
            wit = (Subset(ground, p), Subset(ground, p1))
            return ConditionResult("cond4", False, wit, "strict predecessors already cover p", checked)
        expected = p1 | 1 << alpha_mask(phi, p1)
        if expected != p:
            wit = (Subset(ground, p), Subset(ground, p1), Subset(ground, expected))
            return ConditionResult("cond4", False, wit, "p != p1 + alpha(p1)", checked)
    return ConditionResult("cond4", True, checked=checked)


_SKIPPED = {n: ConditionResult(n, None) for n in ("cond1", "cond2", "cond3", "cond4")}
_COND3 = {
    True: ConditionResult("cond3", True, checked=1),
    False: ConditionResult("cond3", False, note="empty set missing", checked=1),
}
_NO_EMPTY = {
    sampled: RegularityReport(
        _SKIPPED["cond1"], _SKIPPED["cond2"], _COND3[False], _SKIPPED["cond4"],
        cond2_mode="sampled" if sampled else "exhaustive")
    for sampled in (False, True)
}


def verify_regular(
    family: SubsetFamily,
    phi: ChoiceFunction,
    *,
    fail_fast: bool = False,
    sample_seed: int = 0,
    samples: int = SAMPLED_SUBFAMILIES,
    exhaustive_limit: int = EXHAUSTIVE_LIMIT,
) -> RegularityReport:
    """Check the four regularity conditions and collect witnesses.

    Condition 2 is checked over every nonempty subfamily when the family has at
    most ``exhaustive_limit`` members, otherwise over all singletons, all pairs
    and ``samples`` SplitMix64-drawn subfamilies seeded with ``sample_seed``.

    With ``fail_fast`` the conditions run in the order 3, 1, 4, 2 and the
    remaining ones are skipped after the first failure.
    """
    ground = family.ground
    if phi.ground != ground:
        raise GroundMismatch("family and choice function are over different ground sets")
    ms = family.masks
    sampled = len(ms) > exhaustive_limit
    has_empty = 0 in ms
    if fail_fast and not has_empty:
        return _NO_EMPTY[sampled]
    results = dict(_SKIPPED)
    results["cond3"] = _COND3[has_empty]
    steps = (
        ("cond1", lambda: _check_linear(ground, ms)),
        ("cond4", lambda: _check_successor(ground, phi, ms)),
        ("cond2", lambda: _check_well(ground, ms, sample_seed, samples, exhaustive_limit)),
    )
    if has_empty or not fail_fast:
        for name, step in steps:
            results[name] = step()
            if fail_fast and not results[name].passed:
                break
    return RegularityReport(
        results["cond1"], results["cond2"], results["cond3"], results["cond4"],
        cond2_mode="sampled" if sampled else "exhaustive",
        sample_seed=sample_seed if sampled else None,
    )


def is_regular(family: SubsetFamily, phi: ChoiceFunction) -> bool:
    return verify_regular(family, phi, fail_fast=True).overall


def least_of_chain(gamma: SubsetFamily) -> Subset:
    """The inclusion-least member of a nonempty chain, computed as its intersection."""
    if not len(gamma):
        raise EmptyFamily("an empty family has no least member")
    ms = gamma.masks
    for i in range(len(ms)):
        for j in range(i + 1, len(ms)):
            a, b = ms[i], ms[j]
            if a & ~b and b & ~a:
                pair = (gamma.members[i], gamma.members[j])
                raise NotAChain(f"{pair[0]} and {pair[1]} are incomparable", pair)
    least = family_intersection(gamma)
    if least not in gamma or any(least.mask & ~m for m in ms):
        raise WitnessMismatch(f"intersection {least} is not the least member of {gamma}")
    return least

