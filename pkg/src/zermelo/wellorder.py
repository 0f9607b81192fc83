"""The order on the atoms induced by the fresh-element operator on the chain.

Stage ``k`` of the canonical chain contributes the atom ``alpha(stage_k)``,
so the stages below the top enumerate ``A`` without repetition.  This module
computes that enumeration two independent ways, checks injectivity and
surjectivity of ``alpha`` on the chain, and verifies the least-element
property of the resulting order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .choice import ChoiceFunction, alpha
from .errors import AtomNotCovered, GroundMismatch, GroundTooLarge, WitnessMismatch, ZermeloError
from .regular import build_chain
from .rng import SplitMix64
from .sets import GroundSet, Subset, SubsetFamily, bits, strict_lower_union

EXHAUSTIVE_WELLORDER_LIMIT = 16


@dataclass(frozen=True)
class WellOrder:
    ground: GroundSet
    sequence: tuple[int, ...]
    stages: tuple[Subset, ...] = ()
    position: dict = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if sorted(self.sequence) != list(range(self.ground.size)):
            raise ValueError("sequence must be a permutation of the ground atoms")
        object.__setattr__(self, "position", {a: k for k, a in enumerate(self.sequence)})

    def labels(self) -> list[str]:
        return [self.ground.label(a) for a in self.sequence]

    def to_json(self) -> dict:
        return {"sequence": self.labels(), "stages": [s.labels() for s in self.stages]}


@dataclass(frozen=True)
class StageRecord:
    """Where atom ``a`` first enters a chain ``Q``.

    ``r`` is the least member of ``Q`` containing ``a`` and ``r1`` the union of
    the members strictly below ``r``.
    """

    atom: int
    r: Subset
    r1: Subset
    verified: bool

    def to_json(self) -> dict:
        g = self.r.ground
        return {"atom": g.label(self.atom), "r": str(self.r), "r1": str(self.r1),
                "verified": self.verified}


def stage_of(q: SubsetFamily, phi: ChoiceFunction, a: Union[int, str]) -> StageRecord:
    if phi.ground != q.ground:
        raise GroundMismatch("family and choice function are over different ground sets")
    a = q.ground.atom_index(a)
    containing = [s for s in q if s.mask >> a & 1]
    if not containing:
        raise AtomNotCovered(f"no member of the family contains {q.ground.label(a)}")
    r = containing[0]
    if any(r.mask & ~s.mask for s in containing):
        raise WitnessMismatch(f"members containing {q.ground.label(a)} have no least element")
    r1 = strict_lower_union(q, r)
    if r1.mask >> a & 1:
        raise WitnessMismatch(f"{q.ground.label(a)} already lies below {r}")
    if r1 not in q:
        raise WitnessMismatch(f"strict lower union {r1} of {r} is not a member of the family")
    if len(r) != len(r1) + 1:
        raise WitnessMismatch(f"{r} is not a one-atom extension of {r1}")
    got = alpha(phi, r1)
    if got != a:
        raise WitnessMismatch(
            f"alpha({r1}) = {q.ground.label(got)}, expected {q.ground.label(a)}")
    return StageRecord(a, r, r1, True)


def induced_order(ground: GroundSet, phi: ChoiceFunction) -> WellOrder:
    """Enumerate ``A`` along the canonical chain, cross-checked against stage ranks."""
    chain = build_chain(ground, phi)
    by_chain = tuple(alpha(phi, p) for p in chain.stages[:-1])
    q = chain.family()
    by_rank = [None] * ground.size
    for a in range(ground.size):
        k = len(stage_of(q, phi, a).r1)
        if by_rank[k] is not None:
            raise WitnessMismatch(f"atoms {by_rank[k]} and {a} share rank {k}")
        by_rank[k] = a
    if tuple(by_rank) != by_chain:
        raise WitnessMismatch(f"chain enumeration {by_chain} != stage ranks {by_rank}")
    return WellOrder(ground, by_chain, chain.stages)


@dataclass
class InjectivityReport:
    pairs_checked: int = 0
    failures: list = field(default_factory=list)
    distinct: bool = True

    @property
    def passed(self) -> bool:
        return self.distinct and not self.failures

    def to_json(self) -> dict:
        return {"pass": self.passed, "pairs_checked": self.pairs_checked,
                "distinct": self.distinct, "failures": self.failures}


def check_injective(q: SubsetFamily, phi: ChoiceFunction) -> InjectivityReport:
    """For every pair ``q1 < q2`` below the top: ``alpha(q1)`` is in ``q2`` but ``alpha(q2)`` is not."""
    full = q.ground.full_mask
    lower = [s for s in q if s.mask != full]
    report = InjectivityReport()
    for i, q1 in enumerate(lower):
        a1 = alpha(phi, q1)
        for q2 in lower[i + 1:]:
            report.pairs_checked += 1
            if not (q1.mask & ~q2.mask == 0 and q1.mask != q2.mask):
                report.failures.append({"q1": str(q1), "q2": str(q2), "step": "q1 not below q2"})
                continue
            a2 = alpha(phi, q2)
            if not q2.mask >> a1 & 1:
                report.failures.append({"q1": str(q1), "q2": str(q2), "step": "alpha(q1) not in q2"})
            elif q2.mask >> a2 & 1:
                report.failures.append({"q1": str(q1), "q2": str(q2), "step": "alpha(q2) in q2"})
            elif a1 == a2:
                report.failures.append({"q1": str(q1), "q2": str(q2), "step": "alpha(q1) == alpha(q2)"})
    image = [alpha(phi, s) for s in lower]
    report.distinct = len(set(image)) == len(image)
    return report


@dataclass
class SurjectivityReport:
    records: list = field(default_factory=list)
    failures: list = field(default_factory=list)
    atoms: int = 0

    @property
    def witnessed(self) -> int:
        return len(self.records)

    @property
    def passed(self) -> bool:
        return not self.failures and self.witnessed == self.atoms

    def to_json(self) -> dict:
        return {"pass": self.passed, "witnessed": self.witnessed, "atoms": self.atoms,
                "failures": self.failures}


def check_surjective(q: SubsetFamily, phi: ChoiceFunction) -> SurjectivityReport:
    """Every atom is ``alpha`` of the strict lower union below its first stage."""
    report = SurjectivityReport(atoms=q.ground.size)
    for a in range(q.ground.size):
        try:
            report.records.append(stage_of(q, phi, a))
        except (AtomNotCovered, WitnessMismatch) as exc:
            report.failures.append({"atom": q.ground.label(a), "error": type(exc).__name__,
                                    "detail": str(exc)})
    return report


@dataclass
class WellOrderReport:
    mode: str
    checked: int = 0
    failures: list = field(default_factory=list)
    seed: Optional[int] = None

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        out = {"pass": self.passed, "mode": self.mode, "checked": self.checked,
               "failures": self.failures}
        if self.seed is not None:
            out["seed"] = self.seed
        return out


def _nonempty_subsets(n, mode, rng):
    if mode == "exhaustive":
        yield from range(1, 1 << n)
        return
    full = (1 << n) - 1
    for _ in range(mode[1]):
        m = 0
        while not m:
            m = rng.bits(n) & full
        yield m


def verify_wellorder(order: WellOrder, mode="exhaustive", seed: int = 0) -> WellOrderReport:
    """Check that each nonempty subset has exactly one position-least member.

    ``mode`` is ``"exhaustive"`` (every nonempty subset, at most 16 atoms) or
    ``("sample", n)`` for ``n`` subsets drawn from ``SplitMix64(seed)``.  The
    least member is also compared against the first member met when walking
    the enumeration.
    """
    n = order.ground.size
    if mode == "exhaustive":
        if n > EXHAUSTIVE_WELLORDER_LIMIT:
            raise GroundTooLarge(
                f"exhaustive verification is limited to {EXHAUSTIVE_WELLORDER_LIMIT} atoms, got {n}")
        report, rng = WellOrderReport("exhaustive"), None
    else:
        kind, count = mode
        if kind != "sample" or count < 0:
            raise ValueError(f"bad verification mode {mode!r}")
        report, rng = WellOrderReport(f"sample:{count}", seed=seed), SplitMix64(seed)
        if n == 0:
            return report
    pos = order.position
    seq = order.sequence
    for s in _nonempty_subsets(n, mode, rng):
        report.checked += 1
        members = list(bits(s))
        best = min(pos[a] for a in members)
        least = [a for a in members if pos[a] == best]
        first = next(a for a in seq if s >> a & 1)
        if len(least) != 1 or least[0] != first:
            report.failures.append({
                "subset": str(Subset(order.ground, s)),
                "least": [order.ground.label(a) for a in least],
                "first_enumerated": order.ground.label(first),
            })
    return report


def compare_atoms(order: WellOrder, a, b, check_stages: bool = False) -> str:
    """``"less"``, ``"equal"`` or ``"greater"`` in the induced order.

    With ``check_stages`` the answer is also derived from inclusion between
    the stages at which the two atoms are chosen, and the two must agree.
    """
    a = order.ground.atom_index(a)
    b = order.ground.atom_index(b)
    pa, pb = order.position[a], order.position[b]
    result = "less" if pa < pb else "greater" if pa > pb else "equal"
    if check_stages:
        if not order.stages:
            raise ZermeloError("order carries no stages to compare")
        sa, sb = order.stages[pa], order.stages[pb]
        if sa == sb:
            by_stage = "equal"
        elif sa.issubset(sb):
            by_stage = "less"
        elif sb.issubset(sa):
            by_stage = "greater"
        else:
            by_stage = "incomparable"
        if by_stage != result:
            raise WitnessMismatch(f"positions say {result}, stages say {by_stage}")
    return result
