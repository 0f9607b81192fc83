"""Brute-force ground truth for ground sets of at most four atoms.

Every family of subsets of ``A`` (``2**(2**|A|)`` candidates) is filtered by
:func:`~zermelo.regular.verify_regular`.  The union of the survivors is the
largest regular family, obtained here without ever calling
:func:`~zermelo.regular.build_chain`; comparing the two is the point.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Optional

from .choice import ChoiceFunction, alpha
from .compare import Relation, compare_regular
from .errors import GroundMismatch, GroundTooLarge, NotRegular, TheoremViolation, WitnessMismatch
from .regular import RegularityReport, build_chain, verify_regular
from .sets import GroundSet, Subset, SubsetFamily, bits, canonical_key, family_union

ORACLE_LIMIT = 4
FAIL_FAST_ORDER = ("cond3", "cond1", "cond4", "cond2")


def _family_key(fam: SubsetFamily):
    return (len(fam), tuple(canonical_key(m) for m in fam.masks))


@dataclass
class OracleRun:
    ground: GroundSet
    phi: ChoiceFunction
    regular_families: list[SubsetFamily]
    candidate_count: int
    rejected: Counter = field(default_factory=Counter)
    q_union: Optional[SubsetFamily] = None

    @property
    def rejected_count(self) -> int:
        return sum(self.rejected.values())

    def to_json(self) -> dict:
        return {
            "candidate_count": self.candidate_count,
            "regular_count": len(self.regular_families),
            "rejected_count": self.rejected_count,
            "rejected_by": {c: self.rejected.get(c, 0) for c in FAIL_FAST_ORDER},
            "regular_families": [[str(s) for s in f] for f in self.regular_families],
            "q": [str(s) for s in self.q_union],
        }


def run_oracle(ground: GroundSet, phi: ChoiceFunction) -> OracleRun:
    """Enumerate every candidate family and keep the regular ones.

    Candidates are bitmasks over the powerset listed in canonical subset
    order, so the sweep order is fixed.  Each rejection is tallied under the
    first condition that failed (checked in the order 3, 1, 4, 2).
    """
    if ground.size > ORACLE_LIMIT:
        raise GroundTooLarge(f"the oracle enumerates at most {ORACLE_LIMIT} atoms, got {ground.size}")
    if phi.ground != ground:
        raise GroundMismatch("choice function is over a different ground set")
    powerset = [s.mask for s in ground.all_subsets()]
    count = 1 << len(powerset)
    # decode candidates a byte at a time; byte k covers powerset[8k:8k+8]
    chunks = []
    for start in range(0, len(powerset), 8):
        part = powerset[start:start + 8]
        chunks.append([tuple(part[i] for i in bits(b)) for b in range(1 << len(part))])
    lo = chunks[0]
    hi = chunks[1] if len(chunks) > 1 else [()]
    found = []
    rejected = Counter()
    for cand in range(count):
        masks = lo[cand & 0xFF] + hi[cand >> 8]
        fam = SubsetFamily._canonical_masks(ground, masks)
        report = verify_regular(fam, phi, fail_fast=True)
        if report.overall:
            found.append(fam)
            continue
        failed = report.failed()
        if len(failed) != 1:
            raise WitnessMismatch(f"fail-fast report for {fam} names {failed}")
        cond = failed[0]
        if cond != "cond3" and not _failure(report, cond).witness:
            raise WitnessMismatch(f"{cond} rejected {fam} without a witness")
        rejected[cond] += 1
    found.sort(key=_family_key)
    run = OracleRun(ground, phi, found, count, rejected)
    run.q_union = union_of_all_regular(run)
    return run


def _failure(report: RegularityReport, name: str):
    return {c.name: c for c in report.conditions}[name]


def enumerate_regular_families(ground: GroundSet, phi: ChoiceFunction) -> list[SubsetFamily]:
    return run_oracle(ground, phi).regular_families


def union_of_all_regular(run: OracleRun) -> SubsetFamily:
    members = []
    for fam in run.regular_families:
        members.extend(fam)
    return SubsetFamily(run.ground, members)


@dataclass
class MaximalityReport:
    maximal: bool
    top: Subset
    extension: Optional[SubsetFamily] = None
    extension_report: Optional[RegularityReport] = None

    @property
    def message(self) -> str:
        if self.maximal:
            return "maximal: extension impossible (alpha undefined at the full set)"
        ok = self.extension_report is not None and self.extension_report.overall
        return f"not maximal: {self.extension} is {'regular' if ok else 'NOT regular'}"

    def to_json(self) -> dict:
        out = {"maximal": self.maximal, "top": str(self.top), "message": self.message}
        if self.extension is not None:
            out["extension"] = [str(s) for s in self.extension]
            out["extension_regular"] = self.extension_report.overall
        return out


def maximality_check(q: SubsetFamily, phi: ChoiceFunction) -> MaximalityReport:
    """Try to extend a regular family by the successor of its union."""
    report = verify_regular(q, phi)
    if not report.overall:
        raise NotRegular("input", report)
    top = family_union(q)
    if top.mask == q.ground.full_mask:
        return MaximalityReport(True, top)
    ext = q.add(top.with_atom(alpha(phi, top)))
    return MaximalityReport(False, top, ext, verify_regular(ext, phi))


def check_prefix_theorem(run: OracleRun) -> bool:
    """The regular families are exactly the prefixes of the canonical chain."""
    chain = build_chain(run.ground, run.phi)
    return run.regular_families == sorted(chain.prefixes(), key=_family_key)


@dataclass
class ComparabilitySweep:
    pairs: int
    relations: Counter
    violations: list

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "pairs": self.pairs,
            "relations": {r.value: self.relations.get(r, 0) for r in Relation},
            "violations": len(self.violations),
        }


def comparability_sweep(families: list[SubsetFamily], phi: ChoiceFunction) -> ComparabilitySweep:
    """Compare every ordered pair of families, collecting dichotomy failures."""
    relations = Counter()
    violations = []
    for left in families:
        for right in families:
            try:
                relations[compare_regular(left, right, phi).relation] += 1
            except (TheoremViolation, NotRegular) as exc:
                violations.append(exc)
    return ComparabilitySweep(len(families) ** 2, relations, violations)
