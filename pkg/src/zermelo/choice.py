"""Explicit choice functions and the fresh-element operator built from them.

Three reproducible kinds are supported:

``min``
    the atom with the lowest ground-set index in the subset;
``seeded``
    ``h = splitmix64_finalizer(seed ^ mask)``, then the ``h mod |X|``-th set
    bit of the mask in ascending index order;
``table``
    an explicit finite map from subsets to atoms.

:func:`alpha` evaluates the chosen atom of the complement, which is always an
atom *not* in its argument.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import (
    EmptySubset,
    FullSet,
    GroundMismatch,
    GroundTooLarge,
    MembershipViolation,
    MissingTableEntry,
)
from .rng import MASK64, SplitMix64, splitmix64_finalizer
from .sets import GroundSet, Subset, bits, complement, popcount

KINDS = ("min", "table", "seeded")
EAGER_TABLE_LIMIT = 16


def nth_set_bit(mask: int, n: int) -> int:
    for i, b in enumerate(bits(mask)):
        if i == n:
            return b
    raise IndexError(f"mask {mask:#x} has fewer than {n + 1} set bits")


@dataclass(frozen=True)
class ChoiceFunction:
    """A deterministic map from nonempty subsets to one of their own atoms.

    Build instances with :meth:`min`, :meth:`seeded` or :meth:`from_table`.
    """

    ground: GroundSet
    kind: str
    seed: int | None = None
    table: Mapping[int, int] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown choice kind {self.kind!r}")

    @classmethod
    def min(cls, ground: GroundSet) -> "ChoiceFunction":
        return cls(ground, "min")

    @classmethod
    def seeded(cls, ground: GroundSet, seed: int) -> "ChoiceFunction":
        if not 0 <= seed <= MASK64:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
        return cls(ground, "seeded", seed=seed)

    @classmethod
    def from_table(cls, ground: GroundSet, table: Mapping, validate: bool = True) -> "ChoiceFunction":
        """Build a table choice function.

        Keys may be masks or :class:`Subset` values; values atom indices or
        labels.  With ``validate`` the table is checked eagerly for totality
        and membership when the ground set has at most 16 atoms; otherwise
        gaps surface as errors on first use.
        """
        norm = {}
        for key, pick in table.items():
            if isinstance(key, Subset):
                if key.ground != ground:
                    raise GroundMismatch(f"table key {key} is over another ground set")
                key = key.mask
            norm[int(key)] = ground.atom_index(pick)
        phi = cls(ground, "table", table=norm)
        if validate and ground.size <= EAGER_TABLE_LIMIT:
            report = validate_table(phi)
            if report.missing:
                raise MissingTableEntry(f"table has no entry for {report.missing[0]}"
                                        f" ({len(report.missing)} gaps)")
            if report.violations:
                s, pick = report.violations[0]
                raise MembershipViolation(f"table picks {ground.label(pick)} from {s}")
        return phi

    def __eq__(self, other) -> bool:
        if not isinstance(other, ChoiceFunction):
            return NotImplemented
        return (self.ground, self.kind, self.seed, self.table) == (
            other.ground, other.kind, other.seed, other.table)

    def __hash__(self) -> int:
        return hash((self.ground, self.kind, self.seed))

    def describe(self) -> dict:
        """JSON-ready description, the inverse of :func:`choice_from_json`."""
        if self.kind == "min":
            return {"kind": "min"}
        if self.kind == "seeded":
            return {"kind": "seeded", "seed": self.seed}
        entries = []
        for mask in sorted(self.table, key=lambda m: (popcount(m), m)):
            entries.append({
                "subset": Subset(self.ground, mask).labels(),
                "pick": self.ground.label(self.table[mask]),
            })
        return {"kind": "table", "entries": entries}

    def pick_mask(self, mask: int) -> int:
        """Chosen atom index for a nonempty mask; no ground checks."""
        if mask == 0:
            raise EmptySubset("choice functions are only defined on nonempty subsets")
        if self.kind == "min":
            return (mask & -mask).bit_length() - 1
        if self.kind == "seeded":
            h = splitmix64_finalizer(self.seed ^ mask)
            return nth_set_bit(mask, h % popcount(mask))
        try:
            pick = self.table[mask]
        except KeyError:
            raise MissingTableEntry(
                f"no table entry for {Subset(self.ground, mask)}") from None
        if not mask >> pick & 1:
            raise MembershipViolation(
                f"table picks {self.ground.label(pick)} from {Subset(self.ground, mask)}")
        return pick

    def __call__(self, x: Subset) -> int:
        return choose(self, x)


def choose(phi: ChoiceFunction, x: Subset) -> int:
    """The atom index ``phi`` assigns to the nonempty subset ``x``."""
    if x.ground != phi.ground:
        raise GroundMismatch(f"{x} is not over the choice function's ground set")
    return phi.pick_mask(x.mask)


def alpha(phi: ChoiceFunction, x: Subset) -> int:
    """The atom chosen from the complement of ``x``; never a member of ``x``."""
    if x.ground != phi.ground:
        raise GroundMismatch(f"{x} is not over the choice function's ground set")
    if x.mask == x.ground.full_mask:
        raise FullSet("alpha is undefined at the full ground set")
    return phi.pick_mask(complement(x).mask)


def alpha_mask(phi: ChoiceFunction, mask: int) -> int:
    full = phi.ground.full_mask
    if mask == full:
        raise FullSet("alpha is undefined at the full ground set")
    return phi.pick_mask(full & ~mask)


@dataclass
class TableReport:
    missing: list[Subset]
    violations: list[tuple[Subset, int]]

    @property
    def ok(self) -> bool:
        return not self.missing and not self.violations

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "missing": [str(s) for s in self.missing],
            "violations": [
                {"subset": str(s), "pick": s.ground.label(p)} for s, p in self.violations
            ],
        }


def validate_table(phi: ChoiceFunction) -> TableReport:
    """List every nonempty subset without an entry and every entry outside its subset."""
    if phi.kind != "table":
        raise ValueError("only table choice functions can be validated")
    ground = phi.ground
    if ground.size > EAGER_TABLE_LIMIT:
        raise GroundTooLarge(
            f"eager table validation is limited to {EAGER_TABLE_LIMIT} atoms, got {ground.size}")
    missing = []
    for mask in sorted(range(1, 1 << ground.size), key=lambda m: (popcount(m), m)):
        if mask not in phi.table:
            missing.append(Subset(ground, mask))
    violations = []
    for mask in sorted(phi.table, key=lambda m: (popcount(m), m)):
        pick = phi.table[mask]
        if mask >> ground.size or not mask >> pick & 1:
            violations.append((Subset(ground, mask & ground.full_mask), pick))
    return TableReport(missing, violations)


def random_table(ground: GroundSet, seed: int) -> ChoiceFunction:
    """A valid, complete table with uniformly drawn picks from a SplitMix64 stream."""
    if ground.size > EAGER_TABLE_LIMIT:
        raise GroundTooLarge(f"complete tables are limited to {EAGER_TABLE_LIMIT} atoms")
    rng = SplitMix64(seed)
    table = {}
    for mask in range(1, 1 << ground.size):
        table[mask] = nth_set_bit(mask, rng.below(popcount(mask)))
    return ChoiceFunction.from_table(ground, table)


def conjugate(phi: ChoiceFunction, perm: Iterable[int]) -> ChoiceFunction:
    """Choice function ``X -> perm(phi(perm^-1(X)))`` materialized as a table.

    ``perm[i]`` is the image of atom ``i``.
    """
    perm = list(perm)
    n = phi.ground.size
    if sorted(perm) != list(range(n)):
        raise ValueError("perm must be a permutation of the atom indices")
    if n > EAGER_TABLE_LIMIT:
        raise GroundTooLarge(f"conjugation is materialized only up to {EAGER_TABLE_LIMIT} atoms")
    inv = [0] * n
    for i, j in enumerate(perm):
        inv[j] = i
    table = {}
    for mask in range(1, 1 << n):
        pre = 0
        for b in bits(mask):
            pre |= 1 << inv[b]
        table[mask] = perm[phi.pick_mask(pre)]
    return ChoiceFunction.from_table(phi.ground, table, validate=False)


def choice_from_json(ground: GroundSet, spec: Mapping) -> ChoiceFunction:
    """Decode the JSON choice description (``min``, ``seeded`` or ``table``)."""
    kind = spec.get("kind")
    if kind == "min":
        return ChoiceFunction.min(ground)
    if kind == "seeded":
        return ChoiceFunction.seeded(ground, spec["seed"])
    if kind == "table":
        table = {}
        for entry in spec["entries"]:
            key = ground.subset(entry["subset"]).mask
            table[key] = ground.index(entry["pick"])
        return ChoiceFunction.from_table(ground, table)
    raise ValueError(f"unknown choice kind {kind!r}")
